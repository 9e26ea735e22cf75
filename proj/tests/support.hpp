#pragma once

#include <string>
#include <vector>

#include "saf/framework.hpp"
#include "saf/generate.hpp"
#include "saf/io.hpp"
#include "saf/semantics.hpp"

namespace saf::test {

inline std::string fixture_path(const std::string& name) { return std::string(SAF_FIXTURE_DIR) + "/" + name; }

inline Saf fixture(const std::string& name) { return io::load_saf(fixture_path(name)); }

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"motivating.saf",  "core_example.saf",  "empty.saf",
                                                   "two_cycle.saf",   "diamond.saf",       "self_attack.saf",
                                                   "odd_cycle.saf",   "collision_f1.saf",  "collision_f2.saf"};
    return names;
}

inline std::vector<Saf> all_fixtures() {
    std::vector<Saf> out;
    for (const auto& n : fixture_names()) out.push_back(fixture(n));
    return out;
}

/// SAF ({a,b,c}, {(a,b)}, {(b,c)}).
inline Saf abc() {
    std::vector<NamePair> att{{"a", "b"}}, sub{{"b", "c"}};
    return Saf::validate({"a", "b", "c"}, att, sub);
}

inline ArgSet set_of(const Saf& f, std::vector<std::string> names) { return f.make_set(names); }
inline ArgSet set_of(const DungAF& f, std::vector<std::string> names) { return f.table().make_set(names); }

using Family = std::vector<std::vector<std::string>>;

inline Family family(const ArgumentTable& t, const ExtensionSet& ext) {
    Family out;
    for (const auto& e : ext.extensions) out.push_back(t.names_of(e));
    return out;
}
inline Family family(const Saf& f, const ExtensionSet& ext) { return family(f.table(), ext); }
inline Family family(const DungAF& f, const ExtensionSet& ext) { return family(f.table(), ext); }

inline std::vector<std::string> names(const Saf& f, const ArgSet& s) { return f.names_of(s); }

}  // namespace saf::test
