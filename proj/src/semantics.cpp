#include "saf/semantics.hpp"

#include <algorithm>

#include "saf/detail/enumerate.hpp"

namespace saf {

std::string_view to_string(Semantics s) noexcept {
    switch (s) {
        case Semantics::admissible: return "admissible";
        case Semantics::complete: return "complete";
        case Semantics::grounded: return "grounded";
        case Semantics::preferred: return "preferred";
        case Semantics::stable: return "stable";
    }
    return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) noexcept {
    for (Semantics s : kAllSemantics)
        if (to_string(s) == text) return s;
    if (text == "adm") return Semantics::admissible;
    if (text == "cmp" || text == "com") return Semantics::complete;
    if (text == "grd") return Semantics::grounded;
    if (text == "prf") return Semantics::preferred;
    if (text == "stb") return Semantics::stable;
    return std::nullopt;
}

bool ExtensionSet::contains(const ArgSet& e) const {
    return std::binary_search(extensions.begin(), extensions.end(), e);
}

SemanticsIndex::SemanticsIndex(const Saf& saf) : saf_(&saf) {
    const std::size_t n = saf.size();
    threats_.assign(n, ArgSet(n));
    counters_.assign(n, ArgSet(n));
    conflict_out_.assign(n, ArgSet(n));
    clash_.assign(n, ArgSet(n));

    for (ArgIndex a = 0; a < n; ++a) {
        ArgSet hit(n);
        saf.sub_closure(a).for_each([&](ArgIndex x) {
            threats_[a] |= saf.direct_attackers(x);
            hit |= saf.direct_targets(x);
        });
        hit.for_each([&](ArgIndex y) { conflict_out_[a] |= saf.reach_structural(y); });
    }
    for (ArgIndex b = 0; b < n; ++b)
        saf.sub_closure(b).for_each([&](ArgIndex y) { counters_[b] |= saf.direct_attackers(y); });
    for (ArgIndex a = 0; a < n; ++a) {
        clash_[a] |= conflict_out_[a];
        conflict_out_[a].for_each([&](ArgIndex b) { clash_[b].insert(a); });
    }
}

bool SemanticsIndex::conflict_free(const ArgSet& e) const {
    bool ok = true;
    e.for_each([&](ArgIndex a) { ok = ok && !conflict_out_[a].intersects(e); });
    return ok;
}

bool SemanticsIndex::defends(const ArgSet& e, ArgIndex a) const {
    bool ok = true;
    threats_.at(a).for_each([&](ArgIndex b) { ok = ok && counters_[b].intersects(e); });
    return ok;
}

ArgSet SemanticsIndex::characteristic(const ArgSet& e) const {
    const std::size_t n = saf_->size();
    ArgSet out(n);
    for (ArgIndex a = 0; a < n; ++a)
        if (defends(e, a)) out.insert(a);
    return out;
}

bool SemanticsIndex::covers_outside(const ArgSet& e) const {
    ArgSet hit(saf_->size());
    e.for_each([&](ArgIndex a) { hit |= conflict_out_[a]; });
    return e.complement().is_subset_of(hit);
}

ExtensionSet SemanticsIndex::grounded() const {
    ArgSet current(saf_->size());
    for (;;) {
        ArgSet next = characteristic(current);
        if (next == current) break;
        current = std::move(next);
    }
    return ExtensionSet{Semantics::grounded, {current}, saf_->digest()};
}

ExtensionSet SemanticsIndex::extensions(Semantics s, std::size_t bound) const {
    if (s == Semantics::grounded) return grounded();
    const std::size_t n = saf_->size();
    if (n > bound) throw InstanceTooLarge(n, bound);

    std::vector<ArgSet> found;
    detail::for_each_conflict_free(n, clash_, [&](const ArgSet& e) {
        switch (s) {
            case Semantics::admissible:
                if (e.is_subset_of(characteristic(e))) found.push_back(e);
                break;
            case Semantics::complete:
            case Semantics::preferred:
                if (characteristic(e) == e) found.push_back(e);
                break;
            case Semantics::stable:
                if (covers_outside(e)) found.push_back(e);
                break;
            case Semantics::grounded: break;
        }
    });
    if (s == Semantics::preferred) found = detail::maximal_sets(found);
    canonicalize(found);
    return ExtensionSet{s, std::move(found), saf_->digest()};
}

bool in_conflict(const Saf& saf, ArgIndex a, ArgIndex b) {
    return SemanticsIndex(saf).in_conflict(a, b);
}

bool conflict_free(const Saf& saf, const ArgSet& e) { return SemanticsIndex(saf).conflict_free(e); }

bool defends(const Saf& saf, const ArgSet& e, ArgIndex a) { return SemanticsIndex(saf).defends(e, a); }

ArgSet characteristic(const Saf& saf, const ArgSet& e) { return SemanticsIndex(saf).characteristic(e); }

ExtensionSet grounded(const Saf& saf) { return SemanticsIndex(saf).grounded(); }

ExtensionSet extensions(const Saf& saf, Semantics s, std::size_t bound) {
    return SemanticsIndex(saf).extensions(s, bound);
}

}  // namespace saf
