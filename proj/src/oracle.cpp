#include "saf/oracle.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace saf::oracle {

namespace {

using Mask = std::uint32_t;

bool has(Mask m, std::size_t i) { return (m >> i & 1u) != 0; }

struct Relations {
    std::size_t n = 0;
    std::vector<Edge> att;
    std::vector<Mask> closure;  // closure[a]: bit x set iff x in Sub*(a)
};

Relations read(std::size_t n, const std::vector<Edge>& att, const std::vector<Edge>& sub) {
    Relations r{n, att, std::vector<Mask>(n)};
    for (std::size_t a = 0; a < n; ++a) r.closure[a] = Mask{1} << a;
    for (bool changed = true; changed;) {
        changed = false;
        for (auto [x, y] : sub) {
            const Mask next = r.closure[y] | r.closure[x];
            if (next != r.closure[y]) {
                r.closure[y] = next;
                changed = true;
            }
        }
    }
    return r;
}

bool in_conflict(const Relations& r, std::size_t a, std::size_t b) {
    for (auto [x, y] : r.att)
        if (has(r.closure[a], x) && has(r.closure[b], y)) return true;
    return false;
}

bool conflict_free(const Relations& r, Mask e) {
    for (std::size_t a = 0; a < r.n; ++a)
        for (std::size_t b = 0; b < r.n; ++b)
            if (has(e, a) && has(e, b) && in_conflict(r, a, b)) return false;
    return true;
}

// For every x in Sub*(a) and every (b, x) in Att there are c in E and
// b' in Sub*(b) with (c, b') in Att.
bool defended(const Relations& r, Mask e, std::size_t a) {
    for (std::size_t x = 0; x < r.n; ++x) {
        if (!has(r.closure[a], x)) continue;
        for (auto [b, target] : r.att) {
            if (target != x) continue;
            bool countered = false;
            for (auto [c, hit] : r.att)
                if (has(e, c) && has(r.closure[b], hit)) countered = true;
            if (!countered) return false;
        }
    }
    return true;
}

bool admissible(const Relations& r, Mask e) {
    if (!conflict_free(r, e)) return false;
    for (std::size_t a = 0; a < r.n; ++a)
        if (has(e, a) && !defended(r, e, a)) return false;
    return true;
}

bool complete(const Relations& r, Mask e) {
    if (!admissible(r, e)) return false;
    for (std::size_t a = 0; a < r.n; ++a)
        if (defended(r, e, a) && !has(e, a)) return false;
    return true;
}

bool stable(const Relations& r, Mask e) {
    if (!conflict_free(r, e)) return false;
    for (std::size_t a = 0; a < r.n; ++a) {
        if (has(e, a)) continue;
        bool hit = false;
        for (std::size_t m = 0; m < r.n; ++m)
            if (has(e, m) && in_conflict(r, m, a)) hit = true;
        if (!hit) return false;
    }
    return true;
}

std::vector<Mask> sweep(const Relations& r, Semantics s) {
    const Mask limit = Mask{1} << r.n;
    std::vector<Mask> complete_sets;
    std::vector<Mask> out;
    for (Mask e = 0; e < limit; ++e) {
        switch (s) {
            case Semantics::admissible:
                if (admissible(r, e)) out.push_back(e);
                break;
            case Semantics::stable:
                if (stable(r, e)) out.push_back(e);
                break;
            case Semantics::complete:
            case Semantics::preferred:
            case Semantics::grounded:
                if (complete(r, e)) complete_sets.push_back(e);
                break;
        }
    }
    if (s == Semantics::complete) return complete_sets;
    if (s == Semantics::preferred) {
        for (Mask e : complete_sets) {
            bool maximal = true;
            for (Mask f : complete_sets)
                if (f != e && (e & f) == e) maximal = false;
            if (maximal) out.push_back(e);
        }
    }
    if (s == Semantics::grounded) {
        for (Mask e : complete_sets) {
            bool least = true;
            for (Mask f : complete_sets)
                if ((e & f) != e) least = false;
            if (least) out.push_back(e);
        }
        if (out.size() != 1) throw std::logic_error("oracle: no least complete extension");
    }
    return out;
}

ExtensionSet to_extension_set(std::size_t n, Semantics s, const std::vector<Mask>& masks, std::string digest) {
    ExtensionSet out{s, {}, std::move(digest)};
    for (Mask m : masks) out.extensions.push_back(ArgSet::from_mask(n, m));
    canonicalize(out.extensions);
    return out;
}

}  // namespace

ExtensionSet oracle_extensions(const Saf& saf, Semantics s) {
    if (saf.size() > kOracleCap) throw InstanceTooLarge(saf.size(), kOracleCap);
    const Relations r = read(saf.size(), saf.attacks(), saf.subargs());
    return to_extension_set(saf.size(), s, sweep(r, s), saf.digest());
}

ExtensionSet oracle_dung(const DungAF& af, Semantics s) {
    if (af.size() > kOracleCap) throw InstanceTooLarge(af.size(), kOracleCap);
    // No subarguments: closures are singletons, which reduces every check to
    // the plain Dung definition.
    const Relations r = read(af.size(), af.attacks(), {});
    return to_extension_set(af.size(), s, sweep(r, s), af.digest());
}

}  // namespace saf::oracle
