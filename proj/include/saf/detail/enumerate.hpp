#pragma once

#include <cstddef>
#include <vector>

#include "saf/arg_set.hpp"

namespace saf::detail {

/// Visits every conflict-free subset of {0..n-1} exactly once.
///
/// `clash[i]` holds every j that may not coexist with i (both directions);
/// i is self-conflicting iff clash[i] contains i. Pruning happens on
/// insertion, so only conflict-free sets are ever built.
template <class Visitor>
void for_each_conflict_free(std::size_t n, const std::vector<ArgSet>& clash, Visitor&& visit) {
    struct Rec {
        std::size_t n;
        const std::vector<ArgSet>& clash;
        Visitor& visit;

        void go(ArgIndex next, ArgSet& current, const ArgSet& forbidden) {
            if (next == n) {
                visit(static_cast<const ArgSet&>(current));
                return;
            }
            go(next + 1, current, forbidden);
            if (!forbidden.contains(next) && !clash[next].contains(next)) {
                current.insert(next);
                go(next + 1, current, forbidden | clash[next]);
                current.erase(next);
            }
        }
    };
    ArgSet current(n);
    ArgSet forbidden(n);
    Rec{n, clash, visit}.go(0, current, forbidden);
}

/// Keeps the subset-maximal members of `family`.
inline std::vector<ArgSet> maximal_sets(const std::vector<ArgSet>& family) {
    std::vector<ArgSet> out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < family.size() && !dominated; ++j)
            dominated = i != j && family[i].is_subset_of(family[j]) && !(family[i] == family[j]);
        if (!dominated) out.push_back(family[i]);
    }
    canonicalize(out);
    return out;
}

}  // namespace saf::detail
