#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "saf/framework.hpp"
#include "saf/semantics.hpp"

namespace saf {

/// Split of A into conflict-handling arguments (endpoints of some direct
/// attack) and status-dependent ones, plus the Dung core induced on the
/// former by the projected attacks.
struct CoreDecomposition {
    ArgSet ch;
    ArgSet sd;
    DungAF core;
    /// core_members[i] is the full-framework index of core argument i.
    std::vector<ArgIndex> core_members;

    ArgSet to_full(const ArgSet& core_set) const;
    ArgSet to_core(const ArgSet& full_set) const;
};

CoreDecomposition decompose(const Saf& saf);

/// Status-lift {a in A | Sub*(a) ∩ A_CH ⊆ E}. Throws NotACoreSubset unless
/// E ⊆ A_CH.
ArgSet lift(const Saf& saf, const CoreDecomposition& dec, const ArgSet& e);
ArgSet lift(const Saf& saf, const ArgSet& e);

/// {lift(E) | E in σ(core)}.
ExtensionSet core_extensions(const Saf& saf, Semantics s, std::size_t bound = kDefaultEnumerationBound);

struct CoreAgreement {
    Semantics semantics = Semantics::complete;
    bool equal = false;
    std::optional<ArgSet> counterexample;
};

/// Compares σ(F) with σ_core(F) for any semantics, without asserting it.
CoreAgreement compare_with_core(const Saf& saf, Semantics s, std::size_t bound = kDefaultEnumerationBound);

struct CoreFirstReport {
    bool complete_equal = false;
    bool grounded_equal = false;
    std::optional<ArgSet> complete_counterexample;
    ArgSet grounded_direct;
    ArgSet grounded_lifted;

    bool passed() const noexcept { return complete_equal && grounded_equal; }
};

/// cmp(F) = {lift(E) | E in cmp(core)} and grd(F) = lift(grd(core)).
CoreFirstReport check_core_first(const Saf& saf, std::size_t bound = kDefaultEnumerationBound);

}  // namespace saf
