#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <optional>
#include <vector>

#include "saf/framework.hpp"
#include "saf/semantics.hpp"

namespace saf {

/// Forgetful projection: (A, Att^Γ) with (a, b) in Att^Γ iff a directly
/// attacks some member of Sub*(b). Only the target side is lifted.
DungAF forget(const Saf& saf);

/// Standard Dung semantics. Grounded is the least fixpoint of the
/// characteristic function; the rest enumerate conflict-free sets.
ExtensionSet dung_extensions(const DungAF& af, Semantics s, std::size_t bound = kDefaultEnumerationBound);

/// Arguments reachable from x along attack paths of length >= 0.
ArgSet reach_attack(const DungAF& af, ArgIndex x);

struct PreservationReport {
    Semantics semantics = Semantics::complete;
    ExtensionSet saf_extensions;
    ExtensionSet dung_extensions;
    bool equal = false;
    /// A set present on exactly one side, when `equal` is false.
    std::optional<ArgSet> counterexample;
};

/// Compares σ(F) with σ(Γ(F)).
PreservationReport check_preservation(const Saf& saf, Semantics s, std::size_t bound = kDefaultEnumerationBound);

/// Two distinct SAFs over the same arguments with the same projection.
class CollisionWitness {
public:
    /// Throws std::logic_error unless f1 != f2 and Γ(f1) == Γ(f2).
    CollisionWitness(Saf f1, Saf f2);

    const Saf& first() const noexcept { return f1_; }
    const Saf& second() const noexcept { return f2_; }
    const DungAF& projected() const noexcept { return projected_; }

private:
    Saf f1_;
    Saf f2_;
    DungAF projected_;
};

/// Names a1..an used by the canonical enumerations.
std::vector<std::string> canonical_names(std::size_t n);

/// Visits every valid SAF over a1..an in canonical order: attack bitmask
/// first, subargument bitmask second. Attack bit i*n+j encodes the pair
/// (a(i+1), a(j+1)); subargument masks use the same layout without the
/// diagonal. Stops early when `visit` returns false. n is limited to 4.
void for_each_canonical_framework(std::size_t n, const std::function<bool(const Saf&)>& visit);

/// Searches argument universes of size 1..max_args for two frameworks with
/// different direct attacks and the same projection. Returns the pair whose
/// later member comes first in canonical order, paired with the earliest
/// matching predecessor.
std::optional<CollisionWitness> find_collision(std::size_t max_args);

struct ReachDivergence {
    ArgIndex argument = 0;
    ArgSet structural;
    ArgSet attack;
};

/// Every x whose structural reach in F differs from its attack reach in Γ(F).
std::vector<ReachDivergence> reach_divergence(const Saf& saf);

/// First framework in canonical order (sizes 1..max_args) with a nonempty
/// reach divergence.
std::optional<Saf> find_reach_witness(std::size_t max_args);

}  // namespace saf
