#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "saf/framework.hpp"
#include "saf/semantics.hpp"

namespace saf {

/// Witness that `target` is warranted within `extension`.
struct Justification {
    ArgIndex target = 0;
    ArgSet extension;
    ArgSet witness;
    bool minimal = false;
};

/// Local justification check: J ⊆ E, J closed under subarguments (J1),
/// Sub*(a) ⊆ J (J2), and every attack on Sub*(a) is countered from J, either
/// directly or on a member of the attacker's closure (J3).
bool is_justification(const Saf& saf, const ArgSet& e, ArgIndex a, const ArgSet& j);

/// All subset-minimal local justifications of a in E, in canonical order.
/// Empty when none exists (E not closed under subarguments around a).
/// Throws InstanceTooLarge when the free part of E exceeds `bound`.
std::vector<ArgSet> minimal_justifications(const Saf& saf, const ArgSet& e, ArgIndex a,
                                           std::size_t bound = kDefaultEnumerationBound);

/// Canonical minimal justification: fewest members, then lexicographic.
/// Throws NotAnExtension, NotAMember or NoJustification.
Justification explain(const Saf& saf, Semantics s, const ArgSet& e, ArgIndex a,
                      std::size_t bound = kDefaultEnumerationBound);

/// Two frameworks with identical attacks and projections but different
/// subargument closures for an argument accepted in a shared extension.
struct ExplanationLossWitness {
    Saf first;
    Saf second;
    Semantics semantics = Semantics::complete;
    ArgSet extension;
    ArgIndex argument = 0;
    Justification first_explanation;
    Justification second_explanation;
};

/// Bounded canonical search (up to three arguments), re-verified before
/// return. Throws std::logic_error if verification fails.
ExplanationLossWitness explanation_loss_witness();

struct PrincipleVerdict {
    std::string name;
    bool pass = true;
    std::size_t checked = 0;
    std::optional<std::string> counterexample;
    std::string note;
};

struct PrincipleReport {
    std::vector<PrincipleVerdict> verdicts;
    bool all_pass() const noexcept;
};

/// Checks the five structure-awareness principles over a corpus.
PrincipleReport principle_report(const std::vector<Saf>& corpus, std::size_t bound = kDefaultEnumerationBound);

}  // namespace saf
