#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "saf/arg_set.hpp"
#include "saf/framework.hpp"

namespace saf {

enum class Semantics { admissible, complete, grounded, preferred, stable };

inline constexpr std::array<Semantics, 5> kAllSemantics = {
    Semantics::admissible, Semantics::complete, Semantics::grounded, Semantics::preferred, Semantics::stable};

std::string_view to_string(Semantics s) noexcept;
std::optional<Semantics> parse_semantics(std::string_view text) noexcept;

/// Largest framework the enumeration-based semantics accept by default.
inline constexpr std::size_t kDefaultEnumerationBound = 20;

/// Extensions of one framework under one semantics, in canonical order.
struct ExtensionSet {
    Semantics semantics = Semantics::complete;
    std::vector<ArgSet> extensions;
    std::string framework_digest;

    bool contains(const ArgSet& e) const;
    /// Same semantics and the same family of sets (digest ignored).
    bool same_family(const ExtensionSet& other) const { return extensions == other.extensions; }
};

/// Structure-aware acceptability tables for one SAF.
///
/// Precomputes, per argument, who threatens its subargument closure and who
/// can counter a given attacker, so that defence and conflict checks reduce
/// to set intersections.
class SemanticsIndex {
public:
    explicit SemanticsIndex(const Saf& saf);

    const Saf& framework() const noexcept { return *saf_; }

    /// Exists x in Sub*(a), y in Sub*(b) with (x, y) in Att.
    bool in_conflict(ArgIndex a, ArgIndex b) const { return conflict_out_.at(a).contains(b); }
    bool conflict_free(const ArgSet& e) const;
    bool defends(const ArgSet& e, ArgIndex a) const;
    ArgSet characteristic(const ArgSet& e) const;
    /// Every argument outside `e` is in conflict with some member of `e`
    /// through an attack from that member's closure.
    bool covers_outside(const ArgSet& e) const;

    ExtensionSet grounded() const;
    ExtensionSet extensions(Semantics s, std::size_t bound = kDefaultEnumerationBound) const;

private:
    const Saf* saf_;
    std::vector<ArgSet> threats_;       // b attacks some member of Sub*(a)
    std::vector<ArgSet> counters_;      // c attacks some member of Sub*(b)
    std::vector<ArgSet> conflict_out_;  // in_conflict(a, .)
    std::vector<ArgSet> clash_;         // in_conflict in either direction
};

bool in_conflict(const Saf& saf, ArgIndex a, ArgIndex b);
bool conflict_free(const Saf& saf, const ArgSet& e);
bool defends(const Saf& saf, const ArgSet& e, ArgIndex a);
/// Def_F(E): the arguments defended by E. Always closed under subarguments.
ArgSet characteristic(const Saf& saf, const ArgSet& e);
/// Least fixpoint of the characteristic function, by Kleene iteration from {}.
ExtensionSet grounded(const Saf& saf);
/// Throws InstanceTooLarge when |A| exceeds `bound` for enumerated semantics.
ExtensionSet extensions(const Saf& saf, Semantics s, std::size_t bound = kDefaultEnumerationBound);

}  // namespace saf
