#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "saf/arg_set.hpp"
#include "saf/error.hpp"

namespace saf {

using NamePair = std::pair<std::string, std::string>;

/// True iff `name` is a nonempty token over [A-Za-z0-9_].
bool is_valid_name(std::string_view name) noexcept;

/// Interned, lexicographically ordered argument names.
class ArgumentTable {
public:
    ArgumentTable() = default;
    /// Deduplicates and sorts; throws InvalidName.
    explicit ArgumentTable(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(ArgIndex i) const { return names_.at(i); }

    std::optional<ArgIndex> find(std::string_view name) const noexcept;
    /// Throws UnknownArgument.
    ArgIndex index(std::string_view name) const;

    ArgSet make_set(std::span<const std::string> names) const;
    std::vector<std::string> names_of(const ArgSet& set) const;

    friend bool operator==(const ArgumentTable&, const ArgumentTable&) = default;

private:
    std::vector<std::string> names_;
};

/// Attack-only framework (A, Att).
class DungAF {
public:
    DungAF() = default;

    /// Throws InvalidName or UnknownArgument. Duplicates are merged.
    static DungAF make(std::vector<std::string> arguments, std::span<const NamePair> attacks);
    /// Builds from already-indexed attacks over `table`.
    static DungAF from_edges(ArgumentTable table, std::vector<Edge> attacks);

    std::size_t size() const noexcept { return table_.size(); }
    const ArgumentTable& table() const noexcept { return table_; }
    const std::vector<std::string>& names() const noexcept { return table_.names(); }
    const std::string& name(ArgIndex i) const { return table_.name(i); }
    ArgIndex index(std::string_view name) const { return table_.index(name); }

    /// Sorted, duplicate-free.
    const std::vector<Edge>& attacks() const noexcept { return attacks_; }
    bool has_attack(ArgIndex from, ArgIndex to) const { return attacked_by_[from].contains(to); }
    const ArgSet& attackers_of(ArgIndex a) const { return attackers_.at(a); }
    const ArgSet& attacked_by(ArgIndex a) const { return attacked_by_.at(a); }

    /// Hex FNV-1a digest of the canonical text form.
    std::string digest() const;

    friend bool operator==(const DungAF& a, const DungAF& b) {
        return a.table_ == b.table_ && a.attacks_ == b.attacks_;
    }

private:
    ArgumentTable table_;
    std::vector<Edge> attacks_;
    std::vector<ArgSet> attackers_;
    std::vector<ArgSet> attacked_by_;
};

/// Cached reflexive-transitive subargument closure and its dual.
struct ClosureTable {
    std::vector<ArgSet> sub;    ///< sub[a] = Sub*(a)
    std::vector<ArgSet> super;  ///< super[x] = {y | x in Sub*(y)}
};

/// Validated subargument framework (A, Att, Sub). Immutable once built.
///
/// Invariants: every pair references a declared argument; Sub is acyclic
/// and irreflexive; no attack (a, b) coexists with an attack (a, b') for a
/// proper b' in Sub*(b).
class Saf {
public:
    Saf() = default;

    /// Throws InvalidName, UnknownArgument, SubCycle or NonMinimalAttack.
    /// Repeated declarations and pairs are merged silently.
    static Saf validate(std::vector<std::string> arguments, std::span<const NamePair> attacks,
                        std::span<const NamePair> subargs);

    std::size_t size() const noexcept { return table_.size(); }
    const ArgumentTable& table() const noexcept { return table_; }
    const std::vector<std::string>& names() const noexcept { return table_.names(); }
    const std::string& name(ArgIndex i) const { return table_.name(i); }
    ArgIndex index(std::string_view name) const { return table_.index(name); }
    ArgSet make_set(std::span<const std::string> names) const { return table_.make_set(names); }
    std::vector<std::string> names_of(const ArgSet& s) const { return table_.names_of(s); }

    const std::vector<Edge>& attacks() const noexcept { return attacks_; }
    const std::vector<Edge>& subargs() const noexcept { return subargs_; }
    bool has_attack(ArgIndex from, ArgIndex to) const { return targets_[from].contains(to); }

    /// Sub*(a): a plus all direct and indirect subarguments.
    const ArgSet& sub_closure(ArgIndex a) const { return closure_.sub.at(a); }
    /// Reach_F(x): every y with x in Sub*(y), x included.
    const ArgSet& reach_structural(ArgIndex x) const { return closure_.super.at(x); }
    /// {b | (b, a) in Att}
    const ArgSet& direct_attackers(ArgIndex a) const { return attackers_.at(a); }
    /// {b | (a, b) in Att}
    const ArgSet& direct_targets(ArgIndex a) const { return targets_.at(a); }

    const ClosureTable& closures() const noexcept { return closure_; }

    /// True iff `set` contains Sub*(x) for each of its members.
    bool is_sub_closed(const ArgSet& set) const;

    std::string digest() const;

    friend bool operator==(const Saf& a, const Saf& b) {
        return a.table_ == b.table_ && a.attacks_ == b.attacks_ && a.subargs_ == b.subargs_;
    }

private:
    ArgumentTable table_;
    std::vector<Edge> attacks_;
    std::vector<Edge> subargs_;
    std::vector<ArgSet> attackers_;
    std::vector<ArgSet> targets_;
    ClosureTable closure_;
};

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace saf
