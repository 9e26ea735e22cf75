#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace saf {

/// Position of an argument in its framework. Frameworks number their
/// arguments in lexicographic name order, so index order is name order.
using ArgIndex = std::uint32_t;

/// Ordered pair of argument indices (attack or subargument edge).
using Edge = std::pair<ArgIndex, ArgIndex>;

/// Set of arguments over a fixed universe {0, ..., universe-1}.
class ArgSet {
public:
    ArgSet() = default;
    explicit ArgSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    ArgSet(std::size_t universe, std::initializer_list<ArgIndex> members) : ArgSet(universe) {
        for (ArgIndex m : members) insert(m);
    }

    static ArgSet full(std::size_t universe) {
        ArgSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<ArgIndex>(i));
        return s;
    }

    /// Builds a set from the low bits of `mask` (bit i set means i is a member).
    static ArgSet from_mask(std::size_t universe, std::uint64_t mask) {
        ArgSet s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(ArgIndex i) const noexcept {
        return i < universe_ && (words_[i >> 6] >> (i & 63) & 1u) != 0;
    }
    void insert(ArgIndex i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void erase(ArgIndex i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    bool is_subset_of(const ArgSet& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((words_[k] & ~other.word(k)) != 0) return false;
        return true;
    }
    bool intersects(const ArgSet& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((words_[k] & other.word(k)) != 0) return true;
        return false;
    }

    ArgSet& operator|=(const ArgSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.word(k);
        return *this;
    }
    ArgSet& operator&=(const ArgSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.word(k);
        return *this;
    }
    /// Set difference.
    ArgSet& operator-=(const ArgSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.word(k);
        return *this;
    }
    friend ArgSet operator|(ArgSet a, const ArgSet& b) { return a |= b; }
    friend ArgSet operator&(ArgSet a, const ArgSet& b) { return a &= b; }
    friend ArgSet operator-(ArgSet a, const ArgSet& b) { return a -= b; }

    /// Complement relative to the universe.
    ArgSet complement() const { return full(universe_) - *this; }

    std::vector<ArgIndex> members() const {
        std::vector<ArgIndex> out;
        for_each([&](ArgIndex i) { out.push_back(i); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                const int bit = std::countr_zero(w);
                f(static_cast<ArgIndex>(k * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    /// Low 64 members as a bitmask.
    std::uint64_t low_mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

    friend bool operator==(const ArgSet& a, const ArgSet& b) noexcept {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    /// Canonical order: lexicographic comparison of the sorted member lists.
    /// Because indices follow name order this is also the order of the
    /// sorted member-name lists.
    friend std::strong_ordering operator<=>(const ArgSet& a, const ArgSet& b) {
        const auto am = a.members();
        const auto bm = b.members();
        return std::lexicographical_compare_three_way(am.begin(), am.end(), bm.begin(), bm.end());
    }

private:
    std::uint64_t word(std::size_t k) const noexcept { return k < words_.size() ? words_[k] : 0; }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Sorts a family of sets into canonical order and drops duplicates.
void canonicalize(std::vector<ArgSet>& family);

}  // namespace saf
