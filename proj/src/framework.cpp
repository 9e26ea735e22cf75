#include "saf/framework.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <sstream>

namespace saf {

void canonicalize(std::vector<ArgSet>& family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

SubCycle::SubCycle(std::vector<std::string> cycle)
    : ValidationError([&] {
          std::string msg = "subargument relation has a cycle:";
          for (std::size_t i = 0; i < cycle.size(); ++i) msg += (i == 0 ? " " : " -> ") + cycle[i];
          return msg;
      }()),
      cycle_(std::move(cycle)) {}

bool is_valid_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
        h >>= 4;
    }
    return out;
}

// ---------------------------------------------------------------------------
// ArgumentTable

ArgumentTable::ArgumentTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (const auto& n : names_)
        if (!is_valid_name(n)) throw InvalidName(n);
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

std::optional<ArgIndex> ArgumentTable::find(std::string_view name) const noexcept {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<ArgIndex>(it - names_.begin());
}

ArgIndex ArgumentTable::index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownArgument(std::string(name));
}

ArgSet ArgumentTable::make_set(std::span<const std::string> names) const {
    ArgSet s(size());
    for (const auto& n : names) s.insert(index(n));
    return s;
}

std::vector<std::string> ArgumentTable::names_of(const ArgSet& set) const {
    std::vector<std::string> out;
    set.for_each([&](ArgIndex i) { out.push_back(names_.at(i)); });
    return out;
}

namespace {

std::vector<Edge> index_pairs(const ArgumentTable& table, std::span<const NamePair> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) edges.emplace_back(table.index(a), table.index(b));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

std::string canonical_text(const ArgumentTable& table, const std::vector<Edge>& attacks,
                           const std::vector<Edge>* subargs) {
    std::ostringstream os;
    for (const auto& n : table.names()) os << "arg(" << n << ").\n";
    for (auto [a, b] : attacks) os << "att(" << table.name(a) << ',' << table.name(b) << ").\n";
    if (subargs != nullptr)
        for (auto [a, b] : *subargs) os << "sub(" << table.name(a) << ',' << table.name(b) << ").\n";
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// DungAF

DungAF DungAF::make(std::vector<std::string> arguments, std::span<const NamePair> attacks) {
    ArgumentTable table(std::move(arguments));
    auto edges = index_pairs(table, attacks);
    return from_edges(std::move(table), std::move(edges));
}

DungAF DungAF::from_edges(ArgumentTable table, std::vector<Edge> attacks) {
    DungAF af;
    const std::size_t n = table.size();
    af.table_ = std::move(table);
    std::sort(attacks.begin(), attacks.end());
    attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());
    af.attacks_ = std::move(attacks);
    af.attackers_.assign(n, ArgSet(n));
    af.attacked_by_.assign(n, ArgSet(n));
    for (auto [a, b] : af.attacks_) {
        if (a >= n || b >= n) throw std::out_of_range("attack endpoint outside framework");
        af.attackers_[b].insert(a);
        af.attacked_by_[a].insert(b);
    }
    return af;
}

std::string DungAF::digest() const { return fnv1a_hex(canonical_text(table_, attacks_, nullptr)); }

// ---------------------------------------------------------------------------
// Saf

namespace {

// Returns a topological order of the subargument graph (sources first), or
// throws SubCycle with the first cycle found by a DFS from the lowest index.
std::vector<ArgIndex> topological_order(const ArgumentTable& table, const std::vector<Edge>& subargs) {
    const std::size_t n = table.size();
    std::vector<std::vector<ArgIndex>> succ(n);
    for (auto [a, b] : subargs) succ[a].push_back(b);

    enum class Mark : std::uint8_t { white, grey, black };
    std::vector<Mark> mark(n, Mark::white);
    std::vector<ArgIndex> post;
    post.reserve(n);

    struct Frame {
        ArgIndex v;
        std::size_t next;
    };
    for (ArgIndex root = 0; root < n; ++root) {
        if (mark[root] != Mark::white) continue;
        std::vector<Frame> stack{{root, 0}};
        mark[root] = Mark::grey;
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.next < succ[top.v].size()) {
                const ArgIndex w = succ[top.v][top.next++];
                if (mark[w] == Mark::grey) {
                    std::vector<std::string> cycle;
                    auto it = std::find_if(stack.begin(), stack.end(), [&](const Frame& f) { return f.v == w; });
                    for (; it != stack.end(); ++it) cycle.push_back(table.name(it->v));
                    cycle.push_back(table.name(w));
                    throw SubCycle(std::move(cycle));
                }
                if (mark[w] == Mark::white) {
                    mark[w] = Mark::grey;
                    stack.push_back({w, 0});
                }
            } else {
                mark[top.v] = Mark::black;
                post.push_back(top.v);
                stack.pop_back();
            }
        }
    }
    std::reverse(post.begin(), post.end());
    return post;
}

}  // namespace

Saf Saf::validate(std::vector<std::string> arguments, std::span<const NamePair> attacks,
                  std::span<const NamePair> subargs) {
    Saf f;
    f.table_ = ArgumentTable(std::move(arguments));
    f.attacks_ = index_pairs(f.table_, attacks);
    f.subargs_ = index_pairs(f.table_, subargs);
    const std::size_t n = f.size();

    const auto order = topological_order(f.table_, f.subargs_);

    std::vector<std::vector<ArgIndex>> direct_subs(n);
    for (auto [a, b] : f.subargs_) direct_subs[b].push_back(a);
    f.closure_.sub.assign(n, ArgSet(n));
    for (ArgIndex b : order) {
        ArgSet& cl = f.closure_.sub[b];
        cl.insert(b);
        for (ArgIndex a : direct_subs[b]) cl |= f.closure_.sub[a];
    }
    f.closure_.super.assign(n, ArgSet(n));
    for (ArgIndex y = 0; y < n; ++y) f.closure_.sub[y].for_each([&](ArgIndex x) { f.closure_.super[x].insert(y); });

    f.attackers_.assign(n, ArgSet(n));
    f.targets_.assign(n, ArgSet(n));
    for (auto [a, b] : f.attacks_) {
        f.attackers_[b].insert(a);
        f.targets_[a].insert(b);
    }

    for (auto [a, b] : f.attacks_) {
        ArgSet proper = f.closure_.sub[b];
        proper.erase(b);
        proper &= f.targets_[a];
        if (!proper.empty()) {
            throw NonMinimalAttack(f.name(a), f.name(b), f.name(proper.members().front()));
        }
    }
    return f;
}

bool Saf::is_sub_closed(const ArgSet& set) const {
    bool closed = true;
    set.for_each([&](ArgIndex x) { closed = closed && closure_.sub[x].is_subset_of(set); });
    return closed;
}

std::string Saf::digest() const { return fnv1a_hex(canonical_text(table_, attacks_, &subargs_)); }

}  // namespace saf
