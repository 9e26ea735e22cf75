#include "saf/generate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace saf {

Saf random_saf(std::mt19937_64& rng, const RandomSafOptions& options) {
    std::uniform_int_distribution<std::size_t> size_dist(options.min_args, options.max_args);
    std::bernoulli_distribution sub_coin(options.sub_density);
    std::bernoulli_distribution att_coin(options.attack_density);

    const std::size_t n = size_dist(rng);
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<NamePair> subargs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (sub_coin(rng)) subargs.emplace_back(names[order[i]], names[order[j]]);

    std::vector<NamePair> attacks;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (att_coin(rng)) attacks.emplace_back(names[i], names[j]);

    // Validate the structure alone, then keep only attacks whose target has
    // no proper subargument hit by the same attacker.
    const Saf structure = Saf::validate(names, {}, subargs);
    std::vector<NamePair> minimal;
    for (const auto& [a, b] : attacks) {
        const ArgIndex bi = structure.index(b);
        bool redundant = false;
        structure.sub_closure(bi).for_each([&](ArgIndex sub) {
            if (sub == bi) return;
            redundant = redundant || std::find(attacks.begin(), attacks.end(), NamePair{a, structure.name(sub)}) !=
                                         attacks.end();
        });
        if (!redundant) minimal.emplace_back(a, b);
    }
    return Saf::validate(std::move(names), minimal, subargs);
}

std::vector<Saf> random_corpus(std::uint64_t seed, std::size_t count, const RandomSafOptions& options) {
    std::mt19937_64 rng(seed);
    std::vector<Saf> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_saf(rng, options));
    return out;
}

}  // namespace saf
