#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "saf/framework.hpp"

namespace saf {

struct RandomSafOptions {
    std::size_t min_args = 1;
    std::size_t max_args = 7;
    double sub_density = 0.3;     ///< chance of each forward subargument edge
    double attack_density = 0.2;  ///< chance of each ordered attack pair
};

/// Random valid SAF over a1..an. Subargument edges follow a random
/// permutation so the relation is acyclic; non-minimal attacks are dropped.
Saf random_saf(std::mt19937_64& rng, const RandomSafOptions& options = {});

/// `count` random SAFs from a fixed seed.
std::vector<Saf> random_corpus(std::uint64_t seed, std::size_t count, const RandomSafOptions& options = {});

}  // namespace saf
