#ifndef UNIMOD_RANDOM_MEASURES_HPP
#define UNIMOD_RANDOM_MEASURES_HPP

#include "unimod/graph.hpp"
#include "unimod/measures.hpp"

#include <cstdint>
#include <random>
#include <span>

namespace unimod {

inline constexpr std::uint64_t default_seed = 20240611;

// Seeded generator of small finitely supported measures. Each draw mixes
// one to `max_components` graphs from the pool; on each graph the weights
// are the unimodular measure, the invariant measure, random weights on
// every orbit class, or random weights on a random subset of classes, all
// scaled by a random rational.
class MeasureGenerator {
public:
    MeasureGenerator(std::span<const FiniteGraph> pool, std::uint64_t seed,
                     std::size_t max_components = 3);

    RootedMeasure next();
    // Mixture of scaled unimodular measures only.
    RootedMeasure next_unimodular_mixture();
    Rational random_weight();

private:
    std::span<const FiniteGraph> pool_;
    std::mt19937_64 rng_;
    std::size_t max_components_;

    std::size_t uniform(std::size_t lo, std::size_t hi);
    std::vector<std::size_t> pick_graphs();
};

} // namespace unimod

#endif // UNIMOD_RANDOM_MEASURES_HPP
