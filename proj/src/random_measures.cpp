#include "unimod/random_measures.hpp"

#include "unimod/errors.hpp"
#include "unimod/quotient.hpp"

#include <algorithm>

namespace unimod {

MeasureGenerator::MeasureGenerator(std::span<const FiniteGraph> pool, std::uint64_t seed,
                                   std::size_t max_components)
    : pool_(pool), rng_(seed), max_components_(max_components)
{
    if (pool.empty() || max_components == 0) {
        throw InvalidArgument("measure generator needs a non-empty pool");
    }
}

// Plain modulo reduction keeps draws identical across standard libraries.
std::size_t MeasureGenerator::uniform(std::size_t lo, std::size_t hi)
{
    return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
}

Rational MeasureGenerator::random_weight()
{
    return make_rational(static_cast<long>(uniform(1, 9)), static_cast<long>(uniform(1, 9)));
}

std::vector<std::size_t> MeasureGenerator::pick_graphs()
{
    const std::size_t count = uniform(1, std::min(max_components_, pool_.size()));
    std::vector<std::size_t> picked;
    while (picked.size() < count) {
        std::size_t i = uniform(0, pool_.size() - 1);
        if (std::find(picked.begin(), picked.end(), i) == picked.end()) {
            picked.push_back(i);
        }
    }
    return picked;
}

RootedMeasure MeasureGenerator::next()
{
    // A third of the draws are unimodular mixtures so both verdicts occur often.
    if (uniform(0, 2) == 0) {
        return next_unimodular_mixture();
    }
    RootedMeasure mu;
    for (std::size_t i : pick_graphs()) {
        const FiniteGraph& g = pool_[i];
        const Rational scale = random_weight();
        RootedMeasure part;
        switch (uniform(0, 3)) {
        case 0:
            part = unimodular_measure(g).scaled(scale);
            break;
        case 1:
            part = invariant_measure(g).scaled(scale);
            break;
        default: {
            const bool partial = uniform(0, 1) == 1;
            GraphStructure s(g);
            const auto& classes = s.quotient().classes;
            std::vector<bool> keep(classes.size(), true);
            if (partial) {
                std::size_t kept = 0;
                for (std::size_t c = 0; c < classes.size(); ++c) {
                    keep[c] = uniform(0, 1) == 1;
                    kept += keep[c];
                }
                if (kept == 0) {
                    keep[uniform(0, classes.size() - 1)] = true;
                }
            }
            for (std::size_t c = 0; c < classes.size(); ++c) {
                if (keep[c]) {
                    part.add(g, classes[c].representative, random_weight() * scale);
                }
            }
            break;
        }
        }
        for (const auto& [code, atom] : part.atoms()) {
            mu.add(atom.rooted, atom.weight);
        }
    }
    return mu;
}

RootedMeasure MeasureGenerator::next_unimodular_mixture()
{
    RootedMeasure mu;
    for (std::size_t i : pick_graphs()) {
        const RootedMeasure part = unimodular_measure(pool_[i]).scaled(random_weight());
        for (const auto& [code, atom] : part.atoms()) {
            mu.add(atom.rooted, atom.weight);
        }
    }
    return mu;
}

} // namespace unimod
