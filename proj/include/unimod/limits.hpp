#ifndef UNIMOD_LIMITS_HPP
#define UNIMOD_LIMITS_HPP

#include "unimod/canonical.hpp"
#include "unimod/graph.hpp"
#include "unimod/measures.hpp"
#include "unimod/rational.hpp"

#include <functional>
#include <map>
#include <span>
#include <vector>

namespace unimod {

// Law of the isomorphism class of the r-ball around the root.
struct BallDistribution {
    std::size_t radius = 0;
    std::map<CanonicalCode, Rational> probabilities;

    friend bool operator==(const BallDistribution&, const BallDistribution&) = default;
};

// Pushforward of the uniform vertex distribution to rooted classes.
RootedMeasure uniform_root_measure(const FiniteGraph& g, const SizeGuard& guard = {});

BallDistribution ball_distribution(const RootedMeasure& mu, std::size_t radius);

// Same as ball_distribution(uniform_root_measure(g), r) without computing
// rooted codes of g itself, so g may exceed the size guard.
BallDistribution ball_distribution(const FiniteGraph& g, std::size_t radius);

// Half the l1 distance. Throws InvalidArgument on a radius mismatch.
Rational tv_distance(const BallDistribution& p, const BallDistribution& q);

// I_3 x I_n with the corner vertex (row 0, column 0) removed; vertex
// (row, column) of the product is numbered 3 * column + row - 1.
FiniteGraph i3xn_family(std::size_t n);

// Ball law of I_3 x Z under its unimodular measure (2/3 on the outer rows,
// 1/3 on the middle row), read off a finite window of width 2r + 3.
BallDistribution i3xz_target(std::size_t radius);

struct ConvergenceRow {
    std::size_t index;
    std::size_t radius;
    Rational tv;
};

using FamilyGenerator = std::function<FiniteGraph(std::size_t)>;

// tv distance between the uniform-root ball law of generator(i) and the
// target at each radius. Throws InvalidArgument when a target is missing.
std::vector<ConvergenceRow> convergence_report(const FamilyGenerator& generator,
                                               std::span<const std::size_t> indices,
                                               const std::map<std::size_t, BallDistribution>& targets,
                                               std::span<const std::size_t> radii);

} // namespace unimod

#endif // UNIMOD_LIMITS_HPP
