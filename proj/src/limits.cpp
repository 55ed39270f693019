#include "unimod/limits.hpp"

#include "unimod/errors.hpp"

#include <set>

namespace unimod {

namespace {

CanonicalCode ball_code(const FiniteGraph& g, Vertex x, std::size_t radius)
{
    auto b = ball(g, x, radius);
    return canonical_code(b, SizeGuard{b.graph.vertex_count()});
}

} // namespace

RootedMeasure uniform_root_measure(const FiniteGraph& g, const SizeGuard& guard)
{
    guard.check(g);
    if (!g.is_connected()) {
        throw DisconnectedError("uniform root measure of a disconnected graph");
    }
    Rational w = make_rational(1, static_cast<long>(g.vertex_count()));
    RootedMeasure mu;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        mu.add(g, v, w, guard);
    }
    return mu;
}

BallDistribution ball_distribution(const RootedMeasure& mu, std::size_t radius)
{
    if (mu.empty()) {
        throw InvalidArgument("ball distribution of the zero measure");
    }
    BallDistribution out{radius, {}};
    Rational total = mu.total_mass();
    for (const auto& [code, atom] : mu.atoms()) {
        out.probabilities[ball_code(atom.rooted.graph, atom.rooted.root, radius)] +=
            atom.weight / total;
    }
    return out;
}

BallDistribution ball_distribution(const FiniteGraph& g, std::size_t radius)
{
    if (!g.is_connected()) {
        throw DisconnectedError("ball distribution of a disconnected graph");
    }
    BallDistribution out{radius, {}};
    Rational w = make_rational(1, static_cast<long>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out.probabilities[ball_code(g, v, radius)] += w;
    }
    return out;
}

Rational tv_distance(const BallDistribution& p, const BallDistribution& q)
{
    if (p.radius != q.radius) {
        throw InvalidArgument("tv distance between ball laws of different radii");
    }
    std::set<CanonicalCode> codes;
    for (const auto& [c, w] : p.probabilities) {
        codes.insert(c);
    }
    for (const auto& [c, w] : q.probabilities) {
        codes.insert(c);
    }
    Rational sum = 0;
    for (const auto& c : codes) {
        auto a = p.probabilities.find(c);
        auto b = q.probabilities.find(c);
        Rational diff = (a == p.probabilities.end() ? Rational(0) : a->second) -
                        (b == q.probabilities.end() ? Rational(0) : b->second);
        sum += abs(diff);
    }
    return sum / 2;
}

namespace {

// Product I_3 x I_width, vertex (row, column) numbered 3 * column + row,
// optionally without vertex 0.
FiniteGraph grid_3_by(std::size_t width, bool drop_corner)
{
    std::size_t offset = drop_corner ? 1 : 0;
    auto id = [&](std::size_t row, std::size_t col) {
        return static_cast<Vertex>(3 * col + row - offset);
    };
    std::vector<Edge> edges;
    for (std::size_t col = 0; col < width; ++col) {
        for (std::size_t row = 0; row < 3; ++row) {
            bool corner = drop_corner && row == 0 && col == 0;
            if (corner) {
                continue;
            }
            if (row + 1 < 3) {
                edges.emplace_back(id(row, col), id(row + 1, col));
            }
            if (col + 1 < width) {
                edges.emplace_back(id(row, col), id(row, col + 1));
            }
        }
    }
    return {3 * width - offset, edges};
}

} // namespace

FiniteGraph i3xn_family(std::size_t n)
{
    if (n < 2) {
        throw InvalidArgument("i3xn family needs n >= 2");
    }
    return grid_3_by(n, true);
}

BallDistribution i3xz_target(std::size_t radius)
{
    std::size_t width = 2 * radius + 3;
    auto window = grid_3_by(width, false);
    std::size_t mid = width / 2;
    BallDistribution out{radius, {}};
    Rational third = make_rational(1, 3);
    for (std::size_t row = 0; row < 3; ++row) {
        out.probabilities[ball_code(window, static_cast<Vertex>(3 * mid + row), radius)] += third;
    }
    return out;
}

std::vector<ConvergenceRow> convergence_report(const FamilyGenerator& generator,
                                               std::span<const std::size_t> indices,
                                               const std::map<std::size_t, BallDistribution>& targets,
                                               std::span<const std::size_t> radii)
{
    for (std::size_t r : radii) {
        if (!targets.contains(r)) {
            throw InvalidArgument("no target distribution for radius " + std::to_string(r));
        }
    }
    std::vector<ConvergenceRow> rows;
    for (std::size_t index : indices) {
        FiniteGraph g = generator(index);
        for (std::size_t r : radii) {
            rows.push_back({index, r, tv_distance(ball_distribution(g, r), targets.at(r))});
        }
    }
    return rows;
}

} // namespace unimod
