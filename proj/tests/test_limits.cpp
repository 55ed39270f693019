#include "oracle.hpp"

#include "unimod/enumerate.hpp"
#include "unimod/errors.hpp"
#include "unimod/limits.hpp"
#include "unimod/measures.hpp"

#include <doctest.h>

#include <set>

using namespace unimod;

static Rational q(long p, long r = 1) { return make_rational(p, r); }

static CanonicalCode rooted(const FiniteGraph& g, Vertex v) { return canonical_code(RootedGraph(g, v)); }

TEST_CASE("uniform root measure")
{
    RootedMeasure mu = uniform_root_measure(path_graph(3));
    CHECK(mu.size() == 2);
    CHECK(mu.weight(rooted(path_graph(3), 0)) == q(2, 3));
    CHECK(mu.weight(rooted(path_graph(3), 1)) == q(1, 3));
    CHECK(mu.total_mass() == 1);

    RootedMeasure c = uniform_root_measure(cycle_graph(5));
    CHECK(c.size() == 1);
    CHECK(c.total_mass() == 1);

    CHECK_THROWS_AS(uniform_root_measure(FiniteGraph(2, {})), DisconnectedError);
    CHECK_THROWS_AS(uniform_root_measure(path_graph(70)), SizeGuardError);
}

TEST_CASE("uniform root measure equals the unimodular measure of a finite graph")
{
    for (const auto& g : connected_graphs_up_to(7)) {
        REQUIRE(uniform_root_measure(g) == unimodular_measure(g));
    }
}

TEST_CASE("uniform root measure is unimodular and passes mass transport")
{
    for (std::size_t n = 2; n <= 6; ++n) {
        RootedMeasure mu = uniform_root_measure(i3xn_family(n));
        CHECK(is_unimodular(mu));
        auto kernels = builtin_kernels(mu, 2);
        for (const auto& b : mass_transport_batch(mu, kernels)) {
            REQUIRE(b.equal);
        }
    }
}

TEST_CASE("ball distributions")
{
    FiniteGraph p3 = path_graph(3);
    BallDistribution b1 = ball_distribution(p3, 1);
    CHECK(b1.radius == 1);
    REQUIRE(b1.probabilities.size() == 2);
    CHECK(b1.probabilities.at(canonical_code(RootedGraph(path_graph(2), 0))) == q(2, 3));
    CHECK(b1.probabilities.at(rooted(p3, 1)) == q(1, 3));

    BallDistribution b0 = ball_distribution(p3, 0);
    REQUIRE(b0.probabilities.size() == 1);
    CHECK(b0.probabilities.begin()->second == 1);

    // The measure-based overload agrees, also for non-normalized input.
    for (const auto& g : connected_graphs_up_to(5)) {
        for (std::size_t r = 0; r <= 3; ++r) {
            REQUIRE(ball_distribution(g, r) == ball_distribution(uniform_root_measure(g).scaled(7), r));
        }
    }
    CHECK_THROWS_AS(ball_distribution(RootedMeasure{}, 1), InvalidArgument);
    CHECK_THROWS_AS(ball_distribution(FiniteGraph(3, {{0, 1}}), 1), DisconnectedError);
}

TEST_CASE("tv distance")
{
    CanonicalCode a = rooted(path_graph(2), 0);
    CanonicalCode b = rooted(path_graph(3), 1);
    CanonicalCode c = rooted(star_graph(3), 0);
    BallDistribution p{1, {{a, q(1, 2)}, {b, q(1, 2)}}};
    BallDistribution r{1, {{a, q(2, 3)}, {b, q(1, 3)}}};
    BallDistribution s{1, {{c, 1}}};
    CHECK(tv_distance(p, r) == q(1, 6));
    CHECK(tv_distance(p, p) == 0);
    CHECK(tv_distance(p, s) == 1);
    CHECK(tv_distance(p, r) == tv_distance(r, p));
    CHECK_THROWS_AS(tv_distance(p, BallDistribution{2, {{a, 1}}}), InvalidArgument);
}

TEST_CASE("i3xn family")
{
    for (std::size_t n : {2u, 3u, 10u, 300u}) {
        FiniteGraph g = i3xn_family(n);
        CHECK(g.vertex_count() == 3 * n - 1);
        CHECK(g.edge_count() == 5 * n - 5);
        CHECK(g.is_connected());
    }
    // Vertex (row 1, column 0) is 0 and its neighbours are (2, 0) and (1, 1).
    FiniteGraph g = i3xn_family(4);
    CHECK(g.neighbors(0).size() == 2);
    CHECK(std::set<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()) == std::set<Vertex>{1, 3});
    CHECK_THROWS_AS(i3xn_family(1), InvalidArgument);
}

TEST_CASE("i3xz target")
{
    BallDistribution t0 = i3xz_target(0);
    REQUIRE(t0.probabilities.size() == 1);
    BallDistribution t1 = i3xz_target(1);
    REQUIRE(t1.probabilities.size() == 2);
    std::multiset<Rational> weights;
    for (const auto& [code, w] : t1.probabilities) {
        weights.insert(w);
    }
    CHECK(weights == std::multiset<Rational>{q(1, 3), q(2, 3)});
    for (std::size_t r = 0; r <= 3; ++r) {
        BallDistribution target = i3xz_target(r);
        Rational total = 0;
        for (const auto& [code, w] : target.probabilities) {
            total += w;
        }
        CHECK(total == 1);
    }
}

// Fraction of vertices whose column lies within r of an end column.
static Rational boundary_fraction(std::size_t n, std::size_t r)
{
    std::size_t bad = 0;
    for (std::size_t col = 0; col < n; ++col) {
        const bool near = col <= r || col + r >= n - 1;
        if (near) {
            bad += col == 0 ? 2 : 3;
        }
    }
    return make_rational(static_cast<long>(bad), static_cast<long>(3 * n - 1));
}

TEST_CASE("convergence of i3xn to i3xz")
{
    std::vector<std::size_t> radii{0, 1, 2, 3};
    std::map<std::size_t, BallDistribution> targets;
    for (auto r : radii) {
        targets[r] = i3xz_target(r);
    }
    std::vector<std::size_t> indices{5, 10, 30, 100};
    auto rows = convergence_report(i3xn_family, indices, targets, radii);
    REQUIRE(rows.size() == indices.size() * radii.size());
    std::map<std::size_t, Rational> previous;
    for (const auto& row : rows) {
        if (row.radius == 0) {
            CHECK(row.tv == 0);
        }
        CHECK(row.tv <= boundary_fraction(row.index, row.radius));
        if (previous.contains(row.radius)) {
            if (row.radius > 0) {
                CHECK(row.tv < previous[row.radius]);
            }
        }
        previous[row.radius] = row.tv;
    }
    // tv stays positive for a finite n since the end columns differ.
    for (const auto& row : rows) {
        if (row.radius > 0) {
            CHECK(row.tv > 0);
        }
    }

    std::vector<std::size_t> missing{0, 7};
    CHECK_THROWS_AS(convergence_report(i3xn_family, indices, targets, missing), InvalidArgument);
}

TEST_CASE("constant family has zero tv distance")
{
    std::vector<std::size_t> radii{0, 1, 2};
    std::map<std::size_t, BallDistribution> targets;
    for (auto r : radii) {
        targets[r] = ball_distribution(path_graph(3), r);
    }
    std::vector<std::size_t> indices{1, 2, 3};
    auto rows = convergence_report([](std::size_t) { return path_graph(3); }, indices, targets, radii);
    for (const auto& row : rows) {
        CHECK(row.tv == 0);
    }
}
