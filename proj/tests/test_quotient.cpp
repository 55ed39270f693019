#include "oracle.hpp"

#include "unimod/automorphisms.hpp"
#include "unimod/cocycles.hpp"
#include "unimod/enumerate.hpp"
#include "unimod/errors.hpp"
#include "unimod/quotient.hpp"

#include <doctest.h>

#include <set>

using namespace unimod;

static const FiniteGraph I3 = path_graph(3);
static const FiniteGraph K13 = star_graph(3);

TEST_CASE("orbital_quotient")
{
    GraphStructure s(I3);
    const QuotientGraph& q = s.quotient();
    REQUIRE(q.classes.size() == 2);
    const std::size_t ov1 = s.class_of(0);
    const std::size_t ov2 = s.class_of(1);
    CHECK(s.class_of(2) == ov1);
    CHECK(q.classes[ov1].members == std::vector<Vertex>{0, 2});
    CHECK(q.classes[ov2].members == std::vector<Vertex>{1});
    CHECK(q.adjacent(ov1, ov2));
    CHECK(q.adjacent(ov2, ov1));
    CHECK_FALSE(q.adjacent(ov1, ov1));
    CHECK_FALSE(q.adjacent(ov2, ov2));
    CHECK(q.classes[ov1].code == canonical_code(RootedGraph(I3, 2)));

    QuotientGraph c4 = orbital_quotient(cycle_graph(4));
    REQUIRE(c4.classes.size() == 1);
    CHECK(c4.adjacent(0, 0));

    QuotientGraph single = orbital_quotient(path_graph(1));
    REQUIRE(single.classes.size() == 1);
    CHECK(single.adjacency.empty());

    CHECK_THROWS_AS(orbital_quotient(FiniteGraph(3, {{0, 1}})), DisconnectedError);
    CHECK_THROWS_AS(orbital_quotient(path_graph(80)), SizeGuardError);
}

TEST_CASE("pair_quotient")
{
    PairQuotient p = pair_quotient(I3);
    CHECK(p.classes.size() == 5);
    CHECK(pair_quotient(path_graph(1)).classes.size() == 1);
    CHECK(pair_quotient(cycle_graph(4)).classes.size() == 3);
    auto autos = oracle::automorphisms(cycle_graph(4));
    std::set<std::size_t> ids;
    for (auto [pair, id] : oracle::pair_orbit_ids(4, autos)) {
        ids.insert(id);
    }
    CHECK(ids.size() == 3);
}

TEST_CASE("pair classes of I_3")
{
    GraphStructure s(I3);
    // (1,2) and (3,2) share a class; (1,3) and (1,1) do not.
    CHECK(s.pair_class_of(0, 1) == s.pair_class_of(2, 1));
    CHECK(s.pair_class_of(0, 2) == s.pair_class_of(2, 0));
    CHECK(s.pair_class_of(0, 2) != s.pair_class_of(0, 0));
    const PairClass& c = s.pairs().classes[s.pair_class_of(0, 1)];
    CHECK(c.involution == s.pair_class_of(1, 0));
    CHECK(c.primary_class == s.class_of(0));
    CHECK(c.secondary_class == s.class_of(1));
    CHECK(c.code == canonical_code(DoublyRootedGraph(I3, 2, 1)));
}

TEST_CASE("fiber_measure")
{
    GraphStructure s(I3);
    FiberMeasure f = fiber_measure(s, s.class_of(1));
    CHECK(f.weights.size() == 2);
    CHECK(f.weights.at(s.pair_class_of(1, 0)) == 2);
    CHECK(f.weights.at(s.pair_class_of(1, 1)) == 1);
    CHECK(f.total() == 3);

    FiberMeasure single = fiber_measure(path_graph(1), 0);
    CHECK(single.weights.size() == 1);
    CHECK(single.total() == 1);

    GraphStructure star(K13);
    FiberMeasure center = fiber_measure(star, star.class_of(0));
    CHECK(center.weights.at(star.pair_class_of(0, 1)) == 3);
    CHECK(center.weights.at(star.pair_class_of(0, 0)) == 1);
    CHECK(center.total() == 4);

    CHECK_THROWS_AS(fiber_measure(s, 7), InvalidArgument);
}

TEST_CASE("sigma_map")
{
    GraphStructure s(I3);
    auto sigma = sigma_map(s);
    const std::size_t ov1 = s.class_of(0);
    CHECK(sigma[s.pair_class_of(0, 2)] == std::pair(ov1, ov1));
    CHECK(sigma[s.pair_class_of(0, 0)] == std::pair(ov1, ov1));
    CHECK_FALSE(sigma_is_bijective(s));
    CHECK(sigma_is_bijective(GraphStructure(path_graph(1))));
    CHECK(sigma_is_bijective(GraphStructure(FiniteGraph(
        7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}}))));
}

TEST_CASE("modular_ratio_check")
{
    CHECK(modular_ratio_check(I3));
    CHECK(modular_ratio_check(cycle_graph(4)));
    CHECK(modular_ratio_check(path_graph(1)));
}

TEST_CASE("quotient properties on every connected graph up to 7 vertices")
{
    for (const auto& g : connected_graphs_up_to(7)) {
        GraphStructure s(g);
        const std::size_t n = g.vertex_count();
        REQUIRE(sigma_is_bijective(s) == is_rigid(g));
        REQUIRE(modular_ratio_check(s));

        // Classes partition the vertices.
        std::vector<int> seen(n, 0);
        for (const auto& c : s.quotient().classes) {
            for (Vertex v : c.members) {
                ++seen[v];
            }
        }
        REQUIRE(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));

        // Adjacency: some member of one class is a neighbor of a
        // representative of the other.
        for (std::size_t a = 0; a < s.quotient().classes.size(); ++a) {
            for (std::size_t b = 0; b < s.quotient().classes.size(); ++b) {
                Vertex x = s.quotient().classes[a].representative;
                bool expected = false;
                for (Vertex y : s.quotient().classes[b].members) {
                    expected = expected || g.adjacent(x, y);
                }
                REQUIRE(s.quotient().adjacent(a, b) == expected);
            }
        }

        const auto& pairs = s.pairs().classes;
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            REQUIRE(pairs[pairs[t].involution].involution == t);
            REQUIRE(pairs[pairs[t].involution].primary_class == pairs[t].secondary_class);
        }
        for (std::size_t c = 0; c < s.quotient().classes.size(); ++c) {
            FiberMeasure base = fiber_measure(s, c);
            REQUIRE(base.total() == n);
            for (Vertex x : s.quotient().classes[c].members) {
                REQUIRE(fiber_measure_at(s, x).weights == base.weights);
            }
        }
    }
}

TEST_CASE("pair quotient against the n! oracle up to 6 vertices")
{
    for (const auto& g : connected_graphs_up_to(6)) {
        const std::size_t n = g.vertex_count();
        auto autos = oracle::automorphisms(g);
        auto ids = oracle::pair_orbit_ids(n, autos);
        GraphStructure s(g);
        std::set<std::size_t> distinct;
        for (auto [pair, id] : ids) {
            distinct.insert(id);
        }
        REQUIRE(s.pairs().classes.size() == distinct.size());
        for (Vertex x = 0; x < n; ++x) {
            for (Vertex y = 0; y < n; ++y) {
                const PairClass& c = s.pairs().classes[s.pair_class_of(x, y)];
                REQUIRE(ids.at({c.primary, c.secondary}) == ids.at({x, y}));
                REQUIRE(c.fiber_weight == oracle::stabilizer_orbit_size(autos, x, y));
                REQUIRE(c.code == canonical_code(DoublyRootedGraph(g, x, y)));
            }
        }
    }
}
