#include "unimod/quotient.hpp"

#include "unimod/cocycles.hpp"
#include "unimod/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace unimod {

std::size_t FiberMeasure::total() const
{
    std::size_t sum = 0;
    for (const auto& [cls, w] : weights) {
        sum += w;
    }
    return sum;
}

namespace {

FiniteGraph checked(FiniteGraph g, const SizeGuard& guard)
{
    guard.check(g);
    if (!g.is_connected()) {
        throw DisconnectedError("quotient of a disconnected graph");
    }
    return g;
}

} // namespace

GraphStructure::GraphStructure(FiniteGraph g, const SizeGuard& guard)
    : graph_(checked(std::move(g), guard)), code_(canonical_code(graph_, guard)),
      group_(automorphism_group(graph_, guard))
{
    const std::size_t n = graph_.vertex_count();

    // Orbit classes, ordered by rooted code.
    std::vector<OrbitClass> classes;
    for (const auto& orb : group_.orbits()) {
        std::array<Vertex, 1> root{orb.front()};
        classes.push_back({canonical_code(graph_, root, guard), orb.front(), orb});
    }
    std::sort(classes.begin(), classes.end(),
              [](const OrbitClass& a, const OrbitClass& b) { return a.code < b.code; });
    class_of_.assign(n, 0);
    to_representative_.assign(n, Permutation{});
    for (std::size_t i = 0; i < classes.size(); ++i) {
        auto cover = transversal(n, group_.generators(), classes[i].representative);
        for (Vertex v : classes[i].members) {
            class_of_[v] = i;
            to_representative_[v] = inverse(*cover[v]);
        }
        stabilizers_.push_back(stabilizer(graph_, classes[i].representative, guard));
    }
    quotient_.classes = std::move(classes);
    for (std::size_t i = 0; i < quotient_.classes.size(); ++i) {
        for (Vertex v : graph_.neighbors(quotient_.classes[i].representative)) {
            quotient_.adjacency.insert({i, class_of_[v]});
            quotient_.adjacency.insert({class_of_[v], i});
        }
    }

    // Pair classes: over each class, one per orbit of the representative's
    // stabilizer.
    std::vector<PairClass> pairs;
    for (std::size_t i = 0; i < quotient_.classes.size(); ++i) {
        Vertex x = quotient_.classes[i].representative;
        for (const auto& orb : stabilizers_[i].orbits()) {
            std::array<Vertex, 2> roots{x, orb.front()};
            pairs.push_back({canonical_code(graph_, roots, guard), x, orb.front(), i,
                             class_of_[orb.front()], orb.size(), 0});
        }
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const PairClass& a, const PairClass& b) { return a.code < b.code; });
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& stab = stabilizers_[pairs[p].primary_class];
        pair_lookup_[{pairs[p].primary_class, stab.orbit_index(pairs[p].secondary)}] = p;
    }
    pairs_.classes = std::move(pairs);
    for (auto& pc : pairs_.classes) {
        pc.involution = pair_class_of(pc.secondary, pc.primary);
    }
}

std::size_t GraphStructure::pair_class_of(Vertex x, Vertex y) const
{
    graph_.check_vertex(x);
    graph_.check_vertex(y);
    std::size_t cls = class_of_[x];
    const Permutation& move = to_representative_[x];
    const auto& stab = stabilizers_[cls];
    return pair_lookup_.at({cls, stab.orbit_index(move[y])});
}

std::optional<std::size_t> GraphStructure::find_class(const CanonicalCode& code) const
{
    const auto& cs = quotient_.classes;
    auto it = std::lower_bound(cs.begin(), cs.end(), code,
                               [](const OrbitClass& c, const CanonicalCode& k) { return c.code < k; });
    if (it == cs.end() || it->code != code) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - cs.begin());
}

std::optional<std::size_t> GraphStructure::find_pair_class(const CanonicalCode& code) const
{
    const auto& cs = pairs_.classes;
    auto it = std::lower_bound(cs.begin(), cs.end(), code,
                               [](const PairClass& c, const CanonicalCode& k) { return c.code < k; });
    if (it == cs.end() || it->code != code) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - cs.begin());
}

QuotientGraph orbital_quotient(const FiniteGraph& g, const SizeGuard& guard)
{
    return GraphStructure(g, guard).quotient();
}

PairQuotient pair_quotient(const FiniteGraph& g, const SizeGuard& guard)
{
    return GraphStructure(g, guard).pairs();
}

FiberMeasure fiber_measure(const GraphStructure& s, std::size_t orbit_class)
{
    if (orbit_class >= s.quotient().classes.size()) {
        throw InvalidArgument("unknown orbit class " + std::to_string(orbit_class));
    }
    FiberMeasure out{orbit_class, {}};
    const auto& pcs = s.pairs().classes;
    for (std::size_t p = 0; p < pcs.size(); ++p) {
        if (pcs[p].primary_class == orbit_class) {
            out.weights[p] = pcs[p].fiber_weight;
        }
    }
    return out;
}

FiberMeasure fiber_measure(const FiniteGraph& g, std::size_t orbit_class, const SizeGuard& guard)
{
    return fiber_measure(GraphStructure(g, guard), orbit_class);
}

FiberMeasure fiber_measure_at(const GraphStructure& s, Vertex x)
{
    const auto& g = s.graph();
    auto stab = stabilizer(g, x, SizeGuard{g.vertex_count()});
    FiberMeasure out{s.class_of(x), {}};
    for (const auto& orb : stab.orbits()) {
        out.weights[s.pair_class_of(x, orb.front())] += orb.size();
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> sigma_map(const GraphStructure& s)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& pc : s.pairs().classes) {
        out.emplace_back(pc.primary_class, pc.secondary_class);
    }
    return out;
}

bool sigma_is_bijective(const GraphStructure& s)
{
    auto images = sigma_map(s);
    std::sort(images.begin(), images.end());
    bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
    auto k = s.quotient().classes.size();
    return injective && images.size() == k * k;
}

bool modular_ratio_check(const GraphStructure& s)
{
    auto modular = modular_function_on_pairs(s);
    const auto& pcs = s.pairs().classes;
    for (std::size_t p = 0; p < pcs.size(); ++p) {
        Rational ratio = make_rational(static_cast<long>(pcs[p].fiber_weight),
                                       static_cast<long>(pcs[pcs[p].involution].fiber_weight));
        if (ratio != modular.values[p]) {
            return false;
        }
    }
    return true;
}

bool modular_ratio_check(const FiniteGraph& g, const SizeGuard& guard)
{
    return modular_ratio_check(GraphStructure(g, guard));
}

} // namespace unimod
