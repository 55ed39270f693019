#include "unimod/cocycles.hpp"

#include "unimod/automorphisms.hpp"

#include <map>

namespace unimod {

Rational modular_cocycle(const FiniteGraph& g, Vertex x, Vertex y, const SizeGuard& guard)
{
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) {
        return 1;
    }
    auto forward = stabilizer_orbit_size(g, x, y, guard);
    auto backward = stabilizer_orbit_size(g, y, x, guard);
    return make_rational(static_cast<long>(forward), static_cast<long>(backward));
}

Rational modular_cocycle_haar(const FiniteGraph& g, Vertex x, Vertex y, const SizeGuard& guard)
{
    return make_rational(stabilizer_order(g, x, guard), stabilizer_order(g, y, guard));
}

CocycleTable vertex_cocycle_table(const FiniteGraph& g, const SizeGuard& guard)
{
    const std::size_t n = g.vertex_count();
    std::vector<PermutationGroup> stabilizers;
    stabilizers.reserve(n);
    for (Vertex x = 0; x < n; ++x) {
        stabilizers.push_back(stabilizer(g, x, guard));
    }
    CocycleTable table{n, {}, std::vector<Rational>(n * n)};
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
            auto forward = stabilizers[x].orbit_of(y).size();
            auto backward = stabilizers[y].orbit_of(x).size();
            table.values[x * n + y] =
                make_rational(static_cast<long>(forward), static_cast<long>(backward));
        }
    }
    return table;
}

ModularFunction modular_function_on_pairs(const GraphStructure& s)
{
    const auto& g = s.graph();
    // Fresh searches, independent of the fiber weights stored in s.
    std::map<Vertex, PermutationGroup> stabilizers;
    auto stab = [&](Vertex v) -> const PermutationGroup& {
        auto it = stabilizers.find(v);
        if (it == stabilizers.end()) {
            it = stabilizers.emplace(v, stabilizer(g, v, SizeGuard{g.vertex_count()})).first;
        }
        return it->second;
    };
    ModularFunction out;
    for (const auto& pc : s.pairs().classes) {
        out.classes.push_back(pc.code);
        auto forward = stab(pc.primary).orbit_of(pc.secondary).size();
        auto backward = stab(pc.secondary).orbit_of(pc.primary).size();
        out.values.push_back(make_rational(static_cast<long>(forward), static_cast<long>(backward)));
    }
    return out;
}

ModularFunction modular_function_on_pairs(const FiniteGraph& g, const SizeGuard& guard)
{
    return modular_function_on_pairs(GraphStructure(g, guard));
}

bool is_unimodular_graph(const FiniteGraph& g, const SizeGuard& guard)
{
    auto table = vertex_cocycle_table(g, guard);
    for (const auto& v : table.values) {
        if (v != 1) {
            return false;
        }
    }
    return true;
}

CocycleTable quotient_modular_cocycle(const GraphStructure& s)
{
    const auto& classes = s.quotient().classes;
    const std::size_t k = classes.size();
    CocycleTable table{k, {}, std::vector<Rational>(k * k)};
    for (const auto& c : classes) {
        table.labels.push_back(c.code);
    }
    for (std::size_t i = 0; i < k; ++i) {
        const auto& stab_i = s.representative_stabilizer(i);
        for (std::size_t j = 0; j < k; ++j) {
            const auto& stab_j = s.representative_stabilizer(j);
            Vertex x = classes[i].representative;
            Vertex y = classes[j].representative;
            auto forward = stab_i.orbit_of(y).size();
            auto backward = stab_j.orbit_of(x).size();
            table.values[i * k + j] =
                make_rational(static_cast<long>(forward), static_cast<long>(backward));
        }
    }
    return table;
}

CocycleTable quotient_modular_cocycle(const FiniteGraph& g, const SizeGuard& guard)
{
    return quotient_modular_cocycle(GraphStructure(g, guard));
}

} // namespace unimod
