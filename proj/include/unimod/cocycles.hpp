#ifndef UNIMOD_COCYCLES_HPP
#define UNIMOD_COCYCLES_HPP

#include "unimod/canonical.hpp"
#include "unimod/graph.hpp"
#include "unimod/quotient.hpp"
#include "unimod/rational.hpp"

#include <vector>

namespace unimod {

// Square table of positive rationals indexed by vertices or orbit classes.
// For orbit classes `labels` holds the rooted class codes; for vertices it
// is empty.
struct CocycleTable {
    std::size_t size = 0;
    std::vector<CanonicalCode> labels;
    std::vector<Rational> values; // row-major

    const Rational& at(std::size_t i, std::size_t j) const { return values.at(i * size + j); }
};

// card(G_x y) / card(G_y x).
Rational modular_cocycle(const FiniteGraph& g, Vertex x, Vertex y, const SizeGuard& guard = {});

// |G_x| / |G_y| (counting Haar measure on the finite group).
Rational modular_cocycle_haar(const FiniteGraph& g, Vertex x, Vertex y,
                              const SizeGuard& guard = {});

// Delta(x, y) for every vertex pair, one stabilizer search per vertex.
CocycleTable vertex_cocycle_table(const FiniteGraph& g, const SizeGuard& guard = {});

// The modular cocycle is constant on Aut-orbits of pairs; this is its value
// on each class of the pair quotient, in the order of s.pairs().
struct ModularFunction {
    std::vector<CanonicalCode> classes;
    std::vector<Rational> values;
};

ModularFunction modular_function_on_pairs(const GraphStructure& s);
ModularFunction modular_function_on_pairs(const FiniteGraph& g, const SizeGuard& guard = {});

bool is_unimodular_graph(const FiniteGraph& g, const SizeGuard& guard = {});

// Descent of the modular cocycle to the orbital quotient, indexed like
// s.quotient().classes. Well defined because finite groups are unimodular.
CocycleTable quotient_modular_cocycle(const GraphStructure& s);
CocycleTable quotient_modular_cocycle(const FiniteGraph& g, const SizeGuard& guard = {});

} // namespace unimod

#endif // UNIMOD_COCYCLES_HPP
