#ifndef UNIMOD_BRUTEFORCE_HPP
#define UNIMOD_BRUTEFORCE_HPP

// Naive oracles that enumerate all n! vertex permutations. They share no
// code with the refinement search and exist to cross-check it.

#include "unimod/automorphisms.hpp"
#include "unimod/graph.hpp"

#include <vector>

namespace unimod::bruteforce {

inline constexpr std::size_t max_vertices = 9;

// Every automorphism, in lexicographic order. Throws InvalidArgument above
// max_vertices.
std::vector<Permutation> automorphisms(const FiniteGraph& g);

// Orbits of the full automorphism list, ordered by smallest member.
std::vector<std::vector<Vertex>> orbits(const FiniteGraph& g,
                                        const std::vector<Permutation>& autos);

// card(G_x y) by filtering the full list.
std::size_t stabilizer_orbit_size(const std::vector<Permutation>& autos, Vertex x, Vertex y);
std::size_t stabilizer_order(const std::vector<Permutation>& autos, Vertex x);

// All connected graphs on n labeled vertices, one per edge subset (n <= 6).
std::vector<FiniteGraph> labeled_connected_graphs(std::size_t n);

} // namespace unimod::bruteforce

#endif // UNIMOD_BRUTEFORCE_HPP
