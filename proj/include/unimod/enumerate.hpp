#ifndef UNIMOD_ENUMERATE_HPP
#define UNIMOD_ENUMERATE_HPP

#include "unimod/graph.hpp"

#include <vector>

namespace unimod {

// One representative per isomorphism class of connected graphs on exactly
// n vertices, ordered by canonical code. Built by attaching a new vertex to
// every non-empty neighbor set of every connected graph on n-1 vertices:
// each connected graph has a non-cut vertex, so nothing is missed.
std::vector<FiniteGraph> connected_graphs(std::size_t n);

// Concatenation over 1..max_n.
std::vector<FiniteGraph> connected_graphs_up_to(std::size_t max_n);

} // namespace unimod

#endif // UNIMOD_ENUMERATE_HPP
