#ifndef UNIMOD_DETAIL_SEARCH_HPP
#define UNIMOD_DETAIL_SEARCH_HPP

// Individualization-refinement machinery shared by the automorphism group
// computation and canonical labeling.

#include "unimod/graph.hpp"
#include "unimod/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace unimod {

// p[v] is the image of v.
using Permutation = std::vector<Vertex>;

namespace detail {

// Ordered partition of the vertex set; color values are 0..cells-1 and
// carry the cell order.
struct Coloring {
    std::vector<std::uint32_t> color;
    std::uint32_t cells = 0;

    bool discrete() const { return cells == color.size(); }
};

// Prefix vertices become leading singleton cells in order (repeats are
// ignored); everything else shares the last cell.
Coloring initial_coloring(std::size_t n, std::span<const Vertex> prefix);

// Equitable refinement. Cells split by the multiset of neighbor colors; the
// new cell order depends only on those multisets, so refinement commutes
// with relabeling.
void refine(const FiniteGraph& g, Coloring& c);

// Split v off the front of its cell.
Coloring individualize(const Coloring& c, Vertex v);

Coloring refined_individualize(const FiniteGraph& g, const Coloring& c, Vertex v);

// First non-singleton cell, if any.
std::optional<std::uint32_t> target_cell(const Coloring& c);

std::vector<Vertex> cell_members(const Coloring& c, std::uint32_t cell);

bool is_automorphism(const FiniteGraph& g, const Permutation& p);

// A graph automorphism carrying `left` onto `right` color by color, if any.
std::optional<Permutation> find_isomorphism(const FiniteGraph& g, const Coloring& left,
                                            const Coloring& right);

struct GroupSearchResult {
    // Strong generating set along `base`.
    std::vector<Permutation> generators;
    std::vector<Vertex> base;
    std::vector<std::size_t> basic_orbit_sizes;
    BigInt order = 1;
};

// Pointwise stabilizer of `prefix` in Aut(g).
GroupSearchResult search_group(const FiniteGraph& g, std::span<const Vertex> prefix);

struct CanonicalLabeling {
    // labeling[v] is the canonical position of v.
    std::vector<Vertex> labeling;
    // Upper triangle of the relabeled adjacency matrix, row-major, packed
    // MSB first.
    std::string adjacency_bits;
};

// Lexicographically least adjacency encoding over the search tree rooted at
// the refined prefix coloring. `generators` must be automorphisms fixing the
// prefix pointwise; they only prune.
CanonicalLabeling canonical_labeling(const FiniteGraph& g, std::span<const Vertex> prefix,
                                     std::vector<Permutation> generators);

// Orbit of `start` under the group generated by `gens`, sorted.
std::vector<Vertex> orbit(std::size_t degree, std::span<const Permutation> gens, Vertex start);

// Orbit ids for every point (ids numbered by smallest member).
std::vector<std::size_t> orbit_ids(std::size_t degree, std::span<const Permutation> gens);

} // namespace detail
} // namespace unimod

#endif // UNIMOD_DETAIL_SEARCH_HPP
