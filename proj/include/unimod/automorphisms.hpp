#ifndef UNIMOD_AUTOMORPHISMS_HPP
#define UNIMOD_AUTOMORPHISMS_HPP

#include "unimod/detail/search.hpp"
#include "unimod/graph.hpp"
#include "unimod/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace unimod {

// A subgroup of Aut(g) given by a strong generating set, together with its
// exact order and its orbits on the vertex set.
class PermutationGroup {
public:
    PermutationGroup(std::size_t degree, std::vector<Permutation> generators, BigInt order,
                     std::vector<Vertex> fixed_points);

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const BigInt& order() const { return order_; }
    // Points the group was computed to fix (empty for the full group).
    const std::vector<Vertex>& fixed_points() const { return fixed_points_; }

    // Orbits sorted internally and ordered by smallest member.
    const std::vector<std::vector<Vertex>>& orbits() const { return orbits_; }
    std::size_t orbit_index(Vertex v) const { return orbit_index_.at(v); }
    const std::vector<Vertex>& orbit_of(Vertex v) const { return orbits_[orbit_index(v)]; }

    bool is_trivial() const { return order_ == 1; }

private:
    std::size_t degree_;
    std::vector<Permutation> generators_;
    BigInt order_;
    std::vector<Vertex> fixed_points_;
    std::vector<std::vector<Vertex>> orbits_;
    std::vector<std::size_t> orbit_index_;
};

PermutationGroup automorphism_group(const FiniteGraph& g, const SizeGuard& guard = {});

// G_x, computed by a fresh search with x individualized.
PermutationGroup stabilizer(const FiniteGraph& g, Vertex x, const SizeGuard& guard = {});

// Pointwise stabilizer of a list of vertices.
PermutationGroup pointwise_stabilizer(const FiniteGraph& g, std::span<const Vertex> points,
                                      const SizeGuard& guard = {});

std::vector<std::vector<Vertex>> vertex_orbits(const FiniteGraph& g,
                                               const SizeGuard& guard = {});

// card(G_x y).
std::size_t stabilizer_orbit_size(const FiniteGraph& g, Vertex x, Vertex y,
                                  const SizeGuard& guard = {});

// |G_x|.
BigInt stabilizer_order(const FiniteGraph& g, Vertex x, const SizeGuard& guard = {});

bool is_rigid(const FiniteGraph& g, const SizeGuard& guard = {});
bool is_vertex_transitive(const FiniteGraph& g, const SizeGuard& guard = {});

bool is_automorphism(const FiniteGraph& g, const Permutation& p);

Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& p);
Permutation identity_permutation(std::size_t degree);

// For each v in the orbit of `start`, an element of the generated group
// mapping start to v; nullopt outside the orbit.
std::vector<std::optional<Permutation>> transversal(std::size_t degree,
                                                    std::span<const Permutation> gens,
                                                    Vertex start);

} // namespace unimod

#endif // UNIMOD_AUTOMORPHISMS_HPP
