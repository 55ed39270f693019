#include "unimod/automorphisms.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace unimod {

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   BigInt order, std::vector<Vertex> fixed_points)
    : degree_(degree), generators_(std::move(generators)), order_(std::move(order)),
      fixed_points_(std::move(fixed_points))
{
    orbit_index_ = detail::orbit_ids(degree_, generators_);
    std::size_t count = 0;
    for (auto id : orbit_index_) {
        count = std::max(count, id + 1);
    }
    orbits_.resize(count);
    for (Vertex v = 0; v < degree_; ++v) {
        orbits_[orbit_index_[v]].push_back(v);
    }
}

PermutationGroup pointwise_stabilizer(const FiniteGraph& g, std::span<const Vertex> points,
                                      const SizeGuard& guard)
{
    guard.check(g);
    for (Vertex v : points) {
        g.check_vertex(v);
    }
    auto found = detail::search_group(g, points);
    return {g.vertex_count(), std::move(found.generators), std::move(found.order),
            std::vector<Vertex>(points.begin(), points.end())};
}

PermutationGroup automorphism_group(const FiniteGraph& g, const SizeGuard& guard)
{
    return pointwise_stabilizer(g, {}, guard);
}

PermutationGroup stabilizer(const FiniteGraph& g, Vertex x, const SizeGuard& guard)
{
    std::array<Vertex, 1> points{x};
    return pointwise_stabilizer(g, points, guard);
}

std::vector<std::vector<Vertex>> vertex_orbits(const FiniteGraph& g, const SizeGuard& guard)
{
    return automorphism_group(g, guard).orbits();
}

std::size_t stabilizer_orbit_size(const FiniteGraph& g, Vertex x, Vertex y,
                                  const SizeGuard& guard)
{
    g.check_vertex(y);
    return stabilizer(g, x, guard).orbit_of(y).size();
}

BigInt stabilizer_order(const FiniteGraph& g, Vertex x, const SizeGuard& guard)
{
    return stabilizer(g, x, guard).order();
}

bool is_rigid(const FiniteGraph& g, const SizeGuard& guard)
{
    return automorphism_group(g, guard).is_trivial();
}

bool is_vertex_transitive(const FiniteGraph& g, const SizeGuard& guard)
{
    return automorphism_group(g, guard).orbits().size() == 1;
}

bool is_automorphism(const FiniteGraph& g, const Permutation& p)
{
    return detail::is_automorphism(g, p);
}

Permutation compose(const Permutation& outer, const Permutation& inner)
{
    Permutation out(inner.size());
    for (Vertex v = 0; v < inner.size(); ++v) {
        out[v] = outer[inner[v]];
    }
    return out;
}

Permutation inverse(const Permutation& p)
{
    Permutation inv(p.size());
    for (Vertex v = 0; v < p.size(); ++v) {
        inv[p[v]] = v;
    }
    return inv;
}

Permutation identity_permutation(std::size_t degree)
{
    Permutation p(degree);
    std::iota(p.begin(), p.end(), Vertex{0});
    return p;
}

std::vector<std::optional<Permutation>> transversal(std::size_t degree,
                                                    std::span<const Permutation> gens,
                                                    Vertex start)
{
    std::vector<std::optional<Permutation>> out(degree);
    out[start] = identity_permutation(degree);
    std::vector<Vertex> queue{start};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex v = queue[i];
        for (const auto& gen : gens) {
            Vertex image = gen[v];
            if (!out[image]) {
                out[image] = compose(gen, *out[v]);
                queue.push_back(image);
            }
        }
    }
    return out;
}

} // namespace unimod
