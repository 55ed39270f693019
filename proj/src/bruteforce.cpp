#include "unimod/bruteforce.hpp"

#include "unimod/errors.hpp"

#include <algorithm>
#include <numeric>

namespace unimod::bruteforce {

std::vector<Permutation> automorphisms(const FiniteGraph& g)
{
    const std::size_t n = g.vertex_count();
    if (n > max_vertices) {
        throw InvalidArgument("brute-force enumeration limited to " +
                              std::to_string(max_vertices) + " vertices");
    }
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) {
        adj[u][v] = adj[v][u] = true;
    }
    std::vector<Permutation> out;
    Permutation p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    do {
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u) {
            for (Vertex v = u + 1; v < n && ok; ++v) {
                ok = adj[u][v] == adj[p[u]][p[v]];
            }
        }
        if (ok) {
            out.push_back(p);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::vector<Vertex>> orbits(const FiniteGraph& g, const std::vector<Permutation>& autos)
{
    const std::size_t n = g.vertex_count();
    std::vector<bool> done(n, false);
    std::vector<std::vector<Vertex>> out;
    for (Vertex v = 0; v < n; ++v) {
        if (done[v]) {
            continue;
        }
        std::vector<Vertex> orbit;
        for (const auto& p : autos) {
            orbit.push_back(p[v]);
        }
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (Vertex u : orbit) {
            done[u] = true;
        }
        out.push_back(std::move(orbit));
    }
    return out;
}

std::size_t stabilizer_orbit_size(const std::vector<Permutation>& autos, Vertex x, Vertex y)
{
    std::vector<Vertex> images;
    for (const auto& p : autos) {
        if (p[x] == x) {
            images.push_back(p[y]);
        }
    }
    std::sort(images.begin(), images.end());
    return static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
}

std::size_t stabilizer_order(const std::vector<Permutation>& autos, Vertex x)
{
    return static_cast<std::size_t>(
        std::count_if(autos.begin(), autos.end(), [&](const Permutation& p) { return p[x] == x; }));
}

std::vector<FiniteGraph> labeled_connected_graphs(std::size_t n)
{
    if (n == 0 || n > 6) {
        throw InvalidArgument("labeled enumeration limited to 1..6 vertices");
    }
    std::vector<Edge> slots;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            slots.emplace_back(i, j);
        }
    }
    std::vector<FiniteGraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if (mask & (std::uint64_t{1} << k)) {
                edges.push_back(slots[k]);
            }
        }
        FiniteGraph g(n, edges);
        if (g.is_connected()) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

} // namespace unimod::bruteforce
