#ifndef UNIMOD_GRAPH_HPP
#define UNIMOD_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace unimod {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class FiniteGraph {
public:
    // Throws InvalidArgument on loops, duplicate edges, out-of-range
    // endpoints or n == 0.
    FiniteGraph(std::size_t vertex_count, std::span<const Edge> edges);
    FiniteGraph(std::size_t vertex_count, std::initializer_list<Edge> edges)
        : FiniteGraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    // Sorted ascending.
    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    // Each edge once, as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    bool is_connected() const;

    // Throws InvalidArgument unless v < vertex_count().
    void check_vertex(Vertex v) const;

    friend bool operator==(const FiniteGraph&, const FiniteGraph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

struct RootedGraph {
    RootedGraph(FiniteGraph g, Vertex r);

    FiniteGraph graph;
    Vertex root;
};

// The two roots may coincide.
struct DoublyRootedGraph {
    DoublyRootedGraph(FiniteGraph g, Vertex primary, Vertex secondary);

    FiniteGraph graph;
    Vertex primary_root;
    Vertex secondary_root;
};

// Upper bound on the vertex count accepted by the backtracking searches.
// The default is 64, overridden by the UNIMOD_MAX_VERTICES environment
// variable.
struct SizeGuard {
    std::size_t max_vertices = default_max_vertices();

    void check(const FiniteGraph& g) const;

    static std::size_t default_max_vertices();
};

// Contents of a graph file: {"n":..,"edges":[[i,j],..],"root":..,"root2":..}.
struct GraphFile {
    FiniteGraph graph;
    std::optional<Vertex> root;
    std::optional<Vertex> root2;
};

GraphFile parse_graph_file(std::string_view text);
GraphFile graph_file_from_json(const nlohmann::json& j);
FiniteGraph parse_graph(std::string_view text);

nlohmann::json to_json(const FiniteGraph& g);

// nullopt when x and y lie in different components.
std::optional<std::size_t> distance(const FiniteGraph& g, Vertex x, Vertex y);

inline constexpr std::size_t unreachable = static_cast<std::size_t>(-1);

// BFS distances from x; unreachable vertices get `unreachable`.
std::vector<std::size_t> distances_from(const FiniteGraph& g, Vertex x);

std::size_t eccentricity(const FiniteGraph& g, Vertex x);

// Induced subgraph on a vertex set. `original[i]` is the vertex of the
// source graph that became vertex i; vertices keep their relative order.
struct InducedSubgraph {
    FiniteGraph graph;
    std::vector<Vertex> original;

    std::optional<Vertex> local(Vertex v) const;
};

InducedSubgraph induced_subgraph(const FiniteGraph& g, std::vector<Vertex> vertices);

// Induced subgraph on {y : dist(x, y) <= r}, rooted at the copy of x.
RootedGraph ball(const FiniteGraph& g, Vertex x, std::size_t r);
InducedSubgraph ball_subgraph(const FiniteGraph& g, Vertex x, std::size_t r);

// Small named graphs used throughout tests and examples.
FiniteGraph path_graph(std::size_t n);
FiniteGraph cycle_graph(std::size_t n);
FiniteGraph star_graph(std::size_t leaves);
FiniteGraph complete_graph(std::size_t n);

FiniteGraph relabel(const FiniteGraph& g, std::span<const Vertex> permutation);

} // namespace unimod

#endif // UNIMOD_GRAPH_HPP
