#include "unimod/graph.hpp"

#include "unimod/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <set>

namespace unimod {

FiniteGraph::FiniteGraph(std::size_t vertex_count, std::span<const Edge> edges)
    : adjacency_(vertex_count)
{
    if (vertex_count == 0) {
        throw InvalidArgument("graph must have at least one vertex");
    }
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(vertex_count));
        }
        if (u == v) {
            throw InvalidArgument("loop at vertex " + std::to_string(u));
        }
        if (!seen.insert(std::minmax(u, v)).second) {
            throw InvalidArgument("duplicate edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
    }
    edge_count_ = seen.size();
}

std::span<const Vertex> FiniteGraph::neighbors(Vertex v) const
{
    check_vertex(v);
    return adjacency_[v];
}

bool FiniteGraph::adjacent(Vertex u, Vertex v) const
{
    auto nb = neighbors(u);
    check_vertex(v);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> FiniteGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

bool FiniteGraph::is_connected() const
{
    auto dist = distances_from(*this, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](std::size_t d) { return d == unreachable; });
}

void FiniteGraph::check_vertex(Vertex v) const
{
    if (v >= adjacency_.size()) {
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n=" +
                              std::to_string(adjacency_.size()));
    }
}

RootedGraph::RootedGraph(FiniteGraph g, Vertex r) : graph(std::move(g)), root(r)
{
    graph.check_vertex(root);
}

DoublyRootedGraph::DoublyRootedGraph(FiniteGraph g, Vertex primary, Vertex secondary)
    : graph(std::move(g)), primary_root(primary), secondary_root(secondary)
{
    graph.check_vertex(primary_root);
    graph.check_vertex(secondary_root);
}

std::size_t SizeGuard::default_max_vertices()
{
    if (const char* env = std::getenv("UNIMOD_MAX_VERTICES")) {
        std::size_t value = 0;
        std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc() && ptr == s.data() + s.size() && value > 0) {
            return value;
        }
    }
    return 64;
}

void SizeGuard::check(const FiniteGraph& g) const
{
    if (g.vertex_count() > max_vertices) {
        throw SizeGuardError(g.vertex_count(), max_vertices);
    }
}

namespace {

Vertex json_vertex(const nlohmann::json& j, const char* what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ParseError(std::string(what) + " must be a non-negative integer");
    }
    return static_cast<Vertex>(j.get<long long>());
}

} // namespace

GraphFile graph_file_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) {
        throw ParseError("graph must be a JSON object");
    }
    if (!j.contains("n") || !j.contains("edges")) {
        throw ParseError("graph requires \"n\" and \"edges\"");
    }
    const auto& n_json = j.at("n");
    if (!n_json.is_number_integer() || n_json.get<long long>() <= 0) {
        throw ParseError("\"n\" must be a positive integer");
    }
    auto n = static_cast<std::size_t>(n_json.get<long long>());
    const auto& edges_json = j.at("edges");
    if (!edges_json.is_array()) {
        throw ParseError("\"edges\" must be an array");
    }
    std::vector<Edge> edges;
    for (const auto& e : edges_json) {
        if (!e.is_array() || e.size() != 2) {
            throw ParseError("each edge must be a pair [i,j]");
        }
        edges.emplace_back(json_vertex(e[0], "edge endpoint"), json_vertex(e[1], "edge endpoint"));
    }
    try {
        GraphFile file{FiniteGraph(n, edges), std::nullopt, std::nullopt};
        if (j.contains("root")) {
            file.root = json_vertex(j.at("root"), "\"root\"");
            file.graph.check_vertex(*file.root);
        }
        if (j.contains("root2")) {
            file.root2 = json_vertex(j.at("root2"), "\"root2\"");
            file.graph.check_vertex(*file.root2);
        }
        return file;
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

GraphFile parse_graph_file(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return graph_file_from_json(j);
}

FiniteGraph parse_graph(std::string_view text) { return parse_graph_file(text).graph; }

nlohmann::json to_json(const FiniteGraph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

std::vector<std::size_t> distances_from(const FiniteGraph& g, Vertex x)
{
    g.check_vertex(x);
    std::vector<std::size_t> dist(g.vertex_count(), unreachable);
    std::deque<Vertex> queue{x};
    dist[x] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.neighbors(u)) {
            if (dist[v] == unreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::optional<std::size_t> distance(const FiniteGraph& g, Vertex x, Vertex y)
{
    g.check_vertex(y);
    std::size_t d = distances_from(g, x)[y];
    if (d == unreachable) {
        return std::nullopt;
    }
    return d;
}

std::size_t eccentricity(const FiniteGraph& g, Vertex x)
{
    std::size_t best = 0;
    for (std::size_t d : distances_from(g, x)) {
        if (d != unreachable) {
            best = std::max(best, d);
        }
    }
    return best;
}

std::optional<Vertex> InducedSubgraph::local(Vertex v) const
{
    auto it = std::lower_bound(original.begin(), original.end(), v);
    if (it == original.end() || *it != v) {
        return std::nullopt;
    }
    return static_cast<Vertex>(it - original.begin());
}

InducedSubgraph induced_subgraph(const FiniteGraph& g, std::vector<Vertex> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (vertices.empty()) {
        throw InvalidArgument("induced subgraph on an empty vertex set");
    }
    std::vector<std::size_t> index(g.vertex_count(), unreachable);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        g.check_vertex(vertices[i]);
        index[vertices[i]] = i;
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex v : g.neighbors(vertices[i])) {
            if (index[v] != unreachable && i < index[v]) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(index[v]));
            }
        }
    }
    return {FiniteGraph(vertices.size(), edges), std::move(vertices)};
}

InducedSubgraph ball_subgraph(const FiniteGraph& g, Vertex x, std::size_t r)
{
    auto dist = distances_from(g, x);
    std::vector<Vertex> inside;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] <= r) {
            inside.push_back(v);
        }
    }
    return induced_subgraph(g, std::move(inside));
}

RootedGraph ball(const FiniteGraph& g, Vertex x, std::size_t r)
{
    auto sub = ball_subgraph(g, x, r);
    Vertex root = *sub.local(x);
    return {std::move(sub.graph), root};
}

FiniteGraph path_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    }
    return {n, edges};
}

FiniteGraph cycle_graph(std::size_t n)
{
    if (n < 3) {
        throw InvalidArgument("cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    }
    return {n, edges};
}

FiniteGraph star_graph(std::size_t leaves)
{
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i) {
        edges.emplace_back(0, static_cast<Vertex>(i));
    }
    return {leaves + 1, edges};
}

FiniteGraph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return {n, edges};
}

FiniteGraph relabel(const FiniteGraph& g, std::span<const Vertex> permutation)
{
    if (permutation.size() != g.vertex_count()) {
        throw InvalidArgument("permutation size does not match graph");
    }
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex v : permutation) {
        if (v >= g.vertex_count() || seen[v]) {
            throw InvalidArgument("relabeling is not a permutation");
        }
        seen[v] = true;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(permutation[u], permutation[v]);
    }
    return {g.vertex_count(), edges};
}

} // namespace unimod
