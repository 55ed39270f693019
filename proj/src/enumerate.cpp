#include "unimod/enumerate.hpp"

#include "unimod/canonical.hpp"
#include "unimod/errors.hpp"

#include <map>

namespace unimod {

std::vector<FiniteGraph> connected_graphs(std::size_t n)
{
    if (n == 0) {
        throw InvalidArgument("no graphs on zero vertices");
    }
    if (n == 1) {
        return {FiniteGraph(1, {})};
    }
    std::map<CanonicalCode, FiniteGraph> found;
    for (const auto& smaller : connected_graphs(n - 1)) {
        auto base = smaller.edges();
        const std::size_t m = n - 1;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
            auto edges = base;
            for (Vertex v = 0; v < m; ++v) {
                if (mask & (std::uint64_t{1} << v)) {
                    edges.emplace_back(v, static_cast<Vertex>(m));
                }
            }
            FiniteGraph g(n, edges);
            auto code = canonical_code(g, SizeGuard{n});
            if (!found.contains(code)) {
                found.emplace(code, decode(code).graph);
            }
        }
    }
    std::vector<FiniteGraph> out;
    out.reserve(found.size());
    for (auto& [code, g] : found) {
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<FiniteGraph> connected_graphs_up_to(std::size_t max_n)
{
    std::vector<FiniteGraph> out;
    std::vector<FiniteGraph> layer;
    for (std::size_t n = 1; n <= max_n; ++n) {
        layer = connected_graphs(n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace unimod
