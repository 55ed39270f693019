#include "unimod/detail/search.hpp"

#include <algorithm>
#include <numeric>

namespace unimod::detail {

Coloring initial_coloring(std::size_t n, std::span<const Vertex> prefix)
{
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    Coloring c{std::vector<std::uint32_t>(n, unset), 0};
    for (Vertex v : prefix) {
        if (c.color[v] == unset) {
            c.color[v] = c.cells++;
        }
    }
    bool rest = false;
    for (auto& col : c.color) {
        if (col == unset) {
            col = c.cells;
            rest = true;
        }
    }
    if (rest) {
        ++c.cells;
    }
    return c;
}

void refine(const FiniteGraph& g, Coloring& c)
{
    const std::size_t n = c.color.size();
    std::vector<std::vector<std::uint32_t>> keys(n);
    std::vector<Vertex> order(n);
    while (!c.discrete()) {
        for (Vertex v = 0; v < n; ++v) {
            auto& key = keys[v];
            key.clear();
            key.push_back(c.color[v]);
            for (Vertex u : g.neighbors(v)) {
                key.push_back(c.color[u]);
            }
            std::sort(key.begin() + 1, key.end());
        }
        std::iota(order.begin(), order.end(), Vertex{0});
        std::sort(order.begin(), order.end(),
                  [&](Vertex a, Vertex b) { return keys[a] < keys[b]; });
        std::uint32_t next = 0;
        std::vector<std::uint32_t> fresh(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && keys[order[i]] != keys[order[i - 1]]) {
                ++next;
            }
            fresh[order[i]] = next;
        }
        std::uint32_t cells = next + 1;
        c.color = std::move(fresh);
        if (cells == c.cells) {
            break;
        }
        c.cells = cells;
    }
}

Coloring individualize(const Coloring& c, Vertex v)
{
    const std::uint32_t cell = c.color[v];
    bool shared = false;
    for (Vertex u = 0; u < c.color.size() && !shared; ++u) {
        shared = u != v && c.color[u] == cell;
    }
    if (!shared) {
        return c;
    }
    Coloring out = c;
    for (Vertex u = 0; u < c.color.size(); ++u) {
        if (c.color[u] > cell || (c.color[u] == cell && u != v)) {
            ++out.color[u];
        }
    }
    ++out.cells;
    return out;
}

Coloring refined_individualize(const FiniteGraph& g, const Coloring& c, Vertex v)
{
    Coloring out = individualize(c, v);
    refine(g, out);
    return out;
}

std::optional<std::uint32_t> target_cell(const Coloring& c)
{
    if (c.discrete()) {
        return std::nullopt;
    }
    std::vector<std::uint32_t> size(c.cells, 0);
    for (auto col : c.color) {
        ++size[col];
    }
    for (std::uint32_t i = 0; i < c.cells; ++i) {
        if (size[i] > 1) {
            return i;
        }
    }
    return std::nullopt;
}

std::vector<Vertex> cell_members(const Coloring& c, std::uint32_t cell)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < c.color.size(); ++v) {
        if (c.color[v] == cell) {
            out.push_back(v);
        }
    }
    return out;
}

bool is_automorphism(const FiniteGraph& g, const Permutation& p)
{
    const std::size_t n = g.vertex_count();
    if (p.size() != n) {
        return false;
    }
    std::vector<bool> hit(n, false);
    for (Vertex v : p) {
        if (v >= n || hit[v]) {
            return false;
        }
        hit[v] = true;
    }
    for (auto [u, v] : g.edges()) {
        if (!g.adjacent(p[u], p[v])) {
            return false;
        }
    }
    return true;
}

namespace {

// Cell sizes plus the neighbor-color multiset of one member of each cell.
// Equal for two colorings related by an automorphism.
std::vector<std::vector<std::uint32_t>> cell_profile(const FiniteGraph& g, const Coloring& c)
{
    std::vector<std::vector<std::uint32_t>> profile(c.cells);
    std::vector<bool> done(c.cells, false);
    std::vector<std::uint32_t> size(c.cells, 0);
    for (Vertex v = 0; v < c.color.size(); ++v) {
        auto col = c.color[v];
        ++size[col];
        if (done[col]) {
            continue;
        }
        done[col] = true;
        for (Vertex u : g.neighbors(v)) {
            profile[col].push_back(c.color[u]);
        }
        std::sort(profile[col].begin(), profile[col].end());
    }
    for (std::uint32_t i = 0; i < c.cells; ++i) {
        profile[i].push_back(size[i]);
    }
    return profile;
}

bool compatible(const FiniteGraph& g, const Coloring& a, const Coloring& b)
{
    return a.cells == b.cells && cell_profile(g, a) == cell_profile(g, b);
}

std::optional<Permutation> isomorphism_search(const FiniteGraph& g, const Coloring& left,
                                              const Coloring& right)
{
    if (!compatible(g, left, right)) {
        return std::nullopt;
    }
    auto cell = target_cell(left);
    if (!cell) {
        std::vector<Vertex> by_color(right.color.size());
        for (Vertex v = 0; v < right.color.size(); ++v) {
            by_color[right.color[v]] = v;
        }
        Permutation p(left.color.size());
        for (Vertex v = 0; v < left.color.size(); ++v) {
            p[v] = by_color[left.color[v]];
        }
        if (is_automorphism(g, p)) {
            return p;
        }
        return std::nullopt;
    }
    Vertex v = cell_members(left, *cell).front();
    Coloring next_left = refined_individualize(g, left, v);
    for (Vertex w : cell_members(right, *cell)) {
        if (auto p = isomorphism_search(g, next_left, refined_individualize(g, right, w))) {
            return p;
        }
    }
    return std::nullopt;
}

bool fixes_all(const Permutation& p, std::span<const Vertex> points)
{
    return std::all_of(points.begin(), points.end(), [&](Vertex v) { return p[v] == v; });
}

std::string encode_adjacency(const FiniteGraph& g, const std::vector<Vertex>& labeling)
{
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> at(n);
    for (Vertex v = 0; v < n; ++v) {
        at[labeling[v]] = v;
    }
    std::string bits((n * (n - 1) / 2 + 7) / 8, '\0');
    std::size_t k = 0;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j, ++k) {
            if (g.adjacent(at[i], at[j])) {
                bits[k / 8] = static_cast<char>(static_cast<unsigned char>(bits[k / 8]) |
                                                (0x80U >> (k % 8)));
            }
        }
    }
    return bits;
}

Permutation inverse(const Permutation& p)
{
    Permutation inv(p.size());
    for (Vertex v = 0; v < p.size(); ++v) {
        inv[p[v]] = v;
    }
    return inv;
}

class CanonicalSearch {
public:
    CanonicalSearch(const FiniteGraph& g, std::vector<Permutation> gens)
        : g_(g), gens_(std::move(gens))
    {
    }

    void run(const Coloring& c, std::vector<Vertex>& path)
    {
        auto cell = target_cell(c);
        if (!cell) {
            leaf(c);
            return;
        }
        std::vector<bool> covered(c.color.size(), false);
        std::vector<Vertex> explored;
        for (Vertex w : cell_members(c, *cell)) {
            if (covered[w]) {
                continue;
            }
            path.push_back(w);
            run(refined_individualize(g_, c, w), path);
            path.pop_back();
            explored.push_back(w);
            // Leaves may have contributed new automorphisms; rebuild the
            // pruning orbits from everything that fixes the current path.
            std::vector<Permutation> fixing;
            for (const auto& p : gens_) {
                if (fixes_all(p, path)) {
                    fixing.push_back(p);
                }
            }
            for (Vertex e : explored) {
                for (Vertex u : orbit(c.color.size(), fixing, e)) {
                    covered[u] = true;
                }
            }
        }
    }

    CanonicalLabeling result() const { return best_; }

private:
    void leaf(const Coloring& c)
    {
        std::vector<Vertex> labeling(c.color.begin(), c.color.end());
        std::string bits = encode_adjacency(g_, labeling);
        if (!have_best_ || bits < best_.adjacency_bits) {
            best_ = {std::move(labeling), std::move(bits)};
            have_best_ = true;
        } else if (bits == best_.adjacency_bits) {
            // best^{-1} o current maps this leaf onto the best one.
            Permutation to_best = inverse(best_.labeling);
            Permutation automorphism(labeling.size());
            for (Vertex v = 0; v < labeling.size(); ++v) {
                automorphism[v] = to_best[labeling[v]];
            }
            gens_.push_back(std::move(automorphism));
        }
    }

    const FiniteGraph& g_;
    std::vector<Permutation> gens_;
    CanonicalLabeling best_;
    bool have_best_ = false;
};

} // namespace

std::optional<Permutation> find_isomorphism(const FiniteGraph& g, const Coloring& left,
                                            const Coloring& right)
{
    return isomorphism_search(g, left, right);
}

GroupSearchResult search_group(const FiniteGraph& g, std::span<const Vertex> prefix)
{
    const std::size_t n = g.vertex_count();
    std::vector<Coloring> levels;
    levels.push_back(initial_coloring(n, prefix));
    refine(g, levels.back());
    GroupSearchResult result;
    while (auto cell = target_cell(levels.back())) {
        Vertex b = cell_members(levels.back(), *cell).front();
        result.base.push_back(b);
        levels.push_back(refined_individualize(g, levels.back(), b));
    }
    result.basic_orbit_sizes.assign(result.base.size(), 1);
    for (std::size_t i = result.base.size(); i-- > 0;) {
        const Coloring& here = levels[i];
        Vertex b = result.base[i];
        auto members = cell_members(here, here.color[b]);
        std::vector<bool> in_orbit(n, false);
        auto mark = [&] {
            for (Vertex u : orbit(n, result.generators, b)) {
                in_orbit[u] = true;
            }
        };
        mark();
        for (Vertex w : members) {
            if (in_orbit[w]) {
                continue;
            }
            if (auto p = find_isomorphism(g, levels[i + 1], refined_individualize(g, here, w))) {
                result.generators.push_back(std::move(*p));
                mark();
            }
        }
        result.basic_orbit_sizes[i] = orbit(n, result.generators, b).size();
        result.order *= static_cast<unsigned long>(result.basic_orbit_sizes[i]);
    }
    return result;
}

CanonicalLabeling canonical_labeling(const FiniteGraph& g, std::span<const Vertex> prefix,
                                     std::vector<Permutation> generators)
{
    Coloring start = initial_coloring(g.vertex_count(), prefix);
    refine(g, start);
    CanonicalSearch search(g, std::move(generators));
    std::vector<Vertex> path;
    search.run(start, path);
    return search.result();
}

std::vector<Vertex> orbit(std::size_t degree, std::span<const Permutation> gens, Vertex start)
{
    std::vector<bool> seen(degree, false);
    std::vector<Vertex> out{start};
    seen[start] = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& p : gens) {
            Vertex image = p[out[i]];
            if (!seen[image]) {
                seen[image] = true;
                out.push_back(image);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> orbit_ids(std::size_t degree, std::span<const Permutation> gens)
{
    constexpr auto none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> id(degree, none);
    std::size_t next = 0;
    for (Vertex v = 0; v < degree; ++v) {
        if (id[v] != none) {
            continue;
        }
        for (Vertex u : orbit(degree, gens, v)) {
            id[u] = next;
        }
        ++next;
    }
    return id;
}

} // namespace unimod::detail
