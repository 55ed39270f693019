#include "unimod/families.hpp"

#include "unimod/errors.hpp"

#include <algorithm>

namespace unimod {

namespace {

void check_degree(int degree)
{
    if (degree < 3) {
        throw InvalidArgument("tree degree must be at least 3, got " + std::to_string(degree));
    }
}

// Downward path from r_-top to the vertex.
std::vector<int> expanded(const TreeAddress& a, std::size_t top)
{
    std::vector<int> out(top - a.ascent, 0);
    out.insert(out.end(), a.path.begin(), a.path.end());
    return out;
}

std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

} // namespace

TreeCoordinates::TreeCoordinates(int degree) : degree_(degree) { check_degree(degree); }

void TreeCoordinates::validate(const TreeAddress& a) const
{
    for (int step : a.path) {
        if (step < 0 || step > degree_ - 2) {
            throw InvalidArgument("child index " + std::to_string(step) + " outside 0.." +
                                  std::to_string(degree_ - 2));
        }
    }
}

TreeAddress TreeCoordinates::normalize(const TreeAddress& a) const
{
    validate(a);
    TreeAddress out = a;
    std::size_t strip = 0;
    while (strip < out.path.size() && out.ascent > strip && out.path[strip] == 0) {
        ++strip;
    }
    out.ascent -= strip;
    out.path.erase(out.path.begin(), out.path.begin() + static_cast<long>(strip));
    return out;
}

TreeAddress TreeCoordinates::parent(const TreeAddress& a) const
{
    TreeAddress out = normalize(a);
    if (out.path.empty()) {
        ++out.ascent;
    } else {
        out.path.pop_back();
    }
    return out;
}

TreeAddress TreeCoordinates::child(const TreeAddress& a, int index) const
{
    TreeAddress out = a;
    out.path.push_back(index);
    return normalize(out);
}

std::pair<std::size_t, std::size_t> TreeCoordinates::climbs_to_meet(const TreeAddress& x,
                                                                    const TreeAddress& y) const
{
    TreeAddress nx = normalize(x);
    TreeAddress ny = normalize(y);
    std::size_t top = std::max(nx.ascent, ny.ascent);
    auto ex = expanded(nx, top);
    auto ey = expanded(ny, top);
    auto [ix, iy] = std::mismatch(ex.begin(), ex.end(), ey.begin(), ey.end());
    auto common = static_cast<std::size_t>(ix - ex.begin());
    return {ex.size() - common, ey.size() - common};
}

std::size_t TreeCoordinates::tree_distance(const TreeAddress& x, const TreeAddress& y) const
{
    auto [u, v] = climbs_to_meet(x, y);
    return u + v;
}

long busemann(const TreeCoordinates& coords, const TreeAddress& x, const TreeAddress& y)
{
    coords.validate(x);
    coords.validate(y);
    return y.level() - x.level();
}

Rational grandfather_cocycle(int degree, const TreeAddress& x, const TreeAddress& y)
{
    TreeCoordinates coords(degree);
    return power(Rational(degree - 1), busemann(coords, x, y));
}

std::size_t grandfather_distance(int degree, const TreeAddress& x, const TreeAddress& y)
{
    // Every edge moves one or two levels along a vertical line; the best path
    // climbs to the common ancestor and descends, two levels per edge.
    TreeCoordinates coords(degree);
    auto [u, v] = coords.climbs_to_meet(x, y);
    return ceil_half(u) + ceil_half(v);
}

std::pair<std::size_t, long> grandfather_pair_class(int degree, const TreeAddress& x,
                                                    const TreeAddress& y)
{
    TreeCoordinates coords(degree);
    return {grandfather_distance(degree, x, y), busemann(coords, x, y)};
}

std::size_t homogeneous_pair_class(int degree, const TreeAddress& x, const TreeAddress& y)
{
    return TreeCoordinates(degree).tree_distance(x, y);
}

Rational canopy_quotient_cocycle(int degree, long level, long other_level)
{
    check_degree(degree);
    if (level > 0 || other_level > 0) {
        throw InvalidArgument("canopy levels are non-positive");
    }
    return power(Rational(degree - 1), other_level - level);
}

Rational canopy_summability(int degree, long level)
{
    check_degree(degree);
    if (level > 0) {
        throw InvalidArgument("canopy levels are non-positive");
    }
    return power(Rational(degree - 1), -level) * make_rational(degree - 1, degree - 2);
}

Rational CanopyMeasureTable::total() const
{
    Rational sum = tail;
    for (const auto& [level, mass] : levels) {
        sum += mass;
    }
    return sum;
}

CanopyMeasureTable canopy_unimodular_measure(int degree, std::size_t truncation_depth)
{
    check_degree(degree);
    CanopyMeasureTable table{degree, {}, 0};
    Rational top = make_rational(degree - 2, degree - 1);
    for (std::size_t k = 0; k <= truncation_depth; ++k) {
        long level = -static_cast<long>(k);
        table.levels.emplace_back(level, power(Rational(degree - 1), level) * top);
    }
    table.tail = power(Rational(degree - 1), -static_cast<long>(truncation_depth) - 1);
    return table;
}

FiniteGraph finite_canopy(int degree, std::size_t height, const SizeGuard& guard)
{
    check_degree(degree);
    if (height < 1) {
        throw InvalidArgument("finite canopy needs height >= 1");
    }
    const auto branching = static_cast<std::size_t>(degree - 1);
    std::size_t count = 0;
    std::size_t layer = 1;
    for (std::size_t k = 0; k <= height; ++k) {
        count += layer;
        if (count > guard.max_vertices) {
            throw SizeGuardError(count, guard.max_vertices);
        }
        layer *= branching;
    }
    std::vector<Edge> edges;
    std::size_t next = 1;
    for (std::size_t v = 0; next < count; ++v) {
        for (std::size_t c = 0; c < branching; ++c, ++next) {
            edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(next));
        }
    }
    return {count, edges};
}

long finite_canopy_level(int degree, std::size_t height, Vertex v)
{
    check_degree(degree);
    const auto branching = static_cast<std::size_t>(degree - 1);
    std::size_t first = 0;
    std::size_t layer = 1;
    for (std::size_t depth = 0; depth <= height; ++depth) {
        if (v < first + layer) {
            return static_cast<long>(depth) - static_cast<long>(height);
        }
        first += layer;
        layer *= branching;
    }
    throw InvalidArgument("vertex outside the finite canopy");
}

std::string to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::homogeneous_tree:
        return "homogeneous_tree";
    case FamilyKind::grandfather_graph:
        return "grandfather";
    case FamilyKind::canopy_tree:
        return "canopy";
    }
    return {};
}

FamilyKind parse_family_kind(std::string_view name)
{
    if (name == "homogeneous_tree" || name == "tree") {
        return FamilyKind::homogeneous_tree;
    }
    if (name == "grandfather" || name == "grandfather_graph") {
        return FamilyKind::grandfather_graph;
    }
    if (name == "canopy" || name == "canopy_tree") {
        return FamilyKind::canopy_tree;
    }
    throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

SymbolicFamily::SymbolicFamily(FamilyKind k, int d) : kind(k), degree(d) { check_degree(d); }

FamilyReport family_report(const SymbolicFamily& f, std::size_t levels)
{
    switch (f.kind) {
    case FamilyKind::homogeneous_tree:
        return {f, "singleton", "Z_+ (distance)", "1", true, true, true, Rational(1),
                std::nullopt, true};
    case FamilyKind::grandfather_graph:
        return {f, "singleton", "Z_+ x Z (distance, horodistance)", "(d-1)^beta(x,y)", false,
                false, false, std::nullopt, std::nullopt, false};
    case FamilyKind::canopy_tree: {
        if (levels == 0) {
            throw InvalidArgument("canopy report needs at least one level");
        }
        return {f, "Z_-", "level pairs", "(d-1)^(n'-n)", true, true, true,
                canopy_summability(f.degree, 0), canopy_unimodular_measure(f.degree, levels - 1),
                false};
    }
    }
    throw InvalidArgument("unknown family");
}

HopfVerdict hopf_classification(const SymbolicFamily& f)
{
    auto report = family_report(f, 1);
    if (!report.quotient_cocycle_exists) {
        return {to_string(f.kind), false, false, std::nullopt, "none"};
    }
    return {to_string(f.kind), true, report.summable, report.cocycle_sum, "dissipative"};
}

} // namespace unimod
