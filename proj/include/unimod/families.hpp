#ifndef UNIMOD_FAMILIES_HPP
#define UNIMOD_FAMILIES_HPP

#include "unimod/graph.hpp"
#include "unimod/measures.hpp"
#include "unimod/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace unimod {

// Vertex of the homogeneous tree T_d, addressed relative to a base vertex o
// and a boundary point w. The w-ray from o is o = r_0, r_-1, r_-2, ...;
// each vertex has one parent (towards w) and d-1 children. A vertex is
// reached by climbing `ascent` steps from o along the ray and then walking
// down `path`, where each entry picks a child in 0..d-2. At a ray vertex
// r_-k (k >= 1) child 0 is the ray vertex r_-k+1, so a normalized address
// with ascent >= 1 never starts its path with 0.
struct TreeAddress {
    std::size_t ascent = 0;
    std::vector<int> path;

    // Busemann level: beta(o, x).
    long level() const { return static_cast<long>(path.size()) - static_cast<long>(ascent); }

    friend bool operator==(const TreeAddress&, const TreeAddress&) = default;
};

class TreeCoordinates {
public:
    // Throws InvalidArgument for degree < 3.
    explicit TreeCoordinates(int degree);

    int degree() const { return degree_; }

    // Throws InvalidArgument for child indices outside 0..d-2.
    void validate(const TreeAddress& a) const;

    // Canonical form: strips leading ray steps so equal vertices compare equal.
    TreeAddress normalize(const TreeAddress& a) const;

    TreeAddress parent(const TreeAddress& a) const;
    TreeAddress child(const TreeAddress& a, int index) const;

    std::size_t tree_distance(const TreeAddress& x, const TreeAddress& y) const;

    // Steps from x and from y up to their last common ancestor.
    std::pair<std::size_t, std::size_t> climbs_to_meet(const TreeAddress& x,
                                                       const TreeAddress& y) const;

private:
    int degree_;
};

// beta_w(x, y) = level(y) - level(x).
long busemann(const TreeCoordinates& coords, const TreeAddress& x, const TreeAddress& y);

// Grandfather graph: tree edges plus an edge from every vertex to its
// grandparent. Its modular cocycle is (d-1)^beta(x,y).
Rational grandfather_cocycle(int degree, const TreeAddress& x, const TreeAddress& y);

// Graph distance in the grandfather graph.
std::size_t grandfather_distance(int degree, const TreeAddress& x, const TreeAddress& y);

// Pair-class coordinates (distance, horodistance).
std::pair<std::size_t, long> grandfather_pair_class(int degree, const TreeAddress& x,
                                                    const TreeAddress& y);

// The homogeneous tree is distance transitive: pair classes are distances.
std::size_t homogeneous_pair_class(int degree, const TreeAddress& x, const TreeAddress& y);

// Canopy tree: union of the horospheres H_n, n <= 0. Its orbit classes are
// the levels and its quotient cocycle is (d-1)^(n' - n).
Rational canopy_quotient_cocycle(int degree, long level, long other_level);

// sum over n' <= 0 of (d-1)^(n' - n) = (d-1)^(-n) (d-1)/(d-2).
Rational canopy_summability(int degree, long level);

struct CanopyMeasureTable {
    int degree;
    std::vector<std::pair<long, Rational>> levels; // 0, -1, ..., -h
    Rational tail;                                 // mass below level -h

    Rational total() const;
};

// mu(n) = (d-1)^n (d-2)/(d-1) on levels 0..-h, tail (d-1)^(-h-1).
CanopyMeasureTable canopy_unimodular_measure(int degree, std::size_t truncation_depth);

// Rooted tree of depth h whose non-leaves have d-1 children; vertex 0 is
// the top, vertices are numbered breadth first.
FiniteGraph finite_canopy(int degree, std::size_t height, const SizeGuard& guard = {});

// Canopy level of a vertex of finite_canopy(d, h): tree depth minus h.
long finite_canopy_level(int degree, std::size_t height, Vertex v);

enum class FamilyKind { homogeneous_tree, grandfather_graph, canopy_tree };

std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

struct SymbolicFamily {
    FamilyKind kind;
    int degree;

    // Throws InvalidArgument for degree < 3.
    SymbolicFamily(FamilyKind k, int d);

    bool group_unimodular() const { return kind != FamilyKind::grandfather_graph; }
    bool quotient_is_singleton() const { return kind != FamilyKind::canopy_tree; }
};

struct FamilyReport {
    SymbolicFamily family;
    std::string quotient;          // "singleton" or "Z_-"
    std::string pair_classes;      // description of the pair quotient
    std::string cocycle_formula;
    bool group_unimodular;
    bool quotient_cocycle_exists;
    bool summable;
    std::optional<Rational> cocycle_sum; // at the base class / level 0
    std::optional<CanopyMeasureTable> unimodular_measure;
    bool point_mass; // unimodular measure is the point mass on the single class
};

FamilyReport family_report(const SymbolicFamily& f, std::size_t levels = 5);

HopfVerdict hopf_classification(const SymbolicFamily& f);

} // namespace unimod

#endif // UNIMOD_FAMILIES_HPP
