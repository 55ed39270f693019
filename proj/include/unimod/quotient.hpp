#ifndef UNIMOD_QUOTIENT_HPP
#define UNIMOD_QUOTIENT_HPP

#include "unimod/automorphisms.hpp"
#include "unimod/canonical.hpp"
#include "unimod/graph.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace unimod {

// One Aut-orbit of vertices, i.e. a point of the orbital quotient.
struct OrbitClass {
    CanonicalCode code; // rooted code of (g, representative)
    Vertex representative;
    std::vector<Vertex> members;
};

struct QuotientGraph {
    std::vector<OrbitClass> classes; // sorted by code
    std::set<std::pair<std::size_t, std::size_t>> adjacency; // symmetric

    bool adjacent(std::size_t a, std::size_t b) const { return adjacency.contains({a, b}); }
};

// One Aut-orbit of ordered vertex pairs (diagonal included).
struct PairClass {
    CanonicalCode code; // doubly rooted code of (g, primary, secondary)
    Vertex primary;
    Vertex secondary;
    std::size_t primary_class;   // projection to the orbital quotient
    std::size_t secondary_class;
    std::size_t fiber_weight;    // card(G_primary secondary)
    std::size_t involution;      // class of (secondary, primary)
};

struct PairQuotient {
    std::vector<PairClass> classes; // sorted by code
};

// Weights of the pair classes over one orbit class; they sum to |g|.
struct FiberMeasure {
    std::size_t base_class;
    std::map<std::size_t, std::size_t> weights; // pair class -> card(G_x y)

    std::size_t total() const;
};

// Everything the quotient, cocycle and measure code needs about one
// connected graph, computed once: the group, stabilizers of the class
// representatives, both quotients, and maps from vertices to classes.
class GraphStructure {
public:
    // Throws DisconnectedError or SizeGuardError.
    explicit GraphStructure(FiniteGraph g, const SizeGuard& guard = {});

    const FiniteGraph& graph() const { return graph_; }
    const CanonicalCode& code() const { return code_; }
    const PermutationGroup& group() const { return group_; }
    const QuotientGraph& quotient() const { return quotient_; }
    const PairQuotient& pairs() const { return pairs_; }

    std::size_t class_of(Vertex v) const { return class_of_.at(v); }
    std::size_t pair_class_of(Vertex x, Vertex y) const;

    // Stabilizer of the representative of an orbit class.
    const PermutationGroup& representative_stabilizer(std::size_t orbit_class) const
    {
        return stabilizers_.at(orbit_class);
    }

    // Index of the class with the given rooted code, if any.
    std::optional<std::size_t> find_class(const CanonicalCode& code) const;
    std::optional<std::size_t> find_pair_class(const CanonicalCode& code) const;

private:
    FiniteGraph graph_;
    CanonicalCode code_;
    PermutationGroup group_;
    std::vector<PermutationGroup> stabilizers_;
    QuotientGraph quotient_;
    PairQuotient pairs_;
    std::vector<std::size_t> class_of_;
    // to_representative_[v] maps v onto the representative of its class.
    std::vector<Permutation> to_representative_;
    // (orbit class, orbit index under the representative stabilizer) -> pair class
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_lookup_;
};

QuotientGraph orbital_quotient(const FiniteGraph& g, const SizeGuard& guard = {});
PairQuotient pair_quotient(const FiniteGraph& g, const SizeGuard& guard = {});

FiberMeasure fiber_measure(const GraphStructure& s, std::size_t orbit_class);
FiberMeasure fiber_measure(const FiniteGraph& g, std::size_t orbit_class,
                           const SizeGuard& guard = {});

// Fiber over the class of x computed from x itself through a fresh
// stabilizer search; agrees with fiber_measure for every x in the class.
FiberMeasure fiber_measure_at(const GraphStructure& s, Vertex x);

// sigma: pair class -> (class of primary, class of secondary).
std::vector<std::pair<std::size_t, std::size_t>> sigma_map(const GraphStructure& s);
bool sigma_is_bijective(const GraphStructure& s);

// Modular function on each pair class equals the ratio of fiber weights of
// the class and of its involution image, exactly.
bool modular_ratio_check(const GraphStructure& s);
bool modular_ratio_check(const FiniteGraph& g, const SizeGuard& guard = {});

} // namespace unimod

#endif // UNIMOD_QUOTIENT_HPP
