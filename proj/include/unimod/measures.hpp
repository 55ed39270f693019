#ifndef UNIMOD_MEASURES_HPP
#define UNIMOD_MEASURES_HPP

#include "unimod/canonical.hpp"
#include "unimod/graph.hpp"
#include "unimod/quotient.hpp"
#include "unimod/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace unimod {

struct MeasureAtom {
    RootedGraph rooted;       // first concrete representative seen
    CanonicalCode code;       // rooted class
    CanonicalCode graph_code; // unrooted class, i.e. the R-class
    Rational weight;
};

// Finitely supported measure on rooted-graph classes with exact positive
// weights. Atoms that are isomorphic as rooted graphs are merged by adding
// their weights. Not normalized unless asked.
class RootedMeasure {
public:
    // Throws InvalidArgument for weight <= 0, DisconnectedError for a
    // disconnected graph, SizeGuardError above the guard.
    void add(const RootedGraph& rooted, const Rational& weight, const SizeGuard& guard = {});
    void add(const FiniteGraph& g, Vertex root, const Rational& weight,
             const SizeGuard& guard = {});

    const std::map<CanonicalCode, MeasureAtom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }
    std::size_t size() const { return atoms_.size(); }

    // Zero when the class is not in the support.
    Rational weight(const CanonicalCode& code) const;
    Rational total_mass() const;

    RootedMeasure scaled(const Rational& factor) const;

    friend bool operator==(const RootedMeasure& a, const RootedMeasure& b);

private:
    std::map<CanonicalCode, MeasureAtom> atoms_;
};

RootedMeasure normalize(const RootedMeasure& mu);

// Measure file: {"atoms":[{"graph":{..},"root":k,"weight":"p/q"},..]}.
// An empty atom list is a ParseError.
RootedMeasure parse_measure(std::string_view text, const SizeGuard& guard = {});
RootedMeasure measure_from_json(const nlohmann::json& j, const SizeGuard& guard = {});
nlohmann::json to_json(const RootedMeasure& mu);

// Pairs (xi, eta) of rooted classes in one R-class, weighted by
// integrating the counting measure on each R-class against mu.
using RelationCountingMeasure = std::map<std::pair<CanonicalCode, CanonicalCode>, Rational>;

struct PairAtom {
    DoublyRootedGraph representative;
    CanonicalCode swapped; // code of the root-swapped class
    Rational weight;
};

// Doubly rooted classes weighted by integrating the fiber measures.
using PairCountingMeasure = std::map<CanonicalCode, PairAtom>;

RelationCountingMeasure counting_measure_R(const RootedMeasure& mu, const SizeGuard& guard = {});
PairCountingMeasure counting_measure_pairs(const RootedMeasure& mu, const SizeGuard& guard = {});

bool is_invariant(const RootedMeasure& mu, const SizeGuard& guard = {});
bool is_unimodular(const RootedMeasure& mu, const SizeGuard& guard = {});

// Finite-support quasi-invariance: the support is a union of whole
// R-classes. This is the saturation criterion specialized to atomic
// measures.
bool is_quasi_invariant(const RootedMeasure& mu, const SizeGuard& guard = {});
bool is_quasi_unimodular(const RootedMeasure& mu, const SizeGuard& guard = {});

struct MissingClass {
    CanonicalCode code;
    RootedGraph rooted;
};

// Classes in the R-class of some atom that carry no weight.
std::vector<MissingClass> missing_classes(const RootedMeasure& mu, const SizeGuard& guard = {});

// (xi, eta) -> mu(eta) / mu(xi) for supported classes in one R-class.
using RNCocycleTable = std::map<std::pair<CanonicalCode, CanonicalCode>, Rational>;

// Throws PreconditionError unless mu is quasi-invariant.
RNCocycleTable rn_cocycle(const RootedMeasure& mu, const SizeGuard& guard = {});

struct ThmMainRow {
    CanonicalCode pair_class;
    Rational involution_ratio; // M(swap theta) / M(theta)
    Rational predicted;        // Delta_mu(sigma theta) / Delta(theta)
};

struct ThmMainCheck {
    bool holds = true;
    std::vector<ThmMainRow> rows;
};

// Radon-Nikodym derivative of the pair counting measure under the root
// swap against the pulled back RN cocycle over the modular function.
// Throws PreconditionError unless mu is quasi-invariant.
ThmMainCheck verify_thm_main(const RootedMeasure& mu, const SizeGuard& guard = {});

struct ThmMVerdict {
    bool group_unimodular = true; // automatic for finite atoms
    bool quasi_invariant = false;
    bool rn_matches_quotient_cocycle = false;
    bool conjunction = false;
    bool unimodular = false;

    bool consistent() const { return conjunction == unimodular; }
};

ThmMVerdict verify_thm_m(const RootedMeasure& mu, const SizeGuard& guard = {});

// Uniform probability over the orbit classes of g.
RootedMeasure invariant_measure(const FiniteGraph& g, const SizeGuard& guard = {});

// The unique unimodular probability measure on the orbital quotient:
// weights proportional to 1 / |G_x|.
RootedMeasure unimodular_measure(const FiniteGraph& g, const SizeGuard& guard = {});

// f(g, x, y): mass sent from x to y. Must be isomorphism invariant.
using KernelFunction = std::function<Rational(const FiniteGraph&, Vertex, Vertex)>;

// Closed, serializable kernel family:
//   neighbor_deg k  - 1 to each neighbor of degree k
//   distance k      - 1 to each vertex at distance exactly k
//   ball_match r c  - 1 to y iff dist(x,y) <= r and the r-ball around x,
//                     doubly rooted at (x, y), has canonical code c
class TransportKernel {
public:
    enum class Kind { neighbor_degree, distance, ball_match };

    static TransportKernel neighbor_degree(std::size_t k);
    static TransportKernel distance(std::size_t k);
    static TransportKernel ball_match(std::size_t radius, CanonicalCode code);

    // Throws ParseError.
    static TransportKernel from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    Kind kind() const { return kind_; }
    std::size_t parameter() const { return parameter_; }
    const CanonicalCode& code() const { return code_; }

    // Largest distance between sender and receiver.
    std::size_t range() const;

    Rational operator()(const FiniteGraph& g, Vertex x, Vertex y) const;

private:
    TransportKernel(Kind kind, std::size_t parameter, CanonicalCode code)
        : kind_(kind), parameter_(parameter), code_(std::move(code))
    {
    }

    Kind kind_;
    std::size_t parameter_;
    CanonicalCode code_;
};

struct TransportBalance {
    Rational lhs; // sum_atoms w(g,x) sum_y f(g,x,y)
    Rational rhs; // sum_atoms w(g,x) sum_y f(g,y,x)
    bool equal = false;
};

TransportBalance mass_transport_check(const RootedMeasure& mu, const KernelFunction& kernel);
TransportBalance mass_transport_check(const RootedMeasure& mu, const TransportKernel& kernel);

// Same results as calling mass_transport_check per kernel, sharing ball
// codes between kernels.
std::vector<TransportBalance> mass_transport_batch(const RootedMeasure& mu,
                                                   std::span<const TransportKernel> kernels);

// neighbor_deg for every degree present, distance 0..max_range, and
// ball_match for every doubly rooted ball (radius 1..max eccentricity)
// whose roots are at most max_range apart, over the support of mu.
std::vector<TransportKernel> builtin_kernels(const RootedMeasure& mu, std::size_t max_range);

struct ErgodicComponent {
    CanonicalCode graph_code;
    Rational mass;
    RootedMeasure component; // normalized restriction to one R-class
};

// Groups atoms by R-class, ordered by graph code.
std::vector<ErgodicComponent> ergodic_decomposition(const RootedMeasure& mu);

struct HopfVerdict {
    std::string component;
    bool quotient_cocycle_exists = true;
    bool summable = false;
    std::optional<Rational> cocycle_sum; // sum over eta of Delta(xi0, eta)
    std::string part; // "dissipative", "conservative" or "none"
};

// Finitely supported components lie on finite classes, hence are summable
// and dissipative.
std::vector<HopfVerdict> hopf_classification(const RootedMeasure& mu, const SizeGuard& guard = {});

} // namespace unimod

#endif // UNIMOD_MEASURES_HPP
