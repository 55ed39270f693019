#include "unimod/measures.hpp"

#include "unimod/cocycles.hpp"
#include "unimod/errors.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace unimod {

void RootedMeasure::add(const RootedGraph& rooted, const Rational& weight, const SizeGuard& guard)
{
    if (weight <= 0) {
        throw InvalidArgument("atom weight must be positive, got " + to_string(weight));
    }
    auto code = canonical_code(rooted, guard);
    auto it = atoms_.find(code);
    if (it != atoms_.end()) {
        it->second.weight += weight;
        return;
    }
    auto graph_code = canonical_code(rooted.graph, guard);
    atoms_.emplace(code, MeasureAtom{rooted, code, std::move(graph_code), weight});
}

void RootedMeasure::add(const FiniteGraph& g, Vertex root, const Rational& weight,
                        const SizeGuard& guard)
{
    add(RootedGraph(g, root), weight, guard);
}

Rational RootedMeasure::weight(const CanonicalCode& code) const
{
    auto it = atoms_.find(code);
    return it == atoms_.end() ? Rational(0) : it->second.weight;
}

Rational RootedMeasure::total_mass() const
{
    Rational sum = 0;
    for (const auto& [code, atom] : atoms_) {
        sum += atom.weight;
    }
    return sum;
}

RootedMeasure RootedMeasure::scaled(const Rational& factor) const
{
    if (factor <= 0) {
        throw InvalidArgument("scale factor must be positive");
    }
    RootedMeasure out = *this;
    for (auto& [code, atom] : out.atoms_) {
        atom.weight *= factor;
    }
    return out;
}

bool operator==(const RootedMeasure& a, const RootedMeasure& b)
{
    if (a.atoms_.size() != b.atoms_.size()) {
        return false;
    }
    for (const auto& [code, atom] : a.atoms_) {
        if (b.weight(code) != atom.weight) {
            return false;
        }
    }
    return true;
}

RootedMeasure normalize(const RootedMeasure& mu)
{
    if (mu.empty()) {
        throw InvalidArgument("cannot normalize the zero measure");
    }
    return mu.scaled(1 / mu.total_mass());
}

RootedMeasure measure_from_json(const nlohmann::json& j, const SizeGuard& guard)
{
    if (!j.is_object() || !j.contains("atoms") || !j.at("atoms").is_array()) {
        throw ParseError("measure requires an \"atoms\" array");
    }
    const auto& atoms = j.at("atoms");
    if (atoms.empty()) {
        throw ParseError("measure has no atoms");
    }
    RootedMeasure mu;
    for (const auto& a : atoms) {
        if (!a.is_object() || !a.contains("graph") || !a.contains("weight")) {
            throw ParseError("atom requires \"graph\" and \"weight\"");
        }
        auto file = graph_file_from_json(a.at("graph"));
        std::optional<Vertex> root = file.root;
        if (a.contains("root")) {
            const auto& r = a.at("root");
            if (!r.is_number_integer() || r.get<long long>() < 0 ||
                static_cast<std::size_t>(r.get<long long>()) >= file.graph.vertex_count()) {
                throw ParseError("atom root out of range");
            }
            root = static_cast<Vertex>(r.get<long long>());
        }
        if (!root) {
            throw ParseError("atom without a root");
        }
        const auto& w = a.at("weight");
        Rational weight;
        if (w.is_string()) {
            weight = parse_rational(w.get<std::string>());
        } else if (w.is_number_integer()) {
            weight = make_rational(w.get<long>());
        } else {
            throw ParseError("weight must be a \"p/q\" string");
        }
        if (weight <= 0) {
            throw ParseError("atom weight must be positive");
        }
        if (!file.graph.is_connected()) {
            throw ParseError("atom graph is disconnected");
        }
        mu.add(file.graph, *root, weight, guard);
    }
    return mu;
}

RootedMeasure parse_measure(std::string_view text, const SizeGuard& guard)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return measure_from_json(j, guard);
}

nlohmann::json to_json(const RootedMeasure& mu)
{
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& [code, atom] : mu.atoms()) {
        atoms.push_back({{"graph", to_json(atom.rooted.graph)},
                         {"root", atom.rooted.root},
                         {"weight", to_string(atom.weight)}});
    }
    return {{"atoms", atoms}};
}

namespace {

// Per-R-class structure shared by the verdicts below.
class Analysis {
public:
    struct Ref {
        const MeasureAtom* atom;
        const GraphStructure* structure;
        std::size_t orbit_class;
    };

    Analysis(const RootedMeasure& mu, const SizeGuard& guard)
    {
        for (const auto& [code, atom] : mu.atoms()) {
            auto it = graphs_.find(atom.graph_code);
            if (it == graphs_.end()) {
                it = graphs_.emplace(atom.graph_code, GraphStructure(atom.rooted.graph, guard)).first;
            }
            const GraphStructure& s = it->second;
            refs_.push_back({&atom, &s, *s.find_class(code)});
        }
    }

    const std::vector<Ref>& refs() const { return refs_; }
    const std::map<CanonicalCode, GraphStructure>& graphs() const { return graphs_; }

private:
    std::map<CanonicalCode, GraphStructure> graphs_;
    std::vector<Ref> refs_;
};

PairCountingMeasure pair_counting(const Analysis& a)
{
    PairCountingMeasure out;
    for (const auto& ref : a.refs()) {
        const auto& pcs = ref.structure->pairs().classes;
        for (const auto& pc : pcs) {
            if (pc.primary_class != ref.orbit_class) {
                continue;
            }
            Rational mass = ref.atom->weight * static_cast<unsigned long>(pc.fiber_weight);
            auto it = out.find(pc.code);
            if (it == out.end()) {
                out.emplace(pc.code,
                            PairAtom{DoublyRootedGraph(ref.structure->graph(), pc.primary, pc.secondary),
                                     pcs[pc.involution].code, mass});
            } else {
                it->second.weight += mass;
            }
        }
    }
    return out;
}

bool quasi_invariant(const RootedMeasure& mu, const Analysis& a)
{
    for (const auto& ref : a.refs()) {
        for (const auto& cls : ref.structure->quotient().classes) {
            if (!mu.atoms().contains(cls.code)) {
                return false;
            }
        }
    }
    return true;
}

Rational weight_or_zero(const PairCountingMeasure& m, const CanonicalCode& code)
{
    auto it = m.find(code);
    return it == m.end() ? Rational(0) : it->second.weight;
}

} // namespace

RelationCountingMeasure counting_measure_R(const RootedMeasure& mu, const SizeGuard& guard)
{
    Analysis a(mu, guard);
    RelationCountingMeasure out;
    for (const auto& ref : a.refs()) {
        for (const auto& cls : ref.structure->quotient().classes) {
            out[{ref.atom->code, cls.code}] += ref.atom->weight;
        }
    }
    return out;
}

PairCountingMeasure counting_measure_pairs(const RootedMeasure& mu, const SizeGuard& guard)
{
    return pair_counting(Analysis(mu, guard));
}

bool is_invariant(const RootedMeasure& mu, const SizeGuard& guard)
{
    auto m = counting_measure_R(mu, guard);
    for (const auto& [key, w] : m) {
        auto it = m.find({key.second, key.first});
        if (it == m.end() || it->second != w) {
            return false;
        }
    }
    return true;
}

bool is_unimodular(const RootedMeasure& mu, const SizeGuard& guard)
{
    auto m = counting_measure_pairs(mu, guard);
    for (const auto& [code, atom] : m) {
        if (weight_or_zero(m, atom.swapped) != atom.weight) {
            return false;
        }
    }
    return true;
}

bool is_quasi_invariant(const RootedMeasure& mu, const SizeGuard& guard)
{
    return quasi_invariant(mu, Analysis(mu, guard));
}

bool is_quasi_unimodular(const RootedMeasure& mu, const SizeGuard& guard)
{
    auto m = counting_measure_pairs(mu, guard);
    return std::all_of(m.begin(), m.end(),
                       [&](const auto& entry) { return m.contains(entry.second.swapped); });
}

std::vector<MissingClass> missing_classes(const RootedMeasure& mu, const SizeGuard& guard)
{
    Analysis a(mu, guard);
    std::vector<MissingClass> out;
    for (const auto& [graph_code, s] : a.graphs()) {
        for (const auto& cls : s.quotient().classes) {
            if (!mu.atoms().contains(cls.code)) {
                out.push_back({cls.code, RootedGraph(s.graph(), cls.representative)});
            }
        }
    }
    return out;
}

namespace {

RNCocycleTable rn_table(const RootedMeasure& mu, const Analysis& a)
{
    RNCocycleTable out;
    for (const auto& from : a.refs()) {
        for (const auto& to : a.refs()) {
            if (from.atom->graph_code == to.atom->graph_code) {
                out[{from.atom->code, to.atom->code}] = to.atom->weight / from.atom->weight;
            }
        }
    }
    (void)mu;
    return out;
}

} // namespace

RNCocycleTable rn_cocycle(const RootedMeasure& mu, const SizeGuard& guard)
{
    Analysis a(mu, guard);
    if (!quasi_invariant(mu, a)) {
        throw PreconditionError("measure is not quasi-invariant");
    }
    return rn_table(mu, a);
}

ThmMainCheck verify_thm_main(const RootedMeasure& mu, const SizeGuard& guard)
{
    Analysis a(mu, guard);
    if (!quasi_invariant(mu, a)) {
        throw PreconditionError("measure is not quasi-invariant");
    }
    auto m = pair_counting(a);
    auto rn = rn_table(mu, a);
    std::map<CanonicalCode, ModularFunction> modular;
    for (const auto& [graph_code, s] : a.graphs()) {
        modular.emplace(graph_code, modular_function_on_pairs(s));
    }
    ThmMainCheck check;
    for (const auto& [graph_code, s] : a.graphs()) {
        const auto& pcs = s.pairs().classes;
        const auto& mf = modular.at(graph_code);
        const auto& classes = s.quotient().classes;
        for (std::size_t p = 0; p < pcs.size(); ++p) {
            const auto& theta = pcs[p];
            auto it = m.find(theta.code);
            if (it == m.end()) {
                continue;
            }
            Rational ratio = weight_or_zero(m, it->second.swapped) / it->second.weight;
            Rational pulled = rn.at({classes[theta.primary_class].code,
                                     classes[theta.secondary_class].code});
            Rational predicted = pulled / mf.values[p];
            check.holds = check.holds && ratio == predicted;
            check.rows.push_back({theta.code, ratio, predicted});
        }
    }
    return check;
}

ThmMVerdict verify_thm_m(const RootedMeasure& mu, const SizeGuard& guard)
{
    Analysis a(mu, guard);
    ThmMVerdict v;
    v.group_unimodular = true;
    v.quasi_invariant = quasi_invariant(mu, a);
    auto rn = rn_table(mu, a);
    bool matches = true;
    for (const auto& [graph_code, s] : a.graphs()) {
        auto quotient = quotient_modular_cocycle(s);
        const auto& classes = s.quotient().classes;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            for (std::size_t j = 0; j < classes.size(); ++j) {
                auto it = rn.find({classes[i].code, classes[j].code});
                if (it != rn.end() && it->second != quotient.at(i, j)) {
                    matches = false;
                }
            }
        }
    }
    v.rn_matches_quotient_cocycle = matches;
    v.conjunction = v.group_unimodular && v.quasi_invariant && v.rn_matches_quotient_cocycle;
    auto m = pair_counting(a);
    v.unimodular = std::all_of(m.begin(), m.end(), [&](const auto& entry) {
        return weight_or_zero(m, entry.second.swapped) == entry.second.weight;
    });
    return v;
}

RootedMeasure invariant_measure(const FiniteGraph& g, const SizeGuard& guard)
{
    GraphStructure s(g, guard);
    const auto& classes = s.quotient().classes;
    Rational w = make_rational(1, static_cast<long>(classes.size()));
    RootedMeasure mu;
    for (const auto& cls : classes) {
        mu.add(s.graph(), cls.representative, w, guard);
    }
    return mu;
}

RootedMeasure unimodular_measure(const FiniteGraph& g, const SizeGuard& guard)
{
    GraphStructure s(g, guard);
    const auto& classes = s.quotient().classes;
    RootedMeasure mu;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        Rational w = make_rational(BigInt(1), s.representative_stabilizer(i).order());
        mu.add(s.graph(), classes[i].representative, w, guard);
    }
    return normalize(mu);
}

TransportKernel TransportKernel::neighbor_degree(std::size_t k)
{
    return {Kind::neighbor_degree, k, {}};
}

TransportKernel TransportKernel::distance(std::size_t k) { return {Kind::distance, k, {}}; }

TransportKernel TransportKernel::ball_match(std::size_t radius, CanonicalCode code)
{
    if (code.kind() != CodeKind::doubly_rooted) {
        throw InvalidArgument("ball_match needs a doubly rooted code");
    }
    return {Kind::ball_match, radius, std::move(code)};
}

TransportKernel TransportKernel::from_json(const nlohmann::json& j)
{
    auto natural = [&](const char* key) -> std::size_t {
        if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 0) {
            throw ParseError(std::string("kernel requires a non-negative integer \"") + key + "\"");
        }
        return static_cast<std::size_t>(j.at(key).get<long long>());
    };
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw ParseError("kernel requires a \"kind\"");
    }
    auto kind = j.at("kind").get<std::string>();
    if (kind == "neighbor_deg") {
        return neighbor_degree(natural("k"));
    }
    if (kind == "distance") {
        return distance(natural("k"));
    }
    if (kind == "ball_match") {
        if (!j.contains("code") || !j.at("code").is_string()) {
            throw ParseError("ball_match kernel requires a hex \"code\"");
        }
        auto code = CanonicalCode::from_hex(j.at("code").get<std::string>());
        if (code.kind() != CodeKind::doubly_rooted) {
            throw ParseError("ball_match code must be doubly rooted");
        }
        return ball_match(natural("r"), std::move(code));
    }
    throw ParseError("unknown kernel kind '" + kind + "'");
}

nlohmann::json TransportKernel::to_json() const
{
    switch (kind_) {
    case Kind::neighbor_degree:
        return {{"kind", "neighbor_deg"}, {"k", parameter_}};
    case Kind::distance:
        return {{"kind", "distance"}, {"k", parameter_}};
    case Kind::ball_match:
        return {{"kind", "ball_match"}, {"r", parameter_}, {"code", code_.hex()}};
    }
    return {};
}

std::size_t TransportKernel::range() const
{
    switch (kind_) {
    case Kind::neighbor_degree:
        return 1;
    case Kind::distance:
        return parameter_;
    case Kind::ball_match: {
        auto decoded = decode(code_);
        auto d = unimod::distance(decoded.graph, decoded.roots[0], decoded.roots[1]);
        return d.value_or(0);
    }
    }
    return 0;
}

namespace {

CanonicalCode ball_pair_code(const FiniteGraph& g, Vertex x, Vertex y, std::size_t radius)
{
    auto sub = ball_subgraph(g, x, radius);
    std::array<Vertex, 2> roots{*sub.local(x), *sub.local(y)};
    return canonical_code(sub.graph, roots, SizeGuard{sub.graph.vertex_count()});
}

} // namespace

Rational TransportKernel::operator()(const FiniteGraph& g, Vertex x, Vertex y) const
{
    g.check_vertex(x);
    g.check_vertex(y);
    switch (kind_) {
    case Kind::neighbor_degree:
        return (g.adjacent(x, y) && g.degree(y) == parameter_) ? 1 : 0;
    case Kind::distance:
        return unimod::distance(g, x, y) == std::optional<std::size_t>(parameter_) ? 1 : 0;
    case Kind::ball_match: {
        auto d = unimod::distance(g, x, y);
        if (!d || *d > parameter_) {
            return 0;
        }
        return ball_pair_code(g, x, y, parameter_) == code_ ? 1 : 0;
    }
    }
    return 0;
}

TransportBalance mass_transport_check(const RootedMeasure& mu, const KernelFunction& kernel)
{
    TransportBalance out;
    for (const auto& [code, atom] : mu.atoms()) {
        const auto& g = atom.rooted.graph;
        Vertex x = atom.rooted.root;
        Rational sent = 0;
        Rational received = 0;
        for (Vertex y = 0; y < g.vertex_count(); ++y) {
            sent += kernel(g, x, y);
            received += kernel(g, y, x);
        }
        out.lhs += atom.weight * sent;
        out.rhs += atom.weight * received;
    }
    out.equal = out.lhs == out.rhs;
    return out;
}

TransportBalance mass_transport_check(const RootedMeasure& mu, const TransportKernel& kernel)
{
    return mass_transport_check(mu, KernelFunction(kernel));
}

std::vector<TransportBalance> mass_transport_batch(const RootedMeasure& mu,
                                                   std::span<const TransportKernel> kernels)
{
    // Per atom: distances and doubly rooted ball codes, computed on demand.
    struct AtomCache {
        const MeasureAtom* atom;
        std::vector<std::vector<std::size_t>> dist;
        std::map<std::tuple<std::size_t, Vertex, Vertex>, CanonicalCode> codes;
    };
    std::vector<AtomCache> caches;
    for (const auto& [code, atom] : mu.atoms()) {
        AtomCache c{&atom, {}, {}};
        for (Vertex v = 0; v < atom.rooted.graph.vertex_count(); ++v) {
            c.dist.push_back(distances_from(atom.rooted.graph, v));
        }
        caches.push_back(std::move(c));
    }
    auto value = [](AtomCache& c, const TransportKernel& k, Vertex x, Vertex y) -> bool {
        const auto& g = c.atom->rooted.graph;
        switch (k.kind()) {
        case TransportKernel::Kind::neighbor_degree:
            return c.dist[x][y] == 1 && g.degree(y) == k.parameter();
        case TransportKernel::Kind::distance:
            return c.dist[x][y] == k.parameter();
        case TransportKernel::Kind::ball_match: {
            if (c.dist[x][y] > k.parameter()) {
                return false;
            }
            auto key = std::make_tuple(k.parameter(), x, y);
            auto it = c.codes.find(key);
            if (it == c.codes.end()) {
                it = c.codes.emplace(key, ball_pair_code(g, x, y, k.parameter())).first;
            }
            return it->second == k.code();
        }
        }
        return false;
    };
    std::vector<TransportBalance> out;
    for (const auto& k : kernels) {
        TransportBalance b;
        for (auto& c : caches) {
            Vertex x = c.atom->rooted.root;
            long sent = 0;
            long received = 0;
            for (Vertex y = 0; y < c.atom->rooted.graph.vertex_count(); ++y) {
                sent += value(c, k, x, y) ? 1 : 0;
                received += value(c, k, y, x) ? 1 : 0;
            }
            b.lhs += c.atom->weight * sent;
            b.rhs += c.atom->weight * received;
        }
        b.equal = b.lhs == b.rhs;
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<TransportKernel> builtin_kernels(const RootedMeasure& mu, std::size_t max_range)
{
    std::size_t max_degree = 0;
    std::size_t max_ecc = 1;
    std::set<const FiniteGraph*> seen;
    std::map<CanonicalCode, const FiniteGraph*> graphs;
    for (const auto& [code, atom] : mu.atoms()) {
        graphs.emplace(atom.graph_code, &atom.rooted.graph);
    }
    for (const auto& [code, g] : graphs) {
        for (Vertex v = 0; v < g->vertex_count(); ++v) {
            max_degree = std::max(max_degree, g->degree(v));
            max_ecc = std::max(max_ecc, eccentricity(*g, v));
        }
    }
    std::vector<TransportKernel> out;
    for (std::size_t k = 1; k <= max_degree; ++k) {
        out.push_back(TransportKernel::neighbor_degree(k));
    }
    for (std::size_t k = 0; k <= max_range; ++k) {
        out.push_back(TransportKernel::distance(k));
    }
    for (std::size_t r = 1; r <= max_ecc; ++r) {
        std::set<CanonicalCode> codes;
        for (const auto& [code, g] : graphs) {
            for (Vertex x = 0; x < g->vertex_count(); ++x) {
                auto dist = distances_from(*g, x);
                for (Vertex y = 0; y < g->vertex_count(); ++y) {
                    if (dist[y] <= std::min(r, max_range)) {
                        codes.insert(ball_pair_code(*g, x, y, r));
                    }
                }
            }
        }
        for (const auto& c : codes) {
            out.push_back(TransportKernel::ball_match(r, c));
        }
    }
    return out;
}

std::vector<ErgodicComponent> ergodic_decomposition(const RootedMeasure& mu)
{
    std::map<CanonicalCode, RootedMeasure> parts;
    for (const auto& [code, atom] : mu.atoms()) {
        parts[atom.graph_code].add(atom.rooted, atom.weight, SizeGuard{atom.rooted.graph.vertex_count()});
    }
    std::vector<ErgodicComponent> out;
    for (auto& [graph_code, part] : parts) {
        Rational mass = part.total_mass();
        out.push_back({graph_code, mass, normalize(part)});
    }
    return out;
}

std::vector<HopfVerdict> hopf_classification(const RootedMeasure& mu, const SizeGuard& guard)
{
    std::vector<HopfVerdict> out;
    for (const auto& comp : ergodic_decomposition(mu)) {
        const auto& first = comp.component.atoms().begin()->second;
        GraphStructure s(first.rooted.graph, guard);
        auto cocycle = quotient_modular_cocycle(s);
        std::size_t base = *s.find_class(first.code);
        Rational sum = 0;
        for (std::size_t j = 0; j < cocycle.size; ++j) {
            sum += cocycle.at(base, j);
        }
        out.push_back({comp.graph_code.hex(), true, true, sum, "dissipative"});
    }
    return out;
}

} // namespace unimod
