#include "unimod/selfcheck.hpp"

#include "unimod/automorphisms.hpp"
#include "unimod/bruteforce.hpp"
#include "unimod/cocycles.hpp"
#include "unimod/enumerate.hpp"
#include "unimod/limits.hpp"
#include "unimod/quotient.hpp"

namespace unimod {

namespace {

class Recorder {
public:
    Recorder(SelfcheckResult& result, std::string witness)
        : result_(result), witness_(std::move(witness))
    {
    }

    void expect(const std::string& check, bool ok)
    {
        if (ok) {
            ++result_.passed[check];
        } else {
            result_.passed.try_emplace(check, 0);
            result_.violations.push_back({check, witness_});
        }
    }

private:
    SelfcheckResult& result_;
    std::string witness_;
};

} // namespace

void check_graph(const FiniteGraph& g, SelfcheckResult& result)
{
    Recorder rec(result, to_json(g).dump());
    const std::size_t n = g.vertex_count();
    ++result.graphs;

    GraphStructure s(g, SizeGuard{std::max<std::size_t>(n, 1)});
    const PermutationGroup& group = s.group();

    if (n <= bruteforce::max_vertices) {
        auto autos = bruteforce::automorphisms(g);
        rec.expect("aut_order_oracle",
                   group.order() == autos.size() && group.orbits() == bruteforce::orbits(g, autos));
    }

    bool generators_ok = true;
    for (const auto& p : group.generators()) {
        generators_ok = generators_ok && is_automorphism(g, p);
    }
    rec.expect("generators_are_automorphisms", generators_ok);

    CocycleTable table = vertex_cocycle_table(g);
    std::vector<BigInt> orders;
    for (Vertex x = 0; x < n; ++x) {
        orders.push_back(stabilizer_order(g, x));
    }

    bool identity = true;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n && identity; ++z) {
                identity = table.at(x, y) * table.at(y, z) == table.at(x, z);
            }
        }
    }
    rec.expect("cocycle_identity", identity);

    bool haar = true;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            haar = haar && table.at(x, y) == make_rational(orders[x], orders[y]);
        }
    }
    rec.expect("haar_equality", haar);

    bool orbit_stab = true;
    for (Vertex x = 0; x < n; ++x) {
        orbit_stab = orbit_stab && BigInt(group.orbit_of(x).size()) * orders[x] == group.order();
    }
    rec.expect("orbit_stabilizer", orbit_stab);

    bool diagonal = true;
    bool orbit_trivial = true;
    for (const auto& p : group.generators()) {
        for (Vertex x = 0; x < n; ++x) {
            orbit_trivial = orbit_trivial && table.at(x, p[x]) == 1;
            for (Vertex y = 0; y < n; ++y) {
                diagonal = diagonal && table.at(p[x], p[y]) == table.at(x, y);
            }
        }
    }
    rec.expect("diagonal_invariance", diagonal);
    rec.expect("modular_function_trivial_on_orbits", orbit_trivial);

    const bool rigid = group.is_trivial();
    rec.expect("sigma_bijective_iff_rigid", sigma_is_bijective(s) == rigid);

    bool totals = true;
    bool independent = true;
    for (std::size_t c = 0; c < s.quotient().classes.size(); ++c) {
        FiberMeasure base = fiber_measure(s, c);
        totals = totals && base.total() == n;
        for (Vertex x : s.quotient().classes[c].members) {
            independent = independent && fiber_measure_at(s, x).weights == base.weights;
        }
    }
    rec.expect("fiber_total_is_vertex_count", totals);
    rec.expect("fiber_representative_independence", independent);

    bool involution = true;
    const auto& pairs = s.pairs().classes;
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        involution = involution && pairs[pairs[t].involution].involution == t &&
                     pairs[t].primary_class == pairs[pairs[t].involution].secondary_class;
    }
    rec.expect("involution_is_self_inverse", involution);

    rec.expect("modular_ratio_identity", modular_ratio_check(s));

    const bool unimodular_graph = is_unimodular_graph(g);
    rec.expect("rigid_implies_unimodular", !rigid || unimodular_graph);
    rec.expect("transitive_implies_unimodular",
               group.orbits().size() != 1 || unimodular_graph);

    RootedMeasure mu = unimodular_measure(g);
    rec.expect("uniform_root_equals_unimodular", uniform_root_measure(g) == mu);
    rec.expect("unimodular_measure_is_unimodular", is_unimodular(mu));
    rec.expect("invariant_measure_is_invariant", is_invariant(invariant_measure(g)));
}

void check_measure(const RootedMeasure& mu, SelfcheckResult& result)
{
    Recorder rec(result, to_json(mu).dump());
    ++result.measures;

    const bool unimodular = is_unimodular(mu);
    const bool quasi = is_quasi_invariant(mu);
    const ThmMVerdict verdict = verify_thm_m(mu);
    rec.expect("thm_m_equivalence", verdict.consistent() && verdict.unimodular == unimodular);
    rec.expect("thm_quasi_equivalence", quasi == is_quasi_unimodular(mu));
    if (quasi) {
        rec.expect("thm_main_identity", verify_thm_main(mu).holds);
    }

    bool all_pass = true;
    auto kernels = builtin_kernels(mu, 3);
    for (const auto& balance : mass_transport_batch(mu, kernels)) {
        all_pass = all_pass && balance.equal;
    }
    rec.expect("mass_transport_iff_unimodular", all_pass == unimodular);

    const RootedMeasure scaled = mu.scaled(make_rational(7, 3));
    rec.expect("scale_invariance", is_unimodular(scaled) == unimodular &&
                                       is_invariant(scaled) == is_invariant(mu) &&
                                       is_quasi_invariant(scaled) == quasi);
}

void check_decomposition(const RootedMeasure& mu, SelfcheckResult& result)
{
    Recorder rec(result, to_json(mu).dump());
    const bool unimodular = is_unimodular(mu);
    RootedMeasure rebuilt;
    bool single_class = true;
    bool components_unimodular = true;
    for (const auto& part : ergodic_decomposition(mu)) {
        for (const auto& [code, atom] : part.component.atoms()) {
            single_class = single_class && atom.graph_code == part.graph_code;
            rebuilt.add(atom.rooted, atom.weight * part.mass);
        }
        components_unimodular = components_unimodular && (!unimodular || is_unimodular(part.component));
    }
    rec.expect("decomposition_round_trip", rebuilt == mu && single_class);
    rec.expect("decomposition_components_unimodular", components_unimodular);
}

SelfcheckResult run_selfcheck(const SelfcheckOptions& options)
{
    SelfcheckResult result;
    for (const auto& g : connected_graphs_up_to(options.max_vertices)) {
        check_graph(g, result);
    }

    auto pool = connected_graphs_up_to(std::min(options.measure_vertices, options.max_vertices));
    MeasureGenerator generator(pool, options.seed);
    for (std::size_t i = 0; i < options.random_measures; ++i) {
        check_measure(generator.next(), result);
    }
    for (std::size_t i = 0; i < options.mixtures; ++i) {
        check_decomposition(generator.next_unimodular_mixture(), result);
    }
    return result;
}

nlohmann::json to_json(const SelfcheckResult& result)
{
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [name, count] : result.passed) {
        checks[name] = count;
    }
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : result.violations) {
        violations.push_back({{"check", v.check}, {"witness", nlohmann::json::parse(v.witness)}});
    }
    return {{"graphs", result.graphs},
            {"measures", result.measures},
            {"checks", checks},
            {"violations", violations},
            {"ok", result.ok()}};
}

} // namespace unimod
