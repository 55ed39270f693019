#include "unimod/cli.hpp"

#include "unimod/automorphisms.hpp"
#include "unimod/cocycles.hpp"
#include "unimod/errors.hpp"
#include "unimod/families.hpp"
#include "unimod/limits.hpp"
#include "unimod/measures.hpp"
#include "unimod/quotient.hpp"
#include "unimod/selfcheck.hpp"
#include "unimod/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace unimod::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> all_checks = {"invariant", "unimodular", "quasi", "rn",
                                             "thm-main",  "thm-m",      "decompose"};

struct Input {
    std::string name;
    std::string text;
};

Input read_input(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return {path, buffer.str()};
}

json digest(const Input& input)
{
    return {{"name", input.name}, {"sha256", sha256_hex(input.text)}};
}

json permutation_json(const Permutation& p)
{
    return json(std::vector<Vertex>(p.begin(), p.end()));
}

json table_json(const CocycleTable& table)
{
    json rows = json::array();
    for (std::size_t i = 0; i < table.size; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < table.size; ++j) {
            row.push_back(to_string(table.at(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

json class_measure_json(const GraphStructure& s, const RootedMeasure& mu)
{
    json out = json::array();
    for (const auto& [code, atom] : mu.atoms()) {
        auto cls = s.find_class(code);
        out.push_back({{"class", cls ? json(*cls) : json(nullptr)},
                       {"code", code.hex()},
                       {"weight", to_string(atom.weight)}});
    }
    return out;
}

json rooted_json(const RootedGraph& rooted)
{
    return {{"graph", to_json(rooted.graph)}, {"root", rooted.root}};
}

json analyze(const FiniteGraph& g, const SizeGuard& guard)
{
    guard.check(g);
    PermutationGroup group = automorphism_group(g, guard);
    const bool unimodular = is_unimodular_graph(g, guard);
    json result = {
        {"vertices", g.vertex_count()},
        {"edges", g.edge_count()},
        {"connected", g.is_connected()},
        {"aut_order", to_string(group.order())},
        {"orbits", group.orbits()},
        {"rigid", group.is_trivial()},
        {"vertex_transitive", group.orbits().size() == 1},
        {"cocycle_table", table_json(vertex_cocycle_table(g, guard))},
        {"unimodular_graph", unimodular},
    };
    json generators = json::array();
    for (const auto& p : group.generators()) {
        generators.push_back(permutation_json(p));
    }
    result["generators"] = generators;
    if (!g.is_connected()) {
        return result;
    }

    GraphStructure s(g, guard);
    json classes = json::array();
    for (const auto& c : s.quotient().classes) {
        classes.push_back({{"code", c.code.hex()},
                           {"representative", c.representative},
                           {"members", c.members},
                           {"size", c.members.size()}});
    }
    json adjacency = json::array();
    for (auto [a, b] : s.quotient().adjacency) {
        adjacency.push_back({a, b});
    }
    result["orbital_quotient"] = {{"classes", classes}, {"adjacency", adjacency}};

    ModularFunction modular = modular_function_on_pairs(s);
    json pairs = json::array();
    for (std::size_t t = 0; t < s.pairs().classes.size(); ++t) {
        const PairClass& p = s.pairs().classes[t];
        pairs.push_back({{"code", p.code.hex()},
                         {"primary", p.primary},
                         {"secondary", p.secondary},
                         {"primary_class", p.primary_class},
                         {"secondary_class", p.secondary_class},
                         {"fiber_weight", p.fiber_weight},
                         {"involution", p.involution},
                         {"modular_function", to_string(modular.values[t])}});
    }
    result["pair_quotient"] = pairs;

    json fibers = json::array();
    for (std::size_t c = 0; c < s.quotient().classes.size(); ++c) {
        FiberMeasure fiber = fiber_measure(s, c);
        json weights = json::array();
        for (auto [pair, w] : fiber.weights) {
            weights.push_back({{"pair_class", pair}, {"weight", w}});
        }
        fibers.push_back({{"class", c}, {"weights", weights}, {"total", fiber.total()}});
    }
    result["fiber_measures"] = fibers;
    result["sigma_injective"] = sigma_is_bijective(s);
    result["modular_ratio_check"] = modular_ratio_check(s);
    result["quotient_cocycle"] = table_json(quotient_modular_cocycle(s));
    result["invariant_measure"] = class_measure_json(s, invariant_measure(g, guard));
    result["unimodular_measure"] = class_measure_json(s, unimodular_measure(g, guard));
    return result;
}

json hopf_json(const HopfVerdict& v)
{
    return {{"component", v.component},
            {"quotient_cocycle_exists", v.quotient_cocycle_exists},
            {"summable", v.summable},
            {"cocycle_sum", v.cocycle_sum ? json(to_string(*v.cocycle_sum)) : json(nullptr)},
            {"part", v.part}};
}

json measure_checks(const RootedMeasure& mu, std::vector<std::string> checks,
                    const std::string& out_dir, const SizeGuard& guard)
{
    if (checks.empty()) {
        checks = all_checks;
    }
    auto wants = [&](const std::string& name) {
        return std::find(checks.begin(), checks.end(), name) != checks.end();
    };

    // Preconditions first so a failing run prints no partial report.
    if ((wants("rn") || wants("thm-main")) && !is_quasi_invariant(mu, guard)) {
        auto missing = missing_classes(mu, guard);
        std::string what = "measure is not quasi-invariant";
        if (!missing.empty()) {
            what += ": class " + missing.front().code.hex() + " is missing from the support";
        }
        throw PreconditionError(what);
    }

    json out = json::object();
    if (wants("invariant")) {
        out["invariant"] = is_invariant(mu, guard);
    }
    if (wants("unimodular")) {
        out["unimodular"] = is_unimodular(mu, guard);
    }
    if (wants("quasi")) {
        json missing = json::array();
        for (const auto& m : missing_classes(mu, guard)) {
            missing.push_back({{"code", m.code.hex()}, {"rooted", rooted_json(m.rooted)}});
        }
        out["quasi"] = {{"quasi_invariant", is_quasi_invariant(mu, guard)},
                        {"quasi_unimodular", is_quasi_unimodular(mu, guard)},
                        {"missing_classes", missing}};
    }
    if (wants("rn")) {
        json rows = json::array();
        for (const auto& [key, value] : rn_cocycle(mu, guard)) {
            rows.push_back(
                {{"from", key.first.hex()}, {"to", key.second.hex()}, {"value", to_string(value)}});
        }
        out["rn"] = rows;
    }
    if (wants("thm-main")) {
        ThmMainCheck check = verify_thm_main(mu, guard);
        json rows = json::array();
        for (const auto& row : check.rows) {
            rows.push_back({{"pair_class", row.pair_class.hex()},
                            {"involution_ratio", to_string(row.involution_ratio)},
                            {"predicted", to_string(row.predicted)}});
        }
        out["thm-main"] = {{"holds", check.holds}, {"rows", rows}};
    }
    if (wants("thm-m")) {
        ThmMVerdict v = verify_thm_m(mu, guard);
        out["thm-m"] = {{"group_unimodular", v.group_unimodular},
                        {"quasi_invariant", v.quasi_invariant},
                        {"rn_matches_quotient_cocycle", v.rn_matches_quotient_cocycle},
                        {"conjunction", v.conjunction},
                        {"unimodular", v.unimodular},
                        {"consistent", v.consistent()}};
    }
    if (wants("decompose")) {
        json components = json::array();
        std::size_t index = 0;
        for (const auto& part : ergodic_decomposition(mu)) {
            json entry = {{"graph_code", part.graph_code.hex()},
                          {"mass", to_string(part.mass)},
                          {"measure", to_json(part.component)}};
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                auto path = std::filesystem::path(out_dir) /
                            ("component_" + std::to_string(index) + ".json");
                std::ofstream file(path, std::ios::binary);
                if (!file) {
                    throw Error("cannot write '" + path.string() + "'");
                }
                file << to_json(part.component).dump(2) << '\n';
                entry["file"] = path.string();
            }
            components.push_back(entry);
            ++index;
        }
        json hopf = json::array();
        for (const auto& v : hopf_classification(mu, guard)) {
            hopf.push_back(hopf_json(v));
        }
        out["decompose"] = {{"components", components}, {"hopf", hopf}};
    }
    return out;
}

json family_json(const FamilyReport& r)
{
    json out = {{"kind", to_string(r.family.kind)},
                {"degree", r.family.degree},
                {"quotient", r.quotient},
                {"pair_classes", r.pair_classes},
                {"cocycle_formula", r.cocycle_formula},
                {"group_unimodular", r.group_unimodular},
                {"quotient_cocycle_exists", r.quotient_cocycle_exists},
                {"summable", r.summable},
                {"cocycle_sum", r.cocycle_sum ? json(to_string(*r.cocycle_sum)) : json(nullptr)},
                {"point_mass", r.point_mass},
                {"hopf", hopf_json(hopf_classification(r.family))}};
    if (r.unimodular_measure) {
        json levels = json::array();
        for (const auto& [level, mass] : r.unimodular_measure->levels) {
            levels.push_back({{"level", level}, {"mass", to_string(mass)}});
        }
        out["unimodular_measure"] = {{"levels", levels},
                                     {"tail", to_string(r.unimodular_measure->tail)},
                                     {"total", to_string(r.unimodular_measure->total())}};
    } else if (r.point_mass) {
        out["unimodular_measure"] = "point mass";
    } else {
        out["unimodular_measure"] = nullptr;
    }
    return out;
}

json limit_json(const std::string& family, const std::vector<std::size_t>& ns,
                const std::vector<std::size_t>& radii)
{
    if (family != "i3xn") {
        throw InvalidArgument("unknown limit family '" + family + "'");
    }
    std::map<std::size_t, BallDistribution> targets;
    for (std::size_t r : radii) {
        targets.emplace(r, i3xz_target(r));
    }
    json rows = json::array();
    for (const auto& row : convergence_report(i3xn_family, ns, targets, radii)) {
        rows.push_back({{"n", row.index},
                        {"vertices", 3 * row.index - 1},
                        {"radius", row.radius},
                        {"tv", to_string(row.tv)}});
    }
    return {{"family", family}, {"rows", rows}};
}

void render_human(const json& j, std::ostream& out, int indent);

bool is_scalar_array(const json& j)
{
    return j.is_array() &&
           std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
}

std::string scalar_text(const json& j)
{
    return j.is_string() ? j.get<std::string>() : j.dump();
}

void render_human(const json& j, std::ostream& out, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_primitive()) {
                out << pad << key << ": " << scalar_text(value) << '\n';
            } else if (is_scalar_array(value)) {
                out << pad << key << ":";
                for (const auto& e : value) {
                    out << ' ' << scalar_text(e);
                }
                out << '\n';
            } else {
                out << pad << key << ":\n";
                render_human(value, out, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_primitive()) {
                out << pad << scalar_text(e) << '\n';
            } else if (is_scalar_array(e)) {
                out << pad;
                for (std::size_t k = 0; k < e.size(); ++k) {
                    out << (k ? "  " : "") << std::setw(6) << scalar_text(e[k]);
                }
                out << '\n';
            } else {
                out << pad << "-\n";
                render_human(e, out, indent + 2);
            }
        }
    } else {
        out << pad << scalar_text(j) << '\n';
    }
}

} // namespace

std::string sha256_hex(std::string_view data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), md, &length, EVP_sha256(), nullptr) != 1) {
        throw Error("sha256 failed");
    }
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i) {
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    }
    return hex.str();
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Automorphisms, modular cocycles and unimodular measures of finite graphs",
                 "unimod"};
    app.require_subcommand(1);
    app.fallthrough();

    std::size_t max_vertices = SizeGuard::default_max_vertices();
    std::uint64_t seed = default_seed;
    bool human = false;
    app.add_option("--max-vertices", max_vertices, "Size guard for backtracking searches")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Seed for randomized checks");
    app.add_flag("--human", human, "Render a readable text view instead of JSON");

    std::string graph_path;
    auto* analyze_cmd = app.add_subcommand("analyze", "Automorphisms, cocycles and quotients");
    analyze_cmd->add_option("graph", graph_path, "Graph file")->required();

    std::string measure_path;
    std::vector<std::string> checks;
    std::string out_dir;
    auto* measure_cmd = app.add_subcommand("measure", "Verdicts on a rooted measure");
    measure_cmd->add_option("measure", measure_path, "Measure file")->required();
    measure_cmd->add_option("--check", checks, "Checks to run (default: all)")
        ->delimiter(',')
        ->check(CLI::IsMember(all_checks));
    measure_cmd->add_option("--out-dir", out_dir, "Directory for decomposition components");

    std::string mtp_path;
    std::string kernel_spec;
    auto* mtp_cmd = app.add_subcommand("mtp", "Mass transport balance for one kernel");
    mtp_cmd->add_option("measure", mtp_path, "Measure file")->required();
    mtp_cmd->add_option("--kernel", kernel_spec, "Kernel JSON, inline or as a file path")
        ->required();

    std::string kind;
    int degree = 3;
    std::size_t depth = 5;
    auto* family_cmd = app.add_subcommand("family", "Closed-form report for a symbolic family");
    family_cmd->add_option("--kind", kind, "homogeneous_tree, grandfather or canopy")->required();
    family_cmd->add_option("--d", degree, "Tree degree (>= 3)");
    family_cmd->add_option("--depth", depth, "Number of canopy levels reported")
        ->check(CLI::PositiveNumber);

    std::string limit_family = "i3xn";
    std::vector<std::size_t> ns{30, 100, 300};
    std::vector<std::size_t> radii{0, 1, 2};
    auto* limit_cmd = app.add_subcommand("limit", "Ball-law convergence table");
    limit_cmd->add_option("--family", limit_family, "Graph family (i3xn)");
    limit_cmd->add_option("--n", ns, "Family indices")->delimiter(',');
    limit_cmd->add_option("--radii", radii, "Ball radii")->delimiter(',');

    SelfcheckOptions options;
    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Exhaustive invariant battery");
    selfcheck_cmd->add_option("--max-n", options.max_vertices, "Largest graph size enumerated")
        ->check(CLI::Range(1, 8));
    selfcheck_cmd->add_option("--measures", options.random_measures, "Random measures drawn");
    selfcheck_cmd->add_option("--mixtures", options.mixtures, "Decomposition round trips");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    }

    const SizeGuard guard{max_vertices};
    json report = {{"command", json(std::vector<std::string>(args.begin(), args.end()))},
                   {"version", version},
                   {"inputs", json::array()}};
    int code = exit_ok;

    try {
        if (analyze_cmd->parsed()) {
            Input input = read_input(graph_path);
            report["inputs"].push_back(digest(input));
            report["result"] = analyze(parse_graph(input.text), guard);
        } else if (measure_cmd->parsed()) {
            Input input = read_input(measure_path);
            report["inputs"].push_back(digest(input));
            RootedMeasure mu = parse_measure(input.text, guard);
            json result = {{"atoms", mu.size()},
                           {"total_mass", to_string(mu.total_mass())},
                           {"checks", measure_checks(mu, checks, out_dir, guard)}};
            report["result"] = result;
        } else if (mtp_cmd->parsed()) {
            Input input = read_input(mtp_path);
            report["inputs"].push_back(digest(input));
            Input kernel_input{"kernel", kernel_spec};
            auto first = kernel_spec.find_first_not_of(" \t\r\n");
            if (first == std::string::npos || kernel_spec[first] != '{') {
                kernel_input = read_input(kernel_spec);
            }
            report["inputs"].push_back(digest(kernel_input));
            json kernel_json;
            try {
                kernel_json = json::parse(kernel_input.text);
            } catch (const json::exception& e) {
                throw ParseError(std::string("kernel: ") + e.what());
            }
            TransportKernel kernel = TransportKernel::from_json(kernel_json);
            RootedMeasure mu = parse_measure(input.text, guard);
            TransportBalance balance = mass_transport_check(mu, kernel);
            report["result"] = {{"kernel", kernel.to_json()},
                                {"lhs", to_string(balance.lhs)},
                                {"rhs", to_string(balance.rhs)},
                                {"equal", balance.equal}};
        } else if (family_cmd->parsed()) {
            SymbolicFamily family(parse_family_kind(kind), degree);
            report["result"] = family_json(family_report(family, depth));
        } else if (limit_cmd->parsed()) {
            report["result"] = limit_json(limit_family, ns, radii);
        } else if (selfcheck_cmd->parsed()) {
            options.seed = seed;
            SelfcheckResult result = run_selfcheck(options);
            report["result"] = to_json(result);
            for (const auto& v : result.violations) {
                err << "violation: " << v.check << " on " << v.witness << '\n';
            }
            if (!result.ok()) {
                code = exit_violation;
            }
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const InvalidArgument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return exit_parse;
    } catch (const SizeGuardError& e) {
        err << "size guard: " << e.what() << '\n';
        return exit_size_guard;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return exit_precondition;
    } catch (const DisconnectedError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return exit_precondition;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }

    if (human) {
        render_human(report, out, 0);
    } else {
        out << report.dump(2) << '\n';
    }
    return code;
}

} // namespace unimod::cli
