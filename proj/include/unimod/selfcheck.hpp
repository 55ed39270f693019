#ifndef UNIMOD_SELFCHECK_HPP
#define UNIMOD_SELFCHECK_HPP

#include "unimod/random_measures.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace unimod {

struct SelfcheckOptions {
    std::size_t max_vertices = 7;     // exhaustive graph suite bound
    std::size_t random_measures = 200;
    std::size_t measure_vertices = 6; // graphs used inside random measures
    std::size_t mixtures = 50;        // decomposition round trips
    std::uint64_t seed = default_seed;
};

struct SelfcheckViolation {
    std::string check;
    std::string witness; // JSON of the offending graph or measure
};

struct SelfcheckResult {
    std::size_t graphs = 0;
    std::size_t measures = 0;
    std::map<std::string, std::size_t> passed; // check -> instances passed
    std::vector<SelfcheckViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Graph invariants over every connected graph up to max_vertices, then
// measure-level theorems over seeded random measures.
SelfcheckResult run_selfcheck(const SelfcheckOptions& options);

// One graph's battery; appends to `result`.
void check_graph(const FiniteGraph& g, SelfcheckResult& result);
// One measure's battery; appends to `result`.
void check_measure(const RootedMeasure& mu, SelfcheckResult& result);
void check_decomposition(const RootedMeasure& mu, SelfcheckResult& result);

nlohmann::json to_json(const SelfcheckResult& result);

} // namespace unimod

#endif // UNIMOD_SELFCHECK_HPP
