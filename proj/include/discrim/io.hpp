#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "discrim/graph.hpp"
#include "discrim/optimize.hpp"
#include "discrim/stats.hpp"

namespace discrim {

// State file format: {"n": int, "kind": "pure"|"mixed", "data": [[re,im],...]}.
nlohmann::json state_to_json(const DenseState& s);
DenseState state_from_json(const nlohmann::json& j);

// Graph file format: {"n": int, "edges": [[i,j],...]} with 1-based vertices.
nlohmann::json graph_to_json(const GraphSpec& g);
GraphSpec graph_from_json(const nlohmann::json& j);

// Params: {"angles": [[phi,theta,psi],...], "perm": [...]} with 1-based perm.
nlohmann::json params_to_json(const LocalUnitaryParams& p);
LocalUnitaryParams params_from_json(const nlohmann::json& j);

// Reports serialize infinities as the string "inf".
nlohmann::json report_to_json(const DiscriminationReport& r);
nlohmann::json ranked_families_to_json(const std::vector<RankedFamily>& families);
nlohmann::json sample_runs_to_json(const std::vector<SampleRun>& runs);

std::string noise_curve_to_csv(const std::vector<NoisePoint>& points);

/// Resolves a builtin state name (ghz3, ghz4, w3, what_w3, cluster4) or,
/// failing that, loads the path as a state JSON file.
DenseState resolve_state(const std::string& name_or_path);

/// The full stabilizer group of a state, found by scanning all signed Pauli
/// words; errors when the state is not a stabilizer state.
std::vector<PauliString> stabilizer_ops_of(const DenseState& s);

/// Resolves an observable family for the given rho: "stabilizers",
/// "two-point", "three-point" (weight-filtered stabilizers), "comp-basis",
/// or a file with one Pauli label per line.
std::vector<Observable> resolve_observables(const std::string& name_or_path,
                                            const DenseState& rho);

}  // namespace discrim
