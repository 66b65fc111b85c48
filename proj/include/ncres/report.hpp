#pragma once

#include "ncres/boundary_residue.hpp"
#include "ncres/clifford.hpp"
#include "ncres/comparison.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ncres {

const char* engine_version();

struct RunConfig {
  std::string command = "all";  // phi | verify-traces | functional | all
  std::vector<Pairing> pairings{Pairing::A, Pairing::B};
  std::vector<std::string> assignments;  // raw `sym=value` lists, echoed in the report
  OmegaModel omega = OmegaModel::normal_form;
  unsigned threads = 0;
};

/// Parses `name=value[,name=value...]`. Group names dU, dV, dW and W expand to
/// every component. Unknown symbols and xi components are rejected with
/// std::invalid_argument.
Substitution parse_assignments(const std::vector<std::string>& args);

struct RunResult {
  nlohmann::ordered_json document;
  int exit_code = 0;  // 0 all match, 2 some certified mismatch
};

/// Runs the requested pipelines with the substitutions applied to both sides of
/// every comparison. Engine errors propagate as exceptions.
RunResult run(const RunConfig& config);

/// Fixed-width text rendering of a report document.
std::string render_text(const nlohmann::ordered_json& doc);

}  // namespace ncres
