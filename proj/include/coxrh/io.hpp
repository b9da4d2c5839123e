#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "coxrh/diagram.hpp"
#include "coxrh/racg.hpp"

namespace coxrh {

enum class InputFormat { Auto, Json, Txt };

/// Parsed input: always a Coxeter matrix, plus the source graph when the
/// input was given in graph form.
struct InputDocument {
  std::optional<CoxeterMatrix> matrix;
  std::optional<SimpleGraph> graph;

  const CoxeterMatrix& require_matrix() const { return *matrix; }
  const SimpleGraph& require_graph() const;
};

/// Accepts JSON ({"generators":[...],"matrix":[[...]]} with 0 or "inf" for
/// infinity, or {"vertices":[...],"edges":[[...]]}), the TXT pair list, or a
/// named family such as "chain4:7", "A5", "I2:7", "At:2", "racg-cycle:5".
InputDocument parse_input(const std::string& text,
                          InputFormat format = InputFormat::Auto);

/// Serializes a matrix in the TXT input format (used for pinned fixtures).
std::string to_txt(const CoxeterMatrix& m);

struct CommandOptions {
  bool json = false;
  std::optional<std::vector<std::string>> subset;
  std::optional<std::vector<std::vector<std::string>>> types;
  std::optional<std::string> s0;
  int min_pairs = 2;
  double tol = 1e-9;
};

CommandOptions parse_options_json(const std::string& options_json);

struct CommandResult {
  std::string text;              // human-readable report
  nlohmann::ordered_json json;   // machine-readable report
};

/// Dispatches one CLI command against a parsed input. Commands: classify,
/// perp, moussong, relhyp-verify, relhyp-minimal, decide, maxparab,
/// isolated-flats, racg, dot.
CommandResult run_command(const InputDocument& doc, const std::string& command,
                          const CommandOptions& options);

/// Canonical serialization of a machine-readable report.
std::string dump_report(const nlohmann::ordered_json& report);

}  // namespace coxrh
