#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "grodep/capacity.hpp"
#include "grodep/costing.hpp"

namespace grodep {

enum class OutputFormat { csv, json, svg };

std::string to_string(OutputFormat f);
OutputFormat output_format_from_string(const std::string& s);

// Noise width grid. Three textual forms: an explicit comma list
// "0.1,0.2,0.5", linear "lin:<lo>:<hi>:<count>", log "log:<lo>:<hi>:<count>".
struct WidthGrid {
  std::string spec;            // canonical textual form
  std::vector<double> values;  // resolved grid

  static WidthGrid explicit_list(std::vector<double> v);
  static WidthGrid linear(double lo, double hi, int count);
  static WidthGrid logspace(double lo, double hi, int count);
  static WidthGrid parse(const std::string& text);  // throws ConfigError
};

// "kgr" | "kmax" | "k=<int>"  ->  rule plus the fixed step (0 unless k=).
std::pair<StopRule, long> parse_stop(const std::string& text);
std::string stop_to_string(StopRule rule, long fixed_k);

// One sweep or cost run: which model, which instance sizes, which widths,
// where to stop, what to write.
struct SweepConfig {
  Model model = Model::tdch;
  std::vector<int> qubits;
  WidthGrid widths;
  StopRule stop = StopRule::at_k_gr;
  long fixed_k = 0;
  std::uint64_t target = 0;
  std::vector<OutputFormat> formats = {OutputFormat::csv};
  std::string out_dir;
  std::optional<int> max_qubits_tdch;
  std::optional<int> max_qubits_ldch;

  void validate() const;      // throws ConfigError
  SimCapacity capacity() const;  // defaults, then env, then the overrides
};

nlohmann::ordered_json to_json(const SweepConfig& config);
SweepConfig config_from_json(const nlohmann::ordered_json& j);
SweepConfig config_from_json_file(const std::string& path);
// Overlay: every key present in the file replaces the corresponding field.
void apply_json_overrides(SweepConfig& config, const nlohmann::ordered_json& j);

struct RunSummary {
  std::vector<std::string> files;  // paths written, manifest last
};

// Probability-vs-step curves over qubits x widths. Total-channel sweeps
// are analytic (closed form, any size); local-channel sweeps simulate and
// add the first-order and sandwich-bound companions.
RunSummary run_sweep(const SweepConfig& config);

// Mean-cost reports over qubits x widths into cost_report.json.
RunSummary run_cost(const SweepConfig& config);

// Bundled demonstration presets; see figure_ids() for the catalogue.
RunSummary reproduce_figure(const std::string& id, const std::string& out_dir);
std::vector<std::string> figure_ids();

}  // namespace grodep
