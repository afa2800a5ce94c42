#include "grodep/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <stdexcept>

#include "grodep/channels.hpp"
#include "grodep/errors.hpp"
#include "grodep/ldch.hpp"
#include "grodep/svg_plot.hpp"
#include "grodep/tdch.hpp"

namespace grodep {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// formats, grids, stop rules

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    default: return "svg";
  }
}

OutputFormat output_format_from_string(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "svg") return OutputFormat::svg;
  throw ConfigError("unknown output format '" + s + "' (expected csv, json, or svg)");
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw ConfigError("trailing characters in number '" + s + "'");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + s + "'");
  }
}

long parse_long(const std::string& s) {
  long v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || p != last) throw ConfigError("not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

WidthGrid WidthGrid::explicit_list(std::vector<double> v) {
  WidthGrid g;
  g.values = std::move(v);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    if (i) g.spec += ",";
    g.spec += fmt_short(g.values[i]);
  }
  return g;
}

WidthGrid WidthGrid::linear(double lo, double hi, int count) {
  if (count < 2) throw ConfigError("linear width grid needs at least 2 points");
  if (!(hi > lo)) throw ConfigError("width grid needs hi > lo");
  WidthGrid g;
  g.spec = "lin:" + fmt_short(lo) + ":" + fmt_short(hi) + ":" + std::to_string(count);
  g.values.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    g.values.push_back(lo + (hi - lo) * static_cast<double>(i) / (count - 1));
  }
  g.values.back() = hi;
  return g;
}

WidthGrid WidthGrid::logspace(double lo, double hi, int count) {
  if (count < 2) throw ConfigError("log width grid needs at least 2 points");
  if (!(lo > 0.0)) throw ConfigError("log width grid needs lo > 0");
  if (!(hi > lo)) throw ConfigError("width grid needs hi > lo");
  WidthGrid g;
  g.spec = "log:" + fmt_short(lo) + ":" + fmt_short(hi) + ":" + std::to_string(count);
  const double llo = std::log10(lo), lhi = std::log10(hi);
  g.values.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    g.values.push_back(std::pow(10.0, llo + (lhi - llo) * static_cast<double>(i) / (count - 1)));
  }
  g.values.front() = lo;
  g.values.back() = hi;
  return g;
}

WidthGrid WidthGrid::parse(const std::string& text) {
  if (text.empty()) throw ConfigError("empty width grid");
  if (text.rfind("lin:", 0) == 0 || text.rfind("log:", 0) == 0) {
    const auto parts = split(text, ':');
    if (parts.size() != 4) {
      throw ConfigError("range grid must look like lin:<lo>:<hi>:<count>, got '" + text + "'");
    }
    const double lo = parse_double(parts[1]);
    const double hi = parse_double(parts[2]);
    const long count = parse_long(parts[3]);
    if (count < 2 || count > 100000) throw ConfigError("grid count must be in [2, 100000]");
    return parts[0] == "lin" ? linear(lo, hi, static_cast<int>(count))
                             : logspace(lo, hi, static_cast<int>(count));
  }
  std::vector<double> values;
  for (const std::string& piece : split(text, ',')) {
    if (piece.empty()) throw ConfigError("empty entry in width list '" + text + "'");
    values.push_back(parse_double(piece));
  }
  return explicit_list(std::move(values));
}

std::pair<StopRule, long> parse_stop(const std::string& text) {
  if (text == "kgr") return {StopRule::at_k_gr, 0};
  if (text == "kmax") return {StopRule::at_k_max, 0};
  if (text.rfind("k=", 0) == 0) {
    const long k = parse_long(text.substr(2));
    if (k < 1) throw ConfigError("fixed stop step must be positive");
    return {StopRule::at_fixed_k, k};
  }
  throw ConfigError("unknown stop rule '" + text + "' (expected kgr, kmax, or k=<int>)");
}

std::string stop_to_string(StopRule rule, long fixed_k) {
  if (rule == StopRule::at_fixed_k) return "k=" + std::to_string(fixed_k);
  return to_string(rule);
}

// ---------------------------------------------------------------------------
// config

void SweepConfig::validate() const {
  if (qubits.empty()) throw ConfigError("at least one qubit count is required");
  for (int n : qubits) {
    if (n < 1 || n > 62) throw ConfigError("qubit counts must be in [1, 62]");
    if (target >= (std::uint64_t{1} << n)) {
      throw ConfigError("marked index " + std::to_string(target) +
                        " is out of range for n=" + std::to_string(n));
    }
  }
  if (widths.values.empty()) throw ConfigError("at least one noise width is required");
  for (double w : widths.values) {
    if (!(w >= 0.0 && w <= 1.0)) throw ConfigError("noise widths must be in [0, 1]");
  }
  if (stop == StopRule::at_fixed_k && fixed_k < 1) {
    throw ConfigError("fixed stop step must be positive");
  }
  if (formats.empty()) throw ConfigError("at least one output format is required");
  if (out_dir.empty()) throw ConfigError("an output directory is required");
  for (const auto opt : {max_qubits_tdch, max_qubits_ldch}) {
    if (opt && (*opt < 1 || *opt > 20)) {
      throw ConfigError("qubit limits must be in [1, 20]");
    }
  }
}

SimCapacity SweepConfig::capacity() const {
  SimCapacity cap = SimCapacity::resolve();
  if (max_qubits_tdch) cap.tdch = *max_qubits_tdch;
  if (max_qubits_ldch) cap.ldch = *max_qubits_ldch;
  return cap;
}

nlohmann::ordered_json to_json(const SweepConfig& config) {
  ordered_json j;
  j["model"] = to_string(config.model);
  j["qubits"] = config.qubits;
  if (config.widths.spec.rfind("lin:", 0) == 0 || config.widths.spec.rfind("log:", 0) == 0) {
    j["width"] = config.widths.spec;
  } else {
    j["width"] = config.widths.values;
  }
  j["stop"] = stop_to_string(config.stop, config.fixed_k);
  j["target"] = config.target;
  std::vector<std::string> fmts;
  fmts.reserve(config.formats.size());
  for (OutputFormat f : config.formats) fmts.push_back(to_string(f));
  j["formats"] = fmts;
  j["out_dir"] = config.out_dir;
  if (config.max_qubits_tdch) j["max_qubits_tdch"] = *config.max_qubits_tdch;
  if (config.max_qubits_ldch) j["max_qubits_ldch"] = *config.max_qubits_ldch;
  return j;
}

namespace {

void apply_one_key(SweepConfig& config, const std::string& key, const ordered_json& value) {
  try {
    if (key == "model") {
      config.model = model_from_string(value.get<std::string>());
    } else if (key == "qubits") {
      config.qubits = value.get<std::vector<int>>();
    } else if (key == "width") {
      if (value.is_string()) {
        config.widths = WidthGrid::parse(value.get<std::string>());
      } else {
        config.widths = WidthGrid::explicit_list(value.get<std::vector<double>>());
      }
    } else if (key == "stop") {
      std::tie(config.stop, config.fixed_k) = parse_stop(value.get<std::string>());
    } else if (key == "target") {
      config.target = value.get<std::uint64_t>();
    } else if (key == "formats") {
      config.formats.clear();
      for (const auto& f : value.get<std::vector<std::string>>()) {
        config.formats.push_back(output_format_from_string(f));
      }
    } else if (key == "out_dir") {
      config.out_dir = value.get<std::string>();
    } else if (key == "max_qubits_tdch") {
      config.max_qubits_tdch = value.get<int>();
    } else if (key == "max_qubits_ldch") {
      config.max_qubits_ldch = value.get<int>();
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("bad value for config key '" + key + "': " + e.what());
  }
}

}  // namespace

void apply_json_overrides(SweepConfig& config, const ordered_json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& item : j.items()) apply_one_key(config, item.key(), item.value());
}

SweepConfig config_from_json(const ordered_json& j) {
  SweepConfig config;
  apply_json_overrides(config, j);
  return config;
}

SweepConfig config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

// ---------------------------------------------------------------------------
// file output

namespace {

// All output goes through a temp-file-then-rename so readers never see a
// half-written file and reruns are all-or-nothing per file.
void write_file_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("failed writing " + tmp.string());
  }
  fs::rename(tmp, path);
}

ordered_json column(const std::string& name, const std::string& module,
                    const std::string& formula) {
  ordered_json c;
  c["name"] = name;
  c["module"] = module;
  c["formula"] = formula;
  return c;
}

struct CurveFile {
  std::string path;
  ProbabilityCurve curve;
  std::string module;
  std::string formula;
};

CurveSource curve_source(const ProbabilityCurve& c) {
  return c.points.empty() ? CurveSource::simulated : c.points.front().source;
}

std::string curve_csv(const ProbabilityCurve& curve) {
  std::string out = "k,probability,source\n";
  for (const CurvePoint& p : curve.points) {
    out += std::to_string(p.k) + "," + fmt17(p.probability) + "," + to_string(p.source) + "\n";
  }
  return out;
}

ordered_json curve_json(const ProbabilityCurve& curve) {
  ordered_json j;
  j["meta"] = {{"n", curve.meta.n},
               {"target", curve.meta.target},
               {"model", to_string(curve.meta.model)},
               {"width", curve.meta.width},
               {"stop_step", curve.meta.stop_step},
               {"label", curve.meta.label}};
  ordered_json pts = ordered_json::array();
  for (const CurvePoint& p : curve.points) {
    pts.push_back({{"k", p.k}, {"probability", p.probability}, {"source", to_string(p.source)}});
  }
  j["points"] = pts;
  return j;
}

ordered_json curve_manifest_entry(const CurveFile& f, const std::string& kind) {
  ordered_json e;
  e["path"] = f.path;
  e["kind"] = kind;
  e["model"] = to_string(f.curve.meta.model);
  e["n"] = f.curve.meta.n;
  e["target"] = f.curve.meta.target;
  e["width"] = f.curve.meta.width;
  e["stop_step"] = f.curve.meta.stop_step;
  e["source"] = to_string(curve_source(f.curve));
  e["columns"] = ordered_json::array(
      {column("k", "grover-core", "iteration-index"),
       column("probability", f.module, f.formula),
       column("source", "sweep-cli", "curve-source")});
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// sweep

namespace {

long stop_step_tdch(const GroverInstance& inst, double gamma, StopRule rule, long fixed_k) {
  switch (rule) {
    case StopRule::at_k_gr: return inst.k_grover;
    case StopRule::at_k_max: return k_max_exact(inst, gamma);
    default: return fixed_k;
  }
}

ProbabilityCurve analytic_tdch_curve(const GroverInstance& inst, double gamma, long stop) {
  ProbabilityCurve curve;
  curve.meta.n = inst.n;
  curve.meta.target = inst.target;
  curve.meta.model = Model::tdch;
  curve.meta.width = gamma;
  curve.meta.stop_step = stop;
  curve.meta.label = "gamma=" + fmt_short(gamma);
  curve.points.reserve(static_cast<std::size_t>(stop) + 1);
  for (long k = 0; k <= stop; ++k) {
    curve.points.push_back({k, p_hat_tdch(inst, k, gamma), CurveSource::analytic});
  }
  return curve;
}

ProbabilityCurve derived_ldch_curve(const GroverInstance& inst, double alpha, long stop,
                                    CurveSource source) {
  ProbabilityCurve curve;
  curve.meta.n = inst.n;
  curve.meta.target = inst.target;
  curve.meta.model = Model::ldch;
  curve.meta.width = alpha;
  curve.meta.stop_step = stop;
  curve.meta.label = "alpha=" + fmt_short(alpha) + " " + to_string(source);
  curve.points.reserve(static_cast<std::size_t>(stop) + 1);
  for (long k = 0; k <= stop; ++k) {
    double p = 0.0;
    switch (source) {
      case CurveSource::first_order:
        p = first_order_probability(inst, k, alpha);
        break;
      case CurveSource::bound_lower:
        p = p_hat_tdch(inst, k, gamma_lower_equivalent(inst.n, alpha));
        break;
      default:
        p = p_hat_tdch(inst, k, gamma_upper_equivalent(inst.n, alpha, UpperBound::improved));
        break;
    }
    curve.points.push_back({k, p, source});
  }
  return curve;
}

std::string slot_name(Model model, int n, std::size_t width_index) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "sweep_%s_n%02d_w%02zu", to_string(model).c_str(), n,
                width_index);
  return buf;
}

struct SweepSlot {
  int n = 0;
  std::size_t width_index = 0;
  double width = 0.0;
  std::vector<CurveFile> curves;
};

SweepSlot compute_tdch_slot(const SweepConfig& config, int n, std::size_t wi) {
  SweepSlot slot{n, wi, config.widths.values[wi], {}};
  const GroverInstance inst(n, config.target);
  const long stop = stop_step_tdch(inst, slot.width, config.stop, config.fixed_k);
  CurveFile f;
  f.path = slot_name(Model::tdch, n, wi) + "_analytic";
  f.curve = analytic_tdch_curve(inst, slot.width, stop);
  f.module = "tdch-analytics";
  f.formula = "mixing-closed-form";
  slot.curves.push_back(std::move(f));
  return slot;
}

SweepSlot compute_ldch_slot(const SweepConfig& config, int n, std::size_t wi,
                            const SimCapacity& cap) {
  SweepSlot slot{n, wi, config.widths.values[wi], {}};
  const GroverInstance inst(n, config.target);
  const double alpha = slot.width;

  long stop = 0;
  switch (config.stop) {
    case StopRule::at_k_gr:
      stop = inst.k_grover;
      break;
    case StopRule::at_k_max:
      // window around the sandwich optimum: the upper equivalent width is
      // the optimistic side, so its optimal step bounds the interesting range
      stop = k_max_exact(inst, gamma_upper_equivalent(inst.n, alpha, UpperBound::improved)) + 2;
      break;
    default:
      stop = config.fixed_k;
      break;
  }

  ProbabilityCurve sim = evolve(inst, NoiseSpec(Model::ldch, alpha), stop, cap);
  CurveFile fsim{slot_name(Model::ldch, n, wi) + "_simulated", std::move(sim), "channel-sim",
                 "density-matrix-evolution"};
  slot.curves.push_back(std::move(fsim));
  slot.curves.push_back({slot_name(Model::ldch, n, wi) + "_first_order",
                         derived_ldch_curve(inst, alpha, stop, CurveSource::first_order),
                         "ldch-analytics", "single-error-series"});
  slot.curves.push_back({slot_name(Model::ldch, n, wi) + "_bound_lower",
                         derived_ldch_curve(inst, alpha, stop, CurveSource::bound_lower),
                         "ldch-analytics", "mixing-closed-form-at-lower-equivalent-width"});
  slot.curves.push_back({slot_name(Model::ldch, n, wi) + "_bound_upper",
                         derived_ldch_curve(inst, alpha, stop, CurveSource::bound_upper),
                         "ldch-analytics", "mixing-closed-form-at-upper-equivalent-width"});
  return slot;
}

}  // namespace

RunSummary run_sweep(const SweepConfig& config) {
  config.validate();
  const SimCapacity cap = config.capacity();
  // Fail fast on capacity before any file is written.
  if (config.model == Model::ldch) {
    for (int n : config.qubits) cap.check(Model::ldch, n);
  }
  fs::create_directories(config.out_dir);

  // Deterministic parallel map: slots are computed concurrently but
  // written by this thread in grid order.
  std::vector<std::future<SweepSlot>> futures;
  for (int n : config.qubits) {
    for (std::size_t wi = 0; wi < config.widths.values.size(); ++wi) {
      futures.push_back(std::async(std::launch::async, [&config, &cap, n, wi] {
        return config.model == Model::tdch ? compute_tdch_slot(config, n, wi)
                                           : compute_ldch_slot(config, n, wi, cap);
      }));
    }
  }

  const bool want_csv = std::count(config.formats.begin(), config.formats.end(), OutputFormat::csv);
  const bool want_json =
      std::count(config.formats.begin(), config.formats.end(), OutputFormat::json);
  const bool want_svg = std::count(config.formats.begin(), config.formats.end(), OutputFormat::svg);

  RunSummary summary;
  ordered_json manifest_files = ordered_json::array();
  // slots grouped per n for the per-instance plot
  std::vector<SweepSlot> slots;
  slots.reserve(futures.size());
  for (auto& f : futures) slots.push_back(f.get());

  for (const SweepSlot& slot : slots) {
    for (const CurveFile& cf : slot.curves) {
      if (want_csv) {
        const std::string name = cf.path + ".csv";
        write_file_atomic(fs::path(config.out_dir) / name, curve_csv(cf.curve));
        summary.files.push_back(name);
        ordered_json entry = curve_manifest_entry(cf, "table");
        entry["path"] = name;
        manifest_files.push_back(entry);
      }
      if (want_json) {
        const std::string name = cf.path + ".json";
        write_file_atomic(fs::path(config.out_dir) / name, curve_json(cf.curve).dump(2) + "\n");
        summary.files.push_back(name);
        ordered_json entry = curve_manifest_entry(cf, "table");
        entry["path"] = name;
        manifest_files.push_back(entry);
      }
    }
  }

  if (want_svg) {
    if (config.model == Model::tdch) {
      // one plot per instance size, widths as series
      for (int n : config.qubits) {
        PlotSpec plot;
        plot.title = "success probability vs iterations, total depolarizing, n=" +
                     std::to_string(n);
        plot.x_label = "iterations k";
        plot.y_label = "success probability";
        for (const SweepSlot& slot : slots) {
          if (slot.n != n) continue;
          PlotSeries series;
          series.label = slot.curves[0].curve.meta.label;
          for (const CurvePoint& p : slot.curves[0].curve.points) {
            series.x.push_back(static_cast<double>(p.k));
            series.y.push_back(p.probability);
          }
          plot.series.push_back(std::move(series));
        }
        char buf[48];
        std::snprintf(buf, sizeof buf, "sweep_tdch_n%02d.svg", n);
        write_file_atomic(fs::path(config.out_dir) / buf, render_svg(plot));
        summary.files.push_back(buf);
        manifest_files.push_back({{"path", buf}, {"kind", "plot"}, {"n", n}});
      }
    } else {
      // one plot per (size, width): the simulated curve and its companions
      for (const SweepSlot& slot : slots) {
        PlotSpec plot;
        plot.title = "success probability vs iterations, local depolarizing, n=" +
                     std::to_string(slot.n) + ", alpha=" + fmt_short(slot.width);
        plot.x_label = "iterations k";
        plot.y_label = "success probability";
        for (const CurveFile& cf : slot.curves) {
          PlotSeries series;
          series.label = to_string(curve_source(cf.curve));
          for (const CurvePoint& p : cf.curve.points) {
            series.x.push_back(static_cast<double>(p.k));
            series.y.push_back(p.probability);
          }
          plot.series.push_back(std::move(series));
        }
        const std::string name = slot_name(Model::ldch, slot.n, slot.width_index) + ".svg";
        write_file_atomic(fs::path(config.out_dir) / name, render_svg(plot));
        summary.files.push_back(name);
        manifest_files.push_back(
            {{"path", name}, {"kind", "plot"}, {"n", slot.n}, {"width", slot.width}});
      }
    }
  }

  ordered_json manifest;
  manifest["generator"] = "grodep";
  manifest["version"] = "0.1.0";
  manifest["command"] = "sweep";
  manifest["config"] = to_json(config);
  manifest["files"] = manifest_files;
  write_file_atomic(fs::path(config.out_dir) / "manifest.json", manifest.dump(2) + "\n");
  summary.files.push_back("manifest.json");
  return summary;
}

// ---------------------------------------------------------------------------
// cost

namespace {

ordered_json tdch_cost_json(const GroverInstance& inst, double gamma, StopRule rule,
                            long fixed_k) {
  ordered_json j;
  j["model"] = "tdch";
  j["n"] = inst.n;
  j["target"] = inst.target;
  j["width"] = gamma;
  j["stop_rule"] = stop_to_string(rule, fixed_k);
  TdchCostReport rep;
  if (rule == StopRule::at_k_gr) {
    rep = mc_tdch_at_kgr(inst, gamma);
  } else if (rule == StopRule::at_k_max) {
    rep = mc_tdch_at_kmax(inst, gamma);
  } else {
    rep.stop_step = fixed_k;
    rep.probability = p_hat_tdch(inst, fixed_k, gamma);
    rep.mean_cost = mean_cost(fixed_k, rep.probability);
  }
  j["k_used"] = rep.stop_step;
  j["probability"] = rep.probability;
  j["mean_cost"] = rep.mean_cost;
  ordered_json approx = ordered_json::object();
  if (rep.approx_small_width) approx["small_width"] = *rep.approx_small_width;
  if (rep.approx_large_n) approx["large_n"] = *rep.approx_large_n;
  j["approximations"] = approx;
  if (inst.n >= 4) {
    j["gamma_classical"] = {{"exact", gamma_classical(inst, ThresholdForm::exact)},
                            {"asymptotic", gamma_classical(inst, ThresholdForm::asymptotic)}};
  }
  return j;
}

ordered_json ldch_cost_json(const GroverInstance& inst, double alpha, StopRule rule,
                            long fixed_k, const SimCapacity& cap) {
  McOptions options;
  options.fixed_k = fixed_k;
  options.capacity = cap;
  options.want_zeta = (rule == StopRule::at_k_gr);
  const MeanCostReport rep = mc_ldch(inst, alpha, rule, options);
  ordered_json j;
  j["model"] = "ldch";
  j["n"] = rep.n;
  j["target"] = inst.target;
  j["width"] = rep.width;
  j["stop_rule"] = stop_to_string(rule, fixed_k);
  j["k_used"] = rep.k_used;
  if (rep.probability) j["probability"] = *rep.probability;
  if (rep.mean_cost) j["mean_cost"] = *rep.mean_cost;
  j["bounds"] = {{"lower", rep.bounds.lower},     {"upper", rep.bounds.upper},
                 {"k_lower", rep.bounds.k_lower}, {"k_upper", rep.bounds.k_upper},
                 {"gamma_lower", rep.bounds.gamma_lower},
                 {"gamma_upper", rep.bounds.gamma_upper}};
  if (rep.zeta) j["zeta"] = *rep.zeta;
  j["alpha_classical_bound"] = alpha_classical_bound(inst);
  return j;
}

}  // namespace

RunSummary run_cost(const SweepConfig& config) {
  config.validate();
  const SimCapacity cap = config.capacity();
  fs::create_directories(config.out_dir);

  ordered_json reports = ordered_json::array();
  for (int n : config.qubits) {
    const GroverInstance inst(n, config.target);
    for (double w : config.widths.values) {
      if (config.model == Model::tdch) {
        reports.push_back(tdch_cost_json(inst, w, config.stop, config.fixed_k));
      } else {
        reports.push_back(ldch_cost_json(inst, w, config.stop, config.fixed_k, cap));
      }
    }
  }

  RunSummary summary;
  write_file_atomic(fs::path(config.out_dir) / "cost_report.json", reports.dump(2) + "\n");
  summary.files.push_back("cost_report.json");

  ordered_json manifest;
  manifest["generator"] = "grodep";
  manifest["version"] = "0.1.0";
  manifest["command"] = "cost";
  manifest["config"] = to_json(config);
  manifest["files"] = ordered_json::array();
  manifest["files"].push_back(
      {{"path", "cost_report.json"},
       {"kind", "report"},
       {"fields",
        ordered_json::array(
            {column("probability", "costing", "stop-rule-success-probability"),
             column("mean_cost", "costing", "repeat-until-success-expectation"),
             column("bounds", "ldch-analytics", "width-equivalence-sandwich"),
             column("zeta", "costing", "small-width-cost-slope"),
             column("gamma_classical", "costing", "classical-crossover-width"),
             column("alpha_classical_bound", "costing", "classical-crossover-width")})}});
  write_file_atomic(fs::path(config.out_dir) / "manifest.json", manifest.dump(2) + "\n");
  summary.files.push_back("manifest.json");
  return summary;
}

// ---------------------------------------------------------------------------
// bundled figure presets

namespace {

std::vector<double> logspace_values(double lo, double hi, int count) {
  return WidthGrid::logspace(lo, hi, count).values;
}

struct TableFile {
  std::string path;  // with extension
  std::string header;
  std::vector<std::string> rows;
  ordered_json manifest_entry;
};

void write_tables_and_manifest(const std::string& id, const std::string& out_dir,
                               std::vector<TableFile>& tables, const PlotSpec& plot,
                               RunSummary& summary) {
  ordered_json manifest_files = ordered_json::array();
  for (TableFile& t : tables) {
    std::string content = t.header + "\n";
    for (const std::string& row : t.rows) content += row + "\n";
    write_file_atomic(fs::path(out_dir) / t.path, content);
    summary.files.push_back(t.path);
    manifest_files.push_back(t.manifest_entry);
  }
  const std::string svg_name = id + ".svg";
  write_file_atomic(fs::path(out_dir) / svg_name, render_svg(plot));
  summary.files.push_back(svg_name);
  manifest_files.push_back(
      {{"path", svg_name}, {"kind", "plot"}, {"series", plot.series.size()}});

  ordered_json manifest;
  manifest["generator"] = "grodep";
  manifest["version"] = "0.1.0";
  manifest["command"] = "figure " + id;
  manifest["files"] = manifest_files;
  write_file_atomic(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
  summary.files.push_back("manifest.json");
}

ordered_json probability_table_entry(const std::string& path, const std::string& axis,
                                     int n, double width, const std::string& module,
                                     const std::string& formula) {
  ordered_json e;
  e["path"] = path;
  e["kind"] = "table";
  e["n"] = n;
  e["width"] = width;
  e["columns"] = ordered_json::array(
      {column(axis, "sweep-cli", "grid-axis"), column("probability", module, formula),
       column("source", "sweep-cli", "curve-source")});
  return e;
}

RunSummary figure_probability_vs_k_total(const std::string& id, const std::string& out_dir,
                                         int n, const std::vector<double>& gammas,
                                         const std::vector<std::string>& labels, long kmax,
                                         bool normalize_axis) {
  const GroverInstance inst(n, 0);
  RunSummary summary;
  std::vector<TableFile> tables;
  PlotSpec plot;
  plot.title = "success probability under total depolarizing, n=" + std::to_string(n);
  plot.x_label = normalize_axis ? "k / k_gr" : "iterations k";
  plot.y_label = "success probability";

  for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
    TableFile t;
    t.path = id + "_" + labels[gi] + ".csv";
    t.header = "k,probability,source";
    PlotSeries series;
    series.label = "gamma=" + fmt_short(gammas[gi]);
    for (long k = 0; k <= kmax; ++k) {
      const double p = p_hat_tdch(inst, k, gammas[gi]);
      t.rows.push_back(std::to_string(k) + "," + fmt17(p) + ",analytic");
      series.x.push_back(normalize_axis
                             ? static_cast<double>(k) / static_cast<double>(inst.k_grover)
                             : static_cast<double>(k));
      series.y.push_back(p);
    }
    t.manifest_entry = probability_table_entry(t.path, "k", n, gammas[gi], "tdch-analytics",
                                               "mixing-closed-form");
    tables.push_back(std::move(t));
    plot.series.push_back(std::move(series));
  }
  write_tables_and_manifest(id, out_dir, tables, plot, summary);
  return summary;
}

RunSummary figure_fig2(const std::string& out_dir) {
  // probability vs normalized iteration count at fixed width, growing n
  const double gamma = 0.01;
  const std::vector<int> sizes = {10, 12, 14, 16};
  const std::vector<std::string> labels = {"A", "B", "C", "D"};
  RunSummary summary;
  std::vector<TableFile> tables;
  PlotSpec plot;
  plot.title = "total depolarizing at gamma=0.01, instance sizes compared";
  plot.x_label = "k / k_gr";
  plot.y_label = "success probability";

  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const GroverInstance inst(sizes[i], 0);
    TableFile t;
    t.path = "fig2_" + labels[i] + ".csv";
    t.header = "k,probability,source";
    PlotSeries series;
    series.label = "n=" + std::to_string(sizes[i]);
    for (long k = 0; k <= 2 * inst.k_grover; ++k) {
      const double p = p_hat_tdch(inst, k, gamma);
      t.rows.push_back(std::to_string(k) + "," + fmt17(p) + ",analytic");
      series.x.push_back(static_cast<double>(k) / static_cast<double>(inst.k_grover));
      series.y.push_back(p);
    }
    t.manifest_entry = probability_table_entry(t.path, "k", sizes[i], gamma,
                                               "tdch-analytics", "mixing-closed-form");
    tables.push_back(std::move(t));
    plot.series.push_back(std::move(series));
  }
  write_tables_and_manifest("fig2", out_dir, tables, plot, summary);
  return summary;
}

RunSummary figure_fig3(const std::string& out_dir) {
  // optimal-stop shrinkage across sizes and widths, one wide table
  RunSummary summary;
  std::vector<double> gammas = {0.0};
  for (double g : logspace_values(1e-3, 1.0, 24)) gammas.push_back(g);

  std::vector<TableFile> tables(1);
  TableFile& t = tables[0];
  t.path = "fig3.csv";
  t.header = "n,gamma,kmax,kgr,ratio";
  PlotSpec plot;
  plot.title = "optimal stop relative to the noiseless stop";
  plot.x_label = "gamma";
  plot.y_label = "kmax / kgr";
  plot.log_x = true;

  for (int n = 6; n <= 14; ++n) {
    const GroverInstance inst(n, 0);
    PlotSeries series;
    series.label = "n=" + std::to_string(n);
    for (double g : gammas) {
      const long km = k_max_exact(inst, g);
      const double ratio = static_cast<double>(km) / static_cast<double>(inst.k_grover);
      t.rows.push_back(std::to_string(n) + "," + fmt17(g) + "," + std::to_string(km) + "," +
                       std::to_string(inst.k_grover) + "," + fmt17(ratio));
      series.x.push_back(g);
      series.y.push_back(ratio);
    }
    plot.series.push_back(std::move(series));
  }
  t.manifest_entry = {
      {"path", t.path},
      {"kind", "table"},
      {"columns",
       ordered_json::array({column("n", "sweep-cli", "grid-axis"),
                            column("gamma", "sweep-cli", "grid-axis"),
                            column("kmax", "tdch-analytics", "optimal-stop-closed-form"),
                            column("kgr", "grover-core", "noiseless-stop"),
                            column("ratio", "tdch-analytics", "kmax-over-kgr")})}};
  write_tables_and_manifest("fig3", out_dir, tables, plot, summary);
  return summary;
}

RunSummary figure_fig4(const std::string& out_dir) {
  // the optimal stop at n=10: grid argmax vs the closed form and the two
  // regime estimates
  const GroverInstance inst(10, 0);
  RunSummary summary;
  std::vector<double> gammas = {0.0};
  for (double g : logspace_values(1e-4, 1.0, 49)) gammas.push_back(g);

  struct Series {
    const char* label;
    const char* source;
    const char* formula;
  };
  const Series defs[4] = {
      {"A", "grid-argmax", "grid-argmax"},
      {"B", "closed-form", "optimal-stop-closed-form"},
      {"C", "small-width", "optimal-stop-small-width"},
      {"D", "large-width", "optimal-stop-large-width"},
  };

  std::vector<TableFile> tables;
  PlotSpec plot;
  plot.title = "optimal stop under total depolarizing, n=10";
  plot.x_label = "gamma";
  plot.y_label = "optimal iterations";
  plot.log_x = true;

  for (int s = 0; s < 4; ++s) {
    TableFile t;
    t.path = std::string("fig4_") + defs[s].label + ".csv";
    t.header = "gamma,kmax,source";
    PlotSeries series;
    series.label = defs[s].source;
    for (double g : gammas) {
      long k = 0;
      if (s == 0) {
        k = k_max_grid_search(inst, g);
      } else if (s == 1) {
        k = k_max_exact(inst, g);
      } else if (s == 2) {
        k = k_max_small_gamma(inst, g);
      } else {
        if (g == 0.0) continue;  // estimate undefined at zero width
        k = k_max_large_gamma(g);
      }
      t.rows.push_back(fmt17(g) + "," + std::to_string(k) + "," + defs[s].source);
      series.x.push_back(g);
      series.y.push_back(static_cast<double>(k));
    }
    t.manifest_entry = {
        {"path", t.path},
        {"kind", "table"},
        {"n", 10},
        {"columns",
         ordered_json::array({column("gamma", "sweep-cli", "grid-axis"),
                              column("kmax", "tdch-analytics", defs[s].formula),
                              column("source", "sweep-cli", "curve-source")})}};
    tables.push_back(std::move(t));
    plot.series.push_back(std::move(series));
  }
  write_tables_and_manifest("fig4", out_dir, tables, plot, summary);
  return summary;
}

RunSummary figure_fig6(const std::string& out_dir) {
  // local depolarizing at the noiseless stop: simulation, the first-order
  // series, and the three sandwich bounds, swept over the width
  const GroverInstance inst(8, 0);
  const long k = inst.k_grover;  // 12
  const int points = 40;
  RunSummary summary;

  struct Series {
    const char* label;
    CurveSource source;
    const char* module;
    const char* formula;
  };
  const Series defs[5] = {
      {"A", CurveSource::simulated, "channel-sim", "density-matrix-evolution"},
      {"B", CurveSource::first_order, "ldch-analytics", "single-error-series"},
      {"C", CurveSource::bound_lower, "ldch-analytics",
       "mixing-closed-form-at-lower-equivalent-width"},
      {"D", CurveSource::bound_upper, "ldch-analytics",
       "mixing-closed-form-at-improved-upper-width"},
      {"E", CurveSource::bound_upper, "ldch-analytics",
       "mixing-closed-form-at-power-upper-width"},
  };
  const char* plot_labels[5] = {"simulated", "first-order", "lower bound",
                                "upper bound (improved)", "upper bound (power)"};

  std::vector<TableFile> tables;
  PlotSpec plot;
  plot.title = "local depolarizing at the noiseless stop, n=8, k=" + std::to_string(k);
  plot.x_label = "alpha";
  plot.y_label = "success probability";

  const SimCapacity cap = SimCapacity::resolve();
  for (int s = 0; s < 5; ++s) {
    TableFile t;
    t.path = std::string("fig6_") + defs[s].label + ".csv";
    t.header = "alpha,probability,source";
    PlotSeries series;
    series.label = plot_labels[s];
    for (int i = 0; i < points; ++i) {
      const double alpha = 0.08 * static_cast<double>(i) / (points - 1);
      double p = 0.0;
      switch (s) {
        case 0:
          p = evolve(inst, NoiseSpec(Model::ldch, alpha), k, cap)
                  .points[static_cast<std::size_t>(k)]
                  .probability;
          break;
        case 1:
          p = first_order_probability(inst, k, alpha);
          break;
        case 2:
          p = p_hat_tdch(inst, k, gamma_lower_equivalent(inst.n, alpha));
          break;
        case 3:
          p = p_hat_tdch(inst, k,
                         gamma_upper_equivalent(inst.n, alpha, UpperBound::improved));
          break;
        default:
          p = p_hat_tdch(inst, k, gamma_upper_equivalent(inst.n, alpha, UpperBound::power));
          break;
      }
      t.rows.push_back(fmt17(alpha) + "," + fmt17(p) + "," + to_string(defs[s].source));
      series.x.push_back(alpha);
      series.y.push_back(p);
    }
    t.manifest_entry = probability_table_entry(t.path, "alpha", inst.n, 0.0, defs[s].module,
                                               defs[s].formula);
    t.manifest_entry.erase("width");
    tables.push_back(std::move(t));
    plot.series.push_back(std::move(series));
  }
  write_tables_and_manifest("fig6", out_dir, tables, plot, summary);
  return summary;
}

}  // namespace

std::vector<std::string> figure_ids() { return {"fig1", "fig2", "fig3", "fig4", "fig6"}; }

RunSummary reproduce_figure(const std::string& id, const std::string& out_dir) {
  if (out_dir.empty()) throw ConfigError("an output directory is required");
  fs::create_directories(out_dir);
  if (id == "fig1") {
    // five widths from noiseless to fully mixing at n=10
    return figure_probability_vs_k_total(
        "fig1", out_dir, 10, {0.0, 1.0 / 128.0, 1.0 / 32.0, 0.125, 1.0},
        {"A", "B", "C", "D", "E"}, 60, false);
  }
  if (id == "fig2") return figure_fig2(out_dir);
  if (id == "fig3") return figure_fig3(out_dir);
  if (id == "fig4") return figure_fig4(out_dir);
  if (id == "fig6") return figure_fig6(out_dir);
  std::string known;
  for (const std::string& f : figure_ids()) known += (known.empty() ? "" : ", ") + f;
  throw ConfigError("unknown figure id '" + id + "' (available: " + known + ")");
}

}  // namespace grodep
