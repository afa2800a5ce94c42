// Command-line front end: sweep, figure, and cost subcommands over the
// analytics library. Exit codes: 0 success, 2 configuration error,
// 3 capacity exceeded, 1 anything else.

#include <cstdio>
#include <exception>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grodep/errors.hpp"
#include "grodep/sweep.hpp"

namespace {

std::vector<int> parse_qubits(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = text.find(',', start);
    const std::string piece =
        text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    if (piece.empty()) throw grodep::ConfigError("empty entry in qubit list '" + text + "'");
    try {
      std::size_t used = 0;
      const int v = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::exception&) {
      throw grodep::ConfigError("not an integer in qubit list: '" + piece + "'");
    }
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

struct CliArgs {
  std::string model = "tdch";
  std::string qubits;
  std::string width;
  std::string stop = "kgr";
  std::string formats = "csv";
  std::string out_dir;
  std::string config_path;
  std::uint64_t target = 0;
  std::string figure_id;
};

nlohmann::ordered_json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw grodep::ConfigError("cannot open config file '" + path + "'");
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw grodep::ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return j;
}

grodep::SweepConfig build_config(const CliArgs& args) {
  grodep::SweepConfig config;
  config.model = grodep::model_from_string(args.model);
  if (!args.qubits.empty()) config.qubits = parse_qubits(args.qubits);
  if (!args.width.empty()) config.widths = grodep::WidthGrid::parse(args.width);
  std::tie(config.stop, config.fixed_k) = grodep::parse_stop(args.stop);
  config.target = args.target;
  config.formats.clear();
  std::size_t start = 0;
  const std::string& f = args.formats;
  while (start <= f.size()) {
    const std::size_t pos = f.find(',', start);
    config.formats.push_back(grodep::output_format_from_string(
        f.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  config.out_dir = args.out_dir;
  // A config file wins over flags: load it last, key by key.
  if (!args.config_path.empty()) {
    grodep::apply_json_overrides(config, load_json(args.config_path));
  }
  return config;
}

void report(const grodep::RunSummary& summary, const std::string& out_dir) {
  for (const std::string& f : summary.files) {
    std::printf("wrote %s/%s\n", out_dir.c_str(), f.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grover search under depolarizing noise: sweeps, figures, costs"};
  app.require_subcommand(1);
  CliArgs args;

  CLI::App* sweep = app.add_subcommand("sweep", "probability-vs-iterations curves");
  sweep->add_option("--model", args.model, "noise model: tdch or ldch");
  sweep->add_option("--qubits", args.qubits, "comma list of register sizes, e.g. 8,10");
  sweep->add_option("--width", args.width,
                    "noise widths: comma list, lin:<lo>:<hi>:<n>, or log:<lo>:<hi>:<n>");
  sweep->add_option("--stop", args.stop, "stop rule: kgr, kmax, or k=<int>");
  sweep->add_option("--target", args.target, "marked basis state (default 0)");
  sweep->add_option("--format", args.formats, "comma list of csv,json,svg");
  sweep->add_option("--out", args.out_dir, "output directory");
  sweep->add_option("--config", args.config_path, "JSON config file (overrides flags)");

  CLI::App* figure = app.add_subcommand("figure", "bundled demonstration figures");
  figure->add_option("--id", args.figure_id, "figure id (fig1..fig4, fig6)")->required();
  figure->add_option("--out", args.out_dir, "output directory")->required();

  CLI::App* cost = app.add_subcommand("cost", "mean-cost reports");
  cost->add_option("--model", args.model, "noise model: tdch or ldch");
  cost->add_option("--qubits", args.qubits, "comma list of register sizes");
  cost->add_option("--width", args.width, "noise widths (same grammar as sweep)");
  cost->add_option("--stop", args.stop, "stop rule: kgr, kmax, or k=<int>");
  cost->add_option("--target", args.target, "marked basis state (default 0)");
  cost->add_option("--out", args.out_dir, "output directory");
  cost->add_option("--config", args.config_path, "JSON config file (overrides flags)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (figure->parsed()) {
      report(grodep::reproduce_figure(args.figure_id, args.out_dir), args.out_dir);
      return 0;
    }
    const grodep::SweepConfig config = build_config(args);
    if (sweep->parsed()) {
      report(grodep::run_sweep(config), config.out_dir);
    } else if (cost->parsed()) {
      report(grodep::run_cost(config), config.out_dir);
    }
    return 0;
  } catch (const grodep::CapacityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const grodep::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
