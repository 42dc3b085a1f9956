#include "leuven/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "leuven/equality.hpp"
#include "leuven/errors.hpp"
#include "leuven/kernel.hpp"
#include "leuven/preprocess.hpp"

namespace leuven::cli {

namespace {

using nlohmann::ordered_json;

AlphabetSpec resolve_alphabet(const std::string& encoding) {
  if (encoding == "ascii7") return AlphabetSpec::ascii7();
  if (encoding == "lower26") return AlphabetSpec::lower26();
  if (encoding == "dna4") return AlphabetSpec::dna4();
  if (encoding.rfind("custom:", 0) == 0) {
    return AlphabetSpec::load_file(encoding.substr(7));
  }
  throw InvalidParams("unknown encoding '" + encoding + "'");
}

kernel::BandSpec resolve_band(const ComputeConfig& config, std::size_t m, std::size_t n) {
  if (config.mode == "exact") return kernel::BandSpec::exact(m, n);
  if (config.mode == "skip") return kernel::BandSpec::skip(m, n);
  if (config.mode == "approx") {
    if (!config.has_ell) throw InvalidParams("--mode approx requires --ell");
    return kernel::BandSpec::approx(config.ell);
  }
  throw InvalidParams("unknown mode '" + config.mode + "'");
}

kernel::KeyEncoding resolve_key_encoding(const std::string& name) {
  if (name == "negated") return kernel::KeyEncoding::negated;
  if (name == "original") return kernel::KeyEncoding::original;
  throw InvalidParams("unknown key encoding '" + name + "'");
}

}  // namespace

RunReport compute_report(const ComputeConfig& config) {
  const AlphabetSpec spec = resolve_alphabet(config.encoding);
  const kernel::BandSpec band = resolve_band(config, config.a.size(), config.b.size());

  SimBackend backend(NoiseParams{config.budget});
  kernel::DistanceOptions options;
  options.encoding = resolve_key_encoding(config.key_encoding);

  const auto t0 = std::chrono::steady_clock::now();
  kernel::DistanceRun run;
  std::uint64_t preprocessing_pbs = 0;
  if (config.preprocess) {
    const EncryptedString xs = encrypt_string(config.a, spec, backend);
    const StatsSnapshot before = backend.stats();
    const preprocess::EqTable table = preprocess::build_eq_table(backend, xs, spec);
    preprocessing_pbs = backend.stats().pbs_count - before.pbs_count;
    run = preprocess::distance_preprocessed(backend, table, config.b, band, options);
  } else {
    const EncryptedString xs = encrypt_string(config.a, spec, backend);
    const EncryptedString ys = encrypt_string(config.b, spec, backend);
    run = kernel::distance_encrypted(backend, xs, ys, band, options);
  }
  const auto t1 = std::chrono::steady_clock::now();

  RunReport report;
  report.distance = backend.decrypt(run.score);
  report.mode = config.mode;
  report.half_width = band.half_width;
  report.visited_cells = run.visited_cells;
  report.pbs_total = backend.stats().pbs_count;
  report.pbs_equality = run.equality_pbs;
  report.pbs_kernel = run.kernel_pbs;
  report.refresh_count = run.refreshes;
  report.preprocessing_pbs = preprocessing_pbs;
  report.max_key_variance = run.max_key_variance;
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return report;
}

std::string report_json(const RunReport& report, bool include_timing) {
  ordered_json j;
  j["distance"] = report.distance;
  j["mode"] = report.mode;
  j["half_width"] = report.half_width;
  j["visited_cells"] = report.visited_cells;
  j["pbs_total"] = report.pbs_total;
  j["pbs_equality"] = report.pbs_equality;
  j["pbs_kernel"] = report.pbs_kernel;
  j["refresh_count"] = report.refresh_count;
  j["preprocessing_pbs"] = report.preprocessing_pbs;
  j["max_key_variance"] = report.max_key_variance;
  if (include_timing) j["wall_time_ms"] = report.wall_time_ms;
  return j.dump();
}

namespace {

void print_human_report(const RunReport& report, std::ostream& out) {
  out << "distance: " << report.distance << '\n';
  out << "mode: " << report.mode << " (half-width " << report.half_width << ")\n";
  out << "visited cells: " << report.visited_cells << '\n';
  out << "bootstraps: total " << report.pbs_total << " (equality " << report.pbs_equality
      << ", kernel " << report.pbs_kernel << ", refresh " << report.refresh_count
      << ", preprocessing " << report.preprocessing_pbs << ")\n";
  out << "max key variance: " << report.max_key_variance << " eps^2\n";
  out << "wall time: " << report.wall_time_ms << " ms\n";
}

int classify_error_exit(const Error& e) {
  if (dynamic_cast<const BandTooNarrow*>(&e)) return 3;
  if (dynamic_cast<const CharNotInAlphabet*>(&e) ||
      dynamic_cast<const CharNotInSubset*>(&e) || dynamic_cast<const FormatError*>(&e) ||
      dynamic_cast<const InvalidParams*>(&e) ||
      dynamic_cast<const OutOfRangeValue*>(&e)) {
    return 2;
  }
  return 1;
}

/// Budget default from LEUVEN_BUDGET; only consulted when --budget was
/// not given. Throws InvalidParams on a malformed value.
double env_budget_or_default() {
  const char* env = std::getenv("LEUVEN_BUDGET");
  if (env == nullptr || *env == '\0') return 4000.0;
  try {
    std::size_t used = 0;
    const std::string text(env);
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw InvalidParams(std::string("invalid LEUVEN_BUDGET value '") + env + "'");
  }
}

void add_compute_flags(CLI::App* cmd, ComputeConfig& config) {
  cmd->add_option("--mode", config.mode, "exact | skip | approx")
      ->check(CLI::IsMember({"exact", "skip", "approx"}));
  cmd->add_option("--ell", config.ell,
                  "accuracy threshold for approx mode (band half-width)");
  cmd->add_option("--encoding", config.encoding,
                  "ascii7 | lower26 | dna4 | custom:<file>");
  cmd->add_option("--budget", config.budget,
                  "noise budget in equivalent fresh additions");
  cmd->add_option("--key-encoding", config.key_encoding, "negated | original")
      ->check(CLI::IsMember({"negated", "original"}));
  cmd->add_flag("--preprocess", config.preprocess,
                "precompute the equality table for string a");
}

int run_batch(const std::string& input_path, ComputeConfig base, std::size_t threads,
              std::ostream& out, std::ostream& err) {
  std::ifstream in(input_path);
  if (!in) {
    err << "cannot open batch input: " << input_path << '\n';
    return 2;
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);

  std::vector<std::string> outputs(lines.size());
  std::atomic<std::size_t> next{0};
  auto process_line = [&](const std::string& text) -> std::string {
    try {
      const auto j = nlohmann::json::parse(text);
      if (!j.contains("a") || !j.contains("b") || !j["a"].is_string() ||
          !j["b"].is_string()) {
        throw FormatError("each line needs string fields \"a\" and \"b\"");
      }
      ComputeConfig config = base;
      config.a = j["a"].get<std::string>();
      config.b = j["b"].get<std::string>();
      return report_json(compute_report(config), /*include_timing=*/false);
    } catch (const nlohmann::json::exception& e) {
      return ordered_json{{"error", std::string("bad JSON: ") + e.what()}}.dump();
    } catch (const std::exception& e) {
      return ordered_json{{"error", e.what()}}.dump();
    }
  };
  auto worker = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < lines.size();) {
      outputs[idx] = process_line(lines[idx]);
    }
  };
  const std::size_t n_workers = std::max<std::size_t>(1, std::min(threads, lines.size()));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (std::size_t t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& o : outputs) out << o << '\n';
  return 0;
}

int run_table(const std::string& which, std::ostream& out, std::ostream& err) {
  Lut16 lut;
  if (which == "minlut-original") {
    lut = kernel::build_min_lut(kernel::KeyEncoding::original);
  } else if (which == "minlut-negated") {
    lut = kernel::build_min_lut(kernel::KeyEncoding::negated);
  } else if (which == "eqlut") {
    lut = equality::eq_lut(1);
  } else if (which == "eqlut9") {
    lut = equality::eq_lut(9);
  } else {
    err << "unknown table '" << which << "'\n";
    return 2;
  }
  out << dump_lut(lut);
  return 0;
}

int run_eqcost(int max_bits, std::ostream& out) {
  out << "bits,standard,ours,combined\n";
  for (int b = 1; b <= max_bits; ++b) {
    out << b << ',' << equality::eq_cost(equality::EqTechnique::standard_2bit, b) << ','
        << equality::eq_cost(equality::EqTechnique::ours_4bit, b) << ','
        << equality::eq_cost(equality::EqTechnique::combined, b) << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"encrypted edit distance with one bootstrap per cell"};
  app.require_subcommand(1);

  ComputeConfig config;
  bool json_output = false;

  auto* compute = app.add_subcommand("compute", "distance of two strings");
  compute->add_option("--a", config.a, "first (encrypted-side) string")->required();
  compute->add_option("--b", config.b, "second string")->required();
  add_compute_flags(compute, config);
  compute->add_flag("--json", json_output, "machine-readable report");

  std::string batch_input;
  std::size_t batch_threads = 1;
  auto* batch = app.add_subcommand("batch", "JSONL of {\"a\":...,\"b\":...} pairs");
  batch->add_option("--input", batch_input, "JSONL input file")->required();
  batch->add_option("--threads", batch_threads, "worker threads");
  add_compute_flags(batch, config);

  std::string table_name;
  auto* table = app.add_subcommand("table", "dump a lookup table");
  table->add_option("which", table_name,
                    "minlut-original | minlut-negated | eqlut | eqlut9")
      ->required();

  int max_bits = 16;
  auto* eqcost = app.add_subcommand("eqcost", "equality bootstrap-cost table as CSV");
  eqcost->add_option("--max-bits", max_bits, "largest character width")
      ->check(CLI::Range(1, 64));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("leuven");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    CLI::App* active = compute->parsed() ? compute : (batch->parsed() ? batch : nullptr);
    if (active != nullptr && active->count("--budget") == 0) {
      config.budget = env_budget_or_default();
    }
    if (compute->parsed()) {
      config.has_ell = compute->count("--ell") > 0;
      const RunReport report = compute_report(config);
      if (json_output) {
        out << report_json(report, /*include_timing=*/true) << '\n';
      } else {
        print_human_report(report, out);
      }
      return 0;
    }
    if (batch->parsed()) {
      config.has_ell = batch->count("--ell") > 0;
      return run_batch(batch_input, config, batch_threads, out, err);
    }
    if (table->parsed()) return run_table(table_name, out, err);
    if (eqcost->parsed()) return run_eqcost(max_bits, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return classify_error_exit(e);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace leuven::cli
