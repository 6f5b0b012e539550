#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "clde/chaos.hpp"
#include "clde/engine.hpp"
#include "clde/metrics.hpp"
#include "clde/problem.hpp"
#include "clde/text_io.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace clde;

namespace {

constexpr const char* kOutDirVar = "CLDE_OUT_DIR";

struct RunSpec {
  std::string problem;
  std::string mode;  // "so", "mo", or empty for sense-derived default
  RunConfig cfg;
};

long long parse_int_field(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config field '" + key + "': not an integer: '" + value + "'");
  }
}

double parse_double_field(const std::string& key, const std::string& value) {
  try {
    return parse_double(value);
  } catch (const std::exception& e) {
    throw std::invalid_argument("config field '" + key + "': " + e.what());
  }
}

bool parse_bool_field(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw std::invalid_argument("config field '" + key + "': expected true/false, got '" + value +
                              "'");
}

void apply_config_entry(RunSpec& spec, const std::string& key, const std::string& value) {
  RunConfig& c = spec.cfg;
  if (key == "problem")
    spec.problem = value;
  else if (key == "mode")
    spec.mode = value;
  else if (key == "population_size")
    c.population_size = static_cast<int>(parse_int_field(key, value));
  else if (key == "max_generations")
    c.max_generations = static_cast<int>(parse_int_field(key, value));
  else if (key == "chaotic_mu")
    c.chaotic_mu = parse_double_field(key, value);
  else if (key == "chaotic_step_init")
    c.chaotic_step_init = parse_double_field(key, value);
  else if (key == "chaotic_step_decay")
    c.chaotic_step_decay = parse_double_field(key, value);
  else if (key == "crossover_rate")
    c.crossover_rate = parse_double_field(key, value);
  else if (key == "k_neighbors")
    c.k_neighbors = static_cast<int>(parse_int_field(key, value));
  else if (key == "persistence_tau_init")
    c.persistence_tau_init = parse_double_field(key, value);
  else if (key == "tau_min")
    c.tau_min = parse_double_field(key, value);
  else if (key == "tau_max")
    c.tau_max = parse_double_field(key, value);
  else if (key == "tau_gain")
    c.tau_gain = parse_double_field(key, value);
  else if (key == "saliency_beta")
    c.saliency_beta = parse_double_field(key, value);
  else if (key == "quota_min")
    c.quota_min = static_cast<int>(parse_int_field(key, value));
  else if (key == "rankcrowd_kappa")
    c.rankcrowd_kappa = parse_double_field(key, value);
  else if (key == "local_sigma")
    c.local_sigma = parse_double_field(key, value);
  else if (key == "archive_size")
    c.archive_size = static_cast<int>(parse_int_field(key, value));
  else if (key == "seed")
    c.seed = static_cast<std::uint64_t>(parse_int_field(key, value));
  else if (key == "record_decode")
    c.record_decode = parse_bool_field(key, value);
  else if (key == "single_basin")
    c.single_basin = parse_bool_field(key, value);
  else
    throw std::invalid_argument("unknown config field: '" + key + "'");
}

Mode resolve_mode(const RunSpec& spec, const Problem& problem) {
  if (spec.mode == "so") return Mode::so;
  if (spec.mode == "mo") return Mode::mo;
  if (spec.mode.empty()) return problem.n_obj > 1 ? Mode::mo : Mode::so;
  throw std::invalid_argument("config field 'mode': expected so or mo, got '" + spec.mode + "'");
}

std::string default_out_dir() {
  if (const char* env = std::getenv(kOutDirVar)) return env;
  return ".";
}

std::string resolve_out_dir(const std::string& flag_value) {
  return flag_value.empty() ? default_out_dir() : flag_value;
}

std::vector<double> min_view(const Problem& p, const std::vector<double>& f) {
  if (p.sense == Sense::minimize) return f;
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = -f[i];
  return out;
}

struct RunScores {
  bool has_pr = false;
  double pr = 0.0;
  bool has_igd = false;
  double igd_value = 0.0;
  bool has_igdx = false;
  double igdx_value = 0.0;
};

RunScores score_run(const Problem& p, const RunResult& r) {
  std::vector<std::vector<double>> xs = r.population;
  std::vector<std::vector<double>> fs = r.objectives;
  for (const auto& arch : r.archives)
    for (const auto& e : arch.entries) {
      xs.push_back(e.x);
      fs.push_back(e.f);
    }
  RunScores s;
  if (r.mode == Mode::so && p.has_peaks) {
    s.has_pr = true;
    s.pr = peak_ratio({xs}, p.known_optima, 1e-4);
  }
  if (r.mode == Mode::mo && !p.pareto_front_ref.empty()) {
    std::vector<std::vector<double>> approx;
    approx.reserve(fs.size());
    for (const auto& f : fs) approx.push_back(min_view(p, f));
    s.has_igd = true;
    s.igd_value = igd(approx, p.pareto_front_ref);
  }
  if (r.mode == Mode::mo && !p.pareto_set_ref.empty()) {
    s.has_igdx = true;
    s.igdx_value = igdx(xs, p.pareto_set_ref);
  }
  return s;
}

std::string trace_csv(const RunResult& r) {
  std::string out = "generation,evaluations,basin_count,tau,score,median_distance\n";
  for (const TraceRow& row : r.trace) {
    out += std::to_string(row.generation) + ',' + std::to_string(row.evaluations) + ',' +
           std::to_string(row.basin_count) + ',' + format_double(row.tau) + ',' +
           format_double(row.score) + ',' + format_double(row.median_distance) + '\n';
  }
  return out;
}

std::string population_csv(const Problem& p, const RunResult& r) {
  std::string out;
  for (int j = 0; j < p.dim; ++j) out += "x" + std::to_string(j) + ',';
  for (int m = 0; m < p.n_obj; ++m)
    out += "f" + std::to_string(m) + (m + 1 < p.n_obj ? "," : "");
  out += '\n';
  for (std::size_t i = 0; i < r.population.size(); ++i) {
    for (double v : r.population[i]) out += format_double(v) + ',';
    const auto& f = r.objectives[i];
    for (std::size_t m = 0; m < f.size(); ++m)
      out += format_double(f[m]) + (m + 1 < f.size() ? "," : "");
    out += '\n';
  }
  return out;
}

std::string archive_csv(const Problem& p, const RunResult& r) {
  std::string out = "archive,entry,";
  for (int j = 0; j < p.dim; ++j) out += "x" + std::to_string(j) + ',';
  for (int m = 0; m < p.n_obj; ++m)
    out += "f" + std::to_string(m) + (m + 1 < p.n_obj ? "," : "");
  out += '\n';
  for (std::size_t a = 0; a < r.archives.size(); ++a)
    for (std::size_t e = 0; e < r.archives[a].entries.size(); ++e) {
      const ArchiveEntry& entry = r.archives[a].entries[e];
      out += std::to_string(a) + ',' + std::to_string(e) + ',';
      for (double v : entry.x) out += format_double(v) + ',';
      for (std::size_t m = 0; m < entry.f.size(); ++m)
        out += format_double(entry.f[m]) + (m + 1 < entry.f.size() ? "," : "");
      out += '\n';
    }
  return out;
}

std::string snapshots_csv(const Problem& p, const RunResult& r) {
  std::string out = "generation,node,";
  for (int j = 0; j < p.dim; ++j) out += "x" + std::to_string(j) + ',';
  out += "height,basin_id,is_representative\n";
  for (const DecodeSnapshot& snap : r.snapshots)
    for (std::size_t i = 0; i < snap.canvas.size(); ++i) {
      out += std::to_string(snap.generation) + ',' + std::to_string(i) + ',';
      for (double v : snap.canvas[i]) out += format_double(v) + ',';
      out += format_double(snap.heights[i]) + ',' + std::to_string(snap.labels[i]) + ',' +
             std::to_string(static_cast<int>(snap.is_representative[i])) + '\n';
    }
  return out;
}

json config_json(const RunSpec& spec, Mode mode) {
  const RunConfig& c = spec.cfg;
  json j;
  j["problem"] = spec.problem;
  j["mode"] = mode == Mode::so ? "so" : "mo";
  j["population_size"] = c.population_size;
  j["max_generations"] = c.max_generations;
  j["chaotic_mu"] = c.chaotic_mu;
  j["chaotic_step_init"] = c.chaotic_step_init;
  j["chaotic_step_decay"] = c.chaotic_step_decay;
  j["crossover_rate"] = c.crossover_rate;
  j["k_neighbors"] = c.k_neighbors;
  j["persistence_tau_init"] = c.persistence_tau_init;
  j["tau_min"] = c.tau_min;
  j["tau_max"] = c.tau_max;
  j["tau_gain"] = c.tau_gain;
  j["saliency_beta"] = c.saliency_beta;
  j["quota_min"] = c.quota_min;
  j["rankcrowd_kappa"] = c.rankcrowd_kappa;
  j["local_sigma"] = c.local_sigma;
  j["archive_size"] = c.archive_size;
  j["seed"] = c.seed;
  j["record_decode"] = c.record_decode;
  j["single_basin"] = c.single_basin;
  return j;
}

// Executes one configured run and writes its artifact files into dir.
RunScores execute_run(const RunSpec& spec, const fs::path& dir) {
  const Problem problem = make_problem(spec.problem);
  const Mode mode = resolve_mode(spec, problem);

  const auto t0 = std::chrono::steady_clock::now();
  const RunResult result = run(problem, spec.cfg, mode);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  fs::create_directories(dir);
  write_text_file((dir / "trace.csv").string(), trace_csv(result));
  write_text_file((dir / "population.csv").string(), population_csv(problem, result));
  write_text_file((dir / "archive.csv").string(), archive_csv(problem, result));
  if (spec.cfg.record_decode)
    write_text_file((dir / "decode_snapshots.csv").string(), snapshots_csv(problem, result));

  const RunScores scores = score_run(problem, result);
  json summary;
  summary["problem"] = spec.problem;
  summary["mode"] = mode == Mode::so ? "so" : "mo";
  summary["seed"] = spec.cfg.seed;
  summary["config"] = config_json(spec, mode);
  summary["evaluations"] = result.evaluations;
  summary["wall_time_seconds"] = wall;
  summary["notes"] = result.notes;
  if (scores.has_pr) summary["pr"] = scores.pr;
  if (scores.has_igd) summary["igd"] = scores.igd_value;
  if (scores.has_igdx) summary["igdx"] = scores.igdx_value;
  write_text_file((dir / "summary.json").string(), summary.dump(2) + "\n");
  return scores;
}

int cmd_run(const RunSpec& flag_spec, const std::string& config_path,
            const std::string& out_flag, bool record_flag, bool single_flag,
            const std::vector<std::pair<std::string, std::string>>& flag_fields) {
  RunSpec spec;
  try {
    if (!config_path.empty())
      for (const auto& [key, value] : read_key_value_file(config_path))
        apply_config_entry(spec, key, value);
    if (!flag_spec.problem.empty()) spec.problem = flag_spec.problem;
    if (!flag_spec.mode.empty()) spec.mode = flag_spec.mode;
    for (const auto& [key, value] : flag_fields) apply_config_entry(spec, key, value);
    if (record_flag) spec.cfg.record_decode = true;
    if (single_flag) spec.cfg.single_basin = true;
    if (spec.problem.empty())
      throw std::invalid_argument("no problem selected: pass --problem or a config file");
  } catch (const std::exception& e) {
    std::fprintf(stderr, "clde run: %s\n", e.what());
    return 1;
  }

  try {
    execute_run(spec, fs::path(resolve_out_dir(out_flag)));
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "clde run: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "clde run: %s\n", e.what());
    return 2;
  }
  return 0;
}

struct SuiteCell {
  std::string problem;
  std::string mode;
  std::vector<std::pair<std::string, std::string>> overrides;
};

struct SuiteSpec {
  int runs = 30;
  std::uint64_t base_seed = 1;
  std::string out;
  std::vector<SuiteCell> cells;
};

SuiteSpec parse_suite_file(const std::string& path) {
  SuiteSpec suite;
  const std::string text = read_text_file(path);
  std::size_t start = 0;
  int lineno = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string line = text.substr(start, end == std::string::npos ? end : end - start);
    start = end == std::string::npos ? text.size() + 1 : end + 1;
    ++lineno;
    const auto fail = [&](const std::string& msg) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + msg);
    };
    std::vector<std::string> tokens;
    std::string tok;
    for (char ch : line) {
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        if (!tok.empty()) tokens.push_back(std::move(tok));
        tok.clear();
      } else {
        tok += ch;
      }
    }
    if (!tok.empty()) tokens.push_back(std::move(tok));
    if (tokens.empty() || tokens[0][0] == '#') continue;

    const std::string& head = tokens[0];
    if (head == "cell") {
      if (tokens.size() < 3) fail("cell needs: cell <problem> <mode> [key=value...]");
      SuiteCell cell;
      cell.problem = tokens[1];
      cell.mode = tokens[2];
      for (std::size_t i = 3; i < tokens.size(); ++i) {
        const std::size_t eq = tokens[i].find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == tokens[i].size())
          fail("override must look like key=value: '" + tokens[i] + "'");
        cell.overrides.emplace_back(tokens[i].substr(0, eq), tokens[i].substr(eq + 1));
      }
      suite.cells.push_back(std::move(cell));
    } else if (head == "runs") {
      if (tokens.size() != 2) fail("runs needs one integer");
      suite.runs = static_cast<int>(parse_int_field("runs", tokens[1]));
      if (suite.runs < 1) fail("runs must be >= 1");
    } else if (head == "base_seed") {
      if (tokens.size() != 2) fail("base_seed needs one integer");
      suite.base_seed = static_cast<std::uint64_t>(parse_int_field("base_seed", tokens[1]));
    } else if (head == "out") {
      if (tokens.size() != 2) fail("out needs one path");
      suite.out = tokens[1];
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (suite.cells.empty()) throw std::invalid_argument(path + ": no cells defined");
  return suite;
}

struct CellOutcome {
  std::vector<double> prs, igds, igdxs;
  int failures = 0;
  std::string first_error;
};

std::pair<double, double> mean_std(const std::vector<double>& v) {
  if (v.empty()) return {0.0, 0.0};
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double var = 0.0;
  for (double x : v) var += (x - mean) * (x - mean);
  var /= static_cast<double>(v.size());
  return {mean, std::sqrt(var)};
}

int cmd_suite(const std::string& suite_path, const std::string& out_flag, int jobs) {
  SuiteSpec suite;
  try {
    suite = parse_suite_file(suite_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "clde suite: %s\n", e.what());
    return 1;
  }
  const std::string out_dir =
      !out_flag.empty() ? out_flag : (!suite.out.empty() ? suite.out : default_out_dir());

  std::vector<CellOutcome> outcomes(suite.cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t ci = next.fetch_add(1);
      if (ci >= suite.cells.size()) return;
      const SuiteCell& cell = suite.cells[ci];
      CellOutcome& res = outcomes[ci];
      for (int r = 0; r < suite.runs; ++r) {
        try {
          RunSpec spec;
          spec.problem = cell.problem;
          spec.mode = cell.mode;
          for (const auto& [key, value] : cell.overrides) apply_config_entry(spec, key, value);
          spec.cfg.seed = suite.base_seed + static_cast<std::uint64_t>(r);
          const fs::path dir = fs::path(out_dir) /
                               ("cell" + std::to_string(ci) + "_" + cell.problem) /
                               ("seed_" + std::to_string(spec.cfg.seed));
          const RunScores s = execute_run(spec, dir);
          if (s.has_pr) res.prs.push_back(s.pr);
          if (s.has_igd) res.igds.push_back(s.igd_value);
          if (s.has_igdx) res.igdxs.push_back(s.igdx_value);
        } catch (const std::exception& e) {
          ++res.failures;
          if (res.first_error.empty()) res.first_error = e.what();
        }
      }
    }
  };

  const int n_workers = std::max(1, std::min<int>(jobs, static_cast<int>(suite.cells.size())));
  std::vector<std::thread> pool;
  for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::string csv =
      "cell,problem,mode,runs,failures,pr_mean,pr_std,igd_mean,igd_std,igdx_mean,igdx_std\n";
  int total_failures = 0;
  for (std::size_t ci = 0; ci < suite.cells.size(); ++ci) {
    const SuiteCell& cell = suite.cells[ci];
    const CellOutcome& res = outcomes[ci];
    total_failures += res.failures;
    auto stat_cols = [](const std::vector<double>& v) {
      if (v.empty()) return std::string(",");
      const auto [m, s] = mean_std(v);
      return format_double(m) + ',' + format_double(s);
    };
    csv += std::to_string(ci) + ',' + cell.problem + ',' + cell.mode + ',' +
           std::to_string(suite.runs) + ',' + std::to_string(res.failures) + ',' +
           stat_cols(res.prs) + ',' + stat_cols(res.igds) + ',' + stat_cols(res.igdxs) + '\n';
    if (res.failures > 0)
      std::fprintf(stderr, "clde suite: cell %zu (%s) had %d failed runs: %s\n", ci,
                   cell.problem.c_str(), res.failures, res.first_error.c_str());
  }
  try {
    fs::create_directories(out_dir);
    write_text_file((fs::path(out_dir) / "aggregate.csv").string(), csv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "clde suite: %s\n", e.what());
    return 2;
  }
  return total_failures > 0 ? 2 : 0;
}

int cmd_bifurcation(double mu_min, double mu_max, double mu_step, int transient, int samples,
                    std::uint64_t seed, const std::string& out_path) {
  try {
    if (!(mu_step > 0.0)) throw std::invalid_argument("mu step must be > 0");
    if (mu_min > mu_max) throw std::invalid_argument("mu range is empty");
    std::vector<double> grid;
    const int n_points = static_cast<int>(std::floor((mu_max - mu_min) / mu_step + 1e-9)) + 1;
    for (int i = 0; i < n_points; ++i) grid.push_back(mu_min + i * mu_step);
    const auto points = bifurcation_scan(grid, transient, samples, seed);
    std::string csv = "mu,z\n";
    for (const BifurcationPoint& p : points)
      csv += format_double(p.mu) + ',' + format_double(p.z) + '\n';
    const std::string path =
        out_path.empty() ? (fs::path(default_out_dir()) / "bifurcation.csv").string() : out_path;
    if (const fs::path parent = fs::path(path).parent_path(); !parent.empty())
      fs::create_directories(parent);
    write_text_file(path, csv);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "clde bifurcation: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "clde bifurcation: %s\n", e.what());
    return 2;
  }
  return 0;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  cells.push_back(cur);
  return cells;
}

int cmd_decode_dump(const std::string& run_dir, int generation, const std::string& out_path) {
  try {
    const fs::path src = fs::path(run_dir) / "decode_snapshots.csv";
    if (!fs::exists(src))
      throw std::runtime_error("no decode recording found in " + run_dir +
                               " (run with --record_decode)");
    const std::string text = read_text_file(src.string());

    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
      const std::size_t end = text.find('\n', start);
      lines.push_back(text.substr(start, end == std::string::npos ? end : end - start));
      start = end == std::string::npos ? text.size() : end + 1;
    }
    if (lines.empty()) throw std::runtime_error("empty decode recording");

    const std::vector<std::string> header = split_csv_line(lines[0]);
    if (header.size() < 6 || header[0] != "generation")
      throw std::runtime_error("unrecognized decode recording header");

    std::string out = header[2];
    for (std::size_t c = 3; c < header.size(); ++c) out += ',' + header[c];
    out += '\n';
    bool found = false;
    for (std::size_t li = 1; li < lines.size(); ++li) {
      if (lines[li].empty()) continue;
      const std::vector<std::string> cells = split_csv_line(lines[li]);
      if (static_cast<int>(parse_int_field("generation", cells[0])) != generation) continue;
      found = true;
      out += cells[2];
      for (std::size_t c = 3; c < cells.size(); ++c) out += ',' + cells[c];
      out += '\n';
    }
    if (!found)
      throw std::runtime_error("generation " + std::to_string(generation) +
                               " not present in the recording");

    const std::string path =
        out_path.empty()
            ? (fs::path(run_dir) / ("decode_gen" + std::to_string(generation) + ".csv")).string()
            : out_path;
    write_text_file(path, out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "clde decode-dump: %s\n", e.what());
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chaotic landscape-decoding evolution toolkit"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "execute one optimization run");
  RunSpec flag_spec;
  std::string config_path, run_out;
  bool record_flag = false, single_flag = false;
  run_cmd->add_option("--problem", flag_spec.problem, "problem id from the registry");
  run_cmd->add_option("--mode", flag_spec.mode, "so or mo (default: derived from the problem)");
  run_cmd->add_option("--config", config_path, "key/value config file");
  run_cmd->add_option("--out", run_out, "output directory (default: $CLDE_OUT_DIR or .)");
  run_cmd->add_flag("--record_decode", record_flag, "write per-generation decode snapshots");
  run_cmd->add_flag("--single_basin", single_flag, "disable decoding: one basin per canvas");
  const std::vector<std::string> field_flags = {
      "population_size", "max_generations",      "chaotic_mu",    "chaotic_step_init",
      "chaotic_step_decay", "crossover_rate",    "k_neighbors",   "persistence_tau_init",
      "tau_min",         "tau_max",              "tau_gain",      "saliency_beta",
      "quota_min",       "rankcrowd_kappa",      "local_sigma",   "archive_size",
      "seed"};
  std::vector<std::string> field_values(field_flags.size());
  for (std::size_t i = 0; i < field_flags.size(); ++i)
    run_cmd->add_option("--" + field_flags[i], field_values[i], "config field override");

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "run a batch of experiment cells");
  std::string suite_path, suite_out;
  int jobs = 1;
  suite_cmd->add_option("suite_file", suite_path, "suite description file")->required();
  suite_cmd->add_option("--out", suite_out, "output directory override");
  suite_cmd->add_option("--jobs", jobs, "concurrent cells (default 1)");

  // bifurcation
  auto* bif_cmd = app.add_subcommand("bifurcation", "scan the logistic map across mu");
  double mu_min = 2.5, mu_max = 4.0, mu_step = 0.005;
  int transient = 1000, samples = 200;
  std::uint64_t bif_seed = 1;
  std::string bif_out;
  bif_cmd->add_option("--mu-min", mu_min, "grid start (default 2.5)");
  bif_cmd->add_option("--mu-max", mu_max, "grid end (default 4.0)");
  bif_cmd->add_option("--mu-step", mu_step, "grid step (default 0.005)");
  bif_cmd->add_option("--transient", transient, "warmup iterations per mu (default 1000)");
  bif_cmd->add_option("--samples", samples, "recorded iterates per mu (default 200)");
  bif_cmd->add_option("--seed", bif_seed, "start-value seed");
  bif_cmd->add_option("--out", bif_out, "output csv path (default bifurcation.csv)");

  // decode-dump
  auto* dump_cmd = app.add_subcommand("decode-dump", "extract one generation's basin snapshot");
  std::string dump_dir, dump_out;
  int dump_gen = 1;
  dump_cmd->add_option("--run-dir", dump_dir, "directory holding a recorded run")->required();
  dump_cmd->add_option("--generation", dump_gen, "1-based generation to extract")->required();
  dump_cmd->add_option("--out", dump_out, "output csv path (default inside the run dir)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (run_cmd->parsed()) {
    std::vector<std::pair<std::string, std::string>> flag_fields;
    for (std::size_t i = 0; i < field_flags.size(); ++i)
      if (run_cmd->count("--" + field_flags[i]) > 0)
        flag_fields.emplace_back(field_flags[i], field_values[i]);
    return cmd_run(flag_spec, config_path, run_out, record_flag, single_flag, flag_fields);
  }
  if (suite_cmd->parsed()) return cmd_suite(suite_path, suite_out, jobs);
  if (bif_cmd->parsed())
    return cmd_bifurcation(mu_min, mu_max, mu_step, transient, samples, bif_seed, bif_out);
  if (dump_cmd->parsed()) return cmd_decode_dump(dump_dir, dump_gen, dump_out);
  return 1;
}
