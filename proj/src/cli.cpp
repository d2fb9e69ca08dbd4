// Copyright 2026 The qdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdepth/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "qdepth/analysis.hpp"
#include "qdepth/error.hpp"
#include "qdepth/report_io.hpp"

namespace qdepth {

namespace {

namespace fs = std::filesystem;
using Seconds = std::chrono::duration<double>;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, fmt::format("cannot read {}", path));
  ss << in.rdbuf();
  return ss.str();
}

void write_atomically(const std::string& path, const std::string& text) {
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << text;
    f.flush();
    if (!f) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error(ErrorCode::kIo, fmt::format("cannot write {}", path));
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::kIo, fmt::format("cannot write {}", path));
  }
}

void emit(const std::string& text, const std::string& output,
          std::ostream& out) {
  if (output.empty() || output == "-") {
    out << text;
  } else {
    write_atomically(output, text);
  }
}

struct Loaded {
  SatInstance instance;
  std::vector<std::string> warnings;
};

Loaded load(const std::string& path, bool allow_degenerate) {
  std::string name = path == "-" ? "stdin" : fs::path(path).filename().string();
  try {
    DimacsResult r = parse_dimacs(read_input(path), {allow_degenerate}, name);
    return {std::move(r.instance), std::move(r.warnings)};
  } catch (const ParseError& e) {
    throw ParseError(e.code(), e.line(),
                     std::string(e.what()).substr(std::string(e.what()).find(": ") + 2) +
                         " (" + path + ")");
  }
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError(fmt::format("not a number: '{}'", text));
    }
    return v;
  };
  std::string_view s = text;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t den = parse_int(s.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in " + text);
    return Rational(parse_int(s.substr(0, slash)), den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view frac = s.substr(dot + 1);
    if (frac.size() > 15) throw UsageError("too many decimals in " + text);
    std::int64_t scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    std::string_view whole = s.substr(0, dot);
    bool negative = !whole.empty() && whole.front() == '-';
    std::int64_t w = whole.empty() || whole == "-" ? 0 : parse_int(whole);
    std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    return Rational(w) + Rational(negative ? -f : f, scale);
  }
  return Rational(parse_int(s));
}

std::optional<Seconds> resolve_budget(double flag) {
  double secs = flag;
  if (const char* env = std::getenv("QDEPTH_BUDGET_SECS"); env && *env) {
    char* end = nullptr;
    secs = std::strtod(env, &end);
    if (end == env || *end != '\0') {
      throw UsageError(fmt::format("QDEPTH_BUDGET_SECS is not a number: '{}'", env));
    }
  }
  if (!(secs > 0)) throw UsageError("the budget must be positive");
  return Seconds(secs);
}

Formulation method_formulation(const std::string& method, bool has_cover) {
  if (has_cover) return Formulation::kGvsCover;
  if (method == "gvs-ip") return Formulation::kGvsIp;
  if (method == "gvs-greedy") return Formulation::kGvsGreedy;
  if (method == "native3") return Formulation::kProductNative3;
  return Formulation::kLinear;
}

// Options shared by the commands that run one formulation on one file.
struct RunFlags {
  std::string file;
  std::string method = "linear";
  std::uint64_t seed = 0;
  std::string lambda;
  double budget = 300;
  std::string cover_file;
  bool allow_degenerate = false;
  std::string output;

  void add_to(CLI::App* cmd, bool with_lambda) {
    cmd->add_option("file", file, "DIMACS CNF file, or - for stdin")->required();
    cmd->add_option("--method", method, "formulation")
        ->check(CLI::IsMember({"linear", "gvs-ip", "gvs-greedy", "native3"}))
        ->capture_default_str();
    cmd->add_option("--seed", seed, "greedy tie-break seed")->capture_default_str();
    if (with_lambda) {
      cmd->add_option("--lambda", lambda, "penalty weight, e.g. 5 or 1/2");
    }
    cmd->add_option("--budget", budget,
                    "exact solver time limit in seconds "
                    "(QDEPTH_BUDGET_SECS overrides)")
        ->capture_default_str();
    cmd->add_option("--cover", cover_file,
                    "replay a cover from a JSON report instead of solving");
    cmd->add_flag("--allow-degenerate", allow_degenerate,
                  "drop tautological clauses instead of failing");
    cmd->add_option("-o,--output", output, "output file (default stdout)");
  }

  std::pair<Loaded, Analysis> run() const {
    Loaded loaded = load(file, allow_degenerate);
    AnalyzeOptions opts;
    opts.formulation = method_formulation(method, !cover_file.empty());
    opts.seed = seed;
    if (!lambda.empty()) {
      opts.lambda = parse_rational(lambda);
      if (*opts.lambda <= Rational(0)) throw UsageError("--lambda must be positive");
    }
    opts.budget = resolve_budget(budget);
    if (!cover_file.empty()) {
      Json j;
      try {
        j = Json::parse(read_input(cover_file));
      } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::kInvalidCover,
                    fmt::format("{}: {}", cover_file, e.what()));
      }
      opts.cover = cover_from_json(loaded.instance, j);
    }
    Analysis a = analyze(loaded.instance, opts);
    return {std::move(loaded), std::move(a)};
  }
};

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<std::string> files;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (fs::is_directory(in, ec)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(in)) {
        if (entry.is_regular_file() && entry.path().extension() == ".cnf") {
          found.push_back(entry.path().string());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(in);
    }
  }
  return files;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kIo: return kExitIo;
    case ErrorCode::kInvalidPenalty: return kExitUsage;
    case ErrorCode::kNotSimpleGraph:
    case ErrorCode::kImproperColoring:
    case ErrorCode::kUnknownVertex:
    case ErrorCode::kMissingVariable: return kExitSoftware;
    default: return kExitData;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Depth of one QAOA layer for 3-SAT formulations", "qdepth"};
  app.require_subcommand(1);

  bool allow_degenerate = false;
  std::string inspect_file;
  std::string inspect_output;
  auto* inspect = app.add_subcommand("inspect", "instance and expansion-set statistics");
  inspect->add_option("file", inspect_file, "DIMACS CNF file, or - for stdin")->required();
  inspect->add_flag("--allow-degenerate", allow_degenerate,
                    "drop tautological clauses instead of failing");
  inspect->add_option("-o,--output", inspect_output, "output file (default stdout)");

  RunFlags analyze_flags;
  std::string analyze_format = "json";
  bool analyze_timing = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "depth report for one formulation");
  analyze_flags.add_to(analyze_cmd, true);
  analyze_cmd->add_option("--format", analyze_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  analyze_cmd->add_flag("--timing", analyze_timing, "include wall time");

  std::vector<std::string> compare_inputs;
  std::size_t compare_seeds = 20;
  std::uint64_t compare_seed = 0;
  double compare_budget = 300;
  bool no_ip = false;
  bool no_linear = false;
  bool no_greedy = false;
  std::string compare_format = "csv";
  unsigned compare_jobs = 0;
  bool compare_timing = false;
  std::string compare_output;
  auto* compare_cmd = app.add_subcommand("compare", "depth table over many instances");
  compare_cmd->add_option("inputs", compare_inputs, "CNF files or directories of *.cnf")
      ->required();
  compare_cmd->add_option("--seeds", compare_seeds, "greedy runs per instance")
      ->capture_default_str();
  compare_cmd->add_option("--seed", compare_seed, "first greedy seed")->capture_default_str();
  compare_cmd->add_option("--budget", compare_budget,
                          "exact solver time limit per instance in seconds "
                          "(QDEPTH_BUDGET_SECS overrides)")
      ->capture_default_str();
  compare_cmd->add_flag("--no-ip", no_ip, "skip the exact solver");
  compare_cmd->add_flag("--no-linear", no_linear, "skip the linear formulation");
  compare_cmd->add_flag("--no-greedy", no_greedy, "skip the greedy heuristic");
  compare_cmd->add_option("--format", compare_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  compare_cmd->add_option("-j,--jobs", compare_jobs, "instances in parallel (0 = cores)");
  compare_cmd->add_flag("--allow-degenerate", allow_degenerate,
                        "drop tautological clauses instead of failing");
  compare_cmd->add_flag("--timing", compare_timing, "include wall time");
  compare_cmd->add_option("-o,--output", compare_output, "output file (default stdout)");

  RunFlags histogram_flags;
  std::string vertex_class = "literal";
  auto* histogram = app.add_subcommand("histogram", "degree distribution as CSV");
  histogram_flags.add_to(histogram, false);
  histogram->add_option("--vertex-class", vertex_class, "vertices to count")
      ->check(CLI::IsMember({"literal", "substitution"}))
      ->capture_default_str();

  RunFlags export_flags;
  std::string what;
  std::string export_format = "json";
  auto* export_cmd = app.add_subcommand("export", "write the LP model, polynomial or schedule");
  export_flags.add_to(export_cmd, true);
  export_cmd->add_option("--what", what, "artifact")
      ->check(CLI::IsMember({"lp", "pubo", "schedule"}))
      ->required();
  export_cmd->add_option("--format", export_format, "schedule format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::vector<std::string> argv_storage{"qdepth"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (inspect->parsed()) {
      Loaded loaded = load(inspect_file, allow_degenerate);
      for (const auto& w : loaded.warnings) err << "warning: " << w << "\n";
      emit(inspect_json(loaded.instance, loaded.warnings).dump(2) + "\n",
           inspect_output, out);
      return kExitOk;
    }

    if (analyze_cmd->parsed()) {
      auto start = std::chrono::steady_clock::now();
      auto [loaded, a] = analyze_flags.run();
      for (const auto& w : loaded.warnings) err << "warning: " << w << "\n";
      std::optional<double> wall;
      if (analyze_timing) {
        wall = Seconds(std::chrono::steady_clock::now() - start).count();
      }
      std::string text = analyze_format == "csv"    ? analysis_csv(a)
                         : analyze_format == "text" ? analysis_text(a)
                                                    : analysis_json(a, wall).dump(2) + "\n";
      emit(text, analyze_flags.output, out);
      return a.optimal ? kExitOk : kExitIncomplete;
    }

    if (histogram->parsed()) {
      auto [loaded, a] = histogram_flags.run();
      emit(histogram_csv(a.report, vertex_class == "substitution"),
           histogram_flags.output, out);
      return a.optimal ? kExitOk : kExitIncomplete;
    }

    if (export_cmd->parsed()) {
      std::string text;
      bool optimal = true;
      if (what == "lp") {
        Loaded loaded = load(export_flags.file, export_flags.allow_degenerate);
        text = export_lp(build_ip(loaded.instance));
      } else {
        auto [loaded, a] = export_flags.run();
        optimal = a.optimal;
        if (what == "pubo") {
          text = formulate(loaded.instance, a).polynomial.to_string() + "\n";
        } else {
          CircuitSchedule s = schedule_for(loaded.instance, a);
          text = export_format == "text" ? schedule_text(s)
                                         : schedule_json(s).dump(2) + "\n";
        }
      }
      emit(text, export_flags.output, out);
      return optimal ? kExitOk : kExitIncomplete;
    }

    // compare
    CompareOptions opts;
    opts.linear = !no_linear;
    opts.ip = !no_ip;
    opts.greedy = !no_greedy;
    for (std::size_t k = 0; k < compare_seeds; ++k) opts.seeds.push_back(compare_seed + k);
    if (opts.ip) opts.budget = resolve_budget(compare_budget);
    std::vector<std::string> files = expand_inputs(compare_inputs);
    std::vector<ComparisonEntry> rows(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k; (k = next++) < files.size();) {
        auto start = std::chrono::steady_clock::now();
        ComparisonEntry& e = rows[k];
        e.row.instance = files[k];
        try {
          Loaded loaded = load(files[k], allow_degenerate);
          e.row = compare(loaded.instance, opts);
        } catch (const std::exception& ex) {
          e.row.instance = fs::path(files[k]).filename().string();
          e.error = ex.what();
        }
        if (compare_timing) {
          e.wall_time = Seconds(std::chrono::steady_clock::now() - start).count();
        }
      }
    };
    unsigned jobs = compare_jobs ? compare_jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(files.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::string text = compare_format == "json"
                           ? comparison_json(rows).dump(2) + "\n"
                           : comparison_csv(rows, opts.seeds.size());
    emit(text, compare_output, out);
    bool failed = std::any_of(rows.begin(), rows.end(),
                              [](const auto& e) { return !e.error.empty(); });
    bool incomplete = std::any_of(rows.begin(), rows.end(), [](const auto& e) {
      return e.row.ip_status && *e.row.ip_status != SolveStatus::kOptimal;
    });
    return failed ? kExitData : incomplete ? kExitIncomplete : kExitOk;
  } catch (const UsageError& e) {
    err << "qdepth: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "qdepth: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace qdepth
