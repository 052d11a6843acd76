#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "distdom/chain.hpp"
#include "distdom/error.hpp"

using namespace distdom;
namespace fs = std::filesystem;

namespace {

struct CommonFlags {
  std::optional<int> r;
  std::string strategy = "degeneracy";
  std::string sweep = "augmentation";
  std::string matching = "auto";
  bool exact = false;
  bool float_mode = false;
  std::uint64_t seed = 7;
  std::optional<int> budget;
  int workers = 1;
  bool no_timings = false;
  bool no_oracles = false;

  void attach(CLI::App* app) {
    app->add_option("--r", r, "Radius (defaults to the instance's own)")->check(CLI::PositiveNumber);
    app->add_option("--strategy", strategy, "Ordering heuristic: degeneracy, descending-degree, input-order");
    app->add_option("--sweep", sweep, "Sweep order: augmentation, input, random");
    app->add_option("--matching", matching, "k-matching: auto, threshold, threshold+greedy, exact");
    auto* ex = app->add_flag("--exact", exact, "Exact rational LPs for every instance");
    app->add_flag("--float", float_mode, "Floating-point LPs for every instance")->excludes(ex);
    app->add_option("--seed", seed, "Seed for random sweeps and generated corpora");
    app->add_option("--budget", budget, "Oracle vertex budget (overrides DISTDOM_BUDGET_VERTICES)");
    app->add_option("--workers", workers, "Instances processed concurrently")->check(CLI::PositiveNumber);
    app->add_flag("--no-timings", no_timings, "Omit timing columns/fields");
    app->add_flag("--no-oracles", no_oracles, "Skip the exponential-time oracles");
  }

  AnalyzeOptions options() const {
    AnalyzeOptions o;
    o.r = r;
    o.strategy = parse_ordering_strategy(strategy);
    o.sweep = parse_sweep_order(sweep);
    if (matching != "auto") o.matching = parse_matching_strategy(matching);
    if (exact) o.mode = NumericMode::Exact;
    if (float_mode) o.mode = NumericMode::Float;
    o.seed = seed;
    if (budget) o.budget.max_vertices = *budget;
    o.oracles = !no_oracles;
    return o;
  }
};

std::vector<CorpusInstance> load_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) throw InputError("corpus directory not found: " + dir);
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  std::vector<CorpusInstance> out;
  for (const auto& f : files) {
    try {
      out.push_back(load_instance(f));
    } catch (const Error& e) {
      throw InputError(f + ": " + e.what());
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const CorpusInstance& a, const CorpusInstance& b) { return a.id < b.id; });
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void dump_failure(const CorpusInstance& inst, const ChainReport& rep) {
  nlohmann::json j = {{"id", inst.id}, {"r", rep.r}, {"graph", graph_to_json(inst.graph)}};
  nlohmann::json failed = nlohmann::json::array();
  for (const auto& c : evaluate_checks(rep))
    if (!c.pass) failed.push_back({{"check", c.name}, {"detail", c.detail}});
  j["failed"] = std::move(failed);
  if (!rep.first_violation.empty()) j["violation"] = rep.first_violation;
  std::cerr << j.dump() << '\n';
}

int cmd_analyze(const std::string& path, const CommonFlags& flags, const std::string& format, const std::string& out) {
  auto inst = load_instance(path);
  auto rep = analyze(inst, flags.options());
  Output o(out);
  if (format == "csv") {
    o.stream() << csv_header(!flags.no_timings) << csv_row(rep, !flags.no_timings);
  } else {
    o.stream() << report_to_json(rep, !flags.no_timings).dump(2) << '\n';
  }
  if (!all_pass(rep)) {
    dump_failure(inst, rep);
    return 1;
  }
  return 0;
}

std::vector<CorpusInstance> corpus_from(const std::string& dir, bool generate, std::uint64_t seed) {
  if (!dir.empty() && generate) throw InputError("use either --corpus-dir or --generate");
  if (dir.empty()) return default_corpus(seed);
  return load_corpus(dir);
}

int cmd_verify(const std::string& dir, bool generate, const CommonFlags& flags, const std::string& format,
               const std::string& out) {
  auto corpus = corpus_from(dir, generate, flags.seed);
  if (corpus.empty()) throw InputError("corpus is empty");
  auto reports = analyze_all(corpus, flags.options(), flags.workers);
  Output o(out);
  bool ok = true;
  if (format == "json") {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& rep : reports) all.push_back(report_to_json(rep, !flags.no_timings));
    o.stream() << all.dump(2) << '\n';
  } else {
    o.stream() << csv_header(!flags.no_timings);
    for (const auto& rep : reports) o.stream() << csv_row(rep, !flags.no_timings);
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (all_pass(reports[i])) continue;
    ok = false;
    dump_failure(corpus[i], reports[i]);
  }
  return ok ? 0 : 1;
}

int cmd_bench(const std::string& dir, bool generate, int repetitions, const CommonFlags& flags,
              const std::string& out) {
  std::vector<CorpusInstance> corpus;
  if (!dir.empty() || generate) corpus = corpus_from(dir, generate, flags.seed);
  Output o(out);
  auto& s = o.stream();
  s << "# distdom-bench v1\n"
       "id,rep,n,r,mode,gamma_star,x_size,achieved_ratio,bound_ratio,y_size,y1_size,y1_min,within_bound";
  const char* stages[] = {"order", "augment", "verify", "lp", "round", "independence", "oracle"};
  if (!flags.no_timings)
    for (const char* st : stages) s << ",t_" << st << "_ms";
  s << '\n';
  auto opts = flags.options();
  opts.oracles = false;
  bool ok = true;
  for (int rep_i = 0; rep_i < repetitions; ++rep_i) {
    auto reports = analyze_all(corpus, opts, flags.workers);
    for (const auto& rep : reports) {
      const double lp = rep.mode == NumericMode::Exact ? rep.gamma_star.get_d() : rep.gamma_star_f;
      const double ratio = lp > 0 ? static_cast<double>(rep.x_size) / lp : 0.0;
      // Bounds checked on the raw integers/rationals, not on the printed ratio.
      bool x_ok = rep.mode == NumericMode::Exact
                      ? Rational(static_cast<long>(rep.x_size)) <= Rational(static_cast<long>(rep.a)) * rep.gamma_star
                      : static_cast<double>(rep.x_size) <= static_cast<double>(rep.a) * lp + 1e-6;
      const std::int64_t y1_min = rep.d > 0 ? (static_cast<std::int64_t>(rep.y_size) + 2 * rep.d - 1) / (2 * rep.d) : 0;
      bool y_ok = static_cast<std::int64_t>(rep.y1_size) >= y1_min;
      bool within = rep.error_stage.empty() && x_ok && y_ok;
      ok = ok && within;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f", ratio);
      s << rep.id << ',' << rep_i << ',' << rep.n << ',' << rep.r << ',' << to_string(rep.mode) << ','
        << (rep.mode == NumericMode::Exact ? rep.gamma_star.get_str() : std::to_string(rep.gamma_star_f)) << ','
        << rep.x_size << ',' << buf << ',' << rep.a << ',' << rep.y_size << ',' << rep.y1_size << ',' << y1_min << ','
        << (within ? "yes" : "no");
      if (!flags.no_timings)
        for (const char* st : stages) {
          double ms = 0;
          for (const auto& t : rep.timings)
            if (t.stage == st) ms = t.ms;
          std::snprintf(buf, sizeof buf, "%.3f", ms);
          s << ',' << buf;
        }
      s << '\n';
    }
  }
  return ok ? 0 : 1;
}

int cmd_generate(const std::string& family_name, const FamilyParams& params, std::uint64_t seed, const std::string& out) {
  auto inst = random_corpus(seed, parse_family(family_name), params);
  Output o(out);
  o.stream() << instance_to_json(inst).dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-r domination and independence: LP rounding and bound verification"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string format = "json", out;

  auto* analyze_cmd = app.add_subcommand("analyze", "Run the pipeline on one graph file");
  std::string graph_path;
  analyze_cmd->add_option("graph", graph_path, "Graph file (.json instance or DIMACS)")->required();
  flags.attach(analyze_cmd);
  analyze_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  analyze_cmd->add_option("--out", out, "Write the report here instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify-chain", "Check every inequality on a corpus");
  std::string corpus_dir;
  bool generate = false;
  std::string verify_format = "csv";
  verify_cmd->add_option("--corpus-dir", corpus_dir, "Directory of instance files");
  verify_cmd->add_flag("--generate", generate, "Use the built-in corpus (the default without --corpus-dir)");
  flags.attach(verify_cmd);
  verify_cmd->add_option("--format", verify_format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("--out", out, "Write the report here instead of stdout");

  auto* gen_cmd = app.add_subcommand("generate", "Write an instance file");
  std::string family;
  FamilyParams params;
  std::uint64_t gen_seed = 7;
  gen_cmd->add_option("family", family, "grid, random-degenerate, clique-hr, subdivided-clique, covering-hard")
      ->required();
  gen_cmd->add_option("--rows", params.rows)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--cols", params.cols)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--n", params.n)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--d", params.d)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--r", params.r)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--out", out);

  auto* bench_cmd = app.add_subcommand("bench", "Timings and achieved ratios");
  int repetitions = 1;
  bench_cmd->add_option("--corpus-dir", corpus_dir, "Directory of instance files");
  bench_cmd->add_flag("--generate", generate, "Use the built-in corpus");
  bench_cmd->add_option("--repetitions", repetitions)->check(CLI::PositiveNumber);
  flags.attach(bench_cmd);
  bench_cmd->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) return cmd_analyze(graph_path, flags, format, out);
    if (*verify_cmd) return cmd_verify(corpus_dir, generate, flags, verify_format, out);
    if (*gen_cmd) return cmd_generate(family, params, gen_seed, out);
    if (*bench_cmd) return cmd_bench(corpus_dir, generate, repetitions, flags, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
