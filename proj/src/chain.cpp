#include "distdom/chain.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "distdom/error.hpp"

namespace distdom {

namespace {

struct StageAbort {};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

const char* const kStages[] = {"order", "augment", "verify", "lp", "round", "independence", "oracle"};

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

Rational as_rational(std::int64_t v) { return make_rational(v); }

}  // namespace

ChainReport analyze(const CorpusInstance& inst, const AnalyzeOptions& opt) {
  const Graph& g = inst.graph;
  ChainReport rep;
  rep.id = inst.id;
  rep.n = g.n();
  rep.m = g.m();
  rep.r = opt.r.value_or(inst.r);
  rep.mode = opt.mode.value_or(g.n() < opt.exact_below ? NumericMode::Exact : NumericMode::Float);
  const int r = rep.r;

  auto stage = [&](const char* name, auto&& body) {
    Stopwatch sw;
    try {
      body();
    } catch (const std::exception& e) {
      rep.error_stage = name;
      rep.error = e.what();
      rep.timings.push_back({name, sw.ms()});
      throw StageAbort{};
    }
    rep.timings.push_back({name, sw.ms()});
  };

  try {
    if (r < 1) {
      rep.error_stage = "input";
      rep.error = "radius must be at least 1";
      return rep;
    }

    Ordering order;
    WeakReachProfile profile;
    stage("order", [&] {
      if (inst.ordering) {
        order = *inst.ordering;
        rep.ordering_source = "given";
      } else {
        order = heuristic_ordering(g, opt.strategy);
        rep.ordering_source = to_string(opt.strategy);
      }
      profile = weak_reach(g, order, 2 * r);
      rep.wcol = profile.wcol;
    });

    Augmentation aug, aug2r;
    stage("augment", [&] {
      aug2r = augment_from_reach(profile, 2 * r);
      rep.delta_ordering = indegree_profile(aug2r).delta;
      if (inst.augmentation) {
        if (inst.augmentation->radius() != r)
          throw InputError("given augmentation has radius " + std::to_string(inst.augmentation->radius()) +
                           ", expected " + std::to_string(r));
        aug = *inst.augmentation;
        rep.augmentation_source = "given";
      } else if (opt.use_orientation && r == 1 && inst.orientation) {
        aug = orientation_augmentation(g, *inst.orientation);
        rep.augmentation_source = "orientation";
        if (inst.degeneracy_bound) {
          rep.orientation_d = *inst.degeneracy_bound;
        } else {
          rep.orientation_d = indegree_profile(aug).delta_at(1) - 1;
        }
      } else {
        aug = augment_from_reach(profile, r);
        rep.augmentation_source = "ordering";
      }
      rep.delta = indegree_profile(aug).delta;
      rep.a = guarantee_factor(indegree_profile(aug), r).a;
    });

    stage("verify", [&] {
      if (g.n() > opt.verify_below) return;
      auto check = verify_augmentation(g, aug);
      rep.aug_violations = check.violation_count;
      if (!check.violations.empty()) rep.first_violation = check.violations.front().describe();
      auto check2 = verify_augmentation(g, aug2r);
      rep.aug2r_violations = check2.violation_count;
      if (rep.first_violation.empty() && !check2.violations.empty())
        rep.first_violation = check2.violations.front().describe();
    });

    LpSolution dom, pack;
    stage("lp", [&] {
      dom = solve_domination(g, r, rep.mode);
      pack = solve_independence(g, r, rep.mode);
      if (!dom.optimal()) throw Error("domination LP is " + to_string(dom.status));
      if (!pack.optimal()) throw Error("packing LP is " + to_string(pack.status));
      rep.gamma_star = dom.objective_rational();
      rep.alpha_star = pack.objective_rational();
      rep.gamma_star_f = dom.objective;
      rep.alpha_star_f = pack.objective;
    });

    stage("round", [&] {
      RoundingOptions ro;
      ro.cross_check_with_augmentation = rep.aug_violations && *rep.aug_violations == 0;
      auto result = round_dominating(g, aug, dom, make_sweep(opt.sweep, order, opt.seed), ro);
      rep.x0_size = result.x0_size;
      rep.x_size = result.set.size();
      rep.x_dominating = is_r_dominating(g, result.set, r);
    });

    stage("independence", [&] {
      MatchingStrategy strategy = opt.matching.value_or(static_cast<std::size_t>(g.n()) <= opt.matching_limits.max_edges
                                                            ? MatchingStrategy::Exact
                                                            : MatchingStrategy::ThresholdGreedy);
      OutBoundedResult ob;
      try {
        ob = out_bounded_set(g, aug, strategy, rep.mode, opt.matching_limits, &pack);
        rep.matching = to_string(strategy);
        rep.matching_exact = strategy == MatchingStrategy::Exact;
      } catch (const BudgetExceeded&) {
        if (opt.matching) throw;
        ob = out_bounded_set(g, aug, MatchingStrategy::ThresholdGreedy, rep.mode, opt.matching_limits, &pack);
        rep.matching = "threshold+greedy(fallback)";
      }
      rep.k = ob.k;
      rep.y_size = ob.y.size();
      rep.max_out_count = ob.out_counts.empty() ? 0 : *std::max_element(ob.out_counts.begin(), ob.out_counts.end());
      auto cert = certify_2rb_independent(g, ob.y, r, rep.a);
      rep.y_max_ball = cert.count;
      if (!cert.ok) return;  // reported by the y-certified check

      auto sp = sparsify_to_independent(g, aug2r, ob.y, rep.a);
      rep.d = sp.d;
      rep.y1_size = sp.y1.size();
      rep.y1_independent = is_2r_independent(g, sp.y1, r);

      auto arcs = conflict_orientation(g, aug2r, ob.y);
      std::vector<int> indeg(static_cast<std::size_t>(g.n()), 0);
      for (auto [tail, head] : arcs) ++indeg[static_cast<std::size_t>(head)];
      rep.conflict_max_indegree = indeg.empty() ? 0 : *std::max_element(indeg.begin(), indeg.end());
      const auto& ys = ob.y.members();
      for (std::size_t i = 0; i < ys.size(); ++i) {
        auto dist = distances_from(g, ys[i], 2 * r);
        for (std::size_t j = i + 1; j < ys.size(); ++j) {
          if (dist[static_cast<std::size_t>(ys[j])] > 2 * r) continue;
          bool forward = std::binary_search(arcs.begin(), arcs.end(), Edge{ys[i], ys[j]});
          bool backward = std::binary_search(arcs.begin(), arcs.end(), Edge{ys[j], ys[i]});
          if (!forward && !backward) ++rep.conflict_unoriented;
        }
      }
    });

    stage("oracle", [&] {
      if (!opt.oracles) return;
      if (opt.budget.admits(g.n())) {
        try {
          rep.gamma = brute_gamma_r(g, r, opt.budget).value;
          rep.alpha_2r = brute_alpha_2r(g, r, opt.budget).value;
          const int b = static_cast<int>(std::min<std::int64_t>(rep.a, g.n()));
          rep.alpha_2rb = brute_alpha_2rb(g, r, b, opt.budget).value;
        } catch (const BudgetExceeded&) {
          // Leave the remaining oracle fields empty.
        }
      } else if (g.n() <= opt.lower_bound_below) {
        OracleBudget lb = opt.budget;
        lb.max_nodes = opt.lower_bound_nodes;
        auto bound = gamma_lower_bound(g, r, lb);
        if (bound.optimum) rep.gamma = bound.lower;
        else rep.gamma_lower = bound.lower;
      }
    });
  } catch (const StageAbort&) {
    // error_stage/error already set
  }
  return rep;
}

std::vector<Check> evaluate_checks(const ChainReport& rep) {
  std::vector<Check> out;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };
  if (!rep.error_stage.empty()) {
    add("pipeline", false, rep.error_stage + ": " + rep.error);
    return out;
  }
  const bool exact = rep.mode == NumericMode::Exact;
  // a * value <= rhs style comparisons on the LP value.
  auto le_times_lp = [&](double lhs, std::int64_t factor, const Rational& lp, double lp_f) {
    if (exact) return Rational(lhs) <= as_rational(factor) * lp;
    return lhs <= static_cast<double>(factor) * lp_f + 1e-6;
  };

  if (rep.aug_violations)
    add("augmentation", *rep.aug_violations == 0,
        *rep.aug_violations ? std::to_string(*rep.aug_violations) + " violations, first " + rep.first_violation : "");
  if (rep.aug2r_violations)
    add("augmentation-2r", *rep.aug2r_violations == 0, std::to_string(*rep.aug2r_violations) + " violations");
  add("wcol-identity", rep.delta_ordering == rep.wcol);
  if (exact) add("duality", rep.gamma_star == rep.alpha_star, rep.gamma_star.get_str() + " vs " + rep.alpha_star.get_str());
  else add("duality", std::fabs(rep.gamma_star_f - rep.alpha_star_f) <= 1e-6);

  add("x-dominating", rep.x_dominating);
  add("rounding-bound", le_times_lp(static_cast<double>(rep.x_size), rep.a, rep.gamma_star, rep.gamma_star_f),
      std::to_string(rep.x_size) + " <= " + std::to_string(rep.a) + " * gamma*");
  const std::int64_t dr = rep.delta.empty() ? 0 : rep.delta.back();
  add("factor-square", rep.a <= dr * dr);
  if (rep.orientation_d) {
    const std::int64_t f = 2 * static_cast<std::int64_t>(*rep.orientation_d) + 1;
    add("degenerate-factor",
        rep.a <= f && le_times_lp(static_cast<double>(rep.x_size), f, rep.gamma_star, rep.gamma_star_f),
        "a=" + std::to_string(rep.a) + ", 2d+1=" + std::to_string(f));
  }

  add("y-certified", rep.y_max_ball <= rep.a, "max ball count " + std::to_string(rep.y_max_ball));
  add("out-bound", rep.max_out_count <= rep.k);
  if (rep.matching_exact) {
    bool ok = exact ? as_rational(2 * static_cast<std::int64_t>(rep.y_size)) >= rep.alpha_star
                    : 2.0 * static_cast<double>(rep.y_size) >= rep.alpha_star_f - 1e-6;
    add("y-half", ok, std::to_string(rep.y_size) + " vs alpha*/2");
  }
  if (rep.y_max_ball <= rep.a) {
    add("y1-independent", rep.y1_independent);
    add("sparsify-bound", 2 * rep.d * static_cast<std::int64_t>(rep.y1_size) >= static_cast<std::int64_t>(rep.y_size),
        std::to_string(rep.y1_size) + " * 2d >= " + std::to_string(rep.y_size));
    add("conflict-indegree", rep.conflict_max_indegree < rep.d && rep.conflict_unoriented == 0);
  }

  if (rep.alpha_2r) {
    add("oracle-alpha-le-lp", exact ? as_rational(*rep.alpha_2r) <= rep.alpha_star : *rep.alpha_2r <= rep.alpha_star_f + 1e-6);
    add("oracle-y1-le-alpha", static_cast<int>(rep.y1_size) <= *rep.alpha_2r);
  }
  if (rep.gamma) {
    add("oracle-lp-le-gamma", exact ? rep.gamma_star <= as_rational(*rep.gamma) : rep.gamma_star_f <= *rep.gamma + 1e-6);
    add("oracle-gamma-le-x", *rep.gamma <= static_cast<int>(rep.x_size));
    add("oracle-x-le-a-gamma", static_cast<std::int64_t>(rep.x_size) <= rep.a * *rep.gamma);
  }
  if (rep.gamma_lower) add("lower-bound-le-x", *rep.gamma_lower <= static_cast<int>(rep.x_size));
  if (rep.alpha_2rb) {
    add("oracle-alpha2rb-le-b-lp",
        le_times_lp(static_cast<double>(*rep.alpha_2rb), rep.a, rep.alpha_star, rep.alpha_star_f));
    add("oracle-y-le-alpha2rb", static_cast<int>(rep.y_size) <= *rep.alpha_2rb);
  }
  return out;
}

bool all_pass(const ChainReport& report) {
  auto checks = evaluate_checks(report);
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<ChainReport> analyze_all(const std::vector<CorpusInstance>& instances, const AnalyzeOptions& options,
                                     int workers) {
  std::vector<ChainReport> out(instances.size());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(instances.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) out[i] = analyze(instances[i], options);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) out[i] = analyze(instances[i], options);
    });
  for (auto& t : pool) t.join();
  return out;
}

namespace {

std::string lp_string(const ChainReport& rep, const Rational& q, double f) {
  return rep.mode == NumericMode::Exact ? q.get_str() : fixed(f, 9);
}

template <class T>
std::string opt_string(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

int at_or(const std::vector<int>& v, int i) {
  return i >= 0 && static_cast<std::size_t>(i) < v.size() ? v[static_cast<std::size_t>(i)] : 0;
}

}  // namespace

nlohmann::json report_to_json(const ChainReport& rep, bool with_timings) {
  nlohmann::json j = {
      {"id", rep.id},
      {"n", rep.n},
      {"m", rep.m},
      {"r", rep.r},
      {"mode", to_string(rep.mode)},
      {"ordering", rep.ordering_source},
      {"augmentation", rep.augmentation_source},
      {"wcol", rep.wcol},
      {"delta_ordering", rep.delta_ordering},
      {"delta", rep.delta},
      {"a", rep.a},
      {"gamma_star", lp_string(rep, rep.gamma_star, rep.gamma_star_f)},
      {"alpha_star", lp_string(rep, rep.alpha_star, rep.alpha_star_f)},
      {"x0_size", rep.x0_size},
      {"x_size", rep.x_size},
      {"x_dominating", rep.x_dominating},
      {"matching", rep.matching},
      {"k", rep.k},
      {"y_size", rep.y_size},
      {"y_max_ball", rep.y_max_ball},
      {"max_out_count", rep.max_out_count},
      {"d", rep.d},
      {"y1_size", rep.y1_size},
      {"y1_independent", rep.y1_independent},
      {"conflict_max_indegree", rep.conflict_max_indegree},
  };
  if (rep.aug_violations) j["augmentation_violations"] = *rep.aug_violations;
  if (rep.aug2r_violations) j["augmentation_2r_violations"] = *rep.aug2r_violations;
  if (!rep.first_violation.empty()) j["first_violation"] = rep.first_violation;
  if (rep.orientation_d) j["orientation_d"] = *rep.orientation_d;
  if (rep.gamma) j["gamma"] = *rep.gamma;
  if (rep.gamma_lower) j["gamma_lower"] = *rep.gamma_lower;
  if (rep.alpha_2r) j["alpha_2r"] = *rep.alpha_2r;
  if (rep.alpha_2rb) j["alpha_2rb"] = *rep.alpha_2rb;
  if (!rep.error_stage.empty()) j["error"] = {{"stage", rep.error_stage}, {"message", rep.error}};
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : evaluate_checks(rep)) {
    nlohmann::json cj = {{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["pass"] = all_pass(rep);
  if (with_timings) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& s : rep.timings) t[s.stage] = s.ms;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

std::string csv_header(bool with_timings) {
  std::string h =
      "# distdom-chain v1\n"
      "id,n,m,r,mode,ordering,augmentation,wcol_r_minus_1,wcol_r,wcol_2r,delta_r_minus_1,delta_r,delta_2r,a,"
      "gamma_star,alpha_star,x0_size,x_size,x_ratio,matching,k,y_size,y_max_ball,d,y1_size,gamma,gamma_lower,"
      "gamma_gap,alpha_2r,alpha_2rb,checks,failed,status";
  if (with_timings)
    for (const char* s : kStages) h += std::string(",t_") + s + "_ms";
  return h + "\n";
}

std::string csv_row(const ChainReport& rep, bool with_timings) {
  auto checks = evaluate_checks(rep);
  std::string failed;
  for (const auto& c : checks)
    if (!c.pass) failed += (failed.empty() ? "" : ";") + c.name;
  const double lp = rep.mode == NumericMode::Exact ? rep.gamma_star.get_d() : rep.gamma_star_f;
  auto ratio = [&](double num) { return lp > 0 ? fixed(num / lp, 6) : std::string(); };
  std::optional<int> gamma_any = rep.gamma ? rep.gamma : rep.gamma_lower;

  std::ostringstream row;
  row << rep.id << ',' << rep.n << ',' << rep.m << ',' << rep.r << ',' << to_string(rep.mode) << ','
      << rep.ordering_source << ',' << rep.augmentation_source << ',' << at_or(rep.wcol, rep.r - 1) << ','
      << at_or(rep.wcol, rep.r) << ',' << at_or(rep.wcol, 2 * rep.r) << ',' << at_or(rep.delta, rep.r - 1) << ','
      << at_or(rep.delta, rep.r) << ',' << at_or(rep.delta_ordering, 2 * rep.r) << ',' << rep.a << ','
      << lp_string(rep, rep.gamma_star, rep.gamma_star_f) << ',' << lp_string(rep, rep.alpha_star, rep.alpha_star_f)
      << ',' << rep.x0_size << ',' << rep.x_size << ',' << ratio(static_cast<double>(rep.x_size)) << ','
      << rep.matching << ',' << rep.k << ',' << rep.y_size << ',' << rep.y_max_ball << ',' << rep.d << ','
      << rep.y1_size << ',' << opt_string(rep.gamma) << ',' << opt_string(rep.gamma_lower) << ','
      << (gamma_any ? ratio(*gamma_any) : std::string()) << ',' << opt_string(rep.alpha_2r) << ','
      << opt_string(rep.alpha_2rb) << ',' << checks.size() << ',' << failed << ','
      << (rep.error_stage.empty() ? (failed.empty() ? "pass" : "fail") : "error:" + rep.error_stage);
  if (with_timings) {
    for (const char* s : kStages) {
      double ms = 0;
      for (const auto& t : rep.timings)
        if (t.stage == s) ms = t.ms;
      row << ',' << fixed(ms, 3);
    }
  }
  row << '\n';
  return row.str();
}

}  // namespace distdom
