#include "distdom/domination.hpp"

#include <algorithm>

#include "distdom/error.hpp"
#include "distdom/random.hpp"

namespace distdom {

GuaranteeFactor guarantee_factor(const IndegreeProfile& profile, int r) {
  if (r < 1 || r > profile.radius) throw InputError("guarantee factor needs 1 <= r <= augmentation radius");
  const std::int64_t lower = profile.delta_at(r - 1);
  const std::int64_t upper = profile.delta_at(r);
  GuaranteeFactor f;
  f.a = (lower + 1) * upper - lower;
  f.square_bound = upper * upper;
  if (r == 1) f.degenerate_bound = 2 * (upper - 1) + 1;
  return f;
}

namespace {

// Some chosen vertex y with dist(v, y) <= r, decided through common inneighbors.
bool dominated_via_augmentation(const Augmentation& aug, Vertex v, int r, const std::vector<char>& chosen) {
  for (const auto& in : aug.in_arcs(v)) {
    if (in.rho > r) continue;
    for (const auto& out : aug.out_arcs(in.tail))
      if (in.rho + out.rho <= r && chosen[static_cast<std::size_t>(out.head)]) return true;
  }
  return false;
}

}  // namespace

DominationResult round_dominating(const Graph& g, const Augmentation& aug, const LpSolution& x, const Ordering& sweep,
                                  const RoundingOptions& options) {
  const int n = g.n();
  const int r = aug.radius();
  if (aug.n() != n || sweep.size() != n) throw InputError("graph, augmentation and sweep sizes differ");
  if (r < 1) throw InputError("rounding needs an r-augmentation with r >= 1");
  if (!x.optimal() || x.size() != static_cast<std::size_t>(n))
    throw InputError("rounding needs a per-vertex solution of the domination LP");

  DominationResult result;
  result.r = r;
  result.mode = x.mode;
  result.a = guarantee_factor(indegree_profile(aug), r).a;

  // Feasibility of x for the covering LP.
  BallTable balls(g, r);
  for (Vertex u = 0; u < n; ++u) {
    bool covered;
    if (x.exact()) {
      Rational sum = 0;
      for (Vertex v : balls.ball(u)) sum += x.exact_values[static_cast<std::size_t>(v)];
      covered = sum >= 1;
    } else {
      double sum = 0;
      for (Vertex v : balls.ball(u)) sum += x.values[static_cast<std::size_t>(v)];
      covered = sum >= 1.0 - 1e-9;
    }
    if (!covered) throw InputError("solution violates the covering constraint of vertex " + std::to_string(u));
  }

  std::vector<char> chosen(static_cast<std::size_t>(n), 0);
  const Rational threshold(1, static_cast<unsigned long>(result.a));
  const double threshold_float = 1.0 / static_cast<double>(result.a) - 1e-9;
  result.lp_value = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto i = static_cast<std::size_t>(v);
    bool heavy;
    if (x.exact()) {
      result.lp_value += x.exact_values[i];
      heavy = x.exact_values[i] >= threshold;
    } else {
      result.lp_value_float += x.values[i];
      heavy = x.values[i] >= threshold_float;
    }
    if (heavy) {
      chosen[i] = 1;
      ++result.x0_size;
    }
  }
  if (x.exact()) result.lp_value_float = result.lp_value.get_d();
  else result.lp_value = Rational(result.lp_value_float);

  for (Vertex v : sweep.sequence()) {
    bool dominated = within_distance_of_set(g, v, r, chosen);
    if (options.cross_check_with_augmentation && dominated != dominated_via_augmentation(aug, v, r, chosen))
      throw Error("(DIST) cross-check disagrees with BFS at vertex " + std::to_string(v));
    if (dominated) continue;
    SweepStep step{v, {}};
    for (const auto& in : aug.in_arcs(v)) {
      if (in.rho > r - 1) continue;
      auto& c = chosen[static_cast<std::size_t>(in.tail)];
      if (!c) {
        c = 1;
        step.added.push_back(in.tail);
      }
    }
    if (options.record_trace) result.trace.push_back(std::move(step));
  }

  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v)
    if (chosen[static_cast<std::size_t>(v)]) members.push_back(v);
  result.set = VertexSet(std::move(members));
  result.valid = is_r_dominating(g, result.set, r);
  const auto size = static_cast<std::int64_t>(result.set.size());
  if (x.exact()) {
    result.bound_ok = Rational(static_cast<long>(size)) <= Rational(static_cast<long>(result.a)) * result.lp_value;
  } else {
    result.bound_ok = static_cast<double>(size) <= static_cast<double>(result.a) * result.lp_value_float + 1e-6;
  }
  return result;
}

SweepOrder parse_sweep_order(const std::string& name) {
  if (name == "augmentation" || name == "ordering") return SweepOrder::Augmentation;
  if (name == "input") return SweepOrder::Input;
  if (name == "random") return SweepOrder::Random;
  throw InputError("unknown sweep order '" + name + "'");
}

std::string to_string(SweepOrder order) {
  switch (order) {
    case SweepOrder::Augmentation: return "augmentation";
    case SweepOrder::Input: return "input";
    case SweepOrder::Random: return "random";
  }
  return "?";
}

Ordering make_sweep(SweepOrder order, const Ordering& source, std::uint64_t seed) {
  switch (order) {
    case SweepOrder::Augmentation: return source;
    case SweepOrder::Input: return Ordering::identity(source.size());
    case SweepOrder::Random: {
      auto seq = Ordering::identity(source.size()).sequence();
      Rng rng(seed);
      rng.shuffle(seq);
      return Ordering::from_sequence(std::move(seq));
    }
  }
  throw InputError("unknown sweep order");
}

nlohmann::json domination_result_to_json(const DominationResult& result) {
  nlohmann::json j = {
      {"set", result.set.members()},
      {"a", result.a},
      {"r", result.r},
      {"x0_size", result.x0_size},
      {"lp_value", result.mode == NumericMode::Exact ? result.lp_value.get_str() : std::to_string(result.lp_value_float)},
      {"valid", result.valid},
      {"bound_ok", result.bound_ok},
  };
  if (!result.trace.empty()) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& s : result.trace) trace.push_back({{"vertex", s.vertex}, {"added", s.added}});
    j["sweep_trace"] = std::move(trace);
  }
  return j;
}

}  // namespace distdom
