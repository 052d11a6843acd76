#include <doctest.h>

#include "distdom/domination.hpp"
#include "distdom/error.hpp"
#include "distdom/instances.hpp"
#include "distdom/oracles.hpp"
#include "support.hpp"

using namespace distdom;

namespace {

LpSolution exact_point(std::vector<Rational> values) {
  LpSolution s;
  s.status = LpStatus::Optimal;
  s.mode = NumericMode::Exact;
  for (const auto& v : values) s.values.push_back(v.get_d());
  s.exact_values = std::move(values);
  return s;
}

IndegreeProfile profile_of(std::vector<int> delta) {
  IndegreeProfile p;
  p.radius = static_cast<int>(delta.size()) - 1;
  p.delta = std::move(delta);
  return p;
}

// Replays the trace: a vertex that pulled in new vertices had no chosen
// vertex in its r-ball at that moment.
bool charging_sound(const Graph& g, const LpSolution& x, const DominationResult& res) {
  std::vector<char> chosen(static_cast<std::size_t>(g.n()), 0);
  const Rational threshold = make_rational(1, res.a);
  for (Vertex v = 0; v < g.n(); ++v)
    if (x.exact_values[static_cast<std::size_t>(v)] >= threshold) chosen[static_cast<std::size_t>(v)] = 1;
  for (const auto& step : res.trace) {
    if (step.added.empty()) continue;
    for (Vertex w : ball(g, step.vertex, res.r))
      if (chosen[static_cast<std::size_t>(w)]) return false;
    for (Vertex w : step.added) chosen[static_cast<std::size_t>(w)] = 1;
  }
  return true;
}

}  // namespace

TEST_CASE("guarantee factor") {
  for (int d = 0; d <= 5; ++d) {
    auto f = guarantee_factor(profile_of({1, d + 1}), 1);
    CHECK(f.a == 2 * d + 1);
    REQUIRE(f.degenerate_bound);
    CHECK(*f.degenerate_bound == 2 * d + 1);
  }
  for (int w = 1; w <= 6; ++w) {
    auto f = guarantee_factor(profile_of({1, w, w}), 2);
    CHECK(f.a == w * w);
    CHECK(f.square_bound == w * w);
    CHECK_FALSE(f.degenerate_bound);
  }
  CHECK(guarantee_factor(profile_of({1, 1}), 1).a == 1);
  auto f = guarantee_factor(profile_of({1, 2, 4, 7}), 3);
  CHECK(f.a == 5 * 7 - 4);
  CHECK(f.a <= f.square_bound);
  CHECK_THROWS_AS(guarantee_factor(profile_of({1, 2}), 2), InputError);
}

TEST_CASE("star with all LP mass on the center") {
  auto g = star_graph(4);
  Ordering center_first = Ordering::identity(5);
  auto aug = augment_from_ordering(g, center_first, 1);
  std::vector<Rational> x(5, 0);
  x[0] = 1;
  auto res = round_dominating(g, aug, exact_point(x), center_first);
  CHECK(res.x0_size == 1);
  CHECK(res.set == VertexSet{0});
  CHECK(res.valid);
  CHECK(res.bound_ok);
}

TEST_CASE("C5 with the cyclic orientation") {
  auto g = cycle_graph(5);
  std::vector<Edge> cyclic;
  for (int i = 0; i < 5; ++i) cyclic.emplace_back(i, (i + 1) % 5);
  auto aug = orientation_augmentation(g, cyclic);
  auto res = round_dominating(g, aug, exact_point(std::vector<Rational>(5, make_rational(1, 3))), Ordering::identity(5));
  CHECK(res.a == 3);
  CHECK(res.x0_size == 5);
  CHECK(res.set.size() == 5);
  CHECK(res.lp_value == make_rational(5, 3));
  CHECK(res.bound_ok);
  CHECK(Rational(static_cast<long>(res.set.size())) == res.a * res.lp_value);
}

TEST_CASE("integral optimum is returned unchanged") {
  auto g = path_graph(6);
  auto aug = augment_from_ordering(g, Ordering::identity(6), 1);
  std::vector<Rational> x(6, 0);
  x[1] = 1;
  x[4] = 1;
  RoundingOptions opts;
  opts.record_trace = true;
  auto res = round_dominating(g, aug, exact_point(x), Ordering::identity(6), opts);
  CHECK(res.set == VertexSet{1, 4});
  CHECK(res.trace.empty());
}

TEST_CASE("infeasible input is rejected") {
  auto g = path_graph(3);
  auto aug = augment_from_ordering(g, Ordering::identity(3), 1);
  std::vector<Rational> x(3, 0);
  x[0] = 1;
  CHECK_THROWS_AS(round_dominating(g, aug, exact_point(x), Ordering::identity(3)), InputError);
  LpSolution fl;
  fl.status = LpStatus::Optimal;
  fl.values = {0.0, 0.999, 0.0};
  CHECK_THROWS_AS(round_dominating(g, aug, fl, Ordering::identity(3)), InputError);
}

TEST_CASE("validity, guarantee, sandwich and charging on random graphs") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto g = testing::random_graph(12, 0.22, seed);
    for (int r = 1; r <= 3; ++r) {
      auto order = heuristic_ordering(g, OrderingStrategy::Degeneracy);
      auto aug = augment_from_ordering(g, order, r);
      auto x = solve_domination(g, r, NumericMode::Exact);
      const int gamma = brute_gamma_r(g, r).value;
      for (auto sweep : {SweepOrder::Augmentation, SweepOrder::Input, SweepOrder::Random}) {
        RoundingOptions opts;
        opts.record_trace = true;
        opts.cross_check_with_augmentation = true;
        auto res = round_dominating(g, aug, x, make_sweep(sweep, order, seed), opts);
        CHECK(res.valid);
        CHECK(is_r_dominating(g, res.set, r));
        CHECK(res.bound_ok);
        CHECK(Rational(static_cast<long>(res.set.size())) <= res.a * x.exact_objective);
        CHECK(gamma <= static_cast<int>(res.set.size()));
        CHECK(res.a * x.exact_objective <= Rational(res.a * gamma));
        CHECK(charging_sound(g, x, res));
        ++checked;
      }
      auto fx = solve_domination(g, r, NumericMode::Float);
      auto fres = round_dominating(g, aug, fx, order);
      CHECK(fres.valid);
      CHECK(fres.bound_ok);
    }
  }
  CHECK(checked == 12 * 3 * 3);
}

TEST_CASE("degenerate graphs with their orientations stay within 2d+1") {
  for (int d = 1; d <= 3; ++d)
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      auto inst = random_degenerate(13, d, seed);
      auto aug = orientation_augmentation(inst.graph, inst.orientation);
      auto x = solve_domination(inst.graph, 1, NumericMode::Exact);
      auto res = round_dominating(inst.graph, aug, x, Ordering::identity(13));
      CHECK(res.valid);
      CHECK(res.a <= 2 * d + 1);
      CHECK(Rational(static_cast<long>(res.set.size())) <= (2 * d + 1) * x.exact_objective);
      const int gamma = brute_gamma_r(inst.graph, 1).value;
      CHECK(static_cast<int>(res.set.size()) <= (2 * d + 1) * gamma);
    }
}

TEST_CASE("sweep orders and JSON") {
  CHECK(parse_sweep_order("ordering") == SweepOrder::Augmentation);
  CHECK(to_string(parse_sweep_order("random")) == "random");
  CHECK_THROWS_AS(parse_sweep_order("sideways"), InputError);
  auto src = Ordering::from_sequence({2, 0, 1});
  CHECK(make_sweep(SweepOrder::Augmentation, src, 1) == src);
  CHECK(make_sweep(SweepOrder::Input, src, 1) == Ordering::identity(3));
  CHECK(make_sweep(SweepOrder::Random, Ordering::identity(30), 5) ==
        make_sweep(SweepOrder::Random, Ordering::identity(30), 5));

  auto g = cycle_graph(6);
  auto aug = augment_from_ordering(g, Ordering::identity(6), 1);
  RoundingOptions opts;
  opts.record_trace = true;
  auto res = round_dominating(g, aug, solve_domination(g, 1, NumericMode::Exact), Ordering::identity(6), opts);
  auto j = domination_result_to_json(res);
  CHECK(j.at("valid") == true);
  CHECK(j.at("set").size() == res.set.size());
  CHECK(j.at("lp_value") == "2");
}
