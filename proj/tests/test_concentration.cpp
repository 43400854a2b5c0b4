#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "ramsey/concentration.hpp"
#include "ramsey/counting.hpp"

using namespace ramsey;

namespace {

// Smallest k such that some assignment of k colors to the vertices is proper.
int brute_chromatic(const RandomGraph& g) {
  const int n = g.n();
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> col(n, 0);
    while (true) {
      bool proper = true;
      for (int u = 0; u < n && proper; ++u)
        for (int v = u + 1; v < n && proper; ++v)
          if (g.has_edge(u, v) && col[u] == col[v]) proper = false;
      if (proper) return k;
      int i = 0;
      while (i < n && ++col[i] == k) col[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

int brute_clique(const RandomGraph& g) {
  int best = 0;
  for (unsigned s = 0; s < (1U << g.n()); ++s) {
    bool clique = true;
    for (int u = 0; u < g.n() && clique; ++u)
      for (int v = u + 1; v < g.n() && clique; ++v)
        if ((s >> u & 1U) && (s >> v & 1U) && !g.has_edge(u, v)) clique = false;
    if (clique) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

bool brute_three_path(const RandomGraph& g) {
  const int n = g.n();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool found = false;
      for (int a = 0; a < n && !found; ++a)
        for (int b = 0; b < n && !found; ++b)
          if (a != b && a != u && a != v && b != u && b != v && g.has_edge(u, a) &&
              g.has_edge(a, b) && g.has_edge(b, v))
            found = true;
      if (!found) return false;
    }
  return true;
}

int brute_lis(const std::vector<double>& x) {
  int best = 0;
  const int n = static_cast<int>(x.size());
  for (unsigned s = 0; s < (1U << n); ++s) {
    double last = -1e300;
    bool inc = true;
    for (int i = 0; i < n && inc; ++i)
      if (s >> i & 1U) {
        if (!(x[i] > last)) inc = false;
        last = x[i];
      }
    if (inc) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

}  // namespace

TEST_CASE("rng is reproducible") {
  Rng a(42, 3), b(42, 3), c(42, 4);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
  Rng u(7);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("gnp sampling") {
  Rng rng(1);
  CHECK(gnp_sample(20, 0.0, rng).edge_count() == 0);
  CHECK(gnp_sample(20, 1.0, rng).edge_count() == 190);
  const auto g = gnp_sample(100, 0.5, rng);
  const double sigma = std::sqrt(4950.0 / 4);
  CHECK(std::abs(g.edge_count() - 2475.0) <= 4 * sigma);
  for (int u = 0; u < g.n(); ++u) {
    CHECK_FALSE(g.has_edge(u, u));
    for (int v = 0; v < g.n(); ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
  }
  CHECK_THROWS_AS(gnp_sample(5, 1.5, rng), PreconditionError);
}

TEST_CASE("exact solvers on named graphs") {
  CHECK(chromatic_number(RandomGraph(6)) == 1);
  CHECK(chromatic_number(RandomGraph::complete(7)) == 7);
  CHECK(chromatic_number(RandomGraph::cycle(5)) == 3);
  CHECK(chromatic_number(RandomGraph::cycle(6)) == 2);
  CHECK(clique_number(RandomGraph::complete(9)) == 9);
  CHECK(clique_number(RandomGraph(9)) == 1);
  CHECK(clique_number(RandomGraph::cycle(5)) == 2);
  CHECK(clique_number(RandomGraph::complete(40)) == 40);
  CHECK_THROWS_AS(chromatic_number(RandomGraph(21)), BudgetError);
  CHECK_THROWS_AS(clique_number(RandomGraph(41)), BudgetError);
}

TEST_CASE("exact solvers agree with brute force for n <= 8") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 8;
    const double p = (trial % 5 + 1) / 6.0;
    const auto g = gnp_sample(n, p, rng);
    CHECK(chromatic_number(g) == brute_chromatic(g));
    CHECK(clique_number(g) == brute_clique(g));
  }
}

TEST_CASE("three-path predicate") {
  CHECK(has_three_path_all_pairs(RandomGraph::complete(4)));
  CHECK(has_three_path_all_pairs(RandomGraph::complete(10)));
  CHECK_FALSE(has_three_path_all_pairs(RandomGraph(5)));
  CHECK_FALSE(has_three_path_all_pairs(RandomGraph::path(4)));
  CHECK_FALSE(has_three_path_all_pairs(RandomGraph::complete(3)));
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = gnp_sample(4 + trial % 6, 0.6 + 0.05 * (trial % 7), rng);
    CHECK(has_three_path_all_pairs(g) == brute_three_path(g));
  }
  RandomGraph big(130);
  for (int u = 0; u < 130; ++u)
    for (int v = u + 1; v < 130; ++v) big.add_edge(u, v);
  CHECK(has_three_path_all_pairs(big));
}

TEST_CASE("lis") {
  std::vector<double> up(20), down(20);
  for (int i = 0; i < 20; ++i) {
    up[i] = i;
    down[i] = -i;
  }
  CHECK(lis_length(up) == 20);
  CHECK(lis_length(down) == 1);
  CHECK(lis_length(std::vector<double>{0.3, 0.1, 0.4, 0.2, 0.5}) == 3);
  CHECK(lis_length(std::vector<double>{1, 1, 1}) == 1);
  Rng rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<double> x(1 + trial % 12);
    for (auto& v : x) v = std::floor(rng.uniform() * 6);  // ties included
    CHECK(lis_length(x) == brute_lis(x));
  }
}

TEST_CASE("chebyshev three-point") {
  const auto r = run_chebyshev_threepoint(0.1, 5, 100000, 1);
  CHECK(r.bound_value == doctest::Approx(0.2));
  CHECK(std::abs(r.estimate - 0.2) <= 4 * r.std_error);
  CHECK(r.passed);
  CHECK(r.std_error == std::sqrt(r.estimate * (1 - r.estimate) / 100000));
  const auto zero = run_chebyshev_threepoint(0.0, 3, 1000, 1);
  CHECK(zero.estimate == 0.0);
  const auto half = run_chebyshev_threepoint(0.25, 1, 100000, 2);
  CHECK(std::abs(half.estimate - 0.5) <= 4 * half.std_error);
}

TEST_CASE("chernoff coin flips") {
  const auto r = run_chernoff_coinflip(1000, 70, 100000, 3);
  CHECK(r.bound_value == doctest::Approx(std::exp(-4900.0 / 1500)));
  CHECK(r.estimate <= r.bound_value + 4 * r.std_error);
  CHECK(r.estimate < 1e-3);
  CHECK(r.extra("chebyshev") > r.bound_value);
  const auto tiny = run_chernoff_coinflip(1000, 1e-9, 1000, 3);
  CHECK(tiny.bound_value == doctest::Approx(1.0));
  CHECK(tiny.passed);
  // Chebyshev (n/4)/lam^2 = 0.025 against exp(-lam^2 / 1500) ~ 0.0013.
  const auto c = run_chernoff_coinflip(1000, 100, 1000, 3);
  CHECK(c.extra("chebyshev") == doctest::Approx(0.025));
  CHECK(c.extra("chebyshev") > c.bound_value);
  // Small deviations flip the order: there Chebyshev is the sharper one.
  const auto near = run_chernoff_coinflip(1000, 20, 1000, 3);
  CHECK(near.extra("chebyshev") < near.bound_value);
}

TEST_CASE("azuma chromatic") {
  const auto r = run_azuma_chromatic(15, 0.5, 2, 400, 4);
  CHECK(r.bound_value == doctest::Approx(2 * std::exp(-2.0)));
  CHECK(r.passed);
  CHECK(r.estimate == 0.0);
  CHECK(r.extra("max_chi") - r.extra("min_chi") <= 4);
  const auto empty = run_azuma_chromatic(5, 0.0, 1, 100, 4);
  CHECK(empty.extra("mean_chi") == 1.0);
  CHECK(empty.estimate == 0.0);
  const auto full = run_azuma_chromatic(5, 1.0, 1, 100, 4);
  CHECK(full.extra("mean_chi") == 5.0);
  CHECK_THROWS_AS(run_azuma_chromatic(21, 0.5, 1, 10, 4), BudgetError);
}

TEST_CASE("janson triangle") {
  const auto r = run_janson_triangle(60, 1.0, 20000, 7);
  CHECK(r.extra("M") == doctest::Approx(0.8535).epsilon(1e-3));
  CHECK(r.extra("Delta") == doctest::Approx(0.007525).epsilon(1e-3));
  CHECK(r.extra("limit") == doctest::Approx(std::exp(-1.0 / 6)));
  CHECK(r.passed);
  const auto sparse = run_janson_triangle(30, 1e-4, 1000, 7);
  CHECK(sparse.estimate == 1.0);
  CHECK(sparse.extra("M") == doctest::Approx(1.0));
  const auto full = run_janson_triangle(10, 10.0, 100, 7);
  CHECK(full.estimate == 0.0);
}

TEST_CASE("janson three-path") {
  const auto r = run_janson_threepath(100, 3, 100, 11);
  CHECK(r.extra("p") == doctest::Approx(std::cbrt(3 * std::log(100.0) / 10000)));
  // At n = 100 isolated and low-degree vertices dominate: c = 3 is far from
  // the limit (an independent simulation gives about 0.15), c = 10 is close.
  CHECK(r.estimate < 0.4);
  const auto mid = run_janson_threepath(100, 6, 100, 11);
  const auto high = run_janson_threepath(100, 10, 100, 11);
  CHECK(r.estimate < mid.estimate);
  CHECK(mid.estimate <= high.estimate);
  CHECK(high.estimate >= 0.9);
  CHECK(high.passed);
  const auto forced = run_janson_threepath(10, 2, 50, 11, 1, 0.9, 1.0);
  CHECK(forced.estimate == 1.0);
  CHECK(forced.passed);
}

TEST_CASE("talagrand lis") {
  const auto r = run_talagrand_lis(400, 3, 2000, 12);
  CHECK(r.bound_value == doctest::Approx(2 * std::exp(-2.25)));
  CHECK(r.passed);
  CHECK(r.extra("median_over_sqrt_n") >= 1.5);
  CHECK(r.extra("median_over_sqrt_n") <= 2.1);
}

TEST_CASE("clique survey") {
  const auto r = run_clique_survey(30, 300, 13);
  CHECK(r.passed);
  double ge5 = 0, total = 0;
  std::map<int, double> hist;
  for (const auto& [key, v] : r.extras) {
    if (key.rfind("omega_", 0) != 0) continue;
    const int w = std::stoi(key.substr(6));
    total += v;
    if (w >= 5) ge5 += v;
    hist[w] = v;
  }
  CHECK(total == doctest::Approx(1.0));
  CHECK(ge5 >= 0.99);
  // Almost all mass on three consecutive values; rare outliers either side.
  double best_window = 0;
  for (const auto& [w, v] : hist)
    best_window = std::max(best_window, v + (hist.count(w + 1) ? hist[w + 1] : 0.0) +
                                            (hist.count(w + 2) ? hist[w + 2] : 0.0));
  CHECK(best_window >= 0.95);
  const auto full = run_clique_survey(12, 20, 13, 1, 1.0);
  CHECK(full.extra("omega_12") == 1.0);
}

TEST_CASE("good fraction experiment") {
  const auto r = run_good_fraction(8, ProgressionKind::semi(2), 4, 20000, 5);
  CHECK(r.passed);
  const double exact = 1.0 - count_S(8, ProgressionKind::semi(2), 4) / 256.0;
  CHECK(std::abs(r.estimate - exact) <= 4 * std::max(r.std_error, 1e-9));
}

TEST_CASE("determinism across worker counts") {
  auto same = [](const ExperimentReport& a, const ExperimentReport& b) {
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);
    CHECK(a.bound_value == b.bound_value);
    CHECK(a.extras == b.extras);
  };
  same(run_janson_triangle(40, 1.0, 5000, 3, 1), run_janson_triangle(40, 1.0, 5000, 3, 4));
  same(run_talagrand_lis(100, 2, 3000, 3, 1), run_talagrand_lis(100, 2, 3000, 3, 3));
  same(run_azuma_chromatic(10, 0.5, 1, 3000, 3, 1), run_azuma_chromatic(10, 0.5, 1, 3000, 3, 8));
  same(run_chernoff_coinflip(200, 5, 5000, 3, 1), run_chernoff_coinflip(200, 5, 5000, 3, 2));
  same(run_clique_survey(20, 2100, 3, 1), run_clique_survey(20, 2100, 3, 5));
}

TEST_CASE("bound dominance sweeps") {
  std::uint64_t seed = 100;
  for (double p : {0.05, 0.1, 0.2, 0.3, 0.45}) {
    const auto r = run_chebyshev_threepoint(p, 2.0, 20000, ++seed);
    CHECK(r.estimate <= r.bound_value + 4 * r.std_error);
    CHECK(r.passed);
  }
  for (auto [n, lam] : std::vector<std::pair<int, double>>{
           {100, 5}, {100, 10}, {400, 10}, {1000, 20}, {1000, 40}}) {
    CHECK(run_chernoff_coinflip(n, lam, 20000, ++seed).passed);
  }
  for (auto [n, lam] : std::vector<std::pair<int, double>>{
           {8, 0.5}, {10, 1.0}, {12, 0.3}, {12, 1.5}, {14, 0.8}}) {
    CHECK(run_azuma_chromatic(n, 0.5, lam, 500, ++seed).passed);
  }
  for (auto [n, t] : std::vector<std::pair<int, double>>{
           {50, 1.0}, {100, 1.5}, {100, 2.5}, {200, 2.0}, {300, 3.0}}) {
    CHECK(run_talagrand_lis(n, t, 1000, ++seed).passed);
  }
  for (auto [n, c] : std::vector<std::pair<int, double>>{
           {20, 0.5}, {30, 1.0}, {40, 1.5}, {50, 0.8}, {60, 1.2}}) {
    CHECK(run_janson_triangle(n, c, 4000, ++seed).passed);
  }
}
