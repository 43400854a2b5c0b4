#include "ramsey/concentration.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "ramsey/counting.hpp"

namespace ramsey {

namespace {

constexpr double kSlack = 4.0;

// Per-sample values in sample order, whatever the worker count.
template <class T, class F>
std::vector<T> collect(std::uint64_t samples, std::uint64_t seed, int threads, F&& draw) {
  std::vector<T> out(samples);
  for_each_chunk(samples, seed, threads, [&](Rng& rng, std::uint64_t b, std::uint64_t e) {
    for (auto i = b; i < e; ++i) out[i] = draw(rng);
  });
  return out;
}

template <class T, class Pred>
std::uint64_t count_if(const std::vector<T>& xs, Pred&& pred) {
  return static_cast<std::uint64_t>(std::count_if(xs.begin(), xs.end(), pred));
}

void require_samples(std::uint64_t samples) {
  if (samples < 1) throw PreconditionError("samples must be >= 1");
}

double fraction(std::uint64_t hits, std::uint64_t samples) {
  return static_cast<double>(hits) / static_cast<double>(samples);
}

ExperimentReport proportion_report(std::string name, NamedValues params, std::uint64_t hits,
                                   std::uint64_t samples) {
  ExperimentReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.samples = samples;
  r.estimate = fraction(hits, samples);
  r.std_error = proportion_std_error(r.estimate, samples);
  return r;
}

bool triangle_free(const RandomGraph& g) {
  for (int u = 0; u < g.n(); ++u) {
    const auto ru = g.row(u);
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.has_edge(u, v)) continue;
      const auto rv = g.row(v);
      for (int w = 0; w < g.words(); ++w)
        if (ru[w] & rv[w]) return false;
    }
  }
  return true;
}

}  // namespace

double ExperimentReport::extra(const std::string& key) const {
  for (const auto& [k, v] : extras)
    if (k == key) return v;
  throw std::out_of_range("no extra named " + key);
}

double proportion_std_error(double p, std::uint64_t samples) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

ExperimentReport run_chebyshev_threepoint(double p, double a, std::uint64_t samples,
                                          std::uint64_t seed, int threads) {
  if (!(p >= 0.0 && p <= 0.5)) throw PreconditionError("p must lie in [0, 1/2]");
  if (!(a > 0.0)) throw PreconditionError("a must be positive");
  require_samples(samples);
  const auto xs = collect<double>(samples, seed, threads, [&](Rng& rng) {
    const double u = rng.uniform();
    return u < p ? -a : (u < 2 * p ? a : 0.0);
  });
  auto r = proportion_report("chebyshev-threepoint", {{"p", p}, {"a", a}},
                             count_if(xs, [&](double x) { return std::abs(x) >= a; }), samples);
  // sigma^2 = 2 p a^2, so sigma^2 / a^2 = 2p: the inequality holds with equality.
  r.bound_value = 2.0 * p;
  r.passed = std::abs(r.estimate - r.bound_value) <= kSlack * r.std_error;
  return r;
}

ExperimentReport run_chernoff_coinflip(int n, double lam, std::uint64_t samples,
                                       std::uint64_t seed, int threads) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  if (!(lam > 0.0)) throw PreconditionError("lam must be positive");
  require_samples(samples);
  const auto heads = collect<int>(samples, seed, threads, [&](Rng& rng) {
    int h = 0;
    for (int done = 0; done < n; done += 64) {
      std::uint64_t w = rng.next();
      if (n - done < 64) w &= (std::uint64_t{1} << (n - done)) - 1;
      h += std::popcount(w);
    }
    return h;
  });
  const double mu = n / 2.0;
  auto r = proportion_report("chernoff-coinflip", {{"n", n}, {"lambda", lam}},
                             count_if(heads, [&](int h) { return h >= mu + lam; }), samples);
  r.bound_value = std::exp(-lam * lam / (3.0 * mu));
  r.passed = r.estimate <= r.bound_value + kSlack * r.std_error;
  r.extras = {{"mu", mu}, {"chebyshev", (n / 4.0) / (lam * lam)}};
  return r;
}

ExperimentReport run_azuma_chromatic(int n, double p, double lam, std::uint64_t samples,
                                     std::uint64_t seed, int threads) {
  if (n < 1 || n > kChromaticLimit)
    throw BudgetError("azuma-chromatic needs 1 <= n <= " + std::to_string(kChromaticLimit));
  if (!(lam > 0.0)) throw PreconditionError("lam must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("p must lie in [0, 1]");
  require_samples(samples);
  const auto chi = collect<int>(samples, seed, threads, [&](Rng& rng) {
    return chromatic_number(gnp_sample(n, p, rng));
  });
  double mean = 0.0;
  for (int c : chi) mean += c;
  mean /= static_cast<double>(samples);
  const double threshold = lam * std::sqrt(n - 1.0);
  auto r = proportion_report("azuma-chromatic", {{"n", n}, {"p", p}, {"lambda", lam}},
                             count_if(chi, [&](int c) { return std::abs(c - mean) > threshold; }),
                             samples);
  r.bound_value = 2.0 * std::exp(-lam * lam / 2.0);
  r.passed = r.estimate <= r.bound_value + kSlack * r.std_error;
  const auto [lo, hi] = std::minmax_element(chi.begin(), chi.end());
  r.extras = {{"mean_chi", mean}, {"threshold", threshold}, {"min_chi", *lo}, {"max_chi", *hi}};
  return r;
}

ExperimentReport run_janson_triangle(int n, double c, std::uint64_t samples, std::uint64_t seed,
                                     int threads) {
  if (n < 3) throw PreconditionError("n must be >= 3");
  if (!(c > 0.0)) throw PreconditionError("c must be positive");
  const double p = c / n;
  if (p > 1.0) throw PreconditionError("p = c/n must be <= 1");
  require_samples(samples);
  const auto free = collect<char>(samples, seed, threads, [&](Rng& rng) {
    return static_cast<char>(triangle_free(gnp_sample(n, p, rng)));
  });
  auto r = proportion_report("janson-triangle", {{"n", n}, {"c", c}},
                             count_if(free, [](char f) { return f != 0; }), samples);
  const double triples = n * (n - 1.0) * (n - 2.0) / 6.0;
  const double eps = std::pow(p, 3);
  const double M = std::pow(1.0 - eps, triples);
  const double delta = triples * 3.0 * (n - 3.0) * std::pow(p, 5);
  // With eps = 1 every triangle is present and the upper factor is vacuous.
  const double upper = eps < 1.0 ? M * std::exp(delta / (2.0 * (1.0 - eps))) : 1.0;
  r.bound_value = M;
  r.passed = M - kSlack * r.std_error <= r.estimate && r.estimate <= upper + kSlack * r.std_error;
  r.extras = {{"p", p},
              {"M", M},
              {"epsilon", eps},
              {"Delta", delta},
              {"upper", upper},
              {"limit", std::exp(-c * c * c / 6.0)}};
  return r;
}

ExperimentReport run_janson_threepath(int n, double c, std::uint64_t samples, std::uint64_t seed,
                                      int threads, double floor, double p_override) {
  if (n < 4) throw PreconditionError("n must be >= 4");
  if (!(c >= 2.0)) throw PreconditionError("c must be >= 2");
  if (p_override > 1.0) throw PreconditionError("p must be <= 1");
  require_samples(samples);
  const double p = p_override >= 0.0 ? p_override
                                     : std::min(1.0, std::cbrt(c * std::log(n) / (double(n) * n)));
  const auto ok = collect<char>(samples, seed, threads, [&](Rng& rng) {
    return static_cast<char>(has_three_path_all_pairs(gnp_sample(n, p, rng)));
  });
  auto r = proportion_report("janson-threepath", {{"n", n}, {"c", c}, {"floor", floor}},
                             count_if(ok, [](char f) { return f != 0; }), samples);
  r.bound_value = floor;
  r.passed = r.estimate >= floor;
  r.extras = {{"p", p}};
  return r;
}

ExperimentReport run_talagrand_lis(int n, double t, std::uint64_t samples, std::uint64_t seed,
                                   int threads) {
  if (n < 10) throw PreconditionError("n must be >= 10");
  if (!(t > 0.0)) throw PreconditionError("t must be positive");
  require_samples(samples);
  const auto lis = collect<int>(samples, seed, threads, [&](Rng& rng) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = rng.uniform();
    return lis_length(x);
  });
  auto sorted = lis;
  std::sort(sorted.begin(), sorted.end());
  const double m = sorted[(samples - 1) / 2];
  const double width = t * std::sqrt(m);
  auto r = proportion_report("talagrand-lis", {{"n", n}, {"t", t}},
                             count_if(lis, [&](int x) { return x > m + width; }), samples);
  const double lower = fraction(count_if(lis, [&](int x) { return x < m - width; }), samples);
  const double lower_se = proportion_std_error(lower, samples);
  r.bound_value = 2.0 * std::exp(-t * t / 4.0);
  r.passed = r.estimate <= r.bound_value + kSlack * r.std_error &&
             lower <= r.bound_value + kSlack * lower_se;
  r.extras = {{"median", m},
              {"lower_tail", lower},
              {"lower_std_error", lower_se},
              {"median_over_sqrt_n", m / std::sqrt(n)}};
  return r;
}

ExperimentReport run_clique_survey(int n, std::uint64_t samples, std::uint64_t seed, int threads,
                                   double p, double max_fraction) {
  if (n < 1 || n > kCliqueLimit)
    throw BudgetError("clique-survey needs 1 <= n <= " + std::to_string(kCliqueLimit));
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("p must lie in [0, 1]");
  require_samples(samples);
  const auto omega = collect<int>(samples, seed, threads, [&](Rng& rng) {
    return clique_number(gnp_sample(n, p, rng));
  });
  const int floor_log = static_cast<int>(std::floor(std::log2(n)));
  auto r = proportion_report("clique-survey", {{"n", n}, {"p", p}},
                             count_if(omega, [&](int w) { return w < floor_log; }), samples);
  r.bound_value = max_fraction;
  r.passed = r.estimate <= max_fraction;
  std::map<int, std::uint64_t> hist;
  for (int w : omega) ++hist[w];
  r.extras = {{"floor_log2_n", floor_log}, {"two_log2_n", 2.0 * std::log2(n)}};
  for (const auto& [w, cnt] : hist)
    r.extras.emplace_back("omega_" + std::to_string(w), fraction(cnt, samples));
  return r;
}

ExperimentReport run_good_fraction(int N, const ProgressionKind& kind, int k,
                                   std::uint64_t samples, std::uint64_t seed, int threads) {
  if (N < 1 || N > 64) throw PreconditionError("good-fraction needs 1 <= N <= 64");
  if (k < 2) throw PreconditionError("k must be >= 2");
  require_samples(samples);
  const auto g = mc_good_fraction(N, kind, k, samples, seed, threads);
  const double progressions = static_cast<double>(progression_masks(N, kind, k).size());
  ExperimentReport r;
  r.name = "good-fraction";
  r.params = {{"N", N}, {"param", kind.param()}, {"k", k}};
  r.samples = samples;
  r.estimate = g.estimate;
  r.std_error = g.std_error;
  // Each fixed progression is monochromatic with probability 2^(1-k).
  r.bound_value = std::max(0.0, 1.0 - progressions * std::ldexp(1.0, 1 - k));
  r.passed = r.estimate >= r.bound_value - kSlack * r.std_error;
  r.extras = {{"progressions", progressions}};
  return r;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "chebyshev-threepoint", "chernoff-coinflip", "azuma-chromatic", "janson-triangle",
      "janson-threepath",     "talagrand-lis",     "clique-survey",   "good-fraction"};
  return names;
}

}  // namespace ramsey
