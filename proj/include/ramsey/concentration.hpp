#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/progressions.hpp"

namespace ramsey {

using NamedValues = std::vector<std::pair<std::string, double>>;

struct ExperimentReport {
  std::string name;
  NamedValues params;
  std::uint64_t samples = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  double bound_value = 0.0;
  bool passed = false;
  /// Secondary quantities: comparison values, exact formula terms, histograms.
  NamedValues extras;

  /// Value of a named extra; throws std::out_of_range if absent.
  double extra(const std::string& key) const;
};

/// sqrt(p (1 - p) / n).
double proportion_std_error(double p, std::uint64_t samples);

// Every experiment draws sample i from the substream of its 1024-sample chunk,
// so reports depend on (parameters, seed) only, never on `threads`.

/// X = 0 w.p. 1-2p, +a or -a w.p. p each; Pr[|X| >= a] against sigma^2/a^2 = 2p.
ExperimentReport run_chebyshev_threepoint(double p, double a, std::uint64_t samples,
                                          std::uint64_t seed, int threads = 1);

/// Heads in n fair flips; Pr[X >= n/2 + lam] against exp(-lam^2 / (3 n/2)).
ExperimentReport run_chernoff_coinflip(int n, double lam, std::uint64_t samples,
                                       std::uint64_t seed, int threads = 1);

/// Pr[|chi(G(n,p)) - mean| > lam sqrt(n-1)] against 2 exp(-lam^2 / 2).
ExperimentReport run_azuma_chromatic(int n, double p, double lam, std::uint64_t samples,
                                     std::uint64_t seed, int threads = 1);

/// Pr[G(n, c/n) triangle-free] against M <= . <= M exp(Delta / (2 (1 - eps))).
ExperimentReport run_janson_triangle(int n, double c, std::uint64_t samples, std::uint64_t seed,
                                     int threads = 1);

/// Pr[every pair joined by a 3-path] in G(n, (c ln n / n^2)^(1/3)) against a
/// floor; `p_override` in [0, 1] replaces the edge probability.
ExperimentReport run_janson_threepath(int n, double c, std::uint64_t samples, std::uint64_t seed,
                                      int threads = 1, double floor = 0.9,
                                      double p_override = -1.0);

/// Longest increasing subsequence of n uniforms; both tails around the sample
/// median m against 2 exp(-t^2 / 4).
ExperimentReport run_talagrand_lis(int n, double t, std::uint64_t samples, std::uint64_t seed,
                                   int threads = 1);

/// Distribution of omega(G(n, p)); estimate = Pr[omega < floor(log2 n)].
ExperimentReport run_clique_survey(int n, std::uint64_t samples, std::uint64_t seed,
                                   int threads = 1, double p = 0.5, double max_fraction = 0.01);

/// Fraction of random colorings of [1, N] with no monochromatic k-term
/// progression, against the union bound 1 - |progressions| 2^(1-k).
ExperimentReport run_good_fraction(int N, const ProgressionKind& kind, int k,
                                   std::uint64_t samples, std::uint64_t seed, int threads = 1);

/// Names accepted by the `mc` subcommand.
const std::vector<std::string>& experiment_names();

}  // namespace ramsey
