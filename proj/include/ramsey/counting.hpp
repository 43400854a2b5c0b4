#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ramsey/bounds.hpp"
#include "ramsey/progressions.hpp"

namespace ramsey {

/// Largest N for exhaustive enumeration of all 2^N colorings.
inline constexpr int kEnumerationLimit = 24;
/// Largest N for the recoloring closure check.
inline constexpr int kClosureLimit = 20;

/// Raised when a request exceeds an enumeration budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Pair = std::pair<int, int>;  // (a, d)

/// Exact counts around the union bound
///   S <= sum_{a,d} T_{a,d} <= (N - k + 1) (N / k) max T.
struct CountReport {
  int N = 0;
  int k = 0;
  ProgressionKind kind = ProgressionKind::arithmetic();

  std::uint64_t S = 0;  // colorings with some monochromatic k-term progression
  std::map<Pair, std::uint64_t> T;  // every (a, d) with a + (k-1) d <= N
  std::uint64_t sum_T = 0;
  std::uint64_t max_T = 0;
  std::optional<Pair> argmax;        // lexicographically first pair attaining max_T
  Rational union_bound;              // (N - k + 1) (N / k) max_T

  bool s_le_sum = false;
  bool sum_le_union = false;
  bool chain_holds() const { return s_le_sum && sum_le_union; }

  /// max T is attained at (1, 1). Claimed for N >= 2k - 1.
  bool argmax_at_origin = false;
  bool argmax_claim_applies = false;  // N >= 2k - 1

  /// Quasi(1) only: Omega = T_{1,1} = 2^{N-s} Psi with s = |R_{1,1}|, and the
  /// bound Psi <= 2^{s-k} lambda_k used to finish the exponential estimate.
  struct QuasiRelation {
    int s = 0;
    bool omega_divisible = false;  // 2^{N-s} divides T_{1,1}
    Rational psi;                  // T_{1,1} / 2^{N-s}
    Rational psi_bound;            // 2^{s-k} lambda_k
    bool psi_equal = false;
    bool psi_within_bound = false;
    int pairs = 0;
    int pairs_within_bound = 0;  // pairs with T_{a,d} <= 2^{N-k} lambda_k
  };
  std::optional<QuasiRelation> quasi_relation;

  /// Semi(m) only: |gamma_{a,d}| against 2^{N-(k-1)-r-1} times the
  /// multinomial sum, which the counting argument states as an equality.
  struct SemiRelation {
    int pairs = 0;
    int pairs_equal = 0;
    int pairs_within_bound = 0;
  };
  std::optional<SemiRelation> semi_relation;
};

/// Colorings of [1, N] with a monochromatic k-term progression of `kind`
/// starting at a with witness difference d.
std::uint64_t count_T(int N, const ProgressionKind& kind, int k, int a, int d);
/// Colorings of [1, N] with any monochromatic k-term progression of `kind`.
std::uint64_t count_S(int N, const ProgressionKind& kind, int k);
CountReport union_bound_check(int N, const ProgressionKind& kind, int k);

/// The elements whose colors can matter for membership in gamma_{a,d}.
struct RSet {
  int a = 0, d = 0, k = 0, N = 0;
  ProgressionKind kind = ProgressionKind::arithmetic();
  std::vector<int> elements;  // sorted
  int s = 0;                  // |elements|
  /// Quasi: extent of the final block. Semi: the extension r beyond k-1
  /// multiples of d. Arithmetic: 0.
  int t = 0;
  /// Quasi(1): k(k-1)/2 + t - s, the overlap correction.
  std::optional<int> w;
};
RSet build_R_set(int N, const ProgressionKind& kind, int k, int a, int d);

/// Membership in gamma_{a,d} is unchanged by recoloring any single element
/// outside R_{a,d}.
bool closure_property_check(int N, const ProgressionKind& kind, int k, int a, int d);

struct LambdaVector {
  int k = 0;
  Rational v0, v1;  // tuples ending in 0 and in 1
  Rational sum() const { return v0 + v1; }
};
/// (lambda_{k,0}, lambda_{k,1}) = A^{k-1} (1, 1) with A = [[1, 1/2], [1, 1]].
LambdaVector lambda_vector(int k);
/// One exact step of the transfer matrix.
LambdaVector lambda_step(const LambdaVector& v);

/// Dominant eigenvalue of A by exact-rational power iteration.
double dominant_eigenvalue(int iterations = 64);

struct ClosedSum {
  BigInt sum;
  Rational bound;
  bool within() const { return Rational(sum) <= bound; }
  bool equal() const { return Rational(sum) == bound; }
};
/// sum_{l=0}^{r} C(k-1, l) 2^{r+1-l} against 2^{r+1} (3/2)^{k-1}.
ClosedSum scope2_closed_sum(int k, int r);
/// Multinomial sum over (x_1..x_m), sum x = k-1, sum (i-1) x_i <= r, against
/// 2^{r+1} 2^{k-1} ((2^m - 1) / 2^m)^{k-1}.
ClosedSum scopem_multinomial_sum(int k, int m, int r);

struct GoodFraction {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t good = 0;
};
/// Monte-Carlo fraction of uniformly random colorings of [1, N] with no
/// monochromatic k-term progression.
GoodFraction mc_good_fraction(int N, const ProgressionKind& kind, int k, std::uint64_t samples,
                              std::uint64_t seed, int threads = 1);

/// Bit masks (bit i = position i+1) of every k-term progression in [1, N],
/// deduplicated and sorted. N <= 64.
std::vector<std::uint64_t> progression_masks(int N, const ProgressionKind& kind, int k);

}  // namespace ramsey
