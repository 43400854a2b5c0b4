#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ramsey {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A formula was evaluated outside the range where its theorem applies.
/// `clause()` names the violated side condition.
class NotApplicable : public std::domain_error {
 public:
  explicit NotApplicable(std::string clause)
      : std::domain_error("not applicable: " + clause), clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

/// Right-nested exponent chain b1^(b2^(...^bn)).
class TowerExpr {
 public:
  explicit TowerExpr(std::vector<BigInt> chain);

  const std::vector<BigInt>& chain() const { return chain_; }
  /// "2^(2^(2^11))"; a single-element chain renders as the bare integer.
  std::string to_string() const;

  /// Decimal digit count estimate; nullopt if even that overflows a double.
  std::optional<double> log10() const;
  /// Exact value, refused (nullopt) when it would exceed `max_digits` digits.
  std::optional<BigInt> evaluate(double max_digits = 1e6) const;
  /// log2 applied `times` times, or nullopt when the result still does not
  /// fit in a double.
  std::optional<double> iterated_log2(int times) const;

  friend bool operator==(const TowerExpr&, const TowerExpr&) = default;

 private:
  std::vector<BigInt> chain_;
};

struct Approx {
  double value = 0.0;
  double rel_precision = 1e-15;
};

enum class Direction { lower, upper, exact };

std::string to_string(Direction d);

struct BoundValue {
  std::variant<BigInt, Rational, Approx, TowerExpr> value;
  Direction direction = Direction::exact;
  /// True when an o(1) factor of the source statement was dropped.
  bool asymptotic = false;
  /// Side conditions that were checked before evaluating.
  std::vector<std::string> applicability;

  /// Floating approximation; nullopt for towers too large for a double.
  std::optional<double> approx() const;
  /// Exact integers and rationals print exactly, towers symbolically.
  std::string text() const;
};

bool is_prime(long long n);

/// p (q^p - 1) + 1 for primes p >= 5, q.
BoundValue vdw_lower_primes(int p, int q);
/// Leading term r^k / (e k r).
BoundValue vdw_lower_general(int k, int r);
/// 2^(2^(r^(2^(2^(k+9))))).
TowerExpr gowers_upper(int k, int r);
/// sqrt(2^k k / 2).
BoundValue vdw_lower_probabilistic(int k);
/// 2c(k-1)+1 with c = ceil(m / (2m - k)); needs m >= 2 and m < k < 2m.
BoundValue sp_upper(int m, int k);
/// 2(k-1)(ceil(k / lambda) - 1) + 1 with lambda = ceil((k-1) / ceil(k/m)).
BoundValue sp_lower_constructive(int m, int k);
/// sqrt((2^m - 1) k / 2^m) * (2^m / (2^m - 1))^(k/2).
BoundValue sp_lower_probabilistic(int m, int k);

struct QExact {
  int k = 0;
  int diameter = 0;
  BoundValue value;
};
/// Q_{k-i}(k) = 2ik - 4i + 2r - 1 for k = m i + r, 3 <= r < i/2, r - 1 <= m.
QExact q_exact(int i, int m, int r);

/// Positive roots of the Q_1 lower-bound polynomial
///   y^24 + 8y^20 - 112y^16 - 128y^12 + 1792y^8 + 1024y^4 - 4096
/// found through z = y^4 on z in (0, 64].
struct BetaRoot {
  double beta = 0.0;             // smallest positive root
  double residual = 0.0;         // |poly(beta)|
  std::vector<double> roots;     // every positive root located, ascending
  int brackets = 0;              // sign changes seen during the scan
};
/// Degree-6 polynomial in z = y^4.
double vijay_poly_z(double z);
double vijay_poly_y(double y);
BetaRoot q1_vijay_beta(double tol = 1e-12);

struct NewBase {
  double b = 0.0;  // dominant eigenvalue 1 + 1/sqrt(2)
  double g = 0.0;  // sqrt(2/b)
};
NewBase q1_new_base();

struct LandmanBound {
  int diameter = 0;  // ceil(2k/3)
  BoundValue value;  // (43/324) k^3, asymptotic upper bound
};
LandmanBound q_landman_coeff(int k);

}  // namespace ramsey
