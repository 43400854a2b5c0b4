#include "ramsey/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ramsey/progressions.hpp"

namespace ramsey {

namespace {

BigInt ipow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

void require(bool ok, const std::string& clause) {
  if (!ok) throw NotApplicable(clause);
}

double big_to_double(const BigInt& x) { return x.convert_to<double>(); }

}  // namespace

std::string to_string(Direction d) {
  switch (d) {
    case Direction::lower: return "lower";
    case Direction::upper: return "upper";
    case Direction::exact: return "exact";
  }
  return "?";
}

// --- TowerExpr ---------------------------------------------------------------

TowerExpr::TowerExpr(std::vector<BigInt> chain) : chain_(std::move(chain)) {
  if (chain_.empty()) throw PreconditionError("tower needs at least one level");
  for (const auto& b : chain_)
    if (b < 1) throw PreconditionError("tower levels must be positive");
}

std::string TowerExpr::to_string() const {
  std::string out = chain_.back().str();
  for (auto it = chain_.rbegin() + 1; it != chain_.rend(); ++it) {
    if (it == chain_.rbegin() + 1)
      out = it->str() + "^" + out;
    else
      out = it->str() + "^(" + out + ")";
  }
  return out;
}

namespace {

// Value of the suffix chain[i..] as a double, if it fits.
std::optional<double> suffix_value(const std::vector<BigInt>& chain, std::size_t i);

std::optional<double> suffix_log10(const std::vector<BigInt>& chain, std::size_t i) {
  const double lb = std::log10(big_to_double(chain[i]));
  if (i + 1 == chain.size()) return lb;
  if (chain[i] == 1) return 0.0;
  const auto exponent = suffix_value(chain, i + 1);
  if (!exponent) return std::nullopt;
  const double out = *exponent * lb;
  if (!std::isfinite(out)) return std::nullopt;
  return out;
}

std::optional<double> suffix_value(const std::vector<BigInt>& chain, std::size_t i) {
  if (i + 1 == chain.size()) {
    const double v = big_to_double(chain[i]);
    if (!std::isfinite(v)) return std::nullopt;
    return v;
  }
  const auto l = suffix_log10(chain, i);
  if (!l || *l > 307.0) return std::nullopt;
  return std::pow(10.0, *l);
}

}  // namespace

std::optional<double> TowerExpr::log10() const { return suffix_log10(chain_, 0); }

std::optional<BigInt> TowerExpr::evaluate(double max_digits) const {
  const auto digits = log10();
  if (!digits || *digits > max_digits) return std::nullopt;
  BigInt value = chain_.back();
  for (auto it = chain_.rbegin() + 1; it != chain_.rend(); ++it) {
    if (value > BigInt(std::numeric_limits<unsigned>::max())) return std::nullopt;
    value = ipow(*it, value.convert_to<unsigned>());
  }
  return value;
}

std::optional<double> TowerExpr::iterated_log2(int times) const {
  if (times < 0) throw PreconditionError("times must be >= 0");
  // The running quantity is mult * value(chain[i..]) + add.
  double mult = 1.0;
  double add = 0.0;
  std::size_t i = 0;
  for (int t = 0; t < times; ++t) {
    if (const auto v = suffix_value(chain_, i)) {
      double x = mult * *v + add;
      for (; t < times; ++t) x = std::log2(x);
      return x;
    }
    // value(chain[i..]) = b^E with E astronomically large, so
    // log2(mult * b^E + add) = log2(mult) + E log2(b) to double precision.
    add = std::log2(mult);
    mult = std::log2(big_to_double(chain_[i]));
    ++i;
  }
  const auto v = suffix_value(chain_, i);
  if (!v) return std::nullopt;
  return mult * *v + add;
}

// --- BoundValue --------------------------------------------------------------

std::optional<double> BoundValue::approx() const {
  return std::visit(
      [](const auto& v) -> std::optional<double> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BigInt>) {
          return v.template convert_to<double>();
        } else if constexpr (std::is_same_v<T, Rational>) {
          return v.template convert_to<double>();
        } else if constexpr (std::is_same_v<T, Approx>) {
          return v.value;
        } else {
          const auto l = v.log10();
          if (!l || *l > 307.0) return std::nullopt;
          return v.evaluate()->template convert_to<double>();
        }
      },
      value);
}

std::string BoundValue::text() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BigInt>) {
          return v.str();
        } else if constexpr (std::is_same_v<T, Rational>) {
          return v.str();
        } else if constexpr (std::is_same_v<T, Approx>) {
          std::ostringstream os;
          os.precision(17);
          os << v.value;
          return os.str();
        } else {
          return v.to_string();
        }
      },
      value);
}

// --- evaluators --------------------------------------------------------------

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

BoundValue vdw_lower_primes(int p, int q) {
  require(p >= 5, "p >= 5");
  require(is_prime(p), "p prime");
  require(is_prime(q), "q prime");
  BigInt value = BigInt(p) * (ipow(BigInt(q), static_cast<unsigned>(p)) - 1) + 1;
  return BoundValue{std::move(value), Direction::lower, false, {"p >= 5", "p prime", "q prime"}};
}

BoundValue vdw_lower_general(int k, int r) {
  require(k >= 2, "k >= 2");
  require(r >= 2, "r >= 2");
  const double value = std::pow(static_cast<double>(r), k) / (std::numbers::e * k * r);
  return BoundValue{Approx{value, 1e-15}, Direction::lower, true, {"k >= 2", "r >= 2"}};
}

TowerExpr gowers_upper(int k, int r) {
  require(k >= 2, "k >= 2");
  require(r >= 2, "r >= 2");
  return TowerExpr({2, 2, r, 2, 2, BigInt(k) + 9});
}

BoundValue vdw_lower_probabilistic(int k) {
  require(k >= 2, "k >= 2");
  const double value = std::sqrt(std::ldexp(static_cast<double>(k), k) / 2.0);
  return BoundValue{Approx{value, 1e-15}, Direction::lower, false, {"k >= 2"}};
}

BoundValue sp_upper(int m, int k) {
  require(m >= 2, "m >= 2");
  require(m < k, "m < k");
  require(k < 2 * m, "k < 2m");
  const long long c = ceil_div(m, 2LL * m - k);
  BigInt value = BigInt(2) * c * (k - 1) + 1;
  return BoundValue{std::move(value), Direction::upper, false, {"m >= 2", "m < k", "k < 2m"}};
}

BoundValue sp_lower_constructive(int m, int k) {
  require(k >= 2, "k >= 2");
  require(m >= 1, "m >= 1");
  const long long lambda = ceil_div(k - 1, ceil_div(k, m));
  BigInt value = BigInt(2) * (k - 1) * (ceil_div(k, lambda) - 1) + 1;
  return BoundValue{std::move(value), Direction::lower, false, {"k >= 2", "m >= 1"}};
}

BoundValue sp_lower_probabilistic(int m, int k) {
  require(m >= 1, "m >= 1");
  require(k >= 2, "k >= 2");
  const double full = std::ldexp(1.0, m);
  const double value =
      std::sqrt((full - 1.0) * k / full) * std::pow(full / (full - 1.0), k / 2.0);
  return BoundValue{Approx{value, 1e-14}, Direction::lower, false, {"m >= 1", "k >= 2"}};
}

QExact q_exact(int i, int m, int r) {
  require(3 <= r, "3 <= r");
  require(2 * r < i, "r < i/2");
  require(r - 1 <= m, "r - 1 <= m");
  const long long k = static_cast<long long>(m) * i + r;
  BigInt value = BigInt(2) * i * k - BigInt(4) * i + 2 * r - 1;
  return QExact{static_cast<int>(k), static_cast<int>(k - i),
                BoundValue{std::move(value), Direction::exact, false,
                           {"3 <= r", "r < i/2", "r - 1 <= m"}}};
}

double vijay_poly_z(double z) {
  // z^6 + 8z^5 - 112z^4 - 128z^3 + 1792z^2 + 1024z - 4096, Horner form.
  return (((((z + 8.0) * z - 112.0) * z - 128.0) * z + 1792.0) * z + 1024.0) * z - 4096.0;
}

double vijay_poly_y(double y) {
  const double y2 = y * y;
  return vijay_poly_z(y2 * y2);
}

BetaRoot q1_vijay_beta(double tol) {
  if (!(tol > 0)) throw PreconditionError("tol must be positive");
  constexpr double kStep = 1e-3;
  constexpr double kUpper = 64.0;
  BetaRoot out;
  std::vector<double> z_roots;
  double lo = kStep;
  double f_lo = vijay_poly_z(lo);
  const int steps = static_cast<int>(std::lround(kUpper / kStep));
  for (int s = 2; s <= steps; ++s) {
    const double hi = s * kStep;
    const double f_hi = vijay_poly_z(hi);
    if (f_lo == 0.0) {
      z_roots.push_back(lo);
      ++out.brackets;
    } else if ((f_lo < 0) != (f_hi < 0) && f_hi != 0.0) {
      ++out.brackets;
      double a = lo, b = hi, fa = f_lo;
      while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double fm = vijay_poly_z(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if ((fm < 0) == (fa < 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      z_roots.push_back(0.5 * (a + b));
    }
    lo = hi;
    f_lo = f_hi;
  }
  if (f_lo == 0.0) {
    z_roots.push_back(lo);
    ++out.brackets;
  }
  if (z_roots.empty()) throw std::runtime_error("no bracket found");
  for (double z : z_roots) out.roots.push_back(std::sqrt(std::sqrt(z)));
  out.beta = out.roots.front();
  out.residual = std::abs(vijay_poly_y(out.beta));
  return out;
}

NewBase q1_new_base() {
  const double b = 1.0 + 1.0 / std::numbers::sqrt2;
  return NewBase{b, std::sqrt(2.0 / b)};
}

LandmanBound q_landman_coeff(int k) {
  require(k >= 2, "k >= 2");
  const BigInt cube = BigInt(k) * k * k;
  Rational value(cube * 43, BigInt(324));
  return LandmanBound{static_cast<int>(ceil_div(2LL * k, 3)),
                      BoundValue{std::move(value), Direction::upper, true, {"k >= 2"}}};
}

}  // namespace ramsey
