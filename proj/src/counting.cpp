#include "ramsey/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

using Mask = std::uint64_t;

Mask terms_mask(const std::vector<int>& terms) {
  Mask m = 0;
  for (int t : terms) m |= Mask{1} << (t - 1);
  return m;
}

std::vector<Mask> pair_masks(int N, const ProgressionKind& kind, int k, int a, int d) {
  std::vector<Mask> out;
  for (const auto& p : enumerate_progressions(N, kind, k, a, d)) out.push_back(terms_mask(p.terms));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool any_mono(Mask c, const std::vector<Mask>& masks) {
  for (Mask m : masks) {
    const Mask hit = c & m;
    if (hit == 0 || hit == m) return true;
  }
  return false;
}

void check_enumeration_budget(int N) {
  if (N > kEnumerationLimit)
    throw BudgetError("exhaustive enumeration is limited to N <= " +
                      std::to_string(kEnumerationLimit));
}

void check_pair(int N, int k, int a, int d) {
  if (N < 1) throw PreconditionError("N must be >= 1");
  if (k < 1) throw PreconditionError("k must be >= 1");
  if (a < 1 || a > N) throw PreconditionError("a must lie in [1, N]");
  if (d < 1) throw PreconditionError("d must be >= 1");
}

// Sums f(c) over colorings c of [1, N] whose top bit is 0 and doubles the
// result; every count here is invariant under swapping the two colors.
// Contiguous coloring ranges are handed to worker threads.
template <class PerColoring>
std::uint64_t sum_over_colorings(int N, PerColoring&& f) {
  if (N == 0) return f(Mask{0});
  const Mask half = Mask{1} << (N - 1);
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const unsigned workers = half < (Mask{1} << 14) ? 1U : std::min(hw, 16U);
  std::vector<std::uint64_t> partial(workers, 0);
  auto run = [&](unsigned w) {
    const Mask begin = half * w / workers;
    const Mask end = half * (w + 1) / workers;
    std::uint64_t acc = 0;
    for (Mask c = begin; c < end; ++c) acc += f(c);
    partial[w] = acc;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return 2 * total;
}

std::vector<Pair> valid_pairs(int N, int k) {
  std::vector<Pair> out;
  for (int a = 1; a + (k - 1) <= N; ++a)
    for (int d = 1; a + static_cast<long long>(k - 1) * d <= N && (k > 1 || d == 1); ++d)
      out.emplace_back(a, d);
  return out;
}

BigInt binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Rational pow2(int e) {
  if (e >= 0) return Rational(BigInt(1) << e);
  return Rational(BigInt(1), BigInt(1) << (-e));
}

}  // namespace

std::vector<std::uint64_t> progression_masks(int N, const ProgressionKind& kind, int k) {
  if (N > 64) throw PreconditionError("progression masks need N <= 64");
  std::vector<Mask> out;
  for (auto [a, d] : valid_pairs(N, k)) {
    auto m = pair_masks(N, kind, k, a, d);
    out.insert(out.end(), m.begin(), m.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t count_T(int N, const ProgressionKind& kind, int k, int a, int d) {
  check_pair(N, k, a, d);
  check_enumeration_budget(N);
  if (a + static_cast<long long>(k - 1) * d > N) return 0;
  const auto masks = pair_masks(N, kind, k, a, d);
  return sum_over_colorings(N, [&](Mask c) -> std::uint64_t { return any_mono(c, masks); });
}

std::uint64_t count_S(int N, const ProgressionKind& kind, int k) {
  if (N < 0 || k < 1) throw PreconditionError("need N >= 0 and k >= 1");
  check_enumeration_budget(N);
  const auto masks = progression_masks(N, kind, k);
  return sum_over_colorings(N, [&](Mask c) -> std::uint64_t { return any_mono(c, masks); });
}

CountReport union_bound_check(int N, const ProgressionKind& kind, int k) {
  if (N < 1 || k < 1) throw PreconditionError("need N >= 1 and k >= 1");
  check_enumeration_budget(N);
  CountReport rep;
  rep.N = N;
  rep.k = k;
  rep.kind = kind;

  const auto pairs = valid_pairs(N, k);
  std::vector<std::vector<Mask>> masks;
  masks.reserve(pairs.size());
  for (auto [a, d] : pairs) masks.push_back(pair_masks(N, kind, k, a, d));

  for (std::size_t p = 0; p < pairs.size(); ++p) {
    rep.T[pairs[p]] =
        sum_over_colorings(N, [&](Mask c) -> std::uint64_t { return any_mono(c, masks[p]); });
  }
  rep.S = count_S(N, kind, k);

  for (const auto& [pair, t] : rep.T) {
    rep.sum_T += t;
    if (!rep.argmax || t > rep.max_T) {
      rep.max_T = t;
      rep.argmax = pair;
    }
  }
  rep.union_bound = Rational(BigInt(N - k + 1) * N * rep.max_T, BigInt(k));
  rep.s_le_sum = rep.S <= rep.sum_T;
  rep.sum_le_union = Rational(rep.sum_T) <= rep.union_bound;
  rep.argmax_claim_applies = N >= 2 * k - 1;
  if (auto it = rep.T.find({1, 1}); it != rep.T.end()) rep.argmax_at_origin = it->second == rep.max_T;

  if (kind.family() == Family::quasi && kind.param() == 1 && k >= 2 && rep.T.contains({1, 1})) {
    CountReport::QuasiRelation rel;
    const auto R = build_R_set(N, kind, k, 1, 1);
    rel.s = R.s;
    const std::uint64_t omega = rep.T.at({1, 1});
    const std::uint64_t free_colorings = std::uint64_t{1} << (N - R.s);
    rel.omega_divisible = omega % free_colorings == 0;
    rel.psi = Rational(BigInt(omega), BigInt(free_colorings));
    const Rational lambda = lambda_vector(k).sum();
    rel.psi_bound = pow2(R.s - k) * lambda;
    rel.psi_equal = rel.psi == rel.psi_bound;
    rel.psi_within_bound = rel.psi <= rel.psi_bound;
    const Rational pair_bound = pow2(N - k) * lambda;
    for (const auto& [pair, t] : rep.T) {
      ++rel.pairs;
      if (Rational(t) <= pair_bound) ++rel.pairs_within_bound;
    }
    rep.quasi_relation = rel;
  }

  if (kind.family() == Family::semi && k >= 2) {
    CountReport::SemiRelation rel;
    for (const auto& [pair, t] : rep.T) {
      const auto R = build_R_set(N, kind, k, pair.first, pair.second);
      const auto closed = scopem_multinomial_sum(k, kind.param(), R.t);
      const Rational predicted = pow2(N - (k - 1) - R.t - 1) * Rational(closed.sum);
      ++rel.pairs;
      if (Rational(t) == predicted) ++rel.pairs_equal;
      if (Rational(t) <= predicted) ++rel.pairs_within_bound;
    }
    rep.semi_relation = rel;
  }
  return rep;
}

RSet build_R_set(int N, const ProgressionKind& kind, int k, int a, int d) {
  check_pair(N, k, a, d);
  if (a + static_cast<long long>(k - 1) * d > N)
    throw PreconditionError("no k-term progression fits");
  RSet out;
  out.a = a;
  out.d = d;
  out.k = k;
  out.N = N;
  out.kind = kind;
  std::vector<int> elems;
  const int last_start = a + (k - 1) * d;
  switch (kind.family()) {
    case Family::arithmetic:
      for (int q = 0; q < k; ++q) elems.push_back(a + q * d);
      break;
    case Family::semi: {
      const int r_max = (kind.param() - 1) * (k - 1);
      int r = 0;
      while (r < r_max && last_start + (r + 1) * d <= N) ++r;
      out.t = r;
      for (int q = 0; q <= (k - 1) + r; ++q) elems.push_back(a + q * d);
      break;
    }
    case Family::quasi: {
      const int n = kind.param();
      // Block i holds every possible position of the (i+1)-th term.
      for (int i = 0; i + 1 < k; ++i)
        for (int q = 0; q <= n * i && a + i * d + q <= N; ++q) elems.push_back(a + i * d + q);
      out.t = std::min(n * (k - 1), N - last_start);
      for (int q = 0; q <= out.t; ++q) elems.push_back(last_start + q);
      break;
    }
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  out.elements = std::move(elems);
  out.s = static_cast<int>(out.elements.size());
  if (kind.family() == Family::quasi && kind.param() == 1) out.w = k * (k - 1) / 2 + out.t - out.s;
  return out;
}

bool closure_property_check(int N, const ProgressionKind& kind, int k, int a, int d) {
  check_pair(N, k, a, d);
  if (N > kClosureLimit)
    throw BudgetError("closure check is limited to N <= " + std::to_string(kClosureLimit));
  if (a + static_cast<long long>(k - 1) * d > N) return true;  // gamma is empty
  const auto masks = pair_masks(N, kind, k, a, d);
  const Mask inside = terms_mask(build_R_set(N, kind, k, a, d).elements);
  const Mask total = Mask{1} << N;
  std::vector<bool> in_gamma(total);
  for (Mask c = 0; c < total; ++c) in_gamma[c] = any_mono(c, masks);
  for (Mask c = 0; c < total; ++c) {
    for (int x = 0; x < N; ++x) {
      const Mask bit = Mask{1} << x;
      if (inside & bit) continue;
      if (in_gamma[c] != in_gamma[c ^ bit]) return false;
    }
  }
  return true;
}

LambdaVector lambda_step(const LambdaVector& v) {
  // A = [[1, 1/2], [1, 1]]
  return LambdaVector{v.k + 1, v.v0 + v.v1 / 2, v.v0 + v.v1};
}

LambdaVector lambda_vector(int k) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  LambdaVector v{1, Rational(1), Rational(1)};
  while (v.k < k) v = lambda_step(v);
  return v;
}

double dominant_eigenvalue(int iterations) {
  if (iterations < 1) throw PreconditionError("iterations must be >= 1");
  using Float = boost::multiprecision::cpp_bin_float_100;
  LambdaVector v = lambda_vector(1);
  LambdaVector next = lambda_step(v);
  for (int i = 1; i < iterations; ++i) {
    v = next;
    next = lambda_step(v);
  }
  const Rational ratio = next.sum() / v.sum();
  const Float value = Float(numerator(ratio)) / Float(denominator(ratio));
  return value.convert_to<double>();
}

ClosedSum scope2_closed_sum(int k, int r) {
  if (k < 1 || r < 0 || r > k - 1) throw PreconditionError("need 0 <= r <= k-1");
  ClosedSum out;
  for (int l = 0; l <= r; ++l) out.sum += binomial(k - 1, l) * (BigInt(1) << (r + 1 - l));
  out.bound = pow2(r + 1) * Rational(boost::multiprecision::pow(BigInt(3), k - 1),
                                     BigInt(1) << (k - 1));
  return out;
}

ClosedSum scopem_multinomial_sum(int k, int m, int r) {
  if (k < 1 || m < 1) throw PreconditionError("need k >= 1 and m >= 1");
  if (r < 0 || r > (m - 1) * (k - 1)) throw PreconditionError("need 0 <= r <= (m-1)(k-1)");
  ClosedSum out;
  const BigInt top = factorial(k - 1);
  std::vector<int> x(static_cast<std::size_t>(m), 0);
  // Compositions of k-1 into m ordered non-negative parts.
  auto visit = [&](auto&& self, int part, int left) -> void {
    if (part == m - 1) {
      x[part] = left;
      int weight = 0;
      BigInt denom = 1;
      for (int i = 0; i < m; ++i) {
        weight += i * x[i];
        denom *= factorial(x[i]);
      }
      if (weight <= r) out.sum += top / denom * (BigInt(1) << (r + 1 - weight));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      x[part] = v;
      self(self, part + 1, left - v);
    }
  };
  visit(visit, 0, k - 1);
  const BigInt full = (BigInt(1) << m) - 1;
  out.bound = pow2(r + 1) * pow2(k - 1) *
              Rational(boost::multiprecision::pow(full, k - 1), BigInt(1) << (m * (k - 1)));
  return out;
}

GoodFraction mc_good_fraction(int N, const ProgressionKind& kind, int k, std::uint64_t samples,
                              std::uint64_t seed, int threads) {
  if (samples < 1) throw PreconditionError("samples must be >= 1");
  if (N < 0 || k < 1) throw PreconditionError("need N >= 0 and k >= 1");
  std::atomic<std::uint64_t> good{0};
  if (N <= 64) {
    const auto masks = progression_masks(N, kind, k);
    const Mask keep = N == 64 ? ~Mask{0} : (Mask{1} << N) - 1;
    for_each_chunk(samples, seed, threads, [&](Rng& rng, std::uint64_t b, std::uint64_t e) {
      std::uint64_t local = 0;
      for (auto i = b; i < e; ++i) local += !any_mono(rng.next() & keep, masks);
      good += local;
    });
  } else {
    for_each_chunk(samples, seed, threads, [&](Rng& rng, std::uint64_t b, std::uint64_t e) {
      std::uint64_t local = 0;
      std::vector<std::uint8_t> colors(static_cast<std::size_t>(N));
      for (auto i = b; i < e; ++i) {
        for (int p = 0; p < N; p += 64) {
          const auto bits = rng.next();
          for (int q = p; q < std::min(N, p + 64); ++q)
            colors[q] = static_cast<std::uint8_t>((bits >> (q - p)) & 1U);
        }
        local += !find_monochromatic(Coloring(colors), kind, k).has_value();
      }
      good += local;
    });
  }
  GoodFraction out;
  out.samples = samples;
  out.good = good.load();
  out.estimate = static_cast<double>(out.good) / static_cast<double>(samples);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
  return out;
}

}  // namespace ramsey
