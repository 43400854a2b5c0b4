// Runs every acceptance criterion once and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria (0 when all pass).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey/bounds.hpp"
#include "ramsey/cli.hpp"
#include "ramsey/concentration.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/search.hpp"

using namespace ramsey;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20240601;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int search_value(const ProgressionKind& kind, int k, int threads = 1) {
  SearchConfig cfg;
  cfg.kind = kind;
  cfg.k = k;
  cfg.threads = threads;
  cfg.parallel_width = threads > 1 ? 10 : 0;
  const auto r = ramsey_number(cfg);
  if (!verify_certificate(r.witness) || r.witness.n != r.value - 1) return -1;
  return r.value;
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome exact_search() {
  const auto t0 = Clock::now();
  const int w3 = search_value(ProgressionKind::arithmetic(), 3);
  const int w4 = search_value(ProgressionKind::arithmetic(), 4);
  const double s = seconds_since(t0);
  return {w3 == 9 && w4 == 35 && s < 60, fmt("w(3)=%d w(4)=%d in %.2fs", w3, w4, s)};
}

Outcome family_identities() {
  bool ok = true;
  std::string d;
  for (int k = 3; k <= 4; ++k) {
    const int w = search_value(ProgressionKind::arithmetic(), k);
    const int sp1 = search_value(ProgressionKind::semi(1), k);
    const int q0 = search_value(ProgressionKind::quasi(0), k);
    const int sp2 = search_value(ProgressionKind::semi(2), k);
    const int sp3 = search_value(ProgressionKind::semi(3), k);
    const int q1 = search_value(ProgressionKind::quasi(1), k);
    const int q2 = search_value(ProgressionKind::quasi(2), k);
    ok = ok && w > 0 && sp1 == w && q0 == w && sp3 <= sp2 && sp2 <= sp1 && q2 <= q1 && q1 <= q0 &&
         sp2 > 0 && sp3 > 0 && q1 > 0 && q2 > 0;
    d += fmt("k=%d: w=%d SP1=%d Q0=%d SP2=%d SP3=%d Q1=%d Q2=%d; ", k, w, sp1, q0, sp2, sp3, q1, q2);
  }
  return {ok, d};
}

Outcome bracketing() {
  int violations = 0, cases = 0;
  std::string d;
  for (int m = 2; m <= 3; ++m)
    for (int k = m + 1; k < 2 * m; ++k) {
      const int sp = search_value(ProgressionKind::semi(m), k);
      const BigInt lo = std::get<BigInt>(sp_lower_constructive(m, k).value);
      const BigInt hi = std::get<BigInt>(sp_upper(m, k).value);
      ++cases;
      if (sp < 0 || BigInt(sp) < lo || BigInt(sp) > hi) ++violations;
      d += fmt("SP_%d(%d)=%d in [%s,%s]; ", m, k, sp, lo.str().c_str(), hi.str().c_str());
    }
  return {violations == 0 && cases == 3, d + fmt("violations=%d", violations)};
}

Outcome probabilistic_consistency() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string d;
  for (int k = 3; k <= 6; ++k) {
    const int N =
        static_cast<int>(std::floor(std::sqrt(3.0 * k / 4) * std::pow(4.0 / 3.0, k / 2.0))) - 1;
    const auto kind = ProgressionKind::semi(2);
    const auto c = exists_good_coloring(N, kind, k);
    const bool good = c && verify_certificate({kind, k, N, *c});
    ok = ok && good;
    d += fmt("k=%d N=%d %s; ", k, N, good ? "good" : "none");
  }
  const double s = seconds_since(t0);
  return {ok && s < 10, d + fmt("%.3fs", s)};
}

Outcome constants() {
  const double beta = q1_vijay_beta().beta;
  const double g = q1_new_base().g;
  const double b = dominant_eigenvalue();
  const double target = 1 + 1 / std::sqrt(2.0);
  const bool ok = std::abs(beta - 1.08226) <= 1e-4 && std::abs(g - 1.08239) <= 1e-4 &&
                  std::abs(b - target) <= 1e-12 && g > beta;
  return {ok, fmt("beta=%.7f g=%.7f eigen=%.15f |eigen-b|=%.2e", beta, g, b, std::abs(b - target))};
}

Outcome counting_oracles() {
  int checked = 0, chain_fail = 0, argmax_reported = 0, argmax_holds = 0;
  for (const auto& kind :
       {ProgressionKind::arithmetic(), ProgressionKind::semi(2), ProgressionKind::quasi(1)})
    for (int k = 3; k <= 4; ++k)
      for (int N = k; N <= 14; ++N) {
        const auto rep = union_bound_check(N, kind, k);
        ++checked;
        if (!rep.chain_holds()) ++chain_fail;
        if (N >= 2 * k - 1) {
          if (rep.argmax_claim_applies) ++argmax_reported;
          if (rep.argmax_at_origin) ++argmax_holds;
        }
      }
  const auto t = count_T(5, ProgressionKind::quasi(1), 3, 1, 1);
  int expected_argmax = 0;
  for (int k = 3; k <= 4; ++k) expected_argmax += 3 * (14 - (2 * k - 1) + 1);
  const bool ok = chain_fail == 0 && t == 18 && argmax_reported == expected_argmax;
  return {ok, fmt("%d instances, chain failures=%d, T=%llu, argmax at (1,1) in %d/%d", checked,
                  chain_fail, static_cast<unsigned long long>(t), argmax_holds, argmax_reported)};
}

Outcome transfer_matrix() {
  bool exact = true;
  LambdaVector prev = lambda_vector(1);
  exact = prev.v0 == 1 && prev.v1 == 1;
  for (int k = 2; k <= 64; ++k) {
    const LambdaVector cur = lambda_vector(k);
    const LambdaVector stepped = lambda_step(prev);
    exact = exact && cur.v0 == prev.v0 + prev.v1 / 2 && cur.v1 == prev.v0 + prev.v1 &&
            stepped.v0 == cur.v0 && stepped.v1 == cur.v1;
    prev = cur;
  }
  const auto l2 = lambda_vector(2);
  const bool l2_ok = l2.v0 == Rational(3, 2) && l2.v1 == 2;
  const double ratio = static_cast<double>(lambda_vector(30).sum() / lambda_vector(29).sum());
  const double b = 1 + 1 / std::sqrt(2.0);
  const double rel = std::abs(ratio - b) / b;
  return {exact && l2_ok && rel <= 0.01,
          fmt("exact to 64: %s, lambda_2 ok: %s, ratio=%.6f (rel err %.2e)", exact ? "yes" : "no",
              l2_ok ? "yes" : "no", ratio, rel)};
}

Outcome closed_sums() {
  int bad = 0, cases = 0;
  for (int k = 1; k <= 20; ++k)
    for (int r = 0; r <= k - 1; ++r) {
      const auto c = scope2_closed_sum(k, r);
      ++cases;
      if (!c.within() || c.equal() != (r == k - 1)) ++bad;
    }
  for (int k = 1; k <= 10; ++k)
    for (int m = 1; m <= 4; ++m)
      for (int r = 0; r <= (m - 1) * (k - 1); ++r) {
        const auto c = scopem_multinomial_sum(k, m, r);
        ++cases;
        if (!c.within()) ++bad;
        if (m == 2 && r <= k - 1 && c.sum != scope2_closed_sum(k, r).sum) ++bad;
      }
  return {bad == 0, fmt("%d sums, %d failures", cases, bad)};
}

Outcome janson() {
  const auto t0 = Clock::now();
  const auto rep = run_janson_triangle(60, 1.0, 20000, kSeed);
  const double s = seconds_since(t0);
  const double lo = rep.extra("M") - 4 * rep.std_error;
  const double hi = rep.extra("upper") + 4 * rep.std_error;
  const double limit = std::exp(-1.0 / 6.0);
  const bool ok = rep.estimate >= lo && rep.estimate <= hi && std::abs(rep.estimate - limit) <= 0.03 &&
                  s < 60;
  return {ok, fmt("est=%.5f SE=%.5f M=%.5f Delta=%.5f window=[%.5f,%.5f] |est-e^-1/6|=%.4f %.2fs",
                  rep.estimate, rep.std_error, rep.extra("M"), rep.extra("Delta"), lo, hi,
                  std::abs(rep.estimate - limit), s)};
}

Outcome chernoff() {
  const auto rep = run_chernoff_coinflip(1000, 70, 100000, kSeed);
  const double bound = std::exp(-70.0 * 70.0 / (3 * 500.0));
  const bool ok = rep.estimate <= bound && std::abs(rep.bound_value - bound) < 1e-12 &&
                  rep.extra("chebyshev") > rep.bound_value;
  return {ok, fmt("est=%.5f bound=%.5f chebyshev=%.5f", rep.estimate, rep.bound_value,
                  rep.extra("chebyshev"))};
}

Outcome azuma() {
  const auto rep = run_azuma_chromatic(15, 0.5, 2, 2000, kSeed);
  const double bound = 2 * std::exp(-2.0);
  const bool ok = rep.estimate <= bound + 4 * rep.std_error;
  return {ok, fmt("est=%.5f bound=%.5f SE=%.5f mean_chi=%.3f", rep.estimate, bound, rep.std_error,
                  rep.extra("mean_chi"))};
}

Outcome talagrand() {
  const auto rep = run_talagrand_lis(400, 3, 5000, kSeed);
  const double bound = 2 * std::exp(-9.0 / 4);
  const bool upper = rep.estimate <= bound + 4 * rep.std_error;
  const bool lower = rep.extra("lower_tail") <= bound + 4 * rep.extra("lower_std_error");
  const double ratio = rep.extra("median") / 20.0;
  const bool ok = upper && lower && ratio >= 1.5 && ratio <= 2.1;
  return {ok, fmt("upper=%.5f lower=%.5f bound=%.5f median/sqrt(n)=%.3f", rep.estimate,
                  rep.extra("lower_tail"), bound, ratio)};
}

Outcome chebyshev() {
  const auto rep = run_chebyshev_threepoint(0.1, 5, 100000, kSeed);
  const bool ok = std::abs(rep.estimate - 0.2) <= 4 * rep.std_error;
  return {ok, fmt("est=%.5f SE=%.5f", rep.estimate, rep.std_error)};
}

Outcome determinism() {
  auto call = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    cli::dispatch(args, out, err);
    return out.str();
  };
  const std::vector<std::vector<std::string>> commands = {
      {"mc", "janson-triangle", "--samples", "3000", "--seed", "5", "--threads", "2", "--json"},
      {"mc", "talagrand-lis", "--n", "200", "--samples", "1000", "--seed", "5", "--json"},
      {"mc", "good-fraction", "--n", "12", "--samples", "5000", "--seed", "5", "--json"},
      {"count", "report", "--n", "9", "--kind", "quasi", "--param", "1", "--k", "3", "--json"},
      {"bound", "--name", "q1-new-base", "--json"}};
  bool json_ok = true;
  for (const auto& c : commands) json_ok = json_ok && call(c) == call(c) && !call(c).empty();

  bool search_ok = true;
  for (const auto& kind : {ProgressionKind::arithmetic(), ProgressionKind::semi(2),
                           ProgressionKind::quasi(1)}) {
    std::string first;
    for (int threads : {1, 2, 8}) {
      SearchConfig cfg;
      cfg.kind = kind;
      cfg.k = 4;
      cfg.threads = threads;
      cfg.parallel_width = threads > 1 ? 10 : 0;
      const auto r = ramsey_number(cfg);
      const std::string key = std::to_string(r.value) + ":" + r.witness.coloring.to_string();
      if (first.empty()) first = key;
      search_ok = search_ok && key == first;
    }
  }
  return {json_ok && search_ok, fmt("repeated JSON identical: %s, search 1/2/8 threads identical: %s",
                                    json_ok ? "yes" : "no", search_ok ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"exact search w(3), w(4)", exact_search},
      {"family identities and chains", family_identities},
      {"bound bracketing", bracketing},
      {"probabilistic-bound consistency", probabilistic_consistency},
      {"constants beta, g, eigenvalue", constants},
      {"counting oracles", counting_oracles},
      {"transfer matrix", transfer_matrix},
      {"closed sums", closed_sums},
      {"janson triangle", janson},
      {"chernoff", chernoff},
      {"azuma", azuma},
      {"talagrand lis", talagrand},
      {"chebyshev tightness", chebyshev},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed;
}
