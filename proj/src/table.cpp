#include <cmath>
#include <functional>
#include <sstream>

#include "ramsey/bounds.hpp"
#include "ramsey/cli.hpp"
#include "ramsey/search.hpp"

namespace ramsey::cli {

namespace {

constexpr const char* kNA = "n/a";

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

// A rendered cell plus the number used for bracketing checks; `number` is
// empty for inapplicable cells and for asymptotic values, which cannot be
// compared against exact data.
struct Cell {
  std::string text = kNA;
  std::optional<double> number;
};

Cell bound_cell(const std::function<BoundValue()>& eval) {
  try {
    const BoundValue b = eval();
    Cell c;
    c.text = std::holds_alternative<Rational>(b.value) ? fmt(*b.approx()) : b.text();
    if (!b.asymptotic) c.number = b.approx();
    return c;
  } catch (const NotApplicable&) {
    return {};
  }
}

std::optional<QExact> q_exact_for(int diameter, int k) {
  const int i = k - diameter;
  if (i < 1) return std::nullopt;
  try {
    return q_exact(i, k / i, k % i);
  } catch (const NotApplicable&) {
    return std::nullopt;
  }
}

TableRow make_row(const TableSpec& spec, const ProgressionKind& kind, int k) {
  TableRow row;
  row.family = kind.family_name();
  row.param = kind.family() == Family::arithmetic ? kNA : std::to_string(kind.param());
  row.k = std::to_string(k);
  const int p = kind.param();

  Cell constructive, probabilistic, upper;
  std::optional<int> formula_exact;
  switch (kind.family()) {
    case Family::arithmetic:
      if (k - 1 >= 5 && is_prime(k - 1))
        constructive = bound_cell([&] { return vdw_lower_primes(k - 1, 2); });
      probabilistic = bound_cell([&] { return vdw_lower_probabilistic(k); });
      if (k >= 2) upper.text = gowers_upper(k, 2).to_string();
      break;
    case Family::semi:
      constructive = bound_cell([&] { return sp_lower_constructive(p, k); });
      probabilistic = bound_cell([&] { return sp_lower_probabilistic(p, k); });
      upper = bound_cell([&] { return sp_upper(p, k); });
      break;
    case Family::quasi:
      if (const auto q = q_exact_for(p, k))
        formula_exact = std::get<BigInt>(q->value.value).convert_to<int>();
      if (k >= 2 && p == (2 * k + 2) / 3)
        upper = bound_cell([&] { return q_landman_coeff(k).value; });
      if (p == 1) {
        row.beta_pow_k = fmt(std::pow(q1_vijay_beta().beta, k));
        row.g_pow_k = fmt(std::pow(q1_new_base().g, k));
      }
      break;
  }
  if (row.beta_pow_k.empty()) row.beta_pow_k = kNA;
  if (row.g_pow_k.empty()) row.g_pow_k = kNA;

  std::optional<int> exact;
  bool incomplete = false;
  if (spec.exact) {
    SearchConfig cfg;
    cfg.kind = kind;
    cfg.k = k;
    cfg.max_n = spec.max_n;
    cfg.threads = spec.threads;
    cfg.parallel_width = spec.threads > 1 ? std::min(10, spec.max_n - 1) : 0;
    cfg.node_budget = spec.node_budget;
    cfg.time_budget = spec.time_budget;
    try {
      exact = ramsey_number(cfg).value;
      row.exact = std::to_string(*exact);
    } catch (const SearchIncomplete& e) {
      incomplete = true;
      row.exact = ">=" + std::to_string(e.lower_bound());
    }
  } else if (formula_exact) {
    exact = formula_exact;
    row.exact = std::to_string(*exact);
  } else {
    row.exact = kNA;
  }

  row.constructive_lower = constructive.text;
  row.probabilistic_lower = probabilistic.text;
  row.upper = upper.text;

  if (incomplete) {
    row.status = "incomplete";
  } else if (!exact) {
    row.status = kNA;
  } else {
    std::string bad;
    auto flag = [&](const char* what) { bad += bad.empty() ? what : std::string(";") + what; };
    if (constructive.number && *exact < *constructive.number) flag("constructive_lower");
    if (probabilistic.number && *exact < *probabilistic.number) flag("probabilistic_lower");
    if (upper.number && *exact > *upper.number) flag("upper");
    row.status = bad.empty() ? "ok" : "violation:" + bad;
  }
  return row;
}

}  // namespace

Range Range::parse(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw PreconditionError("range must look like a..b, got '" + text + "'");
  }
}

std::vector<TableRow> build_table(const TableSpec& spec) {
  std::vector<TableRow> rows;
  const Range params = spec.family == Family::arithmetic ? Range{0, 0} : spec.params;
  for (int p = params.lo; p <= params.hi; ++p) {
    ProgressionKind kind = ProgressionKind::arithmetic();
    if (spec.family == Family::semi) kind = ProgressionKind::semi(p);
    if (spec.family == Family::quasi) kind = ProgressionKind::quasi(p);
    for (int k = spec.ks.lo; k <= spec.ks.hi; ++k) {
      if (k < 2) throw PreconditionError("k must be >= 2");
      rows.push_back(make_row(spec, kind, k));
    }
  }
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out =
      "family,param,k,constructive_lower,probabilistic_lower,exact,upper,beta_pow_k,g_pow_k,"
      "status\n";
  for (const auto& r : rows) {
    for (const std::string* cell :
         {&r.family, &r.param, &r.k, &r.constructive_lower, &r.probabilistic_lower, &r.exact,
          &r.upper, &r.beta_pow_k, &r.g_pow_k}) {
      out += *cell;
      out += ',';
    }
    out += r.status;
    out += '\n';
  }
  return out;
}

std::string emit_table(const TableSpec& spec) { return table_csv(build_table(spec)); }

bool has_violation(const std::vector<TableRow>& rows) {
  for (const auto& r : rows)
    if (r.status.starts_with("violation")) return true;
  return false;
}

}  // namespace ramsey::cli
