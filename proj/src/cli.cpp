#include "ramsey/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <ostream>

#include "ramsey/bounds.hpp"
#include "ramsey/concentration.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/search.hpp"

namespace ramsey::cli {

namespace {

using json = nlohmann::ordered_json;

struct Outcome {
  json result;
  std::string csv;  // replaces the generic CSV rendering when set
  int code = ExitCode::ok;
};

// --- JSON helpers -------------------------------------------------------------

json number(double x) {
  if (std::isfinite(x) && x == std::floor(x) && std::abs(x) < 9.0e15)
    return static_cast<std::int64_t>(x);
  return x;
}

json big(const BigInt& x) {
  if (x <= std::numeric_limits<std::int64_t>::max() && x >= std::numeric_limits<std::int64_t>::min())
    return x.convert_to<std::int64_t>();
  return x.str();
}

json rational(const Rational& x) {
  if (denominator(x) == 1) return big(numerator(x));
  return x.str();
}

json named(const NamedValues& values) {
  json out = json::object();
  for (const auto& [k, v] : values) out[k] = number(v);
  return out;
}

json kind_param(const ProgressionKind& kind) {
  return kind.family() == Family::arithmetic ? json(nullptr) : json(kind.param());
}

// --- rendering ------------------------------------------------------------------

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void render(const json& result, const std::string& csv, const std::string& format,
            std::ostream& out) {
  if (format == "json") {
    out << result.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    if (!csv.empty()) {
      out << csv;
      return;
    }
    std::string header, row;
    for (const auto& [key, value] : result.items()) {
      if (key == "config") continue;
      header += (header.empty() ? "" : ",") + key;
      row += (row.empty() ? "" : ",") + csv_cell(value);
    }
    out << header << '\n' << row << '\n';
    return;
  }
  for (const auto& [key, value] : result.items()) {
    if (key == "rows") {
      out << csv;
      continue;
    }
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

// Numbers echo as numbers, everything else as strings.
json typed(const std::string& text) {
  if (text.empty()) return text;
  std::size_t used = 0;
  try {
    const long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::logic_error&) {
  }
  try {
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::logic_error&) {
  }
  return text;
}

// Every option of the parsed command chain with its resolved value.
json echo_config(const std::vector<const CLI::App*>& chain, const std::string& format) {
  json cfg = json::object();
  std::string command;
  for (std::size_t i = 1; i < chain.size(); ++i)
    command += (command.empty() ? "" : " ") + chain[i]->get_name();
  cfg["command"] = command;
  cfg["format"] = format;
  for (const CLI::App* app : chain) {
    for (const CLI::Option* opt : app->get_options()) {
      const std::string name = opt->get_single_name();
      if (name == "help" || name == "json" || name == "csv") continue;
      if (opt->get_expected_max() == 0) {
        cfg[name] = opt->count() > 0;
      } else if (opt->count() > 0) {
        const auto& r = opt->results();
        cfg[name] = typed(r.back());
      } else if (!opt->get_default_str().empty()) {
        cfg[name] = typed(opt->get_default_str());
      } else {
        cfg[name] = nullptr;
      }
    }
  }
  return cfg;
}

int default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::logic_error&) {
    }
  }
  return 1;
}

ProgressionKind make_kind(const std::string& name, const std::optional<int>& param) {
  if (name == "ap" || name == "arithmetic") return ProgressionKind::arithmetic();
  if (!param) throw PreconditionError("--param is required for kind " + name);
  return ProgressionKind::from_name(name, *param);
}

const std::vector<std::string> kKinds = {"ap", "arithmetic", "semi", "quasi"};

// --- state shared by the handlers --------------------------------------------

struct Options {
  bool json_out = false, csv_out = false;
  std::uint64_t seed = 1;
  int threads = 1;
  std::uint64_t node_budget = 1'000'000'000ULL;
  std::int64_t time_budget_ms = 0;

  std::string kind = "ap";
  std::optional<int> param;
  int k = 3;
  int max_n = 64;
  int width = -1;
  bool no_symmetry = false;

  std::string bound_name;
  std::optional<int> p, q, r, m, i, bk;
  double tol = 1e-12;
  std::string k_range = "3..6", m_range = "2..3", n_range = "1..1", param_range = "2..2";
  std::string family = "semi";
  bool exact = false;

  int count_n = 10;

  std::string experiment;
  std::uint64_t samples = 10000;
  std::optional<double> mc_n, mc_p, mc_a, mc_lambda, mc_c, mc_t, mc_floor, mc_max_fraction;
  std::optional<int> mc_k;

  std::string coloring;
  std::string terms;
};

std::chrono::milliseconds time_budget(const Options& o) {
  return std::chrono::milliseconds(o.time_budget_ms);
}

// --- search -------------------------------------------------------------------

json certificate_json(const Certificate& c) { return c.coloring.to_string(); }

Outcome run_search(const Options& o) {
  SearchConfig cfg;
  cfg.kind = make_kind(o.kind, o.param);
  cfg.k = o.k;
  cfg.max_n = o.max_n;
  cfg.threads = o.threads;
  cfg.symmetry_break = !o.no_symmetry;
  cfg.parallel_width = o.width >= 0 ? o.width : (o.threads > 1 ? std::min(10, o.max_n - 1) : 0);
  cfg.node_budget = o.node_budget;
  cfg.time_budget = time_budget(o);
  cfg.validate();

  Outcome res;
  res.result["kind"] = cfg.kind.family_name();
  res.result["param"] = kind_param(cfg.kind);
  res.result["k"] = cfg.k;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const RamseyResult r = ramsey_number(cfg);
    res.result["value"] = r.value;
    res.result["witness"] = certificate_json(r.witness);
    res.result["nodes"] = r.nodes_explored;
    res.result["millis"] = std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count();
  } catch (const SearchIncomplete& e) {
    static const char* reasons[] = {"node_budget", "time_budget", "ceiling"};
    res.result["value"] = nullptr;
    res.result["witness"] = e.best() ? certificate_json(*e.best()) : json(nullptr);
    res.result["nodes"] = e.nodes();
    res.result["millis"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
    res.result["status"] = "incomplete";
    res.result["reason"] = reasons[static_cast<int>(e.reason())];
    res.result["lower_bound"] = e.lower_bound();
    res.code = ExitCode::budget;
  }
  return res;
}

// --- bound ----------------------------------------------------------------------

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw PreconditionError(std::string("missing --") + flag);
  return *v;
}

json bound_value_json(const BoundValue& b) {
  return std::visit(
      [&](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BigInt>) return big(v);
        else if constexpr (std::is_same_v<T, Rational>) return rational(v);
        else if constexpr (std::is_same_v<T, Approx>) return v.value;
        else return v.to_string();
      },
      b.value);
}

Outcome run_bound(const Options& o) {
  const std::string& name = o.bound_name;
  Outcome res;
  json& out = res.result;
  out["name"] = name;
  json args = json::object();
  json extras = json::object();
  auto arg = [&](const std::optional<int>& v, const char* flag) {
    const int x = need(v, flag);
    args[flag] = x;
    return x;
  };

  std::optional<BoundValue> value;
  std::string reason;
  try {
    if (name == "vdw-lower-primes") {
      const int p = arg(o.p, "p"), q = arg(o.q, "q");
      value = vdw_lower_primes(p, q);
    } else if (name == "vdw-lower-general") {
      const int k = arg(o.bk, "k"), r = arg(o.r, "r");
      value = vdw_lower_general(k, r);
    } else if (name == "gowers-upper") {
      const int k = arg(o.bk, "k"), r = arg(o.r, "r");
      const TowerExpr t = gowers_upper(k, r);
      value = BoundValue{t, Direction::upper, false, {"k >= 2", "r >= 2"}};
      if (const auto l = t.log10()) extras["log10"] = *l;
      for (int times = 1; times <= 6; ++times)
        if (const auto l = t.iterated_log2(times)) {
          extras["iterated_log2_times"] = times;
          extras["iterated_log2"] = *l;
          break;
        }
    } else if (name == "vdw-lower-probabilistic") {
      value = vdw_lower_probabilistic(arg(o.bk, "k"));
    } else if (name == "sp-upper") {
      const int m = arg(o.m, "m"), k = arg(o.bk, "k");
      value = sp_upper(m, k);
    } else if (name == "sp-lower-constructive") {
      const int m = arg(o.m, "m"), k = arg(o.bk, "k");
      value = sp_lower_constructive(m, k);
    } else if (name == "sp-lower-probabilistic") {
      const int m = arg(o.m, "m"), k = arg(o.bk, "k");
      value = sp_lower_probabilistic(m, k);
    } else if (name == "q-exact") {
      const int i = arg(o.i, "i"), m = arg(o.m, "m"), r = arg(o.r, "r");
      const QExact q = q_exact(i, m, r);
      extras["k"] = q.k;
      extras["diameter"] = q.diameter;
      value = q.value;
    } else if (name == "q1-vijay-beta") {
      args["tol"] = o.tol;
      const BetaRoot b = q1_vijay_beta(o.tol);
      extras["residual"] = b.residual;
      extras["roots"] = b.roots;
      extras["brackets"] = b.brackets;
      value = BoundValue{Approx{b.beta, o.tol}, Direction::lower, true, {}};
    } else if (name == "q1-new-base") {
      const NewBase nb = q1_new_base();
      extras["b"] = nb.b;
      value = BoundValue{Approx{nb.g, 1e-15}, Direction::lower, true, {}};
    } else if (name == "q-landman") {
      const LandmanBound l = q_landman_coeff(arg(o.bk, "k"));
      extras["diameter"] = l.diameter;
      extras["approx"] = *l.value.approx();
      value = l.value;
    } else {
      throw PreconditionError("unknown bound name '" + name + "'");
    }
  } catch (const NotApplicable& e) {
    reason = e.clause();
  }

  out["args"] = args;
  if (value) {
    out["value"] = bound_value_json(*value);
    out["direction"] = to_string(value->direction);
    out["asymptotic"] = value->asymptotic;
    out["applicable"] = true;
  } else {
    out["value"] = nullptr;
    out["direction"] = nullptr;
    out["asymptotic"] = nullptr;
    out["applicable"] = false;
    out["reason"] = "violates " + reason;
  }
  if (!extras.empty()) out["extras"] = extras;
  return res;
}

Outcome run_table(const Options& o, const std::vector<Family>& families, bool all_families) {
  std::vector<TableRow> rows;
  for (Family f : families) {
    TableSpec spec;
    spec.family = f;
    spec.ks = Range::parse(o.k_range);
    if (all_families)
      spec.params = Range::parse(f == Family::semi ? o.m_range : o.n_range);
    else
      spec.params = Range::parse(o.param_range);
    spec.exact = o.exact;
    spec.max_n = o.max_n;
    spec.threads = o.threads;
    spec.node_budget = o.node_budget;
    spec.time_budget = time_budget(o);
    auto part = build_table(spec);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  Outcome res;
  json table = json::array();
  for (const auto& r : rows)
    table.push_back({{"family", r.family},
                     {"param", r.param},
                     {"k", r.k},
                     {"constructive_lower", r.constructive_lower},
                     {"probabilistic_lower", r.probabilistic_lower},
                     {"exact", r.exact},
                     {"upper", r.upper},
                     {"beta_pow_k", r.beta_pow_k},
                     {"g_pow_k", r.g_pow_k},
                     {"status", r.status}});
  res.result["rows"] = table;
  res.csv = table_csv(rows);
  if (has_violation(rows)) res.code = ExitCode::property_failure;
  return res;
}

// --- count ----------------------------------------------------------------------

Outcome run_count_report(const Options& o) {
  const ProgressionKind kind = make_kind(o.kind, o.param);
  const CountReport rep = union_bound_check(o.count_n, kind, o.k);
  Outcome res;
  json& out = res.result;
  out["N"] = rep.N;
  out["k"] = rep.k;
  out["kind"] = kind.family_name();
  out["param"] = kind_param(kind);
  out["S"] = rep.S;
  json T = json::array();
  for (const auto& [pair, t] : rep.T) T.push_back({{"a", pair.first}, {"d", pair.second}, {"T", t}});
  out["T"] = T;
  out["sum_T"] = rep.sum_T;
  out["max_T"] = rep.max_T;
  out["argmax"] = rep.argmax ? json::array({rep.argmax->first, rep.argmax->second}) : json(nullptr);
  out["union_bound"] = rational(rep.union_bound);
  out["s_le_sum"] = rep.s_le_sum;
  out["sum_le_union"] = rep.sum_le_union;
  out["chain_holds"] = rep.chain_holds();
  out["argmax_claim_applies"] = rep.argmax_claim_applies;
  out["argmax_at_origin"] = rep.argmax_at_origin;
  if (rep.quasi_relation) {
    const auto& q = *rep.quasi_relation;
    out["quasi_relation"] = {{"s", q.s},
                             {"omega_divisible", q.omega_divisible},
                             {"psi", rational(q.psi)},
                             {"psi_bound", rational(q.psi_bound)},
                             {"psi_equal", q.psi_equal},
                             {"psi_within_bound", q.psi_within_bound},
                             {"pairs", q.pairs},
                             {"pairs_within_bound", q.pairs_within_bound}};
  }
  if (rep.semi_relation) {
    const auto& s = *rep.semi_relation;
    out["semi_relation"] = {{"pairs", s.pairs},
                            {"pairs_equal", s.pairs_equal},
                            {"pairs_within_bound", s.pairs_within_bound}};
  }
  if (!rep.chain_holds()) res.code = ExitCode::property_failure;
  return res;
}

Outcome run_count_lambda(const Options& o) {
  const LambdaVector v = lambda_vector(o.k);
  Outcome res;
  json& out = res.result;
  out["k"] = v.k;
  out["lambda0"] = rational(v.v0);
  out["lambda1"] = rational(v.v1);
  out["sum"] = rational(v.sum());
  if (v.k >= 2) {
    const Rational ratio = v.sum() / lambda_vector(v.k - 1).sum();
    out["ratio"] = ratio.convert_to<double>();
  }
  out["eigenvalue"] = dominant_eigenvalue();
  return res;
}

json closed_json(const ClosedSum& c) {
  return {{"sum", big(c.sum)},
          {"bound", rational(c.bound)},
          {"within", c.within()},
          {"equal", c.equal()}};
}

Outcome run_count_sums(const Options& o) {
  const int m = need(o.m, "m");
  const int r = need(o.r, "r");
  Outcome res;
  json& out = res.result;
  out["k"] = o.k;
  out["m"] = m;
  out["r"] = r;
  const ClosedSum multi = scopem_multinomial_sum(o.k, m, r);
  out["multinomial"] = closed_json(multi);
  bool ok = multi.within();
  if (m == 2) {
    const ClosedSum two = scope2_closed_sum(o.k, r);
    out["binomial"] = closed_json(two);
    out["binomial_matches_multinomial"] = two.sum == multi.sum;
    ok = ok && two.within() && two.sum == multi.sum;
  }
  if (!ok) res.code = ExitCode::property_failure;
  return res;
}

// --- mc -------------------------------------------------------------------------

Outcome run_mc(const Options& o) {
  const std::string& e = o.experiment;
  auto get = [](const std::optional<double>& v, double fallback) { return v ? *v : fallback; };
  auto as_int = [](double x, const char* flag) {
    if (x != std::floor(x)) throw PreconditionError(std::string("--") + flag + " must be an integer");
    return static_cast<int>(x);
  };
  ExperimentReport rep;
  const std::uint64_t s = o.samples;
  if (e == "chebyshev-threepoint") {
    rep = run_chebyshev_threepoint(get(o.mc_p, 0.1), get(o.mc_a, 5.0), s, o.seed, o.threads);
  } else if (e == "chernoff-coinflip") {
    rep = run_chernoff_coinflip(as_int(get(o.mc_n, 1000), "n"), get(o.mc_lambda, 70.0), s, o.seed,
                                o.threads);
  } else if (e == "azuma-chromatic") {
    rep = run_azuma_chromatic(as_int(get(o.mc_n, 15), "n"), get(o.mc_p, 0.5),
                              get(o.mc_lambda, 2.0), s, o.seed, o.threads);
  } else if (e == "janson-triangle") {
    rep = run_janson_triangle(as_int(get(o.mc_n, 60), "n"), get(o.mc_c, 1.0), s, o.seed, o.threads);
  } else if (e == "janson-threepath") {
    rep = run_janson_threepath(as_int(get(o.mc_n, 100), "n"), get(o.mc_c, 3.0), s, o.seed,
                               o.threads, get(o.mc_floor, 0.9), get(o.mc_p, -1.0));
  } else if (e == "talagrand-lis") {
    rep = run_talagrand_lis(as_int(get(o.mc_n, 400), "n"), get(o.mc_t, 3.0), s, o.seed, o.threads);
  } else if (e == "clique-survey") {
    rep = run_clique_survey(as_int(get(o.mc_n, 30), "n"), s, o.seed, o.threads, get(o.mc_p, 0.5),
                            get(o.mc_max_fraction, 0.01));
  } else if (e == "good-fraction") {
    const ProgressionKind kind =
        make_kind(o.kind, o.param ? o.param : std::optional<int>(2));
    rep = run_good_fraction(as_int(get(o.mc_n, 8), "n"), kind, o.mc_k.value_or(4), s, o.seed,
                            o.threads);
  } else {
    throw PreconditionError("unknown experiment '" + e + "'");
  }

  Outcome res;
  json& out = res.result;
  out["name"] = rep.name;
  out["params"] = named(rep.params);
  out["seed"] = o.seed;
  out["samples"] = rep.samples;
  out["estimate"] = rep.estimate;
  out["std_error"] = rep.std_error;
  out["bound"] = rep.bound_value;
  out["passed"] = rep.passed;
  out["extras"] = named(rep.extras);

  std::string header, row;
  for (const auto& [k, v] : rep.params) {
    header += k + ",";
    row += number(v).dump() + ",";
  }
  header += "estimate,std_error,bound,passed\n";
  row += json(rep.estimate).dump() + "," + json(rep.std_error).dump() + "," +
         json(rep.bound_value).dump() + "," + (rep.passed ? "true" : "false") + "\n";
  res.csv = header + row;
  if (!rep.passed) res.code = ExitCode::property_failure;
  return res;
}

// --- verify -----------------------------------------------------------------------

Outcome run_verify(const Options& o) {
  const ProgressionKind kind = make_kind(o.kind, o.param);
  Outcome res;
  json& out = res.result;
  out["kind"] = kind.family_name();
  out["param"] = kind_param(kind);
  out["k"] = o.k;
  if (!o.terms.empty()) {
    const auto terms = parse_terms(o.terms);
    const auto ds = feasible_differences(terms, kind);
    out["terms"] = terms;
    out["is_progression"] = !ds.empty();
    out["differences"] = ds;
    if (ds.empty()) res.code = ExitCode::property_failure;
    return res;
  }
  if (o.coloring.empty()) throw PreconditionError("one of --coloring or --terms is required");
  const Coloring c = Coloring::parse(o.coloring);
  Certificate cert{kind, o.k, c.size(), c};
  const bool good = verify_certificate(cert);
  out["n"] = c.size();
  out["coloring"] = c.to_string();
  out["good"] = good;
  if (!good) {
    const auto p = find_monochromatic(c, kind, o.k);
    out["progression"] = p ? json(p->terms) : json(nullptr);
    res.code = ExitCode::property_failure;
  }
  return res;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.threads = default_threads();

  CLI::App app{"Ramsey-type numbers for progressions: exact search, bounds, counting and "
               "Monte-Carlo checks",
               "ramsey"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  auto* fmt_json = app.add_flag("--json", o.json_out, "JSON output");
  app.add_flag("--csv", o.csv_out, "CSV output")->excludes(fmt_json);
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--threads", o.threads, std::string("worker threads (default from ") +
                                             kThreadsEnv + ", else 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--node-budget", o.node_budget, "search node budget");
  app.add_option("--time-budget", o.time_budget_ms, "wall-clock budget in ms, 0 = none")
      ->check(CLI::NonNegativeNumber);

  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "ap | semi | quasi")->check(CLI::IsMember(kKinds));
    sub->add_option("--param", o.param, "scope m (semi) or diameter n (quasi)");
  };

  auto* search = app.add_subcommand("search", "least N forcing a monochromatic progression");
  add_kind(search);
  search->add_option("--k", o.k, "progression length");
  search->add_option("--max-n", o.max_n, "search ceiling");
  search->add_option("--width", o.width, "prefix length for the parallel split (-1 = auto)");
  search->add_flag("--no-symmetry", o.no_symmetry, "do not pin the first color");

  auto* bound = app.add_subcommand("bound", "evaluate a closed-form bound");
  bound->add_option("--name", o.bound_name, "bound identifier");
  bound->add_option("--p", o.p);
  bound->add_option("--q", o.q);
  bound->add_option("--k", o.bk);
  bound->add_option("--r", o.r);
  bound->add_option("--m", o.m);
  bound->add_option("--i", o.i);
  bound->add_option("--tol", o.tol, "root tolerance for q1-vijay-beta");
  auto* bound_table = bound->add_subcommand("table", "CSV of all applicable bounds per family");
  bound_table->add_option("--k-range", o.k_range);
  bound_table->add_option("--m-range", o.m_range, "semi scopes");
  bound_table->add_option("--n-range", o.n_range, "quasi diameters");
  bound_table->add_flag("--exact", o.exact, "also run the exact search per row");
  bound_table->add_option("--max-n", o.max_n);

  auto* count = app.add_subcommand("count", "exact counting checks");
  count->require_subcommand(1);
  auto* report = count->add_subcommand("report", "S, T and the union-bound chain");
  report->add_option("--n", o.count_n, "interval length N")->required();
  add_kind(report);
  report->add_option("--k", o.k);
  auto* lambda = count->add_subcommand("lambda", "transfer-matrix vector");
  lambda->add_option("--k", o.k)->required();
  auto* sums = count->add_subcommand("sums", "closed multinomial sums");
  sums->add_option("--k", o.k)->required();
  sums->add_option("--m", o.m)->required();
  sums->add_option("--r", o.r)->required();

  auto* mc = app.add_subcommand("mc", "Monte-Carlo experiment");
  mc->add_option("experiment", o.experiment)->required()->check(CLI::IsMember(experiment_names()));
  mc->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  mc->add_option("--n", o.mc_n, "size parameter (vertices, flips, N)");
  mc->add_option("--p", o.mc_p, "probability");
  mc->add_option("--a", o.mc_a);
  mc->add_option("--lambda", o.mc_lambda);
  mc->add_option("--c", o.mc_c);
  mc->add_option("--t", o.mc_t);
  mc->add_option("--floor", o.mc_floor, "janson-threepath pass floor");
  mc->add_option("--max-fraction", o.mc_max_fraction, "clique-survey pass threshold");
  add_kind(mc);
  mc->add_option("--k", o.mc_k);

  auto* verify = app.add_subcommand("verify", "check a coloring or a progression");
  add_kind(verify);
  verify->add_option("--k", o.k);
  verify->add_option("--coloring", o.coloring, "string over {0,1}, position 1 first");
  verify->add_option("--terms", o.terms, "comma-separated terms");

  auto* table = app.add_subcommand("table", "bounds and exact values for one family");
  table->add_option("--family", o.family)->check(CLI::IsMember(kKinds));
  table->add_option("--param-range", o.param_range);
  table->add_option("--k-range", o.k_range);
  table->add_flag("--exact", o.exact, "run the exact search per row");
  table->add_option("--max-n", o.max_n);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* leaf = &app;
    while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands().front();
    out << leaf->help();
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    const CLI::App* leaf = &app;
    while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands().front();
    err << "error: " << e.what() << "\n\n" << leaf->help();
    return ExitCode::usage;
  }

  std::vector<const CLI::App*> chain{&app};
  while (!chain.back()->get_subcommands().empty())
    chain.push_back(chain.back()->get_subcommands().front());
  const std::string format = o.json_out ? "json" : (o.csv_out ? "csv" : "human");

  try {
    Outcome res;
    if (*search) {
      res = run_search(o);
    } else if (*bound) {
      if (*bound_table) {
        res = run_table(o, {Family::arithmetic, Family::semi, Family::quasi}, true);
      } else {
        if (o.bound_name.empty()) throw PreconditionError("missing --name");
        res = run_bound(o);
      }
    } else if (*count) {
      if (*report) res = run_count_report(o);
      else if (*lambda) res = run_count_lambda(o);
      else res = run_count_sums(o);
    } else if (*mc) {
      res = run_mc(o);
    } else if (*verify) {
      res = run_verify(o);
    } else {
      Family f = Family::semi;
      if (o.family == "ap" || o.family == "arithmetic") f = Family::arithmetic;
      if (o.family == "quasi") f = Family::quasi;
      res = run_table(o, {f}, false);
    }
    json doc = json::object();
    doc["config"] = echo_config(chain, format);
    for (auto& [key, value] : res.result.items()) doc[key] = value;
    render(doc, res.csv, format, out);
    return res.code;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << '\n';
    return ExitCode::budget;
  } catch (const std::invalid_argument& e) {
    // PreconditionError derives from std::invalid_argument.
    err << "error: " << e.what() << "\n\n" << chain.back()->help();
    return ExitCode::usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  }
}

}  // namespace ramsey::cli
