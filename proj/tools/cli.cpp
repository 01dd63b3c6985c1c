#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include <ffmoment/ensemble.hpp>
#include <ffmoment/exact.hpp>
#include <ffmoment/field.hpp>
#include <ffmoment/lfunc.hpp>
#include <ffmoment/moments.hpp>
#include <ffmoment/quad_char.hpp>
#include <ffmoment/report.hpp>

namespace ffm::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint32_t q = 3;
  std::string g = "1";
  unsigned mu = 0;
  unsigned nu = 0;
  unsigned k = 0;
  std::string l = "1";
  unsigned max_order = 20;
  int max_g = 2;
  int max_deg = 0;
  std::string format = "json";
  std::string cache_dir;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  bool allow_large = false;
  bool verbose = false;
  bool inject_corruption = false;
  std::string out;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  sub->add_option("--cache-dir", o.cache_dir, "Irreducible cache directory")->envname("FFMOMENT_CACHE");
  sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
  sub->add_option("--out", o.out, "Write the report to this file");
  sub->add_flag("--verbose", o.verbose, "Print cache counters to stderr");
}

void add_field(CLI::App* sub, Options& o) {
  sub->add_option("--q", o.q, "Odd prime field size");
  sub->add_flag("--allow-large", o.allow_large, "Allow ensembles beyond the default size guard");
}

void check_q(std::uint32_t q) {
  if (q % 2 == 0 || !is_prime(q)) throw UsageError("--q must be an odd prime");
}

void check_size(const Options& o, int g) {
  if (g < 1) throw UsageError("--g must be at least 1");
  if (!o.allow_large && !within_default_range(o.q, g))
    throw UsageError("q^(2g+1) exceeds 19683 for g=" + std::to_string(g) + "; pass --allow-large to proceed");
}

MonicPoly twist(const Options& o, int g) {
  MonicPoly l = MonicPoly::one(o.q);
  try {
    l = parse_monic(o.q, o.l);
  } catch (const std::exception& e) {
    throw UsageError("invalid twist '" + o.l + "': " + e.what());
  }
  if (l.degree() > 2 * g) throw UsageError("twist degree exceeds 2g");
  return l;
}

std::string join_lines(const std::vector<std::string>& rows) {
  std::string s;
  for (const auto& r : rows) s += r + "\n";
  return s;
}

std::string render_moments(const std::vector<MomentReport>& reports, const std::string& format) {
  if (format == "json") {
    if (reports.size() == 1) return to_json(reports.front()).dump(2) + "\n";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  if (format == "csv") {
    std::vector<std::string> rows{moment_csv_header()};
    for (const auto& r : reports) rows.push_back(moment_csv_row(r));
    return join_lines(rows);
  }
  std::string s;
  for (const auto& r : reports) s += moment_table(r);
  return s;
}

std::string render_grid(const CoeffGridReport& r, const std::string& format) {
  if (format == "json") return to_json(r).dump(2) + "\n";
  if (format == "csv") return join_lines(csv_rows(r));
  std::ostringstream os;
  os << "max_order=" << r.max_order << " epsilon=" << to_string(r.epsilon) << " mismatches=" << r.mismatches()
     << "\n";
  for (const auto& p : r.pairs)
    os << "  (" << p.n1 << "," << p.n2 << ")  c_tilde=" << to_string(p.c_tilde) << "  b_sp=" << to_string(p.b_sp)
       << "  " << (p.match ? "match" : "MISMATCH") << "\n";
  return os.str();
}

std::string render_checks(const std::vector<CheckResult>& checks, std::uint32_t q, int max_g,
                          const std::string& format) {
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks)
      arr.push_back({{"name", c.name}, {"scope", c.scope}, {"cases", c.cases}, {"failures", c.failures},
                     {"passed", c.passed()}});
    nlohmann::ordered_json j{{"q", q}, {"max_g", max_g}, {"checks", std::move(arr)}, {"passed", ok}};
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::vector<std::string> rows{"name,scope,cases,failures,passed"};
    for (const auto& c : checks)
      rows.push_back(c.name + "," + csv_field(c.scope) + "," + std::to_string(c.cases) + "," +
                     std::to_string(c.failures) + "," + (c.passed() ? "true" : "false"));
    return join_lines(rows);
  }
  std::ostringstream os;
  for (const auto& c : checks)
    os << (c.passed() ? "PASS " : "FAIL ") << c.name << " [" << c.scope << "] " << c.cases << " cases, "
       << c.failures << " failures\n";
  os << (ok ? "all exact checks passed\n" : "exact checks FAILED\n");
  return os.str();
}

std::string render_weil(const std::vector<WeilReport>& reports, const std::string& format) {
  if (format == "json") {
    if (reports.size() == 1) return to_json(reports.front()).dump(2) + "\n";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  if (format == "csv") {
    std::vector<std::string> rows{weil_csv_header()};
    for (const auto& r : reports) rows.push_back(weil_csv_row(r));
    return join_lines(rows);
  }
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "q=" << r.q << " g=" << r.g << " max_deg=" << r.max_deg << " scanned=" << r.scanned << "\n"
       << "  max W = " << to_string(r.max_value) << "  (" << to_decimal(r.max_value) << ") at f = " << r.argmax
       << "\n";
    for (std::size_t d = 0; d < r.max_by_degree.size(); ++d)
      os << "  degree " << d + 1 << ": " << to_string(r.max_by_degree[d]) << "\n";
  }
  return os.str();
}

std::string render_lpolys(const PrimeEnsemble& ens, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t p = 0; p < ens.size(); ++p)
      arr.push_back({{"P", to_canonical(ens.primes()[p])}, {"c", ens.l_polynomials()[p].coeffs}});
    nlohmann::ordered_json j{{"q", ens.q()}, {"g", ens.g()}, {"records", std::move(arr)}};
    return j.dump(2) + "\n";
  }
  std::vector<std::string> rows;
  if (format == "csv") {
    std::string header = "P";
    for (int n = 0; n <= 2 * ens.g(); ++n) header += ",c" + std::to_string(n);
    rows.push_back(header);
    for (std::size_t p = 0; p < ens.size(); ++p) {
      std::string row = csv_field(to_canonical(ens.primes()[p]));
      for (auto c : ens.l_polynomials()[p].coeffs) row += "," + std::to_string(c);
      rows.push_back(row);
    }
  } else {
    for (std::size_t p = 0; p < ens.size(); ++p)
      rows.push_back(format_lpoly_record(ens.primes()[p], ens.l_polynomials()[p]));
  }
  return join_lines(rows);
}

void emit(const Options& o, const std::string& payload, std::ostream& out) {
  if (o.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot open --out file " + o.out);
  f << payload;
}

template <class Fn>
void count_case(CheckResult& r, Fn&& ok) {
  ++r.cases;
  if (!ok()) ++r.failures;
}

}  // namespace

GRange parse_g_range(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad g range '" + text + "'");
    return std::stoi(s);
  };
  GRange r;
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, colon));
    r.hi = parse_int(text.substr(colon + 1));
  }
  if (r.lo < 1 || r.hi < r.lo) throw std::invalid_argument("bad g range '" + text + "'");
  return r;
}

bool within_default_range(std::uint32_t q, int g) {
  std::uint64_t v = 1;
  for (int i = 0; i < 2 * g + 1; ++i) {
    v *= q;
    if (v > 19683) return false;
  }
  return true;
}

std::vector<CheckResult> run_selftest(std::uint32_t q, int max_g, unsigned workers, IrreducibleCatalog& catalog,
                                      bool corrupt_coefficients) {
  std::vector<CheckResult> out;
  const std::string qs = "q=" + std::to_string(q);
  for (int g = 1; g <= max_g; ++g) {
    const PrimeEnsemble ens(q, g, catalog, workers);
    const std::string scope = qs + " g=" + std::to_string(g);
    const auto& L = ens.l_polynomials();

    CheckResult fe{"check_functional_equation", scope};
    for (std::size_t p = 0; p < L.size(); ++p) {
      LPolynomial copy = L[p];
      if (corrupt_coefficients && p == 0) copy.coeffs.back() += 1;
      count_case(fe, [&] { return check_functional_equation(copy); });
    }
    out.push_back(fe);

    CheckResult md{"derivative_method_agreement", scope + " k<=6"};
    for (const auto& lp : L)
      for (int k = 0; k <= 6; ++k)
        count_case(md, [&] {
          return central_derivative(lp, k, DerivativeMethod::direct) ==
                 central_derivative(lp, k, DerivativeMethod::folded);
        });
    out.push_back(md);

    CheckResult cs{"char_sum_strategies", scope};
    for (std::size_t p = 0; p < L.size(); ++p)
      count_case(cs, [&] {
        return l_polynomial(ens.primes()[p], CharSumStrategy::direct, catalog) == L[p];
      });
    out.push_back(cs);

    CheckResult rec{"reciprocity_vs_euler", scope + " d(f)<=3"};
    for (int d = 0; d <= 3; ++d)
      for (const MonicPoly& f : enumerate_monic(q, d))
        for (const MonicPoly& P : ens.primes())
          count_case(rec, [&] { return quadratic_symbol(f, P) == quadratic_symbol_euler(f, P); });
    out.push_back(rec);

    CheckResult afe{"approximate_functional_equation", scope};
    for (const MonicPoly& P : ens.primes()) count_case(afe, [&] { return afe_check(P, g, catalog); });
    out.push_back(afe);

    CheckResult comb{"combination_identity", scope + " mu,nu<=2"};
    for (unsigned mu = 0; mu <= 2; ++mu)
      for (unsigned nu = 0; nu <= 2; ++nu) count_case(comb, [&] { return combination_identity(ens, mu, nu).equal; });
    out.push_back(comb);

    CheckResult sq{"square_part_identity", scope + " m<=2"};
    for (const char* ls : {"1", "10", "11", "100", "121"}) {
      const MonicPoly l = parse_monic(q, ls);
      if (l.degree() > 2 * g) continue;
      for (int h : {g, g - 1})
        for (unsigned m = 0; m <= 2; ++m) count_case(sq, [&] { return square_part_identity(ens, h, m, l).equal; });
    }
    out.push_back(sq);

    CheckResult th{"t_hat_square_part", scope + " m,n<=2"};
    for (int h : {2 * g, 2 * g - 1})
      for (unsigned m = 0; m <= 2; ++m)
        for (unsigned n = 0; n <= 2; ++n)
          count_case(th, [&] {
            const QSqrtValue part = t_hat_square_part(ens, h, m, n);
            return part == t_hat_square_terms(ens, h, m, n) &&
                   part == QSqrtValue(q, t_hat_square_part_closed(q, h, m, n));
          });
    out.push_back(th);
  }

  CheckResult diag{"diagonal_count", qs + " k<=j<=4"};
  for (int j = 0; j <= 4; ++j)
    for (int k = 0; k <= j; ++k) count_case(diag, [&] { return diagonal_count(q, j, k, catalog).equal(); });
  out.push_back(diag);

  CheckResult hyp{"hyperbola_identity", qs + " j<=4 m,n<=2"};
  for (int j = 0; j <= 4; ++j)
    for (unsigned m = 0; m <= 2; ++m)
      for (unsigned n = 0; n <= 2; ++n) count_case(hyp, [&] { return hyperbola_identity(q, j, m, n, catalog).equal; });
  out.push_back(hyp);

  CheckResult comp{"square_completion_count", qs + " n<=5"};
  for (const char* ls : {"1", "10", "11", "100", "101"})
    for (int n = 0; n <= 5; ++n) {
      const MonicPoly l = parse_monic(q, ls);
      count_case(comp, [&] { return square_completion_count(q, n, l) == square_completion_count_brute(q, n, l); });
    }
  out.push_back(comp);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact moment computations for quadratic Dirichlet L-functions over F_q[t]", "ffmoment"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify-identity", "Compare c~(n1,n2) with b_sp(n1,n2) on a grid");
  verify->add_option("--max-order", o.max_order, "Largest order n1, n2");
  add_common(verify, o);

  auto* selftest = app.add_subcommand("selftest", "Run the exact identity suite");
  add_field(selftest, o);
  selftest->add_option("--max-g", o.max_g, "Largest genus")->check(CLI::PositiveNumber);
  selftest->add_flag("--inject-corruption", o.inject_corruption, "Perturb one L-polynomial (test mode)");
  add_common(selftest, o);

  auto* moment = app.add_subcommand("moment", "Mixed moment of two central derivatives");
  add_field(moment, o);
  moment->add_option("--g", o.g, "Genus")->required();
  moment->add_option("--mu", o.mu, "First derivative order");
  moment->add_option("--nu", o.nu, "Second derivative order");
  add_common(moment, o);

  auto* twisted = app.add_subcommand("twisted", "Twisted first moment of a central derivative");
  add_field(twisted, o);
  twisted->add_option("--g", o.g, "Genus")->required();
  twisted->add_option("--k", o.k, "Derivative order");
  twisted->add_option("--l", o.l, "Twist polynomial (canonical string)");
  add_common(twisted, o);

  auto* sweep = app.add_subcommand("sweep", "One moment report per genus in a range");
  add_field(sweep, o);
  sweep->add_option("--g", o.g, "Genus range a:b")->required();
  sweep->add_option("--mu", o.mu, "First derivative order (mixed moment)");
  sweep->add_option("--nu", o.nu, "Second derivative order (mixed moment)");
  auto* sweep_k = sweep->add_option("--k", o.k, "Derivative order (twisted moment)");
  auto* sweep_l = sweep->add_option("--l", o.l, "Twist polynomial (twisted moment)");
  add_common(sweep, o);

  auto* weil = app.add_subcommand("weil", "Normalized prime character sums over non-square f");
  add_field(weil, o);
  weil->add_option("--g", o.g, "Genus or range a:b")->required();
  weil->add_option("--max-deg", o.max_deg, "Largest degree of f (default 2g)");
  add_common(weil, o);

  auto* lpoly = app.add_subcommand("lpoly", "L-polynomials of every prime of degree 2g+1");
  add_field(lpoly, o);
  lpoly->add_option("--g", o.g, "Genus")->required();
  add_common(lpoly, o);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    std::optional<std::filesystem::path> dir;
    if (!o.cache_dir.empty()) dir = o.cache_dir;
    IrreducibleCatalog catalog(dir);
    int status = kOk;

    if (verify->parsed()) {
      const CoeffGridReport r = verify_identity(o.max_order, o.workers);
      emit(o, render_grid(r, o.format), out);
      if (!r.resolved()) status = kVerificationFailed;
    } else if (selftest->parsed()) {
      check_q(o.q);
      check_size(o, o.max_g);
      const auto checks = run_selftest(o.q, o.max_g, o.workers, catalog, o.inject_corruption);
      emit(o, render_checks(checks, o.q, o.max_g, o.format), out);
      for (const auto& c : checks)
        if (!c.passed()) {
          err << "failing identity: " << c.name << " [" << c.scope << "]\n";
          status = kVerificationFailed;
        }
    } else if (moment->parsed() || twisted->parsed()) {
      check_q(o.q);
      const GRange gr = parse_g_range(o.g);
      if (gr.lo != gr.hi) throw UsageError("--g takes a single genus here; use sweep for ranges");
      check_size(o, gr.lo);
      const PrimeEnsemble ens(o.q, gr.lo, catalog, o.workers);
      const MomentReport r =
          moment->parsed() ? mixed_moment(ens, o.mu, o.nu) : twisted_first_moment(ens, o.k, twist(o, gr.lo));
      emit(o, render_moments({r}, o.format), out);
    } else if (sweep->parsed()) {
      check_q(o.q);
      const GRange gr = parse_g_range(o.g);
      const bool is_twisted = sweep_k->count() > 0 || sweep_l->count() > 0;
      for (int g = gr.lo; g <= gr.hi; ++g) check_size(o, g);
      std::vector<MomentReport> reports;
      for (int g = gr.lo; g <= gr.hi; ++g) {
        const PrimeEnsemble ens(o.q, g, catalog, o.workers);
        reports.push_back(is_twisted ? twisted_first_moment(ens, o.k, twist(o, g)) : mixed_moment(ens, o.mu, o.nu));
      }
      emit(o, render_moments(reports, o.format), out);
    } else if (weil->parsed()) {
      check_q(o.q);
      const GRange gr = parse_g_range(o.g);
      for (int g = gr.lo; g <= gr.hi; ++g) {
        check_size(o, g);
        if (o.max_deg < 0 || o.max_deg > 2 * g) throw UsageError("--max-deg must lie in 1..2g");
      }
      std::vector<WeilReport> reports;
      for (int g = gr.lo; g <= gr.hi; ++g) {
        const PrimeEnsemble ens(o.q, g, catalog, o.workers);
        reports.push_back(weil_scan(ens, o.max_deg == 0 ? 2 * g : o.max_deg));
      }
      emit(o, render_weil(reports, o.format), out);
    } else if (lpoly->parsed()) {
      check_q(o.q);
      const GRange gr = parse_g_range(o.g);
      if (gr.lo != gr.hi) throw UsageError("--g takes a single genus here");
      check_size(o, gr.lo);
      const PrimeEnsemble ens(o.q, gr.lo, catalog, o.workers);
      emit(o, render_lpolys(ens, o.format), out);
    }

    if (o.verbose) {
      const auto c = catalog.counters();
      err << "cache memory_hits=" << c.memory_hits << " disk_hits=" << c.disk_hits << " computed=" << c.computed
          << "\n";
    }
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace ffm::cli
