#include "ffmoment/moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "ffmoment/exact.hpp"
#include "ffmoment/lfunc.hpp"
#include "ffmoment/parallel.hpp"
#include "ffmoment/quad_char.hpp"

namespace ffm {

namespace {

std::vector<std::uint32_t> profile_from_factors(const std::vector<std::pair<int, int>>& degree_mult) {
  std::vector<std::uint32_t> prof{1};
  for (const auto& [d, e] : degree_mult) {
    std::vector<std::uint32_t> next(prof.size() + static_cast<std::size_t>(d * e), 0);
    for (std::size_t k = 0; k < prof.size(); ++k)
      for (int j = 0; j <= e; ++j) next[k + static_cast<std::size_t>(j * d)] += prof[k];
    prof = std::move(next);
  }
  return prof;
}

// Divisor profile of f^2.
std::vector<std::uint32_t> square_profile(const MonicPoly& f, IrreducibleCatalog& catalog) {
  std::vector<std::pair<int, int>> dm;
  for (const auto& [Q, e] : factorize(f, catalog)) dm.emplace_back(Q.degree(), 2 * e);
  return profile_from_factors(dm);
}

BigInt ipow(long base, unsigned e) { return pow(BigInt(base), e); }

QSqrtValue zero(std::uint32_t q) { return QSqrtValue(q); }

// sum_d q^{-d/2} by_degree[d] / denom
QSqrtValue assemble(std::uint32_t q, const std::vector<BigInt>& by_degree, const BigInt& denom) {
  QSqrtValue acc(q);
  for (std::size_t d = 0; d < by_degree.size(); ++d) {
    if (by_degree[d] == 0) continue;
    acc += QSqrtValue::q_power_neg_half(q, static_cast<long>(d)) * BigRational(by_degree[d]);
  }
  return acc / BigRational(denom);
}

void check_field(const PrimeEnsemble& ens, const MonicPoly& l, const char* who) {
  if (l.modulus() != ens.q()) throw std::invalid_argument(std::string(who) + ": field mismatch");
  if (l.degree() > 2 * ens.g()) throw std::invalid_argument(std::string(who) + ": twist degree exceeds 2g");
}

void check_s_range(const PrimeEnsemble& ens, int h, const char* who) {
  if (h != ens.g() && h != ens.g() - 1) throw std::invalid_argument(std::string(who) + ": h must be g or g-1");
}

void check_t_range(const PrimeEnsemble& ens, int h, const char* who) {
  if (h != 2 * ens.g() && h != 2 * ens.g() - 1)
    throw std::invalid_argument(std::string(who) + ": h must be 2g or 2g-1");
}

SHatParts s_hat_from_totals(const PrimeEnsemble& ens, const std::vector<std::int64_t>& totals, int h, unsigned m,
                            const MonicPoly& l) {
  const MonicIndex& idx = ens.index();
  std::vector<BigInt> sq(h + 1, 0), rest(h + 1, 0);
  for (std::size_t f = 0; f < idx.offset(h + 1); ++f) {
    if (totals[f] == 0) continue;
    const int d = idx.degree_of(f);
    const BigInt term = ipow(d, m) * BigInt(static_cast<long>(totals[f]));
    if (is_square(poly_mul(idx.at(f), l)))
      sq[d] += term;
    else
      rest[d] += term;
  }
  const BigInt denom(static_cast<unsigned long>(ens.size()));
  return {assemble(ens.q(), sq, denom), assemble(ens.q(), rest, denom)};
}

// j^{m+n} N(j,j) + sum_{k<j} (k^m (2j-k)^n + k^n (2j-k)^m) N(j,k)
BigInt hyperbola_rhs(std::uint32_t q, int j, unsigned m, unsigned n) {
  BigInt acc = ipow(j, m + n) * diagonal_count_closed(q, j, j);
  for (int k = 0; k < j; ++k)
    acc += (ipow(k, m) * ipow(2 * j - k, n) + ipow(k, n) * ipow(2 * j - k, m)) * diagonal_count_closed(q, j, k);
  return acc;
}

// J_i(n) = sum_{m=1}^n m^i, zero for n < 0
BigRational power_sum_from_one(unsigned i, long n) {
  return n < 0 ? BigRational(0) : faulhaber(i, static_cast<unsigned long>(n));
}

long floor_half(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string ratio_string(const QSqrtValue& num, const QSqrtValue& den) {
  const double d = den.to_double();
  if (d == 0.0) return "undefined";
  return decimal(num.to_double() / d);
}

}  // namespace

std::vector<std::uint32_t> divisor_profile(const MonicPoly& f, IrreducibleCatalog& catalog) {
  std::vector<std::pair<int, int>> dm;
  for (const auto& [Q, e] : factorize(f, catalog)) dm.emplace_back(Q.degree(), e);
  return profile_from_factors(dm);
}

BigInt divisor_weight_from_profile(std::span<const std::uint32_t> profile, unsigned m, unsigned n) {
  if (profile.empty()) throw std::invalid_argument("divisor_weight: empty profile");
  const long d = static_cast<long>(profile.size()) - 1;
  BigInt acc = 0;
  for (long k = 0; k <= d; ++k)
    if (profile[k]) acc += BigInt(static_cast<unsigned long>(profile[k])) * ipow(k, m) * ipow(d - k, n);
  return acc;
}

BigInt divisor_weight(const MonicPoly& f, unsigned m, unsigned n, IrreducibleCatalog& catalog) {
  return divisor_weight_from_profile(divisor_profile(f, catalog), m, n);
}

SHatParts s_hat_parts(const PrimeEnsemble& ens, int h, unsigned m, const MonicPoly& l) {
  check_s_range(ens, h, "s_hat");
  check_field(ens, l, "s_hat");
  return s_hat_from_totals(ens, ens.twisted_character_totals(l), h, m, l);
}

QSqrtValue s_hat(const PrimeEnsemble& ens, int h, unsigned m, const MonicPoly& l) {
  const SHatParts p = s_hat_parts(ens, h, m, l);
  return p.square + p.non_square;
}

QSqrtValue square_part_closed(std::uint32_t q, int h, unsigned m, const MonicPoly& l) {
  if (l.modulus() != q) throw std::invalid_argument("square_part_closed: field mismatch");
  const int d1 = squarefree_decompose(l).squarefree.degree();
  BigInt acc = 0;
  for (int n = 0; d1 + 2 * n <= h; ++n) acc += ipow(d1 + 2 * n, m);
  return QSqrtValue::q_power_neg_half(q, d1) * BigRational(acc);
}

ExactIdentity square_part_identity(const PrimeEnsemble& ens, int h, unsigned m, const MonicPoly& l) {
  ExactIdentity out{s_hat_parts(ens, h, m, l).square, square_part_closed(ens.q(), h, m, l), false};
  out.equal = out.lhs == out.rhs;
  return out;
}

BigInt square_completion_count(std::uint32_t q, int n, const MonicPoly& l) {
  if (l.modulus() != q) throw std::invalid_argument("square_completion_count: field mismatch");
  if (n < 0) return 0;
  const int d1 = squarefree_decompose(l).squarefree.degree();
  if (n < d1 || (n - d1) % 2) return 0;
  return ipow(q, static_cast<unsigned>((n - d1) / 2));
}

BigInt square_completion_count_brute(std::uint32_t q, int n, const MonicPoly& l) {
  if (l.modulus() != q) throw std::invalid_argument("square_completion_count_brute: field mismatch");
  if (n < 0) return 0;
  std::uint64_t count = 0;
  for (const MonicPoly& f : enumerate_monic(q, n)) count += is_square(poly_mul(f, l)) ? 1 : 0;
  return BigInt(static_cast<unsigned long>(count));
}

QSqrtValue t_hat(const PrimeEnsemble& ens, int h, unsigned m, unsigned n) {
  check_t_range(ens, h, "t_hat");
  const MonicIndex& idx = ens.index();
  const auto& totals = ens.character_totals();
  std::vector<BigInt> by_degree(h + 1, 0);
  for (std::size_t f = 0; f < idx.offset(h + 1); ++f) {
    if (totals[f] == 0) continue;
    by_degree[idx.degree_of(f)] +=
        divisor_weight_from_profile(ens.divisor_profile(f), m, n) * BigInt(static_cast<long>(totals[f]));
  }
  return assemble(ens.q(), by_degree, BigInt(static_cast<unsigned long>(ens.size())));
}

QSqrtValue t_hat_square_terms(const PrimeEnsemble& ens, int h, unsigned m, unsigned n) {
  check_t_range(ens, h, "t_hat_square_terms");
  const MonicIndex& idx = ens.index();
  const auto& totals = ens.character_totals();
  std::vector<BigInt> by_degree(h + 1, 0);
  for (std::size_t f1 = 0; f1 < idx.offset(h / 2 + 1); ++f1) {
    const MonicPoly f1p = idx.at(f1);
    const std::size_t f = idx.index_of(poly_mul(f1p, f1p));
    by_degree[2 * f1p.degree()] +=
        divisor_weight_from_profile(ens.divisor_profile(f), m, n) * BigInt(static_cast<long>(totals[f]));
  }
  return assemble(ens.q(), by_degree, BigInt(static_cast<unsigned long>(ens.size())));
}

QSqrtValue t_hat_square_part(const PrimeEnsemble& ens, int h, unsigned m, unsigned n) {
  check_t_range(ens, h, "t_hat_square_part");
  const MonicIndex& idx = ens.index();
  std::vector<BigInt> by_degree(h + 1, 0);
  for (std::size_t f1 = 0; f1 < idx.offset(h / 2 + 1); ++f1) {
    const MonicPoly f1p = idx.at(f1);
    by_degree[2 * f1p.degree()] +=
        divisor_weight_from_profile(ens.divisor_profile(idx.index_of(poly_mul(f1p, f1p))), m, n);
  }
  return assemble(ens.q(), by_degree, 1);
}

BigRational t_hat_square_part_closed(std::uint32_t q, int h, unsigned m, unsigned n) {
  BigRational acc = 0;
  for (int j = 0; 2 * j <= h; ++j) acc += make_rational(hyperbola_rhs(q, j, m, n), ipow(q, static_cast<unsigned>(j)));
  return acc;
}

BigInt diagonal_count_closed(std::uint32_t q, int j, int k) {
  if (j < 0 || k < 0 || k > j) throw std::invalid_argument("diagonal_count: need 0 <= k <= j");
  if (j == 0) return 1;
  return ipow(q, static_cast<unsigned>(j)) + ipow(q, static_cast<unsigned>(j - 1)) * BigInt(q - 1) * BigInt(k / 2);
}

CountComparison diagonal_count(std::uint32_t q, int j, int k, IrreducibleCatalog& catalog) {
  CountComparison out{0, diagonal_count_closed(q, j, k)};
  for (const MonicPoly& f : enumerate_monic(q, j))
    out.brute += BigInt(static_cast<unsigned long>(square_profile(f, catalog)[k]));
  return out;
}

IntegerIdentity hyperbola_identity(std::uint32_t q, int j, unsigned m, unsigned n, IrreducibleCatalog& catalog) {
  if (j < 0) throw std::invalid_argument("hyperbola_identity: negative degree");
  IntegerIdentity out{0, hyperbola_rhs(q, j, m, n), false};
  for (const MonicPoly& f : enumerate_monic(q, j))
    out.lhs += divisor_weight_from_profile(square_profile(f, catalog), m, n);
  out.equal = out.lhs == out.rhs;
  return out;
}

ExactIdentity afe_sides(const MonicPoly& P, int g, IrreducibleCatalog& catalog) {
  if (g < 1 || P.degree() != 2 * g + 1) throw std::invalid_argument("afe_check: need d(P) = 2g + 1");
  const std::uint32_t q = P.modulus();
  const QSqrtValue value = central_derivative(l_polynomial(P, CharSumStrategy::newton, catalog), 0);
  std::vector<BigInt> shell(2 * g + 1, 0);
  for (int d = 0; d <= 2 * g; ++d)
    for (const MonicPoly& f : enumerate_monic(q, d)) {
      const int chi = to_int(quadratic_symbol(f, P));
      if (chi == 0) continue;
      BigInt tau = 0;
      for (std::uint32_t c : divisor_profile(f, catalog)) tau += c;
      shell[d] += chi * tau;
    }
  std::vector<BigInt> doubled = shell;
  for (int d = 0; d < 2 * g; ++d) doubled[d] += shell[d];
  ExactIdentity out{value * value, assemble(q, doubled, 1), false};
  out.equal = out.lhs == out.rhs;
  return out;
}

bool afe_check(const MonicPoly& P, int g, IrreducibleCatalog& catalog) { return afe_sides(P, g, catalog).equal; }

QSqrtValue mixed_moment_exact(const PrimeEnsemble& ens, unsigned mu, unsigned nu) {
  const auto& L = ens.l_polynomials();
  std::vector<QSqrtValue> partial(kSweepChunks, zero(ens.q()));
  parallel_chunks(L.size(), kSweepChunks, ens.workers(), [&](std::size_t b, std::size_t e, std::size_t c) {
    QSqrtValue acc(ens.q());
    for (std::size_t p = b; p < e; ++p)
      acc += central_derivative(L[p], static_cast<int>(mu)) * central_derivative(L[p], static_cast<int>(nu));
    partial[c] = std::move(acc);
  });
  QSqrtValue acc(ens.q());
  for (const auto& t : partial) acc += t;
  return acc / BigRational(BigInt(static_cast<unsigned long>(ens.size())));
}

QSqrtValue twisted_moment_per_prime(const PrimeEnsemble& ens, unsigned k, const MonicPoly& l) {
  check_field(ens, l, "twisted_moment_per_prime");
  const auto& L = ens.l_polynomials();
  const auto& primes = ens.primes();
  const PrimeField& field = field_for(ens.q());
  std::vector<QSqrtValue> partial(kSweepChunks, zero(ens.q()));
  parallel_chunks(L.size(), kSweepChunks, ens.workers(), [&](std::size_t b, std::size_t e, std::size_t c) {
    SymbolKernel kernel(field);
    QSqrtValue acc(ens.q());
    for (std::size_t p = b; p < e; ++p) {
      const int chi = kernel.symbol(l.coeffs(), primes[p].coeffs());
      if (chi == 0) continue;
      acc += central_derivative(L[p], static_cast<int>(k)) * BigRational(chi);
    }
    partial[c] = std::move(acc);
  });
  QSqrtValue acc(ens.q());
  for (const auto& t : partial) acc += t;
  return acc / BigRational(BigInt(static_cast<unsigned long>(ens.size())));
}

ExactIdentity combination_identity(const PrimeEnsemble& ens, unsigned mu, unsigned nu) {
  const int g = ens.g();
  QSqrtValue rhs = t_hat(ens, 2 * g, mu, nu);
  for (unsigned m = 0; m <= mu; ++m)
    for (unsigned n = 0; n <= nu; ++n) {
      BigInt w = binomial(mu, m) * binomial(nu, n) * ipow(2 * g, mu + nu - m - n);
      if ((m + n) % 2) w = -w;
      rhs += t_hat(ens, 2 * g - 1, m, n) * BigRational(w);
    }
  if ((mu + nu) % 2) rhs = -rhs;
  ExactIdentity out{mixed_moment_exact(ens, mu, nu), rhs, false};
  out.equal = out.lhs == out.rhs;
  return out;
}

QSqrtValue twisted_main_term(std::uint32_t q, int g, unsigned k, const MonicPoly& l) {
  QSqrtValue acc = square_part_closed(q, g, k, l);
  if (k % 2) acc = -acc;
  for (unsigned m = 0; m <= k; ++m) {
    const BigInt w = binomial(k, m) * ipow(-2L * g, k - m);
    acc += square_part_closed(q, g - 1, m, l) * BigRational(w);
  }
  return acc;
}

QSqrtValue twisted_main_term_from_one(std::uint32_t q, int g, unsigned k, const MonicPoly& l) {
  if (l.modulus() != q) throw std::invalid_argument("twisted_main_term_from_one: field mismatch");
  const int d1 = squarefree_decompose(l).squarefree.degree();
  const long top_g = floor_half(g - d1);
  const long top_g1 = floor_half(g - 1 - d1);
  BigRational first = 0;
  for (unsigned m = 0; m <= k; ++m)
    first += BigRational(binomial(k, m) * ipow(2, m) * ipow(d1, k - m)) * power_sum_from_one(m, top_g);
  if (k % 2) first = -first;
  BigRational second = 0;
  for (unsigned m = 0; m <= k; ++m) {
    BigRational inner = 0;
    for (unsigned i = 0; i <= m; ++i)
      inner += BigRational(binomial(m, i) * ipow(2, i) * ipow(d1, m - i)) * power_sum_from_one(i, top_g1);
    second += BigRational(binomial(k, m) * ipow(-2L * g, k - m)) * inner;
  }
  return QSqrtValue::q_power_neg_half(q, d1) * (first + second);
}

MomentReport twisted_first_moment(const PrimeEnsemble& ens, unsigned k, const MonicPoly& l) {
  check_field(ens, l, "twisted_first_moment");
  const int g = ens.g();
  const auto totals = ens.twisted_character_totals(l);
  auto s = [&](int h, unsigned m) {
    const SHatParts p = s_hat_from_totals(ens, totals, h, m, l);
    return p.square + p.non_square;
  };
  QSqrtValue exact = s(g, k);
  if (k % 2) exact = -exact;
  for (unsigned m = 0; m <= k; ++m) exact += s(g - 1, m) * BigRational(binomial(k, m) * ipow(-2L * g, k - m));

  MomentReport r;
  r.q = ens.q();
  r.g = g;
  r.orders = "k=" + std::to_string(k) + " l=" + to_canonical(l);
  r.exact = exact;
  r.main_term = twisted_main_term(ens.q(), g, k, l);
  r.residual = r.exact - r.main_term;
  const double scale = std::pow(static_cast<double>(ens.q()), -g / 2.0) * std::pow(static_cast<double>(g), k + 1) *
                       std::max(l.degree(), 1);
  r.normalized_residual = r.residual.to_double() / scale;

  const QSqrtValue from_one = twisted_main_term_from_one(ens.q(), g, k, l);
  r.extras.emplace_back("main_term_from_one", from_one.to_string());
  r.extras.emplace_back("main_term_difference", (r.main_term - from_one).to_string());
  r.extras.emplace_back("per_prime_agrees", twisted_moment_per_prime(ens, k, l) == exact ? "true" : "false");
  r.extras.emplace_back("exact_over_main", ratio_string(r.exact, r.main_term));
  if (l.degree() == 0) {
    BigRational leading = make_rational(1, BigInt(2 * (k + 1))) * BigRational(ipow(2L * g + 1, k + 1));
    if (k % 2) leading = -leading;
    r.extras.emplace_back("exact_over_leading_order", ratio_string(r.exact, QSqrtValue(ens.q(), leading)));
  }
  return r;
}

MomentReport mixed_moment(const PrimeEnsemble& ens, unsigned mu, unsigned nu) {
  const int g = ens.g();
  MomentReport r;
  r.q = ens.q();
  r.g = g;
  r.orders = "mu=" + std::to_string(mu) + " nu=" + std::to_string(nu);
  r.exact = mixed_moment_exact(ens, mu, nu);
  r.main_term = QSqrtValue(ens.q(), c_coeff(mu, nu, ens.q()) * BigRational(ipow(2L * g + 1, mu + nu + 3)));
  r.residual = r.exact - r.main_term;
  r.normalized_residual = r.residual.to_double() / std::pow(static_cast<double>(g), mu + nu + 2);
  r.extras.emplace_back("exact_over_main", ratio_string(r.exact, r.main_term));
  return r;
}

WeilReport weil_scan(const PrimeEnsemble& ens, int max_deg) {
  if (max_deg < 1 || max_deg > 2 * ens.g()) throw std::invalid_argument("weil_scan: need 1 <= max_deg <= 2g");
  const MonicIndex& idx = ens.index();
  const auto& totals = ens.character_totals();
  WeilReport r;
  r.q = ens.q();
  r.g = ens.g();
  r.max_deg = max_deg;
  r.max_by_degree.assign(max_deg, 0);
  // W(f) = |E(f)| q^g / (|P| d(f))
  const BigInt qg = ipow(ens.q(), static_cast<unsigned>(ens.g()));
  const BigInt count(static_cast<unsigned long>(ens.size()));
  bool have = false;
  for (std::size_t f = idx.offset(1); f < idx.offset(max_deg + 1); ++f) {
    const MonicPoly fp = idx.at(f);
    if (is_square(fp)) continue;
    ++r.scanned;
    const int d = fp.degree();
    const BigRational w = make_rational(BigInt(std::labs(static_cast<long>(totals[f]))) * qg, count * BigInt(d));
    if (w > r.max_by_degree[d - 1]) r.max_by_degree[d - 1] = w;
    if (!have || w > r.max_value) {
      r.max_value = w;
      r.argmax = to_canonical(fp);
      have = true;
    }
  }
  return r;
}

}  // namespace ffm
