#include "ffmoment/quad_char.hpp"

#include <memory>
#include <stdexcept>

namespace ffm {

namespace {

void trim(std::vector<std::uint32_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// a <- a mod b for monic b.
void reduce_by_monic(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b, const PrimeField& f) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (c != 0) {
      for (std::size_t j = 0; j < db; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
    }
    a.pop_back();
    trim(a);
  }
}

void check_modulus(const MonicPoly& P, int n) {
  if (n < 0) throw std::invalid_argument("char_sum: negative degree");
  if (P.degree() < 1) throw std::domain_error("char_sum: constant modulus");
#ifndef NDEBUG
  if (!is_irreducible(P)) throw std::invalid_argument("char_sum: modulus is reducible");
#endif
}

// Sum of (f / P) over monic f of degree n, odometer-style over low coefficients.
std::int64_t direct_degree_sum(SymbolKernel& kernel, const MonicPoly& P, int n) {
  const std::uint32_t q = P.modulus();
  std::vector<std::uint32_t> low(n + 1, 0);
  low[n] = 1;
  std::int64_t s = 0;
  const std::uint64_t total = checked_pow(q, n);
  for (std::uint64_t r = 0; r < total; ++r) {
    s += kernel.symbol(low, P.coeffs());
    for (int i = 0; i < n && ++low[i] == q; ++i) low[i] = 0;
  }
  return s;
}

}  // namespace

int SymbolKernel::symbol(std::span<const std::uint32_t> f, std::span<const std::uint32_t> m) {
  const PrimeField& fld = *field_;
  a_.assign(f.begin(), f.end());
  b_.assign(m.begin(), m.end());
  trim(a_);
  const bool half_odd = ((fld.q() - 1) / 2) % 2 == 1;
  int result = 1;
  // Invariant: answer = result * (a_ / b_), b_ monic of degree >= 1.
  while (true) {
    reduce_by_monic(a_, b_, fld);
    if (a_.empty()) return 0;
    const std::uint32_t lead = a_.back();
    const std::size_t db = b_.size() - 1;
    if (lead != 1) {
      // (c / B) = legendre(c)^{deg B}
      if ((db & 1) && fld.legendre(lead) < 0) result = -result;
      const std::uint32_t inv = fld.inv(lead);
      for (auto& x : a_) x = fld.mul(x, inv);
    }
    const std::size_t da = a_.size() - 1;
    if (da == 0) return result;
    // (A/B)(B/A) = (-1)^{((q-1)/2) d(A) d(B)} for monic coprime A, B.
    if (half_odd && (da & 1) && (db & 1)) result = -result;
    std::swap(a_, b_);
  }
}

CharValue quadratic_symbol(const Poly& f, const MonicPoly& m) {
  if (f.modulus() != m.modulus()) throw std::invalid_argument("quadratic_symbol: field mismatch");
  if (m.degree() < 1) throw std::domain_error("quadratic_symbol: constant modulus");
  thread_local std::uint32_t kernel_q = 0;
  thread_local std::unique_ptr<SymbolKernel> kernel;
  if (kernel_q != m.modulus()) {
    kernel = std::make_unique<SymbolKernel>(field_for(m.modulus()));
    kernel_q = m.modulus();
  }
  return char_from_int(kernel->symbol(f.coeffs(), m.coeffs()));
}

CharValue quadratic_symbol_euler(const Poly& f, const MonicPoly& m) {
  if (f.modulus() != m.modulus()) throw std::invalid_argument("quadratic_symbol_euler: field mismatch");
  if (m.degree() < 1) throw std::domain_error("quadratic_symbol_euler: constant modulus");
  const std::uint32_t q = m.modulus();
  const Poly base = poly_rem(f, m);
  if (base.is_zero()) return CharValue::zero;
  // (|m|-1)/2 = ((q-1)/2)(1 + q + ... + q^{d-1}), so the power is the product
  // of the Frobenius images y^{q^i} of y = base^{(q-1)/2}.
  Poly y = poly_powmod(base, (q - 1) / 2, m);
  Poly acc = y;
  for (int i = 1; i < m.degree(); ++i) {
    y = poly_powmod(y, q, m);
    acc = poly_rem(poly_mul(acc, y), m);
  }
  if (acc == Poly::constant(q, 1)) return CharValue::plus_one;
  if (acc == Poly::constant(q, q - 1)) return CharValue::minus_one;
  if (acc.is_zero()) return CharValue::zero;
  throw std::runtime_error("quadratic_symbol_euler: modulus " + to_canonical(m) + " is not irreducible");
}

std::vector<std::vector<std::int8_t>> prime_characters(const MonicPoly& P, int max_degree,
                                                       IrreducibleCatalog& catalog) {
  SymbolKernel kernel(field_for(P.modulus()));
  std::vector<std::vector<std::int8_t>> out;
  for (int d = 1; d <= max_degree; ++d) {
    const auto& qs = catalog.get(P.modulus(), d);
    std::vector<std::int8_t> row(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i)
      row[i] = static_cast<std::int8_t>(kernel.symbol(qs[i].coeffs(), P.coeffs()));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::int64_t> newton_coefficients(std::span<const std::vector<std::int8_t>> chars_by_degree,
                                              int max_n) {
  if (max_n < 0) return {};
  if (static_cast<int>(chars_by_degree.size()) < max_n)
    throw std::invalid_argument("newton_coefficients: characters missing for some degrees");
  // power sums: sum_Q chi(Q)^m depends only on the parity of m
  std::vector<std::int64_t> sum_odd(max_n + 1, 0), sum_even(max_n + 1, 0);
  for (int d = 1; d <= max_n; ++d)
    for (std::int8_t c : chars_by_degree[d - 1]) {
      sum_odd[d] += c;
      sum_even[d] += c * c;
    }
  std::vector<std::int64_t> psi(max_n + 1, 0);
  for (int j = 1; j <= max_n; ++j)
    for (int d = 1; d <= j; ++d)
      if (j % d == 0) psi[j] += d * ((j / d) % 2 ? sum_odd[d] : sum_even[d]);
  std::vector<std::int64_t> c(max_n + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    std::int64_t acc = 0;
    for (int j = 1; j <= n; ++j) acc += psi[j] * c[n - j];
    if (acc % n != 0) throw std::logic_error("newton_coefficients: non-integral coefficient");
    c[n] = acc / n;
  }
  return c;
}

std::vector<std::int64_t> char_sums(const MonicPoly& P, int max_n, CharSumStrategy strategy,
                                    IrreducibleCatalog& catalog) {
  check_modulus(P, max_n);
  if (strategy == CharSumStrategy::newton) {
    // degree-d(P) irreducibles include P itself, where chi vanishes
    auto chars = prime_characters(P, max_n, catalog);
    return newton_coefficients(chars, max_n);
  }
  SymbolKernel kernel(field_for(P.modulus()));
  std::vector<std::int64_t> c(max_n + 1, 0);
  for (int n = 0; n <= max_n; ++n) c[n] = direct_degree_sum(kernel, P, n);
  return c;
}

std::int64_t char_sum(const MonicPoly& P, int n, CharSumStrategy strategy, IrreducibleCatalog& catalog) {
  if (strategy == CharSumStrategy::newton) return char_sums(P, n, strategy, catalog).back();
  check_modulus(P, n);
  SymbolKernel kernel(field_for(P.modulus()));
  return direct_degree_sum(kernel, P, n);
}

}  // namespace ffm
