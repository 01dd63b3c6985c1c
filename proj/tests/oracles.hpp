#pragma once

// Naive reference implementations on raw coefficient vectors (low degree
// first). Nothing here calls into the library's polynomial code.

#include <cstdint>
#include <set>
#include <vector>

#include <ffmoment/poly.hpp>

namespace oracle {

using Vec = std::vector<std::uint32_t>;

inline void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Vec of(const ffm::Poly& p) { return Vec(p.coeffs().begin(), p.coeffs().end()); }

inline Vec mul(const Vec& a, const Vec& b, std::uint32_t q) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
  trim(r);
  return r;
}

// a mod m, m monic
inline Vec mod(Vec a, const Vec& m, std::uint32_t q) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm && !a.empty()) {
    const std::uint32_t c = a.back();
    const std::size_t s = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[s + i] = (a[s + i] + (q - c) * m[i]) % q;
    trim(a);
  }
  return a;
}

// Monic polynomials of degree n, each as low-first coefficients.
inline std::vector<Vec> monics(std::uint32_t q, int n) {
  std::vector<Vec> out;
  Vec c(n + 1, 0);
  c[n] = 1;
  while (true) {
    out.push_back(c);
    int i = 0;
    while (i < n && ++c[i] == q) c[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// All polynomials of degree < n (including zero).
inline std::vector<Vec> residues(std::uint32_t q, int n) {
  std::vector<Vec> out;
  Vec c(n, 0);
  while (true) {
    Vec t = c;
    trim(t);
    out.push_back(t);
    int i = 0;
    while (i < n && ++c[i] == q) c[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline bool divides(const Vec& d, const Vec& f, std::uint32_t q) { return mod(f, d, q).empty(); }

inline bool irreducible(const Vec& f, std::uint32_t q) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= n; ++d)
    for (const Vec& g : monics(q, d))
      if (divides(g, f, q)) return false;
  return n >= 1;
}

// (f / P) from the set of squares mod P.
inline int symbol(const Vec& f, const Vec& P, std::uint32_t q) {
  const Vec r = mod(f, P, q);
  if (r.empty()) return 0;
  std::set<Vec> squares;
  for (const Vec& x : residues(q, static_cast<int>(P.size()) - 1))
    if (!x.empty()) squares.insert(mod(mul(x, x, q), P, q));
  return squares.count(r) ? 1 : -1;
}

// profile[k] = number of monic divisors of degree k
inline std::vector<std::uint32_t> divisor_profile(const Vec& f, std::uint32_t q) {
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<std::uint32_t> prof(n + 1, 0);
  for (int k = 0; k <= n; ++k)
    for (const Vec& d : monics(q, k))
      if (divides(d, f, q)) ++prof[k];
  return prof;
}

inline long ipow(long b, unsigned e) {
  long r = 1;
  while (e--) r *= b;
  return r;
}

inline long divisor_weight(const Vec& f, unsigned m, unsigned n, std::uint32_t q) {
  const auto prof = divisor_profile(f, q);
  const long d = static_cast<long>(prof.size()) - 1;
  long acc = 0;
  for (long k = 0; k <= d; ++k) acc += prof[k] * ipow(k, m) * ipow(d - k, n);
  return acc;
}

inline long char_sum(const Vec& P, int n, std::uint32_t q) {
  long s = 0;
  for (const Vec& f : monics(q, n)) s += symbol(f, P, q);
  return s;
}

inline bool is_square(const Vec& f, std::uint32_t q) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n % 2) return false;
  for (const Vec& r : monics(q, n / 2))
    if (mul(r, r, q) == f) return true;
  return false;
}

}  // namespace oracle
