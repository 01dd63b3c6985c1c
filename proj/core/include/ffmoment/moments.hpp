#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ffmoment/bigrational.hpp"
#include "ffmoment/ensemble.hpp"
#include "ffmoment/enumerate.hpp"
#include "ffmoment/poly.hpp"
#include "ffmoment/qsqrt.hpp"

namespace ffm {

// ---------------------------------------------------------------------------
// Divisor weights
//
// tau^{(m,n)}(f) = (-log q)^{m+n} D_{m,n}(f) with
// D_{m,n}(f) = sum_{f = f1 f2} d(f1)^m d(f2)^n. Everything below works with
// the integer D_{m,n}; the (-1)^{m+n} and (log q)^{m+n} factors are applied
// explicitly where the derivative combination needs them.
// ---------------------------------------------------------------------------

/// Number of monic divisors of f in each degree, from its factorization.
std::vector<std::uint32_t> divisor_profile(const MonicPoly& f, IrreducibleCatalog& catalog = default_catalog());
/// D_{m,n} from a divisor-degree profile (profile.size() == d(f) + 1).
BigInt divisor_weight_from_profile(std::span<const std::uint32_t> profile, unsigned m, unsigned n);
BigInt divisor_weight(const MonicPoly& f, unsigned m, unsigned n, IrreducibleCatalog& catalog = default_catalog());

/// Exact equality check carrying both sides.
struct ExactIdentity {
  QSqrtValue lhs;
  QSqrtValue rhs;
  bool equal = false;
};

struct IntegerIdentity {
  BigInt lhs;
  BigInt rhs;
  bool equal = false;
};

// ---------------------------------------------------------------------------
// Twisted sums S_h(m; l)
// ---------------------------------------------------------------------------

/// S_h(m; l) = sum_{f in 𝓜_{<=h}} d(f)^m |f|^{-1/2} (1/|𝓟_{2g+1}|) sum_P chi_P(f l).
/// Requires h in {g, g-1} and d(l) <= 2g; throws std::invalid_argument otherwise.
QSqrtValue s_hat(const PrimeEnsemble& ens, int h, unsigned m, const MonicPoly& l);

struct SHatParts {
  QSqrtValue square;      // terms with f l a perfect square
  QSqrtValue non_square;  // the rest
};
SHatParts s_hat_parts(const PrimeEnsemble& ens, int h, unsigned m, const MonicPoly& l);

/// lhs: square-indexed part of s_hat, from the character sums.
/// rhs: |l1|^{-1/2} sum_{n=0}^{floor((h-d(l1))/2)} (d(l1)+2n)^m (empty when h < d(l1)).
ExactIdentity square_part_identity(const PrimeEnsemble& ens, int h, unsigned m, const MonicPoly& l);
/// The closed right-hand side alone (no ensemble needed).
QSqrtValue square_part_closed(std::uint32_t q, int h, unsigned m, const MonicPoly& l);

/// #{f in 𝓜_n : f l is a square} = q^{(n-d(l1))/2} when n >= d(l1) and
/// n = d(l1) mod 2, else 0.
BigInt square_completion_count(std::uint32_t q, int n, const MonicPoly& l);
BigInt square_completion_count_brute(std::uint32_t q, int n, const MonicPoly& l);

// ---------------------------------------------------------------------------
// Divisor-weighted sums T_h(m, n)
// ---------------------------------------------------------------------------

/// Normalized T_h: sum_{f in 𝓜_{<=h}} D_{m,n}(f) |f|^{-1/2} (1/|𝓟|) sum_P chi_P(f),
/// h in {2g, 2g-1}.
QSqrtValue t_hat(const PrimeEnsemble& ens, int h, unsigned m, unsigned n);
/// Square-indexed terms of t_hat, from the character sums.
QSqrtValue t_hat_square_terms(const PrimeEnsemble& ens, int h, unsigned m, unsigned n);
/// sum_{f in 𝓜_{<=floor(h/2)}} D_{m,n}(f^2) / |f|, by enumeration.
QSqrtValue t_hat_square_part(const PrimeEnsemble& ens, int h, unsigned m, unsigned n);
/// The same quantity from the diagonal count formula, for any q and h.
BigRational t_hat_square_part_closed(std::uint32_t q, int h, unsigned m, unsigned n);

/// brute: sum_{f in 𝓜_j} #{(f1, f2) : f1 f2 = f^2, d(f1) = k};
/// closed: q^j (1 + (1 - 1/q) floor(k/2)).
struct CountComparison {
  BigInt brute;
  BigInt closed;
  bool equal() const { return brute == closed; }
};
CountComparison diagonal_count(std::uint32_t q, int j, int k, IrreducibleCatalog& catalog = default_catalog());
BigInt diagonal_count_closed(std::uint32_t q, int j, int k);

/// lhs: sum_{f in 𝓜_j} D_{m,n}(f^2) by enumeration; rhs: the hyperbola split
/// j^{m+n} N(j) + sum_{k<j} (k^m (2j-k)^n + k^n (2j-k)^m) N(k) with N the
/// closed diagonal count.
IntegerIdentity hyperbola_identity(std::uint32_t q, int j, unsigned m, unsigned n,
                                   IrreducibleCatalog& catalog = default_catalog());

// ---------------------------------------------------------------------------
// Central values and moments
// ---------------------------------------------------------------------------

/// L(1/2, chi_P)^2 against the two-sum approximate functional equation at zero
/// shifts, with tau and chi evaluated per f.
ExactIdentity afe_sides(const MonicPoly& P, int g, IrreducibleCatalog& catalog = default_catalog());
bool afe_check(const MonicPoly& P, int g, IrreducibleCatalog& catalog = default_catalog());

/// (1/|𝓟|) sum_P L^{(mu)} L^{(nu)} / (log q)^{mu+nu}, from per-prime central derivatives.
QSqrtValue mixed_moment_exact(const PrimeEnsemble& ens, unsigned mu, unsigned nu);
/// (1/|𝓟|) sum_P L^{(k)} chi_P(l) / (log q)^k, from per-prime central derivatives.
QSqrtValue twisted_moment_per_prime(const PrimeEnsemble& ens, unsigned k, const MonicPoly& l);

/// lhs: mixed_moment_exact. rhs: the derivative combination
/// (-1)^{mu+nu} [ T_{2g}(mu,nu) + sum_{m,n} C(mu,m) C(nu,n) (2g)^{mu+nu-m-n} (-1)^{m+n} T_{2g-1}(m,n) ]
/// in normalized form (t_hat).
ExactIdentity combination_identity(const PrimeEnsemble& ens, unsigned mu, unsigned nu);

/// An exact ensemble quantity set against an asymptotic main term.
struct MomentReport {
  std::uint32_t q = 0;
  int g = 0;
  std::string orders;
  QSqrtValue exact{3};
  QSqrtValue main_term{3};
  QSqrtValue residual{3};
  double normalized_residual = 0.0;
  std::vector<std::pair<std::string, std::string>> extras;
};

/// Twisted first moment via the S_h decomposition, against the main terms
/// sum_{n=0}^{...} (d(l1)+2n)^m (with the n = 0 term). The variant using
/// J_i(n) = sum_{m=1}^n m^i is reported in the extras together with the
/// difference. Residual normalized by q^{-g/2} g^{k+1} max(d(l), 1).
MomentReport twisted_first_moment(const PrimeEnsemble& ens, unsigned k, const MonicPoly& l);

/// Twisted main term using the n = 0 inclusive power sums.
QSqrtValue twisted_main_term(std::uint32_t q, int g, unsigned k, const MonicPoly& l);
/// Twisted main term with J_i(n) = sum_{m=1}^n m^i.
QSqrtValue twisted_main_term_from_one(std::uint32_t q, int g, unsigned k, const MonicPoly& l);

/// Mixed moment against c(mu, nu) (2g+1)^{mu+nu+3}; residual normalized by g^{mu+nu+2}.
MomentReport mixed_moment(const PrimeEnsemble& ens, unsigned mu, unsigned nu);

struct WeilReport {
  std::uint32_t q = 0;
  int g = 0;
  int max_deg = 0;
  std::size_t scanned = 0;
  /// W(f) = |sum_P chi_P(f)| / (|𝓟| q^{-g} d(f)), maximized over non-square f.
  BigRational max_value;
  std::string argmax;
  /// Per-degree maxima (degree 1..max_deg).
  std::vector<BigRational> max_by_degree;
};
WeilReport weil_scan(const PrimeEnsemble& ens, int max_deg);

}  // namespace ffm
