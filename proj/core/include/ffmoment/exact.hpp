#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffmoment/bigrational.hpp"

namespace ffm {

/// zeta_q(s) = 1 / (1 - q^{1-s}) at an integer s != 1.
BigRational zeta_q(std::uint32_t q, int s);

/// Second Bernoulli numbers, B_1^+ = +1/2.
BigRational bernoulli_plus(unsigned m);

/// J_k(n) = sum_{m=1}^n m^k via Faulhaber's formula (J_0(n) = n).
BigRational faulhaber(unsigned k, unsigned long n);
/// The same sum by direct accumulation.
BigInt faulhaber_direct(unsigned k, unsigned long n);
/// Coefficients a_0..a_{k+1} with J_k(n) = sum_i a_i n^i.
std::vector<BigRational> faulhaber_polynomial(unsigned k);

/// Integral over [0, 1] of x^a (2 - x)^b, by binomial expansion.
BigRational power_integral(unsigned a, unsigned b);

/// A(m, n) = (1 / (2(m+n+3))) * int_0^1 (x^{m+1}(2-x)^n + x^{n+1}(2-x)^m) dx.
BigRational a_coeff(unsigned m, unsigned n);

/// zeta_q(2) * c(mu, nu); independent of q.
BigRational c_tilde(unsigned mu, unsigned nu);
/// c(mu, nu) = c_tilde(mu, nu) * (1 - 1/q).
BigRational c_coeff(unsigned mu, unsigned nu, std::uint32_t q);

/// Leading symplectic coefficient b^{Sp}_{1,1}(n1, n2), evaluated term by term
/// exactly as the closed quadruple sum is written (no sign normalization).
BigRational b_sp(unsigned n1, unsigned n2);

/// Coefficients in j of sum_{k=0}^{j-1} k^m (2j - k)^n (a polynomial of degree
/// m + n + 1 in j), built from binomial expansion and Faulhaber polynomials.
std::vector<BigRational> shifted_power_sum_polynomial(unsigned m, unsigned n);
BigInt shifted_power_sum_direct(unsigned m, unsigned n, unsigned long j);
BigRational evaluate(const std::vector<BigRational>& coeffs, const BigRational& x);

enum class GlobalSign { plus, minus, inconsistent };
std::string to_string(GlobalSign s);

struct CoeffPairRecord {
  unsigned n1 = 0;
  unsigned n2 = 0;
  BigRational c_tilde;
  BigRational b_sp;
  bool match = false;
};

/// Outcome of comparing c_tilde(n1, n2) with eps * b_sp(n1, n2) on the grid
/// 0 <= n1, n2 <= max_order for one grid-wide eps.
struct CoeffGridReport {
  unsigned max_order = 0;
  GlobalSign epsilon = GlobalSign::inconsistent;
  std::vector<CoeffPairRecord> pairs;  // n1 major, n2 minor

  bool resolved() const noexcept { return epsilon != GlobalSign::inconsistent; }
  std::size_t mismatches() const noexcept;
};

CoeffGridReport verify_identity(unsigned max_order, unsigned workers = 1);

}  // namespace ffm
