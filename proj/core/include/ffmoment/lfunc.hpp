#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffmoment/enumerate.hpp"
#include "ffmoment/poly.hpp"
#include "ffmoment/qsqrt.hpp"
#include "ffmoment/quad_char.hpp"

namespace ffm {

/// Coefficients (c_0, ..., c_{2g}) of L(u, chi_P) = sum_f chi_P(f) u^{d(f)} for
/// d(P) = 2g + 1.
struct LPolynomial {
  std::uint32_t q = 0;
  int g = 0;
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const LPolynomial&, const LPolynomial&) = default;
};

/// Throws std::invalid_argument for even-degree, degree-1 or reducible P.
LPolynomial l_polynomial(const MonicPoly& P, CharSumStrategy strategy = CharSumStrategy::newton,
                         IrreducibleCatalog& catalog = default_catalog());

/// Builds the L-polynomial from chi_P on the irreducibles of degree 1..2g.
LPolynomial l_polynomial_from_characters(std::uint32_t q, int g,
                                         std::span<const std::vector<std::int8_t>> chars_by_degree);

/// c_0 = 1, length 2g + 1, and c_{2g-n} = q^{g-n} c_n for all n.
bool check_functional_equation(const LPolynomial& L);

enum class DerivativeMethod { direct, folded };

/// L^{(k)}(1/2, chi_P) / (log q)^k in Q(sqrt q).
///
/// direct: sum_{n=0}^{2g} (-n)^k q^{-n/2} c_n.
/// folded: (-1)^k sum_{n=0}^{g} n^k q^{-n/2} c_n
///         + sum_{m=0}^{k} C(k,m) (-2g)^{k-m} sum_{n=0}^{g-1} n^m q^{-n/2} c_n,
/// which uses only c_0..c_g and relies on the functional equation.
QSqrtValue central_derivative(const LPolynomial& L, int k, DerivativeMethod method = DerivativeMethod::direct);

/// "P=<canonical string> c=<comma-separated integers>"
std::string format_lpoly_record(const MonicPoly& P, const LPolynomial& L);
/// Inverse of format_lpoly_record; throws std::invalid_argument.
std::pair<MonicPoly, LPolynomial> parse_lpoly_record(std::uint32_t q, const std::string& line);

}  // namespace ffm
