#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ffm {

/// Polynomial over F_q, coefficients stored low-degree first with no trailing
/// zeros. The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  explicit Poly(std::uint32_t q);
  /// Coefficients are reduced mod q and trailing zeros dropped.
  Poly(std::uint32_t q, std::vector<std::uint32_t> coeffs_low_first);

  static Poly constant(std::uint32_t q, std::uint32_t c);
  /// The indeterminate t.
  static Poly t(std::uint32_t q);

  std::uint32_t modulus() const noexcept { return q_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  std::uint32_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  std::uint32_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  std::span<const std::uint32_t> coeffs() const noexcept { return c_; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::uint32_t q_;
  std::vector<std::uint32_t> c_;
};

/// A monic polynomial (leading coefficient 1, degree >= 0).
class MonicPoly {
 public:
  /// Throws std::invalid_argument unless p is monic.
  explicit MonicPoly(Poly p);

  static MonicPoly one(std::uint32_t q);
  /// From the low coefficients c_0..c_{n-1}; the leading 1 is appended.
  static MonicPoly from_low(std::uint32_t q, std::vector<std::uint32_t> low);

  const Poly& poly() const noexcept { return p_; }
  operator const Poly&() const noexcept { return p_; }  // NOLINT

  std::uint32_t modulus() const noexcept { return p_.modulus(); }
  int degree() const noexcept { return p_.degree(); }
  std::uint32_t coeff(std::size_t i) const noexcept { return p_.coeff(i); }
  std::span<const std::uint32_t> coeffs() const noexcept { return p_.coeffs(); }
  bool is_one() const noexcept { return p_.degree() == 0; }

  friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

 private:
  Poly p_;
};

// Arithmetic. Every binary operation throws std::invalid_argument when the
// operands live over different fields.
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, std::uint32_t c);
Poly poly_mul(const Poly& a, const Poly& b);
MonicPoly poly_mul(const MonicPoly& a, const MonicPoly& b);
MonicPoly poly_pow(const MonicPoly& a, unsigned e);

/// Quotient and remainder; throws std::domain_error when b is zero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_rem(const Poly& a, const Poly& b);
/// Exact quotient of monic polynomials; throws std::domain_error if b does not divide a.
MonicPoly poly_exact_div(const MonicPoly& a, const MonicPoly& b);

/// Monic gcd; throws std::domain_error when both inputs are zero.
MonicPoly poly_gcd(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

Poly make_monic(const Poly& a);
Poly derivative(const Poly& a);
/// base^e mod m.
Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Canonical text form: most-significant coefficient first, one digit per
/// coefficient for q < 10 ("1021" is t^3+2t+1 over F_3), comma separated for
/// q >= 10. The zero polynomial is "0".
std::string to_canonical(const Poly& p);
/// Throws std::invalid_argument on malformed input.
Poly parse_poly(std::uint32_t q, std::string_view text);
MonicPoly parse_monic(std::uint32_t q, std::string_view text);

/// Distinct-degree test: gcd(f, t^{q^i} - t) = 1 for 1 <= i <= d(f)/2.
/// Throws std::domain_error for constant f.
bool is_irreducible(const MonicPoly& f);
/// Trial division by every monic polynomial of degree 1..d(f)/2.
bool is_irreducible_by_trial_division(const MonicPoly& f);

struct SquarefreeDecomposition {
  MonicPoly squarefree;  // l1
  MonicPoly square_root; // l2, with l = l1 * l2^2
};

/// l = l1 * l2^2 with l1 square-free (characteristic-aware Yun/Musser).
SquarefreeDecomposition squarefree_decompose(const MonicPoly& l);
/// Square-free factorization l = prod s_i^i as (s_i, i) pairs with s_i != 1.
std::vector<std::pair<MonicPoly, int>> squarefree_factorization(const MonicPoly& l);
bool is_square(const MonicPoly& f);
bool is_squarefree(const MonicPoly& f);

}  // namespace ffm
