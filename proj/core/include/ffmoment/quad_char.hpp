#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ffmoment/enumerate.hpp"
#include "ffmoment/field.hpp"
#include "ffmoment/poly.hpp"

namespace ffm {

enum class CharValue : std::int8_t { minus_one = -1, zero = 0, plus_one = 1 };

constexpr int to_int(CharValue v) noexcept { return static_cast<int>(v); }
constexpr CharValue char_from_int(int v) noexcept {
  return v > 0 ? CharValue::plus_one : (v < 0 ? CharValue::minus_one : CharValue::zero);
}

/// Reusable scratch for the reciprocity-based symbol. One per thread.
class SymbolKernel {
 public:
  explicit SymbolKernel(const PrimeField& field) : field_(&field) {}

  /// (f / m) for monic m of degree >= 1, coefficients low-degree first and
  /// already reduced mod q. The generalized (Jacobi-style) symbol: for
  /// irreducible m this is the quadratic residue symbol.
  int symbol(std::span<const std::uint32_t> f, std::span<const std::uint32_t> m);

 private:
  const PrimeField* field_;
  std::vector<std::uint32_t> a_, b_;
};

/// Quadratic residue symbol (f / m) via polynomial reciprocity. Throws
/// std::domain_error for constant m.
CharValue quadratic_symbol(const Poly& f, const MonicPoly& m);

/// Euler criterion f^{(|m|-1)/2} mod m, mapped to {-1, 0, +1}. Only meaningful
/// for irreducible m; returns zero when m | f. Throws std::domain_error for
/// constant m and std::runtime_error if the power is not 0 or +-1 (m reducible).
CharValue quadratic_symbol_euler(const Poly& f, const MonicPoly& m);

enum class CharSumStrategy { direct, newton };

/// c_n = sum over monic f of degree n of chi_P(f). In debug builds the
/// irreducibility of P is verified.
std::int64_t char_sum(const MonicPoly& P, int n, CharSumStrategy strategy = CharSumStrategy::direct,
                      IrreducibleCatalog& catalog = default_catalog());

/// c_0..c_max_n in one pass.
std::vector<std::int64_t> char_sums(const MonicPoly& P, int max_n, CharSumStrategy strategy,
                                    IrreducibleCatalog& catalog = default_catalog());

/// chi_P(Q) for every irreducible Q of degree d, d = 1..max_degree
/// (outer index d - 1, inner in catalog order).
std::vector<std::vector<std::int8_t>> prime_characters(const MonicPoly& P, int max_degree,
                                                       IrreducibleCatalog& catalog = default_catalog());

/// Newton recursion n c_n = sum_{j=1}^n psi_j c_{n-j}, with
/// psi_j = sum_{d m = j} d * sum_{Q in P_d} chi(Q)^m. chars_by_degree[d-1]
/// holds chi on the degree-d irreducibles and must cover degrees 1..max_n.
std::vector<std::int64_t> newton_coefficients(std::span<const std::vector<std::int8_t>> chars_by_degree,
                                              int max_n);

}  // namespace ffm
