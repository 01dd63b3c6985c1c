#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ffmoment/enumerate.hpp"
#include "ffmoment/lfunc.hpp"
#include "ffmoment/poly.hpp"

namespace ffm {

/// The family {chi_P : P in 𝓟_{2g+1}} together with everything the moment
/// computations need from it:
///
///  * chi_P(Q) for every P and every monic irreducible Q with d(Q) <= 2g,
///    evaluated once by reciprocity;
///  * a factor table over 𝓜_{<=2g} (f = Q * cofactor) so that chi_P on all of
///    𝓜_{<=2g} follows by complete multiplicativity;
///  * L-polynomials of every P (Newton recursion on the stored characters);
///  * the monic divisor-degree profile of every f in 𝓜_{<=2g}.
///
/// Immutable after construction; all queries are const and thread-safe.
class PrimeEnsemble {
 public:
  PrimeEnsemble(std::uint32_t q, int g, IrreducibleCatalog& catalog = default_catalog(), unsigned workers = 1);

  std::uint32_t q() const noexcept { return q_; }
  int g() const noexcept { return g_; }
  unsigned workers() const noexcept { return workers_; }
  std::size_t size() const noexcept { return primes_.size(); }
  const std::vector<MonicPoly>& primes() const noexcept { return primes_; }
  const std::vector<LPolynomial>& l_polynomials() const noexcept { return lpolys_; }
  /// Index over 𝓜_{<=2g}.
  const MonicIndex& index() const noexcept { return index_; }

  /// chi_P(f) for P = primes()[p] and every f in 𝓜_{<=2g}, by index.
  std::vector<std::int8_t> character_table(std::size_t p) const;

  /// sum_P chi_P(f) for every f in 𝓜_{<=2g}.
  const std::vector<std::int64_t>& character_totals() const noexcept { return totals_; }

  /// sum_P chi_P(l) chi_P(f) for every f in 𝓜_{<=2g}; requires d(l) <= 2g.
  std::vector<std::int64_t> twisted_character_totals(const MonicPoly& l) const;

  /// profile[k] = number of monic divisors of f of degree k (k = 0..d(f)).
  std::span<const std::uint32_t> divisor_profile(std::size_t f_index) const;

 private:
  std::uint32_t q_;
  int g_;
  unsigned workers_;
  MonicIndex index_;
  std::vector<MonicPoly> primes_;
  std::size_t irreducible_count_ = 0;         // irreducibles of degree 1..2g
  std::vector<std::size_t> irreducible_offset_;  // start of degree d in the irreducible id space
  std::vector<std::int8_t> prime_chars_;      // [p * irreducible_count_ + id]
  std::vector<std::uint32_t> factor_id_;      // one irreducible factor of f (f index >= 1)
  std::vector<std::uint32_t> factor_cofactor_;
  std::vector<std::size_t> profile_offset_;
  std::vector<std::uint32_t> profile_data_;
  std::vector<LPolynomial> lpolys_;
  std::vector<std::int64_t> totals_;
};

}  // namespace ffm
