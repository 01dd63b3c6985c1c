#include "ffmoment/ensemble.hpp"

#include <limits>
#include <map>
#include <stdexcept>

#include "ffmoment/parallel.hpp"
#include "ffmoment/quad_char.hpp"

namespace ffm {

namespace {
constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
}

PrimeEnsemble::PrimeEnsemble(std::uint32_t q, int g, IrreducibleCatalog& catalog, unsigned workers)
    : q_(q), g_(g), workers_(std::max(1u, workers)), index_(q, 2 * std::max(g, 0)) {
  if (g < 1) throw std::invalid_argument("PrimeEnsemble: g must be at least 1");
  const PrimeField& field = field_for(q);
  checked_pow(q, 2 * g + 1);
  if (index_.size() >= kUnset) throw std::overflow_error("PrimeEnsemble: 𝓜_{<=2g} too large");
  primes_ = catalog.get(q, 2 * g + 1);

  // irreducible id space over degrees 1..2g
  std::vector<const std::vector<MonicPoly>*> irr(2 * g + 1, nullptr);
  irreducible_offset_.assign(2 * g + 2, 0);
  for (int d = 1; d <= 2 * g; ++d) {
    irr[d] = &catalog.get(q, d);
    irreducible_offset_[d + 1] = irreducible_offset_[d] + irr[d]->size();
  }
  irreducible_count_ = irreducible_offset_[2 * g + 1];

  // factor table: f = Q * c for some irreducible Q
  factor_id_.assign(index_.size(), kUnset);
  factor_cofactor_.assign(index_.size(), kUnset);
  for (int d = 1; d <= 2 * g; ++d) {
    const std::size_t cof_end = index_.offset(2 * g - d + 1);
    for (std::size_t i = 0; i < irr[d]->size(); ++i) {
      const MonicPoly& Q = (*irr[d])[i];
      for (std::size_t c = 0; c < cof_end; ++c) {
        const std::size_t f = index_.index_of(poly_mul(Q, index_.at(c)));
        if (factor_id_[f] == kUnset) {
          factor_id_[f] = static_cast<std::uint32_t>(irreducible_offset_[d] + i);
          factor_cofactor_[f] = static_cast<std::uint32_t>(c);
        }
      }
    }
  }

  // divisor-degree profiles from the factorization chains
  std::vector<int> id_degree(irreducible_count_);
  for (int d = 1; d <= 2 * g; ++d)
    for (std::size_t i = irreducible_offset_[d]; i < irreducible_offset_[d + 1]; ++i) id_degree[i] = d;
  profile_offset_.assign(index_.size() + 1, 0);
  for (std::size_t f = 0; f < index_.size(); ++f)
    profile_offset_[f + 1] = profile_offset_[f] + index_.degree_of(f) + 1;
  profile_data_.assign(profile_offset_.back(), 0);
  for (std::size_t f = 0; f < index_.size(); ++f) {
    std::map<std::uint32_t, int> mult;
    for (std::size_t x = f; x != 0; x = factor_cofactor_[x]) ++mult[factor_id_[x]];
    std::vector<std::uint32_t> prof{1};
    for (const auto& [id, e] : mult) {
      const int d = id_degree[id];
      std::vector<std::uint32_t> next(prof.size() + static_cast<std::size_t>(d * e), 0);
      for (std::size_t k = 0; k < prof.size(); ++k)
        for (int j = 0; j <= e; ++j) next[k + static_cast<std::size_t>(j * d)] += prof[k];
      prof = std::move(next);
    }
    std::copy(prof.begin(), prof.end(), profile_data_.begin() + static_cast<std::ptrdiff_t>(profile_offset_[f]));
  }

  // chi_P on irreducibles, then L-polynomials by Newton's identities
  prime_chars_.assign(primes_.size() * irreducible_count_, 0);
  lpolys_.resize(primes_.size());
  parallel_chunks(primes_.size(), workers_, workers_, [&](std::size_t b, std::size_t e, std::size_t) {
    SymbolKernel kernel(field);
    for (std::size_t p = b; p < e; ++p) {
      std::int8_t* row = prime_chars_.data() + p * irreducible_count_;
      std::vector<std::vector<std::int8_t>> by_degree(2 * g);
      for (int d = 1; d <= 2 * g; ++d) {
        for (std::size_t i = 0; i < irr[d]->size(); ++i) {
          const int v = kernel.symbol((*irr[d])[i].coeffs(), primes_[p].coeffs());
          row[irreducible_offset_[d] + i] = static_cast<std::int8_t>(v);
          by_degree[d - 1].push_back(static_cast<std::int8_t>(v));
        }
      }
      lpolys_[p] = l_polynomial_from_characters(q, g, by_degree);
    }
  });

  totals_ = twisted_character_totals(MonicPoly::one(q));
}

std::vector<std::int8_t> PrimeEnsemble::character_table(std::size_t p) const {
  std::vector<std::int8_t> chi(index_.size());
  const std::int8_t* row = prime_chars_.data() + p * irreducible_count_;
  chi[0] = 1;
  for (std::size_t f = 1; f < chi.size(); ++f)
    chi[f] = static_cast<std::int8_t>(row[factor_id_[f]] * chi[factor_cofactor_[f]]);
  return chi;
}

std::vector<std::int64_t> PrimeEnsemble::twisted_character_totals(const MonicPoly& l) const {
  if (l.modulus() != q_) throw std::invalid_argument("twisted_character_totals: field mismatch");
  if (l.degree() > 2 * g_) throw std::invalid_argument("twisted_character_totals: twist degree exceeds 2g");
  const std::size_t li = index_.index_of(l);
  // integer sums are exact, so the partition does not affect the result
  std::vector<std::vector<std::int64_t>> partial(workers_);
  parallel_chunks(primes_.size(), workers_, workers_, [&](std::size_t b, std::size_t e, std::size_t c) {
    std::vector<std::int64_t> acc(index_.size(), 0);
    for (std::size_t p = b; p < e; ++p) {
      const auto chi = character_table(p);
      const int w = chi[li];
      if (w == 0) continue;
      for (std::size_t f = 0; f < acc.size(); ++f) acc[f] += w * chi[f];
    }
    partial[c] = std::move(acc);
  });
  std::vector<std::int64_t> out(index_.size(), 0);
  for (const auto& part : partial)
    for (std::size_t f = 0; f < part.size(); ++f) out[f] += part[f];
  return out;
}

std::span<const std::uint32_t> PrimeEnsemble::divisor_profile(std::size_t f_index) const {
  return {profile_data_.data() + profile_offset_.at(f_index),
          profile_offset_.at(f_index + 1) - profile_offset_.at(f_index)};
}

}  // namespace ffm
