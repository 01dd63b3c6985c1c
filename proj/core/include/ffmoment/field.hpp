#pragma once

#include <cstdint>
#include <vector>

namespace ffm {

bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic in the prime field F_q, q an odd prime below 2^31.
///
/// Small fields (q <= 65536) carry inverse and quadratic-residue tables;
/// larger fields fall back to exponentiation.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }

  std::uint32_t reduce(std::int64_t a) const noexcept {
    std::int64_t r = a % static_cast<std::int64_t>(q_);
    return static_cast<std::uint32_t>(r < 0 ? r + q_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;

  /// Throws std::domain_error for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  /// Legendre symbol of a in F_q: 0, +1 or -1.
  int legendre(std::uint32_t a) const noexcept;

 private:
  std::uint32_t q_;
  std::vector<std::uint32_t> inv_table_;
  std::vector<std::int8_t> legendre_table_;
};

/// Shared immutable field instance for q (validated on first use).
const PrimeField& field_for(std::uint32_t q);

}  // namespace ffm
