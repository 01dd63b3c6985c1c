#include "ffmoment/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace ffm {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {
constexpr std::uint32_t kTableLimit = 65536;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q < 3 || q % 2 == 0 || !is_prime(q) || q >= (1u << 31))
    throw std::invalid_argument("modulus must be an odd prime below 2^31, got " +
                                std::to_string(q));
  if (q <= kTableLimit) {
    inv_table_.assign(q, 0);
    legendre_table_.assign(q, -1);
    legendre_table_[0] = 0;
    for (std::uint32_t a = 1; a < q; ++a) {
      legendre_table_[mul(a, a)] = 1;
      if (inv_table_[a] == 0) {
        std::uint32_t b = pow(a, q - 2);
        inv_table_[a] = b;
        inv_table_[b] = a;
      }
    }
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint64_t r = 1 % q_;
  std::uint64_t x = a % q_;
  while (e) {
    if (e & 1) r = r * x % q_;
    x = x * x % q_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  a %= q_;
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

int PrimeField::legendre(std::uint32_t a) const noexcept {
  a %= q_;
  if (!legendre_table_.empty()) return legendre_table_[a];
  if (a == 0) return 0;
  return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

const PrimeField& field_for(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<PrimeField>> fields;
  std::lock_guard lock(mu);
  auto it = fields.find(q);
  if (it == fields.end())
    it = fields.emplace(q, std::make_unique<PrimeField>(q)).first;
  return *it->second;
}

}  // namespace ffm
