#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "ffmoment/poly.hpp"

namespace ffm {

/// q^n, throwing std::overflow_error if it does not fit in 63 bits.
std::uint64_t checked_pow(std::uint64_t q, unsigned n);

/// Bijection between the monic polynomials of degree <= max_degree and
/// [0, size()). Within a degree, rank order equals lexicographic order of the
/// canonical string; lower degrees come first.
class MonicIndex {
 public:
  MonicIndex(std::uint32_t q, int max_degree);

  std::uint32_t modulus() const noexcept { return q_; }
  int max_degree() const noexcept { return max_degree_; }
  std::size_t size() const noexcept { return offsets_.back(); }
  /// First index of degree n; offset(max_degree + 1) == size().
  std::size_t offset(int n) const { return offsets_.at(static_cast<std::size_t>(n)); }
  std::size_t count(int n) const { return offset(n + 1) - offset(n); }
  int degree_of(std::size_t index) const;
  std::size_t index_of(const MonicPoly& f) const;
  MonicPoly at(std::size_t index) const;

 private:
  std::uint32_t q_;
  int max_degree_;
  std::vector<std::size_t> offsets_;
};

/// The rank-th monic polynomial of degree n in lexicographic order.
MonicPoly monic_from_rank(std::uint32_t q, int n, std::uint64_t rank);
/// Rank of f within its degree.
std::uint64_t monic_rank(const MonicPoly& f);

/// All q^n monic polynomials of degree n, lexicographic on the canonical string.
std::vector<MonicPoly> enumerate_monic(std::uint32_t q, int n);

/// (1/n) sum_{d | n} mu(d) q^{n/d}; throws std::domain_error for n == 0.
std::uint64_t necklace_count(std::uint32_t q, int n);

/// Monic irreducibles of degree n in lexicographic order, by sieving 𝓜_n with
/// the distinct-degree test. Throws std::domain_error for n == 0.
std::vector<MonicPoly> enumerate_irreducibles(std::uint32_t q, int n);

/// Memoized irreducible lists, optionally persisted as one file per (q, n):
///
///   q=<q> n=<n> count=<count>
///   <canonical string>
///   ...
///
/// Thread-safe. Returned references stay valid for the catalog's lifetime.
class IrreducibleCatalog {
 public:
  explicit IrreducibleCatalog(std::optional<std::filesystem::path> cache_dir = std::nullopt);

  const std::vector<MonicPoly>& get(std::uint32_t q, int n);

  const std::optional<std::filesystem::path>& cache_dir() const noexcept { return dir_; }
  std::filesystem::path cache_file(std::uint32_t q, int n) const;

  struct Counters {
    std::uint64_t memory_hits = 0;
    std::uint64_t disk_hits = 0;
    std::uint64_t computed = 0;
  };
  Counters counters() const;

 private:
  std::optional<std::vector<MonicPoly>> load(std::uint32_t q, int n) const;
  void store(std::uint32_t q, int n, const std::vector<MonicPoly>& polys) const;

  std::optional<std::filesystem::path> dir_;
  mutable std::mutex mu_;
  std::map<std::pair<std::uint32_t, int>, std::unique_ptr<const std::vector<MonicPoly>>> memo_;
  Counters counters_;
};

/// Process-wide in-memory catalog used when callers do not supply one.
IrreducibleCatalog& default_catalog();

/// Factorization into monic irreducibles with multiplicities, ascending by
/// degree then lexicographically. Uses trial division by catalog entries.
std::vector<std::pair<MonicPoly, int>> factorize(const MonicPoly& f, IrreducibleCatalog& catalog);

}  // namespace ffm
