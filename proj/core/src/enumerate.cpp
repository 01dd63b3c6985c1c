#include "ffmoment/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ffmoment/field.hpp"

namespace ffm {

std::uint64_t checked_pow(std::uint64_t q, unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (r > (std::numeric_limits<std::uint64_t>::max() >> 1) / q)
      throw std::overflow_error("q^n exceeds 63 bits");
    r *= q;
  }
  return r;
}

MonicIndex::MonicIndex(std::uint32_t q, int max_degree) : q_(q), max_degree_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("MonicIndex: negative max degree");
  offsets_.push_back(0);
  for (int n = 0; n <= max_degree; ++n) offsets_.push_back(offsets_.back() + checked_pow(q, n));
}

int MonicIndex::degree_of(std::size_t index) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  if (it == offsets_.end()) throw std::out_of_range("MonicIndex: index out of range");
  return static_cast<int>(it - offsets_.begin()) - 1;
}

std::size_t MonicIndex::index_of(const MonicPoly& f) const {
  if (f.modulus() != q_) throw std::invalid_argument("MonicIndex: field mismatch");
  if (f.degree() > max_degree_) throw std::out_of_range("MonicIndex: degree too large");
  return offsets_[f.degree()] + monic_rank(f);
}

MonicPoly MonicIndex::at(std::size_t index) const {
  const int n = degree_of(index);
  return monic_from_rank(q_, n, index - offsets_[n]);
}

MonicPoly monic_from_rank(std::uint32_t q, int n, std::uint64_t rank) {
  std::vector<std::uint32_t> low(n, 0);
  for (int i = 0; i < n; ++i) {
    low[i] = static_cast<std::uint32_t>(rank % q);
    rank /= q;
  }
  return MonicPoly::from_low(q, std::move(low));
}

std::uint64_t monic_rank(const MonicPoly& f) {
  std::uint64_t r = 0;
  for (int i = f.degree() - 1; i >= 0; --i) r = r * f.modulus() + f.coeff(i);
  return r;
}

std::vector<MonicPoly> enumerate_monic(std::uint32_t q, int n) {
  if (n < 0) throw std::invalid_argument("enumerate_monic: negative degree");
  field_for(q);
  const std::uint64_t total = checked_pow(q, n);
  std::vector<MonicPoly> out;
  out.reserve(total);
  for (std::uint64_t r = 0; r < total; ++r) out.push_back(monic_from_rank(q, n, r));
  return out;
}

namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

std::uint64_t necklace_count(std::uint32_t q, int n) {
  if (n <= 0) throw std::domain_error("necklace_count: degree must be positive");
  std::int64_t total = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) total += moebius(d) * static_cast<std::int64_t>(checked_pow(q, n / d));
  return static_cast<std::uint64_t>(total / n);
}

std::vector<MonicPoly> enumerate_irreducibles(std::uint32_t q, int n) {
  if (n <= 0) throw std::domain_error("enumerate_irreducibles: degree must be positive");
  field_for(q);
  std::vector<MonicPoly> out;
  const std::uint64_t total = checked_pow(q, n);
  for (std::uint64_t r = 0; r < total; ++r) {
    MonicPoly f = monic_from_rank(q, n, r);
    if (n > 1 && f.coeff(0) == 0) continue;  // divisible by t
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

IrreducibleCatalog::IrreducibleCatalog(std::optional<std::filesystem::path> cache_dir)
    : dir_(std::move(cache_dir)) {}

std::filesystem::path IrreducibleCatalog::cache_file(std::uint32_t q, int n) const {
  if (!dir_) throw std::logic_error("IrreducibleCatalog: no cache directory configured");
  return *dir_ / ("irreducibles_q" + std::to_string(q) + "_n" + std::to_string(n) + ".txt");
}

std::optional<std::vector<MonicPoly>> IrreducibleCatalog::load(std::uint32_t q, int n) const {
  if (!dir_) return std::nullopt;
  std::ifstream in(cache_file(q, n));
  if (!in) return std::nullopt;
  std::string header;
  std::getline(in, header);
  std::uint32_t hq = 0;
  int hn = 0;
  std::uint64_t count = 0;
  if (std::sscanf(header.c_str(), "q=%u n=%d count=%lu", &hq, &hn, &count) != 3 || hq != q || hn != n)
    return std::nullopt;
  std::vector<MonicPoly> polys;
  std::string line;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      MonicPoly f = parse_monic(q, line);
      if (f.degree() != n) return std::nullopt;
      polys.push_back(std::move(f));
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (polys.size() != count || count != necklace_count(q, n)) return std::nullopt;
  return polys;
}

void IrreducibleCatalog::store(std::uint32_t q, int n, const std::vector<MonicPoly>& polys) const {
  if (!dir_) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  const auto path = cache_file(q, n);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << "q=" << q << " n=" << n << " count=" << polys.size() << '\n';
    for (const auto& f : polys) out << to_canonical(f) << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
}

const std::vector<MonicPoly>& IrreducibleCatalog::get(std::uint32_t q, int n) {
  if (n <= 0) throw std::domain_error("enumerate_irreducibles: degree must be positive");
  std::lock_guard lock(mu_);
  const auto key = std::make_pair(q, n);
  if (auto it = memo_.find(key); it != memo_.end()) {
    ++counters_.memory_hits;
    return *it->second;
  }
  std::vector<MonicPoly> polys;
  if (auto cached = load(q, n)) {
    ++counters_.disk_hits;
    polys = std::move(*cached);
  } else {
    ++counters_.computed;
    polys = enumerate_irreducibles(q, n);
    store(q, n, polys);
  }
  auto [it, inserted] = memo_.emplace(key, std::make_unique<const std::vector<MonicPoly>>(std::move(polys)));
  return *it->second;
}

IrreducibleCatalog::Counters IrreducibleCatalog::counters() const {
  std::lock_guard lock(mu_);
  return counters_;
}

IrreducibleCatalog& default_catalog() {
  static IrreducibleCatalog catalog;
  return catalog;
}

std::vector<std::pair<MonicPoly, int>> factorize(const MonicPoly& f, IrreducibleCatalog& catalog) {
  std::vector<std::pair<MonicPoly, int>> out;
  MonicPoly rest = f;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const auto& p : catalog.get(f.modulus(), d)) {
      int e = 0;
      while (rest.degree() >= d) {
        auto [quot, rem] = poly_divmod(rest.poly(), p.poly());
        if (!rem.is_zero()) break;
        rest = MonicPoly(std::move(quot));
        ++e;
      }
      if (e) out.emplace_back(p, e);
      if (2 * d > rest.degree()) break;
    }
  }
  if (!rest.is_one()) {
    auto pos = std::find_if(out.begin(), out.end(), [&](const auto& pr) { return pr.first == rest; });
    if (pos != out.end()) {
      ++pos->second;
    } else {
      out.emplace_back(rest, 1);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return monic_rank(a.first) < monic_rank(b.first);
  });
  return out;
}

}  // namespace ffm
