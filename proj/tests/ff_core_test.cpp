#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include <ffmoment/enumerate.hpp>
#include <ffmoment/field.hpp>
#include <ffmoment/poly.hpp>

#include "oracles.hpp"

using namespace ffm;

namespace {

MonicPoly m3(const char* s) { return parse_monic(3, s); }
Poly p3(const char* s) { return parse_poly(3, s); }

Poly random_poly(std::mt19937& rng, std::uint32_t q, int max_deg) {
  std::uniform_int_distribution<int> deg(-1, max_deg);
  std::uniform_int_distribution<std::uint32_t> coef(0, q - 1);
  std::vector<std::uint32_t> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return Poly(q, c);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  CHECK(is_prime(3));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(2), std::invalid_argument);
  const PrimeField f(7);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.reduce(-1) == 6);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.legendre(a) == (f.pow(a, 3) == 1 ? 1 : -1));
  CHECK(f.legendre(0) == 0);
}

TEST_CASE("canonical strings") {
  const Poly p = p3("1021");
  CHECK(p.degree() == 3);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 2);
  CHECK(to_canonical(p) == "1021");
  CHECK(to_canonical(Poly(3)) == "0");
  CHECK(to_canonical(parse_poly(11, "1,0,10")) == "1,0,10");
  CHECK(parse_poly(11, "1,0,10").coeff(0) == 10);
  CHECK_THROWS_AS(parse_poly(3, "13"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(3, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_monic(3, "21"), std::invalid_argument);
}

TEST_CASE("poly_mul examples") {
  CHECK(to_canonical(poly_mul(p3("11"), p3("12"))) == "102");
  CHECK(poly_mul(m3("1021"), MonicPoly::one(3)) == m3("1021"));
  CHECK(to_canonical(poly_mul(p3("11"), p3("11"))) == "121");
  CHECK_THROWS_AS(poly_mul(p3("11"), parse_poly(5, "11")), std::invalid_argument);
  const MonicPoly prod = poly_mul(m3("11"), m3("102"));
  CHECK(prod.degree() == 3);
}

TEST_CASE("poly_rem examples") {
  CHECK(to_canonical(poly_rem(p3("10000"), p3("101"))) == "1");
  CHECK(poly_rem(p3("1021"), p3("1021")).is_zero());
  CHECK(to_canonical(poly_rem(p3("1000"), p3("101"))) == "20");
  CHECK_THROWS_AS(poly_rem(p3("1000"), Poly(3)), std::domain_error);
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(p3("2012"), p3("1021")) == m3("1021"));
  CHECK(poly_gcd(p3("102"), p3("11")) == m3("11"));
  CHECK(poly_gcd(p3("10"), p3("11")).is_one());
  CHECK_THROWS_AS(poly_gcd(Poly(3), Poly(3)), std::domain_error);
  CHECK(poly_gcd(Poly(3), p3("22")) == m3("11"));
}

TEST_CASE("Euclidean laws on random instances") {
  std::mt19937 rng(20240611);
  for (std::uint32_t q : {3u, 5u, 7u})
    for (int it = 0; it < 300; ++it) {
      const Poly a = random_poly(rng, q, 7);
      Poly b = random_poly(rng, q, 4);
      if (b.is_zero()) b = Poly::constant(q, 1);
      const auto [quo, rem] = poly_divmod(a, b);
      CHECK(poly_add(poly_mul(b, quo), rem) == a);
      CHECK(rem.degree() < b.degree());
      if (b.is_monic()) CHECK(oracle::of(rem) == oracle::mod(oracle::of(a), oracle::of(b), q));
      if (a.is_zero()) continue;
      const MonicPoly g = poly_gcd(a, b);
      CHECK(divides(g, a));
      CHECK(divides(g, b));
      const Poly c = random_poly(rng, q, 3);
      if (c.is_zero()) continue;
      const MonicPoly g2 = poly_gcd(poly_mul(a, c), poly_mul(b, c));
      CHECK(divides(make_monic(c), g2));
    }
}

TEST_CASE("remainder and product agree with the naive oracle") {
  std::mt19937 rng(7);
  for (int it = 0; it < 300; ++it) {
    const Poly a = random_poly(rng, 5, 8);
    const Poly r = random_poly(rng, 5, 4);
    if (r.is_zero()) continue;
    const MonicPoly m(make_monic(r));
    CHECK(oracle::of(poly_rem(a, m)) == oracle::mod(oracle::of(a), oracle::of(m), 5));
    CHECK(oracle::of(poly_mul(a, m)) == oracle::mul(oracle::of(a), oracle::of(m), 5));
  }
}

TEST_CASE("is_irreducible examples") {
  CHECK(is_irreducible(m3("10")));
  CHECK_FALSE(is_irreducible(m3("121")));
  CHECK(is_irreducible(m3("101")));
  CHECK_THROWS_AS(is_irreducible(MonicPoly::one(3)), std::domain_error);
}

TEST_CASE("irreducibility test matches trial division and the oracle") {
  for (std::uint32_t q : {3u, 5u}) {
    const int max_deg = q == 3 ? 6 : 4;
    for (int n = 1; n <= max_deg; ++n)
      for (const MonicPoly& f : enumerate_monic(q, n)) {
        const bool fast = is_irreducible(f);
        CHECK(fast == is_irreducible_by_trial_division(f));
        if (n <= 4) CHECK(fast == oracle::irreducible(oracle::of(f), q));
      }
  }
}

TEST_CASE("enumerate_monic") {
  const auto m0 = enumerate_monic(3, 0);
  REQUIRE(m0.size() == 1);
  CHECK(m0[0].is_one());
  const auto m1 = enumerate_monic(3, 1);
  REQUIRE(m1.size() == 3);
  CHECK(to_canonical(m1[0]) == "10");
  CHECK(to_canonical(m1[1]) == "11");
  CHECK(to_canonical(m1[2]) == "12");
  CHECK(enumerate_monic(3, 2).size() == 9);
  for (std::uint32_t q : {3u, 5u, 7u})
    for (int n = 0; n <= (q == 7 ? 4 : 6); ++n) {
      const auto all = enumerate_monic(q, n);
      CHECK(all.size() == checked_pow(q, n));
      std::set<std::string> names;
      for (const auto& f : all) names.insert(to_canonical(f));
      CHECK(names.size() == all.size());
      // lexicographic on the canonical string
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(to_canonical(all[i - 1]) < to_canonical(all[i]));
    }
}

TEST_CASE("MonicIndex round trip") {
  const MonicIndex idx(3, 4);
  CHECK(idx.size() == 1 + 3 + 9 + 27 + 81);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const MonicPoly f = idx.at(i);
    CHECK(idx.index_of(f) == i);
    CHECK(idx.degree_of(i) == f.degree());
  }
}

TEST_CASE("enumerate_irreducibles") {
  CHECK(enumerate_irreducibles(3, 1).size() == 3);
  const auto p2 = enumerate_irreducibles(3, 2);
  REQUIRE(p2.size() == 3);
  CHECK(to_canonical(p2[0]) == "101");
  CHECK(to_canonical(p2[1]) == "112");
  CHECK(to_canonical(p2[2]) == "122");
  CHECK(enumerate_irreducibles(3, 3).size() == 8);
  CHECK_THROWS_AS(enumerate_irreducibles(3, 0), std::domain_error);
  for (std::uint32_t q : {3u, 5u, 7u})
    for (int n = 1; n <= (q == 3 ? 6 : 4); ++n) {
      const auto ps = enumerate_irreducibles(q, n);
      CHECK(ps.size() == necklace_count(q, n));
      std::size_t brute = 0;
      for (const auto& f : enumerate_monic(q, n)) brute += is_irreducible_by_trial_division(f);
      CHECK(ps.size() == brute);
    }
}

TEST_CASE("square-free counts") {
  for (std::uint32_t q : {3u, 5u, 7u})
    for (int n = 0; n <= (q == 7 ? 4 : 6); ++n) {
      std::uint64_t count = 0;
      for (const auto& f : enumerate_monic(q, n)) count += is_squarefree(f);
      const std::uint64_t expect = n < 2 ? checked_pow(q, n) : checked_pow(q, n) - checked_pow(q, n - 1);
      CHECK(count == expect);
    }
}

TEST_CASE("squarefree_decompose examples") {
  auto d = squarefree_decompose(MonicPoly::one(3));
  CHECK(d.squarefree.is_one());
  CHECK(d.square_root.is_one());
  d = squarefree_decompose(m3("121"));
  CHECK(d.squarefree.is_one());
  CHECK(d.square_root == m3("11"));
  d = squarefree_decompose(poly_mul(m3("10"), m3("121")));
  CHECK(d.squarefree == m3("10"));
  CHECK(d.square_root == m3("11"));
  // p-th powers need the characteristic-aware path
  d = squarefree_decompose(poly_pow(m3("11"), 3));
  CHECK(d.squarefree == m3("11"));
  CHECK(d.square_root == m3("11"));
}

TEST_CASE("squarefree_decompose round trip over F_3 up to degree 6") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& l : enumerate_monic(3, n)) {
      const auto d = squarefree_decompose(l);
      CHECK(poly_mul(d.squarefree, poly_mul(d.square_root, d.square_root)) == l);
      CHECK(poly_gcd(d.squarefree, derivative(d.squarefree)).is_one());
      CHECK(is_square(l) == oracle::is_square(oracle::of(l), 3));
    }
}

TEST_CASE("factorize") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& f : enumerate_monic(3, n)) {
      MonicPoly prod = MonicPoly::one(3);
      for (const auto& [Q, e] : factorize(f, default_catalog())) {
        CHECK(is_irreducible(Q));
        prod = poly_mul(prod, poly_pow(Q, static_cast<unsigned>(e)));
      }
      CHECK(prod == f);
    }
}

TEST_CASE("irreducible catalog persists and reloads") {
  const auto dir = std::filesystem::temp_directory_path() / "ffmoment_catalog_test";
  std::filesystem::remove_all(dir);
  {
    IrreducibleCatalog cat(dir);
    CHECK(cat.get(3, 4).size() == 18);
    CHECK(cat.get(3, 4).size() == 18);
    const auto c = cat.counters();
    CHECK(c.computed == 1);
    CHECK(c.memory_hits == 1);
    std::ifstream in(cat.cache_file(3, 4));
    std::string header;
    std::getline(in, header);
    CHECK(header == "q=3 n=4 count=18");
  }
  {
    IrreducibleCatalog cat(dir);
    CHECK(cat.get(3, 4) == enumerate_irreducibles(3, 4));
    CHECK(cat.counters().disk_hits == 1);
    CHECK(cat.counters().computed == 0);
  }
  {
    // a truncated file is rejected and recomputed
    std::ofstream(dir / "irreducibles_q3_n3.txt") << "q=3 n=3 count=8\n1021\n";
    IrreducibleCatalog cat(dir);
    CHECK(cat.get(3, 3).size() == 8);
    CHECK(cat.counters().computed == 1);
  }
  std::filesystem::remove_all(dir);
}
