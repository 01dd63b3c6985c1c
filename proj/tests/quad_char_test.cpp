#include <doctest.h>

#include <random>

#include <ffmoment/enumerate.hpp>
#include <ffmoment/quad_char.hpp>

#include "oracles.hpp"

using namespace ffm;

TEST_CASE("quadratic_symbol examples") {
  const MonicPoly m = parse_monic(3, "101");
  CHECK(quadratic_symbol(parse_poly(3, "10"), m) == CharValue::plus_one);
  CHECK(quadratic_symbol(parse_poly(3, "11"), m) == CharValue::minus_one);
  CHECK(quadratic_symbol(poly_mul(m.poly(), parse_poly(3, "1201")), m) == CharValue::zero);
  CHECK(quadratic_symbol_euler(parse_poly(3, "10"), m) == CharValue::plus_one);
  CHECK(quadratic_symbol_euler(parse_poly(3, "11"), m) == CharValue::minus_one);
  CHECK_THROWS_AS(quadratic_symbol(parse_poly(3, "10"), MonicPoly::one(3)), std::domain_error);
  CHECK_THROWS_AS(quadratic_symbol_euler(parse_poly(3, "10"), MonicPoly::one(3)), std::domain_error);
}

TEST_CASE("constant numerators reduce to the Legendre symbol power") {
  // (c / P) = legendre(c)^{d(P)}
  for (const auto& P : enumerate_irreducibles(5, 3))
    for (std::uint32_t c = 1; c < 5; ++c)
      CHECK(to_int(quadratic_symbol(Poly::constant(5, c), P)) == field_for(5).legendre(c));
  for (const auto& P : enumerate_irreducibles(5, 2))
    for (std::uint32_t c = 1; c < 5; ++c) CHECK(quadratic_symbol(Poly::constant(5, c), P) == CharValue::plus_one);
}

TEST_CASE("reciprocity path matches the Euler criterion and the squares oracle") {
  for (std::uint32_t q : {3u, 5u}) {
    const int max_f = q == 3 ? 5 : 4;
    const int max_p = q == 3 ? 5 : 3;
    for (int dp = 1; dp <= max_p; ++dp)
      for (const auto& P : enumerate_irreducibles(q, dp))
        for (int df = 0; df <= max_f; ++df)
          for (const auto& f : enumerate_monic(q, df)) {
            const CharValue fast = quadratic_symbol(f, P);
            CHECK(fast == quadratic_symbol_euler(f, P));
            if (dp <= 2 && df <= 3) CHECK(to_int(fast) == oracle::symbol(oracle::of(f), oracle::of(P), q));
          }
  }
}

TEST_CASE("complete multiplicativity and squares") {
  std::mt19937 rng(99);
  for (std::uint32_t q : {3u, 5u})
    for (int dp = 1; dp <= 4; ++dp) {
      const auto& primes = enumerate_irreducibles(q, dp);
      for (int it = 0; it < 200; ++it) {
        const MonicPoly& P = primes[rng() % primes.size()];
        const MonicPoly f1 = monic_from_rank(q, static_cast<int>(rng() % 6), 0);
        const int d1 = static_cast<int>(rng() % 6), d2 = static_cast<int>(rng() % 6);
        const MonicPoly a = monic_from_rank(q, d1, rng() % checked_pow(q, d1));
        const MonicPoly b = monic_from_rank(q, d2, rng() % checked_pow(q, d2));
        (void)f1;
        CHECK(to_int(quadratic_symbol(poly_mul(a, b), P)) ==
              to_int(quadratic_symbol(a, P)) * to_int(quadratic_symbol(b, P)));
        if (!divides(P, a)) CHECK(quadratic_symbol(poly_mul(a, a), P) == CharValue::plus_one);
      }
    }
}

TEST_CASE("char_sum examples and tail vanishing") {
  for (int dp : {3, 5})
    for (const auto& P : enumerate_irreducibles(3, dp)) {
      const int g = (dp - 1) / 2;
      for (auto s : {CharSumStrategy::direct, CharSumStrategy::newton}) {
        CHECK(char_sum(P, 0, s) == 1);
        CHECK(char_sum(P, 2 * g, s) == static_cast<std::int64_t>(checked_pow(3, g)));
        CHECK(char_sum(P, 2 * g + 1, s) == 0);
        CHECK(char_sum(P, 2 * g + 2, s) == 0);
      }
    }
}

TEST_CASE("char_sum strategies agree with brute force") {
  for (std::uint32_t q : {3u, 5u})
    for (const auto& P : enumerate_irreducibles(q, 3)) {
      const auto direct = char_sums(P, 4, CharSumStrategy::direct);
      const auto newton = char_sums(P, 4, CharSumStrategy::newton);
      CHECK(direct == newton);
      for (int n = 0; n <= 3; ++n) {
        CHECK(direct[n] == oracle::char_sum(oracle::of(P), n, q));
        CHECK(std::abs(direct[n]) <= static_cast<std::int64_t>(checked_pow(q, n)));
      }
    }
  for (const auto& P : enumerate_irreducibles(3, 5))
    CHECK(char_sums(P, 6, CharSumStrategy::direct) == char_sums(P, 6, CharSumStrategy::newton));
}

TEST_CASE("prime_characters matches quadratic_symbol") {
  const MonicPoly P = parse_monic(3, "1021");
  const auto table = prime_characters(P, 3);
  REQUIRE(table.size() == 3);
  for (int d = 1; d <= 3; ++d) {
    const auto& Qs = enumerate_irreducibles(3, d);
    REQUIRE(table[d - 1].size() == Qs.size());
    for (std::size_t i = 0; i < Qs.size(); ++i) CHECK(table[d - 1][i] == to_int(quadratic_symbol(Qs[i], P)));
  }
}
