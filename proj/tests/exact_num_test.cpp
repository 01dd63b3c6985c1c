#include <doctest.h>

#include <ffmoment/bigrational.hpp>
#include <ffmoment/exact.hpp>

using namespace ffm;

namespace {

// int_0^1 x^a (2-x)^b dx by repeated integration by parts
BigRational parts_integral(unsigned a, unsigned b) {
  if (b == 0) return make_rational(1, a + 1);
  return make_rational(1, a + 1) + make_rational(b, a + 1) * parts_integral(a + 1, b - 1);
}

BigRational a_oracle(unsigned m, unsigned n) {
  return (parts_integral(m + 1, n) + parts_integral(n + 1, m)) / BigRational(2 * (m + n + 3));
}

BigRational c_tilde_oracle(unsigned mu, unsigned nu) {
  BigRational s = ((mu + nu) % 2 ? -1 : 1) * a_oracle(mu, nu);
  for (unsigned m = 0; m <= mu; ++m)
    for (unsigned n = 0; n <= nu; ++n) {
      BigRational w = BigRational(binomial(mu, m) * binomial(nu, n) * pow(BigInt(2), mu + nu - m - n));
      if ((mu + nu - m - n) % 2) w = -w;
      s += w * a_oracle(m, n);
    }
  return s / BigRational(pow(BigInt(2), mu + nu + 3));
}

}  // namespace

TEST_CASE("BigRational helpers") {
  CHECK(make_rational(2, 4) == BigRational(1, 2));
  CHECK(make_rational(1, -2).get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK(to_string(make_rational(-3, 6)) == "-1/2");
  CHECK(to_string(BigRational(4)) == "4");
  CHECK(parse_rational("6/-4") == make_rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::exception);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(to_decimal(make_rational(1, 3), 5) == "0.33333");
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("zeta_q") {
  CHECK(zeta_q(3, 2) == make_rational(3, 2));
  CHECK(zeta_q(5, 2) == make_rational(5, 4));
  CHECK(zeta_q(3, 0) == make_rational(-1, 2));
  CHECK_THROWS(zeta_q(3, 1));
}

TEST_CASE("bernoulli_plus examples") {
  CHECK(bernoulli_plus(0) == 1);
  CHECK(bernoulli_plus(1) == make_rational(1, 2));
  CHECK(bernoulli_plus(2) == make_rational(1, 6));
  CHECK(bernoulli_plus(3) == 0);
  CHECK(bernoulli_plus(4) == make_rational(-1, 30));
  CHECK(bernoulli_plus(12) == make_rational(-691, 2730));
}

TEST_CASE("faulhaber examples") {
  CHECK(faulhaber(0, 5) == 5);
  CHECK(faulhaber(1, 4) == 10);
  CHECK(faulhaber(3, 3) == 36);
  CHECK(faulhaber(4, 0) == 0);
}

TEST_CASE("faulhaber matches direct summation for k <= 10, n <= 50") {
  for (unsigned k = 0; k <= 10; ++k)
    for (unsigned long n = 0; n <= 50; ++n) {
      BigInt direct = 0;
      for (unsigned long m = 1; m <= n; ++m) direct += pow(BigInt(m), k);
      CHECK(faulhaber(k, n) == BigRational(direct));
      CHECK(faulhaber_direct(k, n) == direct);
      CHECK(evaluate(faulhaber_polynomial(k), BigRational(n)) == BigRational(direct));
    }
}

TEST_CASE("a_coeff examples") {
  CHECK(a_coeff(0, 0) == make_rational(1, 6));
  CHECK(a_coeff(1, 0) == make_rational(1, 8));
  CHECK(a_coeff(0, 2) == make_rational(7, 60));
}

TEST_CASE("a_coeff symmetry, positivity and integration by parts") {
  for (unsigned m = 0; m <= 12; ++m)
    for (unsigned n = 0; n <= 12; ++n) {
      CHECK(a_coeff(m, n) == a_coeff(n, m));
      CHECK(sgn(a_coeff(m, n)) > 0);
      CHECK(a_coeff(m, n) == a_oracle(m, n));
      CHECK(power_integral(m, n) == parts_integral(m, n));
    }
}

TEST_CASE("c_tilde and c_coeff") {
  CHECK(c_tilde(0, 0) == make_rational(1, 24));
  CHECK(c_tilde(0, 2) == make_rational(1, 80));
  CHECK(c_coeff(0, 0, 3) == make_rational(1, 36));
  CHECK(c_coeff(0, 2, 5) == make_rational(1, 100));
  for (unsigned mu = 0; mu <= 6; ++mu)
    for (unsigned nu = 0; nu <= 6; ++nu) {
      CHECK(c_tilde(mu, nu) == c_tilde(nu, mu));
      CHECK(c_tilde(mu, nu) == c_tilde_oracle(mu, nu));
      for (std::uint32_t q : {3u, 5u, 7u}) CHECK(c_coeff(mu, nu, q) * zeta_q(q, 2) == c_tilde(mu, nu));
    }
}

TEST_CASE("b_sp quadruple sum") {
  CHECK(b_sp(0, 0) == make_rational(-1, 24));
  CHECK(b_sp(0, 2) == make_rational(-1, 80));
  CHECK(abs(b_sp(0, 2)) == make_rational(1, 80));
  for (unsigned n1 = 0; n1 <= 20; ++n1)
    for (unsigned n2 = 0; n2 <= 20; ++n2) CHECK(abs(c_tilde(n1, n2)) == abs(b_sp(n1, n2)));
}

TEST_CASE("verify_identity") {
  const auto r0 = verify_identity(0);
  REQUIRE(r0.pairs.size() == 1);
  CHECK(abs(r0.pairs[0].b_sp) == make_rational(1, 24));
  CHECK(r0.pairs[0].match);
  CHECK(r0.epsilon == GlobalSign::minus);

  const auto r2 = verify_identity(2);
  CHECK(r2.pairs.size() == 9);
  CHECK(r2.pairs[2].n1 == 0);
  CHECK(r2.pairs[2].n2 == 2);
  CHECK(abs(r2.pairs[2].b_sp) == make_rational(1, 80));

  const auto r20 = verify_identity(20, 4);
  CHECK(r20.pairs.size() == 441);
  CHECK(r20.epsilon == GlobalSign::minus);
  CHECK(r20.mismatches() == 0);
  CHECK(to_string(r20.epsilon) == "-1");
}

TEST_CASE("shifted power sum polynomial") {
  for (unsigned m = 0; m <= 4; ++m)
    for (unsigned n = 0; n <= 4; ++n) {
      const auto poly = shifted_power_sum_polynomial(m, n);
      REQUIRE(poly.size() == m + n + 2);
      CHECK(poly.back() == parts_integral(m, n));
      for (unsigned long j : {0ul, 1ul, 2ul, 7ul, 30ul}) {
        BigInt direct = 0;
        for (unsigned long k = 0; k < j; ++k) direct += pow(BigInt(k), m) * pow(BigInt(2 * j - k), n);
        CHECK(evaluate(poly, BigRational(j)) == BigRational(direct));
        CHECK(shifted_power_sum_direct(m, n, j) == direct);
      }
      // Riemann sum at j = 200 is within C/j of the integral
      const unsigned long j = 200;
      const BigRational riemann =
          BigRational(shifted_power_sum_direct(m, n, j)) / BigRational(pow(BigInt(j), m + n + 1));
      const BigRational gap = abs(riemann - parts_integral(m, n));
      CHECK(gap <= BigRational(pow(BigInt(2), n + 1)) / BigRational(j));
    }
}
