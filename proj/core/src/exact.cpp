#include "ffmoment/exact.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

#include "ffmoment/parallel.hpp"

namespace ffm {

BigRational zeta_q(std::uint32_t q, int s) {
  if (s == 1) throw std::domain_error("zeta_q has a pole at s = 1");
  // 1 - q^{1-s}
  const BigRational qpow = s > 1 ? make_rational(1, pow(BigInt(q), static_cast<unsigned>(s - 1)))
                                 : BigRational(pow(BigInt(q), static_cast<unsigned>(1 - s)));
  return 1 / (1 - qpow);
}

BigRational bernoulli_plus(unsigned m) {
  static std::mutex mu;
  static std::deque<BigRational> minus{BigRational(1)};  // B_m with B_1 = -1/2
  std::lock_guard lock(mu);
  while (minus.size() <= m) {
    const unsigned next = static_cast<unsigned>(minus.size());
    BigRational acc = 0;
    for (unsigned k = 0; k < next; ++k) acc += BigRational(binomial(next + 1, k)) * minus[k];
    BigRational b = -acc / BigRational(next + 1);
    minus.push_back(b);
  }
  return m == 1 ? BigRational(1, 2) : minus[m];
}

std::vector<BigRational> faulhaber_polynomial(unsigned k) {
  std::vector<BigRational> coeffs(k + 2, 0);
  for (unsigned m = 0; m <= k; ++m)
    coeffs[k + 1 - m] = BigRational(binomial(k + 1, m)) * bernoulli_plus(m) / BigRational(k + 1);
  return coeffs;
}

BigRational evaluate(const std::vector<BigRational>& coeffs, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRational faulhaber(unsigned k, unsigned long n) {
  return evaluate(faulhaber_polynomial(k), BigRational(BigInt(n)));
}

BigInt faulhaber_direct(unsigned k, unsigned long n) {
  BigInt acc = 0;
  for (unsigned long m = 1; m <= n; ++m) acc += pow(BigInt(m), k);
  return acc;
}

BigRational power_integral(unsigned a, unsigned b) {
  // (2 - x)^b = sum_i C(b,i) 2^{b-i} (-x)^i
  BigRational acc = 0;
  for (unsigned i = 0; i <= b; ++i) {
    BigInt w = binomial(b, i) * pow(BigInt(2), b - i);
    if (i % 2) w = -w;
    acc += make_rational(w, BigInt(a + i + 1));
  }
  return acc;
}

BigRational a_coeff(unsigned m, unsigned n) {
  return (power_integral(m + 1, n) + power_integral(n + 1, m)) / BigRational(2 * (m + n + 3));
}

BigRational c_tilde(unsigned mu, unsigned nu) {
  BigRational bracket = a_coeff(mu, nu);
  if ((mu + nu) % 2) bracket = -bracket;
  for (unsigned m = 0; m <= mu; ++m)
    for (unsigned n = 0; n <= nu; ++n)
      bracket += BigRational(binomial(mu, m) * binomial(nu, n) * pow(BigInt(-2), mu + nu - m - n)) * a_coeff(m, n);
  return bracket / BigRational(pow(BigInt(2), mu + nu + 3));
}

BigRational c_coeff(unsigned mu, unsigned nu, std::uint32_t q) {
  return c_tilde(mu, nu) / zeta_q(q, 2);
}

BigRational b_sp(unsigned n1, unsigned n2) {
  BigRational sum = 0;
  for (unsigned l1 = 0; 2 * l1 <= n1; ++l1)
    for (unsigned l2 = 0; 2 * l1 + 2 * l2 <= n1; ++l2)
      for (unsigned m1 = 0; 2 * m1 <= n2; ++m1)
        for (unsigned m2 = 0; 2 * m1 + 2 * m2 <= n2; ++m2) {
          const long numer = 2L * l2 + 2L * m2 - 2L * l1 - 2L * m1 - 2L;
          const BigInt denom = factorial(n1 - 2 * l1 - 2 * l2) * factorial(n2 - 2 * m1 - 2 * m2) *
                               factorial(2 * l1 + 2 * m1 + 3) * factorial(2 * l2 + 2 * m2 + 1);
          sum += make_rational(BigInt(numer), denom);
        }
  BigRational prefactor = make_rational(factorial(n1) * factorial(n2), pow(BigInt(2), n1 + n2 + 3));
  if ((n1 + n2) % 2) prefactor = -prefactor;
  return prefactor * sum;
}

std::vector<BigRational> shifted_power_sum_polynomial(unsigned m, unsigned n) {
  std::vector<BigRational> out(m + n + 2, 0);
  for (unsigned i = 0; i <= n; ++i) {
    // sum_{k=0}^{j-1} k^p = J_p(j) - j^p + [p == 0]
    const unsigned p = m + i;
    std::vector<BigRational> s = faulhaber_polynomial(p);
    s[p] -= 1;
    if (p == 0) s[0] += 1;
    BigInt w = binomial(n, i) * pow(BigInt(2), n - i);
    if (i % 2) w = -w;
    const BigRational wr(w);
    for (std::size_t e = 0; e < s.size(); ++e) out[e + n - i] += wr * s[e];
  }
  return out;
}

BigInt shifted_power_sum_direct(unsigned m, unsigned n, unsigned long j) {
  BigInt acc = 0;
  for (unsigned long k = 0; k < j; ++k) acc += pow(BigInt(k), m) * pow(BigInt(2 * j - k), n);
  return acc;
}

std::string to_string(GlobalSign s) {
  switch (s) {
    case GlobalSign::plus:
      return "+1";
    case GlobalSign::minus:
      return "-1";
    default:
      return "inconsistent";
  }
}

std::size_t CoeffGridReport::mismatches() const noexcept {
  std::size_t n = 0;
  for (const auto& p : pairs) n += p.match ? 0 : 1;
  return n;
}

CoeffGridReport verify_identity(unsigned max_order, unsigned workers) {
  const std::size_t side = max_order + 1;
  auto pairs = parallel_map<CoeffPairRecord>(side * side, workers, [&](std::size_t i) {
    CoeffPairRecord r;
    r.n1 = static_cast<unsigned>(i / side);
    r.n2 = static_cast<unsigned>(i % side);
    r.c_tilde = c_tilde(r.n1, r.n2);
    r.b_sp = b_sp(r.n1, r.n2);
    return r;
  });
  std::size_t plus_hits = 0, minus_hits = 0;
  for (const auto& r : pairs) {
    plus_hits += r.c_tilde == r.b_sp;
    minus_hits += r.c_tilde == -r.b_sp;
  }
  CoeffGridReport report;
  report.max_order = max_order;
  if (plus_hits == pairs.size()) {
    report.epsilon = GlobalSign::plus;
  } else if (minus_hits == pairs.size()) {
    report.epsilon = GlobalSign::minus;
  }
  // Match flags use the resolved sign, or the better-supported one when unresolved.
  const bool use_minus = report.epsilon == GlobalSign::minus ||
                         (report.epsilon == GlobalSign::inconsistent && minus_hits > plus_hits);
  for (auto& r : pairs) r.match = use_minus ? r.c_tilde == -r.b_sp : r.c_tilde == r.b_sp;
  report.pairs = std::move(pairs);
  return report;
}

}  // namespace ffm
