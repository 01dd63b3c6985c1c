#include "ffmoment/qsqrt.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace ffm {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRational& r) { return r.get_str(); }

BigRational parse_rational(const std::string& text) {
  BigRational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("bad rational '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_decimal(const BigRational& r, int significant_digits) {
  mpf_class f(0, 256);
  f = r;
  std::vector<char> buf(64 + significant_digits);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
  return buf.data();
}

const BigInt& factorial(unsigned n) {
  static std::mutex mu;
  static std::deque<BigInt> table{BigInt(1)};  // push_back keeps references valid
  std::lock_guard lock(mu);
  while (table.size() <= n) table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  return table[n];
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigRational pow(const BigRational& base, unsigned e) {
  BigRational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

BigInt pow(const BigInt& base, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

QSqrtValue::QSqrtValue(std::uint32_t q) : q_(q), rat_(0), surd_(0) {}

QSqrtValue::QSqrtValue(std::uint32_t q, BigRational rat, BigRational surd)
    : q_(q), rat_(std::move(rat)), surd_(std::move(surd)) {}

QSqrtValue QSqrtValue::q_power_neg_half(std::uint32_t q, long n) {
  // q^{-n/2}: n = 2k gives q^{-k}; n = 2k+1 gives q^{-k} * q^{-1/2}
  const long k = (n >= 0) ? n / 2 : -((-n + 1) / 2);
  const bool odd = (n - 2 * k) != 0;
  const BigInt qk = pow(BigInt(q), static_cast<unsigned>(k >= 0 ? k : -k));
  const BigRational scale = k >= 0 ? make_rational(1, qk) : BigRational(qk);
  return odd ? QSqrtValue(q, 0, scale) : QSqrtValue(q, scale, 0);
}

void QSqrtValue::check(const QSqrtValue& o) const {
  if (o.q_ != q_) throw std::invalid_argument("QSqrtValue: mixing different q");
}

QSqrtValue& QSqrtValue::operator+=(const QSqrtValue& o) {
  check(o);
  rat_ += o.rat_;
  surd_ += o.surd_;
  return *this;
}

QSqrtValue& QSqrtValue::operator-=(const QSqrtValue& o) {
  check(o);
  rat_ -= o.rat_;
  surd_ -= o.surd_;
  return *this;
}

QSqrtValue& QSqrtValue::operator*=(const QSqrtValue& o) {
  check(o);
  // (a + b s)(c + d s) = (ac + bd/q) + (ad + bc) s, s = q^{-1/2}
  BigRational r = rat_ * o.rat_ + surd_ * o.surd_ / BigRational(q_);
  BigRational s = rat_ * o.surd_ + surd_ * o.rat_;
  rat_ = std::move(r);
  surd_ = std::move(s);
  return *this;
}

QSqrtValue& QSqrtValue::operator*=(const BigRational& s) {
  rat_ *= s;
  surd_ *= s;
  return *this;
}

QSqrtValue& QSqrtValue::operator/=(const BigRational& s) {
  if (sgn(s) == 0) throw std::domain_error("QSqrtValue: division by zero");
  rat_ /= s;
  surd_ /= s;
  return *this;
}

QSqrtValue QSqrtValue::operator-() const { return QSqrtValue(q_, -rat_, -surd_); }

QSqrtValue QSqrtValue::conjugate() const { return QSqrtValue(q_, rat_, -surd_); }

BigRational QSqrtValue::norm() const { return rat_ * rat_ - surd_ * surd_ / BigRational(q_); }

int QSqrtValue::sign() const {
  const int a = sgn(rat_);
  const int b = sgn(surd_);
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  // opposite signs: compare a^2 with b^2 / q
  return sgn(norm()) > 0 ? a : b;
}

double QSqrtValue::to_double() const {
  return rat_.get_d() + surd_.get_d() / std::sqrt(static_cast<double>(q_));
}

std::string QSqrtValue::to_string() const {
  return ffm::to_string(rat_) + " + " + ffm::to_string(surd_) + "·√" + std::to_string(q_) + "⁻¹";
}

}  // namespace ffm
