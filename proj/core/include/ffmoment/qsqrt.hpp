#pragma once

#include <cstdint>
#include <string>

#include "ffmoment/bigrational.hpp"

namespace ffm {

/// Exact element rat + surd * q^{-1/2} of Q(sqrt q), q prime.
///
/// Representation is unique because sqrt q is irrational, so equality is
/// componentwise. Mixing values with different q throws std::invalid_argument.
class QSqrtValue {
 public:
  explicit QSqrtValue(std::uint32_t q);
  QSqrtValue(std::uint32_t q, BigRational rat, BigRational surd = 0);

  /// q^{-n/2} for any integer n.
  static QSqrtValue q_power_neg_half(std::uint32_t q, long n);

  std::uint32_t q() const noexcept { return q_; }
  const BigRational& rat() const noexcept { return rat_; }
  const BigRational& surd() const noexcept { return surd_; }
  bool is_zero() const { return sgn(rat_) == 0 && sgn(surd_) == 0; }

  QSqrtValue& operator+=(const QSqrtValue& o);
  QSqrtValue& operator-=(const QSqrtValue& o);
  QSqrtValue& operator*=(const QSqrtValue& o);
  QSqrtValue& operator*=(const BigRational& s);
  QSqrtValue& operator/=(const BigRational& s);

  friend QSqrtValue operator+(QSqrtValue a, const QSqrtValue& b) { return a += b; }
  friend QSqrtValue operator-(QSqrtValue a, const QSqrtValue& b) { return a -= b; }
  friend QSqrtValue operator*(QSqrtValue a, const QSqrtValue& b) { return a *= b; }
  friend QSqrtValue operator*(QSqrtValue a, const BigRational& s) { return a *= s; }
  friend QSqrtValue operator*(const BigRational& s, QSqrtValue a) { return a *= s; }
  friend QSqrtValue operator/(QSqrtValue a, const BigRational& s) { return a /= s; }
  QSqrtValue operator-() const;

  friend bool operator==(const QSqrtValue& a, const QSqrtValue& b) {
    return a.q_ == b.q_ && a.rat_ == b.rat_ && a.surd_ == b.surd_;
  }

  /// Conjugate rat - surd * q^{-1/2}.
  QSqrtValue conjugate() const;
  /// Field norm rat^2 - surd^2 / q.
  BigRational norm() const;
  /// Exact sign of the real number rat + surd / sqrt(q).
  int sign() const;
  double to_double() const;
  /// "a + b·√q⁻¹" with exact rationals, e.g. "2 + 1·√3⁻¹".
  std::string to_string() const;

 private:
  void check(const QSqrtValue& o) const;

  std::uint32_t q_;
  BigRational rat_;
  BigRational surd_;
};

}  // namespace ffm
