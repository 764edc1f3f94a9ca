#pragma once

#include <stdexcept>
#include <string>

#include "kostka/qpoly.hpp"

namespace kostka {

/// Reduced rational function in q. Canonical form: gcd(num, den) = 1 and the
/// denominator has positive leading coefficient, so equality is plain
/// structural equality.
class QRatFun {
 public:
  QRatFun() : num_(), den_(QPoly::one()) {}
  explicit QRatFun(QPoly num) : num_(std::move(num)), den_(QPoly::one()) {}
  explicit QRatFun(Rat constant) : num_(QPoly(std::move(constant))), den_(QPoly::one()) {}
  QRatFun(QPoly num, QPoly den);

  static QRatFun zero() { return QRatFun(); }
  static QRatFun one() { return QRatFun(QPoly::one()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// The numerator, requiring den == 1.
  const QPoly& as_polynomial() const;

  QRatFun operator+(const QRatFun& o) const;
  QRatFun operator-(const QRatFun& o) const;
  QRatFun operator-() const;
  QRatFun operator*(const QRatFun& o) const;
  QRatFun operator/(const QRatFun& o) const;
  QRatFun& operator+=(const QRatFun& o) { return *this = *this + o; }
  QRatFun& operator-=(const QRatFun& o) { return *this = *this - o; }
  QRatFun& operator*=(const QRatFun& o) { return *this = *this * o; }
  QRatFun& operator/=(const QRatFun& o) { return *this = *this / o; }
  bool operator==(const QRatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QRatFun& o) const { return !(*this == o); }

  /// "num / den", or just "num" when the denominator is 1.
  std::string to_string() const;
  static QRatFun parse(const std::string& text);

 private:
  void reduce();
  QPoly num_;
  QPoly den_;
};

}  // namespace kostka
