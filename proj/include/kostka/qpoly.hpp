#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "kostka/rational.hpp"

namespace kostka {

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};

/// Polynomial in the single variable q with exact rational coefficients,
/// stored lowest degree first. The convention q^2 = t is used throughout:
/// quantities the literature writes in t live here with doubled exponents.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(Rat constant);
  explicit QPoly(std::vector<Rat> coeffs);
  QPoly(std::initializer_list<Rat> coeffs);

  static QPoly zero() { return QPoly(); }
  static QPoly one() { return QPoly(Rat(1)); }
  /// q^k with coefficient c.
  static QPoly monomial(const Rat& c, int k);
  /// t^k = q^{2k} with coefficient c.
  static QPoly t_monomial(const Rat& c, int k);
  /// Builds from coefficients of t (even q-exponents).
  static QPoly from_t_coeffs(const std::vector<Rat>& tcoeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// Degree in q; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int k) const;
  /// Coefficient of t^k, requiring the odd q-part to vanish.
  Rat t_coeff(int k) const { return coeff(2 * k); }
  Rat leading() const;
  /// True if every odd q-coefficient vanishes (a genuine polynomial in t).
  bool is_even() const;
  /// True if all coefficients are nonnegative integers.
  bool has_nonneg_int_coeffs() const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  QPoly scaled(const Rat& c) const;
  /// Substitutes q -> q^k (k >= 1); t -> t^k when applied to even polynomials
  /// with k applied in q. For the substitution t -> t^2 use power_substitute(2) on
  /// an even polynomial.
  QPoly power_substitute(int k) const;

  /// Exact evaluation at a rational point.
  Rat evaluate(const Rat& q) const;

  /// Euclidean division; throws DivisionByZero if divisor is zero.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
  /// Monic gcd.
  static QPoly gcd(QPoly a, QPoly b);

  /// "c0 + c1*q + c2*q^2" with exact rationals as "a/b"; zero terms omitted;
  /// the zero polynomial prints as "0". Round-trips through parse().
  std::string to_string() const;
  static QPoly parse(const std::string& text);

  /// Rendering in t for even polynomials ("1 + 2*t^2"); var_q = true falls
  /// back to the q form.
  std::string pretty(bool var_q = false) const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

QPoly operator*(const Rat& c, const QPoly& p);

}  // namespace kostka
