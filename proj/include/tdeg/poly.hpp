#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "tdeg/rational.hpp"

namespace tdeg {

/// Univariate polynomial over the rationals in the monomial basis.
/// coeffs()[i] is the coefficient of n^i; trailing zeros are trimmed, so
/// the zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

  static Poly constant(const Rat& c);
  /// c * n^power
  static Poly monomial(const Rat& c, int power);
  /// (a*n + b)^power
  static Poly linear_power(const Rat& a, const Rat& b, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int i) const;
  Rat leading() const;

  Rat operator()(const Integer& n) const;
  Rat operator()(const Rat& x) const;
  Rat operator()(long n) const { return (*this)(Integer(n)); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const { return *this * Rat(-1); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

/// n -> p(n + k), expanded with binomial coefficients.
Poly shift(const Poly& p, const Integer& k);

/// n -> p(a*n + b).
Poly affine(const Poly& p, const Rat& a, const Rat& b);

/// Coefficients of p in the basis C(n,0), C(n,1), ..., C(n,deg p):
/// the forward differences of p at 0.
std::vector<Rat> binomial_basis(const Poly& p);

/// True iff p(n) is an integer for every natural n. Decided by checking
/// that every binomial-basis coefficient is an integer.
bool is_integer_valued(const Poly& p);

/// Least positive integer D such that D*p is integer-valued.
Integer integer_valued_scale(const Poly& p);

/// Human-readable form, e.g. "8n^3 + 12n^2 + 6n + 1".
std::string to_string(const Poly& p);

}  // namespace tdeg
