#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace lqk {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense univariate polynomial over the integers. Coefficient i is the
/// coefficient of t^i; the highest stored coefficient is nonzero, the zero
/// polynomial stores nothing.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(Int c);
  /// c * t^k
  static IntPoly monomial(Int c, unsigned k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i; zero beyond the degree.
  const Int& coeff(unsigned i) const;
  const Int& leading() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const Int& s);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(const Int& s, IntPoly a) { return a *= s; }
  friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }
  bool operator==(const IntPoly&) const = default;

  IntPoly derivative() const;
  /// Exact evaluation at a rational point.
  Rat eval(const Rat& x) const;
  Int eval(const Int& x) const;
  /// Sign of the value at x (-1, 0, +1) without building the quotient.
  int sign_at(const Rat& x) const;
  int sign_at_int(const Int& x) const;
  /// p(alpha*t + beta), exact.
  IntPoly compose_affine(const Int& alpha, const Int& beta) const;
  /// Coefficients reversed: t^deg * p(1/t). Requires nonzero constant term
  /// to preserve the degree.
  IntPoly reversed() const;

  /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  Int content() const;
  /// Divided by its content; leading sign preserved. Zero stays zero.
  IntPoly primitive_part() const;

  std::string to_string() const;

private:
  void normalize();
  std::vector<Int> coeffs_;
};

/// Remainder of a by b scaled by a positive integer: returns r with
/// s*a = q*b + r for some s > 0 and deg r < deg b. The positive scaling
/// keeps sign sequences usable for Sturm chains.
IntPoly pos_pseudo_rem(const IntPoly& a, const IntPoly& b);

/// Exact quotient when d divides p over the integers; false otherwise.
bool try_divide(const IntPoly& p, const IntPoly& d, IntPoly& quotient);

/// Primitive gcd with positive leading coefficient; gcd(0,0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// True iff gcd(p, p') is constant. Rejects the zero polynomial.
bool is_square_free(const IntPoly& p);

}  // namespace lqk
