#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace uaw {

using BigInt = boost::multiprecision::cpp_int;

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero in Q(q)") {}
};

/// Polynomial in q with arbitrary-precision integer coefficients.
/// Coefficients are stored in ascending degree with no trailing zeros,
/// so the empty vector is the zero polynomial.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(BigInt constant);
  static IntPoly monomial(BigInt coeff, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const;
  BigInt coeff(int degree) const;

  /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const;
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  IntPoly multiplied_by_int(const BigInt& n) const;
  /// Exact division; throws std::logic_error if the division leaves a remainder.
  IntPoly divided_exact(const IntPoly& divisor) const;
  IntPoly divided_by_int_exact(const BigInt& n) const;
  /// Coefficient-reversed polynomial q^deg * p(1/q).
  IntPoly reversed() const;
  IntPoly shifted_up(int k) const;  // multiply by q^k, k >= 0

  /// Primitive gcd with positive leading coefficient (primitive PRS).
  static IntPoly gcd(IntPoly a, IntPoly b);

  std::string str() const;  // e.g. "q^4-2*q^2+1", descending powers

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Element of the field Q(q), kept as a canonical fraction of integer
/// polynomials: gcd(num, den) = 1 including integer content, and the
/// denominator has positive leading coefficient.  Canonical form is unique,
/// so operator== is mathematical equality.
class QScalar {
 public:
  QScalar() : num_(), den_(BigInt(1)) {}  // zero
  QScalar(const IntPoly& num, const IntPoly& den);

  static QScalar integer(BigInt n);
  static QScalar one() { return integer(1); }
  /// c * q^k for any integer k (negative powers go to the denominator).
  static QScalar q_power(int k, BigInt c = BigInt(1));

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  QScalar operator-() const;
  friend QScalar operator+(const QScalar& a, const QScalar& b);
  friend QScalar operator-(const QScalar& a, const QScalar& b);
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend QScalar operator/(const QScalar& a, const QScalar& b);
  QScalar& operator+=(const QScalar& b) { return *this = *this + b; }
  QScalar& operator-=(const QScalar& b) { return *this = *this - b; }
  QScalar& operator*=(const QScalar& b) { return *this = *this * b; }
  friend bool operator==(const QScalar& a, const QScalar& b) = default;

  QScalar inverse() const;
  QScalar pow(int e) const;
  /// Substitute q -> 1/q and renormalize.  An involutive field automorphism.
  QScalar inverted_q() const;

  /// Canonical display: a Laurent polynomial in q when the denominator is a
  /// power of q (e.g. "q^3-q^-1"), otherwise "(num)/(den)".
  std::string str() const;

 public:
  /// True when the rendered scalar needs parentheses as a product factor
  /// (a sum or difference at the top level; '-' right after '^' is an
  /// exponent sign, not a subtraction).
  static bool needs_parens(const std::string& rendered);

 private:
  void canonicalize();
  IntPoly num_, den_;
};

}  // namespace uaw
