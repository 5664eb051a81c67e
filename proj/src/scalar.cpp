#include "uaw/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace uaw {

namespace {

BigInt int_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

IntPoly::IntPoly(BigInt constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

IntPoly IntPoly::monomial(BigInt coeff, int degree) {
  IntPoly p;
  if (coeff.is_zero()) return p;
  p.coeffs_.assign(degree + 1, BigInt(0));
  p.coeffs_[degree] = std::move(coeff);
  return p;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BigInt& IntPoly::leading() const {
  assert(!coeffs_.empty());
  return coeffs_.back();
}

BigInt IntPoly::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return BigInt(0);
  return coeffs_[degree];
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  BigInt g = content();
  if (g.is_zero() || g == 1) return *this;
  return divided_by_int_exact(g);
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  r.trim();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

IntPoly IntPoly::multiplied_by_int(const BigInt& n) const {
  if (n.is_zero()) return IntPoly();
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c *= n;
  return r;
}

IntPoly IntPoly::divided_exact(const IntPoly& divisor) const {
  assert(!divisor.is_zero());
  IntPoly rem = *this;
  IntPoly quot;
  if (rem.is_zero()) return quot;
  int dq = rem.degree() - divisor.degree();
  if (dq < 0) throw std::logic_error("IntPoly: inexact division");
  quot.coeffs_.assign(dq + 1, BigInt(0));
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    BigInt c = rem.leading() / divisor.leading();
    if (c * divisor.leading() != rem.leading())
      throw std::logic_error("IntPoly: inexact division");
    int d = rem.degree() - divisor.degree();
    quot.coeffs_[d] = c;
    rem = rem - divisor.multiplied_by_int(c).shifted_up(d);
  }
  if (!rem.is_zero()) throw std::logic_error("IntPoly: inexact division");
  quot.trim();
  return quot;
}

IntPoly IntPoly::divided_by_int_exact(const BigInt& n) const {
  assert(!n.is_zero());
  IntPoly r = *this;
  for (auto& c : r.coeffs_) {
    BigInt d = c / n;
    if (d * n != c) throw std::logic_error("IntPoly: inexact integer division");
    c = d;
  }
  return r;
}

IntPoly IntPoly::reversed() const {
  IntPoly r = *this;
  std::reverse(r.coeffs_.begin(), r.coeffs_.end());
  r.trim();
  return r;
}

IntPoly IntPoly::shifted_up(int k) const {
  assert(k >= 0);
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.coeffs_.assign(coeffs_.size() + k, BigInt(0));
  std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + k);
  return r;
}

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.is_zero()) std::swap(a, b);
  while (!b.is_zero()) {
    // pseudo-remainder of a by b, then strip content
    IntPoly rem = a;
    int shift = rem.degree() - b.degree();
    if (shift < 0) {
      std::swap(a, b);
      continue;
    }
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      int d = rem.degree() - b.degree();
      IntPoly t = b.multiplied_by_int(rem.leading()).shifted_up(d);
      rem = rem.multiplied_by_int(b.leading()) - t;
    }
    a = b;
    b = rem.primitive_part();
  }
  if (a.is_zero()) return a;
  if (a.leading() < 0) a = -a;
  return a;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const BigInt& c = coeffs_[d];
    if (c.is_zero()) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? "-" : "+");
    }
    if (d == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << "q";
      if (d != 1) out << "^" << d;
    }
  }
  return out.str();
}

QScalar::QScalar(const IntPoly& num, const IntPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

void QScalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(BigInt(1));
    return;
  }
  BigInt cn = num_.content();
  BigInt cd = den_.content();
  IntPoly np = num_.divided_by_int_exact(cn);
  IntPoly dp = den_.divided_by_int_exact(cd);
  IntPoly g = IntPoly::gcd(np, dp);
  if (!g.is_zero() && g.degree() >= 0 && !(g.degree() == 0 && g.leading() == 1)) {
    np = np.divided_exact(g);
    dp = dp.divided_exact(g);
  }
  BigInt ig = int_gcd(cn, cd);
  cn /= ig;
  cd /= ig;
  num_ = np.multiplied_by_int(cn);
  den_ = dp.multiplied_by_int(cd);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QScalar QScalar::integer(BigInt n) {
  QScalar s;
  s.num_ = IntPoly(std::move(n));
  s.den_ = IntPoly(BigInt(1));
  return s;
}

QScalar QScalar::q_power(int k, BigInt c) {
  QScalar s;
  if (c.is_zero()) return s;
  if (k >= 0) {
    s.num_ = IntPoly::monomial(std::move(c), k);
    s.den_ = IntPoly(BigInt(1));
  } else {
    s.num_ = IntPoly(std::move(c));
    s.den_ = IntPoly::monomial(BigInt(1), -k);
    s.canonicalize();
  }
  return s;
}

bool QScalar::is_one() const {
  return num_.degree() == 0 && num_.leading() == 1 && den_.degree() == 0 &&
         den_.leading() == 1;
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QScalar operator+(const QScalar& a, const QScalar& b) {
  return QScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }

QScalar operator*(const QScalar& a, const QScalar& b) {
  if (a.is_zero() || b.is_zero()) return QScalar();
  return QScalar(a.num_ * b.num_, a.den_ * b.den_);
}

QScalar operator/(const QScalar& a, const QScalar& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return QScalar();
  return QScalar(a.num_ * b.den_, a.den_ * b.num_);
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return QScalar(den_, num_);
}

QScalar QScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QScalar r = QScalar::one();
  QScalar base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

QScalar QScalar::inverted_q() const {
  if (is_zero()) return *this;
  int dn = num_.degree();
  int dd = den_.degree();
  int m = std::max(dn, dd);
  // multiply num and den by q^m, then substitute q -> 1/q:
  // q^m num(1/q) = reversed(num) * q^(m-dn), likewise for den.
  IntPoly n2 = num_.reversed().shifted_up(m - dn);
  IntPoly d2 = den_.reversed().shifted_up(m - dd);
  return QScalar(n2, d2);
}

bool QScalar::needs_parens(const std::string& rendered) {
  for (size_t i = 0; i < rendered.size(); ++i) {
    char c = rendered[i];
    if (c == '+') return true;
    if (c == '-' && i > 0 && rendered[i - 1] != '^') return true;
  }
  return false;
}

std::string QScalar::str() const {
  if (is_zero()) return "0";
  // When the denominator is c*q^k, render as a Laurent polynomial.
  bool den_monomial = true;
  for (int d = 0; d < den_.degree(); ++d)
    if (!den_.coeff(d).is_zero()) {
      den_monomial = false;
      break;
    }
  if (den_monomial) {
    int shift = den_.degree();
    BigInt dlead = den_.leading();  // positive by canonical form
    std::ostringstream out;
    bool first = true;
    for (int d = num_.degree(); d >= 0; --d) {
      BigInt c = num_.coeff(d);
      if (c.is_zero()) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? "-" : "+");
      }
      int e = d - shift;
      BigInt g = int_gcd(mag, dlead);
      BigInt a = mag / g, b = dlead / g;
      bool unit_coeff = (a == 1 && b == 1);
      if (e == 0) {
        out << a.str();
        if (b != 1) out << "/" << b.str();
      } else {
        if (!unit_coeff) {
          out << a.str();
          if (b != 1) out << "/" << b.str();
          out << "*";
        }
        out << "q";
        if (e != 1) out << "^" << e;
      }
    }
    return out.str();
  }
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace uaw
