#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "uaw/parser.hpp"
#include "uaw/rewrite.hpp"

namespace uaw {

struct UnknownName : std::runtime_error {
  explicit UnknownName(const std::string& n)
      : std::runtime_error("unknown derived element " + n) {}
};
struct AxisError : std::runtime_error {
  AxisError() : std::runtime_error("polynomial is not supported on a single axis") {}
};
struct NotInT : std::runtime_error {
  NotInT() : std::runtime_error("element is not supported on the subalgebra T") {}
};

/// Which of the two shipped algebras a spec instantiates.
enum class AlgebraName { DeltaQ, HhatQ };

/// A presented algebra: alphabet in basis order, confluent rule set, and the
/// exponent pattern of its irreducible words.
struct AlgebraSpec {
  AlgebraName name;
  std::string display_name;  // "delta-q", "hhat-q" (plus "-qinv" variants)
  AlphabetPtr alphabet;
  RewriteSystem system;

  NCPoly normalize(const NCPoly& p, long fuel = kDefaultFuel) const {
    return system.normalize(p, fuel);
  }
  NCPoly parse(const std::string& text) const;
  ParseContext parse_context() const;

  /// Number of irreducible words of length exactly len, from the basis
  /// exponent pattern (not from enumeration).
  long basis_count_exact(int len) const;
};

/// Generator ids in basis order.  Delta_q: A, C, B, Omega, alpha, beta, gamma.
namespace delta_gen {
inline constexpr GenId A = 0, C = 1, B = 2, Omega = 3, alpha = 4, beta = 5, gamma = 6;
}
/// Hhat_q: Y, Y^-1, X, X^-1, t0, T0, T1, T2, T3.
namespace hhat_gen {
inline constexpr GenId Y = 0, Yi = 1, X = 2, Xi = 3, t0 = 4, T0 = 5, T1 = 6, T2 = 7,
                       T3 = 8;
}

/// The universal Askey-Wilson algebra: 4 first-kind rules and 18 second-kind
/// centrality rules; 22 forbidden words in total.
const AlgebraSpec& delta_q();

/// The universal DAHA of type (C1v, C1) on the balanced generators
/// X^{+-1}, Y^{+-1}, t0, T0..T3; 39 forbidden words.
const AlgebraSpec& hhat_q();

/// Sibling algebra with every rule coefficient passed through q -> 1/q.
AlgebraSpec twisted_spec(const AlgebraSpec& spec);

/// Named derived elements in normal form: in hhat-q the images A, B, C, the
/// central alpha/beta/gamma/Omega, theta, t1..t3, t0^-1 ("t0inv"), C0..C3;
/// in delta-q the balanced generators themselves.
NCPoly derived(const std::string& name, const AlgebraSpec& spec);

/// All irreducible words of length <= max_len in graded order.
std::vector<Word> enumerate_basis(const AlgebraSpec& spec, int max_len);
/// Only the words of length exactly len.
std::vector<Word> enumerate_basis_exact(const AlgebraSpec& spec, int len);

/// Laurent fold: p supported on powers of one axis letter is rewritten as
/// f(S) + axis * g(S) where S = axis + axis^-1 (A for Y, B for X), via
/// Y^-1 = A - Y and Y^{n+1} = A Y^n - Y^{n-1}.  Coefficient vectors are
/// ascending in powers of S.
struct AxisFold {
  std::vector<QScalar> even;  // f
  std::vector<QScalar> odd;   // g
};
enum class Axis { X, Y };
AxisFold fold_laurent(Axis axis, const NCPoly& p, const AlgebraSpec& spec);
/// Rebuild the element f(S) + axis * g(S) as a normal-form NCPoly.
NCPoly unfold_laurent(Axis axis, const AxisFold& fold, const AlgebraSpec& spec);

/// Element of the commutative subalgebra T = <t0^{+-1}, T1, T2, T3> in the
/// basis t0^k T1^r T2^s T3^t with k in Z: exponent tuple (k, r, s, t).
class TPoly {
 public:
  using Key = std::array<int, 4>;

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, QScalar>& terms() const { return terms_; }
  void add_term(const Key& k, const QScalar& c);

  TPoly operator-() const;
  friend TPoly operator+(const TPoly& a, const TPoly& b);
  friend TPoly operator-(const TPoly& a, const TPoly& b);
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly operator*(const QScalar& c) const;
  friend bool operator==(const TPoly& a, const TPoly& b) = default;

  std::string str() const;  // e.g. "-q^-1*t0^-1*T3"

 private:
  std::map<Key, QScalar> terms_;
};

/// Conversion between the two T bases: normal-form words t0^k T0^l T1^r T2^s
/// T3^t (k in {0,1}) and the Laurent form t0^k T1^r T2^s T3^t (k in Z),
/// using T0 = t0 + t0^-1 one way and t0^-1 = T0 - t0, t0^2 = t0 T0 - 1 back.
/// Throws NotInT when p is not supported on T letters.
TPoly to_t_laurent(const NCPoly& p, const AlgebraSpec& spec);
NCPoly from_t_laurent(const TPoly& t, const AlgebraSpec& spec);
/// Parses a T-expression such as "-q^-1*t0^-1*T3 + T1" directly to a TPoly.
TPoly parse_t_laurent(const std::string& text, const AlgebraSpec& spec);

}  // namespace uaw
