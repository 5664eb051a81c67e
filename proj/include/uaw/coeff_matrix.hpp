#pragma once

#include "uaw/algebras.hpp"
#include "uaw/report.hpp"

namespace uaw {

/// Sparse coefficient matrix of an Hhat_q element: h = sum Y^i X^j t_{ij}
/// with t_{ij} in the subalgebra T, entries kept in the t0^k (k in Z) basis.
/// Rows are Y-powers, columns are X-powers; absent entries are zero.
class CoeffMatrix {
 public:
  using Key = std::pair<int, int>;

  bool is_zero() const { return entries_.empty(); }
  const std::map<Key, TPoly>& entries() const { return entries_; }
  TPoly entry(int i, int j) const;
  void add_entry(int i, int j, const TPoly& t);

  friend CoeffMatrix operator+(const CoeffMatrix& a, const CoeffMatrix& b);
  /// Entrywise right multiplication by a T element.
  CoeffMatrix operator*(const TPoly& t) const;
  friend bool operator==(const CoeffMatrix& a, const CoeffMatrix& b) = default;

  /// Grid rendering: rows are Y-powers increasing downward, columns X-powers
  /// increasing rightward; absent rows and columns are zero.
  std::string table() const;
  /// One "(i, j, entry)" triple per line.
  std::string triples() const;

 private:
  std::map<Key, TPoly> entries_;
};

CoeffMatrix coefficient_matrix(const NCPoly& h, const AlgebraSpec& spec,
                               long fuel = kDefaultFuel);
/// Rebuilds sum Y^i X^j t_ij and normalizes; round-trips with the above.
NCPoly unfold_coeff_matrix(const CoeffMatrix& cm, const AlgebraSpec& spec);

enum class Summand { One, X, Y, YX };

/// Projection onto <A> nu <B> T against the four-summand decomposition,
/// computed by Laurent-folding the Y run and the X run of each word.
NCPoly project_pi(Summand nu, const NCPoly& h, const AlgebraSpec& spec,
                  long fuel = kDefaultFuel);

/// Normal form of g h - h g.
NCPoly commutator(const NCPoly& g, const NCPoly& h, const AlgebraSpec& spec,
                  long fuel = kDefaultFuel);

bool commutes_with_t0(const NCPoly& h, const AlgebraSpec& spec,
                      long fuel = kDefaultFuel);

/// True iff h commutes with every balanced generator.
bool is_central(const NCPoly& h, const AlgebraSpec& spec, long fuel = kDefaultFuel);

/// Substitutes the Hhat_q realizations of A, B, C, t0^{+-1}, T1..T3 into the
/// displayed relations of the centralizer presentation and checks centrality
/// of t0, T1, T2, T3 against A, B, C.
Report verify_centralizer_presentation(long fuel = kDefaultFuel);

/// Kernel of h -> ([X,h], [Y,h], [t0,h]) on the span of basis words with
/// |i|, |j| <= n, k in {0,1} and T-degree <= m.  Commutators are compared in
/// the full normal-form basis; only the domain is bounded.
std::vector<NCPoly> center_kernel(int n, int m, long fuel = kDefaultFuel);

}  // namespace uaw
