#pragma once

#include <map>
#include <vector>

#include "uaw/free_algebra.hpp"

namespace uaw {

/// Incremental rank computation over Q(q) for sparse rows indexed by words.
/// Rows are cleared of denominators on entry; elimination is fraction-free
/// (cross-multiplication only, content stripped), so entries stay integer
/// polynomials throughout.
class WordRank {
 public:
  /// Returns true when the row was independent of the rows seen so far.
  bool insert(const std::map<Word, QScalar>& row);
  long rank() const { return static_cast<long>(pivots_.size()); }

 private:
  using Row = std::map<Word, IntPoly>;
  static void strip_content(Row& row);
  std::map<Word, Row> pivots_;  // pivot word -> reduced row
};

/// Null-space basis of the homogeneous system given by sparse equation rows
/// over `ncols` unknowns.  Gauss-Jordan over Q(q); the basis is the canonical
/// one from the reduced echelon form (one vector per free column, free
/// coordinate set to 1), ordered by free column.
std::vector<std::vector<QScalar>> kernel_basis(
    const std::vector<std::map<int, QScalar>>& equations, int ncols);

}  // namespace uaw
