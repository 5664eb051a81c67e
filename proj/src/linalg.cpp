#include "uaw/linalg.hpp"

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

void WordRank::strip_content(Row& row) {
  if (row.empty()) return;
  BigInt g = 0;
  int min_trail = -1;
  for (const auto& [w, p] : row) {
    g = int_gcd(g, p.content());
    int trail = 0;
    while (p.coeff(trail).is_zero()) ++trail;  // p is nonzero by invariant
    if (min_trail < 0 || trail < min_trail) min_trail = trail;
  }
  if (g != 1 || min_trail > 0) {
    for (auto& [w, p] : row) {
      if (g != 1) p = p.divided_by_int_exact(g);
      if (min_trail > 0) {
        IntPoly shifted;
        for (int d = min_trail; d <= p.degree(); ++d)
          shifted = shifted + IntPoly::monomial(p.coeff(d), d - min_trail);
        p = shifted;
      }
    }
  }
  // polynomial content: cross-multiplication grows a common factor along
  // elimination chains, so divide it back out while it is cheap to find
  IntPoly pg;
  for (const auto& [w, p] : row) {
    pg = IntPoly::gcd(pg, p);
    if (pg.degree() == 0) return;
  }
  for (auto& [w, p] : row) p = p.divided_exact(pg);
}

bool WordRank::insert(const std::map<Word, QScalar>& row_q) {
  // clear denominators: multiply through by the lcm of the entries' dens
  IntPoly lcm(BigInt(1));
  for (const auto& [w, c] : row_q) {
    if (c.is_zero()) continue;
    IntPoly g = IntPoly::gcd(lcm, c.den());
    lcm = lcm * c.den().divided_exact(g.is_zero() ? IntPoly(BigInt(1)) : g);
  }
  Row row;
  for (const auto& [w, c] : row_q) {
    if (c.is_zero()) continue;
    row.emplace(w, c.num() * lcm.divided_exact(c.den()));
  }
  strip_content(row);

  while (!row.empty()) {
    Word lead = row.begin()->first;
    auto pivot = pivots_.find(lead);
    if (pivot == pivots_.end()) {
      pivots_.emplace(std::move(lead), std::move(row));
      return true;
    }
    const Row& prow = pivot->second;
    IntPoly a = prow.begin()->second;  // pivot leading entry
    IntPoly b = row.begin()->second;
    // row <- a*row - b*pivotrow  (cancels the leading word)
    Row next;
    for (const auto& [w, p] : row) {
      IntPoly v = p * a;
      auto it = prow.find(w);
      if (it != prow.end()) v = v - it->second * b;
      if (!v.is_zero()) next.emplace(w, std::move(v));
    }
    for (const auto& [w, p] : prow) {
      if (row.find(w) != row.end()) continue;
      IntPoly v = -(p * b);
      if (!v.is_zero()) next.emplace(w, std::move(v));
    }
    next.erase(pivot->first);
    row = std::move(next);
    strip_content(row);
  }
  return false;
}

std::vector<std::vector<QScalar>> kernel_basis(
    const std::vector<std::map<int, QScalar>>& equations, int ncols) {
  using SparseRow = std::map<int, QScalar>;
  auto axpy = [](SparseRow& row, const QScalar& f, const SparseRow& other) {
    for (const auto& [j, c] : other) {
      auto [it, inserted] = row.emplace(j, -(f * c));
      if (!inserted) {
        it->second -= f * c;
        if (it->second.is_zero()) row.erase(it);
      }
    }
  };

  // echelon rows keyed by pivot column; pivot entry normalized to 1
  std::map<int, SparseRow> reduced;
  for (const auto& eq : equations) {
    SparseRow row;
    for (const auto& [j, c] : eq)
      if (!c.is_zero()) row.emplace(j, c);
    while (!row.empty()) {
      int lead = row.begin()->first;
      auto pivot = reduced.find(lead);
      if (pivot == reduced.end()) {
        QScalar inv = row.begin()->second.inverse();
        for (auto& [j, c] : row) c = c * inv;
        reduced.emplace(lead, std::move(row));
        break;
      }
      QScalar f = row.begin()->second;
      row.erase(row.begin());
      SparseRow tail(pivot->second);
      tail.erase(lead);
      axpy(row, f, tail);
    }
  }

  // single back-substitution pass, highest pivot first
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
    for (auto jt = reduced.begin(); jt->first < it->first; ++jt) {
      auto hit = jt->second.find(it->first);
      if (hit == jt->second.end()) continue;
      QScalar f = hit->second;
      jt->second.erase(hit);
      SparseRow tail(it->second);
      tail.erase(it->first);
      axpy(jt->second, f, tail);
    }
  }

  std::vector<std::vector<QScalar>> basis;
  for (int j = 0; j < ncols; ++j) {
    if (reduced.count(j)) continue;  // pivot column
    std::vector<QScalar> v(ncols);
    v[j] = QScalar::one();
    for (const auto& [pc, prow] : reduced) {
      auto it = prow.find(j);
      if (it != prow.end()) v[pc] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace uaw
