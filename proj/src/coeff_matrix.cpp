#include "uaw/coeff_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "uaw/linalg.hpp"

namespace uaw {

namespace {

using namespace hhat_gen;

/// Splits a normal-form Hhat_q word into (i, j, t-part).
struct SplitWord {
  int i = 0, j = 0;
  Word tpart;
};

SplitWord split_normal_word(const Word& w) {
  SplitWord out;
  size_t pos = 0;
  while (pos < w.size() && (w[pos] == Y || w[pos] == Yi)) {
    out.i += (w[pos] == Y) ? 1 : -1;
    ++pos;
  }
  while (pos < w.size() && (w[pos] == X || w[pos] == Xi)) {
    out.j += (w[pos] == X) ? 1 : -1;
    ++pos;
  }
  std::vector<GenId> rest(w.letters.begin() + pos, w.letters.end());
  out.tpart = Word(std::move(rest));
  return out;
}

NCPoly power_poly(const std::vector<QScalar>& coeffs, const NCPoly& base,
                  const AlgebraSpec& spec) {
  NCPoly acc(spec.alphabet);
  NCPoly p = NCPoly::unit(spec.alphabet);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    acc += p * coeffs[i];
    p = p * base;
  }
  return acc;
}

}  // namespace

TPoly CoeffMatrix::entry(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? TPoly() : it->second;
}

void CoeffMatrix::add_entry(int i, int j, const TPoly& t) {
  if (t.is_zero()) return;
  auto [it, inserted] = entries_.emplace(Key{i, j}, t);
  if (!inserted) {
    it->second = it->second + t;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

CoeffMatrix operator+(const CoeffMatrix& a, const CoeffMatrix& b) {
  CoeffMatrix r = a;
  for (const auto& [k, t] : b.entries_) r.add_entry(k.first, k.second, t);
  return r;
}

CoeffMatrix CoeffMatrix::operator*(const TPoly& t) const {
  CoeffMatrix r;
  for (const auto& [k, e] : entries_) r.add_entry(k.first, k.second, e * t);
  return r;
}

std::string CoeffMatrix::table() const {
  if (entries_.empty()) return "(zero matrix)\n";
  int imin = 0, imax = 0, jmin = 0, jmax = 0;
  for (const auto& [k, e] : entries_) {
    imin = std::min(imin, k.first);
    imax = std::max(imax, k.first);
    jmin = std::min(jmin, k.second);
    jmax = std::max(jmax, k.second);
  }
  auto axis_label = [](const char* base, int e) -> std::string {
    if (e == 0) return "1";
    std::string s = base;
    if (e != 1) s += "^" + std::to_string(e);
    return s;
  };
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (int j = jmin; j <= jmax; ++j) header.push_back(axis_label("X", j));
  cells.push_back(header);
  for (int i = imin; i <= imax; ++i) {
    std::vector<std::string> row{axis_label("Y", i)};
    for (int j = jmin; j <= jmax; ++j) row.push_back(entry(i, j).str());
    cells.push_back(row);
  }
  std::vector<size_t> widths(cells[0].size(), 0);
  for (const auto& row : cells)
    for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  std::ostringstream out;
  for (size_t r = 0; r < cells.size(); ++r) {
    for (size_t c = 0; c < cells[r].size(); ++c) {
      out << std::string(widths[c] - cells[r][c].size(), ' ') << cells[r][c];
      out << (c + 1 < cells[r].size() ? "  " : "");
      if (c == 0) out << "| ";
    }
    out << "\n";
    if (r == 0) {
      size_t total = 0;
      for (size_t c = 0; c < widths.size(); ++c) total += widths[c] + 2;
      out << std::string(total + 2, '-') << "\n";
    }
  }
  return out.str();
}

std::string CoeffMatrix::triples() const {
  std::ostringstream out;
  for (const auto& [k, e] : entries_)
    out << "(" << k.first << ", " << k.second << ", " << e.str() << ")\n";
  return out.str();
}

CoeffMatrix coefficient_matrix(const NCPoly& h, const AlgebraSpec& spec, long fuel) {
  NCPoly nf = spec.normalize(h, fuel);
  CoeffMatrix cm;
  for (const auto& [w, c] : nf.terms()) {
    SplitWord parts = split_normal_word(w);
    TPoly t = to_t_laurent(NCPoly::term(spec.alphabet, parts.tpart, c), spec);
    cm.add_entry(parts.i, parts.j, t);
  }
  return cm;
}

NCPoly unfold_coeff_matrix(const CoeffMatrix& cm, const AlgebraSpec& spec) {
  NCPoly acc(spec.alphabet);
  for (const auto& [k, t] : cm.entries()) {
    auto [i, j] = k;
    std::vector<GenId> letters;
    for (int a = 0; a < std::abs(i); ++a) letters.push_back(i > 0 ? Y : Yi);
    for (int b = 0; b < std::abs(j); ++b) letters.push_back(j > 0 ? X : Xi);
    acc += NCPoly::term(spec.alphabet, Word(letters)) * from_t_laurent(t, spec);
  }
  return spec.normalize(acc);
}

NCPoly project_pi(Summand nu, const NCPoly& h, const AlgebraSpec& spec, long fuel) {
  NCPoly nf = spec.normalize(h, fuel);
  NCPoly a_gen = NCPoly::single(spec.alphabet, Y) + NCPoly::single(spec.alphabet, Yi);
  NCPoly b_gen = NCPoly::single(spec.alphabet, X) + NCPoly::single(spec.alphabet, Xi);
  NCPoly acc(spec.alphabet);
  for (const auto& [w, c] : nf.terms()) {
    SplitWord parts = split_normal_word(w);
    NCPoly ypow(spec.alphabet), xpow(spec.alphabet);
    {
      std::vector<GenId> ls;
      for (int a = 0; a < std::abs(parts.i); ++a) ls.push_back(parts.i > 0 ? Y : Yi);
      ypow = NCPoly::term(spec.alphabet, Word(ls));
      ls.clear();
      for (int b = 0; b < std::abs(parts.j); ++b) ls.push_back(parts.j > 0 ? X : Xi);
      xpow = NCPoly::term(spec.alphabet, Word(ls));
    }
    AxisFold fy = fold_laurent(Axis::Y, ypow, spec);
    AxisFold fx = fold_laurent(Axis::X, xpow, spec);
    NCPoly tpart = NCPoly::term(spec.alphabet, parts.tpart, c);
    NCPoly piece(spec.alphabet);
    switch (nu) {
      case Summand::One:
        piece = power_poly(fy.even, a_gen, spec) * power_poly(fx.even, b_gen, spec);
        break;
      case Summand::X:
        piece = power_poly(fy.even, a_gen, spec) *
                NCPoly::single(spec.alphabet, X) * power_poly(fx.odd, b_gen, spec);
        break;
      case Summand::Y:
        piece = power_poly(fy.odd, a_gen, spec) * NCPoly::single(spec.alphabet, Y) *
                power_poly(fx.even, b_gen, spec);
        break;
      case Summand::YX:
        piece = power_poly(fy.odd, a_gen, spec) * NCPoly::single(spec.alphabet, Y) *
                NCPoly::single(spec.alphabet, X) * power_poly(fx.odd, b_gen, spec);
        break;
    }
    acc += piece * tpart;
  }
  return spec.normalize(acc, fuel);
}

NCPoly commutator(const NCPoly& g, const NCPoly& h, const AlgebraSpec& spec,
                  long fuel) {
  return spec.normalize(g * h - h * g, fuel);
}

bool commutes_with_t0(const NCPoly& h, const AlgebraSpec& spec, long fuel) {
  NCPoly t = NCPoly::single(spec.alphabet, t0);
  return commutator(t, h, spec, fuel).is_zero();
}

bool is_central(const NCPoly& h, const AlgebraSpec& spec, long fuel) {
  for (const auto& g : spec.alphabet->generators()) {
    NCPoly gen = NCPoly::single(spec.alphabet, g.id);
    if (!commutator(gen, h, spec, fuel).is_zero()) return false;
  }
  return true;
}

Report verify_centralizer_presentation(long fuel) {
  Report report;
  report.name = "centralizer-presentation";
  const AlgebraSpec& h = hhat_q();
  ParseContext ctx = h.parse_context();
  auto N = [&](const std::string& text) {
    return h.normalize(parse_expr(text, ctx), fuel);
  };

  NCPoly A = derived("A", h), B = derived("B", h), C = derived("C", h);
  QScalar q2 = parse_scalar("q^2-q^-2");
  QScalar q1 = parse_scalar("q+q^-1");
  NCPoly alpha = N("alpha"), beta = N("beta"), gamma = N("gamma");

  NCPoly r1 = h.normalize(
      A + (B * C * parse_scalar("q") - C * B * parse_scalar("q^-1")) * q2.inverse() -
          alpha * q1.inverse(),
      fuel);
  report.check("alpha-relation", r1.is_zero(), r1.str());
  NCPoly r2 = h.normalize(
      B + (C * A * parse_scalar("q") - A * C * parse_scalar("q^-1")) * q2.inverse() -
          beta * q1.inverse(),
      fuel);
  report.check("beta-relation", r2.is_zero(), r2.str());
  NCPoly r3 = h.normalize(
      C + (A * B * parse_scalar("q") - B * A * parse_scalar("q^-1")) * q2.inverse() -
          gamma * q1.inverse(),
      fuel);
  report.check("gamma-relation", r3.is_zero(), r3.str());

  NCPoly lhs = A * C * B * parse_scalar("q^-1") + A * A * parse_scalar("q^-2") +
               B * B * parse_scalar("q^-2") + C * C * parse_scalar("q^2") -
               A * alpha * parse_scalar("q^-1") - B * beta * parse_scalar("q^-1") -
               C * gamma * parse_scalar("q");
  NCPoly r4 = h.normalize(lhs - N("Omega"), fuel);
  report.check("Omega-relation", r4.is_zero(), r4.str());

  for (const char* central : {"t0", "T1", "T2", "T3"}) {
    NCPoly z = NCPoly::single(h.alphabet, *h.alphabet->find(central));
    for (const auto& [name, elem] :
         std::vector<std::pair<std::string, const NCPoly*>>{
             {"A", &A}, {"B", &B}, {"C", &C}}) {
      NCPoly res = commutator(z, *elem, h, fuel);
      report.check(std::string("[") + central + ", " + name + "]", res.is_zero(),
                   res.str());
    }
  }
  return report;
}

std::vector<NCPoly> center_kernel(int n, int m, long fuel) {
  const AlgebraSpec& h = hhat_q();

  // bounded window of normal-form basis words
  std::vector<Word> domain;
  for (int i = -n; i <= n; ++i)
    for (int j = -n; j <= n; ++j)
      for (int k = 0; k <= 1; ++k)
        for (int l = 0; l <= m; ++l)
          for (int r = 0; l + r <= m; ++r)
            for (int s = 0; l + r + s <= m; ++s)
              for (int t = 0; l + r + s + t <= m; ++t) {
                std::vector<GenId> ls;
                for (int a = 0; a < std::abs(i); ++a) ls.push_back(i > 0 ? Y : Yi);
                for (int b = 0; b < std::abs(j); ++b) ls.push_back(j > 0 ? X : Xi);
                for (int a = 0; a < k; ++a) ls.push_back(t0);
                for (int a = 0; a < l; ++a) ls.push_back(T0);
                for (int a = 0; a < r; ++a) ls.push_back(T1);
                for (int a = 0; a < s; ++a) ls.push_back(T2);
                for (int a = 0; a < t; ++a) ls.push_back(T3);
                domain.push_back(Word(std::move(ls)));
              }
  std::sort(domain.begin(), domain.end());

  // one equation per normal-form word of any commutator, columns = domain
  std::map<Word, std::map<int, QScalar>> equations;
  const GenId gens[] = {X, Y, t0};
  for (int col = 0; col < static_cast<int>(domain.size()); ++col) {
    NCPoly w = NCPoly::term(h.alphabet, domain[col]);
    for (GenId g : gens) {
      NCPoly com = commutator(NCPoly::single(h.alphabet, g), w, h, fuel);
      for (const auto& [word, c] : com.terms())
        equations[{Word({g}).concat(word)}][col] = c;
    }
  }
  std::vector<std::map<int, QScalar>> eq_rows;
  eq_rows.reserve(equations.size());
  for (auto& [w, row] : equations) eq_rows.push_back(std::move(row));

  std::vector<NCPoly> basis;
  for (const auto& v : kernel_basis(eq_rows, static_cast<int>(domain.size()))) {
    NCPoly p(h.alphabet);
    for (size_t col = 0; col < v.size(); ++col)
      if (!v[col].is_zero()) p.add_term(domain[col], v[col]);
    basis.push_back(std::move(p));
  }
  return basis;
}

}  // namespace uaw
