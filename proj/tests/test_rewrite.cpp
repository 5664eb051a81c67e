#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/random_gen.hpp"
#include "uaw/algebras.hpp"

using namespace uaw;
using namespace uaw::testing;

namespace {

Word word_of(const AlgebraSpec& spec, const std::string& text) {
  return spec.parse(text).terms().begin()->first;
}

}  // namespace

TEST_CASE("normalize applies the shipped rules") {
  const AlgebraSpec& d = delta_q();
  CHECK(d.normalize(d.parse("B*A")) ==
        d.parse("q^2*A*B + q*(q^2-q^-2)*C - q*(q-q^-1)*gamma"));
  const AlgebraSpec& h = hhat_q();
  CHECK(h.normalize(h.parse("t0*X")) == h.parse("X^-1*t0 + X*T0 - T3"));
  CHECK(h.normalize(h.parse("1")) == h.parse("1"));
  for (const Word& w : enumerate_basis(h, 3))
    CHECK(h.normalize(NCPoly::term(h.alphabet, w)) ==
          NCPoly::term(h.alphabet, w));
}

TEST_CASE("is-irreducible detects forbidden factors") {
  const AlgebraSpec& d = delta_q();
  CHECK(d.system.is_irreducible(word_of(d, "A*C*B")));
  CHECK_FALSE(d.system.is_irreducible(word_of(d, "C*C")));
  const AlgebraSpec& h = hhat_q();
  CHECK(h.system.is_irreducible(word_of(h, "Y*X*t0*T0")));
}

TEST_CASE("overlaps enumerates adjacent forbidden pairs") {
  const AlgebraSpec& d = delta_q();
  auto od = d.system.overlaps();
  for (const char* w : {"B*C*A", "B*C*C", "C*C*A"})
    CHECK(std::find(od.begin(), od.end(), word_of(d, w)) != od.end());
  // every overlap's two pairs really are forbidden
  for (const Word& w : od) {
    CHECK(d.system.is_forbidden(w[0], w[1]));
    CHECK(d.system.is_forbidden(w[1], w[2]));
  }

  auto empty_alphabet = std::make_shared<Alphabet>(std::vector<std::string>{"a"});
  RewriteSystem empty(empty_alphabet);
  CHECK(empty.overlaps().empty());
}

TEST_CASE("resolve reduces both ways to the same normal form") {
  const AlgebraSpec& d = delta_q();
  auto r = d.system.resolve(word_of(d, "B*C*A"));
  CHECK(r.resolved);
  CHECK(r.left_first ==
        d.normalize(d.parse(
            "q^-3*(q^2-q^-2)*Omega + q^-6*A*C*B - q^-3*(q^4-q^-4)*A*A "
            "- q^-3*(q^4-q^-4)*B*B + q^-3*(q^3-q^-3)*A*alpha "
            "+ q^-3*(q^3-q^-3)*B*beta + q^-3*(q-q^-1)*C*gamma")));

  const AlgebraSpec& h = hhat_q();
  auto r2 = h.system.resolve(word_of(h, "t0*X^-1*Y^-1"));
  CHECK(r2.resolved);
  CHECK(r2.left_first == h.parse("q^2*Y*X*t0 - q^2*Y*X*T0 + q*T2"));
  auto r3 = h.system.resolve(word_of(h, "X*X^-1*Y"));
  CHECK(r3.resolved);
  CHECK(r3.left_first == h.parse("Y"));
}

TEST_CASE("check-confluence resolves every ambiguity in both algebras") {
  CHECK(delta_q().system.check_confluence().all_resolved());
  CHECK(hhat_q().system.check_confluence().all_resolved());
}

TEST_CASE("a mutated rule coefficient breaks confluence") {
  // rebuild hhat with the XY rule's leading q^2 replaced by q^3
  const AlgebraSpec& h = hhat_q();
  AlgebraSpec mutant{h.name, "hhat-mutant", h.alphabet, RewriteSystem(h.alphabet)};
  Word xy = word_of(h, "X*Y");
  for (const RewriteRule& r : h.system.rules()) {
    NCPoly rhs = r.rhs;
    if (r.lhs == xy) {
      Word yx = word_of(h, "Y*X");
      QScalar old_coeff = rhs.coeff(yx);
      rhs.add_term(yx, -old_coeff);
      rhs.add_term(yx, parse_scalar("q^3"));
    }
    mutant.system.add_rule(r.lhs, rhs, r.kind);
  }
  auto report = mutant.system.check_confluence();
  CHECK_FALSE(report.all_resolved());
}

TEST_CASE("normalize is idempotent and linear on random inputs") {
  const AlgebraSpec& d = delta_q();
  const AlgebraSpec& h = hhat_q();
  for (int i = 0; i < 15; ++i) {
    for (const AlgebraSpec* spec : {&d, &h}) {
      NCPoly p = random_poly(*spec, 3, 4);
      NCPoly r = random_poly(*spec, 3, 4);
      QScalar a = random_scalar();
      QScalar b = random_scalar();
      NCPoly np = spec->normalize(p);
      CHECK(spec->normalize(np) == np);
      CHECK(spec->normalize(p * a + r * b) ==
            spec->normalize(p) * a + spec->normalize(r) * b);
    }
  }
}

TEST_CASE("every rule is self-consistent: lhs - rhs normalizes to zero") {
  for (const AlgebraSpec* spec : {&delta_q(), &hhat_q()}) {
    for (const RewriteRule& r : spec->system.rules()) {
      NCPoly diff = NCPoly::term(spec->alphabet, r.lhs) - r.rhs;
      CHECK(spec->normalize(diff).is_zero());
    }
  }
}

TEST_CASE("fuel exhaustion raises NonTermination") {
  auto alphabet = std::make_shared<Alphabet>(std::vector<std::string>{"a", "b"});
  RewriteSystem bad(alphabet);
  // a*b -> b*a and b*a -> a*b cycle forever
  bad.add_rule(Word({0, 1}), NCPoly::term(alphabet, Word({1, 0})), RuleKind::First);
  bad.add_rule(Word({1, 0}), NCPoly::term(alphabet, Word({0, 1})), RuleKind::First);
  NCPoly w = NCPoly::term(alphabet, Word({0, 1}));
  CHECK_THROWS_AS(bad.normalize(w, 100), NonTermination);
}

TEST_CASE("rules must have length-2 lhs and unique forbidden words") {
  auto alphabet = std::make_shared<Alphabet>(std::vector<std::string>{"a", "b"});
  RewriteSystem sys(alphabet);
  CHECK_THROWS_AS(
      sys.add_rule(Word({0}), NCPoly::zero(alphabet), RuleKind::First),
      std::invalid_argument);
  sys.add_rule(Word({1, 0}), NCPoly::zero(alphabet), RuleKind::First);
  CHECK_THROWS_AS(
      sys.add_rule(Word({1, 0}), NCPoly::zero(alphabet), RuleKind::First),
      std::invalid_argument);
}

namespace {

/// Independent reducer: rightmost forbidden factor first, depth-first.
/// Confluence guarantees it must agree with the engine's leftmost strategy.
NCPoly rightmost_normalize(const AlgebraSpec& spec, const NCPoly& p) {
  NCPoly result(spec.alphabet);
  std::vector<std::pair<Word, QScalar>> stack(p.terms().begin(), p.terms().end());
  while (!stack.empty()) {
    auto [w, c] = stack.back();
    stack.pop_back();
    int pos = -1;
    for (int i = static_cast<int>(w.size()) - 2; i >= 0; --i)
      if (spec.system.is_forbidden(w[i], w[i + 1])) {
        pos = i;
        break;
      }
    if (pos < 0) {
      result.add_term(w, c);
      continue;
    }
    int idx = spec.system.rule_for(w[pos], w[pos + 1]);
    Word prefix = w.subword(0, pos);
    Word suffix = w.subword(pos + 2, w.size() - pos - 2);
    for (const auto& [rw, rc] : spec.system.rules()[idx].rhs.terms())
      stack.emplace_back(prefix.concat(rw).concat(suffix), rc * c);
  }
  return result;
}

}  // namespace

TEST_CASE("leftmost and rightmost strategies reach the same normal form") {
  for (const AlgebraSpec* spec : {&delta_q(), &hhat_q()}) {
    for (int i = 0; i < 12; ++i) {
      NCPoly p = random_poly(*spec, 3, 4);
      CHECK(spec->normalize(p) == rightmost_normalize(*spec, p));
    }
  }
}

TEST_CASE("normalize is compatible with the product") {
  for (const AlgebraSpec* spec : {&delta_q(), &hhat_q()}) {
    for (int i = 0; i < 8; ++i) {
      NCPoly p = random_poly(*spec, 2, 3);
      NCPoly r = random_poly(*spec, 2, 3);
      NCPoly s = random_poly(*spec, 2, 3);
      CHECK(spec->normalize(spec->normalize(p * r) * s) ==
            spec->normalize(p * spec->normalize(r * s)));
      CHECK(spec->normalize(p * r) ==
            spec->normalize(spec->normalize(p) * spec->normalize(r)));
    }
  }
}

TEST_CASE("irreducible word counts match the basis shape through length 4") {
  for (const AlgebraSpec* spec : {&delta_q(), &hhat_q()}) {
    for (int len = 0; len <= 4; ++len) {
      long enumerated = static_cast<long>(enumerate_basis_exact(*spec, len).size());
      CHECK(enumerated == spec->basis_count_exact(len));
    }
  }
}
