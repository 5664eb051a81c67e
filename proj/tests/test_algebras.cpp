#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/random_gen.hpp"
#include "uaw/spec_io.hpp"

using namespace uaw;
using namespace uaw::testing;

namespace {

const RewriteRule* rule_for(const AlgebraSpec& spec, const std::string& lhs) {
  Word w = spec.parse(lhs).terms().begin()->first;
  int idx = spec.system.rule_for(w[0], w[1]);
  return idx < 0 ? nullptr : &spec.system.rules()[idx];
}

}  // namespace

TEST_CASE("delta-q ships 22 rules with the expected right-hand sides") {
  const AlgebraSpec& d = delta_q();
  CHECK(d.system.rules().size() == 22);
  const RewriteRule* cc = rule_for(d, "C*C");
  REQUIRE(cc != nullptr);
  CHECK(cc->rhs == d.parse("q^-2*Omega - q^-3*A*C*B - q^-4*A*A - q^-4*B*B "
                           "+ q^-3*A*alpha + q^-3*B*beta + q^-1*C*gamma"));
  CHECK(cc->kind == RuleKind::First);
  const RewriteRule* gb = rule_for(d, "gamma*beta");
  REQUIRE(gb != nullptr);
  CHECK(gb->rhs == d.parse("beta*gamma"));
  CHECK(gb->kind == RuleKind::Second);
}

TEST_CASE("hhat-q ships 39 forbidden words with the expected right-hand sides") {
  const AlgebraSpec& h = hhat_q();
  CHECK(h.system.rules().size() == 39);
  const RewriteRule* r = rule_for(h, "X^-1*Y^-1");
  REQUIRE(r != nullptr);
  CHECK(r->rhs ==
        h.parse("q^2*Y^-1*X^-1 - q^2*Y^-1*T0*T3 + q^2*Y^-1*t0*T3 + q*T0*T2 "
                "- q*t0*T2 - q^2*X*T0*T1 + q^2*X*t0*T1 + q^2*Y^-1*X*T0*T0 "
                "- q^2*Y^-1*X*t0*T0"));
  CHECK(r->kind == RuleKind::First);
  const RewriteRule* t00 = rule_for(h, "t0*t0");
  REQUIRE(t00 != nullptr);
  CHECK(t00->rhs == h.parse("t0*T0 - 1"));
  CHECK(t00->kind == RuleKind::Second);
  int third = 0;
  for (const RewriteRule& rr : h.system.rules())
    if (rr.kind == RuleKind::Third) ++third;
  CHECK(third == 30);  // 4 inverse pairs + 20 T-moves + 6 T-swaps
}

TEST_CASE("derived elements normalize to their closed forms") {
  const AlgebraSpec& h = hhat_q();
  CHECK(derived("t2", h) == h.normalize(h.parse("q^-1*Y^-1*t0*X^-1")));
  CHECK(derived("gamma", h) ==
        h.normalize(h.parse("q*T0*T2 - (q-q^-1)*t0*T2 + T3*T1")));
  CHECK(derived("C0", h) ==
        h.normalize(h.parse("q*(q*Y*X - q^-1*X*Y)")));
  CHECK(derived("A", h) == h.parse("Y + Y^-1"));
  CHECK_THROWS_AS(derived("nosuch", h), UnknownName);
}

TEST_CASE("enumerate-basis matches brute-force filtering") {
  const AlgebraSpec& d = delta_q();
  const AlgebraSpec& h = hhat_q();
  CHECK(enumerate_basis_exact(h, 2).size() == 42);
  CHECK(enumerate_basis_exact(d, 1).size() == 7);
  CHECK(enumerate_basis(d, 0) == std::vector<Word>{Word()});
  // brute force: all two-letter words filtered by is-irreducible
  long count = 0;
  for (GenId a = 0; a < 9; ++a)
    for (GenId b = 0; b < 9; ++b)
      if (h.system.is_irreducible(Word({a, b}))) ++count;
  CHECK(count == 42);
}

TEST_CASE("enumerate-basis equals naive filtering through length 3") {
  for (const AlgebraSpec* spec : {&delta_q(), &hhat_q()}) {
    GenId n = static_cast<GenId>(spec->alphabet->size());
    for (int len = 0; len <= 3; ++len) {
      std::vector<Word> naive;
      std::vector<GenId> digits(len, 0);
      while (true) {
        Word w{std::vector<GenId>(digits.begin(), digits.end())};
        if (spec->system.is_irreducible(w)) naive.push_back(w);
        int pos = len - 1;
        while (pos >= 0 && digits[pos] == n - 1) digits[pos--] = 0;
        if (pos < 0) break;
        ++digits[pos];
      }
      std::sort(naive.begin(), naive.end());
      CHECK(enumerate_basis_exact(*spec, len) == naive);
    }
  }
}

TEST_CASE("fold-laurent on small Laurent polynomials") {
  const AlgebraSpec& h = hhat_q();
  AxisFold f = fold_laurent(Axis::Y, h.parse("Y + Y^-1"), h);
  CHECK(f.even == std::vector<QScalar>{QScalar(), QScalar::one()});  // A
  CHECK(f.odd.empty());

  AxisFold f2 = fold_laurent(Axis::Y, h.parse("Y*Y"), h);
  CHECK(f2.even == std::vector<QScalar>{-QScalar::one()});           // -1
  CHECK(f2.odd == std::vector<QScalar>{QScalar(), QScalar::one()});  // A

  // oracle for Y^-2: expand (A - Y)^2 with A = Y + Y^-1 and reduce
  NCPoly a_minus_y = h.parse("(Y + Y^-1) - Y");
  CHECK(h.normalize(a_minus_y * a_minus_y) == h.normalize(h.parse("Y^-2")));
  AxisFold f3 = fold_laurent(Axis::Y, h.parse("Y^-2"), h);
  CHECK(f3.even ==
        std::vector<QScalar>{-QScalar::one(), QScalar(), QScalar::one()});
  CHECK(f3.odd == std::vector<QScalar>{QScalar(), -QScalar::one()});

  CHECK_THROWS_AS(fold_laurent(Axis::Y, h.parse("X"), h), AxisError);
  CHECK_THROWS_AS(fold_laurent(Axis::X, h.parse("X*t0"), h), AxisError);
}

TEST_CASE("unfolding a fold reproduces the input") {
  const AlgebraSpec& h = hhat_q();
  for (int i = 0; i < 20; ++i) {
    NCPoly p(h.alphabet);
    int terms = rand_int(0, 4);
    for (int t = 0; t < terms; ++t) {
      int e = rand_int(-4, 4);
      std::vector<GenId> ls;
      for (int k = 0; k < std::abs(e); ++k)
        ls.push_back(e > 0 ? hhat_gen::Y : hhat_gen::Yi);
      p.add_term(Word(ls), random_scalar());
    }
    AxisFold f = fold_laurent(Axis::Y, p, h);
    CHECK(unfold_laurent(Axis::Y, f, h) == h.normalize(p));
  }
}

TEST_CASE("T-basis conversion on fixed elements") {
  const AlgebraSpec& h = hhat_q();
  TPoly t0inv = parse_t_laurent("t0^-1", h);
  CHECK(from_t_laurent(t0inv, h) == h.normalize(h.parse("T0 - t0")));

  TPoly mix = parse_t_laurent("q^-1*t0 + q*t0^-1", h);
  CHECK(from_t_laurent(mix, h) ==
        h.normalize(h.parse("q*T0 - (q-q^-1)*t0")));

  TPoly fixed = parse_t_laurent("T1*T2", h);
  CHECK(from_t_laurent(fixed, h) == h.parse("T1*T2"));

  CHECK_THROWS_AS(to_t_laurent(h.parse("X*T1"), h), NotInT);
}

TEST_CASE("T-basis round trip on random T elements") {
  const AlgebraSpec& h = hhat_q();
  for (int i = 0; i < 20; ++i) {
    TPoly t;
    int terms = rand_int(0, 4);
    for (int k = 0; k < terms; ++k)
      t.add_term({rand_int(-3, 3), rand_int(0, 2), rand_int(0, 2), rand_int(0, 2)},
                 random_scalar());
    CHECK(to_t_laurent(from_t_laurent(t, h), h) == t);
  }
}

TEST_CASE("Omega is central among the delta generators") {
  const AlgebraSpec& d = delta_q();
  NCPoly omega = d.parse("Omega");
  for (const char* g : {"A", "B", "C"}) {
    NCPoly gen = d.parse(g);
    CHECK(d.normalize(omega * gen - gen * omega).is_zero());
  }
}

TEST_CASE("cyclic products of the t_i equal q^-1") {
  const AlgebraSpec& h = hhat_q();
  NCPoly t0 = h.parse("t0"), t1 = h.parse("t1"), t2 = h.parse("t2"),
         t3 = h.parse("t3");
  NCPoly qinv = h.parse("q^-1");
  CHECK(h.normalize(t0 * t1 * t2 * t3) == qinv);
  CHECK(h.normalize(t1 * t2 * t3 * t0) == qinv);
  CHECK(h.normalize(t2 * t3 * t0 * t1) == qinv);
  CHECK(h.normalize(t3 * t0 * t1 * t2) == qinv);
}

TEST_CASE("algebra-spec files round-trip through export and import") {
  for (const AlgebraSpec* spec : {&delta_q(), &hhat_q()}) {
    std::string text = export_spec(*spec);
    AlgebraSpec back = import_spec(text, spec->name, spec->display_name);
    REQUIRE(back.system.rules().size() == spec->system.rules().size());
    for (size_t i = 0; i < spec->system.rules().size(); ++i) {
      CHECK(back.system.rules()[i].lhs == spec->system.rules()[i].lhs);
      CHECK(back.system.rules()[i].rhs == spec->system.rules()[i].rhs);
      CHECK(back.system.rules()[i].kind == spec->system.rules()[i].kind);
    }
  }
}

TEST_CASE("exported spec format is line-oriented with kind tags") {
  std::string text = export_spec(delta_q());
  CHECK(text.rfind("alphabet: A C B Omega alpha beta gamma\n", 0) == 0);
  CHECK(text.find("gamma*beta -> beta*gamma ; kind=second") != std::string::npos);
}

TEST_CASE("twisted spec inverts rule coefficients and stays confluent") {
  AlgebraSpec twisted = twisted_spec(delta_q());
  const RewriteRule* ba = rule_for(twisted, "B*A");
  REQUIRE(ba != nullptr);
  Word ab = twisted.parse("A*B").terms().begin()->first;
  CHECK(ba->rhs.coeff(ab) == parse_scalar("q^-2"));
  CHECK(twisted.system.check_confluence().all_resolved());
  CHECK(twisted_spec(hhat_q()).system.check_confluence().all_resolved());
}
