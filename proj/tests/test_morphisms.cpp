#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/random_gen.hpp"
#include "uaw/morphisms.hpp"

using namespace uaw;

namespace {
const AlgebraSpec& d() { return delta_q(); }
const AlgebraSpec& h() { return hhat_q(); }
}  // namespace

TEST_CASE("psi maps the generators to their images") {
  Morphism m = psi();
  CHECK(apply(m, d().parse("A")) == h().parse("Y + Y^-1"));
  CHECK(apply(m, d().parse("alpha")) ==
        h().normalize(h().parse("q*T0*T1 - (q-q^-1)*t0*T1 + T2*T3")));
  CHECK(apply(m, d().parse("1")) == h().parse("1"));
  CHECK(apply(identity_morphism(d()), d().parse("B*A")) ==
        d().normalize(d().parse("B*A")));
}

TEST_CASE("psi(C) matches its coefficient-matrix expansion") {
  // C = -q^-1 Y X^-1 + (t0^-1 T2 + q^-1 T1 T3) - q^-1 Y^-1 t0^-1 T3
  //     + q^-1 Y^-1 X t0^-2 - q^-1 X t0^-1 T1, with t0^-1 = T0 - t0
  NCPoly expected = h().normalize(h().parse(
      "-q^-1*Y*X^-1 + t0^-1*T2 + q^-1*T1*T3 - q^-1*Y^-1*t0^-1*T3 "
      "+ q^-1*Y^-1*X*t0^-2 - q^-1*X*t0^-1*T1"));
  CHECK(apply(psi(), d().parse("C")) == expected);
}

TEST_CASE("psi(Omega) is the Casimir image element") {
  NCPoly expected = h().normalize(h().parse(
      "(q+q^-1)^2 - (q^-1*t0 + q*t0^-1)^2 - T1^2 - T2^2 - T3^2 "
      "- (q^-1*t0 + q*t0^-1)*T1*T2*T3"));
  CHECK(apply(psi(), d().parse("Omega")) == expected);
}

TEST_CASE("braid generator images") {
  Morphism rho_h = braid(BraidGen::Rho, h());
  CHECK(rho_h.images.at(hhat_gen::X) ==
        h().normalize(h().parse("q^-1*Y^-1*t0*X^-1*t0")));
  Morphism sigma_h = braid(BraidGen::Sigma, h());
  CHECK(sigma_h.images.at(hhat_gen::T2) == h().parse("T2"));
  Morphism tau_d = braid(BraidGen::Tau, d());
  for (const auto& g : d().alphabet->generators())
    CHECK(apply(tau_d, NCPoly::single(d().alphabet, g.id)) ==
          NCPoly::single(d().alphabet, g.id));
}

TEST_CASE("dagger and xi generator images") {
  Morphism dag_d = dagger(d());
  CHECK(apply(dag_d, d().parse("gamma")) == d().parse("gamma"));
  Morphism dag_h = dagger(h());
  CHECK(apply(dag_h, h().parse("X")) == h().parse("Y"));
  CHECK(apply(dag_h, h().parse("1")) == h().parse("1"));

  Morphism xi_d = xi(d());
  CHECK(xi_d.images.at(delta_gen::A) ==
        NCPoly::single(d().alphabet, delta_gen::B));
  Morphism xi_h = xi(h());
  CHECK(xi_h.images.at(hhat_gen::t0) == h().parse("T0 - t0"));
}

TEST_CASE("verify-hom passes for every named morphism") {
  CHECK(verify_hom(psi()).all_pass());
  for (const AlgebraSpec* spec : {&d(), &h()}) {
    CHECK(verify_hom(braid(BraidGen::Rho, *spec)).all_pass());
    CHECK(verify_hom(braid(BraidGen::Sigma, *spec)).all_pass());
    CHECK(verify_hom(braid(BraidGen::Tau, *spec)).all_pass());
    CHECK(verify_hom(dagger(*spec)).all_pass());
    CHECK(verify_hom(xi(*spec)).all_pass());
  }
  CHECK(verify_hom(z4()).all_pass());
}

TEST_CASE("a perturbed psi image fails the B*C rule") {
  Morphism bad = psi();
  bad.images[delta_gen::C] += NCPoly::unit(h().alphabet);
  Report rep = verify_hom(bad);
  CHECK_FALSE(rep.all_pass());
  bool bc_failed = false;
  for (const auto& item : rep.items)
    if (item.item == "B*C" && !item.pass) bc_failed = true;
  CHECK(bc_failed);
}

TEST_CASE("antihomomorphism direction reverses products") {
  Morphism dag = dagger(d());
  NCPoly ab = d().parse("A*B");
  // dagger(AB) = dagger(B) dagger(A) = A B
  CHECK(apply(dag, ab) == d().normalize(d().parse("A*B")));
  NCPoly ba = d().parse("B*A");
  CHECK(apply(dag, ba) == d().normalize(d().parse("B*A")));
}

TEST_CASE("commuting squares hold for every generator") {
  for (const char* g : {"rho", "sigma", "tau", "dagger", "xi"})
    CHECK(verify_square(g).all_pass());
}

TEST_CASE("braid relation rho^3 = sigma^2 = tau and z4^4 = id") {
  CHECK(verify_braid_relation().all_pass());
  Morphism rho_h = braid(BraidGen::Rho, h());
  Morphism sigma_h = braid(BraidGen::Sigma, h());
  NCPoly y = h().parse("Y");
  NCPoly conj = h().normalize(h().parse("(T0-t0)*Y*t0"));
  CHECK(apply(rho_h, apply(rho_h, apply(rho_h, y))) == conj);
  CHECK(apply(sigma_h, apply(sigma_h, y)) == conj);
  NCPoly t1 = h().parse("T1");
  CHECK(apply(rho_h, apply(rho_h, apply(rho_h, t1))) == h().parse("T1"));
}

TEST_CASE("sigma on hhat sends C to C-prime") {
  NCPoly c = derived("C", h());
  CHECK(apply(braid(BraidGen::Sigma, h()), c) ==
        h().normalize(h().parse("T0*T2 - q*Y*X - q^-1*X^-1*Y^-1")));
}

TEST_CASE("injectivity rank at small bounds") {
  auto r0 = injectivity_rank(0);
  CHECK(r0.word_count == 1);
  CHECK(r0.rank == 1);
  auto r2 = injectivity_rank(2);
  CHECK(r2.word_count == 35);
  CHECK(r2.rank == 35);
}

TEST_CASE("injectivity rank one degree past the acceptance bound") {
  long expected = 0;
  for (int len = 0; len <= 4; ++len) expected += d().basis_count_exact(len);
  CHECK(expected == 294);
  auto r4 = injectivity_rank(4);
  CHECK(r4.word_count == expected);
  CHECK(r4.rank == expected);
}

TEST_CASE("morphism images of inverse pairs multiply to one") {
  for (Morphism m : {braid(BraidGen::Rho, h()), braid(BraidGen::Sigma, h()),
                     dagger(h()), xi(h()), z4()}) {
    auto check_pair = [&](GenId a, GenId b) {
      NCPoly prod = m.images.at(a) * m.images.at(b);
      CHECK(m.target->normalize(prod) == NCPoly::unit(m.target->alphabet));
    };
    check_pair(hhat_gen::X, hhat_gen::Xi);
    check_pair(hhat_gen::Y, hhat_gen::Yi);
  }
}
