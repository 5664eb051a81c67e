#include "uaw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "uaw/coeff_matrix.hpp"
#include "uaw/morphisms.hpp"

namespace uaw {

namespace {

NCPoly parse_delta(const std::string& text) {
  return parse_expr(text, delta_q().parse_context());
}
NCPoly parse_hhat(const std::string& text) {
  return parse_expr(text, hhat_q().parse_context());
}

Word word_of(const AlgebraSpec& spec, const std::string& text) {
  NCPoly p = spec.parse(text);
  return p.terms().begin()->first;
}

void check_resolution(Report& report, const AlgebraSpec& spec,
                      const std::string& overlap, const std::string& expected) {
  auto res = spec.system.resolve(word_of(spec, overlap));
  NCPoly want = spec.normalize(spec.parse(expected));
  bool ok = res.resolved && res.left_first == want;
  report.check("resolution of " + overlap, ok,
               ok ? "" : res.left_first.str() + "  !=  " + want.str());
}

struct MatrixEntry {
  int i, j;
  const char* entry;
};

CoeffMatrix expected_matrix(const std::vector<MatrixEntry>& entries) {
  const AlgebraSpec& h = hhat_q();
  CoeffMatrix cm;
  for (const auto& e : entries) cm.add_entry(e.i, e.j, parse_t_laurent(e.entry, h));
  return cm;
}

void check_matrix(Report& report, const std::string& label, const NCPoly& element,
                  const std::vector<MatrixEntry>& expected) {
  CoeffMatrix got = coefficient_matrix(element, hhat_q());
  CoeffMatrix want = expected_matrix(expected);
  bool ok = got == want;
  report.check("coefficient matrix of " + label, ok,
               ok ? "" : "got\n" + got.table() + "want\n" + want.table());
}

// the coefficient matrices entering the D = 0 combination
const std::vector<MatrixEntry> kMatC = {
    {-1, 0, "-q^-1*t0^-1*T3"}, {-1, 1, "q^-1*t0^-2"},
    {0, 0, "t0^-1*T2+q^-1*T1*T3"}, {0, 1, "-q^-1*t0^-1*T1"},
    {1, -1, "-q^-1"}};
const std::vector<MatrixEntry> kMatYiC = {
    {-2, 0, "-q^-1*t0^-1*T3"}, {-2, 1, "q^-1*t0^-2"},
    {-1, 0, "t0^-1*T2+q^-1*T1*T3"}, {-1, 1, "-q^-1*t0^-1*T1"},
    {0, -1, "-q^-1"}};
const std::vector<MatrixEntry> kMatYiCB = {
    {-2, -1, "-q^-1*t0^-1*T3"}, {-2, 0, "q^-1*t0^-2"},
    {-2, 1, "-q^-1*t0^-1*T3"},  {-2, 2, "q^-1*t0^-2"},
    {-1, -1, "t0^-1*T2+q^-1*T1*T3"}, {-1, 0, "-q^-1*t0^-1*T1"},
    {-1, 1, "t0^-1*T2+q^-1*T1*T3"},  {-1, 2, "-q^-1*t0^-1*T1"},
    {0, -2, "-q^-1"}, {0, 0, "-q^-1"}};
const std::vector<MatrixEntry> kMatXC = {
    {-1, -1, "q^-3*t0*T3"},
    {-1, 0, "-q^-1*T3^2-q^-3*t0^2-q^-3"},
    {-1, 1, "q^-2*(q^-1*t0+q*t0^-1)*T3"},
    {-1, 2, "-q^-3"},
    {0, -1, "-q^-2*t0*T2"},
    {0, 0, "q^-1*t0*T1+T2*T3"},
    {1, 0, "-q"}};
const std::vector<MatrixEntry> kMatYXC = {
    {0, -1, "q^-3*t0*T3"},
    {0, 0, "-q^-1*T3^2-q^-3*t0^2-q^-3"},
    {0, 1, "q^-2*(q^-1*t0+q*t0^-1)*T3"},
    {0, 2, "-q^-3"},
    {1, -1, "-q^-2*t0*T2"},
    {1, 0, "q^-1*t0*T1+T2*T3"},
    {2, 0, "-q"}};
const std::vector<MatrixEntry> kMatYiXC = {
    {-2, -1, "q^-3*t0*T3"},
    {-2, 0, "-q^-1*T3^2-q^-3*t0^2-q^-3"},
    {-2, 1, "q^-2*(q^-1*t0+q*t0^-1)*T3"},
    {-2, 2, "-q^-3"},
    {-1, -1, "-q^-2*t0*T2"},
    {-1, 0, "q^-1*t0*T1+T2*T3"},
    {0, 0, "-q"}};

const char* kGExpr =
    "q^2*Y*Y + q^-2*Y^-1*Y^-1 - q*Y*alpha - q^-1*Y^-1*alpha + q^-2*X*X "
    "+ q^-2*X^-1*X^-1 - q^-1*X*beta - q^-1*X^-1*beta + q^2 + 3*q^-2 - Omega";

std::vector<MatrixEntry> matrix_g_entries() {
  return {{-2, 0, "q^-2"},
          {-1, 0, "-q^-1*alpha"},
          {0, -2, "q^-2"},
          {0, -1, "-q^-1*beta"},
          {0, 0, "q^2+3*q^-2-Omega"},
          {0, 1, "-q^-1*beta"},
          {0, 2, "q^-2"},
          {1, 0, "-q*alpha"},
          {2, 0, "q^2"}};
}

}  // namespace

Report criterion_confluence_delta() {
  Report report;
  report.name = "confluence of delta-q";
  const AlgebraSpec& d = delta_q();
  auto conf = d.system.check_confluence();
  report.check("all overlaps resolve", conf.all_resolved());
  auto overlaps = d.system.overlaps();
  for (const char* w : {"B*C*A", "B*C*C", "C*C*A"}) {
    bool found = std::find(overlaps.begin(), overlaps.end(), word_of(d, w)) !=
                 overlaps.end();
    report.check(std::string("overlap ") + w + " present", found);
  }
  check_resolution(report, d, "B*C*A",
                   "q^-3*(q^2-q^-2)*Omega + q^-6*A*C*B - q^-3*(q^4-q^-4)*A*A "
                   "- q^-3*(q^4-q^-4)*B*B + q^-3*(q^3-q^-3)*A*alpha "
                   "+ q^-3*(q^3-q^-3)*B*beta + q^-3*(q-q^-1)*C*gamma");
  check_resolution(report, d, "B*C*C",
                   "q^-6*B*Omega - q^-7*A*C*B*B - q^-8*A*A*B - q^-8*B*B*B "
                   "+ q^-7*A*B*alpha + q^-7*B*B*beta + q^-5*C*B*gamma "
                   "- q^-3*(q^4-q^-4)*A*C + q^-2*(q^2-q^-2)*C*alpha "
                   "+ q^-4*(q^2-q^-2)^2*B - q^-4*(q-q^-1)*(q^2-q^-2)*beta");
  check_resolution(report, d, "C*C*A",
                   "q^-6*A*Omega - q^-7*A*A*C*B - q^-8*A*B*B - q^-8*A*A*A "
                   "+ q^-7*A*A*alpha + q^-7*A*B*beta + q^-5*A*C*gamma "
                   "- q^-3*(q^4-q^-4)*C*B + q^-2*(q^2-q^-2)*C*beta "
                   "+ q^-4*(q^2-q^-2)^2*A - q^-4*(q-q^-1)*(q^2-q^-2)*alpha");
  return report;
}

Report criterion_confluence_hhat() {
  Report report;
  report.name = "confluence of hhat-q";
  const AlgebraSpec& h = hhat_q();
  auto conf = h.system.check_confluence();
  report.check("all overlaps resolve", conf.all_resolved());
  auto overlaps = h.system.overlaps();
  const char* listed[] = {
      "t0*X*Y",      "t0*X^-1*Y",   "t0*X*Y^-1",  "t0*X^-1*Y^-1",
      "t0*t0*X",     "t0*t0*X^-1",  "t0*t0*Y",    "t0*t0*Y^-1",
      "X*X^-1*Y",    "X*X^-1*Y^-1", "X^-1*X*Y",   "X^-1*X*Y^-1",
      "X*Y*Y^-1",    "X*Y^-1*Y",    "X^-1*Y*Y^-1", "X^-1*Y^-1*Y",
      "t0*X*X^-1",   "t0*X^-1*X",   "t0*Y*Y^-1",  "t0*Y^-1*Y"};
  bool all_listed = true;
  for (const char* w : listed)
    if (std::find(overlaps.begin(), overlaps.end(), word_of(h, w)) ==
        overlaps.end())
      all_listed = false;
  report.check("contains the 20 nontrivial ambiguities", all_listed);

  check_resolution(report, h, "t0*X*Y",
                   "q^2*Y*X*T0 + q^-2*Y*X^-1*T0 + q^2*Y^-1*X^-1*t0 "
                   "+ q^2*Y^-1*X*T0 - q^2*X*T1 + (q^-2-1)*X*T0*T0*T1 "
                   "+ (1-q^-2)*X*t0*T0*T1 - X^-1*T1 - Y*T3 - q^2*Y^-1*T3 "
                   "- (q-q^-1)*t0*T0*T2 + (1-q^-2)*T0*T1*T3 + q*T2");
  check_resolution(report, h, "t0*X^-1*Y",
                   "q^-2*Y^-1*X*t0 - q^-2*Y^-1*X*T0 + Y*T3 + q^-2*Y^-1*T3 "
                   "- q^-1*T2");
  check_resolution(report, h, "t0*X*Y^-1",
                   "q^-2*Y*X^-1*t0 - q^-2*Y*X^-1*T0 + (q^-2-1)*X*t0*T0*T1 "
                   "+ (1-q^-2)*X*T0*T0*T1 + q^-2*X*T1 + X^-1*T1 "
                   "+ (1-q^-2)*t0*T1*T3 + (q^-2-1)*T0*T1*T3 - q^-1*T2");
  check_resolution(report, h, "t0*X^-1*Y^-1",
                   "q^2*Y*X*t0 - q^2*Y*X*T0 + q*T2");
  check_resolution(report, h, "t0*t0*X", "X^-1*t0*T0 + X*T0*T0 - X - T0*T3");
  check_resolution(report, h, "t0*t0*X^-1", "X*t0*T0 - X*T0*T0 - X^-1 + T0*T3");
  check_resolution(report, h, "t0*t0*Y", "Y^-1*t0*T0 + Y*T0*T0 - Y - T0*T1");
  check_resolution(report, h, "t0*t0*Y^-1", "Y*t0*T0 - Y*T0*T0 - Y^-1 + T0*T1");
  const std::pair<const char*, const char*> trivial[] = {
      {"X*X^-1*Y", "Y"},      {"X*X^-1*Y^-1", "Y^-1"}, {"X^-1*X*Y", "Y"},
      {"X^-1*X*Y^-1", "Y^-1"}, {"X*Y*Y^-1", "X"},       {"X*Y^-1*Y", "X"},
      {"X^-1*Y*Y^-1", "X^-1"}, {"X^-1*Y^-1*Y", "X^-1"}, {"t0*X*X^-1", "t0"},
      {"t0*X^-1*X", "t0"},     {"t0*Y*Y^-1", "t0"},     {"t0*Y^-1*Y", "t0"}};
  for (const auto& [amb, res] : trivial) check_resolution(report, h, amb, res);
  return report;
}

Report criterion_psi_hom() {
  Report report = verify_hom(psi());
  report.name = "psi is a homomorphism";
  const AlgebraSpec& h = hhat_q();
  NCPoly omega_image = apply(psi(), parse_delta("Omega"));
  bool ok = omega_image == derived("Omega", h);
  report.check("psi(Omega) equals the Casimir image element", ok,
               ok ? "" : omega_image.str());
  return report;
}

Report criterion_d_zero() {
  Report report;
  report.name = "Casimir-image matrix combination (D = 0)";
  const AlgebraSpec& h = hhat_q();
  check_matrix(report, "C", parse_hhat("C"), kMatC);
  check_matrix(report, "Y^-1*C", parse_hhat("Y^-1*C"), kMatYiC);
  check_matrix(report, "Y^-1*C*(X+X^-1)", parse_hhat("Y^-1*C*(X+X^-1)"), kMatYiCB);
  check_matrix(report, "X*C", parse_hhat("X*C"), kMatXC);
  check_matrix(report, "Y*X*C", parse_hhat("Y*X*C"), kMatYXC);
  check_matrix(report, "Y^-1*X*C", parse_hhat("Y^-1*X*C"), kMatYiXC);
  check_matrix(report, "G", parse_hhat(kGExpr), matrix_g_entries());

  TPoly s_c = parse_t_laurent("q*(T1*T3 - gamma + q*t0^-1*T2)", h);
  TPoly s_yic = parse_t_laurent("q*t0^-1*T3", h);
  TPoly s_b = parse_t_laurent("q^-1", h);
  TPoly s_xc = parse_t_laurent("q*t0^-1*T1", h);
  TPoly s_yxc = parse_t_laurent("q", h);
  TPoly s_yixc = parse_t_laurent("q*t0^-2", h);
  CoeffMatrix combo = expected_matrix(kMatC) * s_c +
                      expected_matrix(kMatYiC) * (-s_yic) +
                      expected_matrix(kMatYiCB) * s_b +
                      expected_matrix(kMatXC) * (-s_xc) +
                      expected_matrix(kMatYXC) * s_yxc +
                      expected_matrix(kMatYiXC) * s_yixc +
                      expected_matrix(matrix_g_entries());
  report.check("coefficient matrix of D is zero", combo.is_zero(),
               combo.is_zero() ? "" : combo.table());
  return report;
}

Report criterion_injectivity() {
  Report report;
  report.name = "injectivity at desk scale";
  auto r2 = injectivity_rank(2);
  report.check("bound 2: word count 35", r2.word_count == 35,
               std::to_string(r2.word_count));
  report.check("bound 2: rank 35", r2.rank == 35, std::to_string(r2.rank));
  auto r3 = injectivity_rank(3);
  report.check("bound 3: word count 112", r3.word_count == 112,
               std::to_string(r3.word_count));
  report.check("bound 3: rank 112", r3.rank == 112, std::to_string(r3.rank));
  return report;
}

Report criterion_braid_equivariance() {
  Report report;
  report.name = "braid equivariance";
  for (const char* g : {"rho", "sigma", "tau"}) {
    Report square = verify_square(g);
    for (const auto& item : square.items)
      report.check(std::string(g) + " square on " + item.item, item.pass,
                   item.residual);
  }
  Report braid_rel = verify_braid_relation();
  for (const auto& item : braid_rel.items)
    report.check(item.item, item.pass, item.residual);
  return report;
}

Report criterion_dagger_xi() {
  Report report;
  report.name = "dagger and xi diagrams";
  for (const char* g : {"dagger", "xi"}) {
    Report square = verify_square(g);
    for (const auto& item : square.items)
      report.check(std::string(g) + " square on " + item.item, item.pass,
                   item.residual);
  }
  for (const AlgebraSpec* spec : {&delta_q(), &hhat_q()}) {
    Morphism dag = dagger(*spec);
    bool ok = true;
    for (const auto& g : spec->alphabet->generators()) {
      NCPoly u = NCPoly::single(spec->alphabet, g.id);
      if (apply(dag, apply(dag, u)) != spec->normalize(u)) ok = false;
    }
    report.check("dagger^2 = id on " + spec->display_name, ok);

    Morphism x1 = xi(*spec);
    Morphism x2 = xi(*x1.target);
    ok = true;
    for (const auto& g : spec->alphabet->generators()) {
      NCPoly u = NCPoly::single(spec->alphabet, g.id);
      if (apply(x2, apply(x1, u)) != spec->normalize(u)) ok = false;
    }
    report.check("xi o xi = id on " + spec->display_name, ok);
  }
  return report;
}

Report criterion_coeff_matrices() {
  Report report;
  report.name = "coefficient matrices of A, B, C, theta, XC";
  check_matrix(report, "A", parse_hhat("A"), {{-1, 0, "1"}, {1, 0, "1"}});
  check_matrix(report, "B", parse_hhat("B"), {{0, -1, "1"}, {0, 1, "1"}});
  check_matrix(report, "C", parse_hhat("C"), kMatC);
  check_matrix(report, "theta", parse_hhat("theta"),
               {{-1, 0, "T3"},
                {-1, 1, "-t0^-1"},
                {0, 0, "q^-1*t0^2*T2"},
                {0, 1, "T1"},
                {1, -1, "t0"}});
  check_matrix(report, "X*C", parse_hhat("X*C"), kMatXC);
  return report;
}

Report criterion_centralizer() {
  Report report;
  report.name = "centralizer of t0";
  const AlgebraSpec& d = delta_q();
  const AlgebraSpec& h = hhat_q();
  Morphism psi_m = psi();
  bool all_commute = true;
  for (const Word& w : enumerate_basis(d, 3)) {
    NCPoly image = apply(psi_m, NCPoly::term(d.alphabet, w));
    if (!commutes_with_t0(image, h)) all_commute = false;
  }
  report.check("psi-images of degree<=3 basis words commute with t0",
               all_commute);

  NCPoly t = NCPoly::single(h.alphabet, hhat_gen::t0);
  NCPoly res_x = commutator(t, parse_hhat("X"), h);
  report.check("[t0, X] residual per the t0X rule",
               res_x == h.normalize(parse_hhat("X^-1*t0 + X*T0 - T3 - X*t0")),
               res_x.str());
  NCPoly res_y = commutator(t, parse_hhat("Y"), h);
  report.check("[t0, Y] residual per the t0Y rule",
               res_y == h.normalize(parse_hhat("Y^-1*t0 + Y*T0 - T1 - Y*t0")),
               res_y.str());
  report.check("Y*X does not commute with t0",
               !commutes_with_t0(parse_hhat("Y*X"), h));

  Report pres = verify_centralizer_presentation();
  for (const auto& item : pres.items) report.check(item.item, item.pass, item.residual);
  return report;
}

Report criterion_center() {
  Report report;
  report.name = "center at desk scale";
  const AlgebraSpec& d = delta_q();
  const AlgebraSpec& h = hhat_q();
  auto kernel = center_kernel(2, 1);
  std::vector<NCPoly> expected;
  for (const char* name : {"1", "T0", "T1", "T2", "T3"})
    expected.push_back(h.normalize(parse_hhat(name)));
  bool ok = kernel.size() == expected.size();
  if (ok)
    for (size_t i = 0; i < kernel.size(); ++i)
      if (kernel[i] != expected[i]) ok = false;
  std::ostringstream got;
  for (const auto& v : kernel) got << v.str() << "; ";
  report.check("center kernel (N=2, M=1) is {1, T0, T1, T2, T3}", ok, got.str());

  for (const char* name : {"Omega", "alpha", "beta", "gamma"})
    report.check(std::string(name) + " is central in delta-q",
                 is_central(parse_delta(name), d));
  for (const char* name : {"A", "B", "C"})
    report.check(std::string(name) + " is not central in delta-q",
                 !is_central(parse_delta(name), d));
  return report;
}

Report criterion_identities() {
  Report report;
  report.name = "identity suite";
  const AlgebraSpec& h = hhat_q();
  auto zero = [&](const char* label, const std::string& lhs,
                  const std::string& rhs) {
    NCPoly residual = h.normalize(parse_hhat(lhs) - parse_hhat(rhs));
    report.check(label, residual.is_zero(), residual.str());
  };

  // the T_i in terms of X, Y, t0
  zero("T0 = t0 + t0^-1", "T0", "t0 + t0^-1");
  zero("T1 = t0^-1*Y + Y^-1*t0", "T1", "t0^-1*Y + Y^-1*t0");
  zero("T1 = Y*t0^-1 + t0*Y^-1", "T1", "Y*t0^-1 + t0*Y^-1");
  zero("T2 = q*t0^-1*Y*X + q^-1*X^-1*Y^-1*t0", "T2",
       "q*t0^-1*Y*X + q^-1*X^-1*Y^-1*t0");
  zero("T2 = q*X*t0^-1*Y + q^-1*Y^-1*t0*X^-1", "T2",
       "q*X*t0^-1*Y + q^-1*Y^-1*t0*X^-1");
  zero("T2 = q*Y*X*t0^-1 + q^-1*t0*X^-1*Y^-1", "T2",
       "q*Y*X*t0^-1 + q^-1*t0*X^-1*Y^-1");
  zero("T3 = t0^-1*X + X^-1*t0", "T3", "t0^-1*X + X^-1*t0");
  zero("T3 = X*t0^-1 + t0*X^-1", "T3", "X*t0^-1 + t0*X^-1");

  // how t0 commutes past X, Y
  zero("t0*X relation", "t0*X", "X^-1*t0 + X*T0 - T3");
  zero("t0*X^-1 relation", "t0*X^-1", "X*t0 - X*T0 + T3");
  zero("t0*Y relation", "t0*Y", "Y^-1*t0 + Y*T0 - T1");
  zero("t0*Y^-1 relation", "t0*Y^-1", "Y*t0 - Y*T0 + T1");

  // the eight product formulas
  zero("t0*t2", "t0*t2", "q^-1*(T3-t3)*T1 - q^-1*Y*X^-1");
  zero("t0^-1*t2^-1", "t0^-1*(T2-t2)", "q*t1*T3 - q*X^-1*Y");
  zero("t1*t3", "t1*t3", "q^-1*t0^-1*T2 - q^-2*X^-1*Y^-1");
  zero("t1^-1*t3^-1", "(T1-t1)*(T3-t3)", "q*t2*T0 - Y^-1*X^-1");
  zero("t2*t0", "t2*t0", "q^-1*(T1-t1)*T3 - q^-1*Y^-1*X");
  zero("t2^-1*t0^-1", "(T2-t2)*t0^-1", "q*t3*T1 - q*X*Y^-1");
  zero("t3*t1", "t3*t1", "q^-1*(T2-t2)*T0 - X*Y");
  zero("t3^-1*t1^-1", "(T3-t3)*(T1-t1)", "q*t0*T2 - q^2*Y*X");

  // the C_i in the T-basis
  zero("C0 form", "C0",
       "q*T2*t0 + T3*t1 + q^-1*T0*t2 + T1*t3 - q^-1*T0*T2 - T1*T3");
  zero("C1 form", "C1",
       "T2*t0 + q*T3*t1 + T0*t2 + q^-1*T1*t3 - T0*T2 - q^-1*T1*T3");
  zero("C2 form", "C2",
       "q^-1*T2*t0 + T3*t1 + q*T0*t2 + T1*t3 - q^-1*T0*T2 - T1*T3");
  zero("C3 form", "C3",
       "T2*t0 + q^-1*T3*t1 + T0*t2 + q*T1*t3 - T0*T2 - q^-1*T1*T3");

  // C and C' expanded
  zero("C expansion", "C", "(q*t3 + q^-1*(T3-t3))*T1 - q*X*Y^-1 - q^-1*Y*X^-1");
  zero("C' two ways", "q*t1*t3 + q^-1*(T3-t3)*(T1-t1)",
       "T0*T2 - q*Y*X - q^-1*X^-1*Y^-1");

  zero("X^-1*C identity", "X^-1*C",
       "q^-2*C*(X+X^-1) - X*C - q^-1*(q^2-q^-2)*(Y+Y^-1) + q^-1*(q-q^-1)*alpha");
  zero("q*C = gamma - theta*t0^-1", "q*C", "gamma - theta*t0^-1");

  // the map h -> t0 h - h t0^-1 on the summand representatives
  zero("t0*1 - 1*t0^-1", "t0 - t0^-1", "t0 - t0^-1");
  zero("t0*X - X*t0^-1", "t0*X - X*t0^-1", "(X+X^-1)*t0 - T3");
  zero("t0*Y - Y*t0^-1", "t0*Y - Y*t0^-1", "(Y+Y^-1)*t0 - T1");
  zero("t0*Y*X - Y*X*t0^-1", "t0*Y*X - Y*X*t0^-1",
       "q*(C*t0 - T2) + ((Y+Y^-1)*(X+X^-1) - T1*T3)*t0");
  zero("(A*B - T1*T3)*t0 expansion", "((Y+Y^-1)*(X+X^-1) - T1*T3)*t0",
       "(Y+Y^-1)*((X+X^-1)*t0 - T3) + ((Y+Y^-1)*t0 - T1)*t0*T3 "
       "- (Y+Y^-1)*t0*(t0 - t0^-1)*T3");

  // sigma on the four products
  {
    Morphism sig = braid(BraidGen::Sigma, h);
    auto sigma_eq = [&](const char* label, const std::string& from,
                        const std::string& to) {
      NCPoly residual =
          h.normalize(apply(sig, parse_hhat(from)) - h.normalize(parse_hhat(to)));
      report.check(label, residual.is_zero(), residual.str());
    };
    sigma_eq("sigma(t1*t3)", "t1*t3", "q^-1*t0^-1*(T2-t2)");
    sigma_eq("sigma(t3^-1*t1^-1)", "(T3-t3)*(T1-t1)", "q*t2*t0");
    sigma_eq("sigma(t0*t2)", "t0*t2", "q^-1*(T3-t3)*(T1-t1)");
    sigma_eq("sigma(t2^-1*t0^-1)", "(T2-t2)*t0^-1", "q*t1*t3");
  }

  // the two displayed equations relating C, C', A, B
  {
    std::string cp = "(T0*T2 - q*Y*X - q^-1*X^-1*Y^-1)";
    zero("q*C + q^-1*C' + A*B", "q*C + q^-1*" + cp + " + (Y+Y^-1)*(X+X^-1)",
         "(q^-1*t0 + q*t0^-1)*T2 + T1*T3");
    zero("q^-1*C + q*C' + B*A", "q^-1*C + q*" + cp + " + (X+X^-1)*(Y+Y^-1)",
         "(q^-1*t0 + q*t0^-1)*T2 + T1*T3");
  }

  // cyclic products equal q^-1
  zero("t0*t1*t2*t3", "t0*t1*t2*t3", "q^-1");
  zero("t1*t2*t3*t0", "t1*t2*t3*t0", "q^-1");
  zero("t2*t3*t0*t1", "t2*t3*t0*t1", "q^-1");
  zero("t3*t0*t1*t2", "t3*t0*t1*t2", "q^-1");
  return report;
}

Report criterion_basis_counts() {
  Report report;
  report.name = "basis counting at length 2";
  const AlgebraSpec& d = delta_q();
  const AlgebraSpec& h = hhat_q();

  auto brute_force_count = [](const AlgebraSpec& spec) {
    long count = 0;
    GenId n = static_cast<GenId>(spec.alphabet->size());
    for (GenId a = 0; a < n; ++a)
      for (GenId b = 0; b < n; ++b)
        if (spec.system.is_irreducible(Word({a, b}))) ++count;
    return count;
  };
  long delta_brute = brute_force_count(d);
  long hhat_brute = brute_force_count(h);
  report.check("delta-q brute force = 27", delta_brute == 27,
               std::to_string(delta_brute));
  report.check("hhat-q brute force = 42", hhat_brute == 42,
               std::to_string(hhat_brute));
  report.check("delta-q enumerate matches brute force",
               static_cast<long>(enumerate_basis_exact(d, 2).size()) == delta_brute);
  report.check("hhat-q enumerate matches brute force",
               static_cast<long>(enumerate_basis_exact(h, 2).size()) == hhat_brute);
  report.check("delta-q shape count matches", d.basis_count_exact(2) == 27);
  report.check("hhat-q shape count matches", h.basis_count_exact(2) == 42);
  return report;
}

std::vector<AcceptanceResult> run_acceptance() {
  using Clock = std::chrono::steady_clock;
  std::vector<std::pair<Report (*)(), double>> criteria = {
      {criterion_confluence_delta, 1.0}, {criterion_confluence_hhat, 5.0},
      {criterion_psi_hom, 10.0},         {criterion_d_zero, 10.0},
      {criterion_injectivity, 120.0},    {criterion_braid_equivariance, 10.0},
      {criterion_dagger_xi, 5.0},        {criterion_coeff_matrices, 2.0},
      {criterion_centralizer, 30.0},     {criterion_center, 60.0},
      {criterion_identities, 30.0},      {criterion_basis_counts, 1.0}};
  std::vector<AcceptanceResult> results;
  for (const auto& [fn, budget] : criteria) {
    auto start = Clock::now();
    Report rep = fn();
    auto stop = Clock::now();
    results.push_back(AcceptanceResult{
        std::move(rep), std::chrono::duration<double>(stop - start).count(),
        budget});
  }
  return results;
}

std::vector<Report> run_suite(const std::string& name) {
  if (name == "all") {
    std::vector<Report> out;
    for (auto& r : run_acceptance()) out.push_back(std::move(r.report));
    return out;
  }
  if (name == "psi") return {criterion_psi_hom()};
  if (name == "confluence")
    return {criterion_confluence_delta(), criterion_confluence_hhat()};
  if (name == "squares")
    return {verify_square("rho"), verify_square("sigma"), verify_square("tau"),
            verify_square("dagger"), verify_square("xi")};
  if (name == "braid") return {criterion_braid_equivariance()};
  if (name == "dagger-xi") return {criterion_dagger_xi()};
  if (name == "matrices")
    return {criterion_coeff_matrices(), criterion_d_zero()};
  if (name == "centralizer") return {criterion_centralizer()};
  if (name == "center") return {criterion_center()};
  if (name == "identities") return {criterion_identities()};
  if (name == "injectivity") return {criterion_injectivity()};
  if (name == "basis-counts") return {criterion_basis_counts()};
  throw std::invalid_argument("unknown verification suite: " + name);
}

std::string Report::summary() const {
  std::ostringstream out;
  out << (all_pass() ? "PASS" : "FAIL") << "  " << name << "\n";
  for (const auto& i : items) {
    out << "  " << (i.pass ? "ok   " : "FAIL ") << i.item << "\n";
    if (!i.pass && !i.residual.empty())
      out << "       residual: " << i.residual << "\n";
  }
  return out.str();
}

}  // namespace uaw
