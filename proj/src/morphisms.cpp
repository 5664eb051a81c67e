#include "uaw/morphisms.hpp"

#include "uaw/linalg.hpp"

namespace uaw {

namespace {

std::shared_ptr<const AlgebraSpec> shared(const AlgebraSpec& spec) {
  return std::make_shared<const AlgebraSpec>(spec);
}

/// Images given as expression strings over the target algebra, keyed by
/// source generator name.
Morphism from_table(std::string name, const AlgebraSpec& source,
                    const AlgebraSpec& target,
                    const std::vector<std::pair<std::string, std::string>>& table) {
  Morphism m;
  m.name = std::move(name);
  m.source = shared(source);
  m.target = shared(target);
  ParseContext ctx = target.parse_context();
  for (const auto& [gen, image] : table) {
    auto id = source.alphabet->find(gen);
    if (!id) throw UnknownName(gen);
    m.images.emplace(*id, target.normalize(parse_expr(image, ctx)));
  }
  return m;
}

}  // namespace

NCPoly apply(const Morphism& m, const NCPoly& p, long fuel) {
  NCPoly image = p.substituted(m.images, m.twist, m.antihom);
  if (m.conjugator)
    image = m.conjugator->first * image * m.conjugator->second;
  return m.target->normalize(image, fuel);
}

Morphism psi() {
  const AlgebraSpec& d = delta_q();
  const AlgebraSpec& h = hhat_q();
  Morphism m;
  m.name = "psi";
  m.source = shared(d);
  m.target = shared(h);
  for (const char* n : {"A", "B", "C", "Omega", "alpha", "beta", "gamma"})
    m.images.emplace(*d.alphabet->find(n), derived(n, h));
  return m;
}

Morphism braid(BraidGen g, const AlgebraSpec& spec) {
  if (spec.name == AlgebraName::DeltaQ) {
    switch (g) {
      case BraidGen::Rho:
        return from_table("rho", spec, spec,
                          {{"A", "B"},
                           {"B", "C"},
                           {"C", "A"},
                           {"Omega", "Omega"},
                           {"alpha", "beta"},
                           {"beta", "gamma"},
                           {"gamma", "alpha"}});
      case BraidGen::Sigma:
        return from_table("sigma", spec, spec,
                          {{"A", "B"},
                           {"B", "A"},
                           {"C", "C + (A*B-B*A)/(q-q^-1)"},
                           {"Omega", "Omega"},
                           {"alpha", "beta"},
                           {"beta", "alpha"},
                           {"gamma", "gamma"}});
      case BraidGen::Tau:
        return identity_morphism(spec);
    }
  }
  switch (g) {
    case BraidGen::Rho:
      return from_table("rho", spec, spec,
                        {{"Y", "X"},
                         {"Y^-1", "X^-1"},
                         {"X", "q^-1*Y^-1*t0*X^-1*t0"},
                         {"X^-1", "q*(T0-t0)*X*(T0-t0)*Y"},
                         {"t0", "t0"},
                         {"T0", "T0"},
                         {"T1", "T3"},
                         {"T2", "T1"},
                         {"T3", "T2"}});
    case BraidGen::Sigma:
      return from_table("sigma", spec, spec,
                        {{"Y", "X"},
                         {"Y^-1", "X^-1"},
                         {"X", "(T0-t0)*Y*t0"},
                         {"X^-1", "(T0-t0)*Y^-1*t0"},
                         {"t0", "t0"},
                         {"T0", "T0"},
                         {"T1", "T3"},
                         {"T2", "T2"},
                         {"T3", "T1"}});
    case BraidGen::Tau: {
      Morphism m = identity_morphism(spec);
      m.name = "tau";
      ParseContext ctx = spec.parse_context();
      m.conjugator = std::make_pair(spec.normalize(parse_expr("T0-t0", ctx)),
                                    spec.normalize(parse_expr("t0", ctx)));
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

Morphism dagger(const AlgebraSpec& spec) {
  Morphism m;
  if (spec.name == AlgebraName::DeltaQ) {
    m = from_table("dagger", spec, spec,
                   {{"A", "B"},
                    {"B", "A"},
                    {"C", "C"},
                    {"Omega", "Omega"},
                    {"alpha", "beta"},
                    {"beta", "alpha"},
                    {"gamma", "gamma"}});
  } else {
    m = from_table("dagger", spec, spec,
                   {{"Y", "X"},
                    {"Y^-1", "X^-1"},
                    {"X", "Y"},
                    {"X^-1", "Y^-1"},
                    {"t0", "t0"},
                    {"T0", "T0"},
                    {"T1", "T3"},
                    {"T2", "T2"},
                    {"T3", "T1"}});
  }
  m.antihom = true;
  return m;
}

// xi is an F-algebra isomorphism onto the q -> 1/q sibling: coefficients are
// carried over unchanged, and the inversion lives in the target's rule set.
Morphism xi(const AlgebraSpec& spec) {
  AlgebraSpec target = twisted_spec(spec);
  Morphism m;
  if (spec.name == AlgebraName::DeltaQ) {
    m = from_table("xi", spec, target,
                   {{"A", "B"},
                    {"B", "A"},
                    {"C", "C"},
                    {"Omega", "Omega"},
                    {"alpha", "beta"},
                    {"beta", "alpha"},
                    {"gamma", "gamma"}});
  } else {
    m = from_table("xi", spec, target,
                   {{"Y", "X^-1"},
                    {"Y^-1", "X"},
                    {"X", "Y^-1"},
                    {"X^-1", "Y"},
                    {"t0", "T0-t0"},
                    {"T0", "T0"},
                    {"T1", "T3"},
                    {"T2", "T2"},
                    {"T3", "T1"}});
  }
  return m;
}

Morphism z4() {
  const AlgebraSpec& h = hhat_q();
  return from_table("z4", h, h,
                    {{"X", "Y"},
                     {"X^-1", "Y^-1"},
                     {"Y", "q^-1*X^-1"},
                     {"Y^-1", "q*X"},
                     {"t0", "(T0-t0)*Y"},
                     {"T0", "T1"},
                     {"T1", "T2"},
                     {"T2", "T3"},
                     {"T3", "T0"}});
}

Morphism identity_morphism(const AlgebraSpec& spec) {
  Morphism m;
  m.name = "id";
  m.source = shared(spec);
  m.target = m.source;
  for (const auto& g : spec.alphabet->generators())
    m.images.emplace(g.id, NCPoly::single(spec.alphabet, g.id));
  return m;
}

Report verify_hom(const Morphism& m, long fuel) {
  Report report;
  report.name = "hom(" + m.name + ")";
  for (const RewriteRule& rule : m.source->system.rules()) {
    NCPoly lhs = NCPoly::term(m.source->alphabet, rule.lhs);
    NCPoly residual = apply(m, lhs, fuel) - apply(m, rule.rhs, fuel);
    std::string label = m.source->alphabet->name(rule.lhs[0]) + "*" +
                        m.source->alphabet->name(rule.lhs[1]);
    report.check(label, residual.is_zero(), residual.str());
  }
  return report;
}

Report verify_square(const std::string& g, long fuel) {
  Report report;
  report.name = "square(" + g + ")";
  const AlgebraSpec& d = delta_q();
  const AlgebraSpec& h = hhat_q();
  Morphism psi_m = psi();

  Morphism g_delta, g_hhat;
  Morphism psi_prime = psi_m;  // psi on the far side of the square
  if (g == "rho" || g == "sigma" || g == "tau") {
    BraidGen bg = g == "rho"   ? BraidGen::Rho
                  : g == "sigma" ? BraidGen::Sigma
                                 : BraidGen::Tau;
    g_delta = braid(bg, d);
    g_hhat = braid(bg, h);
  } else if (g == "dagger") {
    g_delta = dagger(d);
    g_hhat = dagger(h);
  } else if (g == "xi") {
    g_delta = xi(d);
    g_hhat = xi(h);
    // psi with every image coefficient twisted, between the q->1/q algebras
    psi_prime.source = g_delta.target;
    psi_prime.target = g_hhat.target;
    for (auto& [id, image] : psi_prime.images) {
      NCPoly twisted(image.alphabet());
      for (const auto& [w, c] : image.terms()) twisted.add_term(w, c.inverted_q());
      image = psi_prime.target->normalize(twisted);
    }
  } else {
    throw std::invalid_argument("unknown square generator " + g);
  }

  for (const auto& gen : d.alphabet->generators()) {
    NCPoly u = NCPoly::single(d.alphabet, gen.id);
    NCPoly path1 = apply(g_hhat, apply(psi_m, u, fuel), fuel);
    NCPoly path2 = apply(psi_prime, apply(g_delta, u, fuel), fuel);
    NCPoly residual = path1 - path2;
    report.check(gen.name, residual.is_zero(), residual.str());
  }
  return report;
}

Report verify_braid_relation(long fuel) {
  Report report;
  report.name = "braid-relation";
  const AlgebraSpec& h = hhat_q();
  Morphism rho = braid(BraidGen::Rho, h);
  Morphism sigma = braid(BraidGen::Sigma, h);
  Morphism tau = braid(BraidGen::Tau, h);
  Morphism four = z4();

  for (const auto& gen : h.alphabet->generators()) {
    NCPoly u = NCPoly::single(h.alphabet, gen.id);
    NCPoly r3 = apply(rho, apply(rho, apply(rho, u, fuel), fuel), fuel);
    NCPoly s2 = apply(sigma, apply(sigma, u, fuel), fuel);
    NCPoly t1 = apply(tau, u, fuel);
    report.check("rho^3=sigma^2 on " + gen.name, r3 == s2, (r3 - s2).str());
    report.check("sigma^2=tau on " + gen.name, s2 == t1, (s2 - t1).str());
    NCPoly z = u;
    for (int i = 0; i < 4; ++i) z = apply(four, z, fuel);
    report.check("z4^4=id on " + gen.name, z == u, (z - u).str());
  }
  return report;
}

RankResult injectivity_rank(int degree_bound, long fuel) {
  const AlgebraSpec& d = delta_q();
  Morphism psi_m = psi();
  WordRank rank;
  long count = 0;
  for (const Word& w : enumerate_basis(d, degree_bound)) {
    ++count;
    NCPoly image = apply(psi_m, NCPoly::term(d.alphabet, w), fuel);
    rank.insert(image.terms());
  }
  return RankResult{count, rank.rank()};
}

}  // namespace uaw
