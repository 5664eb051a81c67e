#include "uaw/algebras.hpp"

#include <cassert>
#include <sstream>

namespace uaw {

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

std::optional<NCPoly> hhat_negative_power(const AlphabetPtr& alphabet, GenId g, int n) {
  using namespace hhat_gen;
  auto repeat = [&](GenId letter) {
    NCPoly p = NCPoly::unit(alphabet);
    for (int i = 0; i < n; ++i) p = p * NCPoly::single(alphabet, letter);
    return p;
  };
  switch (g) {
    case X: return repeat(Xi);
    case Xi: return repeat(X);
    case Y: return repeat(Yi);
    case Yi: return repeat(Y);
    case t0: {
      // t0^-1 = T0 - t0
      NCPoly inv = NCPoly::single(alphabet, T0) - NCPoly::single(alphabet, t0);
      return inv.pow(static_cast<unsigned>(n));
    }
    default: return std::nullopt;
  }
}

ParseContext letters_context(const AlgebraSpec& spec) {
  ParseContext ctx;
  ctx.alphabet = spec.alphabet;
  if (spec.name == AlgebraName::HhatQ) {
    AlphabetPtr alphabet = spec.alphabet;
    ctx.negative_letter_power = [alphabet](GenId g, int n) {
      return hhat_negative_power(alphabet, g, n);
    };
  }
  return ctx;
}

void add_rule_from_text(AlgebraSpec& spec, const ParseContext& ctx,
                        const std::string& lhs, const std::string& rhs,
                        RuleKind kind) {
  NCPoly lp = parse_expr(lhs, ctx);
  assert(lp.term_count() == 1 && lp.terms().begin()->second.is_one());
  Word w = lp.terms().begin()->first;
  spec.system.add_rule(w, parse_expr(rhs, ctx), kind);
}

AlgebraSpec build_delta_q() {
  auto alphabet = std::make_shared<Alphabet>(
      std::vector<std::string>{"A", "C", "B", "Omega", "alpha", "beta", "gamma"});
  AlgebraSpec spec{AlgebraName::DeltaQ, "delta-q", alphabet, RewriteSystem(alphabet)};
  ParseContext ctx = letters_context(spec);

  add_rule_from_text(spec, ctx, "B*A",
                     "q^2*A*B + q*(q^2-q^-2)*C - q*(q-q^-1)*gamma", RuleKind::First);
  add_rule_from_text(spec, ctx, "B*C",
                     "q^-2*C*B - q^-1*(q^2-q^-2)*A + q^-1*(q-q^-1)*alpha",
                     RuleKind::First);
  add_rule_from_text(spec, ctx, "C*A",
                     "q^-2*A*C - q^-1*(q^2-q^-2)*B + q^-1*(q-q^-1)*beta",
                     RuleKind::First);
  add_rule_from_text(spec, ctx, "C*C",
                     "q^-2*Omega - q^-3*A*C*B - q^-4*A*A - q^-4*B*B + q^-3*A*alpha "
                     "+ q^-3*B*beta + q^-1*C*gamma",
                     RuleKind::First);

  // centrality of Omega, alpha, beta, gamma
  const char* central[] = {"Omega", "alpha", "beta", "gamma"};
  const char* movers[] = {"A", "B", "C"};
  for (const char* z : central)
    for (const char* g : movers)
      add_rule_from_text(spec, ctx, std::string(z) + "*" + g,
                         std::string(g) + "*" + z, RuleKind::Second);
  for (const char* z : {"alpha", "beta", "gamma"})
    add_rule_from_text(spec, ctx, std::string(z) + "*Omega",
                       std::string("Omega*") + z, RuleKind::Second);
  add_rule_from_text(spec, ctx, "beta*alpha", "alpha*beta", RuleKind::Second);
  add_rule_from_text(spec, ctx, "gamma*alpha", "alpha*gamma", RuleKind::Second);
  add_rule_from_text(spec, ctx, "gamma*beta", "beta*gamma", RuleKind::Second);
  return spec;
}

AlgebraSpec build_hhat_q() {
  auto alphabet = std::make_shared<Alphabet>(std::vector<std::string>{
      "Y", "Y^-1", "X", "X^-1", "t0", "T0", "T1", "T2", "T3"});
  AlgebraSpec spec{AlgebraName::HhatQ, "hhat-q", alphabet, RewriteSystem(alphabet)};
  ParseContext ctx = letters_context(spec);

  add_rule_from_text(spec, ctx, "X*X^-1", "1", RuleKind::Third);
  add_rule_from_text(spec, ctx, "X^-1*X", "1", RuleKind::Third);
  add_rule_from_text(spec, ctx, "Y*Y^-1", "1", RuleKind::Third);
  add_rule_from_text(spec, ctx, "Y^-1*Y", "1", RuleKind::Third);

  add_rule_from_text(spec, ctx, "t0*t0", "t0*T0 - 1", RuleKind::Second);
  add_rule_from_text(spec, ctx, "t0*X", "X^-1*t0 + X*T0 - T3", RuleKind::Second);
  add_rule_from_text(spec, ctx, "t0*X^-1", "X*t0 - X*T0 + T3", RuleKind::Second);
  add_rule_from_text(spec, ctx, "t0*Y", "Y^-1*t0 + Y*T0 - T1", RuleKind::Second);
  add_rule_from_text(spec, ctx, "t0*Y^-1", "Y*t0 - Y*T0 + T1", RuleKind::Second);

  add_rule_from_text(
      spec, ctx, "X*Y",
      "q^2*Y*X - q*t0*T2 + q^-1*T0*T2 + Y^-1*t0*T3 - q^-2*Y^-1*T0*T3 "
      "+ q^-2*Y^-1*X*T0*T0 - q^-2*Y^-1*X*t0*T0 - X*T0*T1 + X*t0*T1",
      RuleKind::First);
  add_rule_from_text(
      spec, ctx, "X^-1*Y",
      "q^-2*Y*X^-1 + (q-q^-1)*q^-1*T1*T3 - q^-1*T0*T2 + q^-1*t0*T2 - Y^-1*t0*T3 "
      "+ q^-2*X*T0*T1 - q^-2*X*t0*T1 + q^-2*Y^-1*T0*T3 - q^-2*Y^-1*X*T0*T0 "
      "+ q^-2*Y^-1*X*t0*T0",
      RuleKind::First);
  add_rule_from_text(
      spec, ctx, "X^-1*Y^-1",
      "q^2*Y^-1*X^-1 - q^2*Y^-1*T0*T3 + q^2*Y^-1*t0*T3 + q*T0*T2 - q*t0*T2 "
      "- q^2*X*T0*T1 + q^2*X*t0*T1 + q^2*Y^-1*X*T0*T0 - q^2*Y^-1*X*t0*T0",
      RuleKind::First);
  add_rule_from_text(
      spec, ctx, "X*Y^-1",
      "q^-2*Y^-1*X + X*T0*T1 - X*t0*T1 - q^-2*Y^-1*X*T0*T0 + q^-2*Y^-1*X*t0*T0 "
      "+ q^-2*Y^-1*T0*T3 - q^-2*Y^-1*t0*T3 - q^-1*T0*T2 + q^-1*t0*T2",
      RuleKind::First);

  // the T_i are central
  const char* ts[] = {"T0", "T1", "T2", "T3"};
  const char* movers[] = {"X", "X^-1", "Y", "Y^-1", "t0"};
  for (const char* t : ts)
    for (const char* g : movers)
      add_rule_from_text(spec, ctx, std::string(t) + "*" + g,
                         std::string(g) + "*" + t, RuleKind::Third);
  for (int i = 1; i < 4; ++i)
    for (int j = 0; j < i; ++j)
      add_rule_from_text(spec, ctx, std::string(ts[i]) + "*" + ts[j],
                         std::string(ts[j]) + "*" + ts[i], RuleKind::Third);
  return spec;
}

/// Defining expression of a derived element, before normalization.
NCPoly derived_definition(const std::string& name, const AlgebraSpec& spec) {
  ParseContext ctx = letters_context(spec);
  auto P = [&](const std::string& text) { return parse_expr(text, ctx); };

  if (spec.name == AlgebraName::DeltaQ) {
    if (auto id = spec.alphabet->find(name))
      return NCPoly::single(spec.alphabet, *id);
    throw UnknownName(name);
  }

  using namespace hhat_gen;
  if (auto id = spec.alphabet->find(name)) return NCPoly::single(spec.alphabet, *id);
  if (name == "t0inv") return P("T0-t0");
  if (name == "t1") return P("(T0-t0)*Y");
  if (name == "t2") return P("q^-1*Y^-1*t0*X^-1");
  if (name == "t3") return P("X*(T0-t0)");
  if (name == "A") return P("Y+Y^-1");
  if (name == "B") return P("X+X^-1");
  if (name == "C") {
    // C = t0 t2 + (t0 t2)^-1 = t0 t2 + t2^-1 t0^-1
    NCPoly t2 = P("q^-1*Y^-1*t0*X^-1");
    NCPoly t2inv = NCPoly::single(spec.alphabet, T2) - t2;
    return NCPoly::single(spec.alphabet, t0) * t2 + t2inv * P("T0-t0");
  }
  if (name == "alpha") return P("(q^-1*t0+q*(T0-t0))*T1 + T2*T3");
  if (name == "beta") return P("(q^-1*t0+q*(T0-t0))*T3 + T1*T2");
  if (name == "gamma") return P("(q^-1*t0+q*(T0-t0))*T2 + T3*T1");
  if (name == "Omega")
    return P("(q+q^-1)^2 - (q^-1*t0+q*(T0-t0))^2 - T1^2 - T2^2 - T3^2 "
             "- (q^-1*t0+q*(T0-t0))*T1*T2*T3");
  if (name == "theta")
    return P("Y*X^-1*t0 - Y^-1*X*(T0-t0) + Y^-1*T3 + X*T1 + q^-1*t0*t0*T2");
  if (name == "C0") return P("q*(q*Y*X - q^-1*X*Y)");
  if (name == "C1") return P("-(q^-1*Y*X^-1 - q*X^-1*Y)");
  if (name == "C2") return P("q^-1*(q*Y^-1*X^-1 - q^-1*X^-1*Y^-1)");
  if (name == "C3") return P("-(q^-1*Y^-1*X - q*X*Y^-1)");
  throw UnknownName(name);
}

}  // namespace

const AlgebraSpec& delta_q() {
  static const AlgebraSpec spec = build_delta_q();
  return spec;
}

const AlgebraSpec& hhat_q() {
  static const AlgebraSpec spec = build_hhat_q();
  return spec;
}

AlgebraSpec twisted_spec(const AlgebraSpec& spec) {
  AlgebraSpec out{spec.name, spec.display_name + "-qinv", spec.alphabet,
                  RewriteSystem(spec.alphabet)};
  for (const RewriteRule& r : spec.system.rules()) {
    NCPoly rhs(spec.alphabet);
    for (const auto& [w, c] : r.rhs.terms()) rhs.add_term(w, c.inverted_q());
    out.system.add_rule(r.lhs, rhs, r.kind);
  }
  return out;
}

NCPoly derived(const std::string& name, const AlgebraSpec& spec) {
  return spec.normalize(derived_definition(name, spec));
}

NCPoly AlgebraSpec::parse(const std::string& text) const {
  return parse_expr(text, parse_context());
}

ParseContext AlgebraSpec::parse_context() const {
  ParseContext ctx = letters_context(*this);
  const AlgebraSpec* self = this;
  ctx.resolve_name = [self](const std::string& name) -> std::optional<NCPoly> {
    try {
      return derived_definition(name, *self);
    } catch (const UnknownName&) {
      return std::nullopt;
    }
  };
  return ctx;
}

long AlgebraSpec::basis_count_exact(int len) const {
  if (len < 0) return 0;
  BigInt total = 0;
  if (name == AlgebraName::DeltaQ) {
    // A^i C^j B^k Omega^l alpha^r beta^s gamma^t, j in {0,1}
    total = binomial(len + 5, 5);
    if (len >= 1) total += binomial(len + 4, 5);
  } else {
    // Y^i X^j t0^k T0^l T1^r T2^s T3^t, i,j in Z, k in {0,1}
    for (int a = 0; a <= len; ++a)
      for (int b = 0; a + b <= len; ++b)
        for (int k = 0; k <= 1 && a + b + k <= len; ++k) {
          int rest = len - a - b - k;
          BigInt ways = binomial(rest + 3, 3);
          total += ways * (a == 0 ? 1 : 2) * (b == 0 ? 1 : 2);
        }
  }
  return static_cast<long>(total);
}

std::vector<Word> enumerate_basis(const AlgebraSpec& spec, int max_len) {
  std::vector<Word> out;
  for (int len = 0; len <= max_len; ++len) {
    auto exact = enumerate_basis_exact(spec, len);
    out.insert(out.end(), exact.begin(), exact.end());
  }
  return out;
}

std::vector<Word> enumerate_basis_exact(const AlgebraSpec& spec, int len) {
  std::vector<Word> out;
  std::vector<GenId> current;
  size_t n = spec.alphabet->size();
  auto dfs = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(Word(current));
      return;
    }
    for (GenId g = 0; g < n; ++g) {
      if (!current.empty() && spec.system.is_forbidden(current.back(), g)) continue;
      current.push_back(g);
      self(self, remaining - 1);
      current.pop_back();
    }
  };
  dfs(dfs, len);
  return out;
}

AxisFold fold_laurent(Axis axis, const NCPoly& p, const AlgebraSpec& spec) {
  if (spec.name != AlgebraName::HhatQ) throw AxisError();
  using namespace hhat_gen;
  GenId pos = axis == Axis::Y ? Y : X;
  GenId neg = axis == Axis::Y ? Yi : Xi;
  NCPoly nf = spec.normalize(p);

  using Coeffs = std::vector<QScalar>;
  auto trim = [](Coeffs& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  auto shift_up = [](const Coeffs& v) {  // multiply by S
    Coeffs r(v.size() + 1);
    for (size_t i = 0; i < v.size(); ++i) r[i + 1] = v[i];
    return r;
  };
  auto add_into = [](Coeffs& acc, const Coeffs& v, const QScalar& scale) {
    if (acc.size() < v.size()) acc.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) acc[i] += v[i] * scale;
  };
  auto sub = [&](const Coeffs& a, const Coeffs& b) {
    Coeffs r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
  };

  AxisFold fold;
  for (const auto& [w, c] : nf.terms()) {
    long k = 0;
    for (GenId g : w.letters) {
      if (g == pos && k >= 0)
        ++k;
      else if (g == neg && k <= 0)
        --k;
      else
        throw AxisError();
    }
    // axis^k = u(S) + axis * v(S):  step up (u,v) -> (-v, u + S v),
    // step down (u,v) -> (S u + v, -u).
    Coeffs u{QScalar::one()}, v;
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) {
      if (k >= 0) {
        Coeffs nu = sub(Coeffs{}, v);
        Coeffs nv = u;
        add_into(nv, shift_up(v), QScalar::one());
        trim(nv);
        u = std::move(nu);
        v = std::move(nv);
      } else {
        Coeffs nu = shift_up(u);
        add_into(nu, v, QScalar::one());
        trim(nu);
        Coeffs nv = sub(Coeffs{}, u);
        u = std::move(nu);
        v = std::move(nv);
      }
    }
    add_into(fold.even, u, c);
    add_into(fold.odd, v, c);
  }
  trim(fold.even);
  trim(fold.odd);
  return fold;
}

NCPoly unfold_laurent(Axis axis, const AxisFold& fold, const AlgebraSpec& spec) {
  using namespace hhat_gen;
  GenId pos = axis == Axis::Y ? Y : X;
  GenId neg = axis == Axis::Y ? Yi : Xi;
  NCPoly S = NCPoly::single(spec.alphabet, pos) + NCPoly::single(spec.alphabet, neg);
  NCPoly even(spec.alphabet), odd(spec.alphabet);
  NCPoly spow = NCPoly::unit(spec.alphabet);
  for (size_t i = 0; i < std::max(fold.even.size(), fold.odd.size()); ++i) {
    if (i < fold.even.size()) even += spow * fold.even[i];
    if (i < fold.odd.size()) odd += spow * fold.odd[i];
    spow = spow * S;
  }
  return spec.normalize(even + NCPoly::single(spec.alphabet, pos) * odd);
}

void TPoly::add_term(const Key& k, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TPoly TPoly::operator-() const {
  TPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

TPoly operator+(const TPoly& a, const TPoly& b) {
  TPoly r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]},
                 ca * cb);
  return r;
}

TPoly TPoly::operator*(const QScalar& c) const {
  TPoly r;
  if (c.is_zero()) return r;
  for (const auto& [k, tc] : terms_) r.terms_.emplace(k, tc * c);
  return r;
}

std::string TPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string cs = c.str();
    bool negative = cs.size() > 1 && cs[0] == '-';
    if (negative) cs = (-c).str();
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    std::string mono;
    auto append = [&mono](const std::string& base, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += base;
      if (e != 1) mono += "^" + std::to_string(e);
    };
    append("t0", k[0]);
    append("T1", k[1]);
    append("T2", k[2]);
    append("T3", k[3]);
    bool needs_parens = QScalar::needs_parens(cs);
    if (mono.empty()) {
      out << (needs_parens ? "(" + cs + ")" : cs);
    } else if (cs == "1") {
      out << mono;
    } else {
      out << (needs_parens ? "(" + cs + ")" : cs) << "*" << mono;
    }
  }
  return out.str();
}

TPoly to_t_laurent(const NCPoly& p, const AlgebraSpec& spec) {
  using namespace hhat_gen;
  if (spec.name != AlgebraName::HhatQ) throw NotInT();
  NCPoly nf = spec.normalize(p);
  TPoly out;
  for (const auto& [w, c] : nf.terms()) {
    int k = 0, l = 0, r = 0, s = 0, t = 0;
    for (GenId g : w.letters) {
      switch (g) {
        case t0: ++k; break;
        case T0: ++l; break;
        case T1: ++r; break;
        case T2: ++s; break;
        case T3: ++t; break;
        default: throw NotInT();
      }
    }
    // T0^l = (t0 + t0^-1)^l
    for (int m = 0; m <= l; ++m) {
      QScalar coeff = c * QScalar::integer(binomial(l, m));
      out.add_term({k + 2 * m - l, r, s, t}, coeff);
    }
  }
  return out;
}

NCPoly from_t_laurent(const TPoly& t, const AlgebraSpec& spec) {
  using namespace hhat_gen;
  NCPoly acc(spec.alphabet);
  NCPoly t0inv =
      NCPoly::single(spec.alphabet, T0) - NCPoly::single(spec.alphabet, t0);
  for (const auto& [k, c] : t.terms()) {
    NCPoly term = NCPoly::unit(spec.alphabet, c);
    if (k[0] >= 0)
      for (int i = 0; i < k[0]; ++i) term = term * NCPoly::single(spec.alphabet, t0);
    else
      term = term * t0inv.pow(static_cast<unsigned>(-k[0]));
    for (int i = 0; i < k[1]; ++i) term = term * NCPoly::single(spec.alphabet, T1);
    for (int i = 0; i < k[2]; ++i) term = term * NCPoly::single(spec.alphabet, T2);
    for (int i = 0; i < k[3]; ++i) term = term * NCPoly::single(spec.alphabet, T3);
    acc += term;
  }
  return spec.normalize(acc);
}

TPoly parse_t_laurent(const std::string& text, const AlgebraSpec& spec) {
  return to_t_laurent(spec.parse(text), spec);
}

}  // namespace uaw
