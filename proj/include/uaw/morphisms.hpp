#pragma once

#include <memory>

#include "uaw/algebras.hpp"
#include "uaw/report.hpp"

namespace uaw {

/// A map between the algebras given by explicit images of every balanced
/// generator, with optional word reversal (antihomomorphism), coefficient
/// twist q -> 1/q, and inner conjugation h -> u_inv * h * u.
struct Morphism {
  std::string name;
  std::shared_ptr<const AlgebraSpec> source;
  std::shared_ptr<const AlgebraSpec> target;
  std::map<GenId, NCPoly> images;
  bool antihom = false;
  bool twist = false;
  std::optional<std::pair<NCPoly, NCPoly>> conjugator;  // (u_inv, u)
};

/// Substitute, reverse/twist/conjugate as configured, then normalize in the
/// target algebra.
NCPoly apply(const Morphism& m, const NCPoly& p, long fuel = kDefaultFuel);

enum class BraidGen { Rho, Sigma, Tau };

Morphism psi();                                        // Delta_q -> Hhat_q
Morphism braid(BraidGen g, const AlgebraSpec& spec);   // rho / sigma / tau
Morphism dagger(const AlgebraSpec& spec);              // antihomomorphism
Morphism xi(const AlgebraSpec& spec);                  // q -> 1/q isomorphism
Morphism z4();                                         // t_i -> t_{i+1} on Hhat_q
Morphism identity_morphism(const AlgebraSpec& spec);

/// For every reduction rule of the source, substitutes both sides without
/// assuming well-definedness and checks the residual vanishes in the target.
Report verify_hom(const Morphism& m, long fuel = kDefaultFuel);

/// Commuting square psi . g_Delta = g_Hhat . psi on the balanced Delta_q
/// generators; g is one of rho/sigma/tau/dagger/xi (xi twists psi).
Report verify_square(const std::string& g, long fuel = kDefaultFuel);

/// rho^3 = sigma^2 = tau on the Hhat_q generators, and z4^4 = id.
Report verify_braid_relation(long fuel = kDefaultFuel);

struct RankResult {
  long word_count;
  long rank;
};

/// Applies psi to every Delta_q basis word of degree <= bound and computes
/// the rank of the image family over Q(q) by fraction-free elimination.
RankResult injectivity_rank(int degree_bound, long fuel = kDefaultFuel);

}  // namespace uaw
