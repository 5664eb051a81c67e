#pragma once

#include <random>

#include "uaw/algebras.hpp"

namespace uaw::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed);
  return gen;
}

inline int rand_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

/// Random nonzero Laurent combination of q-powers, canonicalized.
inline QScalar random_scalar(bool allow_zero = true) {
  while (true) {
    QScalar s;
    int terms = rand_int(0, 3);
    for (int i = 0; i < terms; ++i)
      s += QScalar::q_power(rand_int(-4, 4), BigInt(rand_int(-5, 5)));
    if (allow_zero || !s.is_zero()) return s;
  }
}

inline Word random_word(const AlgebraSpec& spec, int max_len) {
  int len = rand_int(0, max_len);
  std::vector<GenId> letters;
  for (int i = 0; i < len; ++i)
    letters.push_back(static_cast<GenId>(
        rand_int(0, static_cast<int>(spec.alphabet->size()) - 1)));
  return Word(std::move(letters));
}

inline NCPoly random_poly(const AlgebraSpec& spec, int max_terms, int max_len) {
  NCPoly p(spec.alphabet);
  int terms = rand_int(0, max_terms);
  for (int i = 0; i < terms; ++i)
    p.add_term(random_word(spec, max_len), random_scalar());
  return p;
}

}  // namespace uaw::testing
