#pragma once

#include "vfalg/svf.hpp"

#include <random>

namespace vfalg::fixtures {

// Random polynomial of a given parity with up to `terms` monomials of total
// degree at most `max_deg`, small integer coefficients.
inline SuperPolynomial random_poly(const Coords& cs, std::mt19937& rng, Parity parity,
                                   int terms = 3, int max_deg = 2) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> exp(0, max_deg);
  std::uniform_int_distribution<int> bit(0, 1);
  SuperPolynomial p(cs);
  for (int t = 0; t < terms; ++t) {
    Monomial m(cs->size());
    int budget = max_deg;
    for (std::size_t i = 0; i < cs->size() && budget > 0; ++i) {
      int e = (*cs)[i].parity == Parity::odd ? bit(rng) : std::min(exp(rng), budget);
      m.exps[i] = static_cast<std::uint8_t>(e);
      budget -= e;
    }
    if (parity_of(*cs, m) != parity) continue;
    p.add_term(m, coef(rng));
  }
  return p;
}

inline SuperVectorField random_field(const Coords& cs, std::mt19937& rng, Parity parity,
                                     int terms = 2, int max_deg = 2) {
  SuperVectorField x(cs);
  for (std::size_t i = 0; i < cs->size(); ++i) {
    x.set(i, random_poly(cs, rng, parity + (*cs)[i].parity, terms, max_deg));
  }
  return x;
}

}  // namespace vfalg::fixtures
