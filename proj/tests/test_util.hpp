#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "hodge/polynomial.hpp"

namespace hodge {
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
}  // namespace hodge

namespace hodge::testing {

inline Ring ring(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return PolyRing::make(v);
}

inline Polynomial P(const Ring& r, const std::string& s) { return parse_polynomial(s, r); }

inline Polynomial random_poly(std::mt19937& rng, const Ring& r, int terms, int maxdeg, int maxcoef) {
  std::uniform_int_distribution<int> deg(0, maxdeg), coef(-maxcoef, maxcoef), den(1, 4);
  std::vector<Polynomial::Term> t;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    int budget = deg(rng);
    for (std::size_t v = 0; v < r->nvars() && budget > 0; ++v) {
      std::uniform_int_distribution<int> e(0, budget);
      m[v] = static_cast<std::uint16_t>(e(rng));
      budget -= m[v];
    }
    Rational c(coef(rng), den(rng));
    c.canonicalize();
    t.emplace_back(m, c);
  }
  return Polynomial::from_terms(r, t);
}

}  // namespace hodge::testing
