#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "hodge/monomial.hpp"
#include "hodge/rational.hpp"
#include "hodge/term_order.hpp"

namespace hodge::detail {

// Variable layout of a ring handled by the engine. Weyl pairs (x, d) obey
// d*x = x*d + 1; every other pair of variables commutes.
struct Algebra {
  std::size_t nvars = 0;
  std::vector<std::pair<int, int>> pairs;

  static Algebra commutative(std::size_t n) { return Algebra{n, {}}; }
  bool is_commutative() const { return pairs.empty(); }
};

struct Term {
  Monomial m;
  Integer c;
};
// Terms sorted strictly descending in the engine order, no zero coefficients.
using Poly = std::vector<Term>;

struct Budget {
  // Maximum number of S-pair reductions; 0 means unlimited.
  std::size_t max_steps = 0;
  // Maximum total degree of a basis element; 0 means unlimited.
  int max_degree = 0;
};

struct Stats {
  std::size_t reductions = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

class Engine {
 public:
  Engine(Algebra alg, TermOrder ord, Budget budget = {})
      : alg_(std::move(alg)), ord_(std::move(ord)), budget_(budget) {}

  const Algebra& algebra() const { return alg_; }
  const TermOrder& order() const { return ord_; }
  const Budget& budget() const { return budget_; }

  // Sorts and combines equal monomials.
  void canonicalize(Poly& p) const;
  // (c * m) * g with m on the left.
  Poly mul_term(const Monomial& m, const Integer& c, const Poly& g) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly add(const Poly& a, const Poly& b) const;
  // a*p - b*q
  Poly combine(const Integer& a, const Poly& p, const Integer& b, const Poly& q) const;

  // Reduces p modulo the left ideal generated by G. On return
  // scale * p_in - result lies in the ideal. With full = false only the
  // leading term is reduced away.
  Poly reduce(Poly p, const std::vector<Poly>& G, Rational* scale, bool full) const;

  // Reduced left Gröbner basis: primitive integer polynomials with positive
  // leading coefficient, sorted by increasing leading monomial. Pairs are
  // selected by sugar in the commutative case and by smallest lcm otherwise.
  std::vector<Poly> groebner(std::vector<Poly> gens, Stats* stats = nullptr) const;

  Poly spoly(const Poly& f, const Poly& g) const;

  static void make_primitive(Poly& p);

 private:
  bool expands(const Monomial& m, const Poly& g) const;

  Algebra alg_;
  TermOrder ord_;
  Budget budget_;
};

}  // namespace hodge::detail
