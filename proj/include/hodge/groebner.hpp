#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodge/detail/engine.hpp"
#include "hodge/polynomial.hpp"

namespace hodge {

using detail::Budget;

// Budget used by operations that do not take one explicitly; per thread.
void set_default_budget(const Budget& b);
const Budget& default_budget();

class Ideal {
 public:
  Ideal() = default;
  Ideal(Ring ring, std::vector<Polynomial> gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
};

class GroebnerBasis {
 public:
  const Ideal& ideal() const { return ideal_; }
  const TermOrder& order() const { return order_; }
  // Reduced and monic, sorted by increasing leading monomial.
  const std::vector<Polynomial>& basis() const { return basis_; }
  const Ring& ring() const { return ideal_.ring(); }
  bool is_unit() const;
  Ideal as_ideal() const { return Ideal(ring(), basis_); }
  std::vector<Monomial> leading_monomials() const;

  const std::vector<detail::Poly>& internal() const { return internal_; }

 private:
  friend GroebnerBasis buchberger(const Ideal&, const TermOrder&, const Budget&);
  Ideal ideal_;
  TermOrder order_;
  std::vector<Polynomial> basis_;
  std::vector<detail::Poly> internal_;
};

// Conversions between user polynomials and engine polynomials.
detail::Poly to_engine(const Polynomial& p, const TermOrder& ord);
// Monic when `monic`, otherwise the exact rational value of p/den.
Polynomial from_engine(const Ring& ring, const detail::Poly& p, bool monic,
                       const Rational& divisor = 1);

GroebnerBasis buchberger(const Ideal& I, const TermOrder& ord, const Budget& budget);
GroebnerBasis buchberger(const Ideal& I, const TermOrder& ord = TermOrder::degrevlex());
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);
bool contains(const GroebnerBasis& G, const Polynomial& p);
bool ideal_contains(const Ideal& big, const Ideal& small);
bool ideals_equal(const Ideal& a, const Ideal& b);
// S-pair criterion checked directly; used by property tests.
bool satisfies_spair_criterion(const GroebnerBasis& G);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned k);
Ideal ideal_times(const Polynomial& f, const Ideal& a);

// I ∩ Q[remaining variables]; generators stay in the ring of I.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop);
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop);
// Moves an ideal to a ring containing every variable it uses.
Ideal change_ring(const Ideal& I, const Ring& target);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal quotient(const Ideal& I, const Ideal& J);
Ideal saturation(const Ideal& I, const Ideal& J);
std::pair<Ideal, Ideal> quotient_and_saturation(const Ideal& I, const Ideal& J);

struct SyzygyModule {
  std::vector<Polynomial> source;
  std::vector<std::vector<Polynomial>> generators;
};
SyzygyModule syzygies(const std::vector<Polynomial>& gens);

// Cofactors a with p = Σ a_i gens_i, if p lies in the ideal.
std::optional<std::vector<Polynomial>> lift(const Polynomial& p, const std::vector<Polynomial>& gens);

// Membership of v in the submodule of R^r generated by gens.
bool module_contains(const std::vector<std::vector<Polynomial>>& gens, const std::vector<Polynomial>& v);
// Drops generators lying in the span of the others; minimal for graded modules.
std::vector<std::vector<Polynomial>> minimize_generators(std::vector<std::vector<Polynomial>> gens);

struct DimHeight {
  int dim;
  int height;
};
DimHeight dimension_height(const Ideal& I);

// Kernel of Q[x, ξ] -> Q[x, t], ξ_i -> t*g_i, as an ideal over x followed by
// ξ variables named `xi_prefix` + index (1-based).
Ideal rees_kernel(const std::vector<Polynomial>& gens, const std::string& xi_prefix = "xi");

enum class Association { Associated, NotAssociated, Unknown };
struct AssociatedPrimeResult {
  Association verdict = Association::Unknown;
  std::optional<Polynomial> witness;
};
// degree_bound < 0 selects 2 + max generator degree.
AssociatedPrimeResult is_associated_prime(const Ideal& I, const Ideal& P, int degree_bound = -1);

struct GradedPiece {
  bool vanishes = false;
  std::size_t dim_J = 0;
  std::size_t dim_saturation = 0;
  std::size_t dim_ambient = 0;
};
// [H^0_m(R/J)]_t = 0, with m the ideal of all variables.
GradedPiece graded_piece(const Ideal& J, const std::vector<Rational>& weights, const Rational& t);
bool graded_piece_vanishes(const Ideal& J, const std::vector<Rational>& weights, const Rational& t);

// Monomials of weighted degree exactly t in the first weights.size() variables.
std::vector<Monomial> monomials_of_weight(const std::vector<Rational>& weights, const Rational& t);

}  // namespace hodge
