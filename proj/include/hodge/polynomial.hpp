#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hodge/errors.hpp"
#include "hodge/monomial.hpp"
#include "hodge/rational.hpp"
#include "hodge/term_order.hpp"

namespace hodge {

class PolyRing;
using Ring = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  static Ring make(std::vector<std::string> names, std::vector<Rational> weights = {});

  std::size_t nvars() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // -1 when absent.
  int index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;
  const std::vector<Rational>& weights() const { return weights_; }
  bool has_weights() const { return !weights_.empty(); }

  // Same variables followed by `extra`; weights are dropped.
  Ring extended(const std::vector<std::string>& extra) const;

  bool same_as(const PolyRing& o) const { return names_ == o.names_; }

 private:
  PolyRing() = default;
  std::vector<std::string> names_;
  std::vector<Rational> weights_;
};

bool same_ring(const Ring& a, const Ring& b);

class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t i);
  static Polynomial monomial(Ring ring, const Monomial& m, const Rational& c = 1);
  // Combines duplicate monomials and drops zeros.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  // Sorted by degrevlex, largest first.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int total_degree() const;
  int degree_in(std::size_t var) const;
  Rational coefficient(const Monomial& m) const;
  const Term& leading_term(const TermOrder& ord) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial pow(unsigned k) const;
  Polynomial mul_monomial(const Monomial& m, const Rational& c = 1) const;

  // Scales so the degrevlex-leading coefficient is 1.
  Polynomial monic() const;
  Polynomial monic(const TermOrder& ord) const;

  // Same polynomial in a ring whose variables are a superset; `map[i]` is the
  // target index of variable i.
  Polynomial embed(const Ring& target, const std::vector<std::size_t>& map) const;
  // Embeds by variable name.
  Polynomial embed(const Ring& target) const;
  // Substitutes polynomials (all in ring `target`) for every variable.
  Polynomial substitute(const Ring& target, const std::vector<Polynomial>& images) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  bool uses_variable(std::size_t i) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void check_ring(const Polynomial& o) const;
  void normalize();

  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial parse_polynomial(std::string_view text, const Ring& ring);
Polynomial partial_derivative(const Polynomial& p, std::string_view var);
Polynomial partial_derivative(const Polynomial& p, std::size_t var);
std::vector<Polynomial> gradient(const Polynomial& p);

struct WeightedDegree {
  bool homogeneous = true;
  Rational degree;
  // Two terms of differing degree when not homogeneous.
  std::optional<std::pair<Polynomial, Polynomial>> witnesses;
};
WeightedDegree weighted_degree(const Polynomial& p, const std::vector<Rational>& weights);
Rational monomial_weight(const Monomial& m, const std::vector<Rational>& weights);

// Squarefreeness via height of (f, ∂f) being at least 2.
bool reduced_check(const Polynomial& f);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace hodge
