#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hodge/groebner.hpp"
#include "hodge/polynomial.hpp"

namespace hodge {

class WeylRing;
using WeylRingPtr = std::shared_ptr<const WeylRing>;

// Q<x_1..x_n, d_1..d_n>[c_1..c_k] with [d_i, x_i] = 1 and central c's.
// Variables are laid out as x's, then d's, then central ones.
class WeylRing {
 public:
  static WeylRingPtr make(const Ring& base, std::vector<std::string> central = {});
  // Base ring plus a central "s".
  static WeylRingPtr with_s(const Ring& base) { return make(base, {"s"}); }

  const Ring& base() const { return base_; }
  std::size_t n() const { return base_->nvars(); }
  std::size_t ncentral() const { return central_.size(); }
  std::size_t nvars() const { return 2 * n() + ncentral(); }
  std::size_t x_index(std::size_t i) const { return i; }
  std::size_t d_index(std::size_t i) const { return n() + i; }
  std::size_t central_index(std::size_t k) const { return 2 * n() + k; }
  // -1 when absent.
  int s_index() const { return s_index_; }
  bool has_s() const { return s_index_ >= 0; }
  const std::vector<std::string>& central() const { return central_; }

  // Commutative ring on the words x^a d^b c^e; defines printing.
  const Ring& shadow() const { return shadow_; }
  // Like shadow() with each d renamed to its symbol variable xi_<name>.
  const Ring& symbol_ring() const { return symbol_; }
  const detail::Algebra& algebra() const { return alg_; }

  bool same_as(const WeylRing& o) const { return shadow_->same_as(*o.shadow_); }

 private:
  WeylRing() = default;
  Ring base_, shadow_, symbol_;
  std::vector<std::string> central_;
  int s_index_ = -1;
  detail::Algebra alg_;
};

bool same_weyl_ring(const WeylRingPtr& a, const WeylRingPtr& b);

// Normally ordered operator: every x to the left of every d.
class WeylOperator {
 public:
  WeylOperator() = default;
  explicit WeylOperator(WeylRingPtr ring) : ring_(ring), p_(ring->shadow()) {}
  // Interprets a shadow polynomial as the normally ordered operator.
  WeylOperator(WeylRingPtr ring, Polynomial normally_ordered);

  static WeylOperator constant(WeylRingPtr ring, const Rational& c);
  static WeylOperator x(WeylRingPtr ring, std::size_t i);
  static WeylOperator d(WeylRingPtr ring, std::size_t i);
  static WeylOperator central(WeylRingPtr ring, std::size_t k);
  static WeylOperator s(WeylRingPtr ring);
  // Polynomial in the base ring (or the base ring extended by central variables).
  static WeylOperator from_polynomial(WeylRingPtr ring, const Polynomial& p);

  const WeylRingPtr& ring() const { return ring_; }
  const Polynomial& normal_form_poly() const { return p_; }
  const std::vector<Polynomial::Term>& terms() const { return p_.terms(); }
  bool is_zero() const { return p_.is_zero(); }
  std::size_t size() const { return p_.size(); }

  WeylOperator operator-() const { return WeylOperator(ring_, -p_); }
  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
  friend WeylOperator operator*(const Rational& c, const WeylOperator& a) {
    return WeylOperator(a.ring_, a.p_ * c);
  }
  WeylOperator pow(unsigned k) const;
  WeylOperator monic(const TermOrder& ord) const { return WeylOperator(ring_, p_.monic(ord)); }

  // Maps into another Weyl ring by variable names.
  WeylOperator embed(const WeylRingPtr& target) const;
  // Substitutes a rational value for a central variable.
  WeylOperator specialize_central(std::size_t k, const Rational& value) const;
  // Substitutes s -> s + shift.
  WeylOperator shift_s(const Rational& shift) const;
  bool uses_variable(std::size_t v) const { return p_.uses_variable(v); }
  // True if no d occurs.
  bool is_function() const;

  std::string to_string() const { return p_.to_string(); }

  friend bool operator==(const WeylOperator& a, const WeylOperator& b) { return a.p_ == b.p_; }
  friend bool operator!=(const WeylOperator& a, const WeylOperator& b) { return !(a == b); }

 private:
  WeylRingPtr ring_;
  Polynomial p_;
};

WeylOperator weyl_multiply(const WeylOperator& P, const WeylOperator& Q);
// "d" + name or "d<k>" (1-based) for the derivations; s and central names as is.
WeylOperator parse_operator(std::string_view text, const WeylRingPtr& ring);

class WeylIdeal;
class WeylGroebnerBasis {
 public:
  const TermOrder& order() const { return order_; }
  const WeylRingPtr& ring() const { return ring_; }
  // Reduced and monic, by increasing leading monomial.
  const std::vector<WeylOperator>& basis() const { return basis_; }
  const std::vector<detail::Poly>& internal() const { return internal_; }
  bool is_unit() const;
  detail::Stats stats() const { return stats_; }

 private:
  friend WeylGroebnerBasis weyl_buchberger(const WeylIdeal&, const TermOrder&, const Budget&);
  WeylRingPtr ring_;
  TermOrder order_;
  std::vector<WeylOperator> basis_;
  std::vector<detail::Poly> internal_;
  detail::Stats stats_;
};

// Left ideal.
class WeylIdeal {
 public:
  WeylIdeal() = default;
  WeylIdeal(WeylRingPtr ring, std::vector<WeylOperator> gens);

  const WeylRingPtr& ring() const { return ring_; }
  const std::vector<WeylOperator>& generators() const { return gens_; }

  // Cached per order.
  const WeylGroebnerBasis& groebner(const TermOrder& ord) const;
  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::pair<TermOrder, std::shared_ptr<WeylGroebnerBasis>>> entries;
  };
  WeylRingPtr ring_;
  std::vector<WeylOperator> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

WeylGroebnerBasis weyl_buchberger(const WeylIdeal& I, const TermOrder& ord, const Budget& budget);
WeylGroebnerBasis weyl_buchberger(const WeylIdeal& I, const TermOrder& ord);
WeylOperator weyl_normal_form(const WeylOperator& P, const WeylGroebnerBasis& G);
bool weyl_contains(const WeylGroebnerBasis& G, const WeylOperator& P);
bool satisfies_spair_criterion(const WeylGroebnerBasis& G);

// Weight 0 on x, 1 on every d and on s, then degrevlex.
TermOrder sharp_order(const WeylRing& R);
// Weight 0 on x, 1 on every d, then degrevlex.
TermOrder ord_order(const WeylRing& R);

struct OrderAndSymbol {
  int order;
  Polynomial symbol;  // in symbol_ring()
};
OrderAndSymbol sharp_order_and_symbol(const WeylOperator& P);
OrderAndSymbol ord_symbol(const WeylOperator& P);
int sharp_order_of(const WeylOperator& P);

// Left ideal intersected with the subalgebra on the remaining variables.
WeylIdeal weyl_eliminate(const WeylIdeal& I, const std::vector<std::string>& drop);
// Intersection with the central subalgebra, as a commutative ideal over the
// central variables.
Ideal weyl_eliminate_to_central(const WeylIdeal& I);
Ring central_ring(const WeylRing& R);

// (numerator / f^m) * f^(s + shift)
class FsExpression {
 public:
  FsExpression() = default;
  // numerator lives in the commutative ring base ⊗ Q[s] (see fs_ring()).
  FsExpression(Polynomial f, Polynomial numerator, unsigned m, long shift);
  // f^(s+shift) itself.
  static FsExpression power(const Polynomial& f, const Ring& fs_ring, long shift);

  const Polynomial& f() const { return f_; }
  const Polynomial& numerator() const { return num_; }
  unsigned denominator_exponent() const { return m_; }
  long shift() const { return shift_; }
  bool is_zero() const { return num_.is_zero(); }

  // Value at s = s0 as (numerator, k) meaning numerator * f^k with k possibly negative.
  std::pair<Polynomial, long> specialize(const Rational& s0) const;

  friend bool operator==(const FsExpression& a, const FsExpression& b);
  std::string to_string() const;

 private:
  void reduce();
  Polynomial f_, num_;
  unsigned m_ = 0;
  long shift_ = 0;
};

// Commutative ring base ⊗ Q[s] used for FsExpression numerators.
Ring fs_ring(const WeylRing& R);
FsExpression act_on_fs(const WeylOperator& P, const FsExpression& e);
// P * f^(s+shift).
FsExpression act_on_power(const WeylOperator& P, const Polynomial& f, long shift = 0);
bool annihilates(const WeylOperator& P, const Polynomial& f, long shift = 0);

// Exact division test: q with a = q*b, if any.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

}  // namespace hodge
