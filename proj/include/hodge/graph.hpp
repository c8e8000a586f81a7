#pragma once

#include <optional>
#include <vector>

#include "hodge/weyl.hpp"

namespace hodge {

// num / f^pow, kept in lowest terms with respect to powers of f.
struct FFraction {
  Polynomial num;
  unsigned pow = 0;

  bool is_zero() const { return num.is_zero(); }
};

FFraction make_fraction(const Polynomial& f, Polynomial num, long pow);
FFraction fraction_add(const Polynomial& f, const FFraction& a, const FFraction& b);
FFraction fraction_scale(const Polynomial& f, const FFraction& a, const Polynomial& g);
FFraction fraction_derivative(const Polynomial& f, const FFraction& a, std::size_t i);
bool fraction_equal(const Polynomial& f, const FFraction& a, const FFraction& b);

// Σ_{j <= J} u_j d_t^j δ in O(*f)[d_t]δ.
class DeltaExpansion {
 public:
  DeltaExpansion(Polynomial f, std::size_t J);
  // u δ
  static DeltaExpansion delta(const Polynomial& f, FFraction u);

  const Polynomial& f() const { return f_; }
  std::size_t bound() const { return u_.size() - 1; }
  const FFraction& coefficient(std::size_t j) const { return u_.at(j); }
  void set(std::size_t j, FFraction u);
  // Growing the bound is explicit; coefficients beyond it never exist.
  DeltaExpansion with_bound(std::size_t J) const;

  // Largest j with u_j != 0; nullopt for zero.
  std::optional<std::size_t> t_order() const;
  bool is_zero() const { return !t_order(); }

  friend bool operator==(const DeltaExpansion& a, const DeltaExpansion& b);
  DeltaExpansion operator+(const DeltaExpansion& o) const;
  DeltaExpansion scaled(const Rational& c) const;

 private:
  Polynomial f_;
  std::vector<FFraction> u_;
};

struct DeltaOp {
  enum class Kind { Function, Dx, T, Dt } kind;
  Polynomial g;        // Function: in the base ring extended by "t"
  std::size_t i = 0;   // Dx
};

DeltaExpansion delta_act(const DeltaOp& op, const DeltaExpansion& u);
// The ring base ⊗ Q[t] used for DeltaOp::Function.
Ring graph_function_ring(const Ring& base);

struct HelpComputeResult {
  DeltaExpansion v;  // t·u
  bool coefficients_ok = false;  // v_j = f u_j - (j+1) u_{j+1}
  bool u0_ok = false;            // u_0 = Σ j! f^(-j-1) v_j
  bool ok() const { return coefficients_ok && u0_ok; }
};
HelpComputeResult helpcompute_check(const DeltaExpansion& u);

// Σ j! f^(-j-1) v_j
FFraction mp_map(const DeltaExpansion& v);

// P(-d_t t) f^-1 δ for P in D[s].
DeltaExpansion pi_f(const WeylOperator& P, const Polynomial& f);
// d_t -> 0, u δ -> u.
FFraction psi_f0(const DeltaExpansion& u);
// An s-free operator applied to a fraction by the product and quotient rules.
FFraction apply_to_fraction(const WeylOperator& Q, const Polynomial& f, const FFraction& a);

struct GraphMaps {
  DeltaExpansion pi;
  FFraction psi;          // ψ_{f,0}(π_f(P))
  FFraction specialized;  // (P f^(s-1)) at s = 0
  FFraction phi0;         // φ_0(P) f^-1
  bool commutes = false;
};
GraphMaps graph_maps(const WeylOperator& P, const Polynomial& f);

}  // namespace hodge
