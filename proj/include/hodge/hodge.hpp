#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodge/dmodule.hpp"

namespace hodge {

class RootsOutsideInterval : public HypothesisFailure {
 public:
  RootsOutsideInterval(const std::string& msg, Rational root)
      : HypothesisFailure(msg), root_(std::move(root)) {}
  const Rational& root() const { return root_; }

 private:
  Rational root_;
};

struct SplitBeta {
  Polynomial beta;        // roots in (-1, 0)
  Polynomial beta_prime;  // b(-s-1) / beta
  int r_f = 0;
};
// Throws RootsOutsideInterval unless every root of b lies in (-2, 0).
SplitBeta split_beta(const BFunctionData& b);

struct GammaIdeal {
  Polynomial f;
  Polynomial beta;
  WeylIdeal ann_sminus1;
  std::vector<WeylOperator> generators;  // f, beta(-s), then ann f^(s-1)
  WeylGroebnerBasis sharp_gb;
  std::vector<int> orders;  // F^sharp-order of each sharp_gb element
  WeylIdeal ann_plus_f;     // ann f^(s-1) + D[s] f
};
GammaIdeal gamma_ideal(const Polynomial& f, const Polynomial& beta, const WeylIdeal& ann_sminus1,
                       const Budget& budget = {});

struct Hypotheses {
  bool euler = false;
  bool strong_euler = false;
  PrimeVerdict prime = PrimeVerdict::Unknown;
  Provenance prime_provenance = Provenance::Computed;
  bool roots_in_interval = false;

  bool allow_formula() const { return euler && roots_in_interval && prime == PrimeVerdict::PrimeCertified; }
  bool allow_k0() const { return roots_in_interval; }
};

// N(P) = numerator of phi_0(m * g) f^-1 over f^(k+1).
struct GeneratorRecord {
  std::size_t gb_index;
  int gb_order;
  Monomial multiplier;  // d^alpha s^j in the D[s] ring
  int sharp_order;      // of m * g, at most k
  Polynomial numerator;
};

struct HodgeIdeal {
  int k = 0;
  Ideal ideal;  // reduced Groebner basis under degrevlex
  // False when the hypotheses did not hold and the caller forced the run.
  bool hodge_label = true;
  std::vector<GeneratorRecord> records;
};

HodgeIdeal hodge_ideal(const GammaIdeal& G, int k, const Hypotheses& hyp, bool force = false);
Ideal hodge_ideal_k0_by_elimination(const GammaIdeal& G, const Hypotheses& hyp, bool force = false);

// (f) I_k + (f d_i g - (k+1) g d_i f).
Ideal one_step(const Polynomial& f, const Ideal& Ik, int k);
// I must hold I_0 .. I_(n-2).
int generation_level(const Polynomial& f, const std::vector<Ideal>& I);

// P beta'(-s) in ann f^(s-1) + D[s] f.
bool functional_equation_member(const WeylOperator& P, const GammaIdeal& G, const Polynomial& beta_prime);
bool r_f_containment_check(const Polynomial& f, int r_f, const Ideal& I_rf);

struct PwRootResult {
  bool vanishes = false;
  Rational lo, hi;                  // [2 deg - Σw, 3 deg - Σw)
  std::vector<Rational> degrees;    // realizable degrees checked
  std::optional<Rational> failing;  // first degree with a nonzero piece
  bool roots_certified = false;
};
// locally_pwh: caller asserts f is positively weighted homogeneous locally everywhere.
PwRootResult pw_root_criterion(const Polynomial& f, const std::vector<Rational>& weights,
                               bool locally_pwh = false);

struct AnalyzeOptions {
  // Highest level k; negative selects max(n - 2, 0).
  int K = -1;
  std::optional<Polynomial> injected_b;  // in s_ring()
  std::optional<PrimeVerdict> pinned_prime;
  std::optional<AnnMethod> ann_method;  // default: log path when of linear Jacobian type
  bool force = false;
  Budget budget;
};

struct Timing {
  std::string stage;
  double seconds;
};

struct HodgeReport {
  Polynomial f;
  Hypotheses hyp;
  std::optional<EulerCertificate> euler;
  LjtVerdict ljt = LjtVerdict::False;
  PrimeResult prime;
  Annihilator ann;
  BFunctionData b;
  std::optional<SplitBeta> split;
  std::vector<HodgeIdeal> levels;
  std::optional<Ideal> k0_elimination;
  std::optional<bool> k0_agree;
  std::optional<int> generation_level;
  std::optional<bool> r_f_containment;  // when r_f <= K
  std::vector<Timing> timings;
  std::string note;  // why later stages were skipped, if they were

  enum class Failure { None, Hypothesis, Budget, Input, Internal };
  Failure failure = Failure::None;
  std::string failed_stage;
  std::string error;
};

// Never throws for stage errors: the report carries the failing stage and
// every result computed before it.
HodgeReport analyze(const Polynomial& f, const AnalyzeOptions& opt = {});

}  // namespace hodge
