#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodge/groebner.hpp"
#include "hodge/weyl.hpp"

namespace hodge {

// E = Σ (a_i / u) d_i with u(0) != 0 and E·f = f near the designated point.
struct EulerCertificate {
  std::vector<Polynomial> numerators;
  Polynomial denominator;  // u; the constant 1 for a polynomial field
  bool strong = false;
  std::vector<Rational> point;

  bool polynomial() const { return denominator.is_constant(); }
  // Polynomial coefficients a_i / u; requires polynomial().
  std::vector<Polynomial> coefficients() const;
  WeylOperator field(const WeylRingPtr& ring) const;
};

// Empty point means the origin.
std::optional<EulerCertificate> euler_field(const Polynomial& f, std::vector<Rational> point = {});
bool verify_euler(const Polynomial& f, const EulerCertificate& E);

struct LogDerivations {
  SyzygyModule log0;  // Der(-log_0 f): syzygies of the gradient
  SyzygyModule log;   // Der(-log f), projected to the d-coordinates
};
LogDerivations log_derivations(const Polynomial& f);

enum class AnnMethod { LogDerivation, General };

struct Annihilator {
  Polynomial f;
  WeylIdeal ideal;  // ann_{D[s]} f^(s + shift)
  long shift = 0;
  AnnMethod method = AnnMethod::General;

  Annihilator shifted(long l) const;
};

struct AnnOptions {
  Budget budget;
};

Annihilator annihilator_fs(const Polynomial& f, AnnMethod method, const AnnOptions& opt = {});
Annihilator annihilator_fs(const Polynomial& f, AnnMethod method, const EulerCertificate& E,
                           const AnnOptions& opt = {});
// Substitutes s -> s + l in every generator.
WeylIdeal shift_ideal(const WeylIdeal& I, long l);

class IrrationalRoots : public Error {
 public:
  IrrationalRoots(const std::string& msg, Polynomial b) : Error(msg), b_(std::move(b)) {}
  const Polynomial& b() const { return b_; }

 private:
  Polynomial b_;
};

struct RootMultiplicity {
  Rational root;
  unsigned multiplicity;
};

enum class Provenance { Computed, Injected, Pinned };
std::string to_string(Provenance p);

struct BFunctionData {
  Polynomial b;  // monic in Q[s]
  std::vector<RootMultiplicity> roots;  // increasing
  std::optional<Polynomial> beta, beta_prime;
  int r_f = -1;
  Provenance provenance = Provenance::Computed;
  bool verified = false;
};

// Rational roots of a univariate polynomial with multiplicities, increasing.
// Throws IrrationalRoots if an irreducible factor of degree > 1 remains.
std::vector<RootMultiplicity> rational_roots(const Polynomial& p);
// Π (s - λ)^m in the ring of `s`.
Polynomial from_roots(const Ring& R, const std::vector<RootMultiplicity>& roots);

// β_f and β'_f from the roots of b; nullopt if a root lies outside (-2, 0).
std::optional<std::pair<Polynomial, Polynomial>> beta_split(const Ring& sring,
                                                           const std::vector<RootMultiplicity>& roots);

enum class BMethod { MinimalPolynomial, Elimination };

Ring s_ring();
// Left ideal ann + D[s] f.
WeylIdeal bernstein_ideal(const Annihilator& ann);
BFunctionData bernstein_sato(const Annihilator& ann, BMethod method = BMethod::MinimalPolynomial);
// Verifies b ∈ ann + D[s] f; throws HypothesisFailure when not.
BFunctionData inject_bfunction(const Annihilator& ann, const Polynomial& b);
bool bfunction_member(const Annihilator& ann, const Polynomial& b);
// b(s) to an operator in the D[s] ring of `R`.
WeylOperator s_polynomial(const WeylRingPtr& R, const Polynomial& b);

enum class LjtVerdict { True, False, NeedsStrongEulerCheckFailure };
enum class LjtMethod { TrueJacobian, Jacobian };
struct LjtResult {
  LjtVerdict verdict = LjtVerdict::False;
  std::optional<Polynomial> witness;  // kernel element outside the linear ideal
  Ideal kernel;
  Ideal linear;
};
// Each point is checked for strong Euler homogeneity; empty means the origin.
LjtResult linear_jacobian_type(const Polynomial& f,
                               const std::vector<std::vector<Rational>>& points = {},
                               LjtMethod method = LjtMethod::TrueJacobian);

enum class PrimeVerdict { PrimeCertified, NotPrime, Unknown };
struct PrimeResult {
  PrimeVerdict verdict = PrimeVerdict::Unknown;
  std::string route;
  std::string witness;
  std::optional<Ideal> symbol_ideal;  // gr^ord(ann_D f^(s-1)) when route B ran
};
struct PrimeOptions {
  std::vector<Ideal> candidate_primes;  // in the symbol ring of D (x, xi)
  std::optional<Annihilator> ann;       // ann f^s if already known
  int probes = 8;
  bool skip_route_a = false;
};
PrimeResult parametrically_prime(const Polynomial& f, const PrimeOptions& opt = {});

// gr^ord(ann_D f^(s+shift)) in the symbol ring of D (x, xi) from ann_{D[s]}.
Ideal ord_symbol_ideal(const Annihilator& ann_shifted);
Ring d_symbol_ring(const Ring& base);

}  // namespace hodge
