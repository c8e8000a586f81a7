#include "hodge/hodge.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace hodge {

namespace {

Ideal reduced(const Ideal& I) { return Ideal(I.ring(), buchberger(I).basis()); }

std::size_t s_central(const WeylRing& R) {
  if (!R.has_s()) throw InputError("operator ring has no s");
  return static_cast<std::size_t>(R.s_index()) - 2 * R.n();
}

// Monomials in the given variables of total degree at most e.
void enumerate(const std::vector<std::size_t>& vars, int e, std::size_t pos, Monomial& cur,
               std::vector<Monomial>& out) {
  if (pos == vars.size()) {
    out.push_back(cur);
    return;
  }
  for (int a = 0; a <= e; ++a) {
    cur[vars[pos]] = static_cast<std::uint16_t>(a);
    enumerate(vars, e - a, pos + 1, cur, out);
  }
  cur[vars[pos]] = 0;
}

// Numerator of P f^-1 over f^(k+1).
Polynomial numerator_over(const WeylOperator& P, const Polynomial& f, int k) {
  auto [num, e] = act_on_power(P, f, -1).specialize(0);
  long exp = static_cast<long>(k) + 1 + e;
  if (exp < 0) throw Error("internal error: pole order exceeds k + 1");
  return num * f.pow(static_cast<unsigned>(exp));
}

}  // namespace

SplitBeta split_beta(const BFunctionData& b) {
  auto roots = b.roots.empty() ? rational_roots(b.b) : b.roots;
  for (const auto& r : roots)
    if (r.root <= -2 || r.root >= 0)
      throw RootsOutsideInterval("root " + to_string(r.root) + " of b lies outside (-2, 0)", r.root);
  auto split = beta_split(b.b.ring(), roots);
  SplitBeta out{split->first, split->second, split->first.total_degree()};
  Polynomial s = Polynomial::variable(b.b.ring(), 0);
  Polynomial bm = b.b.substitute(b.b.ring(), {-s - Polynomial::constant(b.b.ring(), 1)});
  if (out.beta * out.beta_prime != bm) throw Error("internal error: beta * beta' != b(-s-1)");
  return out;
}

GammaIdeal gamma_ideal(const Polynomial& f, const Polynomial& beta, const WeylIdeal& ann_sminus1,
                       const Budget& budget) {
  const auto& R = ann_sminus1.ring();
  GammaIdeal G;
  G.f = f;
  G.beta = beta;
  G.ann_sminus1 = ann_sminus1;
  WeylOperator S = WeylOperator::s(R);
  WeylOperator bneg(R);
  for (const auto& [m, c] : beta.terms()) {
    Rational cc = (m[0] % 2 == 0) ? c : Rational(-c);
    bneg += cc * S.pow(m[0]);
  }
  G.generators.push_back(WeylOperator::from_polynomial(R, f));
  G.generators.push_back(bneg);
  for (const auto& g : ann_sminus1.generators()) G.generators.push_back(g);
  G.sharp_gb = weyl_buchberger(WeylIdeal(R, G.generators), sharp_order(*R), budget);
  for (const auto& g : G.sharp_gb.basis()) G.orders.push_back(sharp_order_of(g));
  std::vector<WeylOperator> af = ann_sminus1.generators();
  af.push_back(G.generators.front());
  G.ann_plus_f = WeylIdeal(R, af);
  return G;
}

HodgeIdeal hodge_ideal(const GammaIdeal& G, int k, const Hypotheses& hyp, bool force) {
  if (k < 0) throw InputError("level k must be nonnegative");
  if (!hyp.allow_formula() && !force)
    throw HypothesisFailure("hypotheses for the Hodge-ideal formula do not hold");
  const auto& R = G.sharp_gb.ring();
  const std::size_t sk = s_central(*R);
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < R->n(); ++i) vars.push_back(R->d_index(i));
  vars.push_back(static_cast<std::size_t>(R->s_index()));
  HodgeIdeal H;
  H.k = k;
  H.hodge_label = hyp.allow_formula();
  std::vector<Polynomial> gens;
  const auto& B = G.sharp_gb.basis();
  for (std::size_t i = 0; i < B.size(); ++i) {
    int d = G.orders[i];
    if (d > k) continue;
    std::vector<Monomial> ms;
    Monomial cur;
    enumerate(vars, k - d, 0, cur, ms);
    for (const auto& m : ms) {
      WeylOperator mop(R, Polynomial::monomial(R->shadow(), m));
      WeylOperator P = (mop * B[i]).specialize_central(sk, 0);
      if (P.is_zero()) continue;
      Polynomial N = numerator_over(P, G.f, k);
      if (N.is_zero()) continue;
      H.records.push_back({i, d, m, d + static_cast<int>(m.total_degree()), N});
      gens.push_back(N);
    }
  }
  H.ideal = reduced(Ideal(G.f.ring(), gens));
  return H;
}

Ideal hodge_ideal_k0_by_elimination(const GammaIdeal& G, const Hypotheses& hyp, bool force) {
  if (!hyp.allow_k0() && !force) throw HypothesisFailure("roots of b are not in (-2, 0)");
  const auto& R = G.sharp_gb.ring();
  std::vector<bool> mask(R->nvars(), false);
  for (std::size_t i = 0; i < R->n(); ++i) mask[R->d_index(i)] = true;
  for (std::size_t c = 0; c < R->ncentral(); ++c) mask[R->central_index(c)] = true;
  WeylGroebnerBasis E =
      weyl_buchberger(WeylIdeal(R, G.sharp_gb.basis()), TermOrder::block_elimination(mask));
  std::vector<Polynomial> gens;
  for (const auto& g : E.basis()) {
    bool free = true;
    for (std::size_t v = 0; v < R->nvars(); ++v)
      if (mask[v] && g.uses_variable(v)) free = false;
    if (free) gens.push_back(g.normal_form_poly().embed(G.f.ring()));
  }
  return reduced(Ideal(G.f.ring(), gens));
}

Ideal one_step(const Polynomial& f, const Ideal& Ik, int k) {
  std::vector<Polynomial> gens;
  const std::size_t n = f.ring()->nvars();
  auto grad = gradient(f);
  for (const auto& g : Ik.generators()) {
    gens.push_back(f * g);
    for (std::size_t i = 0; i < n; ++i)
      gens.push_back(f * partial_derivative(g, i) - Polynomial::constant(f.ring(), k + 1) * g * grad[i]);
  }
  return reduced(Ideal(f.ring(), gens));
}

int generation_level(const Polynomial& f, const std::vector<Ideal>& I) {
  const int n = static_cast<int>(f.ring()->nvars());
  const int top = std::max(0, n - 2);
  if (static_cast<int>(I.size()) < top + 1)
    throw InputError("generation level needs I_0 .. I_" + std::to_string(top));
  int q = top;
  for (int k = n - 3; k >= 0; --k) {
    if (!ideals_equal(one_step(f, I[static_cast<std::size_t>(k)], k), I[static_cast<std::size_t>(k) + 1])) break;
    q = k;
  }
  return q;
}

bool functional_equation_member(const WeylOperator& P, const GammaIdeal& G, const Polynomial& beta_prime) {
  const auto& R = G.ann_sminus1.ring();
  WeylOperator S = WeylOperator::s(R);
  WeylOperator bp(R);
  for (const auto& [m, c] : beta_prime.terms()) {
    Rational cc = (m[0] % 2 == 0) ? c : Rational(-c);
    bp += cc * S.pow(m[0]);
  }
  return weyl_contains(G.ann_plus_f.groebner(sharp_order(*R)), P * bp);
}

bool r_f_containment_check(const Polynomial& f, int r_f, const Ideal& I_rf) {
  if (r_f < 0) throw InputError("r_f must be nonnegative");
  return ideal_contains(I_rf, Ideal(f.ring(), {f.pow(static_cast<unsigned>(r_f))}));
}

PwRootResult pw_root_criterion(const Polynomial& f, const std::vector<Rational>& weights, bool locally_pwh) {
  const Ring& R = f.ring();
  if (weights.size() != R->nvars()) throw InputError("one weight per variable is required");
  auto wd = weighted_degree(f, weights);
  if (!wd.homogeneous) throw InputError("f is not weighted homogeneous for the given weights");
  Rational sum = 0;
  for (const auto& w : weights) sum += w;
  PwRootResult res;
  res.lo = 2 * wd.degree - sum;
  res.hi = 3 * wd.degree - sum;
  // Realizable degrees in [lo, hi).
  std::set<Rational> degs;
  Monomial cur;
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational acc) {
    if (acc >= res.hi) return;
    if (i == weights.size()) {
      if (acc >= res.lo) degs.insert(acc);
      return;
    }
    for (Rational a = acc; a < res.hi; a += weights[i]) rec(i + 1, a);
  };
  rec(0, Rational(0));
  res.degrees.assign(degs.begin(), degs.end());
  Ideal J(R, gradient(f));
  res.vanishes = true;
  for (const auto& t : res.degrees) {
    if (!graded_piece_vanishes(J, weights, t)) {
      res.vanishes = false;
      res.failing = t;
      break;
    }
  }
  res.roots_certified = res.vanishes && locally_pwh;
  return res;
}

namespace {

void run_stages(HodgeReport& rep, const AnalyzeOptions& opt, std::string& stage) {
  const Polynomial& f = rep.f;
  auto clock = std::chrono::steady_clock::now();
  auto enter = [&](const char* next) {
    auto now = std::chrono::steady_clock::now();
    if (!stage.empty()) rep.timings.push_back({stage, std::chrono::duration<double>(now - clock).count()});
    clock = now;
    stage = next;
  };
  const int n = static_cast<int>(f.ring()->nvars());
  const int K = opt.K < 0 ? std::max(n - 2, 0) : opt.K;

  enter("reduced_check");
  if (!reduced_check(f)) throw HypothesisFailure("f is not reduced");
  enter("euler_field");
  rep.euler = euler_field(f);
  rep.hyp.euler = rep.euler.has_value();
  rep.hyp.strong_euler = rep.euler && rep.euler->strong;
  enter("linear_jacobian_type");
  rep.ljt = linear_jacobian_type(f).verdict;

  enter("annihilator");
  AnnMethod method = opt.ann_method.value_or(
      rep.ljt == LjtVerdict::True && rep.euler && rep.euler->polynomial() ? AnnMethod::LogDerivation
                                                                           : AnnMethod::General);
  AnnOptions ao;
  ao.budget = opt.budget;
  rep.ann = annihilator_fs(f, method, ao);

  enter("parametrically_prime");
  if (opt.pinned_prime) {
    rep.prime.verdict = *opt.pinned_prime;
    rep.prime.route = "pinned";
    rep.hyp.prime_provenance = Provenance::Pinned;
  } else if (rep.hyp.euler) {
    PrimeOptions po;
    po.ann = rep.ann;
    rep.prime = parametrically_prime(f, po);
  }
  rep.hyp.prime = rep.prime.verdict;

  enter("bernstein_sato");
  rep.b = opt.injected_b ? inject_bfunction(rep.ann, *opt.injected_b) : bernstein_sato(rep.ann);

  enter("split_beta");
  try {
    rep.split = split_beta(rep.b);
    rep.hyp.roots_in_interval = true;
  } catch (const RootsOutsideInterval& e) {
    rep.note = e.what();
    enter("");
    return;
  }
  enter("gamma_ideal");
  GammaIdeal G = gamma_ideal(f, rep.split->beta, rep.ann.shifted(-1).ideal, opt.budget);

  enter("k0_elimination");
  rep.k0_elimination = hodge_ideal_k0_by_elimination(G, rep.hyp);
  if (!rep.hyp.allow_formula() && !opt.force) {
    rep.note = "hypotheses for the Hodge-ideal formula do not hold";
    enter("");
    return;
  }
  enter("hodge_ideal");
  std::vector<Ideal> ideals;
  for (int k = 0; k <= K; ++k) {
    rep.levels.push_back(hodge_ideal(G, k, rep.hyp, opt.force));
    ideals.push_back(rep.levels.back().ideal);
  }
  enter("cross_checks");
  rep.k0_agree = ideals_equal(*rep.k0_elimination, ideals.front());
  if (K >= std::max(n - 2, 0)) rep.generation_level = generation_level(f, ideals);
  if (rep.split->r_f <= K)
    rep.r_f_containment = r_f_containment_check(f, rep.split->r_f, ideals[static_cast<std::size_t>(rep.split->r_f)]);
  enter("");
}

}  // namespace

HodgeReport analyze(const Polynomial& f, const AnalyzeOptions& opt) {
  HodgeReport rep;
  rep.f = f;
  std::string stage;
  auto fail = [&](HodgeReport::Failure kind, const std::exception& e) {
    rep.failure = kind;
    rep.failed_stage = stage;
    rep.error = e.what();
  };
  try {
    run_stages(rep, opt, stage);
  } catch (const HypothesisFailure& e) {
    fail(HodgeReport::Failure::Hypothesis, e);
  } catch (const BudgetExceeded& e) {
    fail(HodgeReport::Failure::Budget, e);
  } catch (const InputError& e) {
    fail(HodgeReport::Failure::Input, e);
  } catch (const ParseError& e) {
    fail(HodgeReport::Failure::Input, e);
  } catch (const IrrationalRoots& e) {
    fail(HodgeReport::Failure::Hypothesis, e);
  } catch (const Error& e) {
    fail(HodgeReport::Failure::Internal, e);
  }
  return rep;
}

}  // namespace hodge
