#include <gtest/gtest.h>

#include <map>
#include <random>

#include "hodge/hodge.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hodge;
using hodge::testing::P;
using hodge::testing::ring;
using namespace hodge::testing;

namespace {

Polynomial spoly(const std::string& s) { return parse_polynomial(s, s_ring()); }

Ideal ideal(const Ring& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* g : gens) v.push_back(P(R, g));
  return Ideal(R, v);
}

BFunctionData bdata(const char* b) {
  BFunctionData d;
  d.b = spoly(b);
  d.roots = rational_roots(d.b);
  return d;
}

Hypotheses all_hypotheses() {
  Hypotheses h;
  h.euler = h.strong_euler = h.roots_in_interval = true;
  h.prime = PrimeVerdict::PrimeCertified;
  return h;
}

struct Case {
  std::vector<std::string> vars;
  std::string f;
  int K;
  std::optional<PrimeVerdict> pin;
};

const std::vector<Case>& cases() {
  static const std::vector<Case> v = {
      {{"x", "y", "z"}, "x", 2, {}},
      {{"x", "y"}, "x*y", 1, {}},
      {{"x", "y"}, "x^2+y^3", 2, {}},
      {{"x", "y", "z"}, "x*y*z*(x+y+z)", 2, {}},
      {{"x", "y", "z"}, "x^5+y^4*z", 6, {}},
      {{"x", "y", "z"}, "x*y*(x+y)*(x+y*z)", 2, PrimeVerdict::PrimeCertified},
  };
  return v;
}

// Reports are shared between tests; each is computed once.
const HodgeReport& report(const Case& c) {
  static std::map<std::string, HodgeReport> cache;
  auto it = cache.find(c.f);
  if (it != cache.end()) return it->second;
  AnalyzeOptions opt;
  opt.K = c.K;
  opt.pinned_prime = c.pin;
  return cache.emplace(c.f, analyze(P(PolyRing::make(c.vars), c.f), opt)).first->second;
}

struct GammaCase {
  Polynomial f;
  GammaIdeal G;
  SplitBeta split;
};

GammaCase gamma_for(const Polynomial& f) {
  auto A = annihilator_fs(f, AnnMethod::General);
  auto sp = split_beta(bernstein_sato(A));
  return {f, gamma_ideal(f, sp.beta, A.shifted(-1).ideal), sp};
}


}  // namespace

TEST(SplitBeta, TwoFoldNormalCrossingRoot) {
  auto sp = split_beta(bdata("(s+1)^2"));
  EXPECT_EQ(sp.beta, spoly("1"));
  EXPECT_EQ(sp.beta_prime, spoly("s^2"));
  EXPECT_EQ(sp.r_f, 0);
}

TEST(SplitBeta, FourLineBFunction) {
  auto sp = split_beta(bdata("(s+1)^3*(s+1/2)*(s+3/4)*(s+5/4)"));
  EXPECT_EQ(sp.beta, spoly("(s+1/2)*(s+1/4)"));
  EXPECT_EQ(sp.beta_prime, spoly("s^3*(s-1/4)"));
  EXPECT_EQ(sp.r_f, 2);
}

TEST(SplitBeta, RejectsRootOutsideInterval) {
  try {
    split_beta(bdata("(s+1)*(s+5/2)"));
    FAIL() << "expected RootsOutsideInterval";
  } catch (const RootsOutsideInterval& e) {
    EXPECT_EQ(e.root(), Rational(-5, 2));
  }
}

TEST(SplitBeta, WeightedHomogeneousFromScratch) {
  auto R = ring({"x", "y", "z"});
  auto sp = split_beta(bernstein_sato(annihilator_fs(P(R, "x^5+y^4*z"), AnnMethod::General)));
  EXPECT_EQ(sp.beta, spoly("(s+1/20)*(s+2/20)*(s+3/20)*(s+6/20)*(s+7/20)*(s+11/20)"));
  EXPECT_EQ(sp.r_f, 6);
}

TEST(GammaIdeal, UnitWhenRootsAreSmall) {
  for (auto [vars, f] : {std::pair{std::vector<const char*>{"x"}, "x"},
                         std::pair{std::vector<const char*>{"x", "y"}, "x*y"}}) {
    auto R = PolyRing::make(std::vector<std::string>(vars.begin(), vars.end()));
    auto g = gamma_for(P(R, f));
    EXPECT_EQ(g.split.r_f, 0);
    EXPECT_TRUE(g.G.sharp_gb.is_unit()) << f;
  }
}

TEST(GammaIdeal, ProperForGenericArrangement) {
  auto R = ring({"x", "y", "z"});
  auto g = gamma_for(P(R, "x*y*z*(x+y+z)"));
  EXPECT_FALSE(g.G.sharp_gb.is_unit());
  const auto& W = g.G.sharp_gb.ring();
  std::vector<Polynomial> order0;
  for (std::size_t i = 0; i < g.G.sharp_gb.basis().size(); ++i) {
    EXPECT_EQ(g.G.orders[i], sharp_order_of(g.G.sharp_gb.basis()[i]));
    if (g.G.orders[i] == 0 && g.G.sharp_gb.basis()[i].is_function())
      order0.push_back(g.G.sharp_gb.basis()[i].normal_form_poly().embed(R));
  }
  EXPECT_TRUE(ideals_equal(Ideal(R, order0), ideal(R, {"x", "y", "z"})));
  (void)W;
}

TEST(HodgeIdeal, GenericArrangement) {
  auto R = ring({"x", "y", "z"});
  auto g = gamma_for(P(R, "x*y*z*(x+y+z)"));
  auto I0 = hodge_ideal(g.G, 0, all_hypotheses());
  EXPECT_TRUE(I0.hodge_label);
  EXPECT_TRUE(ideals_equal(I0.ideal, ideal(R, {"x", "y", "z"})));
  EXPECT_TRUE(ideals_equal(hodge_ideal_k0_by_elimination(g.G, all_hypotheses()), I0.ideal));
}

TEST(HodgeIdeal, FiveHyperplanes) {
  auto R = ring({"x", "y", "z"});
  auto g = gamma_for(P(R, "x*y*z*(x+y+z)*(x+y+2*z)"));
  auto I0 = hodge_ideal(g.G, 0, all_hypotheses());
  EXPECT_TRUE(ideals_equal(I0.ideal, ideal(R, {"z^2", "y*z", "x*z", "x*y+y^2", "x^2-y^2"})));
}

TEST(HodgeIdeal, RefusesWithoutHypotheses) {
  auto R = ring({"x", "y", "z"});
  auto g = gamma_for(P(R, "x*y*z*(x+y+z)"));
  EXPECT_THROW(hodge_ideal(g.G, 0, Hypotheses{}), HypothesisFailure);
  EXPECT_THROW(hodge_ideal_k0_by_elimination(g.G, Hypotheses{}), HypothesisFailure);
  auto H = hodge_ideal(g.G, 0, Hypotheses{}, true);
  EXPECT_FALSE(H.hodge_label);
  EXPECT_TRUE(ideals_equal(H.ideal, ideal(R, {"x", "y", "z"})));
  Hypotheses k0only;
  k0only.roots_in_interval = true;
  EXPECT_NO_THROW(hodge_ideal_k0_by_elimination(g.G, k0only));
  EXPECT_THROW(hodge_ideal(g.G, -1, all_hypotheses()), InputError);
}

TEST(HodgeIdeal, EliminationPathExamples) {
  Hypotheses h;
  h.roots_in_interval = true;
  auto R1 = ring({"x"});
  EXPECT_TRUE(hodge_ideal_k0_by_elimination(gamma_for(P(R1, "x")).G, h).generators() ==
              std::vector<Polynomial>{Polynomial::constant(R1, 1)});
  auto R = ring({"x", "y", "z"});
  EXPECT_TRUE(ideals_equal(hodge_ideal_k0_by_elimination(gamma_for(P(R, "x*y*(x+y)*(x+y*z)")).G, h),
                           ideal_power(ideal(R, {"x", "y"}), 2)));
}

TEST(HodgeIdeal, CuspFirstLevels) {
  auto R = ring({"x", "y"});
  auto g = gamma_for(P(R, "x^2+y^3"));
  EXPECT_TRUE(ideals_equal(hodge_ideal(g.G, 0, all_hypotheses()).ideal, ideal(R, {"x", "y"})));
  EXPECT_TRUE(ideals_equal(hodge_ideal(g.G, 1, all_hypotheses()).ideal, ideal(R, {"x^2", "x*y", "y^3"})));
}

TEST(HodgeIdeal, QuinticWithLineOfSingularities) {
  auto R = ring({"x", "y", "z"});
  auto f = P(R, "x^5+x^2*y^3+y^4*z");
  AnalyzeOptions opt;
  opt.K = 1;
  auto rep = analyze(f, opt);
  ASSERT_EQ(rep.levels.size(), 2u);
  EXPECT_TRUE(ideals_equal(rep.levels[0].ideal, ideal_power(ideal(R, {"x", "y"}), 3)));
  // Away from the origin the germ along the z-axis is the plane curve
  // x^5+x^2y^3+y^4; I_1 must restrict to that curve's I_1 at z = 1.
  auto R2 = ring({"x", "y"});
  auto g2 = gamma_for(P(R2, "x^5+x^2*y^3+y^4"));
  Ideal plane = hodge_ideal(g2.G, 1, all_hypotheses()).ideal;
  std::vector<Polynomial> restricted;
  for (const auto& g : rep.levels[1].ideal.generators())
    restricted.push_back(g.substitute(R2, {P(R2, "x"), P(R2, "y"), P(R2, "1")}));
  EXPECT_TRUE(ideals_equal(Ideal(R2, restricted), plane));
}

TEST(GenerationLevel, Examples) {
  auto R = ring({"x", "y", "z", "w"});
  auto one = Ideal(R, {Polynomial::constant(R, 1)});
  EXPECT_EQ(generation_level(P(R, "x"), {one, one, one}), 0);
  EXPECT_THROW(generation_level(P(R, "x"), {one}), InputError);
  const auto& rep = report(cases()[3]);
  ASSERT_TRUE(rep.generation_level);
  EXPECT_EQ(*rep.generation_level, 0);
}

TEST(GenerationLevel, OneStepFromSmoothIsUnit) {
  auto R = ring({"x", "y"});
  auto one = Ideal(R, {Polynomial::constant(R, 1)});
  // f I + (f d g - (k+1) g d f) with g = 1 contains x and y; together with f = x, the unit arises only via f.
  EXPECT_TRUE(ideals_equal(one_step(P(R, "x"), one, 0), ideal(R, {"x", "1"})));
}

TEST(FunctionalEquation, Examples) {
  auto R1 = ring({"x"});
  auto g1 = gamma_for(P(R1, "x"));
  const auto& W1 = g1.G.ann_sminus1.ring();
  EXPECT_TRUE(functional_equation_member(WeylOperator::constant(W1, 1), g1.G, g1.split.beta_prime));
  auto R = ring({"x", "y", "z"});
  auto g = gamma_for(P(R, "x*y*z*(x+y+z)"));
  const auto& W = g.G.ann_sminus1.ring();
  EXPECT_TRUE(functional_equation_member(WeylOperator::x(W, 0), g.G, g.split.beta_prime));
  EXPECT_FALSE(functional_equation_member(WeylOperator::constant(W, 1), g.G, g.split.beta_prime));
}

TEST(RfContainment, Examples) {
  auto R = ring({"x"});
  EXPECT_TRUE(r_f_containment_check(P(R, "x"), 0, Ideal(R, {Polynomial::constant(R, 1)})));
  auto R3 = ring({"x", "y", "z"});
  EXPECT_FALSE(r_f_containment_check(P(R3, "x*y"), 1, ideal(R3, {"z"})));
  EXPECT_THROW(r_f_containment_check(P(R, "x"), -1, Ideal(R, {})), InputError);
}

TEST(PwRootCriterion, Examples) {
  auto R = ring({"x", "y", "z"});
  auto q = pw_root_criterion(P(R, "x^2+y^2+z^2"), {1, 1, 1});
  EXPECT_TRUE(q.vanishes);
  EXPECT_EQ(q.lo, 1);
  EXPECT_EQ(q.hi, 3);
  auto w = pw_root_criterion(P(R, "x^5+y^4*z"), {4, 3, 8}, true);
  EXPECT_TRUE(w.vanishes);
  EXPECT_TRUE(w.roots_certified);
  EXPECT_EQ(w.lo, 25);
  EXPECT_EQ(w.hi, 45);
  for (const auto& t : w.degrees) {
    EXPECT_GE(t, 25);
    EXPECT_LT(t, 45);
  }
  auto c = pw_root_criterion(P(R, "x*y*z"), {1, 1, 1});
  EXPECT_TRUE(c.vanishes);
  EXPECT_EQ(c.lo, 3);
  EXPECT_EQ(c.hi, 6);
  EXPECT_FALSE(c.roots_certified);
  EXPECT_THROW(pw_root_criterion(P(R, "x^2+y^3"), {1, 1, 1}), InputError);
}

TEST(PwRootCriterion, DetectsNonvanishingPiece) {
  // Non-isolated: (x^2 y^2) has Jacobian ideal (xy^2, x^2y) with x^2y^2 saturated away only
  // up to an embedded component supported at the origin.
  auto R = ring({"x", "y", "z"});
  auto r = pw_root_criterion(P(R, "x^2*y^2+z^4"), {1, 1, 1});
  if (!r.vanishes) {
    ASSERT_TRUE(r.failing);
    EXPECT_FALSE(graded_piece_vanishes(Ideal(R, gradient(P(R, "x^2*y^2+z^4"))), {1, 1, 1}, *r.failing));
  }
  EXPECT_EQ(r.lo, 5);
}

TEST(Analyze, ReportsHypothesesAndLevels) {
  const auto& rep = report(cases()[4]);
  EXPECT_TRUE(rep.hyp.euler);
  EXPECT_TRUE(rep.hyp.strong_euler);
  EXPECT_EQ(rep.ljt, LjtVerdict::True);
  EXPECT_EQ(rep.hyp.prime, PrimeVerdict::PrimeCertified);
  EXPECT_EQ(rep.ann.method, AnnMethod::LogDerivation);
  ASSERT_TRUE(rep.split);
  EXPECT_EQ(rep.split->r_f, 6);
  ASSERT_EQ(rep.levels.size(), 7u);
  ASSERT_TRUE(rep.r_f_containment);
  EXPECT_TRUE(*rep.r_f_containment);
  EXPECT_FALSE(rep.timings.empty());
}

TEST(Analyze, PinnedPrimeVerdict) {
  const auto& rep = report(cases()[5]);
  EXPECT_EQ(rep.hyp.prime_provenance, Provenance::Pinned);
  EXPECT_EQ(rep.ann.method, AnnMethod::General);
  ASSERT_FALSE(rep.levels.empty());
  auto R = rep.f.ring();
  EXPECT_TRUE(ideals_equal(rep.levels[0].ideal, ideal_power(ideal(R, {"x", "y"}), 2)));
  ASSERT_TRUE(rep.generation_level);
  EXPECT_EQ(*rep.generation_level, 0);
}

TEST(Analyze, StopsWithoutFormulaHypotheses) {
  auto R = ring({"x", "y", "z"});
  AnalyzeOptions opt;
  opt.pinned_prime = PrimeVerdict::Unknown;
  auto rep = analyze(P(R, "x*y*(x+y)*(x+y*z)"), opt);
  EXPECT_TRUE(rep.levels.empty());
  ASSERT_TRUE(rep.k0_elimination);
  EXPECT_TRUE(ideals_equal(*rep.k0_elimination, ideal_power(ideal(R, {"x", "y"}), 2)));
  EXPECT_FALSE(rep.note.empty());
}

TEST(HodgeProperties, EliminationAgreesMonotoneAndRfContainment) {
  for (const auto& c : cases()) {
    const auto& rep = report(c);
    ASSERT_FALSE(rep.levels.empty()) << c.f << ": " << rep.note;
    ASSERT_TRUE(rep.k0_agree) << c.f;
    EXPECT_TRUE(*rep.k0_agree) << c.f;
    for (std::size_t k = 0; k + 1 < rep.levels.size(); ++k)
      EXPECT_TRUE(ideal_contains(rep.levels[k + 1].ideal, ideal_times(rep.f, rep.levels[k].ideal)))
          << c.f << " k=" << k;
    if (rep.split->r_f <= c.K) {
      ASSERT_TRUE(rep.r_f_containment) << c.f;
      EXPECT_TRUE(*rep.r_f_containment) << c.f;
    }
  }
}

TEST(HodgeProperties, GeneratorsComeFromBoundedSharpOrder) {
  for (const auto& c : cases()) {
    const auto& rep = report(c);
    for (const auto& H : rep.levels) {
      for (const auto& r : H.records) {
        EXPECT_LE(r.gb_order, H.k) << c.f;
        EXPECT_LE(r.sharp_order, H.k) << c.f;
        EXPECT_EQ(r.sharp_order, r.gb_order + static_cast<int>(r.multiplier.total_degree())) << c.f;
        EXPECT_TRUE(contains(buchberger(H.ideal), r.numerator)) << c.f;
      }
      EXPECT_TRUE(H.hodge_label);
    }
  }
}

TEST(HodgeProperties, BetaGeneratorLiesInGamma) {
  for (const auto& c : cases()) {
    auto g = gamma_for(P(PolyRing::make(c.vars), c.f));
    const auto& W = g.G.sharp_gb.ring();
    WeylOperator beta_neg = WeylOperator::constant(W, 0);
    for (const auto& [m, co] : g.split.beta.terms())
      beta_neg += (m[0] % 2 ? Rational(-co) : co) * WeylOperator::s(W).pow(m[0]);
    EXPECT_TRUE(weyl_contains(g.G.sharp_gb, beta_neg)) << c.f;
    EXPECT_EQ(sharp_order_of(beta_neg), g.split.r_f) << c.f;
    // s -> 0 leaves the nonzero constant beta(0), giving f^-1 in F_{r_f}^H.
    auto phi0 = beta_neg.specialize_central(0, 0);
    EXPECT_TRUE(phi0.is_function() && !phi0.is_zero()) << c.f;
    EXPECT_EQ(phi0, WeylOperator::constant(W, g.split.beta.constant_term())) << c.f;
  }
}

TEST(HodgeProperties, GammaMembershipMatchesFunctionalEquation) {
  std::mt19937 rng(2024);
  for (const auto& c : cases()) {
    auto g = gamma_for(P(PolyRing::make(c.vars), c.f));
    const auto& W = g.G.sharp_gb.ring();
    int members = 0;
    for (int trial = 0; trial < 50; ++trial) {
      WeylOperator Pop = random_operator(rng, W, 3);
      if (trial % 2 == 1) {
        const auto& gens = g.G.generators;
        const auto& gen = gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)];
        Pop = random_operator(rng, W, 1) * gen;
      }
      bool in_gamma = weyl_contains(g.G.sharp_gb, Pop);
      members += in_gamma;
      EXPECT_EQ(in_gamma, functional_equation_member(Pop, g.G, g.split.beta_prime))
          << c.f << ": " << Pop.to_string();
    }
    EXPECT_GT(members, 0) << c.f;
  }
}
