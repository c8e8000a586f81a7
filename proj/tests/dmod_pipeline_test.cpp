#include <gtest/gtest.h>

#include "hodge/dmodule.hpp"
#include "test_util.hpp"

using namespace hodge;
using hodge::testing::P;
using hodge::testing::ring;

namespace {

WeylOperator op(const WeylRingPtr& R, const std::string& s) { return parse_operator(s, R); }

Polynomial spoly(const std::string& s) { return parse_polynomial(s, s_ring()); }

bool weyl_ideals_equal(const WeylIdeal& a, const WeylIdeal& b) {
  const auto ord = TermOrder::degrevlex();
  const auto& ga = a.groebner(ord);
  const auto& gb = b.groebner(ord);
  for (const auto& g : a.generators())
    if (!weyl_contains(gb, g)) return false;
  for (const auto& g : b.generators())
    if (!weyl_contains(ga, g)) return false;
  return true;
}

struct Fixture {
  std::vector<const char*> vars;
  const char* f;
};

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> v = {
      {{"x", "y"}, "x*y"},
      {{"x", "y", "z"}, "x^2+y^2+z^2"},
      {{"x", "y", "z"}, "x*y*z*(x+y+z)"},
      {{"x", "y", "z"}, "x^5+y^4*z"},
      {{"x", "y", "z"}, "x*y*(x+y)*(x+y*z)"},
      {{"x", "y"}, "x^2+y^3"},
  };
  return v;
}

Ring fixture_ring(const Fixture& fx) {
  std::vector<std::string> names(fx.vars.begin(), fx.vars.end());
  return PolyRing::make(names);
}

// Δ(f^(k+1)) by direct polynomial differentiation.
Polynomial laplacian(const Polynomial& g) {
  Polynomial out(g.ring());
  for (std::size_t i = 0; i < g.ring()->nvars(); ++i)
    out += partial_derivative(partial_derivative(g, i), i);
  return out;
}

}  // namespace

TEST(LogDerivations, NormalCrossing) {
  auto R = ring({"x", "y"});
  auto L = log_derivations(P(R, "x*y"));
  ASSERT_EQ(L.log0.generators.size(), 1u);
  const auto& v = L.log0.generators[0];
  // proportional to (x, -y)
  EXPECT_EQ(v[0] * P(R, "y") + v[1] * P(R, "x"), Polynomial(R));
  EXPECT_EQ(v[0].total_degree(), 1);
  EXPECT_TRUE(module_contains({v}, {P(R, "x"), P(R, "-y")}));
}

TEST(LogDerivations, GenericArrangementHasFourGenerators) {
  auto R = ring({"x", "y", "z"});
  auto L = log_derivations(P(R, "x*y*z*(x+y+z)"));
  EXPECT_EQ(L.log.generators.size(), 4u);
}

TEST(LogDerivations, SmoothHyperplane) {
  auto R = ring({"x", "y", "z"});
  auto L = log_derivations(P(R, "x"));
  ASSERT_EQ(L.log0.generators.size(), 2u);
  Polynomial zero(R), one = Polynomial::constant(R, 1);
  EXPECT_TRUE(module_contains(L.log0.generators, {zero, one, zero}));
  EXPECT_TRUE(module_contains(L.log0.generators, {zero, zero, one}));
}

TEST(LogDerivations, RejectsNonReduced) {
  auto R = ring({"x", "y"});
  EXPECT_THROW(log_derivations(P(R, "x^2*y")), HypothesisFailure);
}

TEST(EulerField, HomogeneousIsStrongAtOrigin) {
  auto R = ring({"x", "y", "z"});
  auto f = P(R, "x*y*z*(x+y+z)");
  auto E = euler_field(f);
  ASSERT_TRUE(E);
  EXPECT_TRUE(E->strong);
  EXPECT_TRUE(E->polynomial());
  EXPECT_TRUE(verify_euler(f, *E));
  EulerCertificate expected;
  expected.numerators = {P(R, "1/4*x"), P(R, "1/4*y"), P(R, "1/4*z")};
  expected.denominator = Polynomial::constant(R, 1);
  EXPECT_TRUE(verify_euler(f, expected));
}

TEST(EulerField, UnitDenominatorIdentity) {
  auto R = ring({"x", "y"});
  auto h = P(R, "x^5+x^2*y^3+y^4");
  EulerCertificate E;
  E.numerators = {P(R, "18*x^2*y+9*y^2+80*x"), P(R, "18*x*y^2-15*x^2+100*y")};
  E.denominator = P(R, "90*x*y+400");
  EXPECT_TRUE(verify_euler(h, E));
  auto got = euler_field(h);
  ASSERT_TRUE(got);
  EXPECT_TRUE(got->strong);
  EXPECT_NE(got->denominator.constant_term(), 0);
  EXPECT_TRUE(verify_euler(h, *got));
}

TEST(EulerField, WeightedHomogeneous) {
  auto R = ring({"x", "y", "z"});
  auto f = P(R, "x^5+y^4*z");
  auto E = euler_field(f);
  ASSERT_TRUE(E);
  EXPECT_TRUE(E->strong);
  std::vector<Polynomial> expected = {P(R, "4/20*x"), P(R, "3/20*y"), P(R, "8/20*z")};
  EulerCertificate X;
  X.numerators = expected;
  X.denominator = Polynomial::constant(R, 1);
  EXPECT_TRUE(verify_euler(f, X));
  // Euler fields are unique modulo derivations killing f.
  auto a = E->coefficients();
  std::vector<Polynomial> diff;
  for (std::size_t i = 0; i < 3; ++i) diff.push_back(a[i] - expected[i]);
  EXPECT_TRUE(module_contains(log_derivations(f).log0.generators, diff));
}

TEST(EulerField, NotEulerAndTranslatedPoint) {
  auto R = ring({"x", "y"});
  // Not quasi-homogeneous: the Milnor and Tjurina numbers differ.
  EXPECT_FALSE(euler_field(P(R, "x^4+y^5+x^2*y^3")).has_value());
  auto g = P(R, "(x-1)*(y-2)");
  auto E = euler_field(g, {Rational(1), Rational(2)});
  ASSERT_TRUE(E);
  EXPECT_TRUE(E->strong);
  EXPECT_TRUE(verify_euler(g, *E));
  for (const auto& c : E->coefficients()) EXPECT_EQ(c.evaluate({Rational(1), Rational(2)}), 0);
}

TEST(Annihilator, SmoothHyperplaneAndShift) {
  auto R = ring({"x"});
  auto f = P(R, "x");
  auto A = annihilator_fs(f, AnnMethod::General);
  auto W = A.ideal.ring();
  EXPECT_TRUE(weyl_ideals_equal(A.ideal, WeylIdeal(W, {op(W, "x*dx - s")})));
  auto B = A.shifted(-1);
  EXPECT_EQ(B.shift, -1);
  EXPECT_TRUE(weyl_ideals_equal(B.ideal, WeylIdeal(W, {op(W, "x*dx - s + 1")})));
  EXPECT_TRUE(annihilates(op(W, "x*dx - s + 1"), f, -1));
  EXPECT_FALSE(annihilates(op(W, "x*dx - s"), f, -1));
}

TEST(Annihilator, NormalCrossingBothPaths) {
  auto R = ring({"x", "y"});
  auto f = P(R, "x*y");
  auto W = WeylRing::with_s(R);
  WeylIdeal expected(W, {op(W, "x*dx - s"), op(W, "y*dy - s")});
  auto L = annihilator_fs(f, AnnMethod::LogDerivation);
  auto G = annihilator_fs(f, AnnMethod::General);
  EXPECT_TRUE(weyl_ideals_equal(L.ideal, expected));
  EXPECT_TRUE(weyl_ideals_equal(G.ideal, expected));
}

TEST(Annihilator, LogPathRequiresLinearJacobianType) {
  auto R = ring({"x", "y", "z"});
  EXPECT_THROW(annihilator_fs(P(R, "x*y*(x+y)*(x+y*z)"), AnnMethod::LogDerivation), HypothesisFailure);
}

TEST(Annihilator, FourLinesNeedOrderTwo) {
  auto R = ring({"x", "y", "z"});
  auto f = P(R, "x*y*(x+y)*(x+y*z)");
  auto A = annihilator_fs(f, AnnMethod::General).shifted(-1);
  auto W = A.ideal.ring();
  WeylIdeal D0 = weyl_eliminate(A.ideal, {"s"});
  std::vector<WeylOperator> order1;
  for (const auto& v : log_derivations(f).log0.generators) {
    WeylOperator o(W);
    for (std::size_t i = 0; i < v.size(); ++i)
      o += WeylOperator::from_polynomial(W, v[i]) * WeylOperator::d(W, i);
    order1.push_back(o);
  }
  WeylIdeal ann1(W, order1);
  const auto& G1 = ann1.groebner(TermOrder::degrevlex());
  bool found = false;
  for (const auto& g : D0.generators()) {
    EXPECT_TRUE(annihilates(g, f, -1));
    if (ord_symbol(g).order == 2 && !weyl_contains(G1, g)) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(BernsteinSato, SmoothHyperplane) {
  auto R = ring({"x", "y"});
  auto B = bernstein_sato(annihilator_fs(P(R, "x"), AnnMethod::General));
  EXPECT_EQ(B.b, spoly("s+1"));
  EXPECT_TRUE(B.verified);
  EXPECT_EQ(B.provenance, Provenance::Computed);
}

TEST(BernsteinSato, QuadricConeMatchesLaplacianIdentity) {
  auto R = ring({"x", "y", "z"});
  auto f = P(R, "x^2+y^2+z^2");
  // Oracle: Δ f^(k+1) = 4(k+1)(k+3/2) f^k at integer exponents.
  for (int k = 0; k <= 4; ++k)
    EXPECT_EQ(laplacian(f.pow(k + 1)), f.pow(k) * Rational(2 * (k + 1) * (2 * k + 3))) << k;
  auto W = WeylRing::with_s(R);
  WeylOperator lap(W);
  for (std::size_t i = 0; i < 3; ++i) lap += WeylOperator::d(W, i).pow(2);
  auto fop = WeylOperator::from_polynomial(W, f);
  EXPECT_TRUE(annihilates(Rational(1, 4) * (lap * fop) - op(W, "(s+1)*(s+3/2)"), f));
  auto B = bernstein_sato(annihilator_fs(f, AnnMethod::General));
  EXPECT_EQ(B.b, spoly("(s+1)*(s+3/2)"));
}

TEST(BernsteinSato, FourLines) {
  auto R = ring({"x", "y", "z"});
  auto B = bernstein_sato(annihilator_fs(P(R, "x*y*(x+y)*(x+y*z)"), AnnMethod::General));
  EXPECT_EQ(B.b, spoly("(s+1)^3*(s+1/2)*(s+3/4)*(s+5/4)"));
  ASSERT_EQ(B.roots.size(), 4u);
  EXPECT_EQ(B.roots[0].root, Rational(-5, 4));
  EXPECT_EQ(B.roots[1].root, Rational(-1));
  EXPECT_EQ(B.roots[1].multiplicity, 3u);
  EXPECT_EQ(B.r_f, 2);
}

TEST(BernsteinSato, EliminationMethodAgrees) {
  auto R = ring({"x", "y"});
  for (const char* s : {"x*y", "x^2+y^3", "x*y*(x+y)"}) {
    auto A = annihilator_fs(P(R, s), AnnMethod::General);
    EXPECT_EQ(bernstein_sato(A, BMethod::Elimination).b, bernstein_sato(A).b) << s;
  }
}

TEST(BernsteinSato, InjectionIsVerified) {
  auto R = ring({"x", "y"});
  auto A = annihilator_fs(P(R, "x^2+y^3"), AnnMethod::General);
  auto B = inject_bfunction(A, spoly("(s+1)*(s+5/6)*(s+7/6)"));
  EXPECT_EQ(B.provenance, Provenance::Injected);
  EXPECT_TRUE(B.verified);
  EXPECT_THROW(inject_bfunction(A, spoly("(s+1)*(s+5/6)")), HypothesisFailure);
  // A multiple of b is a member as well.
  EXPECT_TRUE(bfunction_member(A, spoly("(s+1)^2*(s+5/6)*(s+7/6)")));
}

TEST(RationalRoots, MultiplicitiesAndIrrational) {
  auto roots = rational_roots(spoly("(s+1)^3*(s+1/2)*(s-7/3)"));
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0].root, Rational(-1));
  EXPECT_EQ(roots[0].multiplicity, 3u);
  EXPECT_EQ(roots[2].root, Rational(7, 3));
  EXPECT_EQ(from_roots(s_ring(), roots), spoly("(s+1)^3*(s+1/2)*(s-7/3)"));
  EXPECT_THROW(rational_roots(spoly("(s^2-2)*(s+1)")), IrrationalRoots);
}

TEST(BetaSplit, ProductAndCoprimality) {
  auto check = [](const char* b) {
    auto roots = rational_roots(spoly(b));
    auto sp = beta_split(s_ring(), roots);
    ASSERT_TRUE(sp);
    Polynomial s = Polynomial::variable(s_ring(), 0);
    Polynomial bm = spoly(b).substitute(s_ring(), {-s - Polynomial::constant(s_ring(), 1)});
    EXPECT_EQ(sp->first * sp->second, bm) << b;
    EXPECT_TRUE(buchberger(Ideal(s_ring(), {sp->first, sp->second})).is_unit()) << b;
    for (const auto& r : rational_roots(sp->first)) {
      EXPECT_GT(r.root, -1) << b;
      EXPECT_LT(r.root, 0) << b;
    }
  };
  check("(s+1)^2");
  check("(s+1)^3*(s+1/2)*(s+3/4)*(s+5/4)");
  check("(s+1)*(s+5/6)*(s+7/6)");
  EXPECT_FALSE(beta_split(s_ring(), rational_roots(spoly("(s+1)*(s+5/2)"))));
}

TEST(LinearJacobianType, Examples) {
  EXPECT_EQ(linear_jacobian_type(P(ring({"x", "y"}), "x*y")).verdict, LjtVerdict::True);
  EXPECT_EQ(linear_jacobian_type(P(ring({"x", "y", "z"}), "x*y*z*(x+y+z)")).verdict, LjtVerdict::True);
  auto r = linear_jacobian_type(P(ring({"w", "x", "y", "z"}), "w*x*(w+x)*(w+x*y*z)"));
  EXPECT_EQ(r.verdict, LjtVerdict::False);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(contains(buchberger(r.kernel), *r.witness));
  EXPECT_FALSE(contains(buchberger(r.linear), *r.witness));
}

TEST(LinearJacobianType, KernelOfNormalCrossing) {
  auto r = linear_jacobian_type(P(ring({"x", "y"}), "x*y"));
  const Ring& K = r.kernel.ring();
  EXPECT_TRUE(ideals_equal(r.kernel, Ideal(K, {parse_polynomial("x*xi1 - y*xi2", K)})));
}

TEST(LinearJacobianType, JacobianMethod) {
  EXPECT_EQ(linear_jacobian_type(P(ring({"x", "y"}), "x*y"), {}, LjtMethod::Jacobian).verdict,
            LjtVerdict::True);
}

TEST(ParametricallyPrime, RouteA) {
  auto r = parametrically_prime(P(ring({"x", "y", "z"}), "x^5+y^4*z"));
  EXPECT_EQ(r.verdict, PrimeVerdict::PrimeCertified);
  EXPECT_EQ(r.route.substr(0, 1), "A");
}

TEST(ParametricallyPrime, FourLinesIsNotRefuted) {
  auto r = parametrically_prime(P(ring({"x", "y", "z"}), "x*y*(x+y)*(x+y*z)"));
  EXPECT_NE(r.verdict, PrimeVerdict::NotPrime);
  EXPECT_EQ(r.route, "B");
  ASSERT_TRUE(r.symbol_ideal);
}

TEST(ParametricallyPrime, EmbeddedPrimeWitness) {
  auto R = ring({"x1", "x2", "x3"});
  auto f = P(R, "(x1*x3+x2)*(x1^4-x2^4)");
  auto A = annihilator_fs(f, AnnMethod::General);
  Ideal I = ord_symbol_ideal(A.shifted(-1));
  const Ring& S = I.ring();
  Ideal Pp(S, {parse_polynomial("x1", S), parse_polynomial("x2", S), parse_polynomial("xi_x3", S)});
  auto assoc = is_associated_prime(I, Pp);
  EXPECT_EQ(assoc.verdict, Association::Associated);
  PrimeOptions opt;
  opt.candidate_primes = {Pp};
  opt.ann = A;
  EXPECT_EQ(parametrically_prime(f, opt).verdict, PrimeVerdict::NotPrime);
}

TEST(ParametricallyPrime, RequiresEulerField) {
  EXPECT_THROW(parametrically_prime(P(ring({"x", "y"}), "x^4+y^5+x^2*y^3")), HypothesisFailure);
}

TEST(DmodProperties, AnnihilatorMembershipAndRoots) {
  for (const auto& fx : fixtures()) {
    auto R = fixture_ring(fx);
    auto f = P(R, fx.f);
    auto A = annihilator_fs(f, AnnMethod::General);
    for (const auto& g : A.ideal.generators()) EXPECT_TRUE(annihilates(g, f)) << fx.f << ": " << g.to_string();
    const auto A1 = A.shifted(-1);
    for (const auto& g : A1.ideal.generators()) EXPECT_TRUE(annihilates(g, f, -1)) << fx.f;
    auto B = bernstein_sato(A);
    EXPECT_TRUE(bfunction_member(A, B.b)) << fx.f;
    bool minus_one = false;
    for (const auto& r : B.roots) minus_one = minus_one || r.root == -1;
    EXPECT_TRUE(minus_one) << fx.f;
    ASSERT_TRUE(B.beta) << fx.f;
    Polynomial s = Polynomial::variable(s_ring(), 0);
    EXPECT_EQ(*B.beta * *B.beta_prime, B.b.substitute(s_ring(), {-s - Polynomial::constant(s_ring(), 1)}));
    EXPECT_TRUE(buchberger(Ideal(s_ring(), {*B.beta, *B.beta_prime})).is_unit()) << fx.f;
  }
}

TEST(DmodProperties, LjtPathAgreesAndLiouvilleEqualsSymbols) {
  int checked = 0;
  for (const auto& fx : fixtures()) {
    auto R = fixture_ring(fx);
    auto f = P(R, fx.f);
    if (linear_jacobian_type(f).verdict != LjtVerdict::True) continue;
    auto E = euler_field(f);
    if (!E || !E->polynomial()) continue;
    ++checked;
    auto L = annihilator_fs(f, AnnMethod::LogDerivation);
    auto G = annihilator_fs(f, AnnMethod::General);
    EXPECT_TRUE(weyl_ideals_equal(L.ideal, G.ideal)) << fx.f;
    Ring S = d_symbol_ring(R);
    std::vector<Polynomial> liouville;
    for (const auto& v : log_derivations(f).log0.generators) {
      Polynomial form(S);
      for (std::size_t i = 0; i < v.size(); ++i)
        form += v[i].embed(S) * Polynomial::variable(S, R->nvars() + i);
      liouville.push_back(form);
    }
    EXPECT_TRUE(ideals_equal(Ideal(S, liouville), ord_symbol_ideal(G))) << fx.f;
  }
  EXPECT_GE(checked, 3);
}
