#include <gtest/gtest.h>

#include <map>

#include "hodge/arrangement.hpp"
#include "hodge/hodge.hpp"
#include "test_util.hpp"

using namespace hodge;
using hodge::testing::P;
using hodge::testing::ring;

namespace {

Arrangement arr(const Ring& R, std::initializer_list<const char*> forms) {
  std::vector<Polynomial> v;
  for (const char* s : forms) v.push_back(P(R, s));
  return make_arrangement(v);
}

std::map<int, std::vector<std::size_t>> multiplicities_by_rank(const FlatLattice& L) {
  std::map<int, std::vector<std::size_t>> out;
  for (const auto& F : L.flats) out[F.rank].push_back(F.multiplicity());
  return out;
}

Ideal hodge_i0(const Polynomial& f) {
  auto A = annihilator_fs(f, AnnMethod::General);
  auto sp = split_beta(bernstein_sato(A));
  auto G = gamma_ideal(f, sp.beta, A.shifted(-1).ideal);
  Hypotheses h;
  h.euler = h.roots_in_interval = true;
  h.prime = PrimeVerdict::PrimeCertified;
  return hodge_ideal(G, 0, h).ideal;
}

}  // namespace

TEST(Flats, GenericFourPlanes) {
  auto R = ring({"x", "y", "z"});
  auto L = flats(arr(R, {"x", "y", "z", "x+y+z"}));
  auto m = multiplicities_by_rank(L);
  EXPECT_EQ(m[1], (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(m[2], (std::vector<std::size_t>(6, 2)));
  EXPECT_EQ(m[3], (std::vector<std::size_t>{4}));
  EXPECT_EQ(L.flats.size(), 11u);
}

TEST(Flats, CoordinatePlanes) {
  auto R = ring({"x", "y", "z"});
  auto m = multiplicities_by_rank(flats(arr(R, {"x", "y", "z"})));
  EXPECT_EQ(m[1].size(), 3u);
  EXPECT_EQ(m[2], (std::vector<std::size_t>(3, 2)));
  EXPECT_EQ(m[3], (std::vector<std::size_t>{3}));
}

TEST(Flats, TwoLines) {
  auto R = ring({"x", "y"});
  auto L = flats(arr(R, {"x", "y"}));
  ASSERT_EQ(L.flats.size(), 3u);
  EXPECT_EQ(L.flats.back().rank, 2);
  EXPECT_EQ(L.flats.back().multiplicity(), 2u);
}

TEST(Flats, NonGenericLineOfThreePlanes) {
  auto R = ring({"x", "y", "z"});
  // x, y, x+y share the z-axis.
  auto m = multiplicities_by_rank(flats(arr(R, {"x", "y", "x+y", "z"})));
  std::sort(m[2].begin(), m[2].end());
  EXPECT_EQ(m[2], (std::vector<std::size_t>{2, 2, 2, 3}));
  EXPECT_EQ(m[3], (std::vector<std::size_t>{4}));
}

TEST(Flats, InvariantsOnRandomishArrangements) {
  auto R = ring({"x", "y", "z"});
  auto A = arr(R, {"x", "y", "z", "x+y+z", "x+y+2*z", "x-y", "2*x+3*y-z"});
  auto L = flats(A);
  for (const auto& F : L.flats) {
    EXPECT_EQ(static_cast<int>(F.span.size()), F.rank);
    if (F.rank == 1) EXPECT_EQ(F.multiplicity(), 1u);
    EXPECT_GE(F.multiplicity(), static_cast<std::size_t>(F.rank));
    // The span ideal vanishes on exactly the recorded hyperplanes.
    auto GB = buchberger(F.ideal(R));
    for (std::size_t i = 0; i < A.forms.size(); ++i) {
      bool in = std::find(F.hyperplanes.begin(), F.hyperplanes.end(), i) != F.hyperplanes.end();
      EXPECT_EQ(contains(GB, A.forms[i]), in);
    }
  }
  // Closed under intersection: the sum of two flat ideals is again a flat ideal.
  for (const auto& F : L.flats)
    for (const auto& G : L.flats) {
      Ideal S = ideal_sum(F.ideal(R), G.ideal(R));
      bool found = false;
      for (const auto& H : L.flats) found = found || ideals_equal(S, H.ideal(R));
      EXPECT_TRUE(found);
    }
}

TEST(MustataOracle, Examples) {
  auto R = ring({"x", "y", "z"});
  EXPECT_TRUE(ideals_equal(mustata_multiplier_ideal(arr(R, {"x", "y", "z", "x+y+z"})),
                           Ideal(R, {P(R, "x"), P(R, "y"), P(R, "z")})));
  EXPECT_TRUE(ideals_equal(mustata_multiplier_ideal(arr(R, {"x", "y", "z"})),
                           Ideal(R, {Polynomial::constant(R, 1)})));
  EXPECT_TRUE(ideals_equal(mustata_multiplier_ideal(arr(R, {"x", "y", "z", "x+y+z", "x+y+2*z"})),
                           Ideal(R, {P(R, "z^2"), P(R, "y*z"), P(R, "x*z"), P(R, "x*y+y^2"), P(R, "x^2-y^2")})));
}

TEST(MustataOracle, RejectsBadInput) {
  auto R = ring({"x", "y"});
  EXPECT_THROW(arr(R, {"x", "2*x"}), InputError);
  EXPECT_THROW(arr(R, {"x", "x*y"}), InputError);
  EXPECT_THROW(arr(R, {"x", "x+1"}), InputError);
  EXPECT_THROW(arr(R, {"0"}), InputError);
  std::vector<Polynomial> many;
  for (int i = 0; i < 13; ++i) many.push_back(P(R, "x+" + std::to_string(i) + "*y"));
  EXPECT_THROW(make_arrangement(many), InputError);
}

TEST(MustataOracle, AgreesWithHodgePipeline) {
  auto R2 = ring({"x", "y"});
  auto R3 = ring({"x", "y", "z"});
  for (auto A : {arr(R3, {"x", "y", "z"}), arr(R3, {"x", "y", "z", "x+y+z"}), arr(R2, {"x", "y", "x+y"}),
                 arr(R2, {"x", "y", "x+y", "x-y"}), arr(R3, {"x", "y", "x+y", "z"})}) {
    EXPECT_TRUE(ideals_equal(mustata_multiplier_ideal(A), hodge_i0(A.product()))) << A.product().to_string();
  }
}
