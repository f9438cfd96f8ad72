#include <gtest/gtest.h>

#include "common.hpp"
#include "zdg/error.hpp"
#include "zdg/girth.hpp"

using namespace zdg;
using testing_support::pair_up;

namespace {

VertexRef elem(const Graph& G, const Ring& R, std::uint64_t a) {
  const Element e = R.from_integer(a);
  const Support s = R.support(e);
  const auto c = G.class_of(s);
  for (std::uint64_t i = 0; i < G.cls(*c).weight; ++i)
    if (R.class_element(s, i) == e) return {*c, i};
  throw std::logic_error("element not found");
}

Length gi(const Graph& G, VertexRef u, VertexRef v) {
  const GirthResult r = girth_through(G, u, v);
  EXPECT_TRUE(r.certified);
  if (r.length) {
    EXPECT_TRUE(is_cycle(G, r.cycle));
    EXPECT_EQ(r.cycle.size(), *r.length);
    EXPECT_EQ(r.cycle.front(), u);
    EXPECT_NE(std::find(r.cycle.begin(), r.cycle.end(), v), r.cycle.end());
  }
  return r.length;
}

void expect_matches_oracle(const Ring& R, GraphKind kind) {
  const Graph G = build_graph(kind, R);
  const auto P = pair_up(R, G, testing_support::finite_for(R));
  for (int a = 0; a < P.O.size(); ++a)
    for (int b = a + 1; b < P.O.size(); ++b) {
      const auto want = oracle::girth_through(P.O, a, b);
      const Length got = gi(G, P.ref[a], P.ref[b]);
      if (want) {
        ASSERT_EQ(got, Length(static_cast<std::uint32_t>(*want))) << R.describe() << " " << a << " " << b;
      } else {
        ASSERT_TRUE(!got || *got > 7) << R.describe();
      }
    }
}

}  // namespace

TEST(Girth, FrozenElementValues) {
  const Ring R105 = build_ring(SquarefreeModulus{105});
  const Graph G105 = build_gamma(R105);
  EXPECT_EQ(gi(G105, elem(G105, R105, 35), elem(G105, R105, 21)), 3u);
  EXPECT_EQ(gi(G105, elem(G105, R105, 7), elem(G105, R105, 3)), 6u);
  const Ring R15 = build_ring(SquarefreeModulus{15});
  const Graph G15 = build_gamma(R15);
  EXPECT_EQ(gi(G15, elem(G15, R15, 5), elem(G15, R15, 3)), 4u);
}

TEST(Girth, IdealPairOfTheFourFoldProductHasGirthFive) {
  const Ring R = build_ring(PrimeFactors{{2, 2, 2, 2}});
  const Graph A = build_ag(R);
  // I = 0 x F x F x 0, J = F x 0 x F x 0.
  EXPECT_EQ(gi(A, A.vertex(Support(0b0110)), A.vertex(Support(0b0101))), 5u);
}

TEST(Girth, FiveFoldClauseDPairHasGirthSix) {
  const Ring R = build_ring(PrimeFactors{{2, 2, 2, 2, 2}});
  const Graph A = build_ag(R);
  EXPECT_EQ(gi(A, A.vertex(Support(0b00111)), A.vertex(Support(0b11100))), 6u);
}

TEST(Girth, PendantPairsHaveNoCycle) {
  const Ring R = build_ring(SquarefreeModulus{6});
  const Graph G = build_gamma(R);
  EXPECT_EQ(gi(G, elem(G, R, 2), elem(G, R, 3)), std::nullopt);
  EXPECT_EQ(girth(G), std::nullopt);
}

TEST(Girth, SameVertexIsRejected) {
  const Ring R = build_ring(SquarefreeModulus{30});
  const Graph G = build_gamma(R);
  EXPECT_THROW(girth_through(G, {0, 0}, {0, 0}), Error);
}

TEST(Girth, WholeGraphGirth) {
  EXPECT_EQ(girth(build_gamma(build_ring(SquarefreeModulus{30}))), 3u);
  EXPECT_EQ(girth(build_gamma(build_ring(SquarefreeModulus{15}))), 4u);
  EXPECT_EQ(girth(build_ag(build_ring(PrimeFactors{{2, 2}}))), std::nullopt);
}

TEST(Girth, MatchesPathSearchOnSmallRings) {
  for (std::uint64_t n : {6u, 10u, 15u, 21u, 30u, 35u, 42u, 66u, 105u})
    expect_matches_oracle(build_ring(SquarefreeModulus{n}), GraphKind::Gamma);
  for (const auto& qs : std::vector<std::vector<std::uint32_t>>{{2, 2, 2}, {2, 2, 2, 2}, {3, 3, 2}})
    expect_matches_oracle(build_ring(PrimeFactors{qs}), GraphKind::Gamma);
  for (int k = 2; k <= 5; ++k)
    expect_matches_oracle(build_ring(PrimeFactors{std::vector<std::uint32_t>(k, 2)}),
                          GraphKind::AnnihilatingIdeal);
}

TEST(Girth, EscalatesWhenFewCopiesAreKept) {
  const Ring R = build_ring(PrimeFactors{{5, 7, 11}});
  const Graph G = build_gamma(R);
  GirthOptions tight;
  tight.initial_copies = 1;
  for (std::uint32_t a = 0; a < G.class_count(); ++a)
    for (std::uint32_t b = a + 1; b < G.class_count(); ++b) {
      const GirthResult loose = girth_through(G, {a, 0}, {b, 0});
      const GirthResult small = girth_through(G, {a, 0}, {b, 0}, tight);
      EXPECT_TRUE(small.certified);
      EXPECT_EQ(small.length, loose.length);
    }
}
