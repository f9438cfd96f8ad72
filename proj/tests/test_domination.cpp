#include <gtest/gtest.h>

#include <cstdlib>

#include "common.hpp"
#include "zdg/domination.hpp"
#include "zdg/error.hpp"

using namespace zdg;

namespace {

void expect_matches_oracle(const Ring& R, GraphKind kind) {
  const Graph G = build_graph(kind, R);
  const auto P = testing_support::pair_up(R, G, testing_support::finite_for(R));
  ASSERT_LE(P.O.size(), 64);
  for (bool total : {false, true}) {
    bool isolated = false;
    for (const auto& a : P.O.adj) isolated = isolated || a.empty();
    if (total && isolated) continue;
    const DominationResult d = domination(G, total);
    ASSERT_TRUE(d.certified);
    EXPECT_TRUE(dominates(G, d.witness, total));
    EXPECT_EQ(expand_witness(d.witness).size(), d.size);
    EXPECT_EQ(static_cast<int>(d.size), oracle::domination(P.O, total, 10))
        << R.describe() << " " << to_string(kind) << " total=" << total;
  }
}

}  // namespace

TEST(Domination, Z30AnnihilatingIdealGraph) {
  const Ring R = build_ring(SquarefreeModulus{30});
  const Graph A = build_ag(R);
  const auto dt = domination_number(A);
  const auto dtt = total_domination_number(A);
  EXPECT_EQ(dt.size, 3u);
  EXPECT_EQ(dtt.size, 3u);
  std::vector<std::string> labels;
  for (const auto& v : expand_witness(dt.witness)) labels.push_back(vertex_label(A, R, v));
  EXPECT_EQ(labels, (std::vector<std::string>{"S={1} (15)", "S={2} (10)", "S={3} (6)"}));
  EXPECT_EQ(total_domination_number(build_gamma(R)).size, 3u);
}

TEST(Domination, TwoFactorRing) {
  const Ring R = build_ring(PrimeFactors{{2, 3}});
  const Graph A = build_ag(R);
  EXPECT_EQ(domination_number(A).size, 1u);
  EXPECT_EQ(total_domination_number(A).size, 2u);
}

TEST(Domination, EqualsFactorCountForThreeToEightFactors) {
  for (int k = 3; k <= 8; ++k) {
    const Ring R = build_ring(PrimeFactors{std::vector<std::uint32_t>(k, 3)});
    const Graph A = build_ag(R);
    const auto dt = domination_number(A);
    const auto dtt = total_domination_number(A);
    EXPECT_TRUE(dt.certified && dtt.certified);
    EXPECT_EQ(dt.size, static_cast<std::uint64_t>(k));
    EXPECT_EQ(dtt.size, static_cast<std::uint64_t>(k));
  }
}

TEST(Domination, MatchesExhaustiveSearch) {
  for (std::uint64_t n : {6u, 10u, 15u, 30u, 42u, 70u})
    expect_matches_oracle(build_ring(SquarefreeModulus{n}), GraphKind::Gamma);
  for (int k = 2; k <= 5; ++k)
    expect_matches_oracle(build_ring(PrimeFactors{std::vector<std::uint32_t>(k, 2)}),
                          GraphKind::AnnihilatingIdeal);
  expect_matches_oracle(build_ring(PrimeFactors{{2, 2, 2, 2}}), GraphKind::Gamma);
  expect_matches_oracle(build_ring(PrimeFactors{{2, 3, 3}}), GraphKind::Gamma);
}

TEST(Domination, TotalDominationNeedsNeighbours) {
  const Ring R = build_ring(PrimeFactors{{2, 2}});
  EXPECT_EQ(total_domination_number(build_gamma(R)).size, 2u);
  EXPECT_FALSE(dominates(build_gamma(R), {{0, 1}}, true));
}

TEST(Domination, KCapRaisesResourceError) {
  setenv("ZDG_DOMINATION_K_CAP", "4", 1);
  const Ring R = build_ring(PrimeFactors{{2, 2, 2, 2, 2}});
  try {
    domination_number(build_ag(R));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_TRUE(e.is_resource_limit());
  }
  unsetenv("ZDG_DOMINATION_K_CAP");
  EXPECT_EQ(default_domination_k_cap(), 16);
}

TEST(Domination, NodeLimitLeavesResultUncertified) {
  const Ring R = build_ring(PrimeFactors{{2, 3, 5, 7, 11, 13}});
  DominationOptions opts;
  opts.node_limit = 1;
  const auto d = total_domination_number(build_gamma(R), opts);
  EXPECT_LE(d.lower_bound, d.size);
  if (!d.certified) EXPECT_GE(d.nodes, 1u);
}
