#include <gtest/gtest.h>

#include "common.hpp"
#include "zdg/domination.hpp"
#include "zdg/girth.hpp"
#include "zdg/theorems.hpp"

using namespace zdg;

namespace {

Ring random_ring(oracle::Gen& gen, int max_k, std::uint32_t max_q) {
  const int k = 2 + static_cast<int>(gen.below(max_k - 1));
  return build_ring(PrimeFactors{gen.primes(k, max_q)});
}

VertexRef random_vertex(oracle::Gen& gen, const Graph& G) {
  const auto c = static_cast<std::uint32_t>(gen.below(G.class_count()));
  return {c, gen.below(std::min<std::uint64_t>(G.cls(c).weight, 1000))};
}

}  // namespace

TEST(Properties, RingAxioms) {
  oracle::Gen gen(1);
  for (int trial = 0; trial < 300; ++trial) {
    const Ring R = random_ring(gen, 6, 31);
    const Element a = gen.element(R), b = gen.element(R), c = gen.element(R);
    ASSERT_EQ(R.mul(a, b), R.mul(b, a));
    ASSERT_EQ(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c)));
    ASSERT_EQ(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c)));
    ASSERT_EQ(R.support(R.mul(a, b)), R.support(a) & R.support(b));
    ASSERT_EQ(R.mul(a, R.one()), a);
    ASSERT_EQ(R.index_of(R.element_at(R.index_of(a))), R.index_of(a));
  }
}

TEST(Properties, ClassWeightsCountTheZeroDivisors) {
  oracle::Gen gen(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Ring R = random_ring(gen, 7, 13);
    const Graph G = build_gamma(R);
    std::uint64_t units = 1;
    for (auto q : R.factors()) units *= q - 1;
    ASSERT_EQ(G.vertex_count(), *R.order() - 1 - units);
    ASSERT_EQ(build_ag(R).vertex_count(), (1u << R.k()) - 2);
  }
}

TEST(Properties, DistancesAreAMetricBoundedByThree) {
  oracle::Gen gen(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Ring R = random_ring(gen, 8, 7);
    for (GraphKind kind : {GraphKind::Gamma, GraphKind::AnnihilatingIdeal}) {
      const Graph G = build_graph(kind, R);
      for (int s = 0; s < 40; ++s) {
        const VertexRef u = random_vertex(gen, G), v = random_vertex(gen, G), w = random_vertex(gen, G);
        const std::uint32_t duv = *distance(G, u, v);
        ASSERT_EQ(duv, *distance(G, v, u));
        ASSERT_LE(duv, 3u);
        ASSERT_LE(duv, *distance(G, u, w) + *distance(G, w, v));
        ASSERT_EQ(duv == 1, G.adjacent(u, v));
        ASSERT_EQ(G.adjacent(u, v), u != v && (G.cls(u.cls).support & G.cls(v.cls).support).empty());
        ASSERT_LE(duv, eccentricity(G, u));
      }
    }
  }
}

TEST(Properties, TopologicalDistanceAgreesWithSearch) {
  oracle::Gen gen(4);
  for (int trial = 0; trial < 60; ++trial) {
    const Ring R = random_ring(gen, 9, 11);
    const MinSpectrum Y(R);
    for (GraphKind kind : {GraphKind::Gamma, GraphKind::AnnihilatingIdeal}) {
      const Graph G = build_graph(kind, R);
      for (int s = 0; s < 40; ++s) {
        const VertexRef u = random_vertex(gen, G), v = random_vertex(gen, G);
        if (u == v) continue;
        const PairShape sh = pair_shape(Y, {G.cls(u.cls).support}, {G.cls(v.cls).support});
        ASSERT_TRUE(predict_distance(sh).admits(distance(G, u, v))) << R.describe();
        ASSERT_TRUE(predict_adjacent(sh).admits(G.adjacent(u, v)));
        ASSERT_TRUE(predict_orthogonal(Y, sh).admits(orthogonal(G, u, v)));
      }
    }
  }
}

TEST(Properties, EccentricityFollowsTheComplementOfTheHull) {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Ring R = random_ring(gen, 9, 11);
    if (R.k() < 3) continue;
    const Graph G = build_graph(gen.below(2) ? GraphKind::Gamma : GraphKind::AnnihilatingIdeal, R);
    for (int s = 0; s < 20; ++s) {
      const VertexRef u = random_vertex(gen, G);
      ASSERT_TRUE(predict_ecc({G.cls(u.cls).support}).admits(Length(eccentricity(G, u))));
    }
    ASSERT_EQ(radius(G).radius, 2u);
    ASSERT_FALSE(is_triangulated(G).triangulated);
  }
}

TEST(Properties, IdealGirthFollowsTheProofReading) {
  oracle::Gen gen(6);
  for (int k = 3; k <= 6; ++k) {
    const Ring R = build_ring(PrimeFactors{gen.primes(k, 7)});
    const MinSpectrum Y(R);
    const Graph A = build_ag(R);
    for (int s = 0; s < 30; ++s) {
      const VertexRef u = random_vertex(gen, A), v = random_vertex(gen, A);
      if (u == v) continue;
      const PairShape sh = pair_shape(Y, {A.cls(u.cls).support}, {A.cls(v.cls).support});
      const Prediction p = predict_gi_ideals(sh, pendant(A, u), pendant(A, v));
      if (!p.applicable) continue;
      ASSERT_TRUE(p.admits(girth_through(A, u, v).length)) << R.describe() << " " << p.to_string();
    }
  }
}

TEST(Properties, GirthCyclesAreValidAndSymmetric) {
  oracle::Gen gen(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Ring R = random_ring(gen, 5, 7);
    const Graph G = build_gamma(R);
    const VertexRef u = random_vertex(gen, G), v = random_vertex(gen, G);
    if (u == v) continue;
    const GirthResult a = girth_through(G, u, v), b = girth_through(G, v, u);
    ASSERT_EQ(a.length, b.length);
    if (a.length) {
      ASSERT_TRUE(is_cycle(G, a.cycle));
      ASSERT_GE(*a.length, 3u);
    }
  }
}

TEST(Properties, TotalDominationOfGammaIsBoundedByTheIdealGraph) {
  oracle::Gen gen(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Ring R = random_ring(gen, 6, 13);
    const auto g = total_domination_number(build_gamma(R));
    const auto a = total_domination_number(build_ag(R));
    ASSERT_TRUE(g.certified && a.certified);
    ASSERT_LE(g.size, a.size);
    ASSERT_EQ(a.size, static_cast<std::uint64_t>(R.k()));
  }
}
