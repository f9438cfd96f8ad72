#pragma once

#include <map>
#include <vector>

#include "oracles.hpp"
#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

namespace testing_support {

inline oracle::Finite finite_for(const zdg::Ring& R) {
  if (auto n = R.modulus()) return oracle::zn(*n, R);
  return oracle::fields({R.factors().begin(), R.factors().end()});
}

/// An oracle graph with the library vertex standing for each oracle vertex.
struct Paired {
  oracle::Graph O;
  std::vector<zdg::VertexRef> ref;
};

inline Paired pair_up(const zdg::Ring& R, const zdg::Graph& G, const oracle::Finite& F) {
  Paired p;
  if (G.kind() == zdg::GraphKind::Gamma) {
    p.O = oracle::gamma(F);
    std::map<std::vector<std::uint32_t>, zdg::VertexRef> by_element;
    for (std::uint32_t c = 0; c < G.class_count(); ++c)
      for (std::uint64_t i = 0; i < G.cls(c).weight; ++i)
        by_element[R.class_element(G.cls(c).support, i).coords] = {c, i};
    for (std::size_t idx : p.O.index) p.ref.push_back(by_element.at(F.element[idx].coords));
  } else {
    p.O = oracle::ag(F);
    for (const auto& I : p.O.ideal) {
      zdg::Support s;
      for (std::size_t a = 0; a < I.size(); ++a)
        if (I[a]) s = s | R.support(F.element[a]);
      p.ref.push_back(G.vertex(s));
    }
  }
  return p;
}

}  // namespace testing_support
