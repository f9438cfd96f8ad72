#pragma once

// Exact domination and total domination numbers of a compressed graph.
//
// A dominating set only matters up to how many copies it takes from each
// class: none, one, or (plain domination only) all of them. Branch and bound
// runs over those per-class choices.

#include <cstdint>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

struct DominationOptions {
  std::uint64_t node_limit = 20'000'000;
};

struct ClassChoice {
  std::uint32_t cls = 0;
  std::uint64_t copies = 0;  ///< 1 or the whole class
  bool operator==(const ClassChoice&) const = default;
};

struct DominationResult {
  std::uint64_t size = 0;
  std::vector<ClassChoice> witness;  ///< ascending class order
  bool certified = false;            ///< search finished: size is the minimum
  std::uint64_t nodes = 0;
  std::uint64_t lower_bound = 0;
};

/// Reads ZDG_DOMINATION_K_CAP, default 16.
int default_domination_k_cap();

/// dt(G). Throws ResourceCap when G.k() exceeds the k cap.
DominationResult domination_number(const Graph& G, DominationOptions opts = {});
/// dt_t(G). Also throws IsolatedVertex when some vertex has no neighbour.
DominationResult total_domination_number(const Graph& G, DominationOptions opts = {});
DominationResult domination(const Graph& G, bool total, DominationOptions opts = {});

/// Whether taking copies 0..n-1 of each chosen class (total-)dominates G.
bool dominates(const Graph& G, const std::vector<ClassChoice>& set, bool total);

/// Vertex references for a witness, copies 0..n-1 of each chosen class.
std::vector<VertexRef> expand_witness(const std::vector<ClassChoice>& set);

}  // namespace zdg
