#pragma once

// gi(u, v): length of the shortest simple cycle through both u and v.
//
// Computed as the cheapest pair of internally vertex-disjoint u-v paths, a
// two-unit min-cost flow on a vertex-split copy of the graph in which each
// class keeps only a few of its copies. Copies of a class are twins, so a
// cycle that uses at most c copies of every class can be relabelled into any
// expansion holding c copies; the expansion grows until the answer is
// certified that way.

#include <cstdint>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

struct GirthOptions {
  std::uint64_t initial_copies = 3;
  std::uint64_t max_expanded_vertices = 200000;
};

struct GirthResult {
  Length length;                 ///< nullopt: no cycle through both
  std::vector<VertexRef> cycle;  ///< starts at u, closes back to u
  bool certified = true;
  std::uint64_t copies_used = 0;  ///< final per-class expansion bound
};

/// Requires u != v.
GirthResult girth_through(const Graph& G, VertexRef u, VertexRef v, GirthOptions opts = {});

/// Shortest cycle anywhere in G.
Length girth(const Graph& G, GirthOptions opts = {});

/// True when consecutive entries (cyclically) are adjacent, all entries are
/// distinct and there are at least 3 of them.
bool is_cycle(const Graph& G, const std::vector<VertexRef>& cycle);

}  // namespace zdg
