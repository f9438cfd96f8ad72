#pragma once

// Materialized Γ(R) and 𝔸𝔾(R), built from ring arithmetic alone.
//
// Γ: every element is multiplied against every other; the vertices are the
// nonzero elements with a nonzero annihilator. 𝔸𝔾: the vertices are the
// distinct principal ideals Ra (every ideal of a finite reduced ring is
// principal), joined when the product of generators vanishes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

namespace zdg {

struct ExplicitGraph {
  GraphKind kind = GraphKind::Gamma;
  /// Γ: the element. 𝔸𝔾: the least generator in canonical order.
  std::vector<Element> elements;
  std::vector<Support> supports;
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> adj;  ///< sorted neighbour lists

  std::size_t size() const { return adj.size(); }
  std::size_t edge_count() const;
  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  /// Explicit vertex standing for the compressed vertex v.
  std::optional<std::uint32_t> index_of(const Graph& G, const Ring& R, VertexRef v) const;

  std::vector<std::uint64_t> index_by_element;  ///< canonical element index -> vertex, or ~0
};

/// Reads ZDG_EXPLICIT_VERTEX_CAP, default 100000.
std::uint64_t default_explicit_vertex_cap();

/// Throws ResourceCap when the vertex count of G exceeds the cap or the
/// ring is too large to enumerate, EmptyGraph when there are no vertices.
ExplicitGraph build_explicit(GraphKind kind, const Ring& R,
                             std::uint64_t vertex_cap = default_explicit_vertex_cap());

}  // namespace zdg
