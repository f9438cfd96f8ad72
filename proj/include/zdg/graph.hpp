#pragma once

// Γ(R) and 𝔸𝔾(R) in compressed form.
//
// Vertices of both graphs fall into classes keyed by support S (nonempty,
// proper). Class S holds w_S interchangeable vertices: prod_{i in S}(q_i - 1)
// elements in Γ, a single ideal in 𝔸𝔾. Two vertices are adjacent iff their
// supports are disjoint, so copies inside one class are never adjacent.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdg/ring.hpp"
#include "zdg/support.hpp"

namespace zdg {

enum class GraphKind { Gamma, AnnihilatingIdeal };

std::string to_string(GraphKind kind);

struct VertexClass {
  Support support;
  std::uint64_t weight = 1;
};

struct VertexRef {
  std::uint32_t cls = 0;
  std::uint64_t copy = 0;
  bool operator==(const VertexRef&) const = default;
  auto operator<=>(const VertexRef&) const = default;
};

/// Path/cycle length; nullopt means infinite.
using Length = std::optional<std::uint32_t>;

class Graph {
 public:
  Graph(GraphKind kind, const Ring& R);

  GraphKind kind() const { return kind_; }
  int k() const { return k_; }
  const std::vector<std::uint32_t>& factors() const { return qs_; }
  const std::vector<VertexClass>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  const VertexClass& cls(std::uint32_t c) const { return classes_[c]; }
  std::optional<std::uint32_t> class_of(Support s) const;
  VertexRef vertex(Support s, std::uint64_t copy = 0) const;

  /// Total vertex count, saturating.
  std::uint64_t vertex_count() const;
  bool contains(VertexRef v) const {
    return v.cls < classes_.size() && v.copy < classes_[v.cls].weight;
  }

  bool adjacent(VertexRef u, VertexRef v) const;
  bool classes_adjacent(std::uint32_t a, std::uint32_t b) const {
    return !classes_[a].support.intersects(classes_[b].support);
  }

  /// Calls f(class index) for every class adjacent to class c.
  template <class F>
  void for_each_neighbor_class(std::uint32_t c, F&& f) const {
    for_each_nonempty_subset(classes_[c].support.complement(k_), [&](Support t) {
      const std::int32_t idx = index_[t.bits()];
      if (idx >= 0) f(static_cast<std::uint32_t>(idx));
    });
  }

  /// Degree counting multiplicities, saturating.
  std::uint64_t degree(VertexRef v) const;
  std::uint64_t class_degree(std::uint32_t c) const;

  /// Breadth-first distances between classes (-1 = unreachable). The
  /// distance from a class to itself is 0.
  std::vector<std::int32_t> class_distances(std::uint32_t from) const;

 private:
  GraphKind kind_;
  int k_;
  std::vector<std::uint32_t> qs_;
  std::vector<VertexClass> classes_;
  std::vector<std::int32_t> index_;  // support mask -> class index
};

/// Compressed Γ(R). Throws EmptyGraph when R has no nonzero zero-divisors.
Graph build_gamma(const Ring& R);
/// Compressed 𝔸𝔾(R). Throws EmptyGraph when R has no annihilating ideals.
Graph build_ag(const Ring& R);
Graph build_graph(GraphKind kind, const Ring& R);

Length distance(const Graph& G, VertexRef u, VertexRef v);

/// Throws Disconnected with a witness pair.
std::uint32_t eccentricity(const Graph& G, VertexRef u);

struct RadiusResult {
  std::uint32_t radius = 0;
  VertexRef center;
};

RadiusResult radius(const Graph& G);
/// Largest eccentricity.
std::uint32_t diameter(const Graph& G);

/// Eccentricity of every class (copy 0), indexed by class.
std::vector<std::uint32_t> class_eccentricities(const Graph& G);

std::optional<std::array<VertexRef, 3>> triangle_through(const Graph& G, VertexRef u);
bool is_triangle_vertex(const Graph& G, VertexRef u);

struct TriangulationResult {
  bool triangulated = false;
  std::optional<VertexRef> non_triangle_vertex;  ///< witness when false
};

TriangulationResult is_triangulated(const Graph& G);

std::optional<VertexRef> common_neighbor(const Graph& G, VertexRef u, VertexRef v);
bool orthogonal(const Graph& G, VertexRef u, VertexRef v);
bool pendant(const Graph& G, VertexRef u);

/// Vertex label: support plus the element or ideal it stands for.
std::string vertex_label(const Graph& G, const Ring& R, VertexRef v);
/// Element represented by v in Γ, or the generator idempotent in 𝔸𝔾.
Element vertex_element(const Graph& G, const Ring& R, VertexRef v);

}  // namespace zdg
