#include "zdg/graph.hpp"

#include <algorithm>
#include <deque>

#include "zdg/error.hpp"

namespace zdg {

namespace {

constexpr int kMaxGraphFactors = 22;

}  // namespace

std::string to_string(GraphKind kind) {
  return kind == GraphKind::Gamma ? "gamma" : "ag";
}

Graph::Graph(GraphKind kind, const Ring& R)
    : kind_(kind), k_(R.k()), qs_(R.factors().begin(), R.factors().end()) {
  if (k_ < 2)
    throw Error(ErrorKind::EmptyGraph,
                R.describe() + (k_ == 0 ? " is the zero ring" : " is a field") + "; " +
                    (kind == GraphKind::Gamma ? "Γ(R)" : "𝔸𝔾(R)") + " has no vertices");
  if (k_ > kMaxGraphFactors)
    throw Error(ErrorKind::TooManyFactors, std::to_string(k_) + " factors; graphs support at most " +
                                               std::to_string(kMaxGraphFactors));
  const std::uint32_t count = 1u << k_;
  index_.assign(count, -1);
  const Support full = Support::full(k_);
  for (std::uint32_t m = 1; m + 1 < count; ++m) {
    const Support s(m);
    const std::uint64_t w = kind == GraphKind::Gamma ? R.class_weight(s) : 1;
    if (w == 0 || s == full) continue;
    index_[m] = static_cast<std::int32_t>(classes_.size());
    classes_.push_back({s, w});
  }
}

std::optional<std::uint32_t> Graph::class_of(Support s) const {
  if (s.bits() >= index_.size() || index_[s.bits()] < 0) return std::nullopt;
  return static_cast<std::uint32_t>(index_[s.bits()]);
}

VertexRef Graph::vertex(Support s, std::uint64_t copy) const {
  auto c = class_of(s);
  if (!c || copy >= classes_[*c].weight)
    throw Error(ErrorKind::InvalidArgument, "no vertex " + s.to_string() + "#" + std::to_string(copy));
  return {*c, copy};
}

std::uint64_t Graph::vertex_count() const {
  std::uint64_t n = 0;
  for (const auto& c : classes_) n = saturating_add(n, c.weight);
  return n;
}

bool Graph::adjacent(VertexRef u, VertexRef v) const {
  return !(u == v) && classes_adjacent(u.cls, v.cls);
}

std::uint64_t Graph::class_degree(std::uint32_t c) const {
  std::uint64_t d = 0;
  for_each_neighbor_class(c, [&](std::uint32_t t) { d = saturating_add(d, classes_[t].weight); });
  return d;
}

std::uint64_t Graph::degree(VertexRef v) const { return class_degree(v.cls); }

std::vector<std::int32_t> Graph::class_distances(std::uint32_t from) const {
  std::vector<std::int32_t> dist(classes_.size(), -1);
  std::deque<std::uint32_t> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const std::uint32_t c = queue.front();
    queue.pop_front();
    for_each_neighbor_class(c, [&](std::uint32_t t) {
      if (dist[t] < 0) {
        dist[t] = dist[c] + 1;
        queue.push_back(t);
      }
    });
  }
  return dist;
}

Graph build_gamma(const Ring& R) { return Graph(GraphKind::Gamma, R); }
Graph build_ag(const Ring& R) { return Graph(GraphKind::AnnihilatingIdeal, R); }
Graph build_graph(GraphKind kind, const Ring& R) { return Graph(kind, R); }

Length distance(const Graph& G, VertexRef u, VertexRef v) {
  if (u == v) return 0u;
  if (u.cls == v.cls) {
    // Distinct copies share every neighbour.
    if (G.class_degree(u.cls) > 0) return 2u;
    return std::nullopt;
  }
  const auto d = G.class_distances(u.cls)[v.cls];
  if (d < 0) return std::nullopt;
  return static_cast<std::uint32_t>(d);
}

namespace {

std::uint32_t class_eccentricity(const Graph& G, std::uint32_t c) {
  const auto dist = G.class_distances(c);
  std::uint32_t ecc = 0;
  for (std::uint32_t t = 0; t < dist.size(); ++t) {
    if (dist[t] < 0)
      throw Error(ErrorKind::Disconnected, "no path between classes " +
                                               G.cls(c).support.to_string() + " and " +
                                               G.cls(t).support.to_string());
    ecc = std::max(ecc, static_cast<std::uint32_t>(dist[t]));
  }
  if (G.cls(c).weight >= 2) {
    if (G.class_degree(c) == 0)
      throw Error(ErrorKind::Disconnected,
                  "isolated copies in class " + G.cls(c).support.to_string());
    ecc = std::max(ecc, 2u);
  }
  return ecc;
}

}  // namespace

std::uint32_t eccentricity(const Graph& G, VertexRef u) { return class_eccentricity(G, u.cls); }

std::vector<std::uint32_t> class_eccentricities(const Graph& G) {
  std::vector<std::uint32_t> out(G.class_count());
  for (std::uint32_t c = 0; c < G.class_count(); ++c) out[c] = class_eccentricity(G, c);
  return out;
}

RadiusResult radius(const Graph& G) {
  const auto ecc = class_eccentricities(G);
  const auto it = std::min_element(ecc.begin(), ecc.end());
  return {*it, VertexRef{static_cast<std::uint32_t>(it - ecc.begin()), 0}};
}

std::uint32_t diameter(const Graph& G) {
  const auto ecc = class_eccentricities(G);
  return *std::max_element(ecc.begin(), ecc.end());
}

std::optional<std::array<VertexRef, 3>> triangle_through(const Graph& G, VertexRef u) {
  std::optional<std::array<VertexRef, 3>> found;
  G.for_each_neighbor_class(u.cls, [&](std::uint32_t t) {
    if (found) return;
    G.for_each_neighbor_class(t, [&](std::uint32_t w) {
      if (!found && G.classes_adjacent(w, u.cls)) found = {{u, {t, 0}, {w, 0}}};
    });
  });
  return found;
}

bool is_triangle_vertex(const Graph& G, VertexRef u) { return triangle_through(G, u).has_value(); }

TriangulationResult is_triangulated(const Graph& G) {
  for (std::uint32_t c = 0; c < G.class_count(); ++c)
    if (!is_triangle_vertex(G, {c, 0})) return {false, VertexRef{c, 0}};
  return {true, std::nullopt};
}

std::optional<VertexRef> common_neighbor(const Graph& G, VertexRef u, VertexRef v) {
  std::optional<VertexRef> found;
  G.for_each_neighbor_class(u.cls, [&](std::uint32_t w) {
    if (!found && G.classes_adjacent(w, v.cls)) found = VertexRef{w, 0};
  });
  return found;
}

bool orthogonal(const Graph& G, VertexRef u, VertexRef v) {
  return G.adjacent(u, v) && !common_neighbor(G, u, v);
}

bool pendant(const Graph& G, VertexRef u) { return G.degree(u) == 1; }

Element vertex_element(const Graph& G, const Ring& R, VertexRef v) {
  const Support s = G.cls(v.cls).support;
  return G.kind() == GraphKind::Gamma ? R.class_element(s, v.copy) : R.idempotent(s);
}

std::string vertex_label(const Graph& G, const Ring& R, VertexRef v) {
  const Support s = G.cls(v.cls).support;
  std::string out = "S=" + s.to_string() + " ";
  if (G.kind() == GraphKind::Gamma) return out + R.label(R.class_element(s, v.copy));
  return out + R.ideal_label(Ideal{s});
}

}  // namespace zdg
