#include "zdg/export.hpp"

#include <sstream>

namespace zdg {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string graph_name(const Ring& R, GraphKind kind) {
  return (kind == GraphKind::Gamma ? "Gamma(" : "AG(") + R.describe() + ")";
}

std::string explicit_label(const Ring& R, const ExplicitGraph& E, std::uint32_t v) {
  const std::string s = "S=" + E.supports[v].to_string() + " ";
  if (E.kind == GraphKind::Gamma) return s + E.labels[v];
  return s + R.ideal_label(Ideal{E.supports[v]});
}

nlohmann::ordered_json support_json(Support s) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (int i : s.indices()) a.push_back(i + 1);
  return a;
}

}  // namespace

std::string export_dot(const Ring& R, const ExportOptions& opts) {
  std::ostringstream out;
  out << "graph " << quoted(graph_name(R, opts.kind)) << " {\n";
  if (opts.compressed) {
    const Graph G = build_graph(opts.kind, R);
    for (std::uint32_t c = 0; c < G.class_count(); ++c) {
      const VertexClass& vc = G.cls(c);
      out << "  c" << c << " [label=" << quoted("S=" + vc.support.to_string() + " x" + std::to_string(vc.weight))
          << ", weight=" << vc.weight << "];\n";
    }
    for (std::uint32_t c = 0; c < G.class_count(); ++c)
      G.for_each_neighbor_class(c, [&](std::uint32_t t) {
        if (c < t) out << "  c" << c << " -- c" << t << ";\n";
      });
  } else {
    const ExplicitGraph E = build_explicit(opts.kind, R, opts.vertex_cap);
    for (std::uint32_t v = 0; v < E.size(); ++v)
      out << "  v" << v << " [label=" << quoted(explicit_label(R, E, v)) << "];\n";
    for (std::uint32_t v = 0; v < E.size(); ++v)
      for (std::uint32_t t : E.adj[v])
        if (v < t) out << "  v" << v << " -- v" << t << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json export_json(const Ring& R, const ExportOptions& opts) {
  nlohmann::ordered_json doc;
  doc["ring"] = R.describe();
  doc["graph"] = to_string(opts.kind);
  if (opts.compressed) {
    const Graph G = build_graph(opts.kind, R);
    doc["form"] = "compressed";
    doc["adjacency_rule"] = "disjoint-support";
    doc["vertex_count"] = G.vertex_count();
    auto classes = nlohmann::ordered_json::array();
    auto edges = nlohmann::ordered_json::array();
    for (std::uint32_t c = 0; c < G.class_count(); ++c) {
      const VertexClass& vc = G.cls(c);
      classes.push_back({{"id", c},
                         {"support", support_json(vc.support)},
                         {"label", "S=" + vc.support.to_string()},
                         {"weight", vc.weight}});
      G.for_each_neighbor_class(c, [&](std::uint32_t t) {
        if (c < t) edges.push_back({c, t});
      });
    }
    doc["classes"] = std::move(classes);
    doc["class_edges"] = std::move(edges);
  } else {
    const ExplicitGraph E = build_explicit(opts.kind, R, opts.vertex_cap);
    doc["form"] = "explicit";
    auto vertices = nlohmann::ordered_json::array();
    auto edges = nlohmann::ordered_json::array();
    for (std::uint32_t v = 0; v < E.size(); ++v) {
      vertices.push_back({{"id", v},
                          {"support", support_json(E.supports[v])},
                          {"label", explicit_label(R, E, v)}});
      for (std::uint32_t t : E.adj[v])
        if (v < t) edges.push_back({v, t});
    }
    doc["vertices"] = std::move(vertices);
    doc["edges"] = std::move(edges);
  }
  return doc;
}

std::string export_graph(const Ring& R, const ExportOptions& opts) {
  if (opts.format == ExportFormat::Dot) return export_dot(R, opts);
  return export_json(R, opts).dump(2) + "\n";
}

}  // namespace zdg
