#pragma once

// DOT and JSON renderings of Γ(R) and 𝔸𝔾(R). Output depends only on the
// ring and the options, so repeated runs are byte-identical.

#include <cstdint>
#include <json.hpp>
#include <string>

#include "zdg/explicit_graph.hpp"
#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

namespace zdg {

enum class ExportFormat { Dot, Json };

struct ExportOptions {
  GraphKind kind = GraphKind::Gamma;
  ExportFormat format = ExportFormat::Dot;
  /// One node per support class with its multiplicity instead of one node
  /// per vertex.
  bool compressed = false;
  std::uint64_t vertex_cap = default_explicit_vertex_cap();
};

/// Throws ResourceCap when an explicit export exceeds the vertex cap.
std::string export_dot(const Ring& R, const ExportOptions& opts);
nlohmann::ordered_json export_json(const Ring& R, const ExportOptions& opts);
/// Either of the above as text, newline-terminated.
std::string export_graph(const Ring& R, const ExportOptions& opts);

}  // namespace zdg
