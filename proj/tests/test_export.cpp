#include <gtest/gtest.h>

#include <json.hpp>
#include <regex>

#include "zdg/error.hpp"
#include "zdg/export.hpp"

using namespace zdg;

namespace {

std::size_t count(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                                                std::sregex_iterator()));
}

}  // namespace

TEST(Export, DotOfAnnihilatingIdealGraphOfZ30) {
  ExportOptions o;
  o.kind = GraphKind::AnnihilatingIdeal;
  const std::string dot = export_graph(build_ring(SquarefreeModulus{30}), o);
  EXPECT_EQ(dot.rfind("graph \"AG(Z_30)\" {", 0), 0u);
  EXPECT_EQ(count(dot, std::regex(R"(v\d+ \[label=)")), 6u);
  EXPECT_EQ(count(dot, std::regex(R"(v\d+ -- v\d+;)")), 6u);
  EXPECT_EQ(dot.back(), '\n');
}

TEST(Export, CompressedJsonCarriesWeights) {
  ExportOptions o;
  o.format = ExportFormat::Json;
  o.compressed = true;
  const auto j = export_json(build_ring(PrimeFactors{{2, 3}}), o);
  EXPECT_EQ(j["form"], "compressed");
  EXPECT_EQ(j["vertex_count"], 3);
  std::vector<std::uint64_t> w;
  for (const auto& c : j["classes"]) w.push_back(c["weight"]);
  EXPECT_EQ(w, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(j["class_edges"].size(), 1u);
}

TEST(Export, ExplicitJsonMatchesGraph) {
  ExportOptions o;
  o.format = ExportFormat::Json;
  const auto j = nlohmann::json::parse(export_graph(build_ring(SquarefreeModulus{30}), o));
  EXPECT_EQ(j["vertices"].size(), 21u);
  for (const auto& e : j["edges"]) {
    const auto& a = j["vertices"][e[0].get<std::size_t>()]["support"];
    const auto& b = j["vertices"][e[1].get<std::size_t>()]["support"];
    for (const auto& x : a)
      for (const auto& y : b) EXPECT_NE(x, y);
  }
}

TEST(Export, RepeatedRunsAreIdentical) {
  ExportOptions o;
  const Ring R = build_ring(SquarefreeModulus{210});
  EXPECT_EQ(export_graph(R, o), export_graph(R, o));
}

TEST(Export, ExplicitExportRespectsCap) {
  ExportOptions o;
  o.vertex_cap = 100;
  EXPECT_THROW(export_graph(build_ring(SquarefreeModulus{2310}), o), Error);
  o.compressed = true;
  EXPECT_NO_THROW(export_graph(build_ring(SquarefreeModulus{2310}), o));
}
