#include "pencilgraph/config.h"

#include <algorithm>
#include <map>

#include "gtest/gtest.h"
#include "pencilgraph/error.h"
#include "pencilgraph/export.h"
#include "pencilgraph/golden.h"

namespace pg {
namespace {

struct Built {
  explicit Built(int r, int sigma) : g(BuildComponent(SpaceCtx(r, sigma))) {
    d = EnumerateCopies(g);
    VerifyDecomposition(g, &d);
    cfg = BuildConfig(g, d);
  }
  PencilGraph g;
  Decomposition d;
  IncidenceStructure cfg;
};

const Built& Get(int r, int sigma) {
  static auto* cache = new std::map<std::pair<int, int>, Built*>();
  auto& slot = (*cache)[{r, sigma}];
  if (!slot) slot = new Built(r, sigma);
  return *slot;
}

IncidenceStructure Fano() {
  return FromLines(7, {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                       {4, 5, 0}, {5, 6, 1}, {6, 0, 2}});
}

TEST(ConfigTest, Parameters) {
  for (const auto& c : Golden()["cases"]) {
    if (!c.contains("config")) continue;
    const Built& b = Get(c["r"], c["sigma"]);
    EXPECT_EQ(b.cfg.Params(), c["config"].get<std::string>());
    EXPECT_EQ(b.cfg.c * b.cfg.m, b.cfg.d * b.cfg.n);
  }
}

TEST(ConfigTest, MengerGraphIsTheSourceGraph) {
  for (auto [r, sigma] : {std::pair{3, 1}, {4, 2}, {4, 1}}) {
    const Built& b = Get(r, sigma);
    EXPECT_TRUE(SameEdges(MengerGraph(b.cfg), b.g.graph)) << r << "," << sigma;
  }
}

TEST(ConfigTest, LeviGraph) {
  const int sizes[][3] = {{3, 1, 84}, {4, 2, 840}, {4, 1, 5040}};
  for (const auto& s : sizes) {
    const Built& b = Get(s[0], s[1]);
    const LeviGraph levi = BuildLevi(b.cfg);
    EXPECT_EQ(levi.graph.size(), s[2]);
    for (auto [x, y] : levi.graph.Edges()) ASSERT_NE(levi.color[x], levi.color[y]);
    EXPECT_EQ(levi.graph.num_edges(), static_cast<int64_t>(b.cfg.m) * b.cfg.c);
  }
}

TEST(ConfigTest, FromLinesValidates) {
  EXPECT_THROW(FromLines(3, {{0, 1}, {1}}), Error);
  EXPECT_THROW(FromLines(3, {{0, 0}}), Error);
  EXPECT_THROW(FromLines(3, {{0, 5}}), Error);
  EXPECT_THROW(FromLines(3, {{0, 1}, {1, 2}}), Error);
  EXPECT_THROW(FromLines(2, {{}}), Error);
  EXPECT_EQ(Fano().Params(), "(7_3, 7_3)");
}

TEST(DualityTest, FanoPlaneIsSelfDual) {
  const IncidenceStructure f = Fano();
  const DualityResult d = SelfDualityCheck(f);
  EXPECT_TRUE(d.applicable);
  ASSERT_TRUE(d.found);
  EXPECT_TRUE(d.verified);
  // Point p lies on line L exactly when the line d(p) contains the point d^-1(L).
  for (int p = 0; p < 7; ++p) {
    for (int l : f.point_lines[p]) {
      const auto& line = f.lines[d.point_to_line[p]];
      EXPECT_TRUE(std::binary_search(line.begin(), line.end(), d.line_to_point[l]));
    }
  }
}

TEST(DualityTest, PencilConfigurations) {
  const DualityResult a = SelfDualityCheck(Get(3, 1).cfg);
  EXPECT_TRUE(a.found);
  EXPECT_TRUE(a.verified);
  // Lines sharing a point, carried back through the duality, are the edges of G.
  const SimpleGraph dual = DualMengerGraph(Get(3, 1).cfg);
  std::vector<int> back(dual.size());
  for (int l = 0; l < dual.size(); ++l) back[l] = a.line_to_point[l];
  EXPECT_TRUE(IsIsomorphism(dual, Get(3, 1).g.graph, back));
  const DualityResult b = SelfDualityCheck(Get(4, 2).cfg);
  EXPECT_FALSE(b.applicable);
  EXPECT_FALSE(b.found);
  EXPECT_EQ(a.ToJson(true)["point_to_line"].size(), 42u);
}

TEST(ExportTest, GraphJsonSchema) {
  const Built& b = Get(3, 1);
  const nlohmann::json j = GraphToJson(b.g);
  EXPECT_EQ(j["r"], 3);
  EXPECT_EQ(j["sigma"], 1);
  ASSERT_EQ(j["vertices"].size(), 42u);
  EXPECT_EQ(j["vertices"][0]["A0"], nlohmann::json::array({1}));
  EXPECT_EQ(j["vertices"][0]["entries"][0], nlohmann::json::array({2, 3}));
  EXPECT_EQ(j["display"][0], "(1,23,45,67)");
  EXPECT_EQ(j["adjacency"][0].size(), 12u);
}

TEST(ExportTest, Dot) {
  const SimpleGraph tri = SimpleGraph::FromEdges(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(GraphToDot(tri),
            "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
  const LeviGraph levi = BuildLevi(Fano());
  const std::string dot = LeviToDot(levi);
  EXPECT_NE(dot.find("0 [color=black, kind=point];"), std::string::npos);
  EXPECT_NE(dot.find("7 [color=red, kind=line];"), std::string::npos);
  const nlohmann::json lj = LeviToJson(levi);
  EXPECT_EQ(lj["nodes"].size(), 14u);
  EXPECT_EQ(lj["nodes"][7]["color"], "line");
}

}  // namespace
}  // namespace pg
