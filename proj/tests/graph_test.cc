#include "pencilgraph/graph.h"

#include <map>
#include <random>

#include "gtest/gtest.h"
#include "pencilgraph/error.h"
#include "pencilgraph/golden.h"
#include "pencilgraph/parallel.h"

namespace pg {
namespace {

const PencilGraph& Component(int r, int sigma) {
  static auto* cache = new std::map<std::pair<int, int>, PencilGraph>();
  auto it = cache->find({r, sigma});
  if (it == cache->end()) {
    it = cache->emplace(std::pair{r, sigma}, BuildComponent(SpaceCtx(r, sigma))).first;
  }
  return it->second;
}

TEST(GraphTest, OrdersAndDegrees) {
  for (const auto& c : Golden()["cases"]) {
    const int r = c["r"], sigma = c["sigma"];
    const PencilGraph& g = Component(r, sigma);
    EXPECT_EQ(g.size(), c["vertices"].get<int>()) << r << "," << sigma;
    EXPECT_EQ(static_cast<uint64_t>(g.size()), PredictedComponentOrder(g.ctx));
    for (int v = 0; v < g.size(); ++v) {
      ASSERT_EQ(g.graph.degree(v), c["degree"].get<int>());
    }
    EXPECT_TRUE(g.graph.IsSymmetric());
    EXPECT_TRUE(g.graph.IsIrreflexive());
    EXPECT_EQ(g.vertices[0], BaseVertex(g.ctx));
  }
}

TEST(GraphTest, EdgeExamples) {
  for (const auto& c : Golden()["cases"]) {
    if (!c.contains("U")) continue;
    const SpaceCtx ctx(c["r"], c["sigma"]);
    const Pencil v = ParsePencil(c["v"]);
    const Pencil u = ParsePencil(c["u"]);
    const auto um = Adjacent(ctx, v, u);
    ASSERT_TRUE(um.has_value());
    EXPECT_EQ(RenderSet(*um), c["U"].get<std::string>());
    EXPECT_EQ(Neighbors(ctx, v).front(), u);
  }
}

TEST(GraphTest, AdjacencyIsSymmetric) {
  for (auto [r, sigma] : {std::pair{3, 1}, {4, 2}}) {
    const PencilGraph& g = Component(r, sigma);
    for (int a = 0; a < g.size(); ++a) {
      for (int b = 0; b < g.size(); ++b) {
        const auto ab = Adjacent(g.ctx, g.vertices[a], g.vertices[b]);
        ASSERT_EQ(ab, Adjacent(g.ctx, g.vertices[b], g.vertices[a]));
        ASSERT_EQ(ab.has_value(), g.graph.HasEdge(a, b));
      }
    }
  }
}

// Neighbor generation through clique copies against a pairwise scan.
void ExpectNeighborsMatchScan(const PencilGraph& full, const std::vector<int>& sources) {
  for (int v : sources) {
    std::vector<int> scan;
    for (int w = 0; w < full.size(); ++w) {
      if (Adjacent(full.ctx, full.vertices[v], full.vertices[w])) scan.push_back(w);
    }
    auto row = full.graph.neighbors(v);
    std::vector<int> generated(row.begin(), row.end());
    ASSERT_EQ(generated, scan) << RenderPencil(full.vertices[v]);
  }
}

TEST(GraphTest, NeighborsAgreeWithPairwiseScan) {
  for (auto [r, sigma] : {std::pair{3, 1}, {4, 2}}) {
    const PencilGraph full = BuildFull(SpaceCtx(r, sigma));
    std::vector<int> all(full.size());
    for (int i = 0; i < full.size(); ++i) all[i] = i;
    ExpectNeighborsMatchScan(full, all);
  }
}

TEST(GraphTest, FullGraphComponents) {
  const PencilGraph a = BuildFull(SpaceCtx(3, 1));
  EXPECT_EQ(a.size(), 42);
  EXPECT_EQ(a.num_components, 1);
  const PencilGraph b = BuildFull(SpaceCtx(4, 2));
  EXPECT_EQ(b.size(), 210);
  EXPECT_EQ(b.num_components, 1);

  const PencilGraph c = BuildFull(SpaceCtx(4, 1));
  EXPECT_EQ(c.size(), 75600);
  EXPECT_EQ(c.num_components, 30);
  for (int sz : c.component_sizes) EXPECT_EQ(sz, 2520);

  std::mt19937_64 rng(7);
  std::vector<int> sample;
  for (int k = 0; k < 20; ++k) sample.push_back(static_cast<int>(rng() % c.size()));
  ExpectNeighborsMatchScan(c, sample);
  EXPECT_THROW(Diameter(c, true), Error);
}

TEST(GraphTest, IndexingIndependentOfThreads) {
  SetNumThreads(1);
  const PencilGraph one = BuildComponent(SpaceCtx(4, 1));
  SetNumThreads(4);
  const PencilGraph four = BuildComponent(SpaceCtx(4, 1));
  SetNumThreads(0);
  EXPECT_EQ(one.keys, four.keys);
  EXPECT_EQ(one.graph.Edges(), four.graph.Edges());
}

TEST(GraphTest, CapIsEnforced) {
  EXPECT_THROW(BuildComponent(SpaceCtx(4, 1), 1000), Error);
  EXPECT_THROW(BuildFull(SpaceCtx(4, 1), 1000), Error);
  try {
    BuildComponent(SpaceCtx(4, 1), 1000);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), Error::Kind::kCapExceeded);
  }
}

TEST(GraphTest, Diameters) {
  for (auto [r, sigma] : {std::pair{3, 1}, {4, 2}, {4, 1}}) {
    const PencilGraph& g = Component(r, sigma);
    const BfsMetrics m = Bfs(g, 0);
    EXPECT_EQ(m.distances[0], 0);
    const int d = Diameter(g, false);
    EXPECT_LE(d, 2 * r - 2);
    // Every vertex has the same eccentricity.
    EXPECT_EQ(d, m.eccentricity);
  }
  EXPECT_LE(Diameter(Component(4, 2), false), 4);
}

}  // namespace
}  // namespace pg
