#ifndef PENCILGRAPH_GRAPH_H_
#define PENCILGRAPH_GRAPH_H_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pencilgraph/gf2.h"
#include "pencilgraph/pencil.h"
#include "pencilgraph/simple_graph.h"

namespace pg {

constexpr uint64_t kDefaultVertexCap = uint64_t{1} << 20;

// U(v, w) when v and w are adjacent, otherwise nullopt.
std::optional<Mask> Adjacent(const SpaceCtx& ctx, const Pencil& v,
                             const Pencil& w);

// All neighbors of v, sorted by key. Generated through the m0 clique copies
// at v, one per hyperplane not containing A0.
std::vector<Pencil> Neighbors(const SpaceCtx& ctx, const Pencil& v);

// Order of the component of the base vertex, and of the whole graph.
uint64_t PredictedComponentOrder(const SpaceCtx& ctx);
uint64_t PredictedFullOrder(const SpaceCtx& ctx);

struct PencilGraph {
  explicit PencilGraph(const SpaceCtx& c) : ctx(c) {}

  SpaceCtx ctx;
  std::vector<Pencil> vertices;
  std::vector<Key> keys;
  std::unordered_map<Key, int> index;
  SimpleGraph graph;
  bool is_component = false;
  int num_components = 1;
  std::vector<int> component_sizes;

  int size() const { return static_cast<int>(vertices.size()); }
  // Index of a pencil, or -1 when it is not a vertex.
  int Find(const Key& key) const;
  int Find(const Pencil& v) const { return Find(Encode(v)); }
};

// Breadth-first closure of the base vertex. Vertex 0 is the base vertex and
// the indexing is the discovery order with neighbors taken in key order.
PencilGraph BuildComponent(const SpaceCtx& ctx,
                           uint64_t cap = kDefaultVertexCap);

// Every pencil, indexed in key order.
PencilGraph BuildFull(const SpaceCtx& ctx, uint64_t cap = kDefaultVertexCap);

struct BfsMetrics {
  std::vector<int> distances;
  int eccentricity = 0;
};

BfsMetrics Bfs(const PencilGraph& g, int source);

// With vertex_transitive set, a single eccentricity is taken.
int Diameter(const PencilGraph& g, bool vertex_transitive);

}  // namespace pg

#endif  // PENCILGRAPH_GRAPH_H_
