#ifndef PENCILGRAPH_SIMPLE_GRAPH_H_
#define PENCILGRAPH_SIMPLE_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pg {

// Undirected graph in compressed adjacency form with sorted rows.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  // rows[v] need not be sorted; duplicates are not allowed.
  explicit SimpleGraph(std::vector<std::vector<int>> rows);
  static SimpleGraph FromEdges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(offsets_.size()) - 1; }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[v], static_cast<size_t>(degree(v))};
  }
  bool HasEdge(int u, int w) const;
  // Index of the arc u->w in [0, 2|E|), or -1.
  int64_t ArcIndex(int u, int w) const;
  int64_t num_arcs() const { return static_cast<int64_t>(adj_.size()); }
  int64_t num_edges() const { return num_arcs() / 2; }
  int ArcTail(int64_t arc) const;
  int ArcHead(int64_t arc) const { return adj_[arc]; }
  int64_t RowStart(int v) const { return offsets_[v]; }

  bool IsSymmetric() const;
  bool IsIrreflexive() const;
  std::vector<std::pair<int, int>> Edges() const;

  std::vector<int> BfsDistances(int source) const;
  int ComponentCount(std::vector<int>* component_sizes = nullptr) const;

 private:
  std::vector<int64_t> offsets_ = {0};
  std::vector<int> adj_;
};

}  // namespace pg

#endif  // PENCILGRAPH_SIMPLE_GRAPH_H_
