#include "pencilgraph/simple_graph.h"

#include <algorithm>

namespace pg {

SimpleGraph::SimpleGraph(std::vector<std::vector<int>> rows) {
  offsets_.assign(1, 0);
  offsets_.reserve(rows.size() + 1);
  size_t total = 0;
  for (const auto& row : rows) total += row.size();
  adj_.reserve(total);
  for (auto& row : rows) {
    std::sort(row.begin(), row.end());
    adj_.insert(adj_.end(), row.begin(), row.end());
    offsets_.push_back(static_cast<int64_t>(adj_.size()));
  }
}

SimpleGraph SimpleGraph::FromEdges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> rows(n);
  for (auto [u, w] : edges) {
    rows[u].push_back(w);
    rows[w].push_back(u);
  }
  return SimpleGraph(std::move(rows));
}

bool SimpleGraph::HasEdge(int u, int w) const { return ArcIndex(u, w) >= 0; }

int64_t SimpleGraph::ArcIndex(int u, int w) const {
  auto row = neighbors(u);
  auto it = std::lower_bound(row.begin(), row.end(), w);
  if (it == row.end() || *it != w) return -1;
  return offsets_[u] + (it - row.begin());
}

int SimpleGraph::ArcTail(int64_t arc) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), arc);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

bool SimpleGraph::IsSymmetric() const {
  for (int u = 0; u < size(); ++u) {
    for (int w : neighbors(u)) {
      if (!HasEdge(w, u)) return false;
    }
  }
  return true;
}

bool SimpleGraph::IsIrreflexive() const {
  for (int u = 0; u < size(); ++u) {
    if (HasEdge(u, u)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> SimpleGraph::Edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(num_edges());
  for (int u = 0; u < size(); ++u) {
    for (int w : neighbors(u)) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

std::vector<int> SimpleGraph::BfsDistances(int source) const {
  std::vector<int> dist(size(), -1);
  std::vector<int> queue;
  queue.reserve(size());
  dist[source] = 0;
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int SimpleGraph::ComponentCount(std::vector<int>* component_sizes) const {
  std::vector<int> seen(size(), 0);
  std::vector<int> stack;
  int count = 0;
  if (component_sizes) component_sizes->clear();
  for (int s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    ++count;
    int members = 0;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++members;
      for (int w : neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (component_sizes) component_sizes->push_back(members);
  }
  return count;
}

}  // namespace pg
