#ifndef PENCILGRAPH_CONFIG_H_
#define PENCILGRAPH_CONFIG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "pencilgraph/decomp.h"
#include "pencilgraph/iso_search.h"
#include "pencilgraph/simple_graph.h"

namespace pg {

// Configuration (m_c, n_d): m points on c lines each, n lines of d points.
struct IncidenceStructure {
  int m = 0, c = 0, n = 0, d = 0;
  std::vector<std::vector<int>> lines;        // sorted point lists
  std::vector<std::vector<int>> point_lines;  // sorted line lists

  std::string Params() const;  // "(210_12, 630_4)"
  nlohmann::json ToJson() const;
};

// Validates regularity on both sides and c m = d n.
IncidenceStructure FromLines(int points, std::vector<std::vector<int>> lines);
// Points are the vertices, lines the clique copies.
IncidenceStructure BuildConfig(const PencilGraph& g, const Decomposition& d);

// Points joined when they share a line.
SimpleGraph MengerGraph(const IncidenceStructure& cfg);
// Lines joined when they share a point.
SimpleGraph DualMengerGraph(const IncidenceStructure& cfg);
bool SameEdges(const SimpleGraph& a, const SimpleGraph& b);

struct LeviGraph {
  SimpleGraph graph;       // points 0..m-1, then lines m..m+n-1
  std::vector<int> color;  // 0 point, 1 line
};
LeviGraph BuildLevi(const IncidenceStructure& cfg);

struct DualityResult {
  bool applicable = false;  // m = n and c = d
  bool found = false;
  bool exhausted = false;
  std::vector<int> point_to_line;
  std::vector<int> line_to_point;
  // The duality is a Levi automorphism swapping colours and carries the
  // Menger graph onto the dual Menger graph.
  bool verified = false;
  ExtendResult search;

  nlohmann::json ToJson(bool with_map = false) const;
};

DualityResult SelfDualityCheck(const IncidenceStructure& cfg, uint64_t node_limit = 0);

}  // namespace pg

#endif  // PENCILGRAPH_CONFIG_H_
