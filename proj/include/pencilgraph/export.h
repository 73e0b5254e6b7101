#ifndef PENCILGRAPH_EXPORT_H_
#define PENCILGRAPH_EXPORT_H_

#include <string>

#include "json.hpp"
#include "pencilgraph/config.h"
#include "pencilgraph/graph.h"
#include "pencilgraph/simple_graph.h"

namespace pg {

// {"r", "sigma", "vertices": [{"A0": [...], "entries": [[...], ...]}],
//  "adjacency": [[...]], "display": ["(1,23,45,67)", ...]}
nlohmann::json GraphToJson(const PencilGraph& g);

// Undirected DOT with vertex indices as node names.
std::string GraphToDot(const SimpleGraph& g, const std::string& name = "G");

// Points first, then lines; every node carries "color".
nlohmann::json LeviToJson(const LeviGraph& levi);
std::string LeviToDot(const LeviGraph& levi);

}  // namespace pg

#endif  // PENCILGRAPH_EXPORT_H_
