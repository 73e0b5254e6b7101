#include "pencilgraph/export.h"

#include <sstream>

namespace pg {

nlohmann::json GraphToJson(const PencilGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  nlohmann::json display = nlohmann::json::array();
  for (const Pencil& v : g.vertices) {
    nlohmann::json entries = nlohmann::json::array();
    for (Mask e : v.entries) entries.push_back(Points(e));
    vertices.push_back({{"A0", Points(v.a0)}, {"entries", std::move(entries)}});
    display.push_back(RenderPencil(v));
  }
  nlohmann::json adjacency = nlohmann::json::array();
  for (int v = 0; v < g.size(); ++v) {
    auto row = g.graph.neighbors(v);
    adjacency.push_back(std::vector<int>(row.begin(), row.end()));
  }
  return {{"r", g.ctx.r},
          {"sigma", g.ctx.sigma},
          {"vertices", std::move(vertices)},
          {"adjacency", std::move(adjacency)},
          {"display", std::move(display)}};
}

std::string GraphToDot(const SimpleGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.size(); ++v) os << "  " << v << ";\n";
  for (auto [a, b] : g.Edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

const char* ColorName(int c) { return c == 0 ? "point" : "line"; }

}  // namespace

nlohmann::json LeviToJson(const LeviGraph& levi) {
  nlohmann::json nodes = nlohmann::json::array();
  nlohmann::json adjacency = nlohmann::json::array();
  for (int v = 0; v < levi.graph.size(); ++v) {
    nodes.push_back({{"id", v}, {"color", ColorName(levi.color[v])}});
    auto row = levi.graph.neighbors(v);
    adjacency.push_back(std::vector<int>(row.begin(), row.end()));
  }
  return {{"nodes", std::move(nodes)}, {"adjacency", std::move(adjacency)}};
}

std::string LeviToDot(const LeviGraph& levi) {
  std::ostringstream os;
  os << "graph Levi {\n";
  for (int v = 0; v < levi.graph.size(); ++v) {
    os << "  " << v << " [color=" << (levi.color[v] == 0 ? "black" : "red")
       << ", kind=" << ColorName(levi.color[v]) << "];\n";
  }
  for (auto [a, b] : levi.graph.Edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace pg
