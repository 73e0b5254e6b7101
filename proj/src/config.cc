#include "pencilgraph/config.h"

#include <algorithm>

#include "pencilgraph/error.h"

namespace pg {

std::string IncidenceStructure::Params() const {
  return "(" + std::to_string(m) + "_" + std::to_string(c) + ", " + std::to_string(n) +
         "_" + std::to_string(d) + ")";
}

nlohmann::json IncidenceStructure::ToJson() const {
  return {{"points", m}, {"lines_per_point", c}, {"lines", n},
          {"points_per_line", d}, {"params", Params()}};
}

IncidenceStructure FromLines(int points, std::vector<std::vector<int>> lines) {
  Require(points > 0, "configuration without points");
  IncidenceStructure cfg;
  cfg.m = points;
  cfg.n = static_cast<int>(lines.size());
  cfg.point_lines.assign(points, {});
  for (size_t i = 0; i < lines.size(); ++i) {
    auto& l = lines[i];
    Require(!l.empty(), "empty line in configuration");
    std::sort(l.begin(), l.end());
    Require(std::adjacent_find(l.begin(), l.end()) == l.end(), "repeated point on a line");
    for (int p : l) {
      Require(p >= 0 && p < points, "line point out of range");
      cfg.point_lines[p].push_back(static_cast<int>(i));
    }
  }
  cfg.d = static_cast<int>(lines.empty() ? 0 : lines[0].size());
  for (const auto& l : lines) {
    Require(static_cast<int>(l.size()) == cfg.d, "lines of different sizes");
  }
  cfg.c = static_cast<int>(cfg.point_lines[0].size());
  for (const auto& pl : cfg.point_lines) {
    Require(static_cast<int>(pl.size()) == cfg.c, "points on different numbers of lines");
  }
  Check(static_cast<int64_t>(cfg.c) * cfg.m == static_cast<int64_t>(cfg.d) * cfg.n,
        "incidence count mismatch");
  cfg.lines = std::move(lines);
  return cfg;
}

IncidenceStructure BuildConfig(const PencilGraph& g, const Decomposition& d) {
  return FromLines(g.size(), d.cliques);
}

namespace {

SimpleGraph Collinearity(int count, const std::vector<std::vector<int>>& blocks) {
  std::vector<std::vector<int>> rows(count);
  for (const auto& b : blocks) {
    for (int x : b) {
      for (int y : b) {
        if (x != y) rows[x].push_back(y);
      }
    }
  }
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
  }
  return SimpleGraph(std::move(rows));
}

}  // namespace

SimpleGraph MengerGraph(const IncidenceStructure& cfg) {
  return Collinearity(cfg.m, cfg.lines);
}

SimpleGraph DualMengerGraph(const IncidenceStructure& cfg) {
  return Collinearity(cfg.n, cfg.point_lines);
}

bool SameEdges(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.size() != b.size() || a.num_arcs() != b.num_arcs()) return false;
  for (int v = 0; v < a.size(); ++v) {
    auto x = a.neighbors(v), y = b.neighbors(v);
    if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) return false;
  }
  return true;
}

LeviGraph BuildLevi(const IncidenceStructure& cfg) {
  LeviGraph lg;
  std::vector<std::vector<int>> rows(cfg.m + cfg.n);
  for (int i = 0; i < cfg.n; ++i) {
    for (int p : cfg.lines[i]) {
      rows[p].push_back(cfg.m + i);
      rows[cfg.m + i].push_back(p);
    }
  }
  lg.graph = SimpleGraph(std::move(rows));
  lg.color.assign(cfg.m + cfg.n, 1);
  std::fill(lg.color.begin(), lg.color.begin() + cfg.m, 0);
  return lg;
}

nlohmann::json DualityResult::ToJson(bool with_map) const {
  nlohmann::json j = {{"applicable", applicable}, {"found", found},
                      {"exhausted", exhausted}, {"verified", verified},
                      {"search", search.ToJson()}};
  if (with_map && found) j["point_to_line"] = point_to_line;
  return j;
}

DualityResult SelfDualityCheck(const IncidenceStructure& cfg, uint64_t node_limit) {
  DualityResult r;
  r.applicable = cfg.m == cfg.n && cfg.c == cfg.d;
  if (!r.applicable) return r;
  const LeviGraph lg = BuildLevi(cfg);
  std::vector<int> swapped(lg.color.size());
  for (size_t i = 0; i < swapped.size(); ++i) swapped[i] = 1 - lg.color[i];
  ExtendOptions o;
  o.src_colors = &lg.color;
  o.dst_colors = &swapped;
  o.node_limit = node_limit;
  r.search = ExtendPartial(lg.graph, lg.graph, {}, o);
  r.found = r.search.found;
  r.exhausted = r.search.exhausted;
  if (!r.found) return r;
  const auto& p = r.search.map;
  r.point_to_line.resize(cfg.m);
  r.line_to_point.resize(cfg.n);
  for (int i = 0; i < cfg.m; ++i) r.point_to_line[i] = p[i] - cfg.m;
  for (int i = 0; i < cfg.n; ++i) r.line_to_point[i] = p[cfg.m + i];
  bool ok = IsIsomorphism(lg.graph, lg.graph, p);
  for (size_t i = 0; i < p.size() && ok; ++i) ok = lg.color[i] != lg.color[p[i]];
  if (ok) ok = IsIsomorphism(MengerGraph(cfg), DualMengerGraph(cfg), r.point_to_line);
  r.verified = ok;
  return r;
}

}  // namespace pg
