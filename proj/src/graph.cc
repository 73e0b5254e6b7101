#include "pencilgraph/graph.h"

#include <algorithm>

#include "pencilgraph/error.h"
#include "pencilgraph/parallel.h"

namespace pg {

std::optional<Mask> Adjacent(const SpaceCtx& ctx, const Pencil& v,
                             const Pencil& w) {
  const Mask i0 = v.a0 & w.a0;
  const int half = ctx.coset_size / 2;
  if (Count(i0) != half - 1 || !IsClosed(i0)) return std::nullopt;
  const Mask lin = i0 | 1;
  Mask u = i0;
  for (int i = 0; i < ctx.m1; ++i) {
    const Mask b = v.entries[i] & w.entries[i];
    if (Count(b) != half || Translate(lin, Lowest(b)) != b) return std::nullopt;
    u |= b;
  }
  if (Count(u) != (1 << (ctx.r - 1)) - 1 || !IsClosed(u)) return std::nullopt;
  return u;
}

namespace {

struct KeyedPencil {
  Key key;
  Pencil pencil;
};

std::vector<KeyedPencil> KeyedNeighbors(const SpaceCtx& ctx, const Pencil& v) {
  std::vector<KeyedPencil> out;
  out.reserve(ctx.degree());
  for (Mask h : Hyperplanes(ctx)) {
    if ((v.a0 & h) == v.a0) continue;
    const Mask u0 = v.a0 & h;
    const Mask lin0 = u0 | 1;
    Mask outside = ctx.all & ~h & ~v.a0;
    while (outside) {
      const int c = Lowest(outside);
      Pencil w;
      w.a0 = u0 | Translate(lin0, c);
      outside &= ~w.a0;
      w.entries.resize(ctx.m1);
      for (int i = 0; i < ctx.m1; ++i) {
        const Mask ui = v.entries[i] & h;
        w.entries[i] = ui | Translate(ui, c);
      }
      out.push_back({Encode(w), std::move(w)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const KeyedPencil& a, const KeyedPencil& b) { return a.key < b.key; });
  return out;
}

}  // namespace

std::vector<Pencil> Neighbors(const SpaceCtx& ctx, const Pencil& v) {
  std::vector<Pencil> out;
  for (auto& kp : KeyedNeighbors(ctx, v)) out.push_back(std::move(kp.pencil));
  return out;
}

uint64_t PredictedComponentOrder(const SpaceCtx& ctx) {
  uint64_t v = GaussianBinomial(ctx.r, ctx.sigma);
  for (int i = 1; i <= ctx.rho; ++i) {
    v *= (uint64_t{1} << (i - 1)) * ((uint64_t{1} << i) - 1);
  }
  return v;
}

uint64_t PredictedFullOrder(const SpaceCtx& ctx) {
  uint64_t v = GaussianBinomial(ctx.r, ctx.sigma);
  for (int i = 2; i <= ctx.m1; ++i) {
    if (v > (uint64_t{1} << 62) / i) return ~uint64_t{0};
    v *= i;
  }
  return v;
}

int PencilGraph::Find(const Key& key) const {
  auto it = index.find(key);
  return it == index.end() ? -1 : it->second;
}

PencilGraph BuildComponent(const SpaceCtx& ctx, uint64_t cap) {
  const uint64_t predicted = PredictedComponentOrder(ctx);
  if (predicted > cap) {
    Fail(Error::Kind::kCapExceeded,
         "component order " + std::to_string(predicted) + " exceeds cap " +
             std::to_string(cap));
  }
  PencilGraph g(ctx);
  g.is_component = true;
  g.vertices.reserve(predicted);
  g.keys.reserve(predicted);
  g.index.reserve(predicted);
  std::vector<std::vector<int>> rows;

  auto add = [&](Key key, Pencil p) {
    const int id = g.size();
    g.index.emplace(key, id);
    g.keys.push_back(std::move(key));
    g.vertices.push_back(std::move(p));
    return id;
  };
  Pencil base = BaseVertex(ctx);
  add(Encode(base), base);

  // Frontier order is index order, so expanding in bounded batches gives the
  // same indexing as expanding whole levels.
  constexpr size_t kBatch = 4096;
  size_t level_begin = 0;
  while (level_begin < g.vertices.size()) {
    const size_t level_end = std::min(g.vertices.size(), level_begin + kBatch);
    std::vector<std::vector<KeyedPencil>> found(level_end - level_begin);
    ParallelFor(found.size(), [&](size_t b, size_t e) {
      for (size_t k = b; k < e; ++k) {
        found[k] = KeyedNeighbors(ctx, g.vertices[level_begin + k]);
      }
    });
    rows.resize(level_end);
    for (size_t k = 0; k < found.size(); ++k) {
      auto& row = rows[level_begin + k];
      row.reserve(found[k].size());
      for (auto& kp : found[k]) {
        int id = g.Find(kp.key);
        if (id < 0) {
          if (g.vertices.size() >= cap) {
            Fail(Error::Kind::kCapExceeded, "vertex cap exceeded during BFS");
          }
          id = add(std::move(kp.key), std::move(kp.pencil));
        }
        row.push_back(id);
      }
    }
    level_begin = level_end;
  }
  rows.resize(g.vertices.size());
  g.graph = SimpleGraph(std::move(rows));
  g.num_components = 1;
  g.component_sizes = {g.size()};
  return g;
}

PencilGraph BuildFull(const SpaceCtx& ctx, uint64_t cap) {
  const uint64_t predicted = PredictedFullOrder(ctx);
  if (predicted > cap) {
    Fail(Error::Kind::kCapExceeded,
         "graph order " + std::to_string(predicted) + " exceeds cap " +
             std::to_string(cap));
  }
  PencilGraph g(ctx);
  g.vertices.reserve(predicted);
  for (Mask a0 : EnumerateSubspaces(ctx, ctx.sigma)) {
    ForEachPencilThrough(ctx, a0, [&](const Pencil& v) {
      g.keys.push_back(Encode(v));
      g.index.emplace(g.keys.back(), g.size());
      g.vertices.push_back(v);
      return true;
    });
  }
  std::vector<std::vector<int>> rows(g.size());
  ParallelFor(rows.size(), [&](size_t b, size_t e) {
    for (size_t k = b; k < e; ++k) {
      for (const auto& kp : KeyedNeighbors(ctx, g.vertices[k])) {
        const int id = g.Find(kp.key);
        Check(id >= 0, "neighbor outside the pencil set");
        rows[k].push_back(id);
      }
    }
  });
  g.graph = SimpleGraph(std::move(rows));
  g.num_components = g.graph.ComponentCount(&g.component_sizes);
  return g;
}

BfsMetrics Bfs(const PencilGraph& g, int source) {
  BfsMetrics m;
  m.distances = g.graph.BfsDistances(source);
  for (int d : m.distances) {
    Check(d >= 0, "graph is disconnected");
    m.eccentricity = std::max(m.eccentricity, d);
  }
  return m;
}

int Diameter(const PencilGraph& g, bool vertex_transitive) {
  if (g.num_components != 1) {
    Fail(Error::Kind::kInvalidArgument, "diameter of a disconnected graph");
  }
  if (vertex_transitive) return Bfs(g, 0).eccentricity;
  std::vector<int> ecc(g.size());
  ParallelFor(ecc.size(), [&](size_t b, size_t e) {
    for (size_t k = b; k < e; ++k) ecc[k] = Bfs(g, static_cast<int>(k)).eccentricity;
  });
  return *std::max_element(ecc.begin(), ecc.end());
}

}  // namespace pg
