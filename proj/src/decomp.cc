#include "pencilgraph/decomp.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "pencilgraph/error.h"

namespace pg {

namespace {

void AppendMask(std::string* out, Mask m) {
  for (int k = 0; k < 8; ++k) out->push_back(static_cast<char>((m >> (8 * k)) & 0xff));
}

constexpr size_t kMaxFailures = 20;

void Note(std::vector<std::string>* failures, const std::string& what) {
  if (failures->size() < kMaxFailures) failures->push_back(what);
}

}  // namespace

std::string CliqueCopyId::Display() const {
  std::string out = "[" + RenderSet(u0);
  for (Mask b : blocks) out += "," + RenderSet(b);
  return out + "]";
}

std::string CliqueCopyId::Bytes() const {
  std::string out;
  AppendMask(&out, hyperplane);
  AppendMask(&out, u0);
  for (Mask b : blocks) AppendMask(&out, b);
  return out;
}

std::string TuranCopyId::Display() const {
  return "[" + RenderSet(w) + "_" + std::to_string(i) + "]";
}

std::vector<Pencil> CliqueVertices(const SpaceCtx& ctx, const CliqueCopyId& id) {
  Require(Dim(id.hyperplane) == ctx.r - 1, "clique id needs a hyperplane");
  Require(static_cast<int>(id.blocks.size()) == ctx.m1, "clique id needs m1 blocks");
  const Mask lin0 = id.u0 | 1;
  std::vector<Pencil> out;
  Mask outside = ctx.all & ~id.hyperplane;
  while (outside) {
    const int c = Lowest(outside);
    Pencil w;
    w.a0 = id.u0 | Translate(lin0, c);
    outside &= ~w.a0;
    for (Mask b : id.blocks) w.entries.push_back(b | Translate(b, c));
    Check(IsValidPencil(ctx, w), "clique id induces an invalid pencil");
    out.push_back(std::move(w));
  }
  Check(static_cast<int>(out.size()) == 2 * ctx.s, "clique id has the wrong size");
  std::sort(out.begin(), out.end(),
            [](const Pencil& a, const Pencil& b) { return Encode(a) < Encode(b); });
  return out;
}

std::vector<CliqueCopyId> CliqueCopiesAt(const SpaceCtx& ctx, const Pencil& v) {
  std::vector<CliqueCopyId> out;
  for (Mask h : Hyperplanes(ctx)) {
    if ((v.a0 & h) == v.a0) continue;
    CliqueCopyId id;
    id.hyperplane = h;
    id.u0 = v.a0 & h;
    for (Mask e : v.entries) id.blocks.push_back(e & h);
    out.push_back(std::move(id));
  }
  return out;
}

TuranCopy TuranCopyThrough(const SpaceCtx& ctx, const Pencil& v, int i) {
  Require(i >= 1 && i <= ctx.m1, "entry index out of range");
  const Mask w = v.a0 | v.entries[i - 1];
  std::vector<Pencil> inside;
  for (auto& u : Neighbors(ctx, v)) {
    if ((u.a0 & ~w) == 0) inside.push_back(std::move(u));
  }
  Check(static_cast<int>(inside.size()) == ctx.s * (ctx.t - 1),
        "unexpected number of neighbors inside W");
  std::vector<Pencil> members = inside;
  for (auto& y : Neighbors(ctx, inside.front())) {
    if (y.a0 == v.a0) members.push_back(std::move(y));
  }
  std::vector<std::pair<Key, Pencil>> keyed;
  for (auto& p : members) keyed.emplace_back(Encode(p), std::move(p));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  TuranCopy copy;
  for (auto& [k, p] : keyed) copy.vertices.push_back(std::move(p));
  Check(static_cast<int>(copy.vertices.size()) == ctx.s * ctx.t,
        "Turan copy has the wrong size");
  std::vector<Mask> a0s;
  for (const auto& p : copy.vertices) a0s.push_back(p.a0);
  std::sort(a0s.begin(), a0s.end(), PointsLess);
  a0s.erase(std::unique(a0s.begin(), a0s.end()), a0s.end());
  Check(static_cast<int>(a0s.size()) == ctx.t, "Turan copy has the wrong parts");
  copy.part_a0 = a0s;
  for (const auto& p : copy.vertices) {
    copy.part.push_back(static_cast<int>(
        std::find(a0s.begin(), a0s.end(), p.a0) - a0s.begin()));
  }
  copy.id.w = w;
  copy.id.i = i;
  copy.id.anchor = keyed.front().first;
  return copy;
}

TuranCopy TuranVertices(const SpaceCtx& ctx, const TuranCopyId& id) {
  Pencil anchor = Decode(ctx, id.anchor);
  Require(IsValidPencil(ctx, anchor), "Turan id anchor is not a pencil");
  Require((anchor.a0 | anchor.entries[id.i - 1]) == id.w,
          "Turan id anchor does not span W at index i");
  TuranCopy copy = TuranCopyThrough(ctx, anchor, id.i);
  Check(copy.id == id, "Turan id is not the anchor of its copy");
  return copy;
}

std::vector<TuranCopyId> TuranCopiesAt(const SpaceCtx& ctx, const Pencil& v) {
  std::vector<TuranCopyId> out;
  for (int i = 1; i <= ctx.m1; ++i) out.push_back(TuranCopyThrough(ctx, v, i).id);
  return out;
}

Decomposition EnumerateCopies(const PencilGraph& g) {
  const SpaceCtx& ctx = g.ctx;
  const SimpleGraph& G = g.graph;
  Decomposition d;
  d.cliques_at.assign(g.size(), {});
  d.turans_at.assign(g.size(), {});

  std::unordered_map<std::string, int> clique_index;
  for (int v = 0; v < g.size(); ++v) {
    for (auto& id : CliqueCopiesAt(ctx, g.vertices[v])) {
      std::string bytes = id.Bytes();
      auto it = clique_index.find(bytes);
      int c;
      if (it == clique_index.end()) {
        c = static_cast<int>(d.cliques.size());
        clique_index.emplace(std::move(bytes), c);
        std::vector<int> members;
        for (const auto& p : CliqueVertices(ctx, id)) {
          const int x = g.Find(p);
          Check(x >= 0, "clique copy " + id.Display() + " leaves the graph");
          members.push_back(x);
        }
        std::sort(members.begin(), members.end());
        d.cliques.push_back(std::move(members));
        d.clique_ids.push_back(std::move(id));
      } else {
        c = it->second;
      }
      d.cliques_at[v].push_back(c);
    }
  }

  std::map<std::vector<int>, int> turan_index;
  for (int v = 0; v < g.size(); ++v) {
    const Pencil& pv = g.vertices[v];
    for (int i = 1; i <= ctx.m1; ++i) {
      const Mask w = pv.a0 | pv.entries[i - 1];
      std::vector<int> inside;
      for (int u : G.neighbors(v)) {
        if ((g.vertices[u].a0 & ~w) == 0) inside.push_back(u);
      }
      Check(!inside.empty(), "no neighbor inside W");
      std::vector<int> members = inside;
      for (int y : G.neighbors(inside.front())) {
        if (g.vertices[y].a0 == pv.a0) members.push_back(y);
      }
      std::sort(members.begin(), members.end());
      Check(std::adjacent_find(members.begin(), members.end()) == members.end(),
            "Turan copy members repeat");
      auto it = turan_index.find(members);
      int c;
      if (it == turan_index.end()) {
        c = static_cast<int>(d.turans.size());
        turan_index.emplace(members, c);
        std::vector<Mask> a0s;
        Key anchor;
        for (int x : members) {
          a0s.push_back(g.vertices[x].a0);
          if (anchor.empty() || g.keys[x] < anchor) anchor = g.keys[x];
        }
        std::sort(a0s.begin(), a0s.end(), PointsLess);
        a0s.erase(std::unique(a0s.begin(), a0s.end()), a0s.end());
        std::vector<int> parts;
        for (int x : members) {
          parts.push_back(static_cast<int>(
              std::find(a0s.begin(), a0s.end(), g.vertices[x].a0) - a0s.begin()));
        }
        d.turans.push_back(std::move(members));
        d.turan_parts.push_back(std::move(parts));
        d.turan_ids.push_back({w, i, std::move(anchor)});
      } else {
        c = it->second;
      }
      d.turans_at[v].push_back(c);
    }
  }

  d.arc_clique.assign(G.num_arcs(), -1);
  d.arc_turan.assign(G.num_arcs(), -1);
  return d;
}

namespace {

// Sets arc_* for every edge covered by a copy; returns false on a double
// cover or a non-edge. Both arcs of an edge are filled.
bool MarkArcs(const SimpleGraph& G, const std::vector<int>& members,
              const std::vector<int>* parts, int copy, std::vector<int>* arc_copy,
              std::vector<std::string>* failures, const std::string& family,
              bool* induced_ok) {
  bool ok = true;
  for (size_t a = 0; a < members.size(); ++a) {
    for (size_t b = a + 1; b < members.size(); ++b) {
      const int u = members[a], w = members[b];
      const bool same_part = parts && (*parts)[a] == (*parts)[b];
      const int64_t arc = G.ArcIndex(u, w);
      if (same_part) {
        if (arc >= 0) {
          *induced_ok = false;
          Note(failures, family + " copy " + std::to_string(copy) +
                             " has an edge inside a part: " + std::to_string(u) +
                             "-" + std::to_string(w));
        }
        continue;
      }
      if (arc < 0) {
        ok = false;
        Note(failures, family + " copy " + std::to_string(copy) +
                           " misses edge " + std::to_string(u) + "-" +
                           std::to_string(w));
        continue;
      }
      const int64_t back = G.ArcIndex(w, u);
      if ((*arc_copy)[arc] >= 0) {
        ok = false;
        Note(failures, "edge " + std::to_string(u) + "-" + std::to_string(w) +
                           " lies in two " + family + " copies");
      }
      (*arc_copy)[arc] = copy;
      (*arc_copy)[back] = copy;
    }
  }
  return ok;
}

bool OverlapOk(const std::vector<std::vector<int>>& copies,
               const std::vector<std::vector<int>>& at, int v,
               std::vector<int>* scratch) {
  scratch->clear();
  size_t expected = 1;
  for (int c : at[v]) {
    expected += copies[c].size() - 1;
    scratch->insert(scratch->end(), copies[c].begin(), copies[c].end());
  }
  std::sort(scratch->begin(), scratch->end());
  scratch->erase(std::unique(scratch->begin(), scratch->end()), scratch->end());
  return scratch->size() == expected;
}

}  // namespace

DecompReport VerifyDecomposition(const PencilGraph& g, Decomposition* dc) {
  Decomposition& d = *dc;
  const SpaceCtx& ctx = g.ctx;
  const SimpleGraph& G = g.graph;
  DecompReport rep;
  rep.vertices = g.size();
  rep.edges = G.num_edges();
  rep.l0 = static_cast<int64_t>(d.cliques.size());
  rep.l1 = static_cast<int64_t>(d.turans.size());
  rep.l0_expected = int64_t{ctx.a0_size} * g.size();
  rep.l1_expected = int64_t{ctx.m1} * g.size() / (int64_t{ctx.s} * ctx.t);
  rep.m0 = ctx.m0;
  rep.m1 = ctx.m1;
  rep.counts_ok = rep.l0 == rep.l0_expected && rep.l1 == rep.l1_expected;
  rep.swapped_assignment_matches =
      rep.l0 == rep.l1_expected && rep.l1 == rep.l0_expected;
  if (!rep.counts_ok) {
    Note(&rep.failures, "copy counts " + std::to_string(rep.l0) + "," +
                            std::to_string(rep.l1) + " differ from " +
                            std::to_string(rep.l0_expected) + "," +
                            std::to_string(rep.l1_expected));
  }

  std::fill(d.arc_clique.begin(), d.arc_clique.end(), -1);
  std::fill(d.arc_turan.begin(), d.arc_turan.end(), -1);
  bool induced = true;
  bool clique_disjoint = true;
  for (size_t c = 0; c < d.cliques.size(); ++c) {
    clique_disjoint &= MarkArcs(G, d.cliques[c], nullptr, static_cast<int>(c),
                                &d.arc_clique, &rep.failures, "clique", &induced);
  }
  bool turan_disjoint = true;
  for (size_t c = 0; c < d.turans.size(); ++c) {
    turan_disjoint &= MarkArcs(G, d.turans[c], &d.turan_parts[c], static_cast<int>(c),
                               &d.arc_turan, &rep.failures, "Turan", &induced);
  }
  rep.induced_multipartite = induced;
  const bool all_clique = std::find(d.arc_clique.begin(), d.arc_clique.end(), -1) ==
                          d.arc_clique.end();
  const bool all_turan = std::find(d.arc_turan.begin(), d.arc_turan.end(), -1) ==
                         d.arc_turan.end();
  if (!all_clique) Note(&rep.failures, "some edge lies in no clique copy");
  if (!all_turan) Note(&rep.failures, "some edge lies in no Turan copy");
  rep.edge_cover_clique = clique_disjoint && all_clique;
  rep.edge_cover_turan = turan_disjoint && all_turan;

  rep.edge_is_intersection = rep.edge_cover_clique && rep.edge_cover_turan;
  if (rep.edge_is_intersection) {
    std::vector<int> common;
    for (int u = 0; u < g.size() && rep.edge_is_intersection; ++u) {
      for (int64_t arc = G.RowStart(u); arc < G.RowStart(u) + G.degree(u); ++arc) {
        const int w = G.ArcHead(arc);
        if (w < u) continue;
        const auto& a = d.cliques[d.arc_clique[arc]];
        const auto& b = d.turans[d.arc_turan[arc]];
        common.clear();
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(common));
        if (common.size() != 2) {
          rep.edge_is_intersection = false;
          Note(&rep.failures, "copies through edge " + std::to_string(u) + "-" +
                                  std::to_string(w) + " share " +
                                  std::to_string(common.size()) + " vertices");
          break;
        }
      }
    }
  }

  rep.incidence_ok = true;
  rep.clique_overlap_ok = true;
  rep.turan_overlap_ok = true;
  std::vector<int> scratch;
  for (int v = 0; v < g.size(); ++v) {
    std::vector<int> cs = d.cliques_at[v], ts = d.turans_at[v];
    std::sort(cs.begin(), cs.end());
    std::sort(ts.begin(), ts.end());
    const bool distinct =
        std::adjacent_find(cs.begin(), cs.end()) == cs.end() &&
        std::adjacent_find(ts.begin(), ts.end()) == ts.end();
    if (!distinct || static_cast<int>(cs.size()) != ctx.m0 ||
        static_cast<int>(ts.size()) != ctx.m1) {
      if (rep.incidence_ok) {
        Note(&rep.failures, "vertex " + std::to_string(v) + " has incidences " +
                                std::to_string(cs.size()) + "," +
                                std::to_string(ts.size()));
      }
      rep.incidence_ok = false;
    }
    if (!OverlapOk(d.cliques, d.cliques_at, v, &scratch)) {
      if (rep.clique_overlap_ok) {
        Note(&rep.failures, "clique copies at " + std::to_string(v) + " overlap");
      }
      rep.clique_overlap_ok = false;
    }
    if (!OverlapOk(d.turans, d.turans_at, v, &scratch)) {
      if (rep.turan_overlap_ok) {
        Note(&rep.failures, "Turan copies at " + std::to_string(v) + " overlap");
      }
      rep.turan_overlap_ok = false;
    }
  }

  rep.cliques_maximal = true;
  for (size_t c = 0; c < d.cliques.size() && rep.cliques_maximal; ++c) {
    const auto& members = d.cliques[c];
    for (int x : G.neighbors(members[0])) {
      if (std::binary_search(members.begin(), members.end(), x)) continue;
      bool all = true;
      for (int m : members) all = all && G.HasEdge(x, m);
      if (all) {
        rep.cliques_maximal = false;
        Note(&rep.failures, "clique copy " + std::to_string(c) +
                                " extends by vertex " + std::to_string(x));
        break;
      }
    }
  }

  rep.turans_maximal = true;
  std::vector<int> cand;
  for (size_t c = 0; c < d.turans.size() && rep.turans_maximal; ++c) {
    const auto& members = d.turans[c];
    const auto& parts = d.turan_parts[c];
    int a0 = members[0], a1 = -1;
    for (size_t k = 1; k < members.size(); ++k) {
      if (parts[k] != parts[0]) {
        a1 = members[k];
        break;
      }
    }
    cand.assign(G.neighbors(a0).begin(), G.neighbors(a0).end());
    cand.insert(cand.end(), G.neighbors(a1).begin(), G.neighbors(a1).end());
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<int> part_size(ctx.t, 0);
    for (int p : parts) ++part_size[p];
    for (int x : cand) {
      if (std::binary_search(members.begin(), members.end(), x)) continue;
      std::vector<int> missed(ctx.t, 0);
      int missed_total = 0;
      for (size_t k = 0; k < members.size(); ++k) {
        if (!G.HasEdge(x, members[k])) {
          ++missed[parts[k]];
          ++missed_total;
        }
      }
      bool extends = missed_total == 0;
      for (int p = 0; p < ctx.t && !extends; ++p) {
        extends = missed[p] == part_size[p] && missed_total == part_size[p];
      }
      if (extends) {
        rep.turans_maximal = false;
        Note(&rep.failures, "Turan copy " + std::to_string(c) +
                                " extends by vertex " + std::to_string(x));
        break;
      }
    }
  }

  rep.ok = rep.counts_ok && rep.edge_cover_clique && rep.edge_cover_turan &&
           rep.edge_is_intersection && rep.clique_overlap_ok &&
           rep.turan_overlap_ok && rep.incidence_ok && rep.cliques_maximal &&
           rep.turans_maximal && rep.induced_multipartite;
  return rep;
}

nlohmann::json DecompReport::ToJson() const {
  return {
      {"ok", ok},
      {"vertices", vertices},
      {"edges", edges},
      {"clique_copies", l0},
      {"turan_copies", l1},
      {"clique_copies_expected", l0_expected},
      {"turan_copies_expected", l1_expected},
      {"cliques_per_vertex", m0},
      {"turans_per_vertex", m1},
      {"edge_cover_clique", edge_cover_clique},
      {"edge_cover_turan", edge_cover_turan},
      {"edge_is_intersection", edge_is_intersection},
      {"clique_overlap_ok", clique_overlap_ok},
      {"turan_overlap_ok", turan_overlap_ok},
      {"counts_ok", counts_ok},
      {"incidence_ok", incidence_ok},
      {"cliques_maximal", cliques_maximal},
      {"turans_maximal", turans_maximal},
      {"induced_multipartite", induced_multipartite},
      {"swapped_assignment_matches", swapped_assignment_matches},
      {"failures", failures},
  };
}

std::string DecompReport::ToText() const {
  std::ostringstream os;
  os << "decomposition " << (ok ? "PASS" : "FAIL") << "\n"
     << "  vertices " << vertices << ", edges " << edges << "\n"
     << "  clique copies " << l0 << " (expected " << l0_expected << "), "
     << m0 << " per vertex\n"
     << "  Turan copies " << l1 << " (expected " << l1_expected << "), "
     << m1 << " per vertex\n"
     << "  swapped count assignment matches: "
     << (swapped_assignment_matches ? "yes" : "no") << "\n";
  for (const auto& f : failures) os << "  failure: " << f << "\n";
  return os.str();
}

}  // namespace pg
