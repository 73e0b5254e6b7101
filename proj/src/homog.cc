#include "pencilgraph/homog.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "pencilgraph/autnr.h"
#include "pencilgraph/error.h"
#include "pencilgraph/parallel.h"

namespace pg {

namespace {

Mask TransvectMask(Mask s, Mask h, int c) {
  return (s & h) | Translate(s & ~h, c);
}

// Vertex permutation induced by a pencil map, or empty when some image
// leaves the component.
template <typename Fn>
Perm InducedPerm(const PencilGraph& g, Fn&& fn) {
  Perm p(g.size(), -1);
  std::vector<char> bad(g.size(), 0);
  ParallelFor(p.size(), [&](size_t b, size_t e) {
    for (size_t k = b; k < e; ++k) {
      const int id = g.Find(fn(g.vertices[k]));
      if (id < 0) {
        bad[k] = 1;
      } else {
        p[k] = id;
      }
    }
  });
  if (std::any_of(bad.begin(), bad.end(), [](char c) { return c != 0; })) return {};
  return p;
}

int Root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void Unite(std::vector<int>& parent, int a, int b) {
  a = Root(parent, a);
  b = Root(parent, b);
  if (a == b) return;
  if (a < b) {
    parent[b] = a;
  } else {
    parent[a] = b;
  }
}

std::vector<int> ArcTails(const SimpleGraph& gr) {
  std::vector<int> tail(gr.num_arcs());
  for (int v = 0; v < gr.size(); ++v) {
    for (int64_t a = gr.RowStart(v); a < gr.RowStart(v) + gr.degree(v); ++a) tail[a] = v;
  }
  return tail;
}

std::string MemberKey(std::vector<int> members) {
  std::sort(members.begin(), members.end());
  return std::string(reinterpret_cast<const char*>(members.data()),
                     members.size() * sizeof(int));
}

bool CopiesPreserved(const std::vector<std::vector<int>>& copies,
                     const std::vector<GraphAut>& gens) {
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < copies.size(); ++i) index.emplace(MemberKey(copies[i]), i);
  for (const auto& a : gens) {
    for (const auto& c : copies) {
      std::vector<int> img;
      img.reserve(c.size());
      for (int x : c) img.push_back(a.vperm[x]);
      if (!index.count(MemberKey(std::move(img)))) return false;
    }
  }
  return true;
}

}  // namespace

Pencil ApplyPsi(const APerm& psi, const Pencil& v) {
  Require(static_cast<int>(v.entries.size()) == psi.n(), "psi degree mismatch");
  Pencil w;
  w.a0 = v.a0;
  w.entries.assign(v.entries.size(), 0);
  for (int i = 1; i <= psi.n(); ++i) w.entries[psi(i) - 1] = v.entries[i - 1];
  return w;
}

Pencil ApplyTransvection(Mask h, int c, const Pencil& v) {
  Pencil w;
  w.a0 = TransvectMask(v.a0, h, c);
  for (Mask e : v.entries) w.entries.push_back(TransvectMask(e, h, c));
  return w;
}

nlohmann::json GeneratorSet::ToJson() const {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& a : gens) labels.push_back(a.kind + " " + a.label);
  return {{"n_generators", n_count},
          {"n_local_only", n_local_only},
          {"psi_generators", psi_count},
          {"transvections", transvection_count},
          {"paper_vertex_orbit", paper_vertex_orbit},
          {"paper_order", paper_order},
          {"paper_order_formula", paper_order_formula},
          {"vertex_orbit", vertex_orbit},
          {"generators", labels}};
}

std::vector<int> Orbits(int n, const std::vector<const Perm*>& gens) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Perm* p : gens) {
    for (int x = 0; x < n; ++x) Unite(parent, x, (*p)[x]);
  }
  for (int x = 0; x < n; ++x) parent[x] = Root(parent, x);
  return parent;
}

std::vector<int> VertexOrbits(const GeneratorSet& s, int n) {
  std::vector<const Perm*> ps;
  for (const auto& a : s.gens) ps.push_back(&a.vperm);
  return Orbits(n, ps);
}

GeneratorSet FullGeneratorSet(const PencilGraph& g, bool with_transvections,
                              uint64_t closure_cap) {
  Require(g.is_component, "generator set needs the component of the base vertex");
  const SpaceCtx& ctx = g.ctx;
  GeneratorSet s;
  std::set<Perm> seen;
  auto add = [&](std::string kind, std::string label, Perm p) {
    if (IsIdentity(p) || !seen.insert(p).second) return false;
    s.gens.push_back({std::move(kind), std::move(label), std::move(p)});
    return true;
  };
  LocalFrame f(ctx);
  for (auto& a : SynthAll(f, &g)) {
    if (!a.global) {
      ++s.n_local_only;
      continue;
    }
    if (add("N", a.Display(), a.vperm)) ++s.n_count;
  }
  for (const auto& psi : PQaGenerators(ctx.rho)) {
    Perm p = InducedPerm(g, [&](const Pencil& v) { return ApplyPsi(psi, v); });
    if (p.empty() || !IsIsomorphism(g.graph, g.graph, p)) {
      Fail(Error::Kind::kIntegrity, "pure-psi map " + psi.Display() +
                                        " is not an automorphism");
    }
    if (add("psi", psi.Display(), std::move(p))) ++s.psi_count;
  }
  {
    std::vector<const Perm*> ps;
    for (const auto& a : s.gens) ps.push_back(&a.vperm);
    const auto orb = Orbits(g.size(), ps);
    s.paper_vertex_orbit = static_cast<int>(std::count(orb.begin(), orb.end(), orb[0]));
    const uint64_t hr = GroupOrderFormula(ctx.rho);
    s.paper_order_formula = NrOrderFormula(ctx) * hr;
    std::vector<Perm> perms;
    for (const auto& a : s.gens) perms.push_back(a.vperm);
    // The closure store holds cap permutations of degree |V|.
    const uint64_t cap = std::min<uint64_t>(closure_cap, (uint64_t{1} << 25) / g.size());
    try {
      s.paper_order = ClosureOrder(perms, g.size(), cap).order;
    } catch (const Error& e) {
      if (e.kind() != Error::Kind::kCapExceeded) throw;
      s.paper_order = 0;
    }
  }
  if (with_transvections) {
    const Pencil& base = g.vertices[0];
    for (Mask h : Hyperplanes(ctx)) {
      for (int c : Points(h)) {
        if (g.Find(ApplyTransvection(h, c, base)) < 0) continue;
        Perm p = InducedPerm(g, [&](const Pencil& v) { return ApplyTransvection(h, c, v); });
        Check(!p.empty() && IsIsomorphism(g.graph, g.graph, p),
              "transvection preserving the base component is not an automorphism");
        std::string label = RenderSet(h) + ":" + std::string(1, PointChar(c));
        if (add("transvection", label, std::move(p))) ++s.transvection_count;
      }
    }
  }
  const auto orb = VertexOrbits(s, g.size());
  s.vertex_orbit = static_cast<int>(std::count(orb.begin(), orb.end(), orb[0]));
  return s;
}

nlohmann::json FamilyReport::ToJson() const {
  nlohmann::json j = {{"family", family}, {"triples", triples},
                      {"mode", exhaustive ? "exhaustive" : "sampled"},
                      {"copies_preserved", copies_preserved}, {"pass", pass}};
  if (exhaustive) {
    j["orbits"] = orbits;
  } else {
    j["seed"] = seed;
    j["samples"] = samples;
    j["samples_reached"] = samples_reached;
    j["reached"] = reached;
  }
  return j;
}

nlohmann::json HReport::ToJson() const {
  nlohmann::json fam = nlohmann::json::array();
  for (const auto& f : families) fam.push_back(f.ToJson());
  return {{"families", fam}, {"vertex_transitive", vertex_transitive}, {"pass", pass}};
}

HReport CheckHProperty(const PencilGraph& g, const Decomposition& d,
                       const GeneratorSet& s, const HOptions& opts) {
  HReport rep;
  const SimpleGraph& gr = g.graph;
  const auto vorb = VertexOrbits(s, g.size());
  rep.vertex_transitive =
      std::all_of(vorb.begin(), vorb.end(), [](int x) { return x == 0; });
  const std::vector<int> tail = ArcTails(gr);
  const int64_t arcs = gr.num_arcs();
  auto image = [&](const Perm& p, int64_t a) {
    return gr.ArcIndex(p[tail[a]], p[gr.ArcHead(a)]);
  };
  struct Family {
    const char* name;
    const std::vector<std::vector<int>>* copies;
    const std::vector<int>* arc_copy;
  };
  const Family fams[2] = {{"clique", &d.cliques, &d.arc_clique},
                          {"turan", &d.turans, &d.arc_turan}};
  rep.pass = true;
  for (const auto& fam : fams) {
    FamilyReport fr;
    fr.family = fam.name;
    fr.triples = arcs;
    fr.copies_preserved = CopiesPreserved(*fam.copies, s.gens);
    Check(static_cast<int64_t>(fam.arc_copy->size()) == arcs, "arc map missing");
    fr.exhaustive = arcs <= opts.exhaustive_limit;
    if (fr.exhaustive) {
      std::vector<int> parent(arcs);
      std::iota(parent.begin(), parent.end(), 0);
      for (const auto& a : s.gens) {
        for (int64_t x = 0; x < arcs; ++x) {
          Unite(parent, static_cast<int>(x), static_cast<int>(image(a.vperm, x)));
        }
      }
      std::set<int> roots;
      for (int64_t x = 0; x < arcs; ++x) roots.insert(Root(parent, static_cast<int>(x)));
      fr.orbits = static_cast<int>(roots.size());
      fr.pass = fr.copies_preserved && fr.orbits == 1;
    } else {
      fr.seed = opts.seed;
      fr.samples = opts.samples;
      std::mt19937_64 rng(opts.seed);
      std::vector<int64_t> targets;
      for (int i = 0; i < opts.samples; ++i) {
        targets.push_back(static_cast<int64_t>(rng() % static_cast<uint64_t>(arcs)));
      }
      std::vector<char> seen(arcs, 0);
      std::vector<int64_t> queue = {gr.ArcIndex(0, gr.neighbors(0)[0])};
      seen[queue[0]] = 1;
      auto reached_all = [&] {
        int k = 0;
        for (int64_t t : targets) k += seen[t];
        fr.samples_reached = k;
        return k == static_cast<int>(targets.size());
      };
      size_t head = 0;
      int64_t since_check = 0;
      while (head < queue.size()) {
        const int64_t x = queue[head++];
        for (const auto& a : s.gens) {
          const int64_t y = image(a.vperm, x);
          if (!seen[y]) {
            seen[y] = 1;
            queue.push_back(y);
          }
        }
        if (++since_check >= 4096) {
          since_check = 0;
          if (reached_all()) break;
        }
      }
      reached_all();
      fr.reached = static_cast<int64_t>(queue.size());
      fr.pass = fr.copies_preserved && fr.samples_reached == fr.samples;
    }
    rep.pass = rep.pass && fr.pass;
    rep.families.push_back(fr);
  }
  return rep;
}

ExtendResult ExtendPartialAut(const PencilGraph& g,
                              const std::vector<std::pair<int, int>>& partial,
                              uint64_t node_limit) {
  ExtendOptions o;
  o.refine = false;
  o.node_limit = node_limit;
  return ExtendPartial(g.graph, g.graph, partial, o);
}

nlohmann::json Witness::ToJson() const {
  nlohmann::json m = nlohmann::json::array();
  for (const auto& [a, b] : map_display) m.push_back({a, b});
  return {{"found", found}, {"all_checked", all_checked}, {"copy", copy},
          {"candidates", candidates}, {"extended", extended},
          {"verified", verified}, {"map", m}, {"certificate", certificate.ToJson()}};
}

namespace {

// Automorphisms of a complete multipartite copy fixing two vertices, as maps
// member index -> member index. Simple ones first, then every element.
class CopyAutEnumerator {
 public:
  CopyAutEnumerator(const std::vector<int>& part, int fix_a, int fix_b)
      : part_(part), fa_(fix_a), fb_(fix_b) {
    int t = 0;
    for (int p : part_) t = std::max(t, p + 1);
    members_.assign(t, {});
    for (size_t i = 0; i < part_.size(); ++i) members_[part_[i]].push_back(static_cast<int>(i));
  }

  std::vector<std::vector<int>> Simple() const {
    std::vector<std::vector<int>> out;
    const int n = static_cast<int>(part_.size());
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    out.push_back(id);
    for (const auto& mem : members_) {
      for (size_t i = 0; i < mem.size(); ++i) {
        for (size_t j = i + 1; j < mem.size(); ++j) {
          if (Fixed(mem[i]) || Fixed(mem[j])) continue;
          auto p = id;
          std::swap(p[mem[i]], p[mem[j]]);
          out.push_back(p);
        }
      }
    }
    for (size_t a = 0; a < members_.size(); ++a) {
      for (size_t b = a + 1; b < members_.size(); ++b) {
        if (PartFixed(a) || PartFixed(b)) continue;
        auto p = id;
        for (size_t k = 0; k < members_[a].size(); ++k) {
          p[members_[a][k]] = members_[b][k];
          p[members_[b][k]] = members_[a][k];
        }
        out.push_back(p);
      }
    }
    return out;
  }

  // Calls fn on every automorphism until it returns false or cap is hit.
  // Returns whether the enumeration completed.
  template <typename Fn>
  bool ForEach(uint64_t cap, Fn&& fn) const {
    const int t = static_cast<int>(members_.size());
    std::vector<int> movable;
    for (int a = 0; a < t; ++a) {
      if (!PartFixed(a)) movable.push_back(a);
    }
    std::vector<int> target = movable;
    uint64_t count = 0;
    do {
      std::vector<int> part_img(t);
      std::iota(part_img.begin(), part_img.end(), 0);
      for (size_t k = 0; k < movable.size(); ++k) part_img[movable[k]] = target[k];
      // Within-part bijections as permutations of positions, odometer style.
      std::vector<std::vector<int>> perm(t);
      for (int a = 0; a < t; ++a) {
        perm[a].resize(members_[a].size());
        std::iota(perm[a].begin(), perm[a].end(), 0);
      }
      for (;;) {
        if (Valid(perm)) {
          std::vector<int> p(part_.size());
          for (int a = 0; a < t; ++a) {
            for (size_t k = 0; k < members_[a].size(); ++k) {
              p[members_[a][k]] = members_[part_img[a]][perm[a][k]];
            }
          }
          if (++count > cap) return false;
          if (!fn(p)) return true;
        }
        int a = 0;
        while (a < t && !std::next_permutation(perm[a].begin(), perm[a].end())) ++a;
        if (a == t) break;
      }
    } while (std::next_permutation(target.begin(), target.end()));
    return true;
  }

 private:
  bool Fixed(int m) const { return m == fa_ || m == fb_; }
  bool PartFixed(size_t a) const {
    return static_cast<int>(a) == part_[fa_] || static_cast<int>(a) == part_[fb_];
  }
  bool Valid(const std::vector<std::vector<int>>& perm) const {
    for (int f : {fa_, fb_}) {
      const auto& mem = members_[part_[f]];
      const size_t k = std::find(mem.begin(), mem.end(), f) - mem.begin();
      if (perm[part_[f]][k] != static_cast<int>(k)) return false;
    }
    return true;
  }

  std::vector<int> part_;
  int fa_, fb_;
  std::vector<std::vector<int>> members_;
};

bool IsCopyAut(const SimpleGraph& gr, const std::vector<int>& members,
               const std::vector<int>& p) {
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i + 1; j < members.size(); ++j) {
      if (gr.HasEdge(members[i], members[j]) !=
          gr.HasEdge(members[p[i]], members[p[j]])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Witness NonUhWitness(const PencilGraph& g, const Decomposition& d,
                     uint64_t candidate_cap, uint64_t node_limit) {
  Witness w;
  const SimpleGraph& gr = g.graph;
  const int u = gr.neighbors(0)[0];
  const int copy = d.arc_turan.at(gr.ArcIndex(0, u));
  Check(copy >= 0, "the base arc lies in no Turán copy");
  const auto& members = d.turans[copy];
  const auto& part = d.turan_parts[copy];
  w.copy = d.turan_ids[copy].Display();
  const int ia = static_cast<int>(std::find(members.begin(), members.end(), 0) - members.begin());
  const int ib = static_cast<int>(std::find(members.begin(), members.end(), u) - members.begin());
  CopyAutEnumerator en(part, ia, ib);
  std::set<std::vector<int>> tried;
  bool undecided = false;
  auto attempt = [&](const std::vector<int>& p) {
    if (!tried.insert(p).second) return true;
    Check(IsCopyAut(gr, members, p), "enumerated map is not a copy automorphism");
    ++w.candidates;
    std::vector<std::pair<int, int>> partial;
    for (size_t i = 0; i < members.size(); ++i) partial.emplace_back(members[i], members[p[i]]);
    ExtendResult r = ExtendPartialAut(g, partial, node_limit);
    if (r.found) {
      ++w.extended;
      return true;
    }
    if (!r.exhausted) {
      undecided = true;
      return true;
    }
    w.found = true;
    w.map = partial;
    w.certificate = r;
    return false;
  };
  for (const auto& p : en.Simple()) {
    if (!attempt(p)) break;
  }
  bool complete = true;
  if (!w.found) complete = en.ForEach(candidate_cap, attempt);
  w.all_checked = !w.found && complete && !undecided;
  if (w.found) {
    for (auto [a, b] : w.map) {
      w.map_display.emplace_back(RenderPencil(g.vertices[a]), RenderPencil(g.vertices[b]));
    }
    std::vector<int> p(members.size());
    for (size_t i = 0; i < members.size(); ++i) {
      p[i] = static_cast<int>(std::find(members.begin(), members.end(), w.map[i].second) -
                              members.begin());
    }
    const ExtendResult again = ExtendPartialAut(g, w.map, node_limit);
    w.verified = IsCopyAut(gr, members, p) && p[ia] == ia && p[ib] == ib &&
                 again.exhausted && !again.found;
  }
  return w;
}

nlohmann::json UhSpotCheck::ToJson() const {
  return {{"pairs", pairs}, {"maps", maps}, {"extended", extended}, {"pass", pass}};
}

UhSpotCheck CliqueUhSpotCheck(const PencilGraph& g, const Decomposition& d,
                              int pairs, uint64_t seed) {
  UhSpotCheck out;
  Require(!d.cliques.empty(), "no clique copies");
  Require(d.cliques[0].size() <= 6, "clique copies too large for exhaustive maps");
  std::mt19937_64 rng(seed);
  const uint64_t count = d.cliques.size();
  for (int k = 0; k < pairs; ++k) {
    const auto& a = d.cliques[k == 0 ? 0 : rng() % count];
    const auto& b = d.cliques[k == 0 ? 0 : rng() % count];
    ++out.pairs;
    std::vector<int> img = b;
    std::sort(img.begin(), img.end());
    do {
      std::vector<std::pair<int, int>> partial;
      for (size_t i = 0; i < a.size(); ++i) partial.emplace_back(a[i], img[i]);
      ++out.maps;
      if (ExtendPartialAut(g, partial).found) ++out.extended;
    } while (std::next_permutation(img.begin(), img.end()));
  }
  out.pass = out.maps > 0 && out.extended == out.maps;
  return out;
}

}  // namespace pg
