#include "pencilgraph/autnr.h"

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>

#include "pencilgraph/error.h"
#include "pencilgraph/parallel.h"

namespace pg {

namespace {

Mask BaseA0(const SpaceCtx& ctx) { return Bit(ctx.coset_size) - 2; }

// Cosets of theta + {0} other than itself.
std::vector<Mask> ThetaBlocks(const SpaceCtx& ctx, Mask theta) {
  std::vector<Mask> out;
  const Mask lin = theta | 1;
  Mask rest = ctx.all & ~theta;
  while (rest) {
    const Mask b = Translate(lin, Lowest(rest));
    out.push_back(b);
    rest &= ~b;
  }
  return out;
}

std::vector<Mask> SubspacesIn(const SpaceCtx& ctx, int d, Mask within) {
  std::vector<Mask> out;
  for (Mask s : EnumerateSubspaces(ctx, d)) {
    if ((s & within) == s) out.push_back(s);
  }
  return out;
}

// Translate of a theta-block by any point of chi; chi is a theta-coset, so
// the result does not depend on the point.
Mask Shift(Mask block, Mask chi) { return Translate(block, Lowest(chi)); }

void AddFactor(AutoMap* a, Mask theta, Mask chi, const SpaceCtx& ctx,
               Mask alpha) {
  PhiFactor f{theta, chi, {}};
  for (Mask b : ThetaBlocks(ctx, theta)) {
    if (b & alpha) continue;
    const Mask c = Shift(b, chi);
    if (Lowest(b) < Lowest(c)) f.pairs.emplace_back(b, c);
  }
  if (!f.pairs.empty()) a->factors.push_back(std::move(f));
}

std::optional<Pencil> TryApply(const SpaceCtx& ctx, const AutoMap& a,
                               const Pencil& v) {
  Pencil w;
  w.a0 = ApplyBlocks(a, v.a0);
  w.entries.assign(ctx.m1, 0);
  for (int i = 0; i < ctx.m1; ++i) {
    w.entries[a.psi[i] - 1] = ApplyBlocks(a, v.entries[i]);
  }
  if (!IsValidPencil(ctx, w)) return std::nullopt;
  return w;
}

Mask Transvect(Mask s, Mask alpha, int c) {
  return (s & alpha) | Translate(s & ~alpha, c);
}

std::optional<Pencil> TryApplyLift(const SpaceCtx& ctx, const AutoMap& a,
                                   const Pencil& v) {
  Pencil w;
  w.a0 = Transvect(v.a0, a.alpha, a.lift_center);
  w.entries.assign(ctx.m1, 0);
  for (int i = 0; i < ctx.m1; ++i) {
    w.entries[a.psi[i] - 1] = Transvect(v.entries[i], a.alpha, a.lift_center);
  }
  if (!IsValidPencil(ctx, w)) return std::nullopt;
  return w;
}

std::optional<Pencil> Act(const SpaceCtx& ctx, const AutoMap& a,
                          const Pencil& v) {
  return a.lift_center ? TryApplyLift(ctx, a, v) : TryApply(ctx, a, v);
}

bool LocalAction(const LocalFrame& f, const AutoMap& a, Perm* out) {
  auto img = Act(f.ctx, a, f.base);
  if (!img || !(*img == f.base)) return false;
  const size_t d = f.nbrs.size();
  Perm p(d);
  std::vector<char> hit(d, 0);
  for (size_t i = 0; i < d; ++i) {
    auto w = Act(f.ctx, a, f.nbrs[i]);
    if (!w) return false;
    const int s = f.Slot(*w);
    if (s < 0 || hit[s]) return false;
    hit[s] = 1;
    p[i] = s;
  }
  *out = std::move(p);
  return true;
}

bool GlobalAction(const PencilGraph& g, const AutoMap& a, Perm* out) {
  const int n = g.size();
  Perm p(n, -1);
  std::atomic<bool> ok{true};
  ParallelFor(n, [&](size_t b, size_t e) {
    for (size_t v = b; v < e && ok; ++v) {
      auto w = Act(g.ctx, a, g.vertices[v]);
      const int id = w ? g.Find(*w) : -1;
      if (id < 0) ok = false;
      p[v] = id;
    }
  });
  if (!ok || !IsPermutation(p)) return false;
  ParallelFor(n, [&](size_t b, size_t e) {
    for (size_t v = b; v < e && ok; ++v) {
      for (int w : g.graph.neighbors(static_cast<int>(v))) {
        if (!g.graph.HasEdge(p[v], p[w])) {
          ok = false;
          break;
        }
      }
    }
  });
  if (!ok) return false;
  *out = std::move(p);
  return true;
}

// Least c in alpha whose transvection realizes every block transposition and
// the validated neighborhood action.
int FindLift(const LocalFrame& f, const AutoMap& a) {
  for (int c : Points(a.alpha)) {
    bool fits = true;
    for (const auto& [x, y] : a.map) {
      if (Transvect(x, a.alpha, c) != y) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    AutoMap t = a;
    t.lift_center = c;
    Perm p;
    if (LocalAction(f, t, &p) && p == a.local) return c;
  }
  return 0;
}

}  // namespace

bool IsAffineBlock(const SpaceCtx& ctx, const AffineBlock& b) {
  if (b.points & b.theta) return false;
  if (Dim(b.theta) != ctx.sigma - 1) return false;
  const Mask u = b.points | b.theta;
  return IsClosed(u) && Count(u) == ctx.a0_size &&
         Count(b.points) == ctx.coset_size / 2;
}

AffineBlock AffineDifference(const AffineBlock& a, const AffineBlock& b) {
  Require(a.theta == b.theta, "affine blocks have different parts at infinity");
  Require(a.points && b.points && !(a.points & b.points),
          "affine blocks must be nonempty and disjoint");
  return {Translate(b.points, Lowest(a.points)), a.theta};
}

char CategoryChar(GenCategory c) {
  switch (c) {
    case GenCategory::kA: return 'A';
    case GenCategory::kB: return 'B';
    case GenCategory::kC: return 'C';
  }
  return '?';
}

GenCategory ParseCategory(const std::string& s) {
  if (s == "A" || s == "a") return GenCategory::kA;
  if (s == "B" || s == "b") return GenCategory::kB;
  if (s == "C" || s == "c") return GenCategory::kC;
  Fail(Error::Kind::kInvalidArgument, "unknown generator category: " + s);
}

std::string AutoMap::PhiDisplay() const {
  if (factors.empty()) return "()";
  std::string out;
  for (const auto& f : factors) {
    out += "[" + RenderSet(f.theta) + "." + RenderSet(f.chi);
    for (const auto& [x, y] : f.pairs) {
      out += "(" + RenderSet(x) + " " + RenderSet(y) + ")";
    }
    out += "]";
  }
  return out;
}

std::string AutoMap::PsiDisplay() const {
  std::string cycles;
  for (size_t i = 0; i < psi.size(); ++i) {
    const int j = psi[i] - 1;
    if (j > static_cast<int>(i)) {
      cycles += "(" + std::string(1, PointChar(static_cast<int>(i) + 1)) + " " +
                std::string(1, PointChar(j + 1)) + ")";
    }
  }
  if (cycles.empty()) return "()";
  return std::string(1, PointChar(psi_pivot)) + cycles;
}

std::string AutoMap::Display() const { return PhiDisplay() + "." + PsiDisplay(); }

nlohmann::json AutoMap::ToJson() const {
  nlohmann::json j;
  j["category"] = std::string(1, CategoryChar(category));
  j["pi"] = RenderSet(pi);
  j["alpha"] = RenderSet(alpha);
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : factors) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [x, y] : f.pairs) pairs.push_back({RenderSet(x), RenderSet(y)});
    fs.push_back({{"theta", RenderSet(f.theta)}, {"chi", RenderSet(f.chi)},
                  {"transpositions", pairs}});
  }
  j["phi"] = fs;
  j["psi"] = PsiDisplay();
  j["display"] = Display();
  if (lift_center) j["lift_center"] = std::string(1, PointChar(lift_center));
  j["global"] = global;
  return j;
}

Mask ApplyBlocks(const AutoMap& a, Mask s) {
  Mask moved = 0, image = 0;
  for (const auto& [from, to] : a.map) {
    if ((from & s) == from) {
      moved |= from;
      image |= to;
    }
  }
  return (s & ~moved) | image;
}

Pencil Apply(const SpaceCtx& ctx, const AutoMap& a, const Pencil& v) {
  auto w = Act(ctx, a, v);
  Check(w.has_value(), "automorphism image of " + RenderPencil(v) +
                           " is not a valid pencil");
  return *w;
}

AutoMap MakeGenerator(const SpaceCtx& ctx, GenCategory cat, Mask pi,
                      Mask alpha) {
  const Mask p = BaseA0(ctx);
  Require(Dim(alpha) == ctx.r - 1, "alpha must be a hyperplane");
  AutoMap a;
  a.category = cat;
  a.pi = pi;
  a.alpha = alpha;
  a.psi.resize(ctx.m1);
  for (int i = 0; i < ctx.m1; ++i) a.psi[i] = i + 1;

  switch (cat) {
    case GenCategory::kA: {
      Require(Count(pi) == 1, "category A takes a point");
      const int pt = Lowest(pi);
      Require((alpha & (p | pi)) == (p | pi), "alpha must contain pi and A0");
      for (Mask theta : SubspacesIn(ctx, ctx.sigma - 1, p)) {
        if (theta & pi) continue;
        AddFactor(&a, theta, Translate(theta | 1, pt), ctx, alpha);
      }
      a.psi_pivot = pt >> ctx.sigma;
      for (const auto& f : a.factors) {
        for (const auto& [x, y] : f.pairs) {
          const int i = Lowest(x) >> ctx.sigma, j = Lowest(y) >> ctx.sigma;
          Check(i >= 1 && j >= 1, "block inside the base A0");
          if (i == j) continue;
          Check(a.psi[i - 1] == i || a.psi[i - 1] == j,
                "blocks induce inconsistent entry moves");
          a.psi[i - 1] = j;
          a.psi[j - 1] = i;
        }
      }
      break;
    }
    case GenCategory::kB: {
      Require(Dim(pi) == ctx.sigma - 1 && (pi & p) == pi,
              "category B takes a (sigma-1)-subspace of A0");
      Require((alpha & p) == p, "alpha must contain A0");
      AddFactor(&a, pi, p & ~pi, ctx, alpha);
      break;
    }
    case GenCategory::kC: {
      Require(Dim(pi) == ctx.sigma - 1 && (pi & p) == pi,
              "category C takes a (sigma-1)-subspace of A0");
      Require((alpha & pi) == pi, "alpha must contain pi");
      if (ctx.sigma == 1) {
        if ((alpha & p) == p) AddFactor(&a, 0, p, ctx, alpha);
        break;
      }
      // Parts at infinity meet pi in its least (sigma-2)-subspace.
      const Mask core = SubspacesIn(ctx, ctx.sigma - 2, pi).front();
      for (Mask theta : SubspacesIn(ctx, ctx.sigma - 1, alpha)) {
        if ((theta & pi) != core) continue;
        const Mask span = Span(theta | pi);
        AddFactor(&a, theta, span & ~theta, ctx, alpha);
      }
      break;
    }
  }
  for (const auto& f : a.factors) {
    for (const auto& [x, y] : f.pairs) {
      a.map.emplace_back(x, y);
      a.map.emplace_back(y, x);
    }
  }
  return a;
}

std::vector<std::pair<Mask, Mask>> CandidateParams(const SpaceCtx& ctx,
                                                   GenCategory cat) {
  const Mask p = BaseA0(ctx);
  std::vector<std::pair<Mask, Mask>> out;
  const auto& hyper = Hyperplanes(ctx);
  switch (cat) {
    case GenCategory::kA:
      for (int pt = 1; pt <= ctx.n; ++pt) {
        for (Mask h : hyper) {
          const Mask need = p | Bit(pt);
          if ((h & need) == need) out.emplace_back(Bit(pt), h);
        }
      }
      break;
    case GenCategory::kB:
    case GenCategory::kC:
      for (Mask theta : SubspacesIn(ctx, ctx.sigma - 1, p)) {
        for (Mask h : hyper) {
          const Mask need = (cat == GenCategory::kB || ctx.sigma == 1) ? p : theta;
          if ((h & need) == need) out.emplace_back(theta, h);
        }
      }
      break;
  }
  return out;
}

LocalFrame::LocalFrame(const SpaceCtx& c) : ctx(c), base(BaseVertex(c)) {
  nbrs = Neighbors(ctx, base);
  for (const auto& w : nbrs) keys.push_back(Encode(w));
  const size_t d = nbrs.size();
  adj.assign(d, std::vector<char>(d, 0));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = i + 1; j < d; ++j) {
      adj[i][j] = adj[j][i] = Adjacent(ctx, nbrs[i], nbrs[j]).has_value();
    }
  }
}

int LocalFrame::Slot(const Pencil& p) const {
  const Key k = Encode(p);
  auto it = std::lower_bound(keys.begin(), keys.end(), k);
  if (it == keys.end() || *it != k) return -1;
  return static_cast<int>(it - keys.begin());
}

bool ValidateLocal(const LocalFrame& f, AutoMap* a) {
  AutoMap blocks = *a;
  blocks.lift_center = 0;
  Perm p;
  if (!LocalAction(f, blocks, &p)) return false;
  const size_t d = p.size();
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = i + 1; j < d; ++j) {
      if (f.adj[i][j] != f.adj[p[i]][p[j]]) return false;
    }
  }
  a->local = std::move(p);
  a->lift_center = FindLift(f, *a);
  return true;
}

bool ValidateGlobal(const PencilGraph& g, AutoMap* a) {
  Perm p;
  if (!GlobalAction(g, *a, &p)) {
    if (!a->lift_center) return false;
    AutoMap blocks = *a;
    blocks.lift_center = 0;
    if (!GlobalAction(g, blocks, &p)) return false;
    a->lift_center = 0;
  }
  a->vperm = std::move(p);
  a->global = true;
  return true;
}

std::vector<AutoMap> SynthGenerators(const LocalFrame& f, GenCategory cat,
                                     const PencilGraph* g, SynthStats* stats) {
  SynthStats st;
  std::vector<AutoMap> out;
  std::set<Perm> seen;
  for (const auto& [pi, alpha] : CandidateParams(f.ctx, cat)) {
    ++st.candidates;
    AutoMap a = MakeGenerator(f.ctx, cat, pi, alpha);
    if (a.factors.empty()) {
      ++st.empty;
      continue;
    }
    if (!ValidateLocal(f, &a)) {
      ++st.rejected;
      continue;
    }
    if (IsIdentity(a.local)) {
      ++st.identity;
      continue;
    }
    if (!seen.insert(a.local).second) {
      ++st.duplicates;
      continue;
    }
    if (g) ValidateGlobal(*g, &a);
    out.push_back(std::move(a));
  }
  if (stats) *stats = st;
  return out;
}

std::vector<AutoMap> SynthAll(const LocalFrame& f, const PencilGraph* g) {
  std::vector<AutoMap> out;
  std::set<Perm> seen;
  for (GenCategory c : {GenCategory::kA, GenCategory::kB, GenCategory::kC}) {
    for (auto& a : SynthGenerators(f, c, g)) {
      if (seen.insert(a.local).second) out.push_back(std::move(a));
    }
  }
  return out;
}

uint64_t NrOrderFormula(const SpaceCtx& ctx) {
  const int sigma = ctx.sigma, rho = ctx.rho;
  Require(sigma > 0 && rho > 1, "formula needs sigma > 0 and rho > 1");
  const int last = rho == 2 ? 0 : std::max(rho - 3, 0);
  const int a = (1 << (sigma + 1)) - 1 + (rho - 2) * ((1 << sigma) + 1) + last;
  uint64_t v = uint64_t{1} << a;
  for (int i = 1; i <= rho; ++i) v *= (uint64_t{1} << i) - 1;
  for (int i = 2; i < (1 << sigma); ++i) v *= static_cast<uint64_t>(i);
  return v;
}

ClosureResult LocalClosureOrder(const LocalFrame& f,
                                const std::vector<AutoMap>& gens,
                                uint64_t cap) {
  std::vector<Perm> perms;
  for (const auto& a : gens) perms.push_back(a.local);
  return ClosureOrder(perms, static_cast<int>(f.nbrs.size()), cap);
}

ClosureResult GlobalClosureOrder(const PencilGraph& g,
                                 const std::vector<AutoMap>& gens,
                                 uint64_t cap) {
  std::vector<Perm> perms;
  for (const auto& a : gens) {
    Require(a.global, "generator does not act on the whole graph");
    perms.push_back(a.vperm);
  }
  return ClosureOrder(perms, g.size(), cap);
}

}  // namespace pg
