#include "pencilgraph/autnr.h"

#include <map>
#include <set>

#include "gtest/gtest.h"
#include "pencilgraph/error.h"
#include "pencilgraph/golden.h"
#include "pencilgraph/iso_search.h"

namespace pg {
namespace {

AutoMap FromRow(const SpaceCtx& ctx, const nlohmann::json& row) {
  const GenCategory cat = ParseCategory(row["cat"]);
  const std::string pi = row["pi"];
  const Mask pi_mask = cat == GenCategory::kA ? Bit(PointFromChar(pi[0])) : ParseSet(pi);
  return MakeGenerator(ctx, cat, pi_mask, ParseSet(row["alpha"]));
}

const LocalFrame& Frame(int r, int sigma) {
  static auto* cache = new std::map<std::pair<int, int>, LocalFrame*>();
  auto& slot = (*cache)[{r, sigma}];
  if (!slot) slot = new LocalFrame(SpaceCtx(r, sigma));
  return *slot;
}

TEST(GeneratorTest, ListedDisplays) {
  int n = 0;
  for (const auto& row : Golden()["generators"]) {
    const LocalFrame& f = Frame(row["r"], row["sigma"]);
    AutoMap a = FromRow(f.ctx, row);
    EXPECT_TRUE(ValidateLocal(f, &a)) << row["display"];
    EXPECT_EQ(a.Display(), row["display"].get<std::string>());
    ++n;
  }
  EXPECT_EQ(n, 13);
}

TEST(GeneratorTest, ListedCategoryCFactors) {
  for (const auto& row : Golden()["generator_listed_factors"]) {
    const LocalFrame& f = Frame(row["r"], row["sigma"]);
    AutoMap a = FromRow(f.ctx, row);
    ASSERT_TRUE(ValidateLocal(f, &a));
    const std::string disp = a.Display();
    for (const auto& factor : row["factors"]) {
      EXPECT_NE(disp.find(factor.get<std::string>()), std::string::npos) << disp;
    }
    // The listed alpha cannot carry the factors: pi must lie in alpha.
    const Mask listed = ParseSet(row["alpha_listed"]);
    const Mask pi = ParseSet(row["pi"]);
    EXPECT_TRUE(Dim(listed) != f.ctx.r - 1 || (pi & ~listed) != 0);
  }
}

TEST(GeneratorTest, PsiOfCategoryA) {
  const LocalFrame& f = Frame(3, 1);
  AutoMap a = MakeGenerator(f.ctx, GenCategory::kA, Bit(2), ParseSet("123"));
  ASSERT_TRUE(ValidateLocal(f, &a));
  EXPECT_EQ(a.PhiDisplay(), "[\xE2\x88\x85.2(4 6)(5 7)]");
  EXPECT_EQ(a.PsiDisplay(), "1(2 3)");
  EXPECT_EQ(a.psi, (std::vector<int>{1, 3, 2}));
}

// Group order by plain breadth-first closure over std::set.
uint64_t NaiveClosure(const std::vector<Perm>& gens) {
  std::set<Perm> seen = {IdentityPerm(static_cast<int>(gens.front().size()))};
  std::vector<Perm> queue(seen.begin(), seen.end());
  for (size_t k = 0; k < queue.size(); ++k) {
    for (const Perm& g : gens) {
      Perm p = Compose(queue[k], g);
      if (seen.insert(p).second) queue.push_back(std::move(p));
    }
  }
  return seen.size();
}

TEST(ClosureTest, NrOrders) {
  for (const auto& c : Golden()["cases"]) {
    if (!c.contains("nr_order") || c["r"] == 5) continue;
    const LocalFrame& f = Frame(c["r"], c["sigma"]);
    const auto gens = SynthAll(f);
    const uint64_t want = c["nr_order"];
    EXPECT_EQ(NrOrderFormula(f.ctx), want);
    const ClosureResult cl = LocalClosureOrder(f, gens, 1 << 20);
    EXPECT_EQ(cl.order, want);
    std::vector<Perm> local;
    for (const auto& a : gens) local.push_back(a.local);
    EXPECT_EQ(NaiveClosure(local), want);
  }
}

TEST(ClosureTest, CapIsEnforced) {
  const LocalFrame& f = Frame(4, 1);
  EXPECT_THROW(LocalClosureOrder(f, SynthAll(f), 100), Error);
}

TEST(ClosureTest, PermStore) {
  PermStore store(3);
  const uint16_t a[] = {0, 1, 2}, b[] = {1, 0, 2};
  EXPECT_TRUE(store.Insert(a).second);
  EXPECT_FALSE(store.Insert(a).second);
  EXPECT_TRUE(store.Insert(b).second);
  EXPECT_EQ(store.size(), 2u);
  EXPECT_EQ(store.Find(b), 1);
  EXPECT_EQ(store.Get(1), (Perm{1, 0, 2}));
  EXPECT_EQ(Compose(Perm{1, 2, 0}, Perm{1, 2, 0}), (Perm{2, 0, 1}));
  EXPECT_EQ(Inverse(Perm{1, 2, 0}), (Perm{2, 0, 1}));
  EXPECT_TRUE(IsIdentity(IdentityPerm(5)));
  EXPECT_FALSE(IsPermutation(Perm{0, 0, 1}));
}

// Local actions are automorphisms of the neighbourhood graph, and for
// sigma = 1 every generator carries over to the whole component.
TEST(GeneratorTest, ActionsAreAutomorphisms) {
  for (auto [r, sigma] : {std::pair{3, 1}, {4, 2}, {4, 1}}) {
    const LocalFrame& f = Frame(r, sigma);
    const PencilGraph g = BuildComponent(f.ctx);
    const auto gens = SynthAll(f, &g);
    ASSERT_FALSE(gens.empty());
    for (const auto& a : gens) {
      ASSERT_TRUE(IsPermutation(a.local));
      for (size_t x = 0; x < f.nbrs.size(); ++x) {
        for (size_t y = 0; y < f.nbrs.size(); ++y) {
          ASSERT_EQ(f.adj[x][y], f.adj[a.local[x]][a.local[y]]);
        }
      }
      if (sigma == 1) EXPECT_TRUE(a.global) << a.Display();
      if (a.global) EXPECT_TRUE(IsIsomorphism(g.graph, g.graph, a.vperm));
    }
  }
}

TEST(GeneratorTest, CategoryCounts) {
  const LocalFrame& f = Frame(4, 2);
  for (GenCategory cat : {GenCategory::kA, GenCategory::kB, GenCategory::kC}) {
    SynthStats st;
    const auto gens = SynthGenerators(f, cat, nullptr, &st);
    EXPECT_GT(static_cast<int>(gens.size()), 0) << CategoryChar(cat);
    EXPECT_EQ(st.candidates, static_cast<int>(CandidateParams(f.ctx, cat).size()));
  }
  EXPECT_THROW(ParseCategory("D"), Error);
}

TEST(AffineTest, Blocks) {
  const SpaceCtx ctx(4, 2);
  EXPECT_TRUE(IsAffineBlock(ctx, {ParseSet("45"), ParseSet("1")}));
  EXPECT_FALSE(IsAffineBlock(ctx, {ParseSet("46"), ParseSet("1")}));
}

}  // namespace
}  // namespace pg
