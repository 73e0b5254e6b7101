#include "pencilgraph/gf2.h"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "pencilgraph/error.h"

namespace pg {
namespace {

TEST(SpaceCtxTest, DerivedSizes) {
  const SpaceCtx a(3, 1);
  EXPECT_EQ(a.n, 7);
  EXPECT_EQ(a.rho, 2);
  EXPECT_EQ(a.s, 2);
  EXPECT_EQ(a.t, 3);
  EXPECT_EQ(a.m1, 3);
  EXPECT_EQ(a.m0, 4);
  EXPECT_EQ(a.degree(), 12);

  const SpaceCtx b(4, 2);
  EXPECT_EQ(b.m1, 3);
  EXPECT_EQ(b.m0, 12);
  EXPECT_EQ(b.degree(), 36);
  EXPECT_EQ(SpaceCtx(4, 1).degree(), 56);
  EXPECT_EQ(SpaceCtx(5, 2).degree(), 168);
  EXPECT_EQ(SpaceCtx(5, 3).degree(), 84);
}

TEST(SpaceCtxTest, RejectsBadParameters) {
  EXPECT_THROW(SpaceCtx(2, 1), Error);
  EXPECT_THROW(SpaceCtx(4, 3), Error);
  EXPECT_THROW(SpaceCtx(4, 0), Error);
  EXPECT_THROW(SpaceCtx(7, 1), Error);
}

TEST(PointsTest, LinesAndComplements) {
  EXPECT_EQ(LineThird(1, 2), 3);
  EXPECT_EQ(LineThird(5, 9), 12);
  EXPECT_THROW(LineThird(4, 4), Error);
  const SpaceCtx ctx(4, 1);
  EXPECT_EQ(ComplementPoint(ctx, 1), 14);
  EXPECT_THROW(ComplementPoint(ctx, 15), Error);
}

TEST(SubspaceTest, SpanAndDimension) {
  EXPECT_EQ(Span(Bit(1) | Bit(2)), Bit(1) | Bit(2) | Bit(3));
  EXPECT_EQ(Dim(ParseSet("123")), 2);
  EXPECT_EQ(Dim(ParseSet("1234567")), 3);
  EXPECT_EQ(Dim(ParseSet("124")), -1);
  EXPECT_TRUE(IsClosed(0));
  EXPECT_FALSE(IsClosed(ParseSet("12")));
}

TEST(SubspaceTest, EnumerationMatchesGaussianBinomial) {
  for (int r = 3; r <= 5; ++r) {
    for (int d = 0; d <= r; ++d) {
      const auto subs = EnumerateSubspaces(r, d);
      EXPECT_EQ(subs.size(), GaussianBinomial(r, d)) << r << " " << d;
      std::set<Mask> seen(subs.begin(), subs.end());
      EXPECT_EQ(seen.size(), subs.size());
      for (Mask s : subs) EXPECT_EQ(Dim(s), d);
      EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end(), PointsLess));
    }
  }
}

// Counts d-subspaces by brute force over all point sets of the right size.
uint64_t BruteSubspaceCount(int r, int d) {
  const int n = (1 << r) - 1;
  uint64_t count = 0;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) != (1 << d) - 1) continue;
    if (Dim(static_cast<Mask>(s) << 1) == d) ++count;
  }
  return count;
}

TEST(SubspaceTest, GaussianBinomialBruteForce) {
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(GaussianBinomial(4, d), BruteSubspaceCount(4, d));
  EXPECT_EQ(GaussianBinomial(3, 1), 7u);
  EXPECT_EQ(GaussianBinomial(4, 2), 35u);
  EXPECT_EQ(GaussianBinomial(5, 2), 155u);
}

TEST(SubspaceTest, LexicographicallyFirst) {
  EXPECT_EQ(RenderSet(EnumerateSubspaces(4, 1).front()), "1");
  EXPECT_EQ(RenderSet(EnumerateSubspaces(4, 2).front()), "123");
  EXPECT_EQ(RenderSet(EnumerateSubspaces(4, 3).front()), "1234567");
}

TEST(SubspaceTest, CosetsPartitionTheComplement) {
  for (auto [r, sigma] : {std::pair{3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
    const SpaceCtx ctx(r, sigma);
    for (Mask a0 : EnumerateSubspaces(ctx, sigma)) {
      const auto cosets = CosetsMod(ctx, a0);
      ASSERT_EQ(static_cast<int>(cosets.size()), ctx.m1);
      Mask seen = a0;
      for (Mask c : cosets) {
        EXPECT_EQ(Count(c), ctx.coset_size);
        EXPECT_EQ(c & seen, 0u);
        EXPECT_EQ(Translate(a0 | 1, Lowest(c)), c);
        seen |= c;
      }
      EXPECT_EQ(seen, ctx.all);
    }
  }
}

TEST(SubspaceTest, Hyperplanes) {
  for (int r = 3; r <= 6; ++r) {
    const SpaceCtx ctx(r, 1);
    EXPECT_EQ(Hyperplanes(ctx).size(), static_cast<size_t>((1 << r) - 1));
  }
}

TEST(RenderTest, Symbols) {
  EXPECT_EQ(PointChar(9), '9');
  EXPECT_EQ(PointChar(10), 'a');
  EXPECT_EQ(PointChar(15), 'f');
  EXPECT_EQ(PointChar(16), 'g');
  EXPECT_EQ(PointChar(31), 'v');
  EXPECT_EQ(RenderSet(0), "\xE2\x88\x85");
  EXPECT_EQ(ParseSet("\xE2\x88\x85"), 0u);
  EXPECT_THROW(PointFromChar('!'), Error);
  for (Mask m : EnumerateSubspaces(5, 3)) EXPECT_EQ(ParseSet(RenderSet(m)), m);
}

}  // namespace
}  // namespace pg
