#include "pencilgraph/pencil.h"

#include <algorithm>

#include "gtest/gtest.h"
#include "pencilgraph/error.h"

namespace pg {
namespace {

uint64_t Factorial(int k) { return k <= 1 ? 1 : k * Factorial(k - 1); }

TEST(PencilTest, BaseVertices) {
  EXPECT_EQ(RenderPencil(BaseVertex(SpaceCtx(3, 1))), "(1,23,45,67)");
  EXPECT_EQ(RenderPencil(BaseVertex(SpaceCtx(4, 1))), "(1,23,45,67,89,ab,cd,ef)");
  EXPECT_EQ(RenderPencil(BaseVertex(SpaceCtx(4, 2))), "(123,4567,89ab,cdef)");
  EXPECT_EQ(RenderPencil(BaseVertex(SpaceCtx(5, 3))),
            "(1234567,89abcdef,ghijklmn,opqrstuv)");
}

TEST(PencilTest, ParseRenderRoundTrip) {
  const Pencil v = ParsePencil("(2,13,46,57,8a,9b,ce,df)");
  EXPECT_EQ(RenderPencil(v), "(2,13,46,57,8a,9b,ce,df)");
  EXPECT_TRUE(IsValidPencil(SpaceCtx(4, 1), v));
  EXPECT_THROW(ParsePencil("1,23"), Error);
}

TEST(PencilTest, Validity) {
  const SpaceCtx ctx(3, 1);
  EXPECT_FALSE(IsValidPencil(ctx, ParsePencil("(1,23,46,57)")));  // 46 is no coset of 1
  EXPECT_FALSE(IsValidPencil(ctx, ParsePencil("(1,23,45)")));
  EXPECT_FALSE(IsValidPencil(ctx, ParsePencil("(12,34,56,7)")));
  EXPECT_TRUE(IsValidPencil(ctx, ParsePencil("(1,67,23,45)")));
}

TEST(PencilTest, KeysRoundTripAndOrder) {
  for (auto [r, sigma] : {std::pair{3, 1}, {4, 2}, {4, 1}}) {
    const SpaceCtx ctx(r, sigma);
    for (Mask a0 : {EnumerateSubspaces(ctx, sigma).front(), EnumerateSubspaces(ctx, sigma).back()}) {
      const auto all = PencilsThrough(ctx, a0);
      ASSERT_EQ(all.size(), Factorial(ctx.m1));
      std::vector<Key> keys;
      for (const auto& v : all) {
        EXPECT_TRUE(IsValidPencil(ctx, v));
        const Key k = Encode(v);
        EXPECT_EQ(static_cast<int>(k.size()), ctx.n);
        EXPECT_EQ(Decode(ctx, k), v);
        keys.push_back(k);
      }
      // Enumeration order is key order, so keys come out strictly increasing.
      EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
      EXPECT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
    }
  }
}

TEST(PencilTest, EarlyStop) {
  const SpaceCtx ctx(4, 1);
  int seen = 0;
  ForEachPencilThrough(ctx, Bit(1), [&](const Pencil&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5);
}

TEST(PencilTest, DecodeRejectsWrongLength) {
  EXPECT_THROW(Decode(SpaceCtx(3, 1), Key("abc")), Error);
}

}  // namespace
}  // namespace pg
