#include "pencilgraph/pencil.h"

#include <algorithm>
#include <numeric>

#include "pencilgraph/error.h"

namespace pg {

namespace {

void AppendPoints(Key* key, Mask m) {
  while (m) {
    key->push_back(static_cast<char>(Lowest(m)));
    m &= m - 1;
  }
}

}  // namespace

Key Encode(const Pencil& v) {
  Key key;
  AppendPoints(&key, v.a0);
  for (Mask e : v.entries) AppendPoints(&key, e);
  return key;
}

Pencil Decode(const SpaceCtx& ctx, const Key& key) {
  Require(static_cast<int>(key.size()) == ctx.n, "key has the wrong length");
  Pencil v;
  size_t pos = 0;
  for (int k = 0; k < ctx.a0_size; ++k) v.a0 |= Bit(key[pos++]);
  v.entries.resize(ctx.m1);
  for (int i = 0; i < ctx.m1; ++i) {
    for (int k = 0; k < ctx.coset_size; ++k) v.entries[i] |= Bit(key[pos++]);
  }
  return v;
}

bool IsValidPencil(const SpaceCtx& ctx, const Pencil& v) {
  if (Dim(v.a0) != ctx.sigma) return false;
  if (static_cast<int>(v.entries.size()) != ctx.m1) return false;
  const Mask lin = v.a0 | 1;
  Mask seen = v.a0;
  for (Mask e : v.entries) {
    if (!e || (e & seen) || (e & 1)) return false;
    if (Translate(lin, Lowest(e)) != e) return false;
    seen |= e;
  }
  return seen == ctx.all;
}

Pencil BaseVertex(const SpaceCtx& ctx) {
  Pencil v;
  v.a0 = EnumerateSubspaces(ctx, ctx.sigma).front();
  v.entries = CosetsMod(ctx, v.a0);
  return v;
}

void ForEachPencilThrough(const SpaceCtx& ctx, Mask a0,
                          const std::function<bool(const Pencil&)>& fn) {
  const std::vector<Mask> cosets = CosetsMod(ctx, a0);
  std::vector<int> order(cosets.size());
  std::iota(order.begin(), order.end(), 0);
  Pencil v;
  v.a0 = a0;
  v.entries.resize(cosets.size());
  do {
    for (size_t i = 0; i < order.size(); ++i) v.entries[i] = cosets[order[i]];
    if (!fn(v)) return;
  } while (std::next_permutation(order.begin(), order.end()));
}

std::vector<Pencil> PencilsThrough(const SpaceCtx& ctx, Mask a0) {
  std::vector<Pencil> out;
  ForEachPencilThrough(ctx, a0, [&](const Pencil& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

std::string RenderPencil(const Pencil& v) {
  std::string out = "(" + RenderSet(v.a0);
  for (Mask e : v.entries) out += "," + RenderSet(e);
  return out + ")";
}

Pencil ParsePencil(const std::string& s) {
  Require(s.size() >= 2 && s.front() == '(' && s.back() == ')',
          "pencil must be parenthesized");
  Pencil v;
  std::string body = s.substr(1, s.size() - 2);
  size_t start = 0;
  bool first = true;
  while (start <= body.size()) {
    size_t comma = body.find(',', start);
    if (comma == std::string::npos) comma = body.size();
    Mask m = ParseSet(body.substr(start, comma - start));
    if (first) {
      v.a0 = m;
      first = false;
    } else {
      v.entries.push_back(m);
    }
    start = comma + 1;
  }
  return v;
}

}  // namespace pg
