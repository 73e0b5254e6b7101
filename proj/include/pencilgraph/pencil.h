#ifndef PENCILGRAPH_PENCIL_H_
#define PENCILGRAPH_PENCIL_H_

#include <functional>
#include <string>
#include <vector>

#include "pencilgraph/gf2.h"

namespace pg {

// A sigma-subspace A0 together with an ordering of the cosets of A0 + {0}.
struct Pencil {
  Mask a0 = 0;
  std::vector<Mask> entries;

  bool operator==(const Pencil& o) const {
    return a0 == o.a0 && entries == o.entries;
  }
};

// Canonical key: n bytes, the sorted points of A0 followed by the sorted
// points of each entry. Byte order of keys is lexicographic pencil order.
using Key = std::string;

Key Encode(const Pencil& v);
Pencil Decode(const SpaceCtx& ctx, const Key& key);

bool IsValidPencil(const SpaceCtx& ctx, const Pencil& v);

Pencil BaseVertex(const SpaceCtx& ctx);

// Calls fn on every ordering of the cosets of a0, in lexicographic order.
// Stops early when fn returns false.
void ForEachPencilThrough(const SpaceCtx& ctx, Mask a0,
                          const std::function<bool(const Pencil&)>& fn);
std::vector<Pencil> PencilsThrough(const SpaceCtx& ctx, Mask a0);

// "(1,23,45,67)".
std::string RenderPencil(const Pencil& v);
Pencil ParsePencil(const std::string& s);

}  // namespace pg

#endif  // PENCILGRAPH_PENCIL_H_
