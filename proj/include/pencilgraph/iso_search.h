#ifndef PENCILGRAPH_ISO_SEARCH_H_
#define PENCILGRAPH_ISO_SEARCH_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pencilgraph/simple_graph.h"

namespace pg {

struct ExtendOptions {
  // Optional vertex colors; x may only map to y with src[x] == dst[y].
  const std::vector<int>* src_colors = nullptr;
  const std::vector<int>* dst_colors = nullptr;
  // Run colour refinement on both graphs before searching.
  bool refine = true;
  // 0 means unlimited.
  uint64_t node_limit = 0;
};

struct ExtendResult {
  bool found = false;
  // True when the search space was covered completely. A result with neither
  // flag set hit the node limit.
  bool exhausted = false;
  std::vector<int> map;  // g -> h, when found
  uint64_t nodes = 0;
  uint64_t backtracks = 0;
  int max_depth = 0;

  nlohmann::json ToJson() const;
};

// Completes a partial map to an isomorphism g -> h. The partial map must be
// injective and preserve adjacency and non-adjacency; otherwise the result
// is an immediate exhaustion.
ExtendResult ExtendPartial(const SimpleGraph& g, const SimpleGraph& h,
                           const std::vector<std::pair<int, int>>& partial,
                           const ExtendOptions& opts = {});

// Stable colour refinement of g and h over a shared palette.
void RefineColors(const SimpleGraph& g, const SimpleGraph& h,
                  std::vector<int>* cg, std::vector<int>* ch);

// Whether p is an isomorphism g -> h.
bool IsIsomorphism(const SimpleGraph& g, const SimpleGraph& h,
                   const std::vector<int>& p);

}  // namespace pg

#endif  // PENCILGRAPH_ISO_SEARCH_H_
