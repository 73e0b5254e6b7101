#ifndef PENCILGRAPH_REPORT_H_
#define PENCILGRAPH_REPORT_H_

#include <cstdint>

#include "json.hpp"
#include "pencilgraph/graph.h"
#include "pencilgraph/homog.h"

namespace pg {

struct ReportOptions {
  uint64_t cap_vertices = kDefaultVertexCap;
  uint64_t seed = kDefaultSeed;
  bool enable_heavy = false;
};

// Every check for one (r, sigma), compared against the embedded reference
// values where there are any. Each entry of "checks" has a "status" of
// "pass", "fail" or "skipped"; "pass" is true when nothing failed. The
// output depends only on the arguments.
nlohmann::json RunReport(int r, int sigma, const ReportOptions& opts = {});

// The rho-only part of the report: group order, census, J_rho, cosets.
nlohmann::json HrhoChecks(int rho, bool enable_heavy);

}  // namespace pg

#endif  // PENCILGRAPH_REPORT_H_
