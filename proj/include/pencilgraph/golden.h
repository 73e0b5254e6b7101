#ifndef PENCILGRAPH_GOLDEN_H_
#define PENCILGRAPH_GOLDEN_H_

#include <string>

#include "json.hpp"

namespace pg {

// Reference values shipped with the library (data/golden.json).
const nlohmann::json& Golden();

// The entry of Golden()["cases"] for (r, sigma), or null.
const nlohmann::json& GoldenCase(int r, int sigma);

// Table I rows for rho with the recorded corrections applied.
nlohmann::json CorrectedTable1(int rho);

}  // namespace pg

#endif  // PENCILGRAPH_GOLDEN_H_
