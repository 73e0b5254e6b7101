#include "pencilgraph/golden.h"

namespace pg {
namespace {

#include "golden_data.inc"

const nlohmann::json kNull;

}  // namespace

const nlohmann::json& Golden() {
  static const nlohmann::json* data =
      new nlohmann::json(nlohmann::json::parse(kGoldenJson));
  return *data;
}

const nlohmann::json& GoldenCase(int r, int sigma) {
  for (const auto& c : Golden()["cases"]) {
    if (c["r"] == r && c["sigma"] == sigma) return c;
  }
  return kNull;
}

nlohmann::json CorrectedTable1(int rho) {
  const std::string key = std::to_string(rho);
  const auto& table = Golden()["table1"];
  if (!table.contains(key)) return nlohmann::json::array();
  nlohmann::json rows = table[key];
  for (const auto& fix : Golden()["table1_corrections"]) {
    if (fix["rho"] != rho) continue;
    for (auto& row : rows) {
      if (row["st"] == fix["st"]) row["cols"][fix["col"].get<std::string>()] = fix["value"];
    }
  }
  return rows;
}

}  // namespace pg
