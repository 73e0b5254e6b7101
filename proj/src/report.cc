#include "pencilgraph/report.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "pencilgraph/autnr.h"
#include "pencilgraph/config.h"
#include "pencilgraph/decomp.h"
#include "pencilgraph/error.h"
#include "pencilgraph/golden.h"
#include "pencilgraph/hrho.h"

namespace pg {
namespace {

using json = nlohmann::json;

constexpr uint64_t kLightClosure = 100000;
constexpr int kLightHomog = 2520;
constexpr uint64_t kLightFull = 100000;
constexpr int kLightLevi = 1000;

class Checks {
 public:
  void Add(const std::string& name, bool pass, json detail) {
    detail["name"] = name;
    detail["status"] = pass ? "pass" : "fail";
    list_.push_back(std::move(detail));
  }
  void Skip(const std::string& name, const std::string& reason) {
    list_.push_back({{"name", name}, {"status", "skipped"}, {"reason", reason}});
  }
  void Error(const std::string& name, const std::string& what) {
    list_.push_back({{"name", name}, {"status", "fail"}, {"error", what}});
  }
  void Append(const json& more) {
    for (const auto& c : more) list_.push_back(c);
  }
  const json& list() const { return list_; }

 private:
  json list_ = json::array();
};

json Summarize(const json& checks) {
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& c : checks) {
    const std::string s = c["status"];
    if (s == "pass") ++pass;
    else if (s == "fail") ++fail;
    else ++skipped;
  }
  return {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
}

std::set<std::string> AsSet(const json& arr) {
  std::set<std::string> out;
  for (const auto& x : arr) out.insert(x.get<std::string>());
  return out;
}

// Sorted rendered pencils per part.
std::set<std::set<std::string>> PartSets(const TuranCopy& c) {
  std::map<int, std::set<std::string>> parts;
  for (size_t k = 0; k < c.vertices.size(); ++k) {
    parts[c.part[k]].insert(RenderPencil(c.vertices[k]));
  }
  std::set<std::set<std::string>> out;
  for (auto& [_, p] : parts) out.insert(std::move(p));
  return out;
}

std::string CaseKey(const SpaceCtx& ctx) {
  return std::to_string(ctx.r) + "," + std::to_string(ctx.sigma);
}

void CheckOrder(const PencilGraph& g, const json& golden, Checks* out) {
  const SpaceCtx& ctx = g.ctx;
  bool regular = true;
  for (int v = 0; v < g.size(); ++v) regular &= g.graph.degree(v) == ctx.degree();
  bool pass = regular && static_cast<uint64_t>(g.size()) == PredictedComponentOrder(ctx) &&
              g.graph.IsSymmetric() && g.graph.IsIrreflexive();
  json d = {{"vertices", g.size()},
            {"predicted", PredictedComponentOrder(ctx)},
            {"degree", ctx.degree()},
            {"regular", regular}};
  if (!golden.is_null()) {
    pass &= golden["vertices"] == g.size() && golden["degree"] == ctx.degree();
    d["reference"] = {{"vertices", golden["vertices"]}, {"degree", golden["degree"]}};
  }
  out->Add("order", pass, d);
}

void CheckEdgeExample(const PencilGraph& g, const json& golden, Checks* out) {
  if (golden.is_null() || !golden.contains("U")) {
    out->Skip("edge_example", "no reference example");
    return;
  }
  const Pencil v = ParsePencil(golden["v"]);
  const Pencil u = ParsePencil(golden["u"]);
  const auto um = Adjacent(g.ctx, v, u);
  const auto back = Adjacent(g.ctx, u, v);
  const Pencil& nbr = g.vertices[g.graph.neighbors(0)[0]];
  const std::string got = um ? RenderSet(*um) : "";
  const bool pass = v == g.vertices[0] && u == nbr && got == golden["U"] &&
                    back == um;
  out->Add("edge_example", pass,
           {{"v", RenderPencil(v)}, {"u", RenderPencil(u)}, {"U", got},
            {"reference", golden["U"]}});
}

void CheckDecomposition(const PencilGraph& g, Decomposition* d, const json& golden,
                        Checks* out) {
  const DecompReport rep = VerifyDecomposition(g, d);
  bool pass = rep.ok;
  json j = rep.ToJson();
  if (!golden.is_null() && golden.contains("l0")) {
    pass &= golden["l0"] == rep.l0 && golden["l1"] == rep.l1 &&
            golden["m0"] == rep.m0 && golden["m1"] == rep.m1;
    j["reference"] = {{"l0", golden["l0"]}, {"l1", golden["l1"]},
                      {"m0", golden["m0"]}, {"m1", golden["m1"]}};
  }
  out->Add("decomposition", pass, j);
}

void CheckCopyLists(const PencilGraph& g, Checks* out) {
  const SpaceCtx& ctx = g.ctx;
  const std::string key = CaseKey(ctx);
  const json& gold = Golden();
  const Pencil& base = g.vertices[0];
  bool any = false, pass = true;
  json d;
  if (gold["clique_copies_at_base"].contains(key)) {
    any = true;
    std::set<std::string> got;
    for (const auto& id : CliqueCopiesAt(ctx, base)) got.insert(id.Display());
    const bool ok = got == AsSet(gold["clique_copies_at_base"][key]);
    pass &= ok;
    d["clique_copies"] = {{"count", got.size()}, {"match", ok}};
  }
  if (gold["turan_copies_at_base"].contains(key)) {
    any = true;
    std::set<std::string> got;
    for (const auto& id : TuranCopiesAt(ctx, base)) got.insert(id.Display());
    const bool ok = got == AsSet(gold["turan_copies_at_base"][key]);
    pass &= ok;
    d["turan_ids"] = {{"count", got.size()}, {"match", ok}};
  }
  json parts = json::array();
  for (const auto& [label, listed] : gold["turan_parts"].items()) {
    if (label.rfind(key + " ", 0) != 0) continue;
    any = true;
    const std::string disp = label.substr(key.size() + 1);
    // "[W_i]": the copy through the base vertex at entry i.
    const int i = std::stoi(disp.substr(disp.find('_') + 1));
    const TuranCopy copy = TuranCopyThrough(ctx, base, i);
    std::set<std::set<std::string>> want;
    for (const auto& p : listed) want.insert(AsSet(p));
    // The listing shows four vertices of each part.
    bool ok = copy.id.Display() == disp;
    const auto have = PartSets(copy);
    for (const auto& w : want) {
      ok &= std::any_of(have.begin(), have.end(), [&](const auto& h) {
        return std::includes(h.begin(), h.end(), w.begin(), w.end());
      });
    }
    pass &= ok;
    parts.push_back({{"copy", disp}, {"match", ok}});
  }
  if (!parts.empty()) d["turan_parts"] = parts;
  if (!any) {
    out->Skip("copy_lists", "no reference lists");
    return;
  }
  out->Add("copy_lists", pass, d);
}

void CheckGenerators(const SpaceCtx& ctx, const LocalFrame& frame, Checks* out) {
  json rows = json::array();
  bool pass = true;
  auto make = [&](const json& row) {
    const GenCategory cat = ParseCategory(row["cat"]);
    const std::string pi = row["pi"];
    const Mask pi_mask = cat == GenCategory::kA ? Bit(PointFromChar(pi[0])) : ParseSet(pi);
    AutoMap a = MakeGenerator(ctx, cat, pi_mask, ParseSet(row["alpha"]));
    const bool valid = ValidateLocal(frame, &a);
    return std::make_pair(a, valid);
  };
  for (const auto& row : Golden()["generators"]) {
    if (row["r"] != ctx.r || row["sigma"] != ctx.sigma) continue;
    auto [a, valid] = make(row);
    const bool ok = valid && a.Display() == row["display"];
    pass &= ok;
    rows.push_back({{"display", a.Display()}, {"reference", row["display"]}, {"match", ok}});
  }
  for (const auto& row : Golden()["generator_listed_factors"]) {
    if (row["r"] != ctx.r || row["sigma"] != ctx.sigma) continue;
    auto [a, valid] = make(row);
    const std::string disp = a.Display();
    bool ok = valid;
    for (const auto& f : row["factors"]) ok &= disp.find(f.get<std::string>()) != std::string::npos;
    pass &= ok;
    rows.push_back({{"display", disp}, {"listed_alpha", row["alpha_listed"]},
                    {"alpha", row["alpha"]}, {"factors_present", ok}});
  }
  if (rows.empty()) {
    out->Skip("generators", "no reference listings");
    return;
  }
  out->Add("generators", pass, {{"rows", rows}});
}

void CheckNrOrder(const PencilGraph& g, const LocalFrame& frame, const json& golden,
                  bool heavy, Checks* out) {
  const uint64_t formula = NrOrderFormula(g.ctx);
  if (formula > kLightClosure && !heavy) {
    out->Skip("nr_order", "closure of order " + std::to_string(formula) +
                              " needs --enable-heavy");
    return;
  }
  const auto gens = SynthAll(frame, &g);
  int global = 0;
  for (const auto& a : gens) global += a.global;
  const ClosureResult cl = LocalClosureOrder(frame, gens, uint64_t{1} << 26);
  bool pass = cl.order == formula;
  json d = {{"order", cl.order}, {"formula", formula}, {"generators", gens.size()},
            {"global_generators", global}, {"local_only", static_cast<int>(gens.size()) - global}};
  if (!golden.is_null() && golden.contains("nr_order")) {
    pass &= golden["nr_order"] == cl.order;
    d["reference"] = golden["nr_order"];
  }
  out->Add("nr_order", pass, d);
}

void CheckDiameter(const PencilGraph& g, std::optional<bool> vertex_transitive,
                   int h_diameter, Checks* out) {
  const int r = g.ctx.r;
  int diam;
  std::string method;
  if (vertex_transitive.value_or(false)) {
    diam = Diameter(g, true);
    method = "single source, vertex-transitive";
  } else if (g.size() <= 5000) {
    diam = Diameter(g, false);
    method = "all sources";
  } else {
    out->Skip("diameter", "vertex-transitivity not established and graph too large "
                          "for all-sources search");
    return;
  }
  bool pass = diam <= 2 * r - 2;
  json d = {{"diameter", diam}, {"bound", 2 * r - 2}, {"method", method}};
  if (h_diameter >= 0) {
    pass &= diam <= 2 * h_diameter;
    d["cayley_diameter"] = h_diameter;
    d["cayley_bound"] = 2 * h_diameter;
  }
  out->Add("diameter", pass, d);
}

std::optional<bool> CheckHomogeneity(const PencilGraph& g, const Decomposition& d,
                                     const ReportOptions& opts, Checks* out) {
  if (g.size() > kLightHomog && !opts.enable_heavy) {
    out->Skip("homogeneity", "component larger than " + std::to_string(kLightHomog) +
                                 " vertices needs --enable-heavy");
    return std::nullopt;
  }
  const GeneratorSet s = FullGeneratorSet(g);
  HOptions ho;
  ho.seed = opts.seed;
  const HReport h = CheckHProperty(g, d, s, ho);
  const Witness w = NonUhWitness(g, d);
  const bool expect_witness = g.ctx.r > 3;
  bool pass = h.pass && w.found == expect_witness && (w.found ? w.verified : w.all_checked);
  json wj = w.ToJson();
  wj.erase("map");
  json j = {{"generators", s.ToJson()}, {"h_property", h.ToJson()},
            {"witness", wj}, {"witness_expected", expect_witness}};
  j["generators"].erase("generators");
  if (g.ctx.rho == 2) {
    const UhSpotCheck uh = CliqueUhSpotCheck(g, d, 5, opts.seed);
    pass &= uh.pass;
    j["clique_uh_spot_check"] = uh.ToJson();
  }
  out->Add("homogeneity", pass, j);
  return h.vertex_transitive;
}

void CheckConnectivity(const SpaceCtx& ctx, const json& golden, const ReportOptions& opts,
                       Checks* out) {
  const uint64_t full = PredictedFullOrder(ctx);
  if (full > opts.cap_vertices || (full > kLightFull && !opts.enable_heavy)) {
    out->Skip("connectivity", "full graph of order " + std::to_string(full) +
                                  (full > opts.cap_vertices ? " exceeds the vertex cap"
                                                            : " needs --enable-heavy"));
    return;
  }
  const PencilGraph f = BuildFull(ctx, opts.cap_vertices);
  const uint64_t comp = PredictedComponentOrder(ctx);
  bool sizes_ok = true;
  for (int sz : f.component_sizes) sizes_ok &= static_cast<uint64_t>(sz) == comp;
  const bool connected = f.num_components == 1;
  bool pass = sizes_ok && static_cast<uint64_t>(f.num_components) * comp == full &&
              connected == (ctx.rho == 2);
  json d = {{"vertices", f.size()}, {"components", f.num_components},
            {"component_order", comp}, {"equal_components", sizes_ok}};
  if (!golden.is_null() && golden.contains("full_components")) {
    pass &= golden["full_components"] == f.num_components;
    d["reference"] = golden["full_components"];
  }
  out->Add("connectivity", pass, d);
}

void CheckConfiguration(const PencilGraph& g, const Decomposition& d, const json& golden,
                        const ReportOptions& opts, Checks* out) {
  const IncidenceStructure cfg = BuildConfig(g, d);
  const bool menger = SameEdges(MengerGraph(cfg), g.graph);
  bool pass = menger && cfg.c * cfg.m == cfg.d * cfg.n;
  json j = {{"params", cfg.Params()}, {"menger_equals_graph", menger},
            {"levi_vertices", cfg.m + cfg.n}};
  if (!golden.is_null() && golden.contains("config")) {
    pass &= golden["config"] == cfg.Params();
    j["reference"] = golden["config"];
  }
  const bool applicable = cfg.m == cfg.n && cfg.c == cfg.d;
  if (!applicable) {
    j["duality"] = "not applicable";
  } else if (cfg.m + cfg.n > kLightLevi && !opts.enable_heavy) {
    j["duality"] = "skipped: Levi graph needs --enable-heavy";
  } else {
    const DualityResult dr = SelfDualityCheck(cfg);
    pass &= !(g.ctx.sigma == 1) || (dr.found && dr.verified);
    j["duality"] = dr.ToJson();
  }
  out->Add("configuration", pass, j);
}

}  // namespace

json HrhoChecks(int rho, bool enable_heavy) {
  Checks out;
  const std::string key = std::to_string(rho);
  const json& gold = Golden();
  if (rho >= 5 && !enable_heavy) {
    out.Skip("hrho_group", "rho >= 5 needs --enable-heavy");
  } else {
    try {
      const HGroup h = BuildGroup(rho);
      bool pass = h.size() == GroupOrderFormula(rho);
      json d = {{"rho", rho}, {"order", h.size()}, {"formula", GroupOrderFormula(rho)},
                {"cayley_diameter", h.Diameter()}, {"levels", h.LevelSizes()}};
      if (gold["group_orders"].contains(key)) {
        pass &= gold["group_orders"][key] == h.size();
        d["reference"] = gold["group_orders"][key];
      }
      out.Add("hrho_group", pass, d);

      const Census c = TableCensus(h);
      const json table = CorrectedTable1(rho);
      bool census_pass = c.eq1_violations == 0;
      json mismatches = json::array();
      if (!table.empty()) {
        std::map<std::string, const CensusRow*> by_st;
        for (const auto& row : c.rows) by_st[row.super_type] = &row;
        census_pass &= c.rows.size() == table.size();
        for (const auto& row : table) {
          auto it = by_st.find(row["st"]);
          if (it == by_st.end() || it->second->count != row["sum"] ||
              it->second->d != row["d"] || !it->second->d_constant) {
            mismatches.push_back(row["st"]);
          }
        }
        census_pass &= mismatches.empty();
      }
      json cj = c.ToJson();
      cj["rows_checked"] = table.size();
      cj["mismatches"] = mismatches;
      out.Add("table1_census", census_pass, cj);

      if (rho >= 3) {
        const HGroup lower = BuildGroup(rho - 1);
        const CosetReport cr = AnalyzeCosets(h, lower);
        const int hh = (1 << (rho - 1)) - 1, q = 1 << (rho - 2);
        const int classified = 1 + 2 * hh + q * hh;
        bool cpass = cr.index == cr.expected_index && cr.classified == classified &&
                     cr.reps_distinct;
        if (gold["coset_index"].contains(key)) cpass &= gold["coset_index"][key] == cr.index;
        json col_mismatch = json::array();
        for (const auto& row : table) {
          for (const char* col : {"a", "b", "c", "d", "e"}) {
            const uint64_t want = row["cols"].value(col, uint64_t{0});
            uint64_t have = 0;
            auto ci = cr.column.find(col);
            if (ci != cr.column.end()) {
              auto si = ci->second.find(row["st"].get<std::string>());
              if (si != ci->second.end()) have = si->second;
            }
            if (have != want) {
              col_mismatch.push_back({{"super_type", row["st"]}, {"column", col},
                                      {"computed", have}, {"reference", want}});
            }
          }
        }
        cpass &= col_mismatch.empty();
        json crj = cr.ToJson();
        crj["classified_expected"] = classified;
        crj["column_mismatches"] = col_mismatch;
        out.Add("cosets", cpass, crj);
      }
    } catch (const std::exception& e) {
      out.Error("hrho_group", e.what());
    }
  }

  const APerm j = JRho(rho);
  const std::vector<int> f = FFormula(rho);
  std::string f_lower;
  for (size_t i = 1; i < f.size(); ++i) f_lower.push_back(PointChar(f[i]));
  bool jpass = f_lower == j.LowerLevel();
  json jd = {{"cycles", j.Display()}, {"lower", j.LowerLevel()}, {"f_formula", f_lower}};
  if (gold["j_rho"].contains(key)) {
    const auto& ref = gold["j_rho"][key];
    jpass &= ref["cycles"] == j.Display() && ref["lower"] == j.LowerLevel();
    jd["reference"] = ref;
  }
  json types = json::array();
  auto type_row = [&](const std::string& name, const APerm& p, const std::string& want) {
    const TypeExpr t = TypeOf(p);
    const bool ok = t.ok && t.display == want;
    types.push_back({{"element", name}, {"type", t.display}, {"reference", want}, {"match", ok}});
    return ok;
  };
  const std::string jname = "J" + key;
  if (gold["types"].contains(jname)) jpass &= type_row(jname, j, gold["types"][jname]);
  if (rho == 3) jpass &= type_row("w3(2)", WRho(3, 2), gold["types"]["w3(2)"]);
  if (rho == 5) {
    int i = 1;
    for (const auto& k : gold["w5_even_subscripts"]) {
      const std::string want = "(31_" + std::to_string(k.get<int>()) + ")";
      jpass &= type_row("w5(" + std::to_string(2 * i) + ")", WRho(5, 2 * i), want);
      ++i;
    }
  }
  jd["types"] = types;
  out.Add("j_rho", jpass, jd);
  return out.list();
}

json RunReport(int r, int sigma, const ReportOptions& opts) {
  const SpaceCtx ctx(r, sigma);
  const json& golden = GoldenCase(r, sigma);
  Checks out;
  int h_diameter = -1;
  const json hr = HrhoChecks(ctx.rho, opts.enable_heavy);
  for (const auto& c : hr) {
    if (c["name"] == "hrho_group" && c.contains("cayley_diameter")) {
      h_diameter = c["cayley_diameter"];
    }
  }

  PencilGraph g(ctx);
  try {
    g = BuildComponent(ctx, opts.cap_vertices);
  } catch (const pg::Error& e) {
    out.Error("order", e.what());
    out.Append(hr);
    return {{"r", r}, {"sigma", sigma}, {"checks", out.list()},
            {"summary", Summarize(out.list())}, {"pass", false}};
  }
  CheckOrder(g, golden, &out);
  CheckEdgeExample(g, golden, &out);
  Decomposition d = EnumerateCopies(g);
  CheckDecomposition(g, &d, golden, &out);
  CheckCopyLists(g, &out);
  const LocalFrame frame(ctx);
  CheckGenerators(ctx, frame, &out);
  CheckNrOrder(g, frame, golden, opts.enable_heavy, &out);
  out.Append(hr);
  const std::optional<bool> vt = CheckHomogeneity(g, d, opts, &out);
  CheckDiameter(g, vt, h_diameter, &out);
  CheckConnectivity(ctx, golden, opts, &out);
  CheckConfiguration(g, d, golden, opts, &out);

  const json summary = Summarize(out.list());
  return {{"r", r},
          {"sigma", sigma},
          {"seed", opts.seed},
          {"enable_heavy", opts.enable_heavy},
          {"cap_vertices", opts.cap_vertices},
          {"checks", out.list()},
          {"summary", summary},
          {"pass", summary["fail"] == 0}};
}

}  // namespace pg
