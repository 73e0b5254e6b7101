#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pencilgraph/autnr.h"
#include "pencilgraph/config.h"
#include "pencilgraph/decomp.h"
#include "pencilgraph/error.h"
#include "pencilgraph/export.h"
#include "pencilgraph/graph.h"
#include "pencilgraph/homog.h"
#include "pencilgraph/hrho.h"
#include "pencilgraph/parallel.h"
#include "pencilgraph/report.h"

namespace {

using json = nlohmann::json;

constexpr int kUsage = 2;
constexpr int kCheckFailed = 1;

struct RunConfig {
  std::string command;
  int r = 0;
  int sigma = 0;
  int rho = 0;
  std::string out;
  std::string format;
  uint64_t cap_vertices = pg::kDefaultVertexCap;
  uint64_t seed = pg::kDefaultSeed;
  bool enable_heavy = false;
  bool full = false;
  int threads = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string text;
  bool pass = true;
};

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

void RequireFormat(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw UsageError("format '" + cfg.format + "' not supported by " + cfg.command +
                   " (use " + list + ")");
}

pg::SpaceCtx CaseCtx(const RunConfig& cfg) {
  if (cfg.r == 0 || cfg.sigma == 0) throw UsageError(cfg.command + " needs -r and -s");
  try {
    return pg::SpaceCtx(cfg.r, cfg.sigma);
  } catch (const pg::Error& e) {
    throw UsageError(e.what());
  }
}

int RhoArg(const RunConfig& cfg) {
  int rho = cfg.rho;
  if (rho == 0 && cfg.r && cfg.sigma) rho = CaseCtx(cfg).rho;
  if (rho < 2 || rho > 5) throw UsageError("--rho must lie in [2, 5]");
  if (rho == 5 && !cfg.enable_heavy && cfg.command != "hrho") {
    throw UsageError("rho = 5 needs --enable-heavy");
  }
  return rho;
}

Output CmdBuild(const RunConfig& cfg) {
  RequireFormat(cfg, {"json", "dot", "text"});
  const pg::SpaceCtx ctx = CaseCtx(cfg);
  if (cfg.full && !cfg.enable_heavy && pg::PredictedFullOrder(ctx) > 100000) {
    throw UsageError("full graph of this size needs --enable-heavy");
  }
  const pg::PencilGraph g = cfg.full ? pg::BuildFull(ctx, cfg.cap_vertices)
                                     : pg::BuildComponent(ctx, cfg.cap_vertices);
  if (cfg.format == "dot") return {pg::GraphToDot(g.graph)};
  if (cfg.format == "json") return {pg::GraphToJson(g).dump() + "\n"};
  std::ostringstream os;
  os << "G(" << ctx.r << "," << ctx.sigma << ")" << (cfg.full ? " full" : "") << ": "
     << g.size() << " vertices, degree " << ctx.degree() << ", "
     << g.graph.num_edges() << " edges, " << g.num_components << " component(s)\n"
     << "base vertex " << pg::RenderPencil(g.vertices[0]) << "\n";
  return {os.str()};
}

Output CmdVerify(const RunConfig& cfg) {
  RequireFormat(cfg, {"json", "text"});
  const pg::SpaceCtx ctx = CaseCtx(cfg);
  const pg::PencilGraph g = pg::BuildComponent(ctx, cfg.cap_vertices);
  pg::Decomposition d = pg::EnumerateCopies(g);
  const pg::DecompReport rep = pg::VerifyDecomposition(g, &d);
  return {cfg.format == "text" ? rep.ToText() : Dump(rep.ToJson()), rep.ok};
}

Output CmdAut(const RunConfig& cfg) {
  RequireFormat(cfg, {"json", "text"});
  const pg::SpaceCtx ctx = CaseCtx(cfg);
  const uint64_t formula = pg::NrOrderFormula(ctx);
  if (formula > 100000 && !cfg.enable_heavy) {
    throw UsageError("closure of order " + std::to_string(formula) +
                     " needs --enable-heavy");
  }
  const pg::PencilGraph g = pg::BuildComponent(ctx, cfg.cap_vertices);
  const pg::LocalFrame frame(ctx);
  const auto gens = pg::SynthAll(frame, &g);
  const pg::ClosureResult cl = pg::LocalClosureOrder(frame, gens, uint64_t{1} << 26);
  const bool pass = cl.order == formula;
  if (cfg.format == "text") {
    std::ostringstream os;
    for (const auto& a : gens) {
      os << pg::CategoryChar(a.category) << " " << a.Display()
         << (a.global ? "" : "  (local)") << "\n";
    }
    os << "order " << cl.order << " (formula " << formula << ")\n";
    return {os.str(), pass};
  }
  json list = json::array();
  for (const auto& a : gens) list.push_back(a.ToJson());
  return {Dump({{"r", ctx.r}, {"sigma", ctx.sigma}, {"generators", list},
                {"order", cl.order}, {"formula", formula}, {"pass", pass}}),
          pass};
}

Output CmdHrho(const RunConfig& cfg) {
  RequireFormat(cfg, {"json", "text"});
  const int rho = RhoArg(cfg);
  const json checks = pg::HrhoChecks(rho, cfg.enable_heavy);
  bool pass = true;
  for (const auto& c : checks) pass &= c["status"] != "fail";
  if (cfg.format == "json") return {Dump({{"rho", rho}, {"checks", checks}, {"pass", pass}}), pass};
  std::ostringstream os;
  const pg::APerm j = pg::JRho(rho);
  os << "J" << rho << " = " << j.Display() << "\n"
     << "lower level " << j.LowerLevel() << "\n"
     << "type " << pg::TypeOf(j).display << "\n";
  for (const auto& c : checks) {
    os << c["name"].get<std::string>() << ": " << c["status"].get<std::string>() << "\n";
  }
  return {os.str(), pass};
}

Output CmdCensus(const RunConfig& cfg) {
  if (cfg.format == "text") throw UsageError("census supports csv and json");
  RequireFormat(cfg, {"csv", "json"});
  const int rho = RhoArg(cfg);
  const pg::HGroup h = pg::BuildGroup(rho);
  const pg::Census c = pg::TableCensus(h);
  const bool pass = c.eq1_violations == 0;
  return {cfg.format == "csv" ? c.ToCsv() : Dump(c.ToJson()), pass};
}

Output CmdConfig(const RunConfig& cfg) {
  RequireFormat(cfg, {"json", "dot", "text"});
  const pg::SpaceCtx ctx = CaseCtx(cfg);
  const pg::PencilGraph g = pg::BuildComponent(ctx, cfg.cap_vertices);
  pg::Decomposition d = pg::EnumerateCopies(g);
  pg::VerifyDecomposition(g, &d);
  const pg::IncidenceStructure inc = pg::BuildConfig(g, d);
  const pg::LeviGraph levi = pg::BuildLevi(inc);
  if (cfg.format == "dot") return {pg::LeviToDot(levi)};
  const bool menger = pg::SameEdges(pg::MengerGraph(inc), g.graph);
  json j = {{"params", inc.Params()}, {"menger_equals_graph", menger}};
  bool pass = menger;
  if (inc.m == inc.n && inc.c == inc.d) {
    if (inc.m + inc.n > 1000 && !cfg.enable_heavy) {
      j["duality"] = "skipped: needs --enable-heavy";
    } else {
      const pg::DualityResult dr = pg::SelfDualityCheck(inc);
      j["duality"] = dr.ToJson(true);
      pass &= dr.found && dr.verified;
    }
  } else {
    j["duality"] = "not applicable";
  }
  j["pass"] = pass;
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "configuration " << inc.Params() << "\n"
       << "Menger graph equals G: " << (menger ? "yes" : "no") << "\n";
    if (j["duality"].is_string()) {
      os << "duality: " << j["duality"].get<std::string>() << "\n";
    } else {
      os << "duality: " << (j["duality"]["found"] ? "found" : "not found") << "\n";
    }
    return {os.str(), pass};
  }
  j["levi"] = pg::LeviToJson(levi);
  return {Dump(j), pass};
}

Output CmdHomog(const RunConfig& cfg) {
  RequireFormat(cfg, {"json", "text"});
  const pg::SpaceCtx ctx = CaseCtx(cfg);
  const pg::PencilGraph g = pg::BuildComponent(ctx, cfg.cap_vertices);
  if (g.size() > 2520 && !cfg.enable_heavy) {
    throw UsageError("homogeneity checks on this component need --enable-heavy");
  }
  pg::Decomposition d = pg::EnumerateCopies(g);
  pg::VerifyDecomposition(g, &d);
  const pg::GeneratorSet s = pg::FullGeneratorSet(g);
  pg::HOptions ho;
  ho.seed = cfg.seed;
  const pg::HReport h = pg::CheckHProperty(g, d, s, ho);
  const pg::Witness w = pg::NonUhWitness(g, d);
  const bool pass = h.pass;
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "H property: " << (h.pass ? "pass" : "fail") << "\n";
    for (const auto& f : h.families) {
      os << "  " << f.family << ": " << f.triples << " triples, "
         << (f.exhaustive ? std::to_string(f.orbits) + " orbit(s)"
                          : "sampled " + std::to_string(f.samples_reached) + "/" +
                                std::to_string(f.samples))
         << "\n";
    }
    os << "non-UH witness: "
       << (w.found ? "found on " + w.copy + (w.verified ? ", verified" : "") : "none")
       << "\n";
    return {os.str(), pass};
  }
  json sj = s.ToJson();
  sj.erase("generators");
  return {Dump({{"r", ctx.r}, {"sigma", ctx.sigma}, {"generators", sj},
                {"h_property", h.ToJson()}, {"witness", w.ToJson()}, {"pass", pass}}),
          pass};
}

Output CmdReport(const RunConfig& cfg) {
  RequireFormat(cfg, {"json"});
  const pg::SpaceCtx ctx = CaseCtx(cfg);
  pg::ReportOptions opts;
  opts.cap_vertices = cfg.cap_vertices;
  opts.seed = cfg.seed;
  opts.enable_heavy = cfg.enable_heavy;
  const json rep = pg::RunReport(ctx.r, ctx.sigma, opts);
  return {Dump(rep), rep["pass"].get<bool>()};
}

Output Dispatch(const RunConfig& cfg) {
  if (cfg.command == "build") return CmdBuild(cfg);
  if (cfg.command == "verify") return CmdVerify(cfg);
  if (cfg.command == "aut") return CmdAut(cfg);
  if (cfg.command == "hrho") return CmdHrho(cfg);
  if (cfg.command == "census") return CmdCensus(cfg);
  if (cfg.command == "config") return CmdConfig(cfg);
  if (cfg.command == "homog") return CmdHomog(cfg);
  return CmdReport(cfg);
}

std::string DefaultFormat(const std::string& command) {
  return command == "census" ? "csv" : "json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered-pencil graphs over binary projective space"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"build", "Build the base component (or the whole graph with --full)"},
      {"verify", "Verify the clique and Turan decomposition"},
      {"aut", "Synthesize the stabilizer generators and their closure"},
      {"hrho", "J_rho, types and group checks for one rho"},
      {"census", "Super-type and distance census of H_rho"},
      {"config", "Configuration, Menger and Levi graphs, self-duality"},
      {"homog", "Homogeneity property and non-UH witness"},
      {"report", "All checks for one (r, sigma) as consolidated JSON"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-r", cfg.r, "Projective dimension plus one");
    sub->add_option("-s,--sigma", cfg.sigma, "Pencil subspace dimension");
    sub->add_option("--rho", cfg.rho, "r - sigma, for hrho and census");
    sub->add_option("--out", cfg.out, "Output path (default stdout)");
    sub->add_option("--format", cfg.format, "json, csv, dot or text")
        ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
    sub->add_option("--cap-vertices", cfg.cap_vertices, "Vertex cap");
    sub->add_option("--seed", cfg.seed, "Sampling seed");
    sub->add_flag("--enable-heavy", cfg.enable_heavy, "Allow heavy computations");
    sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    if (name == "build") sub->add_flag("--full", cfg.full, "All pencils, every component");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (cfg.format.empty()) cfg.format = DefaultFormat(cfg.command);
  if (cfg.threads < 0) {
    std::cerr << "error: --threads must be non-negative\n";
    return kUsage;
  }
  pg::SetNumThreads(cfg.threads);

  Output result;
  try {
    result = Dispatch(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const pg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = e.kind() == pg::Error::Kind::kInvalidArgument ||
                       e.kind() == pg::Error::Kind::kCapExceeded;
    return usage ? kUsage : kCheckFailed;
  }

  if (cfg.out.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return kUsage;
    }
    f << result.text;
  }
  return result.pass ? 0 : kCheckFailed;
}
