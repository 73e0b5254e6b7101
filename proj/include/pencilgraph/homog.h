#ifndef PENCILGRAPH_HOMOG_H_
#define PENCILGRAPH_HOMOG_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pencilgraph/decomp.h"
#include "pencilgraph/graph.h"
#include "pencilgraph/hrho.h"
#include "pencilgraph/iso_search.h"
#include "pencilgraph/perm_closure.h"

namespace pg {

constexpr uint64_t kDefaultSeed = 20240611;

// An automorphism of a built component, as a vertex permutation.
struct GraphAut {
  std::string kind;   // "N", "psi" or "transvection"
  std::string label;
  Perm vperm;
};

// Entry positions permuted by psi: w'_{psi(i)} = w_i.
Pencil ApplyPsi(const APerm& psi, const Pencil& v);
// x -> x ^ c off the hyperplane h, applied to every point of v.
Pencil ApplyTransvection(Mask h, int c, const Pencil& v);

struct GeneratorSet {
  std::vector<GraphAut> gens;
  int n_count = 0;
  int n_local_only = 0;  // N-generators with no whole-graph action
  int psi_count = 0;
  int transvection_count = 0;
  // Vertex orbit of the base vertex under the N- and psi-generators alone.
  int paper_vertex_orbit = 0;
  uint64_t paper_order = 0;  // 0 when not computed
  uint64_t paper_order_formula = 0;  // |N| |H_rho|
  int vertex_orbit = 0;  // under all generators

  nlohmann::json ToJson() const;
};

// The whole-graph N-generators, the pure-psi maps for the (Q,a)-generators of
// H_rho, and the transvections that preserve the component. A pure-psi map
// that is not an automorphism is a hard error.
GeneratorSet FullGeneratorSet(const PencilGraph& g, bool with_transvections = true,
                              uint64_t closure_cap = 1 << 20);

// Orbit label per object (its least member) under the permutations.
std::vector<int> Orbits(int n, const std::vector<const Perm*>& gens);
std::vector<int> VertexOrbits(const GeneratorSet& s, int n);

struct FamilyReport {
  std::string family;  // "clique" or "turan"
  int64_t triples = 0;
  bool exhaustive = true;
  uint64_t seed = 0;
  int samples = 0;
  int orbits = 0;         // exhaustive mode
  int64_t reached = 0;    // sampled mode: triples seen from the reference
  int samples_reached = 0;
  bool copies_preserved = true;
  bool pass = false;

  nlohmann::json ToJson() const;
};

struct HReport {
  std::vector<FamilyReport> families;
  bool vertex_transitive = false;
  bool pass = false;
  nlohmann::json ToJson() const;
};

struct HOptions {
  // Exhaustive when the number of arcs is at most this, sampled otherwise.
  int64_t exhaustive_limit = 20000;
  int samples = 500;
  uint64_t seed = kDefaultSeed;
};

// (copy, arc) triples of each family form one orbit. Every edge lies in
// exactly one copy of each family, so a triple is named by its arc.
HReport CheckHProperty(const PencilGraph& g, const Decomposition& d,
                       const GeneratorSet& s, const HOptions& opts = {});

// Extends a partial map on vertex indices of g to an automorphism.
ExtendResult ExtendPartialAut(const PencilGraph& g,
                              const std::vector<std::pair<int, int>>& partial,
                              uint64_t node_limit = 0);

struct Witness {
  bool found = false;
  bool all_checked = false;  // every candidate was decided
  std::string copy;
  int candidates = 0;
  int extended = 0;
  std::vector<std::pair<int, int>> map;  // vertex index pairs
  std::vector<std::pair<std::string, std::string>> map_display;
  ExtendResult certificate;
  bool verified = false;  // copy automorphism re-checked, exhaustion re-run

  nlohmann::json ToJson() const;
};

// Automorphisms of the Turán copy holding the arc (v, u), u the least
// neighbour of the base vertex, fixing both ends; the first that does not
// extend. Transpositions and part swaps are tried before the rest.
Witness NonUhWitness(const PencilGraph& g, const Decomposition& d,
                     uint64_t candidate_cap = 100000, uint64_t node_limit = 0);

struct UhSpotCheck {
  int pairs = 0;
  int maps = 0;
  int extended = 0;
  bool pass = false;
  nlohmann::json ToJson() const;
};

// Every bijection between sampled pairs of clique copies extends.
UhSpotCheck CliqueUhSpotCheck(const PencilGraph& g, const Decomposition& d,
                              int pairs, uint64_t seed = kDefaultSeed);

}  // namespace pg

#endif  // PENCILGRAPH_HOMOG_H_
