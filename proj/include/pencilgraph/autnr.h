#ifndef PENCILGRAPH_AUTNR_H_
#define PENCILGRAPH_AUTNR_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pencilgraph/graph.h"
#include "pencilgraph/perm_closure.h"

namespace pg {

// An affine sigma-subspace: points plus its (sigma-1)-subspace at infinity.
struct AffineBlock {
  Mask points = 0;
  Mask theta = 0;
};

bool IsAffineBlock(const SpaceCtx& ctx, const AffineBlock& b);
AffineBlock AffineDifference(const AffineBlock& a, const AffineBlock& b);

enum class GenCategory { kA, kB, kC };
char CategoryChar(GenCategory c);
GenCategory ParseCategory(const std::string& s);

// Transpositions of blocks sharing theta and the affine difference chi.
struct PhiFactor {
  Mask theta = 0;
  Mask chi = 0;
  std::vector<std::pair<Mask, Mask>> pairs;  // first < second by least point
};

struct AutoMap {
  GenCategory category = GenCategory::kA;
  Mask pi = 0;
  Mask alpha = 0;
  std::vector<PhiFactor> factors;
  // Block substitution table, both directions of every transposition.
  std::vector<std::pair<Mask, Mask>> map;
  // psi[i-1] is the image of entry position i; values are 1-based.
  std::vector<int> psi;
  int psi_pivot = 0;
  // Permutation of the neighbor slots of the base vertex.
  Perm local;
  // Center of a transvection with axis alpha that induces the same action
  // on the neighborhood, or 0. Blocks alone do not determine the action on
  // pencils whose A0 meets no part at infinity.
  int lift_center = 0;
  // Whether it extends to the whole built graph, and that extension.
  bool global = false;
  Perm vperm;

  std::string PhiDisplay() const;  // "[∅.2(4 6)(5 7)]"
  std::string PsiDisplay() const;  // "1(2 3)" or "()"
  std::string Display() const;     // phi "." psi
  nlohmann::json ToJson() const;
};

// Image of a point set under the block substitution.
Mask ApplyBlocks(const AutoMap& a, Mask s);

// Acts through the lift when there is one. Throws an integrity error when the
// image is not a valid pencil.
Pencil Apply(const SpaceCtx& ctx, const AutoMap& a, const Pencil& v);

// The generator of the given category at (pi, alpha), before validation.
// pi is a point for A, a (sigma-1)-subspace of the base A0 for B and C.
AutoMap MakeGenerator(const SpaceCtx& ctx, GenCategory cat, Mask pi,
                      Mask alpha);

// Candidate (pi, alpha) pairs for a category, in a fixed order.
std::vector<std::pair<Mask, Mask>> CandidateParams(const SpaceCtx& ctx,
                                                   GenCategory cat);

// The base vertex with its sorted neighbors and their adjacency.
struct LocalFrame {
  explicit LocalFrame(const SpaceCtx& ctx);
  SpaceCtx ctx;
  Pencil base;
  std::vector<Pencil> nbrs;
  std::vector<Key> keys;  // sorted
  std::vector<std::vector<char>> adj;

  int Slot(const Pencil& p) const;
};

// Fills a.local when a fixes the base vertex and acts as an automorphism of
// the neighborhood; returns false otherwise.
bool ValidateLocal(const LocalFrame& f, AutoMap* a);

// Fills a.vperm and a.global when a is an automorphism of g, acting through
// blocks or, failing that, through a transvection lift.
bool ValidateGlobal(const PencilGraph& g, AutoMap* a);

struct SynthStats {
  int candidates = 0;
  int empty = 0;      // no transposition at all
  int rejected = 0;   // failed local validation
  int duplicates = 0;
  int identity = 0;   // trivial on the neighborhood
};

// Validated, deduplicated generators of one category. With g given, each is
// also checked against the whole graph.
std::vector<AutoMap> SynthGenerators(const LocalFrame& f, GenCategory cat,
                                     const PencilGraph* g = nullptr,
                                     SynthStats* stats = nullptr);

// All three categories, deduplicated across categories.
std::vector<AutoMap> SynthAll(const LocalFrame& f,
                              const PencilGraph* g = nullptr);

uint64_t NrOrderFormula(const SpaceCtx& ctx);

// Order of the group generated on the neighbor slots.
ClosureResult LocalClosureOrder(const LocalFrame& f,
                                const std::vector<AutoMap>& gens,
                                uint64_t cap);
// Order of the group generated on the whole graph; all gens must be global.
ClosureResult GlobalClosureOrder(const PencilGraph& g,
                                 const std::vector<AutoMap>& gens,
                                 uint64_t cap);

}  // namespace pg

#endif  // PENCILGRAPH_AUTNR_H_
