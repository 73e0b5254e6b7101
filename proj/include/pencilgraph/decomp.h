#ifndef PENCILGRAPH_DECOMP_H_
#define PENCILGRAPH_DECOMP_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "pencilgraph/graph.h"

namespace pg {

// An (r-1, sigma-1)-pencil inside a hyperplane: the copy of K_{2s} made of
// the pencils whose entries contain the corresponding blocks.
struct CliqueCopyId {
  Mask hyperplane = 0;
  Mask u0 = 0;
  std::vector<Mask> blocks;

  bool operator==(const CliqueCopyId& o) const = default;
  std::string Display() const;  // "[1,45,89,cd]"
  std::string Bytes() const;    // hashable identity
};

// The copy of T_{ts,t} spanned by a (sigma+1)-subspace W at entry index i.
// When rho >= 3 several copies share (W, i); the anchor, the least key among
// the copy's vertices, tells them apart.
struct TuranCopyId {
  Mask w = 0;
  int i = 0;  // 1-based
  Key anchor;

  bool operator==(const TuranCopyId& o) const = default;
  std::string Display() const;  // "[123_1]"
};

struct TuranCopy {
  TuranCopyId id;
  std::vector<Pencil> vertices;  // sorted by key
  std::vector<int> part;         // part label per vertex, ordered by A0
  std::vector<Mask> part_a0;
};

std::vector<Pencil> CliqueVertices(const SpaceCtx& ctx, const CliqueCopyId& id);
std::vector<CliqueCopyId> CliqueCopiesAt(const SpaceCtx& ctx, const Pencil& v);

// i is 1-based.
TuranCopy TuranCopyThrough(const SpaceCtx& ctx, const Pencil& v, int i);
TuranCopy TuranVertices(const SpaceCtx& ctx, const TuranCopyId& id);
std::vector<TuranCopyId> TuranCopiesAt(const SpaceCtx& ctx, const Pencil& v);

// All copies of both families in a built component, as vertex index sets.
struct Decomposition {
  std::vector<CliqueCopyId> clique_ids;
  std::vector<std::vector<int>> cliques;   // sorted members
  std::vector<TuranCopyId> turan_ids;
  std::vector<std::vector<int>> turans;    // sorted members
  std::vector<std::vector<int>> turan_parts;  // part label per member
  std::vector<std::vector<int>> cliques_at;   // per vertex
  std::vector<std::vector<int>> turans_at;    // per vertex
  // Per arc of g.graph: the copy of each family holding the edge, or -1.
  std::vector<int> arc_clique;
  std::vector<int> arc_turan;
};

Decomposition EnumerateCopies(const PencilGraph& g);

struct DecompReport {
  bool ok = false;
  int64_t vertices = 0;
  int64_t edges = 0;
  int64_t l0 = 0, l1 = 0;
  int64_t l0_expected = 0, l1_expected = 0;
  int m0 = 0, m1 = 0;
  bool edge_cover_clique = false;
  bool edge_cover_turan = false;
  bool edge_is_intersection = false;
  bool clique_overlap_ok = false;
  bool turan_overlap_ok = false;
  bool counts_ok = false;
  bool incidence_ok = false;
  bool cliques_maximal = false;
  bool turans_maximal = false;
  bool induced_multipartite = false;
  // Whether the counts equal the family assignment read literally from the
  // order-and-degree theorem, which swaps the two counts.
  bool swapped_assignment_matches = false;
  std::vector<std::string> failures;

  nlohmann::json ToJson() const;
  std::string ToText() const;
};

// Fills the arc maps of d.
DecompReport VerifyDecomposition(const PencilGraph& g, Decomposition* d);

}  // namespace pg

#endif  // PENCILGRAPH_DECOMP_H_
