#ifndef PENCILGRAPH_GF2_H_
#define PENCILGRAPH_GF2_H_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace pg {

// Set of points of a binary projective space. Bit p stands for point p; bit 0
// stands for the zero vector and is only set on linear subspaces.
using Mask = uint64_t;

constexpr int kMaxDim = 6;

inline Mask Bit(int p) { return Mask{1} << p; }
inline bool Has(Mask m, int p) { return (m >> p) & 1; }
inline int Count(Mask m) { return std::popcount(m); }
inline int Lowest(Mask m) { return std::countr_zero(m); }

struct SpaceCtx {
  SpaceCtx(int r, int sigma);

  int r;
  int sigma;
  int n;       // 2^r - 1
  int rho;     // r - sigma
  int s;       // 2^(rho-1)
  int t;       // 2^(sigma+1) - 1
  int m1;      // 2^rho - 1
  int m0;      // 2 s (2^sigma - 1)
  int a0_size;     // 2^sigma - 1
  int coset_size;  // 2^sigma
  Mask all;        // bits 1..n

  int degree() const { return s * (t - 1) * m1; }
};

// Third point of the line through a and b.
int LineThird(int a, int b);

int ComplementPoint(const SpaceCtx& ctx, int i);

std::vector<int> Points(Mask m);
Mask FromPoints(const std::vector<int>& pts);

// {x ^ p : x in m}.
Mask Translate(Mask m, int p);

// Smallest XOR-closed superset of pts, without the zero vector.
Mask Span(Mask pts);

bool IsClosed(Mask m);

// Linear dimension d of a subspace with 2^d - 1 points, or -1.
int Dim(Mask m);

// Lexicographic comparison of sorted point tuples.
bool PointsLess(Mask a, Mask b);

std::vector<Mask> EnumerateSubspaces(const SpaceCtx& ctx, int d);
std::vector<Mask> EnumerateSubspaces(int r, int d);

uint64_t GaussianBinomial(int r, int k);

// Nontrivial cosets of a0 + {0}, sorted by minimum element.
std::vector<Mask> CosetsMod(const SpaceCtx& ctx, Mask a0);

// Cached; sorted like EnumerateSubspaces.
const std::vector<Mask>& Hyperplanes(const SpaceCtx& ctx);

// Point rendering: 1-9, a-f, then g-z for 16 and up.
char PointChar(int p);
int PointFromChar(char c);
std::string RenderSet(Mask m);
Mask ParseSet(const std::string& s);

}  // namespace pg

#endif  // PENCILGRAPH_GF2_H_
