#include "pencilgraph/gf2.h"

#include <algorithm>
#include <array>
#include <set>

#include "pencilgraph/error.h"

namespace pg {

SpaceCtx::SpaceCtx(int r_in, int sigma_in) : r(r_in), sigma(sigma_in) {
  Require(r >= 3 && r <= kMaxDim,
          "r must lie in [3, " + std::to_string(kMaxDim) + "]");
  Require(sigma > 0 && sigma <= r - 2, "sigma must satisfy 0 < sigma <= r-2");
  n = (1 << r) - 1;
  rho = r - sigma;
  s = 1 << (rho - 1);
  t = (1 << (sigma + 1)) - 1;
  m1 = (1 << rho) - 1;
  m0 = 2 * s * ((1 << sigma) - 1);
  a0_size = (1 << sigma) - 1;
  coset_size = 1 << sigma;
  all = (n == 63 ? ~Mask{0} : (Bit(n + 1) - 1)) & ~Mask{1};
}

int LineThird(int a, int b) {
  Require(a != b, "degenerate line: identical points");
  return a ^ b;
}

int ComplementPoint(const SpaceCtx& ctx, int i) {
  Require(i >= 1 && i < ctx.n, "complement undefined for this point");
  return ctx.n ^ i;
}

std::vector<int> Points(Mask m) {
  std::vector<int> out;
  out.reserve(Count(m));
  while (m) {
    out.push_back(Lowest(m));
    m &= m - 1;
  }
  return out;
}

Mask FromPoints(const std::vector<int>& pts) {
  Mask m = 0;
  for (int p : pts) m |= Bit(p);
  return m;
}

Mask Translate(Mask m, int p) {
  Mask out = 0;
  while (m) {
    out |= Bit(Lowest(m) ^ p);
    m &= m - 1;
  }
  return out;
}

Mask Span(Mask pts) {
  Mask lin = 1;
  pts &= ~Mask{1};
  while (pts) {
    int p = Lowest(pts);
    pts &= pts - 1;
    if (!Has(lin, p)) lin |= Translate(lin, p);
  }
  return lin & ~Mask{1};
}

bool IsClosed(Mask m) { return Span(m) == (m & ~Mask{1}); }

int Dim(Mask m) {
  if (!IsClosed(m)) return -1;
  return std::countr_zero(static_cast<uint64_t>(Count(m & ~Mask{1}) + 1));
}

bool PointsLess(Mask a, Mask b) {
  while (a && b) {
    int pa = Lowest(a), pb = Lowest(b);
    if (pa != pb) return pa < pb;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

std::vector<Mask> EnumerateSubspaces(int r, int d) {
  Require(d >= 0 && d <= r, "subspace dimension out of range");
  const Mask all = (r == 6 ? ~Mask{0} : (Bit((1 << r)) - 1)) & ~Mask{1};
  std::set<Mask> level = {0};
  for (int k = 0; k < d; ++k) {
    std::set<Mask> next;
    for (Mask s : level) {
      Mask rest = all & ~s;
      while (rest) {
        int p = Lowest(rest);
        rest &= rest - 1;
        next.insert(Span(s | Bit(p)));
      }
    }
    level.swap(next);
  }
  std::vector<Mask> out(level.begin(), level.end());
  std::sort(out.begin(), out.end(), PointsLess);
  return out;
}

std::vector<Mask> EnumerateSubspaces(const SpaceCtx& ctx, int d) {
  return EnumerateSubspaces(ctx.r, d);
}

uint64_t GaussianBinomial(int r, int k) {
  Require(k >= 0 && k <= r && r < 32, "gaussian binomial out of range");
  // After step j the running value is the binomial [k+j choose j]_2.
  uint64_t v = 1;
  for (int i = 1; i <= r - k; ++i) {
    v *= (uint64_t{1} << (i + k)) - 1;
    v /= (uint64_t{1} << i) - 1;
  }
  return v;
}

std::vector<Mask> CosetsMod(const SpaceCtx& ctx, Mask a0) {
  Require(Dim(a0) == ctx.sigma, "A0 must be a sigma-subspace");
  const Mask lin = a0 | 1;
  std::vector<Mask> out;
  Mask rest = ctx.all & ~a0;
  while (rest) {
    Mask c = Translate(lin, Lowest(rest));
    out.push_back(c);
    rest &= ~c;
  }
  return out;
}

const std::vector<Mask>& Hyperplanes(const SpaceCtx& ctx) {
  static const auto* table = [] {
    auto* t = new std::array<std::vector<Mask>, kMaxDim + 1>();
    for (int r = 3; r <= kMaxDim; ++r) (*t)[r] = EnumerateSubspaces(r, r - 1);
    return t;
  }();
  return (*table)[ctx.r];
}

char PointChar(int p) {
  Require(p >= 1 && p <= 35, "point has no single-character rendering");
  if (p < 10) return static_cast<char>('0' + p);
  return static_cast<char>('a' + p - 10);
}

int PointFromChar(char c) {
  if (c >= '1' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  Fail(Error::Kind::kInvalidArgument, std::string("bad point symbol: ") + c);
}

std::string RenderSet(Mask m) {
  m &= ~Mask{1};
  if (!m) return "\xE2\x88\x85";  // empty set sign
  std::string out;
  for (int p : Points(m)) out.push_back(PointChar(p));
  return out;
}

Mask ParseSet(const std::string& s) {
  if (s == "\xE2\x88\x85") return 0;
  Mask m = 0;
  for (char c : s) m |= Bit(PointFromChar(c));
  return m;
}

}  // namespace pg
