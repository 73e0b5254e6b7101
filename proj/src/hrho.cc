#include "pencilgraph/hrho.h"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "pencilgraph/error.h"

namespace pg {

namespace {

void RequireRho(int rho) {
  Require(rho >= 1 && rho <= kMaxDim, "rho out of range");
}

std::vector<int> Rotate(const std::vector<int>& v, int k) {
  const int x = static_cast<int>(v.size());
  std::vector<int> out(x);
  for (int i = 0; i < x; ++i) out[i] = v[((i + k) % x + x) % x];
  return out;
}

Mask MaskOf(const std::vector<int>& pts) { return FromPoints(pts); }

std::string Group(std::vector<std::string> parts, bool wrap_single) {
  std::sort(parts.begin(), parts.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  if (parts.size() == 1 && !wrap_single) return "(" + parts[0] + ")";
  std::string out;
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out += "(" + parts[i] + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return wrap_single ? out : "(" + out + ")";
}

}  // namespace

APerm APerm::Identity(int rho) {
  RequireRho(rho);
  APerm p;
  p.rho = rho;
  p.img.resize(1 << rho);
  for (int x = 0; x < (1 << rho); ++x) p.img[x] = x;
  return p;
}

APerm APerm::operator*(const APerm& o) const {
  Require(rho == o.rho, "product of permutations of different degree");
  APerm out = *this;
  for (size_t x = 0; x < img.size(); ++x) out.img[x] = o.img[img[x]];
  return out;
}

APerm APerm::Inverse() const {
  APerm out = *this;
  for (size_t x = 0; x < img.size(); ++x) out.img[img[x]] = static_cast<int>(x);
  return out;
}

APerm APerm::Pow(int k) const {
  Require(k >= 0, "negative power");
  APerm out = Identity(rho);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool APerm::IsIdentity() const { return *this == Identity(rho); }

bool APerm::IsLinear() const {
  for (int a = 1; a <= n(); ++a) {
    for (int b = a + 1; b <= n(); ++b) {
      if (img[a ^ b] != (img[a] ^ img[b])) return false;
    }
  }
  return true;
}

std::vector<int> APerm::FixedPoints() const {
  std::vector<int> out;
  for (int x = 1; x <= n(); ++x) {
    if (img[x] == x) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<int>> APerm::Cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img.size(), 0);
  for (int x = 1; x <= n(); ++x) {
    if (seen[x] || img[x] == x) continue;
    std::vector<int> c;
    for (int y = x; !seen[y]; y = img[y]) {
      seen[y] = 1;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string APerm::Display() const {
  std::string out;
  for (int x : FixedPoints()) out.push_back(PointChar(x));
  for (const auto& c : Cycles()) {
    out.push_back('(');
    for (int x : c) out.push_back(PointChar(x));
    out.push_back(')');
  }
  return out;
}

std::string APerm::LowerLevel() const {
  std::string out;
  for (int x = 1; x <= n(); ++x) out.push_back(PointChar(img[x]));
  return out;
}

APerm ParseAPerm(int rho, const std::string& s) {
  APerm p = APerm::Identity(rho);
  std::vector<int> fixed, cycle;
  std::vector<char> used(p.img.size(), 0);
  bool open = false;
  auto mark = [&](int x) {
    Require(x >= 1 && x <= p.n(), "point out of range in permutation");
    Require(!used[x], "point repeated in permutation");
    used[x] = 1;
  };
  for (char ch : s) {
    if (ch == ' ') continue;
    if (ch == '(') {
      Require(!open, "nested parentheses in permutation");
      open = true;
      cycle.clear();
    } else if (ch == ')') {
      Require(open, "unbalanced parentheses in permutation");
      open = false;
      for (size_t i = 0; i < cycle.size(); ++i) {
        p.img[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
    } else {
      const int x = PointFromChar(ch);
      mark(x);
      (open ? cycle : fixed).push_back(x);
    }
  }
  Require(!open, "unbalanced parentheses in permutation");
  return p;
}

APerm PQa(int rho, Mask q, int a) {
  RequireRho(rho);
  const int n = (1 << rho) - 1;
  Require(Dim(q) == rho - 1 && (q >> (n + 1)) == 0, "Q must be a hyperplane");
  Require(Has(q, a), "the pivot must lie in Q");
  APerm p = APerm::Identity(rho);
  for (int x = 1; x <= n; ++x) {
    if (!Has(q, x)) p.img[x] = a ^ x;
  }
  return p;
}

APerm Doubling(const APerm& psi) {
  const int rho = psi.rho + 1;
  APerm out = APerm::Identity(rho);
  const int n = out.n(), half = 1 << psi.rho;
  for (int x = 1; x < n; ++x) {
    out.img[x] = x < half ? psi.img[x] : n ^ psi.img[n ^ x];
  }
  return out;
}

APerm JRho(int rho) {
  Require(rho >= 2 && rho <= kMaxDim, "J_rho needs 2 <= rho");
  APerm q = ParseAPerm(2, "3(12)");
  APerm j;
  for (int k = 2;; ++k) {
    const int top = 1 << (k - 1);
    const Mask low = Bit(1 << (k - 2)) - 2;  // P_2^{k-3}
    const APerm p = PQa(k, Span(low | Bit(top)), top);
    j = p * q;
    if (k == rho) return j;
    q = Doubling(j);
  }
}

std::vector<int> FFormula(int rho) {
  Require(rho >= 2 && rho <= kMaxDim, "f needs 2 <= rho");
  const int n = (1 << rho) - 1, quarter = 1 << (rho - 2);
  std::vector<int> f(n + 1, 0);
  for (int i = 1; i <= quarter - 1; ++i) {
    f[2 * i] = 4 * i;
    f[2 * i - 1] = 4 * i - 1;
  }
  f[(1 << (rho - 1)) - 1] = n;
  for (int i = 0; i <= quarter - 1; ++i) {
    f[n - 2 * i] = 4 * i + 2;
    f[n - 1 - 2 * i] = 4 * i + 1;
  }
  return f;
}

APerm WRho(int rho, int j) {
  const APerm jr = JRho(rho);
  const int half = (1 << (rho - 1)) - 1;
  Require(j >= 1 && j <= half, "w_rho(j) needs 1 <= j <= 2^(rho-1)-1");
  Mask zeta = 0;
  for (int x = 1; x <= half; ++x) zeta |= Bit(jr.img[x]);
  return jr * PQa(rho, zeta, FFormula(rho)[j]);
}

std::vector<int> DsCycle(const std::vector<int>& cycle) {
  const size_t x = cycle.size();
  std::vector<int> d(x);
  for (size_t i = 0; i < x; ++i) d[i] = cycle[i] ^ cycle[(i + 1) % x];
  return d;
}

int CycleShift(const std::vector<int>& c, const std::vector<int>& d) {
  const int x = static_cast<int>(c.size());
  if (static_cast<int>(d.size()) != x) return -1;
  for (int y = 0; y < x; ++y) {
    bool ok = true;
    for (int i = 0; i < x && ok; ++i) ok = d[i] == c[((i - y) % x + x) % x];
    if (ok) return y;
  }
  return -1;
}

TypeExpr TypeOf(const APerm& v) {
  TypeExpr t;
  if (v.IsIdentity()) {
    t.roots = {"(1)"};
    t.display = "(1)";
    return t;
  }
  // Every cycle, fixed points included, ordered by least point.
  std::vector<std::vector<int>> cyc;
  {
    std::vector<char> seen(v.img.size(), 0);
    for (int x = 1; x <= v.n(); ++x) {
      if (seen[x]) continue;
      std::vector<int> c;
      for (int y = x; !seen[y]; y = v.img[y]) {
        seen[y] = 1;
        c.push_back(y);
      }
      cyc.push_back(std::move(c));
    }
  }
  const int m = static_cast<int>(cyc.size());
  std::map<Mask, int> by_mask;
  for (int i = 0; i < m; ++i) by_mask[MaskOf(cyc[i])] = i;
  std::vector<int> dom(m);
  for (int i = 0; i < m; ++i) {
    if (cyc[i].size() == 1) {
      dom[i] = i;
      continue;
    }
    const auto ds = DsCycle(cyc[i]);
    auto it = by_mask.find(MaskOf(ds));
    if (it == by_mask.end()) {
      t.ok = false;
      t.error = "ds-support of cycle at " + std::string(1, PointChar(cyc[i][0])) +
                " matches no cycle";
      return t;
    }
    dom[i] = it->second;
  }
  // Nodes on cycles of the domination map.
  std::vector<int> on_cycle(m, -1);  // id of the functional cycle
  std::vector<std::vector<int>> chains;
  {
    std::vector<int> state(m, 0);
    for (int s = 0; s < m; ++s) {
      std::vector<int> path;
      int u = s;
      while (state[u] == 0) {
        state[u] = 1;
        path.push_back(u);
        u = dom[u];
      }
      if (state[u] == 1) {
        // u starts a new cycle: walk from it following domination backwards.
        std::vector<int> loop;
        auto pos = std::find(path.begin(), path.end(), u);
        loop.assign(pos, path.end());
        for (int w : loop) on_cycle[w] = static_cast<int>(chains.size());
        chains.push_back(loop);
      }
      for (int w : path) state[w] = 2;
    }
  }
  std::vector<std::vector<int>> kids(m);
  for (int i = 0; i < m; ++i) {
    if (on_cycle[i] < 0) kids[dom[i]].push_back(i);
  }
  std::function<std::string(int)> tree = [&](int u) {
    std::string s = std::to_string(cyc[u].size());
    std::vector<std::string> ch;
    for (int w : kids[u]) ch.push_back(tree(w));
    if (!ch.empty()) s += Group(ch, false);
    return s;
  };
  std::vector<std::string> roots;
  for (const auto& loop : chains) {
    const int head = loop[0];
    if (cyc[head].size() == 1) {
      if (kids[head].empty()) continue;
      roots.push_back(tree(head));
      continue;
    }
    if (loop.size() == 1) {
      const int y = CycleShift(cyc[head], DsCycle(cyc[head]));
      if (y < 0) {
        t.ok = false;
        t.error = "self-dominated cycle whose ds-cycle is not a rotation";
        return t;
      }
      std::string s = std::to_string(cyc[head].size()) + "_" + std::to_string(y);
      std::vector<std::string> ch;
      for (int w : kids[head]) ch.push_back(tree(w));
      if (!ch.empty()) s += Group(ch, false);
      roots.push_back(s);
      continue;
    }
    // C_1 dominates C_2 and so on; loop follows the dominator, so reverse it
    // and start at the cycle holding the least point.
    std::vector<int> chain(loop.rbegin(), loop.rend());
    auto least = std::min_element(chain.begin(), chain.end(), [&](int a, int b) {
      return cyc[a][0] < cyc[b][0];
    });
    std::rotate(chain.begin(), least, chain.end());
    const int x = static_cast<int>(chain.size());
    std::vector<std::vector<int>> rot(x);
    rot[0] = cyc[chain[0]];
    for (int i = 1; i < x; ++i) {
      const auto& c = cyc[chain[i]];
      const auto d = DsCycle(c);
      int k = -1;
      for (int s = 0; s < static_cast<int>(c.size()); ++s) {
        if (Rotate(d, s) == rot[i - 1]) {
          k = s;
          break;
        }
      }
      if (k < 0) {
        t.ok = false;
        t.error = "dominated ds-cycle is not a rotation of its dominator";
        return t;
      }
      rot[i] = Rotate(c, k);
    }
    const int y = CycleShift(rot[x - 1], DsCycle(rot[0]));
    if (y < 0) {
      t.ok = false;
      t.error = "domination cycle does not close up";
      return t;
    }
    std::string inner = "_" + std::to_string(y);
    for (int i = x - 1; i >= 0; --i) {
      std::vector<std::string> ch;
      for (int w : kids[chain[i]]) ch.push_back(tree(w));
      ch.push_back(inner);
      std::string s = std::to_string(cyc[chain[i]].size());
      if (ch.size() == 1) {
        s += "(" + ch[0] + ")";
      } else {
        // The continuation of the chain stays last.
        std::vector<std::string> trees(ch.begin(), ch.end() - 1);
        std::string g = Group(trees, true);
        s += "(" + g + "(" + inner + "))";
      }
      inner = s;
    }
    roots.push_back(inner);
  }
  t.display = Group(roots, true);
  std::sort(roots.begin(), roots.end());
  // Group identical roots for the multiset view.
  for (size_t i = 0; i < roots.size();) {
    size_t j = i;
    while (j < roots.size() && roots[j] == roots[i]) ++j;
    std::string r = "(" + roots[i] + ")";
    if (j - i > 1) r += "^" + std::to_string(j - i);
    t.roots.push_back(r);
    i = j;
  }
  return t;
}

std::string SuperTypeOfLengths(std::vector<int> lengths) {
  std::sort(lengths.begin(), lengths.end());
  std::string out;
  for (size_t i = 0; i < lengths.size();) {
    size_t j = i;
    while (j < lengths.size() && lengths[j] == lengths[i]) ++j;
    out += "(" + std::to_string(lengths[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "(1)" : out;
}

std::string SuperType(const APerm& v) {
  std::vector<int> lengths;
  for (const auto& c : v.Cycles()) lengths.push_back(static_cast<int>(c.size()));
  return SuperTypeOfLengths(std::move(lengths));
}

uint32_t Pack(const APerm& v) {
  Require(v.rho * v.rho <= 32, "rho too large to pack");
  Require(v.IsLinear(), "only linear permutations can be packed");
  uint32_t out = 0;
  for (int k = 0; k < v.rho; ++k) {
    out |= static_cast<uint32_t>(v.img[1 << k]) << (k * v.rho);
  }
  return out;
}

APerm Unpack(int rho, uint32_t packed) {
  APerm p = APerm::Identity(rho);
  const uint32_t col_mask = (1u << rho) - 1;
  for (int x = 1; x <= p.n(); ++x) {
    int y = 0;
    for (int k = 0; k < rho; ++k) {
      if ((x >> k) & 1) y ^= (packed >> (k * rho)) & col_mask;
    }
    p.img[x] = y;
  }
  return p;
}

std::vector<APerm> PQaGenerators(int rho) {
  RequireRho(rho);
  std::vector<APerm> out;
  for (Mask q : EnumerateSubspaces(rho, rho - 1)) {
    for (int a : Points(q)) out.push_back(PQa(rho, q, a));
  }
  return out;
}

uint64_t GroupOrderFormula(int rho) {
  uint64_t v = 1;
  for (int i = 1; i <= rho; ++i) {
    v *= (uint64_t{1} << (i - 1)) * ((uint64_t{1} << i) - 1);
  }
  return v;
}

int HGroup::Distance(uint32_t packed) const {
  if (packed >= dist_.size()) return -1;
  const uint8_t d = dist_[packed];
  return d == 0xff ? -1 : d;
}

uint32_t HGroup::Compose(uint32_t p, uint32_t q) const {
  const int rho = rho_;
  const uint32_t col_mask = (1u << rho) - 1;
  uint32_t out = 0;
  for (int k = 0; k < rho; ++k) {
    const uint32_t x = (p >> (k * rho)) & col_mask;
    uint32_t y = 0;
    for (int b = 0; b < rho; ++b) {
      if ((x >> b) & 1) y ^= (q >> (b * rho)) & col_mask;
    }
    out |= y << (k * rho);
  }
  return out;
}

HGroup BuildGroup(int rho, uint64_t cap) {
  Require(rho >= 1 && rho <= 5, "H_rho is built for 1 <= rho <= 5");
  const uint64_t order = GroupOrderFormula(rho);
  if (order > cap) {
    Fail(Error::Kind::kCapExceeded,
         "group order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
  }
  HGroup g;
  g.rho_ = rho;
  g.dist_.assign(size_t{1} << (rho * rho), 0xff);
  g.elems_.reserve(order);
  const APerm id = APerm::Identity(rho);
  const uint32_t id_packed = Pack(id);
  g.elems_.push_back(id_packed);
  g.dist_[id_packed] = 0;
  std::vector<std::vector<int>> gens;
  for (const auto& s : PQaGenerators(rho)) gens.push_back(s.img);
  const uint32_t col_mask = (1u << rho) - 1;
  size_t begin = 0;
  int level = 0;
  g.levels_.push_back(1);
  while (begin < g.elems_.size()) {
    const size_t end = g.elems_.size();
    for (size_t i = begin; i < end; ++i) {
      const uint32_t p = g.elems_[i];
      int cols[kMaxDim];
      for (int k = 0; k < rho; ++k) cols[k] = (p >> (k * rho)) & col_mask;
      for (const auto& s : gens) {
        uint32_t h = 0;
        for (int k = 0; k < rho; ++k) h |= static_cast<uint32_t>(s[cols[k]]) << (k * rho);
        if (g.dist_[h] != 0xff) continue;
        if (g.elems_.size() >= cap) Fail(Error::Kind::kCapExceeded, "group cap exceeded");
        g.dist_[h] = static_cast<uint8_t>(level + 1);
        g.elems_.push_back(h);
      }
    }
    begin = end;
    if (g.elems_.size() > end) {
      ++level;
      g.levels_.push_back(g.elems_.size() - end);
    }
  }
  g.diameter_ = level;
  return g;
}

namespace {

std::string SuperTypeOfPacked(int rho, uint32_t packed, int* fixed) {
  const APerm p = Unpack(rho, packed);
  std::vector<int> lengths;
  std::vector<char> seen(p.img.size(), 0);
  int f = 0;
  for (int x = 1; x <= p.n(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (int y = x; !seen[y]; y = p.img[y]) {
      seen[y] = 1;
      ++len;
    }
    if (len == 1) {
      ++f;
    } else {
      lengths.push_back(len);
    }
  }
  if (fixed) *fixed = f;
  return SuperTypeOfLengths(std::move(lengths));
}

}  // namespace

Census TableCensus(const HGroup& g) {
  Census c;
  c.rho = g.rho();
  std::unordered_map<std::string, CensusRow> rows;
  for (size_t i = 0; i < g.size(); ++i) {
    const uint32_t e = g.at(i);
    int fixed = 0;
    std::string st = SuperTypeOfPacked(g.rho(), e, &fixed);
    const int d = g.Distance(e);
    ++c.eq1_checked;
    if ((fixed + 1) << d != (1 << g.rho())) ++c.eq1_violations;
    auto [it, fresh] = rows.try_emplace(st);
    CensusRow& row = it->second;
    if (fresh) {
      row.super_type = st;
      row.d = d;
    } else if (row.d != d) {
      row.d_constant = false;
      row.d = std::min(row.d, d);
    }
    ++row.count;
  }
  for (auto& [k, row] : rows) c.rows.push_back(row);
  std::sort(c.rows.begin(), c.rows.end(), [](const CensusRow& a, const CensusRow& b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.super_type.size() != b.super_type.size()) {
      return a.super_type.size() < b.super_type.size();
    }
    return a.super_type < b.super_type;
  });
  return c;
}

nlohmann::json Census::ToJson() const {
  nlohmann::json rows_j = nlohmann::json::array();
  uint64_t total = 0;
  for (const auto& r : rows) {
    rows_j.push_back({{"super_type", r.super_type}, {"distance", r.d},
                      {"count", r.count}, {"distance_constant", r.d_constant}});
    total += r.count;
  }
  return {{"rho", rho}, {"order", total}, {"rows", rows_j},
          {"eq1_checked", eq1_checked}, {"eq1_violations", eq1_violations}};
}

std::string Census::ToCsv() const {
  std::string out = "super_type,distance,count\n";
  for (const auto& r : rows) {
    out += r.super_type + "," + std::to_string(r.d) + "," + std::to_string(r.count) + "\n";
  }
  return out;
}

CosetPartition PartitionCosets(const HGroup& g, const HGroup& lower) {
  Require(lower.rho() + 1 == g.rho(), "cosets need consecutive rho");
  const int rho = g.rho();
  std::vector<uint32_t> sub;
  sub.reserve(lower.size());
  for (size_t i = 0; i < lower.size(); ++i) {
    sub.push_back(Pack(Doubling(Unpack(lower.rho(), lower.at(i)))));
  }
  CosetPartition cp;
  cp.rho = rho;
  std::vector<uint16_t> table(size_t{1} << (rho * rho), 0xffff);
  int next = 0;
  for (size_t i = 0; i < g.size(); ++i) {
    const uint32_t e = g.at(i);
    if (table[e] != 0xffff) continue;
    Check(next < 0xffff, "too many cosets");
    for (uint32_t d : sub) {
      const uint32_t h = g.Compose(e, d);
      Check(table[h] == 0xffff, "cosets overlap");
      table[h] = static_cast<uint16_t>(next);
    }
    ++next;
  }
  cp.index = next;
  cp.coset_of.resize(g.size());
  cp.super_types.assign(next, {});
  for (size_t i = 0; i < g.size(); ++i) {
    const uint16_t k = table[g.at(i)];
    cp.coset_of[i] = k;
    ++cp.super_types[k][SuperTypeOfPacked(rho, g.at(i), nullptr)];
  }
  return cp;
}

CategoryReps CategoryRepresentatives(int rho) {
  Require(rho >= 2 && rho <= 5, "categories need 2 <= rho <= 5");
  const int n = (1 << rho) - 1;
  const Mask low = Bit(1 << (rho - 1)) - 2;
  CategoryReps reps;
  reps.a.push_back(APerm::Identity(rho));
  for (int a : Points(low)) reps.b_alpha.push_back(PQa(rho, low, a));
  for (Mask q : EnumerateSubspaces(rho, rho - 1)) {
    if (Has(q, n)) {
      reps.b_beta.push_back(PQa(rho, q, n));
    } else if (q != low) {
      for (int a : Points(q & ~low)) reps.c.push_back(PQa(rho, q, a));
    }
  }
  return reps;
}

nlohmann::json CosetReport::ToJson() const {
  nlohmann::json j;
  j["rho"] = rho;
  j["index"] = index;
  j["expected_index"] = expected_index;
  j["classified"] = classified;
  j["reps_distinct"] = reps_distinct;
  j["remainder"] = remainder;
  j["remainder_expected"] = remainder_expected;
  j["a_uniform"] = a_uniform;
  j["b_uniform"] = b_uniform;
  j["c_uniform"] = c_uniform;
  j["columns"] = column;
  nlohmann::json rem = nlohmann::json::array();
  for (const auto& [ms, k] : remainder_classes) rem.push_back({{"cosets", k}, {"super_types", ms}});
  j["remainder_classes"] = rem;
  return j;
}

CosetReport AnalyzeCosets(const HGroup& g, const HGroup& lower) {
  const int rho = g.rho();
  const CosetPartition cp = PartitionCosets(g, lower);
  CosetReport rep;
  rep.rho = rho;
  rep.index = cp.index;
  const int h = (1 << (rho - 1)) - 1, q = 1 << (rho - 2);
  const int nc = q * h, ne = (q - 1) * h;
  rep.expected_index = 1 + 2 * h + 3 * nc + ne;
  rep.remainder_expected = 2 * nc + ne;

  // Element index by packed value, for the coset lookup of representatives.
  std::unordered_map<uint32_t, size_t> pos;
  pos.reserve(g.size() * 2);
  for (size_t i = 0; i < g.size(); ++i) pos.emplace(g.at(i), i);
  const CategoryReps reps = CategoryRepresentatives(rho);
  std::set<int> hit;
  bool distinct = true;
  auto scan = [&](const std::vector<APerm>& list, const std::string& name,
                  bool* uniform) {
    std::vector<int> cosets;
    for (const auto& p : list) {
      const int k = cp.coset_of[pos.at(Pack(p))];
      if (!hit.insert(k).second) distinct = false;
      cosets.push_back(k);
    }
    *uniform = true;
    for (int k : cosets) {
      if (cp.super_types[k] != cp.super_types[cosets[0]]) *uniform = false;
    }
    if (!cosets.empty()) rep.column[name] = cp.super_types[cosets[0]];
  };
  scan(reps.a, "a", &rep.a_uniform);
  std::vector<APerm> b = reps.b_alpha;
  b.insert(b.end(), reps.b_beta.begin(), reps.b_beta.end());
  scan(b, "b", &rep.b_uniform);
  scan(reps.c, "c", &rep.c_uniform);
  rep.reps_distinct = distinct;
  rep.classified = static_cast<int>(hit.size());
  rep.remainder = cp.index - rep.classified;
  std::map<std::map<std::string, uint64_t>, int> classes;
  for (int k = 0; k < cp.index; ++k) {
    if (!hit.count(k)) ++classes[cp.super_types[k]];
  }
  for (const auto& [ms, cnt] : classes) {
    rep.remainder_classes.emplace_back(ms, cnt);
    if (cnt == 2 * nc && !rep.column.count("d")) {
      rep.column["d"] = ms;
    } else if (cnt == ne && nc != ne && !rep.column.count("e")) {
      rep.column["e"] = ms;
    }
  }
  return rep;
}

}  // namespace pg
