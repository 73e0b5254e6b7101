#ifndef PENCILGRAPH_HRHO_H_
#define PENCILGRAPH_HRHO_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pencilgraph/gf2.h"

namespace pg {

// A permutation of the points 1..2^rho-1 of P_2^{rho-1}. img[0] is 0.
struct APerm {
  int rho = 0;
  std::vector<int> img;

  static APerm Identity(int rho);
  int n() const { return (1 << rho) - 1; }
  int operator()(int x) const { return img[x]; }
  bool operator==(const APerm& o) const = default;

  // Left to right: (p * q)(x) = q(p(x)).
  APerm operator*(const APerm& o) const;
  APerm Inverse() const;
  APerm Pow(int k) const;
  bool IsIdentity() const;
  bool IsLinear() const;

  std::vector<int> FixedPoints() const;
  // Nontrivial cycles, each starting at its least point, ordered by it.
  std::vector<std::vector<int>> Cycles() const;
  // Fixed points, then cycles: "123(45)(67)", "(132)".
  std::string Display() const;
  // The images of 1..n: the lower level of the two-line notation.
  std::string LowerLevel() const;
};

// Accepts the paper's notation: fixed points in any order outside
// parentheses, cycles inside; spaces are ignored.
APerm ParseAPerm(int rho, const std::string& s);

// The (Q, a)-permutation: identity on the hyperplane Q, x -> a^x off it.
APerm PQa(int rho, Mask q, int a);
APerm Doubling(const APerm& psi);
APerm JRho(int rho);

// The closed form of the lower level of J_rho, f(1..n) at indices 1..n.
std::vector<int> FFormula(int rho);
// w_rho(j) = J_rho * p(zeta_rho, f(j)).
APerm WRho(int rho, int j);

// d_i = a_i ^ a_{i+1}, indices mod the length.
std::vector<int> DsCycle(const std::vector<int>& cycle);
// y with d_i = c_{(i - y) mod x}, or -1 when d is not a rotation of c.
int CycleShift(const std::vector<int>& c, const std::vector<int>& d);

struct TypeExpr {
  bool ok = true;
  std::string error;
  std::vector<std::string> roots;  // one per root component, with ^k grouped
  std::string display;
};

TypeExpr TypeOf(const APerm& v);

// Nontrivial cycle lengths with multiplicities, "(2)^2(4)"; "(1)" for the
// identity.
std::string SuperType(const APerm& v);
std::string SuperTypeOfLengths(std::vector<int> lengths);

// Packed form: the image of basis point 2^k in bits [k rho, (k+1) rho).
uint32_t Pack(const APerm& v);
APerm Unpack(int rho, uint32_t packed);

std::vector<APerm> PQaGenerators(int rho);

// The group generated by the (Q, a)-permutations, in breadth-first order
// from the identity under right multiplication by the generators.
class HGroup {
 public:
  int rho() const { return rho_; }
  size_t size() const { return elems_.size(); }
  uint32_t at(size_t i) const { return elems_[i]; }
  int Distance(uint32_t packed) const;  // -1 when not an element
  int Diameter() const { return diameter_; }
  const std::vector<uint64_t>& LevelSizes() const { return levels_; }
  uint32_t Compose(uint32_t p, uint32_t q) const;

 private:
  friend HGroup BuildGroup(int rho, uint64_t cap);
  int rho_ = 0;
  std::vector<uint32_t> elems_;
  std::vector<uint8_t> dist_;  // direct address, 0xff when absent
  std::vector<uint64_t> levels_;
  int diameter_ = 0;
};

// Order prod 2^(i-1) (2^i - 1), i = 1..rho.
uint64_t GroupOrderFormula(int rho);
HGroup BuildGroup(int rho, uint64_t cap = uint64_t{1} << 24);

struct CensusRow {
  std::string super_type;
  int d = 0;
  uint64_t count = 0;
  bool d_constant = true;
};

struct Census {
  int rho = 0;
  std::vector<CensusRow> rows;  // ordered by d, then super-type
  uint64_t eq1_checked = 0;
  uint64_t eq1_violations = 0;

  nlohmann::json ToJson() const;
  std::string ToCsv() const;
};

Census TableCensus(const HGroup& g);

// Cosets g*D of the doubled subgroup D = Doubling(H_{rho-1}).
struct CosetPartition {
  int rho = 0;
  int index = 0;
  std::vector<uint16_t> coset_of;  // per element of the group, BFS order
  std::vector<std::map<std::string, uint64_t>> super_types;  // per coset
};

CosetPartition PartitionCosets(const HGroup& g, const HGroup& lower);

struct CategoryReps {
  std::vector<APerm> a, b_alpha, b_beta, c;
};
CategoryReps CategoryRepresentatives(int rho);

struct CosetReport {
  int rho = 0;
  int index = 0;
  int expected_index = 0;
  int classified = 0;      // cosets hit by the (a), (b), (c) representatives
  bool reps_distinct = false;
  int remainder = 0;       // cosets left for (d) and (e)
  int remainder_expected = 0;
  // Whether all cosets of a category carry the same super-type multiset.
  bool a_uniform = false, b_uniform = false, c_uniform = false;
  // Super-type multiset of one coset per category. (d) and (e) are the
  // remainder classes with 2 N(c) and N(e) cosets, when those are present.
  std::map<std::string, std::map<std::string, uint64_t>> column;
  // Distinct super-type multisets among the remaining cosets, with counts.
  std::vector<std::pair<std::map<std::string, uint64_t>, int>> remainder_classes;

  nlohmann::json ToJson() const;
};

CosetReport AnalyzeCosets(const HGroup& g, const HGroup& lower);

}  // namespace pg

#endif  // PENCILGRAPH_HRHO_H_
