#ifndef PENCILGRAPH_PERM_CLOSURE_H_
#define PENCILGRAPH_PERM_CLOSURE_H_

#include <cstdint>
#include <vector>

namespace pg {

using Perm = std::vector<int>;

// (p * q)(x) = q(p(x)): p acts first.
Perm Compose(const Perm& p, const Perm& q);
Perm Inverse(const Perm& p);
Perm IdentityPerm(int degree);
bool IsIdentity(const Perm& p);
bool IsPermutation(const Perm& p);

// Set of permutations of a fixed degree, packed into one arena and indexed
// by an open-addressing hash table.
class PermStore {
 public:
  explicit PermStore(int degree);

  int degree() const { return degree_; }
  size_t size() const { return count_; }

  // Index of p and whether it was newly added.
  std::pair<size_t, bool> Insert(const uint16_t* p);
  int64_t Find(const uint16_t* p) const;
  const uint16_t* at(size_t i) const { return arena_.data() + i * degree_; }
  Perm Get(size_t i) const;

 private:
  uint64_t Hash(const uint16_t* p) const;
  void Grow();

  int degree_;
  size_t count_ = 0;
  std::vector<uint16_t> arena_;
  std::vector<uint32_t> slots_;  // index + 1, 0 = empty
};

struct ClosureResult {
  uint64_t order = 0;
  int useful_generators = 0;  // generators not already in the group so far
};

// Order of the group generated by gens, by Dimino's coset enumeration.
// Throws a cap error once more than cap elements would be stored.
ClosureResult ClosureOrder(const std::vector<Perm>& gens, int degree,
                           uint64_t cap);

}  // namespace pg

#endif  // PENCILGRAPH_PERM_CLOSURE_H_
