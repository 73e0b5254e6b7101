#include "pencilgraph/perm_closure.h"

#include <algorithm>
#include <string>

#include "pencilgraph/error.h"

namespace pg {

Perm Compose(const Perm& p, const Perm& q) {
  Perm out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = q[p[i]];
  return out;
}

Perm Inverse(const Perm& p) {
  Perm out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

Perm IdentityPerm(int degree) {
  Perm out(degree);
  for (int i = 0; i < degree; ++i) out[i] = i;
  return out;
}

bool IsIdentity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool IsPermutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

PermStore::PermStore(int degree) : degree_(degree), slots_(1024, 0) {
  Require(degree > 0 && degree <= 65535, "permutation degree out of range");
}

uint64_t PermStore::Hash(const uint16_t* p) const {
  uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < degree_; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h ^ (h >> 29);
}

void PermStore::Grow() {
  std::vector<uint32_t> next(slots_.size() * 2, 0);
  const size_t mask = next.size() - 1;
  for (size_t i = 0; i < count_; ++i) {
    size_t s = Hash(at(i)) & mask;
    while (next[s]) s = (s + 1) & mask;
    next[s] = static_cast<uint32_t>(i + 1);
  }
  slots_.swap(next);
}

int64_t PermStore::Find(const uint16_t* p) const {
  const size_t mask = slots_.size() - 1;
  for (size_t s = Hash(p) & mask; slots_[s]; s = (s + 1) & mask) {
    const size_t i = slots_[s] - 1;
    if (std::equal(p, p + degree_, at(i))) return static_cast<int64_t>(i);
  }
  return -1;
}

std::pair<size_t, bool> PermStore::Insert(const uint16_t* p) {
  const int64_t found = Find(p);
  if (found >= 0) return {static_cast<size_t>(found), false};
  if (count_ >= 0xfffffff0u) Fail(Error::Kind::kCapExceeded, "store full");
  if (2 * (count_ + 1) > slots_.size()) Grow();
  arena_.insert(arena_.end(), p, p + degree_);
  const size_t mask = slots_.size() - 1;
  size_t s = Hash(p) & mask;
  while (slots_[s]) s = (s + 1) & mask;
  slots_[s] = static_cast<uint32_t>(count_ + 1);
  return {count_++, true};
}

Perm PermStore::Get(size_t i) const {
  const uint16_t* p = at(i);
  return Perm(p, p + degree_);
}

ClosureResult ClosureOrder(const std::vector<Perm>& gens, int degree,
                           uint64_t cap) {
  for (const Perm& g : gens) {
    Require(static_cast<int>(g.size()) == degree && IsPermutation(g),
            "generator is not a permutation of the given degree");
  }
  PermStore store(degree);
  std::vector<uint16_t> buf(degree);
  for (int i = 0; i < degree; ++i) buf[i] = static_cast<uint16_t>(i);
  store.Insert(buf.data());

  std::vector<std::vector<uint16_t>> used;
  auto product = [&](const uint16_t* p, const uint16_t* q, uint16_t* out) {
    for (int i = 0; i < degree; ++i) out[i] = q[p[i]];
  };
  auto add_coset = [&](size_t sub_order, const uint16_t* rep) {
    if (store.size() + sub_order > cap) {
      Fail(Error::Kind::kCapExceeded,
           "group closure exceeds cap of " + std::to_string(cap));
    }
    std::vector<uint16_t> h(degree);
    for (size_t k = 0; k < sub_order; ++k) {
      std::copy(store.at(k), store.at(k) + degree, h.begin());
      product(h.data(), rep, buf.data());
      store.Insert(buf.data());
    }
  };

  ClosureResult res;
  for (const Perm& g : gens) {
    std::vector<uint16_t> gp(g.begin(), g.end());
    if (store.Find(gp.data()) >= 0) continue;
    used.push_back(gp);
    const size_t sub_order = store.size();
    std::vector<std::vector<uint16_t>> reps = {gp};
    add_coset(sub_order, gp.data());
    std::vector<uint16_t> e(degree);
    for (size_t ri = 0; ri < reps.size(); ++ri) {
      for (const auto& s : used) {
        product(reps[ri].data(), s.data(), e.data());
        if (store.Find(e.data()) >= 0) continue;
        add_coset(sub_order, e.data());
        reps.push_back(e);
      }
    }
  }
  res.order = store.size();
  res.useful_generators = static_cast<int>(used.size());
  return res;
}

}  // namespace pg
