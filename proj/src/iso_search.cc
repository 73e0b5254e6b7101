#include "pencilgraph/iso_search.h"

#include <algorithm>
#include <map>

#include "pencilgraph/error.h"

namespace pg {

nlohmann::json ExtendResult::ToJson() const {
  return {{"found", found}, {"exhausted", exhausted}, {"nodes", nodes},
          {"backtracks", backtracks}, {"max_depth", max_depth}};
}

void RefineColors(const SimpleGraph& g, const SimpleGraph& h,
                  std::vector<int>* cg, std::vector<int>* ch) {
  const SimpleGraph* graphs[2] = {&g, &h};
  std::vector<int>* cols[2] = {cg, ch};
  for (int k = 0; k < 2; ++k) {
    if (cols[k]->empty()) cols[k]->assign(graphs[k]->size(), 0);
  }
  auto classes = [&] {
    std::vector<int> all(cg->begin(), cg->end());
    all.insert(all.end(), ch->begin(), ch->end());
    std::sort(all.begin(), all.end());
    return std::unique(all.begin(), all.end()) - all.begin();
  };
  auto before = classes();
  for (;;) {
    std::map<std::vector<int>, int> palette;
    std::vector<std::vector<int>> next(2);
    for (int k = 0; k < 2; ++k) {
      const auto& gr = *graphs[k];
      const auto& c = *cols[k];
      next[k].resize(gr.size());
      for (int v = 0; v < gr.size(); ++v) {
        std::vector<int> sig = {c[v]};
        for (int w : gr.neighbors(v)) sig.push_back(c[w]);
        std::sort(sig.begin() + 1, sig.end());
        auto [it, fresh] = palette.try_emplace(std::move(sig), 0);
        if (fresh) it->second = static_cast<int>(palette.size()) - 1;
        next[k][v] = it->second;
      }
    }
    *cg = std::move(next[0]);
    *ch = std::move(next[1]);
    const auto after = classes();
    if (after == before) return;
    before = after;
  }
}

bool IsIsomorphism(const SimpleGraph& g, const SimpleGraph& h,
                   const std::vector<int>& p) {
  if (g.size() != h.size() || static_cast<int>(p.size()) != g.size()) return false;
  std::vector<char> hit(h.size(), 0);
  for (int y : p) {
    if (y < 0 || y >= h.size() || hit[y]) return false;
    hit[y] = 1;
  }
  if (g.num_arcs() != h.num_arcs()) return false;
  for (int v = 0; v < g.size(); ++v) {
    if (g.degree(v) != h.degree(p[v])) return false;
    for (int w : g.neighbors(v)) {
      if (!h.HasEdge(p[v], p[w])) return false;
    }
  }
  return true;
}

namespace {

class Extender {
 public:
  Extender(const SimpleGraph& g, const SimpleGraph& h, const ExtendOptions& o)
      : g_(g), h_(h), opts_(o), n_(g.size()) {
    fwd_.assign(n_, -1);
    bwd_.assign(n_, -1);
    mapped_nbrs_.assign(n_, 0);
    image_nbrs_.assign(n_, 0);
    if (opts_.src_colors) cg_ = *opts_.src_colors;
    if (opts_.dst_colors) ch_ = *opts_.dst_colors;
    if (opts_.refine) {
      RefineColors(g_, h_, &cg_, &ch_);
    } else {
      if (cg_.empty()) cg_.assign(n_, 0);
      if (ch_.empty()) ch_.assign(n_, 0);
    }
  }

  ExtendResult Run(const std::vector<std::pair<int, int>>& partial) {
    ExtendResult res;
    if (g_.size() != h_.size()) {
      res.exhausted = true;
      return res;
    }
    for (auto [x, y] : partial) {
      Require(x >= 0 && x < n_ && y >= 0 && y < n_, "partial map out of range");
      if (fwd_[x] == y) continue;
      if (fwd_[x] >= 0 || bwd_[y] >= 0 || !Consistent(x, y)) {
        res.exhausted = true;
        return res;
      }
      Assign(x, y);
    }
    res_ = &res;
    Search(0);
    if (res.found) {
      res.map = fwd_;
    } else if (!limit_hit_) {
      res.exhausted = true;
    }
    return res;
  }

 private:
  bool Consistent(int x, int y) const {
    if (cg_[x] != ch_[y] || g_.degree(x) != h_.degree(y)) return false;
    if (mapped_nbrs_[x] != image_nbrs_[y]) return false;
    for (int w : g_.neighbors(x)) {
      if (fwd_[w] >= 0 && !h_.HasEdge(y, fwd_[w])) return false;
    }
    return true;
  }

  void Assign(int x, int y) {
    fwd_[x] = y;
    bwd_[y] = x;
    ++count_;
    for (int w : g_.neighbors(x)) ++mapped_nbrs_[w];
    for (int z : h_.neighbors(y)) ++image_nbrs_[z];
  }

  void Unassign(int x) {
    const int y = fwd_[x];
    fwd_[x] = -1;
    bwd_[y] = -1;
    --count_;
    for (int w : g_.neighbors(x)) --mapped_nbrs_[w];
    for (int z : h_.neighbors(y)) --image_nbrs_[z];
  }

  // The unmapped vertex with the most mapped neighbours; least index on ties.
  int Pick() const {
    int best = -1, score = -1;
    for (int x = 0; x < n_; ++x) {
      if (fwd_[x] < 0 && mapped_nbrs_[x] > score) {
        best = x;
        score = mapped_nbrs_[x];
      }
    }
    return best;
  }

  bool Search(int depth) {
    ++res_->nodes;
    res_->max_depth = std::max(res_->max_depth, depth);
    if (opts_.node_limit && res_->nodes > opts_.node_limit) {
      limit_hit_ = true;
      return false;
    }
    if (count_ == n_) {
      res_->found = true;
      return true;
    }
    const int x = Pick();
    std::vector<int> cands;
    int anchor = -1;
    for (int w : g_.neighbors(x)) {
      if (fwd_[w] >= 0) {
        anchor = fwd_[w];
        break;
      }
    }
    if (anchor >= 0) {
      for (int y : h_.neighbors(anchor)) {
        if (bwd_[y] < 0 && Consistent(x, y)) cands.push_back(y);
      }
    } else {
      for (int y = 0; y < n_; ++y) {
        if (bwd_[y] < 0 && Consistent(x, y)) cands.push_back(y);
      }
    }
    for (int y : cands) {
      Assign(x, y);
      if (Search(depth + 1)) return true;
      Unassign(x);
      if (limit_hit_) return false;
    }
    ++res_->backtracks;
    return false;
  }

  const SimpleGraph& g_;
  const SimpleGraph& h_;
  ExtendOptions opts_;
  int n_;
  int count_ = 0;
  std::vector<int> fwd_, bwd_, mapped_nbrs_, image_nbrs_, cg_, ch_;
  ExtendResult* res_ = nullptr;
  bool limit_hit_ = false;
};

}  // namespace

ExtendResult ExtendPartial(const SimpleGraph& g, const SimpleGraph& h,
                           const std::vector<std::pair<int, int>>& partial,
                           const ExtendOptions& opts) {
  Extender e(g, h, opts);
  return e.Run(partial);
}

}  // namespace pg
