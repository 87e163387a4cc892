#include <algorithm>
#include <string>
#include <vector>

#include "clusterscope/quiver.hpp"

// Canonical labelling by colour refinement followed by a pruned search over
// the permutations that respect the refined cell order. The key compared
// lexicographically is the frozen flag string followed by the strictly
// lower triangle read row by row, so each new position extends the key by
// the entries between the new vertex and every earlier one.

namespace clusterscope {

namespace {

using Signature = std::vector<std::int64_t>;

std::vector<int> refine_colours(const IceQuiver& q) {
  const Index n = q.size();
  std::vector<Signature> sig(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v) {
    Signature s{q.is_frozen(v) ? 1 : 0};
    std::vector<std::int64_t> row;
    for (Index w = 0; w < n; ++w)
      if (w != v) row.push_back(q(v, w));
    std::sort(row.begin(), row.end());
    s.insert(s.end(), row.begin(), row.end());
    sig[static_cast<std::size_t>(v)] = std::move(s);
  }

  auto compress = [](const std::vector<Signature>& sigs, int* distinct) {
    std::vector<Signature> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colour(sigs.size());
    for (std::size_t v = 0; v < sigs.size(); ++v)
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) -
                                   sorted.begin());
    *distinct = static_cast<int>(sorted.size());
    return colour;
  };

  int distinct = 0;
  std::vector<int> colour = compress(sig, &distinct);
  while (true) {
    for (Index v = 0; v < n; ++v) {
      Signature s{colour[static_cast<std::size_t>(v)]};
      std::vector<std::pair<std::int64_t, int>> nb;
      for (Index w = 0; w < n; ++w)
        if (w != v && q(v, w) != 0) nb.emplace_back(q(v, w), colour[static_cast<std::size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      for (const auto& [entry, c] : nb) {
        s.push_back(entry);
        s.push_back(c);
      }
      sig[static_cast<std::size_t>(v)] = std::move(s);
    }
    int refined = 0;
    std::vector<int> next = compress(sig, &refined);
    if (refined == distinct) break;
    colour = std::move(next);
    distinct = refined;
  }
  return colour;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const IceQuiver& q) : q_(q), n_(q.size()) {
    colour_ = refine_colours(q);
    cell_of_position_ = colour_;
    std::sort(cell_of_position_.begin(), cell_of_position_.end());
    // Vertices u < v are interchangeable when swapping them is an
    // automorphism: same frozen flag, no arrows between them, equal rows.
    twin_of_.assign(static_cast<std::size_t>(n_), -1);
    for (Index v = 0; v < n_; ++v) {
      for (Index u = 0; u < v; ++u) {
        if (is_twin(u, v)) {
          twin_of_[static_cast<std::size_t>(v)] = u;
          break;
        }
      }
    }
    used_.assign(static_cast<std::size_t>(n_), false);
  }

  std::string run() {
    if (n_ == 0) return "n=0";
    search(0, false);
    std::string out = "n=" + std::to_string(n_) + ";f=";
    for (Index p = 0; p < n_; ++p) out += q_.is_frozen(best_order_[static_cast<std::size_t>(p)]) ? '1' : '0';
    out += ";q=";
    for (std::size_t i = 0; i < best_key_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(best_key_[i]);
    }
    return out;
  }

 private:
  bool is_twin(Index u, Index v) const {
    if (q_.is_frozen(u) != q_.is_frozen(v) || q_(u, v) != 0) return false;
    if (colour_[static_cast<std::size_t>(u)] != colour_[static_cast<std::size_t>(v)]) return false;
    for (Index w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (q_(u, w) != q_(v, w)) return false;
    }
    return true;
  }

  // `less` records that the current prefix is already strictly below the
  // best key, so no further comparison is needed.
  void search(Index position, bool less) {
    if (position == n_) {
      if (!have_best_ || less) {
        best_key_ = key_;
        best_order_ = order_;
        have_best_ = true;
        ++generation_;
      }
      return;
    }
    const int cell = cell_of_position_[static_cast<std::size_t>(position)];
    for (Index v = 0; v < n_; ++v) {
      if (used_[static_cast<std::size_t>(v)] || colour_[static_cast<std::size_t>(v)] != cell) continue;
      const Index twin = twin_of_[static_cast<std::size_t>(v)];
      if (twin >= 0 && !used_[static_cast<std::size_t>(twin)]) continue;

      const std::size_t mark = key_.size();
      for (Index p = 0; p < position; ++p) key_.push_back(q_(v, order_[static_cast<std::size_t>(p)]));
      bool next_less = less;
      bool prune = false;
      if (have_best_ && !less) {
        for (std::size_t i = mark; i < key_.size(); ++i) {
          if (key_[i] < best_key_[i]) {
            next_less = true;
            break;
          }
          if (key_[i] > best_key_[i]) {
            prune = true;
            break;
          }
        }
      }
      if (!prune) {
        const std::size_t generation = generation_;
        used_[static_cast<std::size_t>(v)] = true;
        order_.push_back(v);
        search(position + 1, next_less);
        order_.pop_back();
        used_[static_cast<std::size_t>(v)] = false;
        // The best key was replaced from inside this subtree, so it now
        // shares the current prefix.
        if (generation_ != generation) less = false;
      }
      key_.resize(mark);
    }
  }

  const IceQuiver& q_;
  Index n_;
  std::vector<int> colour_;
  std::vector<int> cell_of_position_;
  std::vector<Index> twin_of_;
  std::vector<bool> used_;
  std::vector<Index> order_;
  std::vector<std::int64_t> key_;
  std::vector<std::int64_t> best_key_;
  std::vector<Index> best_order_;
  bool have_best_ = false;
  std::size_t generation_ = 0;
};

}  // namespace

std::string canonical_form(const IceQuiver& q) { return CanonicalSearch(q).run(); }

std::string mutable_canonical_form(const IceQuiver& q) {
  return canonical_form(mutable_part(q).quiver);
}

}  // namespace clusterscope
