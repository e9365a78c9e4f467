#ifndef WHRANK_UNION_FIND_HPP
#define WHRANK_UNION_FIND_HPP

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace whrank {

// Path-halving union-find whose roots are the least members, so block labels
// come out ordered by least member.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

  // (label of each member, number of blocks)
  std::pair<std::vector<std::uint32_t>, std::size_t> labels() {
    std::vector<std::uint32_t> out(parent_.size());
    std::vector<std::uint32_t> label(parent_.size(), ~0u);
    std::size_t blocks = 0;
    for (std::uint32_t x = 0; x < parent_.size(); ++x) {
      auto r = find(x);
      if (label[r] == ~0u) label[r] = static_cast<std::uint32_t>(blocks++);
      out[x] = label[r];
    }
    return {out, blocks};
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace whrank

#endif  // WHRANK_UNION_FIND_HPP
