#ifndef WHRANK_TESTS_SUPPORT_HPP
#define WHRANK_TESTS_SUPPORT_HPP

// Shared corpus and brute-force oracles for the unit and acceptance tests.
// The oracles avoid the library's search, fusion and class machinery: they
// work from mul/inv and nothing else.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "whrank/automorphisms.hpp"
#include "whrank/constructors.hpp"
#include "whrank/group.hpp"
#include "whrank/group_io.hpp"

namespace whrank::testing {

inline std::string test_data(const std::string& name) { return std::string(WHRANK_TEST_DATA) + "/" + name; }
inline std::string repo_data(const std::string& name) { return std::string(WHRANK_DATA_DIR) + "/" + name; }

struct CorpusEntry {
  std::string name;
  FiniteGroup group;
  std::optional<FamilySpec> spec;
};

// At least 40 groups covering every constructor plus both file formats.
inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  const char* specs[] = {
      "cyc:1",     "cyc:2",      "cyc:3",      "cyc:4",     "cyc:5",     "cyc:6",      "cyc:8",
      "cyc:12",    "ab:2x2",     "ab:2x4",     "ab:2x2x2",  "ab:3x3",    "ab:2x6",     "dih:3",
      "dih:4",     "dih:5",      "dih:6",      "dih:8",     "sym:3",     "sym:4",      "sym:5",
      "alt:4",     "alt:5",      "cpm:7,3",    "cpm:5,4",   "cpm:11,5",  "cpm:13,4",   "cpm:13,6",
      "cpm:9,6,2", "cpm:10,4,3", "cpm:29,7",   "meta:2,2",  "meta:4,2",  "meta:3,3",   "meta:9,3",
      "meta:5,5",  "psl:2,4",    "psl:2,5",    "psl:2,7",   "psl:3,2",   "psl:2,8",    "prod:cyc:2*sym:3",
      "prod:cpm:5,4*cpm:7,3",    "prod:cyc:3*cyc:3",
  };
  for (const char* s : specs) {
    auto spec = parse_family_spec(s);
    out.push_back({s, build_family(spec), spec});
  }
  out.push_back({"q8.grp", read_group_file(test_data("q8.grp")), std::nullopt});
  out.push_back({"sl2_3.grp", read_group_file(test_data("sl2_3.grp")), std::nullopt});
  return out;
}

// ---------------------------------------------------------------- oracles

// Conjugacy classes by conjugating with every element.
inline std::vector<std::vector<Elem>> brute_classes(const FiniteGroup& g) {
  std::vector<int> seen(g.order(), -1);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x] >= 0) continue;
    std::set<Elem> c;
    for (Elem h = 0; h < g.order(); ++h) c.insert(g.mul(g.mul(g.inv(h), x), h));
    for (auto y : c) seen[y] = static_cast<int>(classes.size());
    classes.emplace_back(c.begin(), c.end());
  }
  return classes;
}

inline Elem naive_pow(const FiniteGroup& g, Elem x, std::uint64_t a) {
  Elem r = 0;
  for (std::uint64_t i = 0; i < a; ++i) r = g.mul(r, x);
  return r;
}

inline std::uint64_t naive_order(const FiniteGroup& g, Elem x) {
  std::uint64_t n = 1;
  for (Elem y = x; y != 0; y = g.mul(y, x)) ++n;
  return n;
}

// Every automorphism, found by trying all images of a generating set and
// extending along words. Only for small groups.
inline std::vector<std::vector<Elem>> brute_automorphisms(const FiniteGroup& g) {
  std::vector<Elem> gens(g.generators().begin(), g.generators().end());
  std::vector<std::vector<Elem>> result;
  std::vector<Elem> images(gens.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == gens.size()) {
      std::vector<Elem> f(g.order(), ~0u);
      f[0] = 0;
      std::vector<Elem> queue{0};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
          Elem x = g.mul(queue[q], gens[j]);
          Elem y = g.mul(f[queue[q]], images[j]);
          if (f[x] == ~0u) {
            f[x] = y;
            queue.push_back(x);
          } else if (f[x] != y) {
            return;
          }
        }
      }
      std::vector<bool> hit(g.order(), false);
      for (auto y : f) {
        if (hit[y]) return;
        hit[y] = true;
      }
      for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y)
          if (f[g.mul(x, y)] != g.mul(f[x], f[y])) return;
      result.push_back(f);
      return;
    }
    for (Elem y = 0; y < g.order(); ++y) {
      if (naive_order(g, y) != naive_order(g, gens[i])) continue;
      images[i] = y;
      rec(i + 1);
    }
  };
  rec(0);
  return result;
}

// Number of K-A classes straight from the definition: x ~ y iff x is in the
// A-orbit of y^a for a Galois exponent a. maps must be all of A, not just
// generators. field: 0 = Q, 1 = R, 2 = C.
inline std::size_t brute_kclasses(const FiniteGroup& g, const std::vector<std::vector<Elem>>& maps,
                                  int field) {
  std::vector<int> block(g.order(), -1);
  int blocks = 0;
  for (Elem y = 0; y < g.order(); ++y) {
    if (block[y] >= 0) continue;
    std::uint64_t n = naive_order(g, y);
    std::vector<std::uint64_t> exps;
    for (std::uint64_t a = 1; a <= n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      bool ok = field == 0 || a % n == 1 % n || (field == 1 && (a + 1) % n == 0);
      if (ok) exps.push_back(a);
    }
    for (auto a : exps) {
      Elem ya = naive_pow(g, y, a);
      for (const auto& f : maps) block[f[ya]] = blocks;
    }
    ++blocks;
  }
  return static_cast<std::size_t>(blocks);
}

inline std::vector<std::vector<Elem>> all_inner(const FiniteGroup& g) {
  std::set<std::vector<Elem>> maps;
  for (Elem h = 0; h < g.order(); ++h) {
    std::vector<Elem> f(g.order());
    for (Elem x = 0; x < g.order(); ++x) f[x] = g.mul(g.mul(g.inv(h), x), h);
    maps.insert(f);
  }
  return {maps.begin(), maps.end()};
}

}  // namespace whrank::testing

#endif  // WHRANK_TESTS_SUPPORT_HPP
