#include "whrank/classes.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace whrank {

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  auto gens = g.generators();
  std::vector<Elem> gen_inv;
  for (auto s : gens) gen_inv.push_back(g.inv(s));

  constexpr std::uint32_t kUnset = ~0u;
  std::vector<std::uint32_t> orbit_id(n, kUnset);
  std::vector<std::vector<Elem>> orbits;
  for (Elem x = 0; x < n; ++x) {
    if (orbit_id[x] != kUnset) continue;
    auto id = static_cast<std::uint32_t>(orbits.size());
    std::vector<Elem> orbit{x};
    orbit_id[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Elem y = g.mul(g.mul(gen_inv[j], orbit[i]), gens[j]);
        if (orbit_id[y] == kUnset) {
          orbit_id[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<std::uint32_t> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto& oa = orbits[a];
    const auto& ob = orbits[b];
    return std::make_tuple(g.element_order(oa.front()), oa.size(), oa.front()) <
           std::make_tuple(g.element_order(ob.front()), ob.size(), ob.front());
  });

  ConjugacyClasses c;
  c.class_of.assign(n, 0);
  for (std::uint32_t k = 0; k < perm.size(); ++k) {
    auto& orbit = orbits[perm[k]];
    for (auto x : orbit) c.class_of[x] = k;
    c.representatives.push_back(orbit.front());
    c.sizes.push_back(orbit.size());
    c.class_order.push_back(g.element_order(orbit.front()));
    c.members.push_back(std::move(orbit));
  }
  return c;
}

std::vector<std::uint32_t> class_power_map(const FiniteGroup& g, const ConjugacyClasses& classes,
                                           long long a) {
  std::vector<std::uint32_t> out(classes.count());
  for (std::size_t k = 0; k < classes.count(); ++k) {
    out[k] = classes.class_of[g.pow(classes.representatives[k], a)];
  }
  return out;
}

namespace {

std::string letters(std::size_t i) {
  std::string s;
  ++i;
  while (i > 0) {
    --i;
    s.insert(s.begin(), static_cast<char>('A' + i % 26));
    i /= 26;
  }
  return s;
}

}  // namespace

std::vector<std::string> atlas_class_names(const ConjugacyClasses& classes) {
  std::vector<std::string> names;
  std::uint32_t prev_order = 0;
  std::size_t letter = 0;
  for (std::size_t k = 0; k < classes.count(); ++k) {
    if (classes.class_order[k] != prev_order) {
      prev_order = classes.class_order[k];
      letter = 0;
    }
    names.push_back(std::to_string(classes.class_order[k]) + letters(letter++));
  }
  return names;
}

}  // namespace whrank
