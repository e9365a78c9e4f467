#include "whrank/automorphisms.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "whrank/error.hpp"

namespace whrank {

GroupMap identity_map(const FiniteGroup& g) {
  GroupMap f{g, g, std::vector<Elem>(g.order())};
  std::iota(f.images.begin(), f.images.end(), Elem{0});
  return f;
}

GroupMap inner_map(const FiniteGroup& g, Elem by) {
  GroupMap f{g, g, std::vector<Elem>(g.order())};
  Elem by_inv = g.inv(by);
  for (Elem x = 0; x < g.order(); ++x) f.images[x] = g.mul(g.mul(by_inv, x), by);
  return f;
}

GroupMap compose_maps(const GroupMap& first, const GroupMap& second) {
  GroupMap f{first.source, second.target, std::vector<Elem>(first.images.size())};
  for (std::size_t x = 0; x < f.images.size(); ++x) f.images[x] = second.images[first.images[x]];
  return f;
}

GroupMap inverse_map(const GroupMap& f) {
  GroupMap r{f.target, f.source, std::vector<Elem>(f.images.size())};
  for (std::size_t x = 0; x < f.images.size(); ++x) r.images[f.images[x]] = static_cast<Elem>(x);
  return r;
}

bool is_homomorphism(const GroupMap& f) {
  const auto& s = f.source;
  const auto& t = f.target;
  if (f.images.size() != s.order()) return false;
  for (auto y : f.images)
    if (y >= t.order()) return false;
  if (f.images[0] != 0) return false;
  for (Elem x = 0; x < s.order(); ++x) {
    for (auto g : s.generators()) {
      if (f.images[s.mul(x, g)] != t.mul(f.images[x], f.images[g])) return false;
    }
  }
  return true;
}

bool is_automorphism(const FiniteGroup& g, const GroupMap& f) {
  if (f.images.size() != g.order()) return false;
  std::vector<bool> hit(g.order(), false);
  for (auto y : f.images) {
    if (y >= g.order() || hit[y]) return false;
    hit[y] = true;
  }
  GroupMap h{g, g, f.images};
  return is_homomorphism(h);
}

ActionSet inner_automorphisms(const FiniteGroup& g) {
  ActionSet a{g, {}, true, kInnOnly, std::nullopt};
  for (auto s : g.generators()) a.generators.push_back(inner_map(g, s));
  return a;
}

ActionSet action_with_inner(const FiniteGroup& g, std::vector<GroupMap> generators,
                            std::string provenance) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!is_automorphism(g, generators[i]))
      throw GroupError(Errc::not_homomorphism,
                       "generator " + std::to_string(i) + " is not an automorphism of " + g.label());
  }
  ActionSet a = inner_automorphisms(g);
  for (auto& f : generators) a.generators.push_back(std::move(f));
  a.provenance = std::move(provenance);
  return a;
}

// -------------------------------------------------------- orbits of tuples

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<Elem>& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : v) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

using TupleSet = std::unordered_set<std::vector<Elem>, TupleHash>;

// Orbit of the generator tuple of a.group under <a.generators>. Automorphisms
// are determined by their values on generators, so the action is free and
// the orbit is in bijection with the group.
TupleSet tuple_orbit(const ActionSet& a, std::uint64_t limit) {
  std::vector<Elem> start(a.group.generators().begin(), a.group.generators().end());
  TupleSet seen{start};
  std::vector<std::vector<Elem>> queue{start};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& f : a.generators) {
      std::vector<Elem> next(queue[i].size());
      for (std::size_t k = 0; k < next.size(); ++k) next[k] = f.images[queue[i][k]];
      if (seen.insert(next).second) {
        if (seen.size() > limit)
          throw GroupError(Errc::budget_exceeded,
                           "action orbit exceeds " + std::to_string(limit) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

}  // namespace

std::uint64_t action_order(const ActionSet& a, std::uint64_t limit) {
  return tuple_orbit(a, limit).size();
}

bool action_contains(const ActionSet& a, const GroupMap& f, std::uint64_t limit) {
  std::vector<Elem> t;
  for (auto s : a.group.generators()) t.push_back(f.images[s]);
  return tuple_orbit(a, limit).count(t) > 0;
}

bool verify_contains_inner(const ActionSet& a) {
  auto orbit = tuple_orbit(a, 50'000'000);
  const auto& g = a.group;
  for (auto s : g.generators()) {
    auto f = inner_map(g, s);
    std::vector<Elem> t;
    for (auto x : g.generators()) t.push_back(f.images[x]);
    if (!orbit.count(t)) return false;
  }
  return true;
}

std::vector<std::uint32_t> induced_class_permutation(const GroupMap& f,
                                                     const ConjugacyClasses& classes) {
  std::vector<std::uint32_t> p(classes.count());
  for (std::size_t c = 0; c < classes.count(); ++c)
    p[c] = classes.class_of[f.images[classes.representatives[c]]];
  return p;
}

// --------------------------------------------------------- automorphism search

namespace {

// Class invariant preserved by every automorphism: order, size, and the
// sorted (order, size) pairs of the classes of all powers.
std::vector<std::uint32_t> class_profiles(const FiniteGroup& g, const ConjugacyClasses& cc) {
  std::map<std::vector<std::uint64_t>, std::uint32_t> ids;
  std::vector<std::uint32_t> out(cc.count());
  for (std::size_t c = 0; c < cc.count(); ++c) {
    Elem x = cc.representatives[c];
    std::vector<std::pair<std::uint64_t, std::uint64_t>> powers;
    Elem p = x;
    for (std::uint32_t a = 1; a < cc.class_order[c]; ++a) {
      auto pc = cc.class_of[p];
      powers.emplace_back(cc.class_order[pc], cc.sizes[pc]);
      p = g.mul(p, x);
    }
    std::sort(powers.begin(), powers.end());
    std::vector<std::uint64_t> key{cc.class_order[c], cc.sizes[c]};
    for (auto& [o, s] : powers) {
      key.push_back(o);
      key.push_back(s);
    }
    out[c] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size())).first->second;
  }
  return out;
}

class AutSearch {
 public:
  AutSearch(const FiniteGroup& g, std::uint64_t budget, AutSearchStats* stats)
      : g_(g), budget_(budget), stats_(stats), cc_(conjugacy_classes(g)) {
    seq_ = greedy_generating_sequence(g);
    auto prof = class_profiles(g, cc_);
    cand_.resize(seq_.size());
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      auto want = prof[cc_.class_of[seq_[i]]];
      for (Elem y = 0; y < g.order(); ++y)
        if (prof[cc_.class_of[y]] == want) cand_[i].push_back(y);
    }
    seq_orders_.resize(seq_.size() * seq_.size());
    for (std::size_t i = 0; i < seq_.size(); ++i)
      for (std::size_t j = 0; j < seq_.size(); ++j)
        seq_orders_[i * seq_.size() + j] = g.element_order(g.mul(seq_[j], seq_[i]));
    img_.assign(g.order(), 0);
    img_stamp_.assign(g.order(), 0);
    used_stamp_.assign(g.order(), 0);
    y_.assign(seq_.size(), 0);
  }

  std::vector<GroupMap> run(std::uint64_t& order) {
    const std::size_t t = seq_.size();
    orbit_sizes_.assign(t, 1);
    order = 1;
    for (std::size_t level = t; level-- > 0;) {
      current_level_ = level;
      auto cgens = centralizer_generators(level);
      std::vector<char> in_orbit(g_.order(), 0), failed(g_.order(), 0);
      std::vector<Elem> orbit{seq_[level]};
      in_orbit[seq_[level]] = 1;
      close(orbit, in_orbit, cgens);
      for (auto y : cand_[level]) {
        if (in_orbit[y] || failed[y]) continue;
        for (std::size_t i = 0; i < level; ++i) y_[i] = seq_[i];
        y_[level] = y;
        if (consistent(level) && complete(level + 1)) {
          found_.push_back(current_map());
          close(orbit, in_orbit, cgens);
        } else {
          std::vector<Elem> bad{y};
          failed[y] = 1;
          close(bad, failed, cgens);
        }
      }
      orbit_sizes_[level] = orbit.size();
      order *= orbit.size();
      if (stats_) stats_->orbit_sizes = orbit_sizes_;
    }
    if (stats_) {
      stats_->nodes = nodes_;
      stats_->sequence = seq_;
      stats_->candidates.clear();
      for (auto& c : cand_) stats_->candidates.push_back(c.size());
    }
    return std::move(found_);
  }

 private:
  // Generators of the centralizer of g_1..g_level, used as inner maps that
  // fix the prefix.
  std::vector<Elem> centralizer_generators(std::size_t level) {
    if (level == 0) return {g_.generators().begin(), g_.generators().end()};
    std::vector<Elem> cent;
    for (Elem c = 0; c < g_.order(); ++c) {
      bool ok = true;
      for (std::size_t i = 0; i < level && ok; ++i)
        ok = g_.mul(c, seq_[i]) == g_.mul(seq_[i], c);
      if (ok) cent.push_back(c);
    }
    std::vector<Elem> gens;
    std::vector<char> in(g_.order(), 0);
    in[0] = 1;
    std::size_t covered = 1;
    for (auto c : cent) {
      if (covered == cent.size()) break;
      if (in[c]) continue;
      gens.push_back(c);
      auto closure = subgroup_closure(g_, gens);
      for (auto x : closure) in[x] = 1;
      covered = closure.size();
    }
    return gens;
  }

  Elem conj(Elem y, Elem c) const { return g_.mul(g_.mul(g_.inv(c), y), c); }

  // Closes a set of points under the centralizer generators and every map
  // found so far; all of them fix the current prefix.
  void close(std::vector<Elem>& orbit, std::vector<char>& in, const std::vector<Elem>& cgens) {
    auto visit = [&](Elem z) {
      if (!in[z]) {
        in[z] = 1;
        orbit.push_back(z);
      }
    };
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      Elem y = orbit[i];
      for (auto c : cgens) visit(conj(y, c));
      for (const auto& f : found_) visit(f.images[y]);
    }
  }

  // Checks that g_j -> y_j (j <= level) extends to an injective homomorphism
  // on <g_1..g_level>; leaves the map in img_.
  bool consistent(std::size_t level) {
    if (++nodes_ > budget_) {
      std::string msg = "automorphism search of " + g_.label() + " exceeded " +
                        std::to_string(budget_) + " nodes at level " +
                        std::to_string(current_level_ + 1) + " of " + std::to_string(seq_.size()) +
                        "; " + std::to_string(found_.size()) + " automorphisms found, orbit sizes";
      for (std::size_t i = current_level_ + 1; i < seq_.size(); ++i)
        msg += " " + std::to_string(orbit_sizes_[i]);
      throw GroupError(Errc::budget_exceeded, msg);
    }
    const std::size_t t = seq_.size();
    for (std::size_t j = 0; j < level; ++j)
      if (g_.element_order(g_.mul(y_[j], y_[level])) != seq_orders_[level * t + j]) return false;
    ++stamp_;
    queue_.assign(1, 0);
    img_[0] = 0;
    img_stamp_[0] = stamp_;
    used_stamp_[0] = stamp_;
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      Elem x = queue_[i];
      Elem mx = img_[x];
      for (std::size_t j = 0; j <= level; ++j) {
        Elem xs = g_.mul(x, seq_[j]);
        Elem target = g_.mul(mx, y_[j]);
        if (img_stamp_[xs] == stamp_) {
          if (img_[xs] != target) return false;
          continue;
        }
        if (used_stamp_[target] == stamp_) return false;
        img_[xs] = target;
        img_stamp_[xs] = stamp_;
        used_stamp_[target] = stamp_;
        queue_.push_back(xs);
      }
    }
    return true;
  }

  bool complete(std::size_t level) {
    if (level == seq_.size()) return true;
    for (auto y : cand_[level]) {
      y_[level] = y;
      if (consistent(level) && complete(level + 1)) return true;
    }
    return false;
  }

  GroupMap current_map() {
    consistent(seq_.size() - 1);
    return GroupMap{g_, g_, img_};
  }

  const FiniteGroup& g_;
  std::uint64_t budget_;
  AutSearchStats* stats_;
  ConjugacyClasses cc_;
  std::vector<Elem> seq_;
  std::vector<std::vector<Elem>> cand_;
  std::vector<std::uint32_t> seq_orders_;
  std::vector<Elem> y_;
  std::vector<Elem> img_;
  std::vector<std::uint32_t> img_stamp_, used_stamp_;
  std::uint32_t stamp_ = 0;
  std::vector<Elem> queue_;
  std::vector<GroupMap> found_;
  std::uint64_t nodes_ = 0;
  std::size_t current_level_ = 0;
  std::vector<std::uint64_t> orbit_sizes_;
};

GroupMap lift_left(const FiniteGroup& prod, const GroupMap& f, std::size_t nh) {
  GroupMap r{prod, prod, std::vector<Elem>(prod.order())};
  for (Elem x = 0; x < prod.order(); ++x)
    r.images[x] = static_cast<Elem>(f.images[x / nh] * nh + x % nh);
  return r;
}

GroupMap lift_right(const FiniteGroup& prod, const GroupMap& f, std::size_t nh) {
  GroupMap r{prod, prod, std::vector<Elem>(prod.order())};
  for (Elem x = 0; x < prod.order(); ++x)
    r.images[x] = static_cast<Elem>((x / nh) * nh + f.images[x % nh]);
  return r;
}

}  // namespace

ActionSet automorphism_group(const FiniteGroup& g, std::uint64_t budget, AutSearchStats* stats,
                             bool decompose) {
  auto factors = g.factors();
  if (decompose && factors.size() == 2 &&
      std::gcd(factors[0].order(), factors[1].order()) == 1) {
    AutSearchStats s1, s2;
    auto a1 = automorphism_group(factors[0], budget, stats ? &s1 : nullptr, true);
    auto a2 = automorphism_group(factors[1], budget, stats ? &s2 : nullptr, true);
    std::vector<GroupMap> maps;
    for (const auto& f : a1.generators) maps.push_back(lift_left(g, f, factors[1].order()));
    for (const auto& f : a2.generators) maps.push_back(lift_right(g, f, factors[1].order()));
    auto a = action_with_inner(g, std::move(maps), kAutSearch);
    if (a1.known_order && a2.known_order) a.known_order = *a1.known_order * *a2.known_order;
    if (stats) {
      *stats = AutSearchStats{};
      stats->nodes = s1.nodes + s2.nodes;
      stats->decomposed = true;
    }
    return a;
  }
  if (g.order() == 1) {
    auto a = inner_automorphisms(g);
    a.provenance = kAutSearch;
    a.known_order = 1;
    return a;
  }
  AutSearch search(g, budget, stats);
  std::uint64_t order = 0;
  auto maps = search.run(order);
  auto a = action_with_inner(g, std::move(maps), kAutSearch);
  a.known_order = order;
  return a;
}

// ----------------------------------------------------- lemma constructions

namespace {

std::vector<char> membership(const FiniteGroup& g, std::span<const Elem> set) {
  std::vector<char> in(g.order(), 0);
  for (auto x : set) {
    if (x >= g.order()) throw GroupError(Errc::bad_parameters, "element index out of range");
    in[x] = 1;
  }
  return in;
}

void require_subgroup(const FiniteGroup& g, std::span<const Elem> h, const std::vector<char>& in,
                      const char* name) {
  if (h.empty() || !in[0])
    throw GroupError(Errc::bad_parameters, std::string(name) + " does not contain the identity");
  for (auto x : h)
    for (auto y : h)
      if (!in[g.mul(x, y)])
        throw GroupError(Errc::bad_parameters, std::string(name) + " is not closed under products");
}

}  // namespace

GroupMap abelian_normal_power_automorphism(const FiniteGroup& g, std::span<const Elem> h, Elem x,
                                           long long a) {
  auto in = membership(g, h);
  require_subgroup(g, h, in, "H");
  std::size_t hsize = std::count(in.begin(), in.end(), 1);
  for (auto u : h)
    for (auto v : h)
      if (g.mul(u, v) != g.mul(v, u))
        throw GroupError(Errc::not_abelian, "H is not abelian: elements " + std::to_string(u) +
                                                " and " + std::to_string(v) + " do not commute");
  for (auto s : g.generators())
    for (auto u : h)
      if (!in[g.conjugate(u, s)])
        throw GroupError(Errc::not_normal, "H is not normal: conjugating element " +
                                               std::to_string(u) + " by generator " +
                                               std::to_string(s) + " leaves H");
  if (x >= g.order()) throw GroupError(Errc::bad_parameters, "x out of range");
  const std::size_t n = g.order();
  const std::size_t m = n / hsize;
  // Cosets H x^i, i < m, must cover G.
  std::vector<char> covered(n, 0);
  std::size_t count = 0;
  Elem xi = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (auto u : h) {
      Elem e = g.mul(u, xi);
      if (!covered[e]) {
        covered[e] = 1;
        ++count;
      }
    }
    xi = g.mul(xi, x);
  }
  if (count != n) throw GroupError(Errc::not_generating, "H and x do not generate G");
  long long nn = static_cast<long long>(n);
  if (std::gcd(((a % nn) + nn) % nn, nn) != 1 && n > 1)
    throw GroupError(Errc::bad_exponent,
                     "exponent " + std::to_string(a) + " is not coprime to |G| = " + std::to_string(n));
  long long mm = static_cast<long long>(m);
  if (((a - 1) % mm + mm) % mm != 0)
    throw GroupError(Errc::bad_exponent, "exponent " + std::to_string(a) + " is not 1 mod |G/H| = " +
                                             std::to_string(m));
  GroupMap f{g, g, std::vector<Elem>(n, 0)};
  xi = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Elem xai = g.pow(x, a * static_cast<long long>(i));
    for (auto u : h) f.images[g.mul(u, xi)] = g.mul(g.pow(u, a), xai);
    xi = g.mul(xi, x);
  }
  if (!is_automorphism(g, f))
    throw GroupError(Errc::not_homomorphism, "power map is not an automorphism");
  return f;
}

GroupMap central_shift_automorphism(const FiniteGroup& g, std::span<const Elem> z,
                                    const GroupMap& psi) {
  auto in = membership(g, z);
  require_subgroup(g, z, in, "Z");
  for (auto u : z)
    for (auto s : g.generators())
      if (g.mul(u, s) != g.mul(s, u))
        throw GroupError(Errc::not_central, "element " + std::to_string(u) + " is not central");
  GroupMap p{g, g, psi.images};
  if (!is_homomorphism(p))
    throw GroupError(Errc::not_homomorphism, "psi is not a homomorphism");
  for (auto y : psi.images)
    if (!in[y]) throw GroupError(Errc::not_homomorphism, "psi does not take values in Z");
  for (auto u : z)
    if (psi.images[u] != 0)
      throw GroupError(Errc::kernel_condition,
                       "Z is not contained in ker psi (element " + std::to_string(u) + ")");
  GroupMap f{g, g, std::vector<Elem>(g.order())};
  for (Elem x = 0; x < g.order(); ++x) f.images[x] = g.mul(x, psi.images[x]);
  if (!is_automorphism(g, f))
    throw GroupError(Errc::not_homomorphism, "central shift is not an automorphism");
  return f;
}

// -------------------------------------------------------------- file format

std::vector<GroupMap> read_aut(std::istream& in, const FiniteGroup& g, const std::string& source) {
  std::vector<GroupMap> maps;
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  auto fail = [&](const std::string& why) -> void {
    throw GroupError(Errc::parse_error, source + ":" + std::to_string(line) + ": " + why);
  };
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    std::string word;
    if (!(ss >> word)) continue;
    if (!header) {
      if (word != "%aut") fail("expected '%aut <name>'");
      header = true;
      continue;
    }
    if (word != "map") fail("expected 'map i_0 ... i_{n-1}'");
    GroupMap f{g, g, {}};
    long long v;
    while (ss >> v) {
      if (v < 0 || static_cast<std::size_t>(v) >= g.order()) fail("image out of range");
      f.images.push_back(static_cast<Elem>(v));
    }
    if (!ss.eof()) fail("non-numeric image");
    if (f.images.size() != g.order())
      fail("map has " + std::to_string(f.images.size()) + " images, group order is " +
           std::to_string(g.order()));
    maps.push_back(std::move(f));
  }
  if (!header) fail("missing '%aut' header");
  return maps;
}

std::vector<GroupMap> read_aut_file(const std::filesystem::path& path, const FiniteGroup& g) {
  std::ifstream in(path);
  if (!in) throw GroupError(Errc::io_error, "cannot open " + path.string());
  return read_aut(in, g, path.string());
}

void write_aut(std::ostream& out, const FiniteGroup& g, std::span<const GroupMap> maps) {
  out << "%aut " << g.label() << "\n";
  for (const auto& f : maps) {
    out << "map";
    for (auto y : f.images) out << ' ' << y;
    out << "\n";
  }
}

}  // namespace whrank
