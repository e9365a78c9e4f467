#include "whrank/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "whrank/error.hpp"

namespace whrank {

// ---------------------------------------------------------------- PermIndex

PermIndex::PermIndex(std::size_t degree, std::vector<std::uint32_t> key_points)
    : degree_(degree), key_points_(std::move(key_points)) {}

std::uint64_t PermIndex::hash(const std::uint32_t* images) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::size_t k = 0; k < key_points_.size(); ++k) {
    h ^= images[k] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return h ^ (h >> 33);
}

bool PermIndex::matches(std::span<const std::uint32_t> flat_perms, Elem e,
                        const std::uint32_t* images) const {
  const std::uint32_t* p = flat_perms.data() + static_cast<std::size_t>(e) * degree_;
  for (std::size_t k = 0; k < key_points_.size(); ++k) {
    if (p[key_points_[k]] != images[k]) return false;
  }
  return true;
}

void PermIndex::grow(std::span<const std::uint32_t> flat_perms) {
  std::vector<std::uint32_t> old = std::move(slots_);
  slots_.assign(std::max<std::size_t>(16, old.size() * 2), 0);
  std::size_t mask = slots_.size() - 1;
  std::vector<std::uint32_t> images(key_points_.size());
  for (auto s : old) {
    if (s == 0) continue;
    const std::uint32_t* p = flat_perms.data() + static_cast<std::size_t>(s - 1) * degree_;
    for (std::size_t k = 0; k < key_points_.size(); ++k) images[k] = p[key_points_[k]];
    std::size_t pos = hash(images.data()) & mask;
    while (slots_[pos] != 0) pos = (pos + 1) & mask;
    slots_[pos] = s;
  }
}

void PermIndex::insert(std::span<const std::uint32_t> flat_perms, Elem e) {
  if ((used_ + 1) * 2 > slots_.size()) grow(flat_perms);
  std::vector<std::uint32_t> images(key_points_.size());
  const std::uint32_t* p = flat_perms.data() + static_cast<std::size_t>(e) * degree_;
  for (std::size_t k = 0; k < key_points_.size(); ++k) images[k] = p[key_points_[k]];
  std::size_t mask = slots_.size() - 1;
  std::size_t pos = hash(images.data()) & mask;
  while (slots_[pos] != 0) pos = (pos + 1) & mask;
  slots_[pos] = e + 1;
  ++used_;
}

void PermIndex::rebuild(std::span<const std::uint32_t> flat_perms, std::size_t count) {
  std::size_t cap = 16;
  while (cap < count * 2 + 2) cap *= 2;
  slots_.assign(cap, 0);
  used_ = 0;
  for (std::size_t e = 0; e < count; ++e) insert(flat_perms, static_cast<Elem>(e));
}

std::optional<Elem> PermIndex::find(std::span<const std::uint32_t> flat_perms,
                                    std::span<const std::uint32_t> images) const {
  if (slots_.empty()) return std::nullopt;
  std::size_t mask = slots_.size() - 1;
  std::size_t pos = hash(images.data()) & mask;
  while (slots_[pos] != 0) {
    Elem e = slots_[pos] - 1;
    if (matches(flat_perms, e, images.data())) return e;
    pos = (pos + 1) & mask;
  }
  return std::nullopt;
}

// --------------------------------------------------------------- PermKernel

namespace {

// Greedy base: walk the points in order and keep those that split some cell
// of the partition of elements by images of the points kept so far.
std::vector<std::uint32_t> choose_base(std::size_t degree, std::size_t count,
                                       std::span<const std::uint32_t> perms) {
  std::vector<std::uint32_t> base;
  std::vector<std::uint64_t> cell(count, 0);
  std::size_t cells = 1;
  for (std::uint32_t pt = 0; pt < degree && cells < count; ++pt) {
    std::map<std::pair<std::uint64_t, std::uint32_t>, std::uint64_t> refined;
    std::vector<std::uint64_t> next(count);
    for (std::size_t e = 0; e < count; ++e) {
      auto key = std::make_pair(cell[e], perms[e * degree + pt]);
      auto it = refined.try_emplace(key, refined.size()).first;
      next[e] = it->second;
    }
    if (refined.size() > cells) {
      base.push_back(pt);
      cells = refined.size();
      cell = std::move(next);
    }
  }
  return base;
}

}  // namespace

PermKernel::PermKernel(std::size_t degree, std::vector<std::uint32_t> flat_perms)
    : degree_(degree),
      count_(degree == 0 ? 1 : flat_perms.size() / degree),
      perms_(std::move(flat_perms)) {
  index_ = PermIndex(degree_, choose_base(degree_, count_, perms_));
  index_.rebuild(perms_, count_);
}

Elem PermKernel::mul(Elem x, Elem y) const {
  auto base = index_.key_points();
  const std::uint32_t* px = perms_.data() + static_cast<std::size_t>(x) * degree_;
  const std::uint32_t* py = perms_.data() + static_cast<std::size_t>(y) * degree_;
  std::uint32_t small[64];
  std::vector<std::uint32_t> large;
  std::uint32_t* images = small;
  if (base.size() > 64) {
    large.resize(base.size());
    images = large.data();
  }
  for (std::size_t k = 0; k < base.size(); ++k) images[k] = py[px[base[k]]];
  auto r = index_.find(perms_, {images, base.size()});
  return r ? *r : 0;  // closure guarantees a hit
}

std::optional<Elem> PermKernel::find(std::span<const std::uint32_t> p) const {
  if (p.size() != degree_) return std::nullopt;
  auto base = index_.key_points();
  std::vector<std::uint32_t> images(base.size());
  for (std::size_t k = 0; k < base.size(); ++k) images[k] = p[base[k]];
  auto r = index_.find(perms_, images);
  if (!r) return std::nullopt;
  auto q = perm(*r);
  if (!std::equal(q.begin(), q.end(), p.begin())) return std::nullopt;
  return r;
}

// -------------------------------------------------------------- other kernels

namespace {

class TrivialKernel final : public MulKernel {
 public:
  Elem mul(Elem, Elem) const override { return 0; }
};

class CayleyKernel final : public MulKernel {
 public:
  CayleyKernel(std::size_t n, std::vector<std::uint32_t> table) : n_(n), table_(std::move(table)) {}
  Elem mul(Elem x, Elem y) const override { return table_[static_cast<std::size_t>(x) * n_ + y]; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> table_;
};

class ProductKernel final : public MulKernel {
 public:
  ProductKernel(FiniteGroup g, FiniteGroup h) : g_(std::move(g)), h_(std::move(h)) {}
  Elem mul(Elem x, Elem y) const override {
    auto nh = static_cast<Elem>(h_.order());
    return g_.mul(x / nh, y / nh) * nh + h_.mul(x % nh, y % nh);
  }

 private:
  FiniteGroup g_, h_;
};

}  // namespace

// -------------------------------------------------------------- FiniteGroup

struct FiniteGroup::Data {
  std::string label;
  std::size_t order = 1;
  Backing kind = Backing::structured;
  std::shared_ptr<const MulKernel> kernel;
  std::vector<Elem> inverse{0};
  std::vector<std::uint32_t> elem_order{1};
  std::uint64_t exponent = 1;
  std::vector<Elem> generators;
  std::vector<FiniteGroup> factors;
  std::map<std::string, std::string> metadata;
  const PermKernel* perm = nullptr;
};

FiniteGroup::FiniteGroup() {
  auto d = std::make_shared<Data>();
  d->label = "1";
  d->kernel = std::make_shared<TrivialKernel>();
  d_ = std::move(d);
}

FiniteGroup FiniteGroup::from_kernel(std::string label, std::size_t order, Backing kind,
                                     std::shared_ptr<const MulKernel> kernel,
                                     std::vector<Elem> generators,
                                     std::vector<FiniteGroup> factors) {
  auto d = std::make_shared<Data>();
  d->label = std::move(label);
  d->order = order;
  d->kind = kind;
  d->kernel = std::move(kernel);
  d->perm = dynamic_cast<const PermKernel*>(d->kernel.get());
  d->factors = std::move(factors);
  d->inverse.assign(order, 0);
  d->elem_order.assign(order, 0);
  d->elem_order[0] = 1;

  // Walk the powers of every element whose order is still unknown; a walk of
  // x fixes the order and inverse of every power of x.
  std::vector<Elem> powers;
  for (Elem x = 1; x < order; ++x) {
    if (d->elem_order[x] != 0) continue;
    powers.assign(1, x);
    for (Elem p = d->kernel->mul(x, x); p != 0; p = d->kernel->mul(p, x)) powers.push_back(p);
    auto m = static_cast<std::uint32_t>(powers.size() + 1);
    for (std::uint32_t k = 1; k < m; ++k) {
      Elem xk = powers[k - 1];
      if (d->elem_order[xk] == 0) d->elem_order[xk] = m / std::gcd(m, k);
      d->inverse[xk] = powers[m - k - 1];
    }
  }
  d->exponent = 1;
  for (auto o : d->elem_order) d->exponent = std::lcm(d->exponent, static_cast<std::uint64_t>(o));

  generators.erase(std::remove(generators.begin(), generators.end(), Elem{0}), generators.end());
  std::vector<Elem> unique_gens;
  for (auto g : generators) {
    if (std::find(unique_gens.begin(), unique_gens.end(), g) == unique_gens.end())
      unique_gens.push_back(g);
  }
  d->generators = std::move(unique_gens);
  return FiniteGroup(std::move(d));
}

std::size_t FiniteGroup::order() const { return d_->order; }
Elem FiniteGroup::mul(Elem x, Elem y) const { return d_->kernel->mul(x, y); }
Elem FiniteGroup::inv(Elem x) const { return d_->inverse[x]; }
std::uint32_t FiniteGroup::element_order(Elem x) const { return d_->elem_order[x]; }
std::uint64_t FiniteGroup::exponent() const { return d_->exponent; }
std::span<const Elem> FiniteGroup::generators() const { return d_->generators; }
const std::string& FiniteGroup::label() const { return d_->label; }
Backing FiniteGroup::backing() const { return d_->kind; }
const PermKernel* FiniteGroup::perm_kernel() const { return d_->perm; }
std::span<const FiniteGroup> FiniteGroup::factors() const { return d_->factors; }
const std::map<std::string, std::string>& FiniteGroup::metadata() const { return d_->metadata; }

Elem FiniteGroup::pow(Elem x, long long a) const {
  std::uint32_t m = element_order(x);
  long long r = a % static_cast<long long>(m);
  if (r < 0) r += m;
  Elem result = 0;
  Elem base = x;
  auto e = static_cast<unsigned long long>(r);
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  auto d = std::make_shared<Data>(*d_);
  d->label = std::move(label);
  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::with_metadata(const std::string& key, std::string value) const {
  auto d = std::make_shared<Data>(*d_);
  d->metadata[key] = std::move(value);
  return FiniteGroup(std::move(d));
}

// ------------------------------------------------------------ construction

FiniteGroup from_permutation_generators(std::span<const Perm> generators, std::size_t cap,
                                        std::string label) {
  if (generators.empty())
    throw GroupError(Errc::invalid_permutation, "at least one generator is required");
  const std::size_t degree = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != degree || !is_bijection(g))
      throw GroupError(Errc::invalid_permutation,
                       "generator " + format_cycles(g) + " is not a bijection of degree " +
                           std::to_string(degree));
  }
  if (degree == 0) return FiniteGroup().with_label(label.empty() ? "1" : std::move(label));

  std::vector<std::uint32_t> all_points(degree);
  std::iota(all_points.begin(), all_points.end(), 0u);
  PermIndex index(degree, all_points);
  std::vector<std::uint32_t> flat = identity_perm(degree);
  index.insert(flat, 0);
  std::size_t count = 1;
  std::vector<std::uint32_t> product(degree);
  for (std::size_t x = 0; x < count; ++x) {
    for (const auto& g : generators) {
      const std::uint32_t* px = flat.data() + x * degree;
      for (std::size_t i = 0; i < degree; ++i) product[i] = g[px[i]];
      if (index.find(flat, product)) continue;
      if (count == cap)
        throw GroupError(Errc::cap_exceeded,
                         "closure exceeds the cap of " + std::to_string(cap) + " elements");
      flat.insert(flat.end(), product.begin(), product.end());
      index.insert(flat, static_cast<Elem>(count));
      ++count;
    }
  }

  std::vector<Elem> gen_indices;
  for (const auto& g : generators) gen_indices.push_back(*index.find(flat, g));
  auto kernel = std::make_shared<PermKernel>(degree, std::move(flat));
  return FiniteGroup::from_kernel(std::move(label), count, Backing::permutation,
                                  std::move(kernel), std::move(gen_indices));
}

namespace {

bool light_associative(const std::vector<std::uint32_t>& t, std::size_t n,
                       std::span<const Elem> gens) {
  for (auto g : gens) {
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t xg = t[x * n + g];
      for (std::size_t y = 0; y < n; ++y) {
        if (t[xg * n + y] != t[x * n + t[g * n + y]]) return false;
      }
    }
  }
  return true;
}

}  // namespace

FiniteGroup from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table,
                              std::string label) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupError(Errc::not_latin_square, "empty table");
  std::vector<std::uint32_t> flat;
  flat.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n)
      throw GroupError(Errc::not_latin_square, "row " + std::to_string(x) + " has " +
                                                   std::to_string(table[x].size()) +
                                                   " entries, expected " + std::to_string(n));
    for (auto v : table[x]) {
      if (v >= n)
        throw GroupError(Errc::not_latin_square,
                         "entry " + std::to_string(v) + " out of range in row " + std::to_string(x));
      flat.push_back(v);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (flat[x] != x || flat[x * n] != x)
      throw GroupError(Errc::not_latin_square, "row and column 0 must be the identity");
  }
  for (std::size_t x = 0; x < n; ++x) {
    bool right = false, left = false;
    for (std::size_t y = 0; y < n; ++y) {
      right = right || flat[x * n + y] == 0;
      left = left || flat[y * n + x] == 0;
    }
    if (!right || !left)
      throw GroupError(Errc::no_inverse, "element " + std::to_string(x) + " has no inverse");
  }
  std::vector<bool> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[flat[x * n + y]])
        throw GroupError(Errc::not_latin_square, "row " + std::to_string(x) + " repeats an entry");
      seen[flat[x * n + y]] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[flat[y * n + x]])
        throw GroupError(Errc::not_latin_square,
                         "column " + std::to_string(x) + " repeats an entry");
      seen[flat[y * n + x]] = true;
    }
  }

  auto kernel = std::make_shared<CayleyKernel>(n, flat);
  auto provisional = FiniteGroup::from_kernel(label, n, Backing::cayley, kernel, {});
  auto gens = greedy_generating_sequence(provisional);
  if (n <= 256) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t xy = flat[x * n + y];
        for (std::size_t z = 0; z < n; ++z) {
          if (flat[xy * n + z] != flat[x * n + flat[y * n + z]])
            throw GroupError(Errc::not_associative,
                             "(" + std::to_string(x) + "*" + std::to_string(y) + ")*" +
                                 std::to_string(z) + " != " + std::to_string(x) + "*(" +
                                 std::to_string(y) + "*" + std::to_string(z) + ")");
        }
      }
  } else if (!light_associative(flat, n, gens)) {
    throw GroupError(Errc::not_associative, "Light's test failed on a generator");
  }
  return FiniteGroup::from_kernel(std::move(label), n, Backing::cayley, std::move(kernel),
                                  std::move(gens));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap) {
  const std::size_t ng = g.order(), nh = h.order();
  if (nh != 0 && ng > cap / nh)
    throw GroupError(Errc::cap_exceeded, "|G x H| = " + std::to_string(ng) + " * " +
                                             std::to_string(nh) + " exceeds the cap of " +
                                             std::to_string(cap));
  std::vector<Elem> gens;
  for (auto x : g.generators()) gens.push_back(x * static_cast<Elem>(nh));
  for (auto y : h.generators()) gens.push_back(y);
  auto kernel = std::make_shared<ProductKernel>(g, h);
  return FiniteGroup::from_kernel(g.label() + " x " + h.label(), ng * nh, Backing::product,
                                  std::move(kernel), std::move(gens), {g, h});
}

std::vector<Elem> subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> elems{0};
  in[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto s : gens) {
      Elem y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<Elem> greedy_generating_sequence(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> by_order(n);
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<Elem> seq;
  std::vector<bool> in(n, false);
  in[0] = true;
  std::size_t covered = 1;
  while (covered < n) {
    Elem next = 0;
    for (auto x : by_order) {
      if (!in[x]) {
        next = x;
        break;
      }
    }
    seq.push_back(next);
    auto closure = subgroup_closure(g, seq);
    std::fill(in.begin(), in.end(), false);
    for (auto x : closure) in[x] = true;
    covered = closure.size();
  }
  return seq;
}

}  // namespace whrank
