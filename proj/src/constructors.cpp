#include "whrank/constructors.hpp"

#include <numeric>

#include "whrank/error.hpp"
#include "whrank/finite_field.hpp"
#include "whrank/numtheory.hpp"

namespace whrank {

namespace {

void check_cap(std::uint64_t order, std::size_t cap, const std::string& what) {
  if (order > cap)
    throw GroupError(Errc::cap_exceeded, what + " has order " + std::to_string(order) +
                                             ", above the cap of " + std::to_string(cap));
}

class AbelianKernel final : public MulKernel {
 public:
  explicit AbelianKernel(std::vector<std::uint64_t> dims) : dims_(std::move(dims)) {}
  Elem mul(Elem x, Elem y) const override {
    Elem r = 0, stride = 1;
    for (auto d : dims_) {
      auto dd = static_cast<Elem>(d);
      r += ((x % dd + y % dd) % dd) * stride;
      x /= dd;
      y /= dd;
      stride *= dd;
    }
    return r;
  }

 private:
  std::vector<std::uint64_t> dims_;
};

class SemidirectKernel final : public MulKernel {
 public:
  SemidirectKernel(std::uint64_t n, std::uint64_t m, std::uint64_t k) : n_(n), m_(m) {
    kpow_.resize(m);
    std::uint64_t v = 1 % n;
    for (std::uint64_t j = 0; j < m; ++j) {
      kpow_[j] = v;
      v = v * k % n;
    }
  }
  Elem mul(Elem x, Elem y) const override {
    std::uint64_t i = x % n_, j = x / n_, i2 = y % n_, j2 = y / n_;
    std::uint64_t ri = (i + kpow_[j] * i2) % n_;
    std::uint64_t rj = (j + j2) % m_;
    return static_cast<Elem>(ri + n_ * rj);
  }

 private:
  std::uint64_t n_, m_;
  std::vector<std::uint64_t> kpow_;
};

std::string join_dims(std::span<const std::uint64_t> dims) {
  std::string s;
  for (auto d : dims) s += (s.empty() ? "C" : " x C") + std::to_string(d);
  return s.empty() ? "1" : s;
}

}  // namespace

FiniteGroup abelian(std::span<const std::uint64_t> dims, std::size_t cap) {
  std::uint64_t order = 1;
  for (auto d : dims) {
    if (d == 0) throw GroupError(Errc::bad_parameters, "cyclic factor of order 0");
    auto o = checked_mul(order, d);
    if (!o) check_cap(~0ull, cap, join_dims(dims));
    order = *o;
  }
  check_cap(order, cap, join_dims(dims));
  std::vector<std::uint64_t> kept(dims.begin(), dims.end());
  std::vector<Elem> gens;
  std::uint64_t stride = 1;
  for (auto d : kept) {
    if (d > 1) gens.push_back(static_cast<Elem>(stride));
    stride *= d;
  }
  auto kernel = std::make_shared<AbelianKernel>(kept);
  return FiniteGroup::from_kernel(join_dims(dims), order, Backing::structured, kernel, gens);
}

FiniteGroup cyclic(std::uint64_t n, std::size_t cap) {
  std::uint64_t d[] = {n};
  return abelian(d, cap);
}

FiniteGroup semidirect_cyclic(std::uint64_t n, std::uint64_t m, std::uint64_t k, std::size_t cap) {
  if (n == 0 || m == 0) throw GroupError(Errc::bad_parameters, "n and m must be positive");
  std::string label = "C" + std::to_string(n) + ":C" + std::to_string(m) + "(" +
                      std::to_string(k) + ")";
  k %= n;
  if (std::gcd(k, n) != 1 && n > 1)
    throw GroupError(Errc::bad_action, "gcd(" + std::to_string(k) + ", " + std::to_string(n) +
                                           ") != 1");
  if (pow_mod(k, m, n) != 1 % n)
    throw GroupError(Errc::bad_action, std::to_string(k) + "^" + std::to_string(m) +
                                           " is not 1 mod " + std::to_string(n));
  auto order = checked_mul(n, m);
  check_cap(order ? *order : ~0ull, cap, label);
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  if (m > 1) gens.push_back(static_cast<Elem>(n));
  auto kernel = std::make_shared<SemidirectKernel>(n, m, k);
  auto g = FiniteGroup::from_kernel(label, *order, Backing::structured, kernel, gens);
  return g.with_metadata("a", n > 1 ? "1" : "0").with_metadata("b", m > 1 ? std::to_string(n) : "0");
}

FiniteGroup dihedral(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw GroupError(Errc::bad_parameters, "dihedral group of a 0-gon");
  return semidirect_cyclic(n, 2, n - 1, cap).with_label("D" + std::to_string(2 * n));
}

FiniteGroup metacyclic_pq(std::uint64_t q, std::uint64_t r, std::size_t cap) {
  if (r <= 1 || q == 0 || q % r != 0)
    throw GroupError(Errc::bad_parameters,
                     "metacyclic group needs 1 < r | q, got q=" + std::to_string(q) +
                         " r=" + std::to_string(r));
  auto qr = checked_mul(q, r);
  auto order = qr ? checked_mul(*qr, r) : std::nullopt;
  std::string label = "M(" + std::to_string(q) + "," + std::to_string(r) + ")";
  check_cap(order ? *order : ~0ull, cap, label);
  if (pow_mod(q + 1, r, *qr) != 1)
    throw GroupError(Errc::bad_action, "(q+1)^r is not 1 mod qr");
  return semidirect_cyclic(*qr, r, q + 1, cap).with_label(label);
}

FiniteGroup symmetric(std::uint64_t n, std::size_t cap) {
  std::string label = "S" + std::to_string(n);
  if (n <= 1) return FiniteGroup().with_label(label);
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n && f <= cap; ++i) f *= i;
  check_cap(f, cap, label);
  Perm t = identity_perm(n), c(n);
  std::swap(t[0], t[1]);
  for (std::uint32_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % n);
  std::vector<Perm> gens{t};
  if (n > 2) gens.push_back(c);
  return from_permutation_generators(gens, cap, label);
}

FiniteGroup alternating(std::uint64_t n, std::size_t cap) {
  std::string label = "A" + std::to_string(n);
  if (n <= 2) {
    if (n == 0) return FiniteGroup().with_label(label);
    std::vector<Perm> id{identity_perm(n)};
    return from_permutation_generators(id, cap, label);
  }
  std::uint64_t f = 1;
  for (std::uint64_t i = 3; i <= n && f <= cap; ++i) f *= i;
  check_cap(f, cap, label);
  Perm t = identity_perm(n);
  t[0] = 1;
  t[1] = 2;
  t[2] = 0;
  // (1 2 ... n) for n odd, (2 3 ... n) for n even
  Perm c = identity_perm(n);
  std::uint32_t start = n % 2 == 1 ? 0 : 1;
  for (std::uint32_t i = start; i < n; ++i) c[i] = i + 1 < n ? i + 1 : start;
  std::vector<Perm> gens{t};
  if (n > 3) gens.push_back(c);
  return from_permutation_generators(gens, cap, label);
}

// ---------------------------------------------------------------------- PSL

std::uint64_t psl_order(unsigned n, std::uint64_t q) {
  if (n < 2 || !as_prime_power(q))
    throw GroupError(Errc::bad_prime_power, "PSL(" + std::to_string(n) + "," + std::to_string(q) +
                                                ") needs n >= 2 and q a prime power");
  std::uint64_t order = *checked_pow(q, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) {
    auto qi = checked_pow(q, i);
    auto o = qi ? checked_mul(order, *qi - 1) : std::nullopt;
    if (!o) return ~0ull;
    order = *o;
  }
  return order / std::gcd<std::uint64_t>(n, q - 1);
}

namespace {

using Vec = std::vector<FiniteField::Elt>;
using Mat = std::vector<FiniteField::Elt>;  // row-major

// Points of PG(n-1, q) as normalized vectors (first nonzero coordinate 1),
// in increasing order of their base-q code; lines use the same vectors as
// coefficient rows.
class Geometry {
 public:
  Geometry(unsigned n, std::uint64_t q) : n_(n), f_(q) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= q;
    index_.assign(total, ~0u);
    for (std::uint64_t code = 1; code < total; ++code) {
      Vec v = decode(code);
      if (normalize(v) != code) continue;
      index_[code] = static_cast<std::uint32_t>(points_.size());
      points_.push_back(v);
    }
  }

  const FiniteField& field() const { return f_; }
  std::size_t count() const { return points_.size(); }
  std::size_t degree() const { return n_ == 2 ? count() : 2 * count(); }

  // Permutation of the domain induced by M: points v -> Mv, lines l -> l M^-1.
  Perm matrix_action(const Mat& m) const {
    Perm p(degree());
    Mat mi = inverse(m);
    for (std::size_t i = 0; i < count(); ++i) {
      p[i] = lookup(apply(m, points_[i]));
      if (n_ == 3) p[count() + i] = static_cast<std::uint32_t>(count() + lookup(apply_row(points_[i], mi)));
    }
    return p;
  }

  Perm frobenius_action() const {
    Perm p(degree());
    for (std::size_t i = 0; i < count(); ++i) {
      Vec v = points_[i];
      for (auto& c : v) c = f_.frobenius(c);
      p[i] = lookup(v);
      if (n_ == 3) p[count() + i] = static_cast<std::uint32_t>(count() + p[i]);
    }
    return p;
  }

  // point i <-> line i; only meaningful for n = 3.
  Perm duality() const {
    Perm p(degree());
    for (std::size_t i = 0; i < count(); ++i) {
      p[i] = static_cast<std::uint32_t>(count() + i);
      p[count() + i] = static_cast<std::uint32_t>(i);
    }
    return p;
  }

  Mat identity() const {
    Mat m(n_ * n_, 0);
    for (unsigned i = 0; i < n_; ++i) m[i * n_ + i] = 1;
    return m;
  }

 private:
  Vec decode(std::uint64_t code) const {
    Vec v(n_);
    for (unsigned i = 0; i < n_; ++i) {
      v[i] = static_cast<FiniteField::Elt>(code % f_.q());
      code /= f_.q();
    }
    return v;
  }

  std::uint64_t normalize(Vec& v) const {
    for (auto c : v) {
      if (c == 0) continue;
      auto s = f_.inv(c);
      for (auto& x : v) x = f_.mul(x, s);
      break;
    }
    std::uint64_t code = 0;
    for (unsigned i = n_; i-- > 0;) code = code * f_.q() + v[i];
    return code;
  }

  std::uint32_t lookup(Vec v) const { return index_[normalize(v)]; }

  Vec apply(const Mat& m, const Vec& v) const {
    Vec w(n_, 0);
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j) w[i] = f_.add(w[i], f_.mul(m[i * n_ + j], v[j]));
    return w;
  }

  Vec apply_row(const Vec& l, const Mat& m) const {
    Vec w(n_, 0);
    for (unsigned j = 0; j < n_; ++j)
      for (unsigned i = 0; i < n_; ++i) w[j] = f_.add(w[j], f_.mul(l[i], m[i * n_ + j]));
    return w;
  }

  Mat inverse(Mat a) const {
    Mat r = identity();
    for (unsigned c = 0; c < n_; ++c) {
      unsigned piv = c;
      while (a[piv * n_ + c] == 0) ++piv;
      for (unsigned j = 0; j < n_; ++j) {
        std::swap(a[c * n_ + j], a[piv * n_ + j]);
        std::swap(r[c * n_ + j], r[piv * n_ + j]);
      }
      auto s = f_.inv(a[c * n_ + c]);
      for (unsigned j = 0; j < n_; ++j) {
        a[c * n_ + j] = f_.mul(a[c * n_ + j], s);
        r[c * n_ + j] = f_.mul(r[c * n_ + j], s);
      }
      for (unsigned i = 0; i < n_; ++i) {
        if (i == c || a[i * n_ + c] == 0) continue;
        auto t = f_.neg(a[i * n_ + c]);
        for (unsigned j = 0; j < n_; ++j) {
          a[i * n_ + j] = f_.add(a[i * n_ + j], f_.mul(t, a[c * n_ + j]));
          r[i * n_ + j] = f_.add(r[i * n_ + j], f_.mul(t, r[c * n_ + j]));
        }
      }
    }
    return r;
  }

  unsigned n_;
  FiniteField f_;
  std::vector<Vec> points_;
  std::vector<std::uint32_t> index_;
};

void check_psl_params(unsigned n, std::uint64_t q) {
  if (n != 2 && n != 3)
    throw GroupError(Errc::bad_parameters, "PSL_n(q) is supported for n = 2, 3 only");
  if (!as_prime_power(q)) throw GroupError(Errc::bad_prime_power, std::to_string(q) + " is not a prime power");
}

std::string psl_label(unsigned n, std::uint64_t q) {
  return "PSL(" + std::to_string(n) + "," + std::to_string(q) + ")";
}

}  // namespace

FiniteGroup psl(unsigned n, std::uint64_t q, std::size_t cap) {
  check_psl_params(n, q);
  std::uint64_t expected = psl_order(n, q);
  check_cap(expected, cap, psl_label(n, q));
  Geometry geo(n, q);
  const auto& f = geo.field();
  auto w = f.primitive();
  std::vector<Perm> gens;
  auto elementary = [&](unsigned i, unsigned j) {
    Mat m = geo.identity();
    m[i * n + j] = 1;
    return geo.matrix_action(m);
  };
  Mat d = geo.identity();
  d[0] = w;
  d[n + 1] = f.inv(w);
  if (n == 2) {
    gens = {elementary(0, 1), elementary(1, 0), geo.matrix_action(d)};
  } else {
    gens = {elementary(0, 1), elementary(1, 0), elementary(1, 2), elementary(2, 1),
            geo.matrix_action(d)};
  }
  auto g = from_permutation_generators(gens, cap, psl_label(n, q));
  if (g.order() != expected)
    throw GroupError(Errc::bad_parameters, psl_label(n, q) + " closure has order " +
                                               std::to_string(g.order()) + ", expected " +
                                               std::to_string(expected));
  return g.with_metadata("field", f.describe())
      .with_metadata("family", "psl")
      .with_metadata("n", std::to_string(n))
      .with_metadata("q", std::to_string(q));
}

namespace {

GroupMap domain_conjugation(const FiniteGroup& g, const Perm& sigma, const std::string& what) {
  const PermKernel* pk = g.perm_kernel();
  if (!pk || pk->degree() != sigma.size())
    throw GroupError(Errc::not_normalizing, what + ": degree mismatch with " + g.label());
  Perm sigma_inv = inverse(sigma);
  GroupMap f{g, g, std::vector<Elem>(g.order())};
  Perm conj(sigma.size());
  for (Elem x = 0; x < g.order(); ++x) {
    auto px = pk->perm(x);
    for (std::size_t i = 0; i < conj.size(); ++i) conj[i] = sigma[px[sigma_inv[i]]];
    auto y = pk->find(conj);
    if (!y) throw GroupError(Errc::not_normalizing, what + " does not normalize " + g.label());
    f.images[x] = *y;
  }
  return f;
}

}  // namespace

ActionSet psl_aut_action(unsigned n, std::uint64_t q, const FiniteGroup& g) {
  check_psl_params(n, q);
  Geometry geo(n, q);
  const auto& f = geo.field();
  std::vector<GroupMap> maps;
  Mat d = geo.identity();
  d[0] = f.primitive();
  maps.push_back(domain_conjugation(g, geo.matrix_action(d), "diagonal automorphism"));
  if (f.k() > 1) maps.push_back(domain_conjugation(g, geo.frobenius_action(), "field automorphism"));
  if (n == 3) maps.push_back(domain_conjugation(g, geo.duality(), "graph automorphism"));
  return action_with_inner(g, std::move(maps), kAutExplicit);
}

ActionSet symmetric_conjugation_action(const FiniteGroup& g) {
  const PermKernel* pk = g.perm_kernel();
  if (!pk) throw GroupError(Errc::bad_parameters, g.label() + " is not a permutation group");
  std::vector<GroupMap> maps;
  if (pk->degree() >= 2) {
    Perm t = identity_perm(pk->degree());
    std::swap(t[0], t[1]);
    maps.push_back(domain_conjugation(g, t, "transposition"));
  }
  return action_with_inner(g, std::move(maps), kAutExplicit);
}

}  // namespace whrank
