#include "whrank/finite_field.hpp"

#include <map>
#include <utility>

#include "whrank/error.hpp"
#include "whrank/numtheory.hpp"

namespace whrank {

namespace {

// Conway polynomials, constant term first.
const std::map<std::pair<std::uint64_t, unsigned>, std::vector<std::uint32_t>>& conway_table() {
  static const std::map<std::pair<std::uint64_t, unsigned>, std::vector<std::uint32_t>> t = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
      {{17, 2}, {3, 16, 1}},
      {{19, 2}, {2, 18, 1}},
      {{23, 2}, {5, 21, 1}},
      {{29, 2}, {2, 24, 1}},
      {{31, 2}, {3, 29, 1}},
  };
  return t;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t q) : q_(q) {
  auto pp = as_prime_power(q);
  if (!pp) throw GroupError(Errc::bad_prime_power, std::to_string(q) + " is not a prime power");
  if (q > (1u << 24)) throw GroupError(Errc::bad_prime_power, "field order " + std::to_string(q) + " too large");
  p_ = pp->p;
  k_ = pp->k;

  // Multiplication by the class of x on digit vectors, used to build the
  // exp table for a candidate modulus; returns false if x is not primitive.
  auto build = [&](const std::vector<std::uint32_t>& f) {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::vector<std::uint32_t> c(k_, 0);
    c[0] = 1;
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
      Elt code = 0;
      for (unsigned j = k_; j-- > 0;) code = static_cast<Elt>(code * p_ + c[j]);
      if (i > 0 && code == 1) return false;
      exp_[i] = code;
      log_[code] = static_cast<std::uint32_t>(i);
      if (k_ == 1) {
        c[0] = static_cast<std::uint32_t>((c[0] * f[0]) % p_);  // f[0] holds the primitive root
        continue;
      }
      std::uint32_t top = c[k_ - 1];
      for (unsigned j = k_ - 1; j > 0; --j)
        c[j] = static_cast<std::uint32_t>((c[j - 1] + p_ * p_ - top * f[j]) % p_);
      c[0] = static_cast<std::uint32_t>((p_ * p_ - top * f[0]) % p_);
    }
    Elt code = 0;
    for (unsigned j = k_; j-- > 0;) code = static_cast<Elt>(code * p_ + c[j]);
    return code == 1;
  };

  if (k_ == 1) {
    std::uint64_t g = 1;
    if (p_ > 2) {
      for (g = 2; multiplicative_order(g, p_) != p_ - 1; ++g) {
      }
    }
    modulus_ = {static_cast<std::uint32_t>(g)};
    log_ok_ = build(modulus_);
    modulus_ = {static_cast<std::uint32_t>((p_ - g) % p_), 1};
    return;
  }

  auto it = conway_table().find({p_, k_});
  if (it != conway_table().end()) {
    modulus_ = it->second;
    log_ok_ = build(modulus_);
    if (!log_ok_) throw GroupError(Errc::bad_prime_power, "tabulated polynomial is not primitive");
    return;
  }
  // Enumerate monic polynomials with the constant term nonzero in increasing
  // coefficient order.
  std::vector<std::uint32_t> f(k_ + 1, 0);
  f[k_] = 1;
  for (std::uint64_t code = 1; code < q_; ++code) {
    std::uint64_t c = code;
    for (unsigned j = 0; j < k_; ++j) {
      f[j] = static_cast<std::uint32_t>(c % p_);
      c /= p_;
    }
    if (f[0] == 0) continue;
    if (build(f)) {
      modulus_ = f;
      log_ok_ = true;
      return;
    }
  }
  throw GroupError(Errc::bad_prime_power, "no primitive polynomial found");
}

FiniteField::Elt FiniteField::add(Elt a, Elt b) const {
  if (k_ == 1) return static_cast<Elt>((a + b) % p_);
  Elt r = 0, scale = 1;
  while (a > 0 || b > 0) {
    r += static_cast<Elt>(((a % p_) + (b % p_)) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elt FiniteField::neg(Elt a) const {
  Elt r = 0, scale = 1;
  while (a > 0) {
    r += static_cast<Elt>((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Elt FiniteField::mul(Elt a, Elt b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FiniteField::Elt FiniteField::inv(Elt a) const {
  if (a == 0) throw GroupError(Errc::bad_parameters, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elt FiniteField::pow(Elt a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::string FiniteField::describe() const {
  if (k_ == 1) return "F_" + std::to_string(p_) + ", primitive root " + std::to_string(primitive());
  std::string s;
  for (unsigned j = k_ + 1; j-- > 0;) {
    if (modulus_[j] == 0) continue;
    if (!s.empty()) s += "+";
    if (modulus_[j] != 1 || j == 0) s += std::to_string(modulus_[j]);
    if (j >= 1) s += (modulus_[j] != 1 ? "*x" : "x");
    if (j > 1) s += "^" + std::to_string(j);
  }
  return s + " over F_" + std::to_string(p_);
}

}  // namespace whrank
