#ifndef WHRANK_FINITE_FIELD_HPP
#define WHRANK_FINITE_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace whrank {

// F_q with q = p^k. An element is encoded as the integer whose base-p digits
// (least significant first) are its coefficients over the defining
// polynomial. The defining polynomial is the Conway polynomial when tabulated,
// otherwise the lexicographically least primitive polynomial; in both cases
// the class of x generates the multiplicative group.
class FiniteField {
 public:
  using Elt = std::uint32_t;

  explicit FiniteField(std::uint64_t q);  // throws GroupError(bad_prime_power)

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }

  Elt add(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;  // a != 0
  Elt pow(Elt a, std::uint64_t e) const;
  Elt frobenius(Elt a) const { return pow(a, p_); }
  // Generator of the multiplicative group.
  Elt primitive() const { return q_ > 2 ? exp_[1] : 1; }

  // Coefficients of the defining polynomial, constant term first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  // e.g. "x^2+x+2 over F_3", or "F_7, primitive root 3".
  std::string describe() const;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elt> exp_;   // exp_[i] = x^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;
  bool log_ok_ = false;
};

}  // namespace whrank

#endif  // WHRANK_FINITE_FIELD_HPP
