#ifndef WHRANK_GROUP_HPP
#define WHRANK_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "whrank/permutation.hpp"

namespace whrank {

// Element of a FiniteGroup: an index in 0..order-1, 0 being the identity.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultCap = 100000;

enum class Backing { permutation, cayley, structured, product };

// Multiplication behind a FiniteGroup. Implementations are immutable and
// must tolerate concurrent const calls.
class MulKernel {
 public:
  virtual ~MulKernel() = default;
  virtual Elem mul(Elem x, Elem y) const = 0;
};

// Open-addressed index from a tuple of point images to an element. The key
// of element e is perms[e * degree + p] for p in key_points.
class PermIndex {
 public:
  PermIndex() = default;
  PermIndex(std::size_t degree, std::vector<std::uint32_t> key_points);

  void rebuild(std::span<const std::uint32_t> flat_perms, std::size_t count);
  void insert(std::span<const std::uint32_t> flat_perms, Elem e);
  // Looks up the element whose key points map to images[k] for each k.
  std::optional<Elem> find(std::span<const std::uint32_t> flat_perms,
                           std::span<const std::uint32_t> images) const;

  std::span<const std::uint32_t> key_points() const { return key_points_; }

 private:
  std::uint64_t hash(const std::uint32_t* images) const;
  bool matches(std::span<const std::uint32_t> flat_perms, Elem e,
               const std::uint32_t* images) const;
  void grow(std::span<const std::uint32_t> flat_perms);

  std::size_t degree_ = 0;
  std::vector<std::uint32_t> key_points_;
  std::vector<std::uint32_t> slots_;  // element + 1, 0 = empty
  std::size_t used_ = 0;
};

// Permutation group with all elements stored. Products are located through
// the images of a base, so mul() touches |base| points only.
class PermKernel final : public MulKernel {
 public:
  PermKernel(std::size_t degree, std::vector<std::uint32_t> flat_perms);

  Elem mul(Elem x, Elem y) const override;

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return count_; }
  std::span<const std::uint32_t> perm(Elem x) const {
    return {perms_.data() + static_cast<std::size_t>(x) * degree_, degree_};
  }
  std::span<const std::uint32_t> base() const { return index_.key_points(); }
  // Element equal to p, if p lies in the group.
  std::optional<Elem> find(std::span<const std::uint32_t> p) const;

 private:
  std::size_t degree_;
  std::size_t count_;
  std::vector<std::uint32_t> perms_;
  PermIndex index_;
};

// An immutable, fully enumerated finite group. Copies share storage.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  static FiniteGroup from_kernel(std::string label, std::size_t order, Backing kind,
                                 std::shared_ptr<const MulKernel> kernel,
                                 std::vector<Elem> generators,
                                 std::vector<FiniteGroup> factors = {});

  std::size_t order() const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem pow(Elem x, long long a) const;
  std::uint32_t element_order(Elem x) const;
  std::uint64_t exponent() const;
  // x^g = g^-1 x g
  Elem conjugate(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }

  std::span<const Elem> generators() const;
  const std::string& label() const;
  Backing backing() const;
  const PermKernel* perm_kernel() const;
  // Direct factors for groups built by direct_product, empty otherwise.
  std::span<const FiniteGroup> factors() const;
  const std::map<std::string, std::string>& metadata() const;

  FiniteGroup with_label(std::string label) const;
  FiniteGroup with_metadata(const std::string& key, std::string value) const;

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

// Closure of permutation generators, indexed breadth-first from the identity
// with generators applied (on the right) in input order.
FiniteGroup from_permutation_generators(std::span<const Perm> generators,
                                        std::size_t cap = kDefaultCap,
                                        std::string label = {});

// Validated group from a Cayley table with table[x][y] = x*y and 0 the
// identity. Associativity is checked exhaustively up to order 256 and by
// Light's test over a generating set above that.
FiniteGroup from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table,
                              std::string label = {});

// Index of (g, h) is g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::size_t cap = kDefaultCap);

// Repeatedly adds the element of largest order outside the current closure,
// ties broken by smallest index.
std::vector<Elem> greedy_generating_sequence(const FiniteGroup& g);

// Elements of <gens>, ascending.
std::vector<Elem> subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens);

}  // namespace whrank

#endif  // WHRANK_GROUP_HPP
