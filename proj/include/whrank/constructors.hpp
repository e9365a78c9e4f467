#ifndef WHRANK_CONSTRUCTORS_HPP
#define WHRANK_CONSTRUCTORS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "whrank/automorphisms.hpp"
#include "whrank/group.hpp"

namespace whrank {

FiniteGroup cyclic(std::uint64_t n, std::size_t cap = kDefaultCap);
// C_{d_1} x ... x C_{d_t}; index is the mixed-radix number with d_1 least
// significant.
FiniteGroup abelian(std::span<const std::uint64_t> dims, std::size_t cap = kDefaultCap);
// Symmetries of the n-gon, order 2n.
FiniteGroup dihedral(std::uint64_t n, std::size_t cap = kDefaultCap);
FiniteGroup symmetric(std::uint64_t n, std::size_t cap = kDefaultCap);
FiniteGroup alternating(std::uint64_t n, std::size_t cap = kDefaultCap);

// <a, b | a^n = b^m = 1, b a b^-1 = a^k> on pairs (i, j) = a^i b^j, index
// i + n j, with (i, j)(i', j') = (i + k^j i', j + j'). The metadata keys
// "a" and "b" hold the indices of a and b.
FiniteGroup semidirect_cyclic(std::uint64_t n, std::uint64_t m, std::uint64_t k,
                              std::size_t cap = kDefaultCap);

// <a, b | a^(qr) = b^r = 1, b a b^-1 = a^(q+1)>, order q r^2.
FiniteGroup metacyclic_pq(std::uint64_t q, std::uint64_t r, std::size_t cap = kDefaultCap);

// PSL_n(q), n in {2, 3}. n = 2 acts on the q+1 projective points; n = 3 on
// points then lines, degree 2(q^2+q+1).
FiniteGroup psl(unsigned n, std::uint64_t q, std::size_t cap = kDefaultCap);
std::uint64_t psl_order(unsigned n, std::uint64_t q);

// Aut(PSL_n(q)) for a group built by psl(n, q): inner, diagonal, field and
// (n = 3) graph automorphisms, each induced by a permutation of the domain.
ActionSet psl_aut_action(unsigned n, std::uint64_t q, const FiniteGroup& g);

// Aut(A_n) and Aut(S_n) for n != 6 by conjugation in S_n.
ActionSet symmetric_conjugation_action(const FiniteGroup& g);

enum class Family {
  cyclic,
  abelian,
  dihedral,
  symmetric,
  alternating,
  semidirect_cyclic,
  metacyclic_pq,
  psl,
  product,
};

struct FamilySpec {
  Family family;
  std::vector<std::uint64_t> params;
  std::vector<FamilySpec> parts;  // product factors
  std::string text;
};

// cpm:p,m[,k]  meta:q,r  psl:n,q  sym:n  alt:n  dih:n  cyc:n  ab:d1xd2x...
// prod:<spec>*<spec>. In cpm, k defaults to the least residue of order m.
FamilySpec parse_family_spec(std::string_view text);
FiniteGroup build_family(const FamilySpec& spec, std::size_t cap = kDefaultCap);
// Explicit automorphism action when the family has one: psl, and sym/alt of
// degree other than 6.
std::optional<ActionSet> explicit_aut_action(const FamilySpec& spec, const FiniteGroup& g);

}  // namespace whrank

#endif  // WHRANK_CONSTRUCTORS_HPP
