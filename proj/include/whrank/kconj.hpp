#ifndef WHRANK_KCONJ_HPP
#define WHRANK_KCONJ_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "whrank/automorphisms.hpp"
#include "whrank/classes.hpp"
#include "whrank/group.hpp"

namespace whrank {

using BigInt = boost::multiprecision::cpp_int;

enum class Field { Q, R, C };

// Exponents a mod n realizing Gal(K(mu_n)/K) inside (Z/n)^x, ascending.
std::vector<std::uint64_t> galois_exponents(Field k, std::uint64_t n);

enum class FusionLevel { element, klass };

struct FusionPartition {
  FusionLevel level = FusionLevel::klass;
  Field field = Field::Q;
  std::string action;              // provenance of the action used
  std::vector<std::uint32_t> block_of;  // index -> block, blocks numbered by least member
  std::size_t blocks = 0;
};

// Union-find over class indices under the class permutations of A and the
// Galois power maps. Throws inner_not_contained unless A.contains_inner.
FusionPartition fusion_partition(const FiniteGroup& g, const ConjugacyClasses& classes,
                                 const ActionSet& a, Field k);
// Same relation on elements; kept as an oracle for the class-level version.
FusionPartition fusion_partition_elements(const FiniteGroup& g, const ActionSet& a, Field k);

struct RankReport {
  std::string label;
  BigInt order;
  std::uint64_t classes_C = 0;
  std::uint64_t classes_R_aut = 0;
  std::uint64_t classes_Q_aut = 0;
  std::uint64_t classes_R_inn = 0;
  std::uint64_t classes_Q_inn = 0;
  long long N = 0;
  long long bass_rank = 0;
  std::string action_provenance;
};

RankReport rank_report(const FiniteGroup& g, const ActionSet& aut, const ActionSet& inn);
RankReport rank_report(const FiniteGroup& g, const ConjugacyClasses& classes,
                       const ActionSet& aut, const ActionSet& inn);

// Sum over divisors d > 2 of m of (phi(d)/2 - 1).
long long divisor_sum_formula(std::uint64_t m);

struct LnqCriteria {
  unsigned n = 0;
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t M = 0;
  std::uint64_t phi_M = 0;
  std::uint64_t bound = 0;  // 2k for n = 2, 2nk otherwise
  bool threshold_ok_1 = false;
  bool threshold_ok_2 = false;
};

LnqCriteria lnq_criteria(unsigned n, std::uint64_t q);

// Sufficient condition for N > 0 in the metacyclic family meta(q, r):
// phi(r) > 4, or phi(r) = 4 and (q odd or 2r | q).
bool metacyclic_prediction(std::uint64_t q, std::uint64_t r);

}  // namespace whrank

#endif  // WHRANK_KCONJ_HPP
