#include "whrank/kconj.hpp"

#include <numeric>

#include "whrank/error.hpp"
#include "whrank/numtheory.hpp"
#include "whrank/union_find.hpp"

namespace whrank {

std::vector<std::uint64_t> galois_exponents(Field k, std::uint64_t n) {
  if (n == 0) throw GroupError(Errc::bad_parameters, "element order must be positive");
  switch (k) {
    case Field::Q:
      if (n <= 2) return {1};
      return units_mod(n);
    case Field::R:
      if (n >= 3) return {1, n - 1};
      return {1};
    case Field::C:
      return {1};
  }
  return {1};
}

namespace {

void require_inner(const ActionSet& a) {
  if (!a.contains_inner)
    throw GroupError(Errc::inner_not_contained,
                     "the action on " + a.group.label() + " is not known to contain Inn(G)");
}

}  // namespace

FusionPartition fusion_partition(const FiniteGroup& g, const ConjugacyClasses& classes,
                                 const ActionSet& a, Field k) {
  require_inner(a);
  UnionFind uf(classes.count());
  for (const auto& f : a.generators) {
    auto p = induced_class_permutation(f, classes);
    for (std::uint32_t c = 0; c < p.size(); ++c) uf.unite(c, p[c]);
  }
  for (std::uint32_t c = 0; c < classes.count(); ++c) {
    Elem x = classes.representatives[c];
    for (auto e : galois_exponents(k, classes.class_order[c]))
      uf.unite(c, classes.class_of[g.pow(x, static_cast<long long>(e))]);
  }
  FusionPartition fp{FusionLevel::klass, k, a.provenance, {}, 0};
  std::tie(fp.block_of, fp.blocks) = uf.labels();
  return fp;
}

FusionPartition fusion_partition_elements(const FiniteGroup& g, const ActionSet& a, Field k) {
  require_inner(a);
  UnionFind uf(g.order());
  for (const auto& f : a.generators)
    for (Elem x = 0; x < g.order(); ++x) uf.unite(x, f.images[x]);
  for (Elem x = 0; x < g.order(); ++x) {
    for (auto e : galois_exponents(k, g.element_order(x)))
      uf.unite(x, g.pow(x, static_cast<long long>(e)));
  }
  FusionPartition fp{FusionLevel::element, k, a.provenance, {}, 0};
  std::tie(fp.block_of, fp.blocks) = uf.labels();
  return fp;
}

RankReport rank_report(const FiniteGroup& g, const ConjugacyClasses& classes,
                       const ActionSet& aut, const ActionSet& inn) {
  RankReport r;
  r.label = g.label();
  r.order = g.order();
  r.classes_C = classes.count();
  r.classes_R_aut = fusion_partition(g, classes, aut, Field::R).blocks;
  r.classes_Q_aut = fusion_partition(g, classes, aut, Field::Q).blocks;
  r.classes_R_inn = fusion_partition(g, classes, inn, Field::R).blocks;
  r.classes_Q_inn = fusion_partition(g, classes, inn, Field::Q).blocks;
  r.N = static_cast<long long>(r.classes_R_aut) - static_cast<long long>(r.classes_Q_aut);
  r.bass_rank = static_cast<long long>(r.classes_R_inn) - static_cast<long long>(r.classes_Q_inn);
  r.action_provenance = aut.provenance;
  return r;
}

RankReport rank_report(const FiniteGroup& g, const ActionSet& aut, const ActionSet& inn) {
  return rank_report(g, conjugacy_classes(g), aut, inn);
}

long long divisor_sum_formula(std::uint64_t m) {
  if (m == 0) throw GroupError(Errc::bad_parameters, "m must be positive");
  long long sum = 0;
  for (auto d : divisors(m))
    if (d > 2) sum += static_cast<long long>(euler_phi(d) / 2) - 1;
  return sum;
}

LnqCriteria lnq_criteria(unsigned n, std::uint64_t q) {
  auto pp = as_prime_power(q);
  if (!pp) throw GroupError(Errc::bad_prime_power, std::to_string(q) + " is not a prime power");
  if (n < 2) throw GroupError(Errc::bad_parameters, "n must be at least 2");
  LnqCriteria c;
  c.n = n;
  c.q = q;
  c.p = pp->p;
  c.k = pp->k;
  auto qn = checked_pow(q, n);
  if (!qn) throw GroupError(Errc::bad_parameters, "q^n overflows");
  c.M = (*qn - 1) / ((q - 1) * std::gcd<std::uint64_t>(q - 1, n));
  c.phi_M = euler_phi(c.M);
  c.bound = n == 2 ? 2ull * c.k : 2ull * n * c.k;
  c.threshold_ok_1 = c.phi_M > c.bound;
  // q^(n-1) >= (15/2) k n^2, compared as 2 q^(n-1) >= 15 k n^2
  auto qn1 = checked_pow(q, n - 1);
  std::uint64_t rhs = 15ull * c.k * n * n;
  auto lhs = qn1 ? checked_mul(2, *qn1) : std::nullopt;
  c.threshold_ok_2 = !lhs || *lhs >= rhs;
  return c;
}

bool metacyclic_prediction(std::uint64_t q, std::uint64_t r) {
  auto phi = euler_phi(r);
  if (phi > 4) return true;
  return phi == 4 && (q % 2 == 1 || q % (2 * r) == 0);
}

}  // namespace whrank
