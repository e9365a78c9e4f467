#include <doctest.h>

#include "support.hpp"
#include "whrank/classes.hpp"
#include "whrank/error.hpp"
#include "whrank/finite_field.hpp"
#include "whrank/numtheory.hpp"

using namespace whrank;
using namespace whrank::testing;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const GroupError& e) {
    return e.code();
  }
  FAIL("no GroupError thrown");
  return Errc::io_error;
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("orders of the basic families") {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    CHECK(cyclic(n).order() == n);
    CHECK(dihedral(n).order() == 2 * n);
  }
  for (std::uint64_t n = 1; n <= 6; ++n) {
    CHECK(symmetric(n).order() == factorial(n));
    CHECK(alternating(n).order() == std::max<std::uint64_t>(1, factorial(n) / 2));
  }
  std::vector<std::uint64_t> dims{2, 3, 4};
  CHECK(abelian(dims).order() == 24);
  CHECK(dihedral(5).label() == "D10");
  CHECK(semidirect_cyclic(11, 5, 3).label() == "C11:C5(3)");
  CHECK(code_of([] { symmetric(9, 1000); }) == Errc::cap_exceeded);
  CHECK(code_of([] { cyclic(0); }) == Errc::bad_parameters);
}

TEST_CASE("semidirect products check their action") {
  CHECK(code_of([] { semidirect_cyclic(11, 5, 2); }) == Errc::bad_action);  // 2^5 != 1 mod 11
  CHECK(code_of([] { semidirect_cyclic(12, 2, 2); }) == Errc::bad_action);  // gcd
  auto g = semidirect_cyclic(11, 5, 3);
  CHECK(g.order() == 55);
  Elem a = 1, b = 11;
  CHECK(g.element_order(a) == 11);
  CHECK(g.element_order(b) == 5);
  CHECK(g.mul(b, a) == g.mul(g.pow(a, 3), b));
  for (Elem x = 1; x < 55; ++x) CHECK((g.element_order(x) == 5 || g.element_order(x) == 11));
}

TEST_CASE("metacyclic p-groups satisfy their presentation") {
  struct P {
    std::uint64_t q, r;
  };
  for (auto [q, r] : {P{2, 2}, P{4, 2}, P{3, 3}, P{9, 3}, P{5, 5}, P{25, 5}}) {
    CAPTURE(q);
    CAPTURE(r);
    auto g = metacyclic_pq(q, r);
    CHECK(g.order() == q * r * r);
    Elem a = 1, b = static_cast<Elem>(q * r);
    CHECK(g.element_order(a) == q * r);
    CHECK(g.element_order(b) == r);
    CHECK(g.mul(g.mul(b, a), g.inv(b)) == g.pow(a, static_cast<long long>(q + 1)));
    CHECK(subgroup_closure(g, std::vector<Elem>{a, b}).size() == g.order());
  }
  CHECK(code_of([] { metacyclic_pq(3, 2); }) == Errc::bad_parameters);
}

TEST_CASE("PSL orders match the formula") {
  struct P {
    unsigned n;
    std::uint64_t q;
  };
  for (auto [n, q] : {P{2, 2}, P{2, 3}, P{2, 4}, P{2, 5}, P{2, 7}, P{2, 8}, P{2, 9}, P{2, 11}, P{2, 13},
                      P{2, 16}, P{2, 27}, P{3, 2}, P{3, 3}, P{3, 4}}) {
    CAPTURE(n);
    CAPTURE(q);
    auto g = psl(n, q);
    CHECK(g.order() == psl_order(n, q));
    // independent count: |SL_n(q)| / gcd(n, q-1)
    std::uint64_t sl = 1, qn = 1;
    for (unsigned i = 0; i < n; ++i) qn *= q;
    std::uint64_t qi = 1;
    for (unsigned i = 0; i < n; ++i) {
      sl *= qn - qi;
      qi *= q;
    }
    sl /= q - 1;
    CHECK(g.order() == sl / std::gcd<std::uint64_t>(n, q - 1));
  }
  CHECK(psl(2, 7).label() == "PSL(2,7)");
  CHECK(code_of([] { psl(2, 6); }) == Errc::bad_prime_power);
  CHECK(code_of([] { psl(4, 2); }) == Errc::bad_parameters);
  CHECK(code_of([] { psl(3, 4, 1000); }) == Errc::cap_exceeded);
}

TEST_CASE("PSL automorphism actions") {
  // |Out| = gcd(n, q-1) * k * (2 if n = 3)
  struct P {
    unsigned n;
    std::uint64_t q;
    std::uint64_t out;
  };
  for (auto [n, q, out] : {P{2, 5, 2}, P{2, 7, 2}, P{2, 8, 3}, P{2, 9, 4}, P{2, 11, 2}, P{2, 13, 2}, P{3, 2, 2},
                           P{3, 3, 2}}) {
    CAPTURE(n);
    CAPTURE(q);
    auto g = psl(n, q);
    auto a = psl_aut_action(n, q, g);
    CHECK(a.contains_inner);
    CHECK(a.provenance == kAutExplicit);
    for (const auto& f : a.generators) CHECK(is_automorphism(g, f));
    CHECK(action_order(a) == g.order() * out);
  }
}

TEST_CASE("symmetric conjugation action") {
  auto a5 = alternating(5);
  auto act = symmetric_conjugation_action(a5);
  CHECK(action_order(act) == 120);
  auto s5 = symmetric(5);
  CHECK(action_order(symmetric_conjugation_action(s5)) == 120);
}

TEST_CASE("family specs") {
  auto s = parse_family_spec("cpm:11,5");
  CHECK(s.family == Family::semidirect_cyclic);
  CHECK(s.params == std::vector<std::uint64_t>{11, 5, 3});
  CHECK(parse_family_spec("cpm:29,7").params[2] == 7);
  auto p = parse_family_spec("prod:cpm:5,4*cpm:7,3");
  CHECK(p.family == Family::product);
  CHECK(build_family(p).order() == 420);
  CHECK(parse_family_spec("ab:2x2x3").params == std::vector<std::uint64_t>{2, 2, 3});
  CHECK(code_of([] { parse_family_spec("foo:3"); }) == Errc::bad_parameters);
  CHECK(code_of([] { parse_family_spec("cyc"); }) == Errc::bad_parameters);
  CHECK(code_of([] { parse_family_spec("cyc:x"); }) == Errc::bad_parameters);
  CHECK(code_of([] { parse_family_spec("cpm:11,4"); }) == Errc::bad_parameters);
  CHECK(code_of([] { parse_family_spec("psl:2"); }) == Errc::bad_parameters);
  CHECK(!explicit_aut_action(parse_family_spec("sym:6"), symmetric(6)));
  CHECK(!explicit_aut_action(s, build_family(s)));
}

TEST_CASE("finite fields") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81, 121, 125}) {
    CAPTURE(q);
    FiniteField f(q);
    CHECK(f.q() == q);
    auto g = f.primitive();
    std::uint64_t ord = 1;
    for (auto x = g; x != 1; x = f.mul(x, g)) ++ord;
    CHECK(ord == q - 1);
    for (FiniteField::Elt a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.add(a, 0) == a);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      auto fa = a;
      for (unsigned i = 0; i < f.k(); ++i) fa = f.frobenius(fa);
      CHECK(fa == a);
      for (FiniteField::Elt b = 0; b < q; b += 3) {
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (FiniteField::Elt c = 1; c < q; c += 5)
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
  CHECK(FiniteField(7).primitive() == 3);
  CHECK(FiniteField(9).modulus().size() == 3);
  CHECK(code_of([] { FiniteField f(6); }) == Errc::bad_prime_power);
}
