#include <doctest.h>

#include <random>
#include <sstream>

#include "support.hpp"
#include "whrank/classes.hpp"
#include "whrank/error.hpp"
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

std::vector<std::vector<std::uint32_t>> table_of(const FiniteGroup& g) {
  std::vector<std::vector<std::uint32_t>> t(g.order(), std::vector<std::uint32_t>(g.order()));
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) t[x][y] = g.mul(x, y);
  return t;
}

}  // namespace

TEST_CASE("permutation parsing and formatting") {
  auto p = parse_cycles("(1 2 3)(4, 5)", 6);
  CHECK(p == Perm{1, 2, 0, 4, 3, 5});
  CHECK(format_cycles(p) == "(1 2 3)(4 5)");
  CHECK(parse_cycles("()", 3) == identity_perm(3));
  CHECK(perm_order(p) == 6);
  CHECK(compose(p, inverse(p)) == identity_perm(6));
  CHECK(code_of([] { parse_cycles("(1 2)(2 3)", 3); }) == Errc::invalid_permutation);
  CHECK(code_of([] { parse_cycles("(1 4)", 3); }) == Errc::invalid_permutation);
  CHECK(code_of([] { parse_cycles("(1 2", 3); }) == Errc::invalid_permutation);
}

TEST_CASE("closure of permutation generators") {
  std::vector<Perm> s3{parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)};
  auto g = from_permutation_generators(s3);
  CHECK(g.order() == 6);
  CHECK(g.backing() == Backing::permutation);

  std::vector<Perm> c5{parse_cycles("(1 2 3 4 5)", 5)};
  auto c = from_permutation_generators(c5);
  CHECK(c.order() == 5);
  for (Elem x = 1; x < 5; ++x) CHECK(c.element_order(x) == 5);

  // breadth-first indexing: generators appear right after the identity
  CHECK(g.perm_kernel()->perm(1)[0] == 1);
  CHECK(g.perm_kernel()->perm(2)[0] == 1);

  CHECK(code_of([&] { from_permutation_generators(s3, 5); }) == Errc::cap_exceeded);
  std::vector<Perm> bad{Perm{0, 0, 1}};
  CHECK(code_of([&] { from_permutation_generators(bad); }) == Errc::invalid_permutation);
  CHECK(code_of([] { from_permutation_generators(std::vector<Perm>{}); }) == Errc::invalid_permutation);
}

TEST_CASE("PSL(2,7) closure on 8 points") {
  auto g = psl(2, 7);
  CHECK(g.order() == 168);
  CHECK(g.perm_kernel()->degree() == 8);
  CHECK(g.order() == 7 * (49 - 1) / 2);
}

TEST_CASE("Cayley tables") {
  auto trivial = from_cayley_table({{0}});
  CHECK(trivial.order() == 1);

  auto v4 = from_cayley_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK(v4.order() == 4);
  for (Elem x = 1; x < 4; ++x) CHECK(v4.element_order(x) == 2);

  // S3 with the product of two entries swapped in a way that keeps the Latin
  // property but breaks associativity.
  auto s3 = table_of(symmetric(3));
  auto broken = s3;
  bool found = false;
  for (std::size_t x = 1; x < 6 && !found; ++x) {
    for (std::size_t y = 1; y < 6 && !found; ++y) {
      for (std::size_t x2 = x + 1; x2 < 6 && !found; ++x2) {
        for (std::size_t y2 = 1; y2 < 6 && !found; ++y2) {
          if (y2 == y || s3[x][y] != s3[x2][y2] || s3[x][y2] != s3[x2][y]) continue;
          std::swap(broken[x][y], broken[x][y2]);
          std::swap(broken[x2][y], broken[x2][y2]);
          found = true;
        }
      }
    }
  }
  REQUIRE(found);
  CHECK(code_of([&] { from_cayley_table(broken); }) == Errc::not_associative);

  CHECK(code_of([] { from_cayley_table({{0, 1}, {1, 1}}); }) == Errc::no_inverse);
  CHECK(code_of([] { from_cayley_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 0}}); }) == Errc::not_latin_square);
  CHECK(code_of([] { from_cayley_table({{1, 0}, {0, 1}}); }) == Errc::not_latin_square);
  CHECK(code_of([] { from_cayley_table({{0, 5}, {1, 0}}); }) == Errc::not_latin_square);
}

TEST_CASE("Light's test above 256 elements") {
  auto g = cyclic(300);
  auto t = table_of(g);
  CHECK(from_cayley_table(t).order() == 300);
  // Swap an intercalate: the Latin property and the identity survive.
  auto broken = t;
  std::swap(broken[1][1], broken[1][151]);
  std::swap(broken[151][1], broken[151][151]);
  CHECK(code_of([&] { from_cayley_table(broken); }) == Errc::not_associative);
}

TEST_CASE("group file formats") {
  auto q8 = read_group_file(test_data("q8.grp"));
  CHECK(q8.order() == 8);
  CHECK(q8.label() == "Q8");
  CHECK(conjugacy_classes(q8).count() == 5);
  auto sl = read_group_file(test_data("sl2_3.grp"));
  CHECK(sl.order() == 24);

  std::stringstream ss;
  write_perm_group(ss, sl);
  auto again = read_group(ss);
  CHECK(again.order() == 24);

  std::stringstream cs;
  write_cayley_group(cs, q8);
  auto q8b = read_group(cs);
  CHECK(table_of(q8b) == table_of(q8));

  std::istringstream bad("%group X\n%perm 3\ngen (1 2\n");
  CHECK(code_of([&] { read_group(bad); }) == Errc::parse_error);
  std::istringstream short_table("%group X\n%cayley 2\n0 1\n");
  CHECK(code_of([&] { read_group(short_table); }) == Errc::parse_error);
  std::istringstream comments("# c\n%group C2  # two\n\n%perm 2\ngen (1 2) # swap\n");
  CHECK(read_group(comments).order() == 2);
}

TEST_CASE("conjugacy classes against conjugation by every element") {
  for (const auto& e : corpus()) {
    if (e.group.order() > 200) continue;
    CAPTURE(e.name);
    auto cc = conjugacy_classes(e.group);
    auto brute = brute_classes(e.group);
    CHECK(cc.count() == brute.size());
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < cc.count(); ++c) {
      total += cc.sizes[c];
      for (auto x : cc.members[c]) {
        CHECK(cc.class_of[x] == c);
        CHECK(e.group.element_order(x) == cc.class_order[c]);
      }
    }
    CHECK(total == e.group.order());
    CHECK(cc.representatives[0] == 0);
  }
}

TEST_CASE("class examples") {
  auto c5 = cyclic(5);
  auto cc5 = conjugacy_classes(c5);
  CHECK(cc5.count() == 5);
  // 2-power map on C_5 is a 4-cycle on the non-identity classes
  auto p2 = class_power_map(c5, cc5, 2);
  CHECK(p2[0] == 0);
  std::uint32_t c = 1;
  int steps = 0;
  do {
    c = p2[c];
    ++steps;
  } while (c != 1);
  CHECK(steps == 4);

  auto s3 = symmetric(3);
  auto cc = conjugacy_classes(s3);
  CHECK(cc.sizes == std::vector<std::size_t>{1, 3, 2});
  auto p5 = class_power_map(s3, cc, 5);
  CHECK(p5 == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(class_power_map(s3, cc, 1) == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(atlas_class_names(cc) == std::vector<std::string>{"1A", "2A", "3A"});
}

TEST_CASE("power maps: bijections for units, multiplicative in the exponent") {
  std::mt19937 rng(12345);
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const auto& g = e.group;
    auto cc = conjugacy_classes(g);
    auto ex = g.exponent();
    std::vector<std::uint64_t> units;
    for (std::uint64_t a = 1; a <= std::max<std::uint64_t>(ex, 1); ++a)
      if (std::gcd(a, ex) == 1) units.push_back(a);
    for (int trial = 0; trial < 4; ++trial) {
      auto a = static_cast<long long>(units[rng() % units.size()]);
      auto b = static_cast<long long>(rng() % 50) - 25;
      auto pa = class_power_map(g, cc, a);
      auto pb = class_power_map(g, cc, b);
      auto pab = class_power_map(g, cc, a * b);
      std::vector<bool> hit(cc.count(), false);
      for (std::uint32_t c = 0; c < cc.count(); ++c) {
        CHECK(!hit[pa[c]]);
        hit[pa[c]] = true;
        CHECK(cc.sizes[pa[c]] == cc.sizes[c]);
        CHECK(cc.class_order[pa[c]] == cc.class_order[c]);
        CHECK(pa[pb[c]] == pab[c]);
      }
    }
    // conjugation by each generator fixes the partition
    for (auto s : g.generators())
      for (Elem x = 0; x < g.order(); x += 7) CHECK(cc.class_of[g.conjugate(x, s)] == cc.class_of[x]);
  }
}

TEST_CASE("group invariants on the corpus") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const auto& g = e.group;
    for (Elem x = 0; x < g.order(); ++x) {
      CHECK(g.mul(x, g.inv(x)) == 0);
      CHECK(g.order() % g.element_order(x) == 0);
      if (g.order() <= 60) CHECK(naive_order(g, x) == g.element_order(x));
    }
    CHECK(g.element_order(0) == 1);
    if (g.order() <= 60) {
      for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y) {
          CHECK(g.mul(0, x) == x);
          Elem xy = g.mul(x, y);
          for (Elem z = 0; z < g.order(); z += 5) REQUIRE(g.mul(xy, z) == g.mul(x, g.mul(y, z)));
        }
    }
    if (const auto* pk = g.perm_kernel()) {
      std::set<std::vector<std::uint32_t>> perms;
      for (Elem x = 0; x < g.order(); ++x) perms.emplace(pk->perm(x).begin(), pk->perm(x).end());
      CHECK(perms.size() == g.order());
    }
  }
}

TEST_CASE("direct products") {
  auto c6 = direct_product(cyclic(2), cyclic(3));
  CHECK(c6.order() == 6);
  bool has6 = false;
  for (Elem x = 0; x < 6; ++x) has6 = has6 || c6.element_order(x) == 6;
  CHECK(has6);

  auto s4 = symmetric(4);
  auto copy = direct_product(s4, FiniteGroup());
  CHECK(copy.order() == 24);
  CHECK(conjugacy_classes(copy).count() == conjugacy_classes(s4).count());

  auto big = direct_product(semidirect_cyclic(5, 4, 2), semidirect_cyclic(7, 3, 2));
  CHECK(big.order() == 420);
  for (Elem x = 0; x < big.order(); x += 11) {
    auto o = std::lcm(big.factors()[0].element_order(x / 21), big.factors()[1].element_order(x % 21));
    CHECK(big.element_order(x) == o);
  }
  CHECK(code_of([&] { direct_product(s4, s4, 100); }) == Errc::cap_exceeded);
}

TEST_CASE("deterministic indexing") {
  auto a = psl(2, 11);
  auto b = psl(2, 11);
  for (Elem x = 0; x < a.order(); x += 13)
    for (Elem y = 0; y < a.order(); y += 17) CHECK(a.mul(x, y) == b.mul(x, y));
  CHECK(conjugacy_classes(a).representatives == conjugacy_classes(b).representatives);
}

TEST_CASE("number theory helpers") {
  CHECK(euler_phi(12) == 4);
  CHECK(units_mod(12) == std::vector<std::uint64_t>{1, 5, 7, 11});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(multiplicative_order(3, 11) == 5);
  CHECK(as_prime_power(27)->p == 3);
  CHECK(as_prime_power(27)->k == 3);
  CHECK(!as_prime_power(12));
  CHECK(primes_up_to(20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
}
