#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "whrank/classes.hpp"
#include "whrank/error.hpp"

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

std::vector<Elem> all_elements(const FiniteGroup& g, std::span<const Elem> gens) {
  return subgroup_closure(g, gens);
}

}  // namespace

TEST_CASE("is_automorphism examples") {
  auto s3 = symmetric(3);
  CHECK(is_automorphism(s3, identity_map(s3)));
  GroupMap inversion{s3, s3, std::vector<Elem>(6)};
  for (Elem x = 0; x < 6; ++x) inversion.images[x] = s3.inv(x);
  CHECK(!is_automorphism(s3, inversion));

  auto c5 = cyclic(5);
  GroupMap cube{c5, c5, std::vector<Elem>(5)};
  for (Elem x = 0; x < 5; ++x) cube.images[x] = c5.pow(x, 3);
  CHECK(is_automorphism(c5, cube));
  GroupMap zero{c5, c5, std::vector<Elem>(5, 0)};
  CHECK(is_homomorphism(zero));
  CHECK(!is_automorphism(c5, zero));

  auto f = inner_map(s3, 1);
  CHECK(compose_maps(f, inverse_map(f)).images == identity_map(s3).images);
}

TEST_CASE("inner automorphism groups") {
  CHECK(action_order(inner_automorphisms(symmetric(3))) == 6);
  CHECK(action_order(inner_automorphisms(read_group_file(test_data("q8.grp")))) == 4);
  CHECK(action_order(inner_automorphisms(cyclic(7))) == 1);
  CHECK(action_order(inner_automorphisms(alternating(5))) == 60);
  CHECK(verify_contains_inner(inner_automorphisms(dihedral(4))));
}

TEST_CASE("automorphism group orders") {
  CHECK(action_order(automorphism_group(cyclic(5))) == 4);
  CHECK(action_order(automorphism_group(read_group_file(test_data("q8.grp")))) == 24);
  CHECK(action_order(automorphism_group(symmetric(3))) == 6);
  CHECK(action_order(automorphism_group(symmetric(6))) == 1440);
  CHECK(action_order(automorphism_group(abelian(std::vector<std::uint64_t>{2, 2, 2}))) == 168);
  CHECK(action_order(automorphism_group(psl(2, 9))) == 1440);
}

TEST_CASE("search agrees with brute force on small groups") {
  for (const auto& e : corpus()) {
    if (e.group.order() > 24) continue;
    CAPTURE(e.name);
    auto brute = brute_automorphisms(e.group);
    AutSearchStats stats;
    auto a = automorphism_group(e.group, kDefaultBudget, &stats);
    CHECK(a.provenance == kAutSearch);
    CHECK(a.contains_inner);
    CHECK(action_order(a) == brute.size());
    if (a.known_order) CHECK(*a.known_order == brute.size());
    for (const auto& f : a.generators) CHECK(is_automorphism(e.group, f));
    for (std::size_t i = 0; i < brute.size(); i += 3)
      CHECK(action_contains(a, GroupMap{e.group, e.group, brute[i]}));
  }
}

TEST_CASE("search output is always automorphisms containing Inn") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    auto a = automorphism_group(e.group);
    CHECK(verify_contains_inner(a));
    for (const auto& f : a.generators) CHECK(is_automorphism(e.group, f));
  }
}

TEST_CASE("coprime products decompose") {
  auto g = build_family(parse_family_spec("prod:cpm:5,4*cpm:7,3"));
  AutSearchStats with, without;
  auto a = automorphism_group(g, kDefaultBudget, &with, true);
  auto b = automorphism_group(g, kDefaultBudget, &without, false);
  CHECK(with.decomposed);
  CHECK(!without.decomposed);
  CHECK(action_order(a) == 20 * 42);
  CHECK(action_order(b) == 20 * 42);
}

TEST_CASE("budget") {
  CHECK(code_of([] { automorphism_group(symmetric(5), 1); }) == Errc::budget_exceeded);
  try {
    automorphism_group(symmetric(5), 1);
  } catch (const GroupError& e) {
    CHECK(std::string(e.what()).find("level") != std::string::npos);
  }
}

TEST_CASE("action_with_inner rejects non-homomorphisms") {
  auto s3 = symmetric(3);
  GroupMap bad{s3, s3, std::vector<Elem>(6)};
  for (Elem x = 0; x < 6; ++x) bad.images[x] = s3.inv(x);
  CHECK(code_of([&] { action_with_inner(s3, {bad}, kAutExplicit); }) == Errc::not_homomorphism);
}

TEST_CASE("power automorphism on an abelian normal subgroup") {
  auto g = semidirect_cyclic(9, 6, 2);
  Elem a = 1, b = 9;
  auto h = all_elements(g, std::vector<Elem>{a});
  auto f = abelian_normal_power_automorphism(g, h, b, 7);
  CHECK(is_automorphism(g, f));
  CHECK(f.images[a] == g.pow(a, 7));
  CHECK(f.images[b] == b);

  auto f20 = semidirect_cyclic(5, 4, 2);
  auto h20 = all_elements(f20, std::vector<Elem>{1});
  CHECK(code_of([&] { abelian_normal_power_automorphism(f20, h20, 5, 3); }) == Errc::bad_exponent);
  CHECK(code_of([&] { abelian_normal_power_automorphism(f20, h20, 5, 5); }) == Errc::bad_exponent);
  CHECK(is_automorphism(f20, abelian_normal_power_automorphism(f20, h20, 5, 9)));

  auto s4 = symmetric(4);
  // a non-normal abelian subgroup: generated by a transposition
  Elem t = 0;
  for (Elem x = 1; x < s4.order(); ++x) {
    auto p = s4.perm_kernel()->perm(x);
    int moved = 0;
    for (std::uint32_t i = 0; i < 4; ++i) moved += p[i] != i;
    if (moved == 2) {
      t = x;
      break;
    }
  }
  auto ht = all_elements(s4, std::vector<Elem>{t});
  CHECK(code_of([&] { abelian_normal_power_automorphism(s4, ht, 1, 5); }) == Errc::not_normal);

  auto whole = all_elements(s4, std::vector<Elem>(s4.generators().begin(), s4.generators().end()));
  CHECK(code_of([&] { abelian_normal_power_automorphism(s4, whole, 0, 5); }) == Errc::not_abelian);

  auto q8 = read_group_file(test_data("q8.grp"));
  Elem minus_one = 0;
  for (Elem x = 1; x < 8; ++x)
    if (q8.element_order(x) == 2) minus_one = x;
  std::vector<Elem> center{0, minus_one};
  Elem i_unit = minus_one == 1 ? 2 : 1;
  CHECK(code_of([&] { abelian_normal_power_automorphism(q8, center, i_unit, 5); }) == Errc::not_generating);
}

TEST_CASE("central shift automorphism") {
  auto g = semidirect_cyclic(5, 8, 2);
  const Elem b = 5, b4 = g.pow(b, 4);
  std::vector<Elem> z{0, b4};
  GroupMap psi{g, g, std::vector<Elem>(g.order())};
  for (Elem x = 0; x < g.order(); ++x) psi.images[x] = (x / 5) % 2 ? b4 : 0;
  auto f = central_shift_automorphism(g, z, psi);
  CHECK(is_automorphism(g, f));
  CHECK(f.images[b] == g.pow(b, 5));
  CHECK(f.images[1] == 1);

  auto c2 = cyclic(2);
  std::vector<Elem> all_c2{0, 1};
  CHECK(code_of([&] { central_shift_automorphism(c2, all_c2, identity_map(c2)); }) == Errc::kernel_condition);

  std::vector<Elem> not_central = all_elements(g, std::vector<Elem>{1});
  CHECK(code_of([&] { central_shift_automorphism(g, not_central, psi); }) == Errc::not_central);

  GroupMap into_b{g, g, std::vector<Elem>(g.order())};
  for (Elem x = 0; x < g.order(); ++x) into_b.images[x] = g.pow(b, static_cast<long long>(x / 5));
  CHECK(code_of([&] { central_shift_automorphism(g, z, into_b); }) == Errc::not_homomorphism);
}

TEST_CASE("aut file round trip") {
  auto g = psl(2, 8);
  auto a = psl_aut_action(2, 8, g);
  std::stringstream ss;
  write_aut(ss, g, a.generators);
  auto back = read_aut(ss, g);
  REQUIRE(back.size() == a.generators.size());
  for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i].images == a.generators[i].images);

  std::istringstream bad("%aut PSL(2,8)\nmap 0 0 0\n");
  CHECK(code_of([&] { read_aut(bad, g); }) == Errc::parse_error);
}

TEST_CASE("induced class permutations") {
  auto g = psl(2, 8);
  auto cc = conjugacy_classes(g);
  auto a = psl_aut_action(2, 8, g);
  bool moves = false;
  for (const auto& f : a.generators) {
    auto perm = induced_class_permutation(f, cc);
    for (std::uint32_t c = 0; c < cc.count(); ++c) {
      CHECK(cc.sizes[perm[c]] == cc.sizes[c]);
      moves = moves || perm[c] != c;
    }
  }
  CHECK(moves);
}
