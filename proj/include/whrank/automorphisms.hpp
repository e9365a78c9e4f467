#ifndef WHRANK_AUTOMORPHISMS_HPP
#define WHRANK_AUTOMORPHISMS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "whrank/classes.hpp"
#include "whrank/group.hpp"

namespace whrank {

// images[x] is the image of element x.
struct GroupMap {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Elem> images;
};

// Where the generators of an action came from; serialized verbatim.
inline constexpr const char* kInnOnly = "inn-only";
inline constexpr const char* kAutSearch = "aut-search";
inline constexpr const char* kAutExplicit = "aut-explicit";
inline constexpr const char* kAutFile = "aut-file";
inline constexpr const char* kClassData = "class-data";

struct ActionSet {
  FiniteGroup group;
  std::vector<GroupMap> generators;
  bool contains_inner = false;
  std::string provenance;
  // |<generators>| when the producer knows it (the search does).
  std::optional<std::uint64_t> known_order;
};

GroupMap identity_map(const FiniteGroup& g);
GroupMap inner_map(const FiniteGroup& g, Elem by);  // x -> by^-1 x by
GroupMap compose_maps(const GroupMap& first, const GroupMap& second);
GroupMap inverse_map(const GroupMap& f);

// Bijective with f(x g) = f(x) f(g) for every x and generator g, which forces
// f to be a homomorphism.
bool is_automorphism(const FiniteGroup& g, const GroupMap& f);
bool is_homomorphism(const GroupMap& f);

ActionSet inner_automorphisms(const FiniteGroup& g);

// Builds an action from automorphism generators and adds conjugation by the
// group generators, so contains_inner holds. Throws not_homomorphism if a
// map is not an automorphism of g.
ActionSet action_with_inner(const FiniteGroup& g, std::vector<GroupMap> generators,
                            std::string provenance);

// True iff conjugation by each group generator lies in <A.generators>.
bool verify_contains_inner(const ActionSet& a);

// Order of <A>, from the orbit of a generating tuple of the group. Throws
// budget_exceeded once the orbit passes limit.
std::uint64_t action_order(const ActionSet& a, std::uint64_t limit = 50'000'000);
bool action_contains(const ActionSet& a, const GroupMap& f, std::uint64_t limit = 50'000'000);

// Permutation of class indices induced by f.
std::vector<std::uint32_t> induced_class_permutation(const GroupMap& f,
                                                     const ConjugacyClasses& classes);

struct AutSearchStats {
  std::uint64_t nodes = 0;
  std::vector<Elem> sequence;              // generating sequence used
  std::vector<std::size_t> candidates;     // candidate count per level
  std::vector<std::uint64_t> orbit_sizes;  // per level, deepest last
  bool decomposed = false;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Full Aut(G) by backtracking over images of a greedy generating sequence.
// A direct product of coprime-order factors is handled factorwise when
// decompose is set. Throws budget_exceeded with the progress reached.
ActionSet automorphism_group(const FiniteGroup& g, std::uint64_t budget = kDefaultBudget,
                             AutSearchStats* stats = nullptr, bool decompose = true);

// h x^i -> h^a x^(a i) for h in H. H is given by its element set.
GroupMap abelian_normal_power_automorphism(const FiniteGroup& g, std::span<const Elem> h, Elem x,
                                           long long a);

// g -> g psi(g) for a homomorphism psi : G -> Z with Z central and Z <= ker psi.
GroupMap central_shift_automorphism(const FiniteGroup& g, std::span<const Elem> z,
                                    const GroupMap& psi);

// Automorphism file: "%aut <name>" then "map i_0 ... i_{n-1}" per generator.
std::vector<GroupMap> read_aut_file(const std::filesystem::path& path, const FiniteGroup& g);
std::vector<GroupMap> read_aut(std::istream& in, const FiniteGroup& g,
                               const std::string& source = "<input>");
void write_aut(std::ostream& out, const FiniteGroup& g, std::span<const GroupMap> maps);

}  // namespace whrank

#endif  // WHRANK_AUTOMORPHISMS_HPP
