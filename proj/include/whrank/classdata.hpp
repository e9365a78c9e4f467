#ifndef WHRANK_CLASSDATA_HPP
#define WHRANK_CLASSDATA_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "whrank/automorphisms.hpp"
#include "whrank/classes.hpp"
#include "whrank/kconj.hpp"

namespace whrank {

struct ClassTable {
  std::string label;
  BigInt order;
  std::vector<std::string> names;
  std::vector<std::uint64_t> orders;
  std::vector<BigInt> sizes;
  std::map<std::uint64_t, std::vector<std::uint32_t>> powermaps;  // prime -> class map
  std::vector<std::vector<std::uint32_t>> aut_action;             // class permutations

  std::size_t count() const { return names.size(); }
};

// Class-data format:
//   %classtable <name> order <N>
//   class <name> order <n> size <s>
//   powermap <p>: <k class names>
//   autgen: (<name> <name> ...)(...)
// '#' starts a comment. The result is validated (see validate_class_table).
ClassTable parse_class_table(std::istream& in, const std::string& source = "<input>");
ClassTable read_class_table_file(const std::filesystem::path& path);

// Checks sizes sum to the order, powermap orders and bijectivity, pairwise
// commuting powermaps, presence of every prime up to the largest element
// order, and that aut generators preserve order and size and commute with
// the powermaps. Throws size_mismatch or inconsistent_powermap.
void validate_class_table(const ClassTable& t);

// Class of x^a for x in class c, composing prime powermaps over the factors
// of a mod order(c). Throws missing_prime.
std::uint32_t power_class(const ClassTable& t, std::uint32_t c, long long a);

RankReport rank_report_from_table(const ClassTable& t);

// Class table of an explicit group, with Atlas-style names and the action of
// a on classes (a may be null for Inn only).
ClassTable class_table_from_group(const FiniteGroup& g, const ConjugacyClasses& classes,
                                  const ActionSet* a);
void write_class_table(std::ostream& out, const ClassTable& t);

struct CrossValidation {
  RankReport explicit_report;
  RankReport table_report;
};

// Compares class counts, the (order, size) multiset and all five fusion
// counts between an explicit group and a table. Throws mismatch with a diff.
CrossValidation cross_validate(const FiniteGroup& g, const ActionSet& a, const ClassTable& t);

}  // namespace whrank

#endif  // WHRANK_CLASSDATA_HPP
