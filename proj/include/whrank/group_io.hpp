#ifndef WHRANK_GROUP_IO_HPP
#define WHRANK_GROUP_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "whrank/group.hpp"

namespace whrank {

// Group file format:
//
//   %group <name>
//   %perm <degree>            %cayley <n>
//   gen (1 2 3)(4 5)          <n lines of n indices>
//   ...
//
// Blank lines and '#' comments are ignored. Errors carry "source:line".
FiniteGroup read_group(std::istream& in, std::size_t cap = kDefaultCap,
                       const std::string& source = "<input>");
FiniteGroup read_group_file(const std::filesystem::path& path, std::size_t cap = kDefaultCap);

// Writes the generators of a permutation-backed group in %perm form.
void write_perm_group(std::ostream& out, const FiniteGroup& g);
// Writes the full multiplication table in %cayley form.
void write_cayley_group(std::ostream& out, const FiniteGroup& g);

}  // namespace whrank

#endif  // WHRANK_GROUP_IO_HPP
