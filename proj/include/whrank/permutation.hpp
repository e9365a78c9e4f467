#ifndef WHRANK_PERMUTATION_HPP
#define WHRANK_PERMUTATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace whrank {

// A permutation of {0, ..., d-1} stored as its image list. Products read left
// to right: (x * y)[i] = y[x[i]], i.e. x is applied first.
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::size_t degree);
bool is_bijection(std::span<const std::uint32_t> p);
Perm compose(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y);
Perm inverse(std::span<const std::uint32_t> p);

// lcm of the cycle lengths.
std::uint64_t perm_order(std::span<const std::uint32_t> p);

// Parses disjoint-cycle notation over points 1..degree, e.g. "(1 2 3)(4 5)".
// Commas may separate points; "()" is the identity. Throws
// GroupError(invalid_permutation) on malformed input, repeated points, or
// points outside 1..degree.
Perm parse_cycles(std::string_view text, std::size_t degree);

// Inverse of parse_cycles, 1-based, fixed points omitted.
std::string format_cycles(std::span<const std::uint32_t> p);

}  // namespace whrank

#endif  // WHRANK_PERMUTATION_HPP
