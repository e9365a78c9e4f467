#include "whrank/permutation.hpp"

#include <cctype>
#include <numeric>

#include "whrank/error.hpp"

namespace whrank {

Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

bool is_bijection(std::span<const std::uint32_t> p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm compose(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) {
  Perm r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
  return r;
}

Perm inverse(std::span<const std::uint32_t> p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

std::uint64_t perm_order(std::span<const std::uint32_t> p) {
  std::vector<bool> seen(p.size(), false);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  Perm p = identity_perm(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> void {
    throw GroupError(Errc::invalid_permutation,
                     "'" + std::string(text) + "': " + why);
  };
  auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_space();
  if (i == text.size()) fail("empty permutation");
  while (true) {
    skip_space();
    if (i == text.size()) break;
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_space();
      if (i == text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("unexpected character");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > degree) fail("point exceeds degree " + std::to_string(degree));
        ++i;
      }
      if (v == 0) fail("points are numbered from 1");
      if (used[v - 1]) fail("point " + std::to_string(v) + " repeated");
      used[v - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
  }
  return p;
}

std::string format_cycles(std::span<const std::uint32_t> p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace whrank
