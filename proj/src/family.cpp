#include <charconv>
#include <numeric>

#include "whrank/constructors.hpp"
#include "whrank/error.hpp"
#include "whrank/numtheory.hpp"

namespace whrank {

namespace {

[[noreturn]] void bad_spec(std::string_view text, const std::string& why) {
  throw GroupError(Errc::bad_parameters, "family '" + std::string(text) + "': " + why);
}

std::vector<std::uint64_t> parse_numbers(std::string_view whole, std::string_view s, char sep) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (true) {
    auto end = s.find(sep, pos);
    auto piece = s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
      bad_spec(whole, "expected a non-negative integer, got '" + std::string(piece) + "'");
    out.push_back(v);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) bad_spec(text, "expected '<family>:<parameters>'");
  auto tag = text.substr(0, colon);
  auto rest = text.substr(colon + 1);
  FamilySpec spec{Family::cyclic, {}, {}, std::string(text)};
  auto arity = [&](std::size_t lo, std::size_t hi) {
    spec.params = parse_numbers(text, rest, ',');
    if (spec.params.size() < lo || spec.params.size() > hi)
      bad_spec(text, "wrong number of parameters");
  };
  if (tag == "prod") {
    auto star = rest.find('*');
    if (star == std::string_view::npos) bad_spec(text, "expected prod:<spec>*<spec>");
    spec.family = Family::product;
    spec.parts.push_back(parse_family_spec(rest.substr(0, star)));
    spec.parts.push_back(parse_family_spec(rest.substr(star + 1)));
  } else if (tag == "cpm") {
    spec.family = Family::semidirect_cyclic;
    arity(2, 3);
    if (spec.params.size() == 2) {
      auto [p, m] = std::pair(spec.params[0], spec.params[1]);
      if (p == 0 || m == 0) bad_spec(text, "p and m must be positive");
      std::uint64_t k = 0;
      if (m == 1 || p == 1) {
        k = 1;
      } else {
        for (std::uint64_t c = 2; c < p && k == 0; ++c)
          if (std::gcd(c, p) == 1 && multiplicative_order(c, p) == m) k = c;
      }
      if (k == 0) bad_spec(text, "no residue of order " + std::to_string(m) + " mod " + std::to_string(p));
      spec.params.push_back(k);
    }
  } else if (tag == "meta") {
    spec.family = Family::metacyclic_pq;
    arity(2, 2);
  } else if (tag == "psl") {
    spec.family = Family::psl;
    arity(2, 2);
  } else if (tag == "sym" || tag == "alt" || tag == "dih" || tag == "cyc") {
    spec.family = tag == "sym"   ? Family::symmetric
                  : tag == "alt" ? Family::alternating
                  : tag == "dih" ? Family::dihedral
                                 : Family::cyclic;
    arity(1, 1);
  } else if (tag == "ab") {
    spec.family = Family::abelian;
    spec.params = parse_numbers(text, rest, 'x');
  } else {
    bad_spec(text, "unknown family '" + std::string(tag) + "'");
  }
  return spec;
}

FiniteGroup build_family(const FamilySpec& spec, std::size_t cap) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::cyclic:
      return cyclic(p[0], cap);
    case Family::abelian:
      return abelian(p, cap);
    case Family::dihedral:
      return dihedral(p[0], cap);
    case Family::symmetric:
      return symmetric(p[0], cap);
    case Family::alternating:
      return alternating(p[0], cap);
    case Family::semidirect_cyclic:
      return semidirect_cyclic(p[0], p[1], p[2], cap);
    case Family::metacyclic_pq:
      return metacyclic_pq(p[0], p[1], cap);
    case Family::psl:
      if (p[0] > 3) throw GroupError(Errc::bad_parameters, "PSL_n(q) is supported for n = 2, 3 only");
      return psl(static_cast<unsigned>(p[0]), p[1], cap);
    case Family::product:
      return direct_product(build_family(spec.parts[0], cap), build_family(spec.parts[1], cap), cap);
  }
  throw GroupError(Errc::bad_parameters, "unhandled family");
}

std::optional<ActionSet> explicit_aut_action(const FamilySpec& spec, const FiniteGroup& g) {
  switch (spec.family) {
    case Family::psl:
      return psl_aut_action(static_cast<unsigned>(spec.params[0]), spec.params[1], g);
    case Family::symmetric:
    case Family::alternating:
      if (spec.params[0] == 6) return std::nullopt;
      if (!g.perm_kernel()) return action_with_inner(g, {}, kAutExplicit);
      return symmetric_conjugation_action(g);
    default:
      return std::nullopt;
  }
}

}  // namespace whrank
