#include "whrank/group_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "whrank/error.hpp"

namespace whrank {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto t = trim(raw);
    if (!t.empty()) lines.push_back({number, std::move(t)});
  }
  return lines;
}

[[noreturn]] void parse_fail(const std::string& source, std::size_t line, const std::string& why) {
  throw GroupError(Errc::parse_error, source + ":" + std::to_string(line) + ": " + why);
}

std::size_t parse_count(const std::string& source, const Line& l, const std::string& word) {
  std::istringstream ss(l.text.substr(word.size()));
  long long v = -1;
  std::string extra;
  if (!(ss >> v) || v < 0 || (ss >> extra)) parse_fail(source, l.number, "expected " + word + " <count>");
  return static_cast<std::size_t>(v);
}

}  // namespace

FiniteGroup read_group(std::istream& in, std::size_t cap, const std::string& source) {
  auto lines = content_lines(in);
  if (lines.empty() || lines[0].text.rfind("%group", 0) != 0)
    parse_fail(source, lines.empty() ? 0 : lines[0].number, "expected '%group <name>'");
  std::string name = trim(lines[0].text.substr(6));
  if (name.empty()) parse_fail(source, lines[0].number, "missing group name");
  if (lines.size() < 2) parse_fail(source, lines[0].number, "missing %perm or %cayley section");

  const Line& kind = lines[1];
  if (kind.text.rfind("%perm", 0) == 0) {
    std::size_t degree = parse_count(source, kind, "%perm");
    if (degree == 0) parse_fail(source, kind.number, "degree must be positive");
    std::vector<Perm> gens;
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const auto& l = lines[i];
      if (l.text.rfind("gen", 0) != 0) parse_fail(source, l.number, "expected 'gen <cycles>'");
      try {
        gens.push_back(parse_cycles(l.text.substr(3), degree));
      } catch (const GroupError& e) {
        parse_fail(source, l.number, e.what());
      }
    }
    if (gens.empty()) parse_fail(source, kind.number, "no generators");
    return from_permutation_generators(gens, cap, name);
  }
  if (kind.text.rfind("%cayley", 0) == 0) {
    std::size_t n = parse_count(source, kind, "%cayley");
    if (n == 0) parse_fail(source, kind.number, "order must be positive");
    if (n > cap)
      throw GroupError(Errc::cap_exceeded, source + ": order " + std::to_string(n) +
                                               " exceeds the cap of " + std::to_string(cap));
    if (lines.size() != n + 2)
      parse_fail(source, kind.number, "expected " + std::to_string(n) + " table rows, found " +
                                          std::to_string(lines.size() - 2));
    std::vector<std::vector<std::uint32_t>> table(n);
    for (std::size_t r = 0; r < n; ++r) {
      std::istringstream ss(lines[r + 2].text);
      long long v;
      while (ss >> v) {
        if (v < 0) parse_fail(source, lines[r + 2].number, "negative index");
        table[r].push_back(static_cast<std::uint32_t>(v));
      }
      if (!ss.eof()) parse_fail(source, lines[r + 2].number, "non-numeric entry");
    }
    return from_cayley_table(table, name);
  }
  parse_fail(source, kind.number, "expected '%perm <degree>' or '%cayley <n>'");
}

FiniteGroup read_group_file(const std::filesystem::path& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw GroupError(Errc::io_error, "cannot open " + path.string());
  return read_group(in, cap, path.string());
}

void write_perm_group(std::ostream& out, const FiniteGroup& g) {
  const PermKernel* pk = g.perm_kernel();
  if (!pk) throw GroupError(Errc::bad_parameters, "group " + g.label() + " is not permutation-backed");
  out << "%group " << g.label() << "\n%perm " << pk->degree() << "\n";
  if (g.generators().empty()) out << "gen ()\n";
  for (auto x : g.generators()) out << "gen " << format_cycles(pk->perm(x)) << "\n";
}

void write_cayley_group(std::ostream& out, const FiniteGroup& g) {
  out << "%group " << g.label() << "\n%cayley " << g.order() << "\n";
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) out << (y ? " " : "") << g.mul(x, y);
    out << "\n";
  }
}

}  // namespace whrank
