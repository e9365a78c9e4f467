#include "whrank/classdata.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "whrank/error.hpp"
#include "whrank/numtheory.hpp"
#include "whrank/union_find.hpp"

namespace whrank {

namespace {

// Source lines of the parsed pieces, for error messages.
struct LineInfo {
  std::string source;
  std::size_t header = 0;
  std::vector<std::size_t> classes;
  std::map<std::uint64_t, std::size_t> powermaps;
  std::vector<std::size_t> autgens;
};

std::string at(const LineInfo* info, std::size_t line) {
  if (!info) return "";
  return info->source + ":" + std::to_string(line) + ": ";
}

void validate(const ClassTable& t, const LineInfo* info) {
  const std::size_t k = t.count();
  std::size_t header = info ? info->header : 0;
  if (k == 0) throw GroupError(Errc::size_mismatch, at(info, header) + "table has no classes");
  BigInt total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (t.sizes[c] <= 0 || t.order % t.sizes[c] != 0)
      throw GroupError(Errc::size_mismatch, at(info, info ? info->classes[c] : 0) + "class " +
                                                t.names[c] + " size does not divide the order");
    if (t.orders[c] == 0)
      throw GroupError(Errc::size_mismatch,
                       at(info, info ? info->classes[c] : 0) + "class " + t.names[c] + " has order 0");
    total += t.sizes[c];
  }
  if (total != t.order)
    throw GroupError(Errc::size_mismatch, at(info, header) + "class sizes sum to " + total.str() +
                                              ", expected " + t.order.str());

  std::uint64_t max_order = *std::max_element(t.orders.begin(), t.orders.end());
  for (auto p : primes_up_to(max_order)) {
    if (!t.powermaps.count(p))
      throw GroupError(Errc::missing_prime,
                       at(info, header) + "no powermap for prime " + std::to_string(p));
  }
  for (const auto& [p, map] : t.powermaps) {
    std::size_t line = info ? info->powermaps.at(p) : 0;
    if (!is_prime(p))
      throw GroupError(Errc::inconsistent_powermap, at(info, line) + std::to_string(p) + " is not prime");
    if (map.size() != k)
      throw GroupError(Errc::inconsistent_powermap, at(info, line) + "powermap " + std::to_string(p) +
                                                        " has " + std::to_string(map.size()) +
                                                        " entries, expected " + std::to_string(k));
    std::vector<char> hit(k, 0);
    for (std::size_t c = 0; c < k; ++c) {
      std::uint64_t n = t.orders[c];
      std::uint64_t want = n % p == 0 ? n / p : n;
      if (t.orders[map[c]] != want)
        throw GroupError(Errc::inconsistent_powermap,
                         at(info, line) + "powermap " + std::to_string(p) + " sends " + t.names[c] +
                             " (order " + std::to_string(n) + ") to " + t.names[map[c]] +
                             " (order " + std::to_string(t.orders[map[c]]) + "), expected order " +
                             std::to_string(want));
      if (n % p != 0) {
        if (hit[map[c]])
          throw GroupError(Errc::inconsistent_powermap,
                           at(info, line) + "powermap " + std::to_string(p) +
                               " is not injective on classes of order prime to " + std::to_string(p) +
                               " (" + t.names[map[c]] + " hit twice)");
        hit[map[c]] = 1;
        if (t.sizes[map[c]] != t.sizes[c])
          throw GroupError(Errc::inconsistent_powermap,
                           at(info, line) + "powermap " + std::to_string(p) + " sends " + t.names[c] +
                               " to a class of different size");
      }
    }
  }
  for (auto i = t.powermaps.begin(); i != t.powermaps.end(); ++i) {
    for (auto j = std::next(i); j != t.powermaps.end(); ++j) {
      for (std::size_t c = 0; c < k; ++c) {
        if (i->second[j->second[c]] != j->second[i->second[c]])
          throw GroupError(Errc::inconsistent_powermap,
                           at(info, info ? info->powermaps.at(j->first) : 0) + "powermaps " +
                               std::to_string(i->first) + " and " + std::to_string(j->first) +
                               " do not commute at " + t.names[c]);
      }
    }
  }
  for (std::size_t a = 0; a < t.aut_action.size(); ++a) {
    const auto& perm = t.aut_action[a];
    std::size_t line = info ? info->autgens[a] : 0;
    std::vector<char> hit(k, 0);
    for (std::size_t c = 0; c < k; ++c) {
      if (perm[c] >= k || hit[perm[c]])
        throw GroupError(Errc::parse_error, at(info, line) + "autgen is not a permutation");
      hit[perm[c]] = 1;
      if (t.orders[perm[c]] != t.orders[c] || t.sizes[perm[c]] != t.sizes[c])
        throw GroupError(Errc::size_mismatch, at(info, line) + "autgen moves " + t.names[c] +
                                                  " to a class of different order or size");
    }
    for (const auto& [p, map] : t.powermaps) {
      for (std::size_t c = 0; c < k; ++c) {
        if (perm[map[c]] != map[perm[c]])
          throw GroupError(Errc::inconsistent_powermap, at(info, line) + "autgen does not commute with powermap " +
                                                            std::to_string(p) + " at " + t.names[c]);
      }
    }
  }
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

void validate_class_table(const ClassTable& t) { validate(t, nullptr); }

ClassTable parse_class_table(std::istream& in, const std::string& source) {
  ClassTable t;
  LineInfo info;
  info.source = source;
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::pair<std::size_t, std::string>> pending_autgens;
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  auto fail = [&](const std::string& why) {
    throw GroupError(Errc::parse_error, source + ":" + std::to_string(line) + ": " + why);
  };
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) fail("unknown class '" + name + "'");
    return it->second;
  };
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string text = trim(raw);
    if (text.empty()) continue;
    std::istringstream ss(text);
    std::string word;
    ss >> word;
    if (!header) {
      // the name may contain spaces, e.g. "C2 x C2"
      auto at = text.rfind(" order ");
      std::string name = at == std::string::npos || at < word.size() ? "" : trim(text.substr(word.size(), at - word.size()));
      std::string order = at == std::string::npos ? "" : trim(text.substr(at + 7));
      if (word != "%classtable" || name.empty() || order.empty() || order.find(' ') != std::string::npos)
        fail("expected '%classtable <name> order <N>'");
      try {
        t.order = BigInt(order);
      } catch (const std::exception&) {
        fail("bad group order '" + order + "'");
      }
      if (t.order <= 0) fail("group order must be positive");
      t.label = name;
      header = true;
      info.header = line;
      continue;
    }
    if (word == "class") {
      std::string name, kw1, kw2, size;
      long long order = 0;
      if (!(ss >> name >> kw1 >> order >> kw2 >> size) || kw1 != "order" || kw2 != "size" || order <= 0)
        fail("expected 'class <name> order <n> size <s>'");
      if (!t.powermaps.empty() || !pending_autgens.empty()) fail("class lines must precede powermaps");
      if (index.count(name)) fail("duplicate class '" + name + "'");
      index[name] = static_cast<std::uint32_t>(t.names.size());
      t.names.push_back(name);
      t.orders.push_back(static_cast<std::uint64_t>(order));
      try {
        t.sizes.emplace_back(size);
      } catch (const std::exception&) {
        fail("bad class size '" + size + "'");
      }
      info.classes.push_back(line);
    } else if (word == "powermap") {
      std::string ptext;
      ss >> ptext;
      if (ptext.empty() || ptext.back() != ':') fail("expected 'powermap <p>: <names>'");
      ptext.pop_back();
      std::uint64_t p = 0;
      try {
        p = std::stoull(ptext);
      } catch (const std::exception&) {
        fail("bad prime '" + ptext + "'");
      }
      if (t.powermaps.count(p)) fail("duplicate powermap " + ptext);
      std::vector<std::uint32_t> map;
      std::string name;
      while (ss >> name) map.push_back(lookup(name));
      if (map.size() != t.names.size())
        fail("powermap " + ptext + " has " + std::to_string(map.size()) + " entries, expected " +
             std::to_string(t.names.size()));
      t.powermaps[p] = std::move(map);
      info.powermaps[p] = line;
    } else if (word == "autgen:") {
      pending_autgens.emplace_back(line, text.substr(7));
    } else {
      fail("unrecognized line '" + text + "'");
    }
  }
  if (!header) fail("missing '%classtable' header");

  for (const auto& [l, cycles] : pending_autgens) {
    line = l;
    std::vector<std::uint32_t> perm(t.names.size());
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<char> seen(t.names.size(), 0);
    std::string spaced;
    for (char ch : cycles) {
      if (ch == '(' || ch == ')' || ch == ',') {
        spaced += ' ';
        spaced += ch;
        spaced += ' ';
      } else {
        spaced += ch;
      }
    }
    std::istringstream cs(spaced);
    std::string tok;
    std::vector<std::uint32_t> cycle;
    bool open = false;
    while (cs >> tok) {
      if (tok == "(") {
        if (open) fail("nested '(' in autgen");
        open = true;
        cycle.clear();
      } else if (tok == ")") {
        if (!open) fail("unbalanced ')' in autgen");
        open = false;
        for (std::size_t i = 0; i < cycle.size(); ++i) perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
      } else if (tok == ",") {
        continue;
      } else {
        if (!open) fail("class name outside a cycle in autgen");
        auto c = lookup(tok);
        if (seen[c]) fail("class '" + tok + "' repeated in autgen");
        seen[c] = 1;
        cycle.push_back(c);
      }
    }
    if (open) fail("unterminated cycle in autgen");
    t.aut_action.push_back(std::move(perm));
    info.autgens.push_back(l);
  }
  validate(t, &info);
  return t;
}

ClassTable read_class_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GroupError(Errc::io_error, "cannot open " + path.string());
  return parse_class_table(in, path.string());
}

std::uint32_t power_class(const ClassTable& t, std::uint32_t c, long long a) {
  auto n = static_cast<long long>(t.orders[c]);
  long long r = ((a % n) + n) % n;
  if (n == 1) return c;
  if (std::gcd(r, n) != 1)
    throw GroupError(Errc::bad_exponent, "exponent " + std::to_string(a) + " is not a unit mod " +
                                             std::to_string(n));
  for (auto [p, e] : factorize(static_cast<std::uint64_t>(r))) {
    auto it = t.powermaps.find(p);
    if (it == t.powermaps.end())
      throw GroupError(Errc::missing_prime, t.label + " has no powermap for prime " + std::to_string(p));
    for (unsigned i = 0; i < e; ++i) c = it->second[c];
  }
  return c;
}

namespace {

std::size_t table_blocks(const ClassTable& t, Field k, bool with_aut) {
  UnionFind uf(t.count());
  if (with_aut)
    for (const auto& perm : t.aut_action)
      for (std::uint32_t c = 0; c < perm.size(); ++c) uf.unite(c, perm[c]);
  for (std::uint32_t c = 0; c < t.count(); ++c)
    for (auto e : galois_exponents(k, t.orders[c]))
      uf.unite(c, power_class(t, c, static_cast<long long>(e)));
  return uf.labels().second;
}

}  // namespace

RankReport rank_report_from_table(const ClassTable& t) {
  RankReport r;
  r.label = t.label;
  r.order = t.order;
  r.classes_C = t.count();
  r.classes_R_aut = table_blocks(t, Field::R, true);
  r.classes_Q_aut = table_blocks(t, Field::Q, true);
  r.classes_R_inn = table_blocks(t, Field::R, false);
  r.classes_Q_inn = table_blocks(t, Field::Q, false);
  r.N = static_cast<long long>(r.classes_R_aut) - static_cast<long long>(r.classes_Q_aut);
  r.bass_rank = static_cast<long long>(r.classes_R_inn) - static_cast<long long>(r.classes_Q_inn);
  r.action_provenance = kClassData;
  return r;
}

ClassTable class_table_from_group(const FiniteGroup& g, const ConjugacyClasses& classes,
                                  const ActionSet* a) {
  ClassTable t;
  t.label = g.label();
  t.order = g.order();
  t.names = atlas_class_names(classes);
  for (std::size_t c = 0; c < classes.count(); ++c) {
    t.orders.push_back(classes.class_order[c]);
    t.sizes.emplace_back(classes.sizes[c]);
  }
  std::uint64_t max_order = *std::max_element(t.orders.begin(), t.orders.end());
  for (auto p : primes_up_to(max_order))
    t.powermaps[p] = class_power_map(g, classes, static_cast<long long>(p));
  if (a) {
    for (const auto& f : a->generators) {
      auto perm = induced_class_permutation(f, classes);
      bool trivial = true;
      for (std::uint32_t c = 0; c < perm.size(); ++c) trivial = trivial && perm[c] == c;
      if (!trivial && std::find(t.aut_action.begin(), t.aut_action.end(), perm) == t.aut_action.end())
        t.aut_action.push_back(std::move(perm));
    }
  }
  return t;
}

void write_class_table(std::ostream& out, const ClassTable& t) {
  out << "%classtable " << t.label << " order " << t.order << "\n";
  for (std::size_t c = 0; c < t.count(); ++c)
    out << "class " << t.names[c] << " order " << t.orders[c] << " size " << t.sizes[c] << "\n";
  for (const auto& [p, map] : t.powermaps) {
    out << "powermap " << p << ":";
    for (auto c : map) out << ' ' << t.names[c];
    out << "\n";
  }
  for (const auto& perm : t.aut_action) {
    out << "autgen: ";
    std::vector<char> done(perm.size(), 0);
    for (std::uint32_t c = 0; c < perm.size(); ++c) {
      if (done[c] || perm[c] == c) continue;
      out << '(';
      for (std::uint32_t x = c; !done[x]; x = perm[x]) {
        if (x != c) out << ' ';
        out << t.names[x];
        done[x] = 1;
      }
      out << ')';
    }
    out << "\n";
  }
}

CrossValidation cross_validate(const FiniteGroup& g, const ActionSet& a, const ClassTable& t) {
  auto classes = conjugacy_classes(g);
  CrossValidation cv{rank_report(g, classes, a, inner_automorphisms(g)), rank_report_from_table(t)};
  std::vector<std::string> diff;
  if (BigInt(g.order()) != t.order)
    diff.push_back("order: explicit " + std::to_string(g.order()) + ", table " + t.order.str());
  std::vector<std::pair<std::uint64_t, BigInt>> es, ts;
  for (std::size_t c = 0; c < classes.count(); ++c)
    es.emplace_back(classes.class_order[c], BigInt(classes.sizes[c]));
  for (std::size_t c = 0; c < t.count(); ++c) ts.emplace_back(t.orders[c], t.sizes[c]);
  std::sort(es.begin(), es.end());
  std::sort(ts.begin(), ts.end());
  if (es != ts) {
    std::vector<std::pair<std::uint64_t, BigInt>> only_e, only_t;
    std::set_difference(es.begin(), es.end(), ts.begin(), ts.end(), std::back_inserter(only_e));
    std::set_difference(ts.begin(), ts.end(), es.begin(), es.end(), std::back_inserter(only_t));
    for (auto& [o, s] : only_e)
      diff.push_back("class of order " + std::to_string(o) + " size " + s.str() + " only in explicit group");
    for (auto& [o, s] : only_t)
      diff.push_back("class of order " + std::to_string(o) + " size " + s.str() + " only in table");
  }
  auto cmp = [&](const char* what, std::uint64_t x, std::uint64_t y) {
    if (x != y) diff.push_back(std::string(what) + ": explicit " + std::to_string(x) + ", table " + std::to_string(y));
  };
  const auto& e = cv.explicit_report;
  const auto& r = cv.table_report;
  cmp("classes_C", e.classes_C, r.classes_C);
  cmp("classes_R_aut", e.classes_R_aut, r.classes_R_aut);
  cmp("classes_Q_aut", e.classes_Q_aut, r.classes_Q_aut);
  cmp("classes_R_inn", e.classes_R_inn, r.classes_R_inn);
  cmp("classes_Q_inn", e.classes_Q_inn, r.classes_Q_inn);
  if (!diff.empty()) {
    std::string msg = g.label() + " vs table " + t.label + ":";
    for (const auto& d : diff) msg += "\n  " + d;
    throw GroupError(Errc::mismatch, msg);
  }
  return cv;
}

}  // namespace whrank
