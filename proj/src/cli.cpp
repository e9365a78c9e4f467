#include "whrank/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "whrank/classdata.hpp"
#include "whrank/constructors.hpp"
#include "whrank/error.hpp"
#include "whrank/group_io.hpp"
#include "whrank/numtheory.hpp"
#include "whrank/report.hpp"

#ifndef WHRANK_DATA_DIR
#define WHRANK_DATA_DIR "data"
#endif

namespace whrank {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string group_file;
  std::vector<std::string> families;
  std::vector<std::string> sweeps;
  std::string aut = "auto";
  std::size_t cap = kDefaultCap;
  std::uint64_t budget = kDefaultBudget;
  std::string format = "tsv";
  unsigned jobs = 1;
  std::vector<std::string> paths;
  std::string write_path;
};

// Prefixes the failing stage to computation errors.
template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const GroupError& e) {
    throw GroupError(e.code(), name + ": " + e.what());
  }
}

struct Subject {
  FiniteGroup group;
  std::optional<FamilySpec> spec;
};

Subject load_family(const std::string& text, const RunConfig& cfg) {
  Subject s;
  s.spec = stage("parse family", [&] { return parse_family_spec(text); });
  s.group = stage("build " + text, [&] { return build_family(*s.spec, cfg.cap); });
  return s;
}

Subject load_file(const std::string& path, const RunConfig& cfg) {
  return {stage("load " + path, [&] { return read_group_file(path, cfg.cap); }), std::nullopt};
}

Subject load_subject(const RunConfig& cfg) {
  if (!cfg.group_file.empty()) return load_file(cfg.group_file, cfg);
  return load_family(cfg.families.front(), cfg);
}

ActionSet obtain_aut(const Subject& s, const RunConfig& cfg, AutSearchStats* stats = nullptr) {
  const auto& g = s.group;
  return stage("automorphisms of " + g.label(), [&]() -> ActionSet {
    if (cfg.aut == "inn-only") return inner_automorphisms(g);
    if (cfg.aut.rfind("file:", 0) == 0)
      return action_with_inner(g, read_aut_file(cfg.aut.substr(5), g), kAutFile);
    if (cfg.aut == "explicit" || cfg.aut == "auto") {
      std::optional<ActionSet> a;
      if (s.spec && (cfg.aut == "explicit" || s.spec->family == Family::psl))
        a = explicit_aut_action(*s.spec, g);
      if (a) return *a;
      if (cfg.aut == "explicit")
        throw GroupError(Errc::bad_parameters, "no explicit automorphism construction for " + g.label());
    }
    return automorphism_group(g, cfg.budget, stats);
  });
}

RankReport compute_report(const Subject& s, const RunConfig& cfg) {
  auto aut = obtain_aut(s, cfg);
  return stage("rank of " + s.group.label(),
               [&] { return rank_report(s.group, aut, inner_automorphisms(s.group)); });
}

// Runs fn(i) for i < n on up to `jobs` threads; results keep input order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, F fn) {
  std::vector<T> results(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) results[i] = fn(i);
  };
  unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

struct Outcome {
  std::optional<RankReport> report;
  std::string error;
  std::string prediction = "-";
  std::string agree = "-";
  std::string name;
};

void emit_report(std::ostream& out, const RunConfig& cfg, const RankReport& r, bool header) {
  if (cfg.format == "json") {
    out << report_json(r) << "\n";
  } else {
    if (header) out << report_tsv_header() << "\n";
    out << report_tsv_row(r) << "\n";
  }
}

// --------------------------------------------------------------- commands

int cmd_rank(const RunConfig& cfg, std::ostream& out) {
  auto s = load_subject(cfg);
  auto r = compute_report(s, cfg);
  emit_report(out, cfg, r, true);
  return r.N > 0 ? 3 : 0;
}

std::vector<std::string> expand_sweep(const std::string& sweep) {
  // cpm:a..b -> for each m in [a, b], the least prime p = 1 mod m
  auto colon = sweep.find(':');
  auto dots = sweep.find("..");
  if (colon == std::string::npos || dots == std::string::npos || sweep.substr(0, colon) != "cpm")
    throw GroupError(Errc::bad_parameters, "sweep '" + sweep + "': expected cpm:<a>..<b>");
  std::uint64_t a = 0, b = 0;
  try {
    a = std::stoull(sweep.substr(colon + 1, dots - colon - 1));
    b = std::stoull(sweep.substr(dots + 2));
  } catch (const std::exception&) {
    throw GroupError(Errc::bad_parameters, "sweep '" + sweep + "': bad range");
  }
  std::vector<std::string> out;
  for (std::uint64_t m = std::max<std::uint64_t>(a, 1); m <= b; ++m) {
    std::uint64_t p = m + 1;
    while (!is_prime(p)) p += m;
    out.push_back("cpm:" + std::to_string(p) + "," + std::to_string(m));
  }
  return out;
}

int cmd_family(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> specs = cfg.families;
  for (const auto& s : cfg.sweeps) {
    auto more = stage("sweep", [&] { return expand_sweep(s); });
    specs.insert(specs.end(), more.begin(), more.end());
  }
  auto rows = parallel_map<Outcome>(specs.size(), cfg.jobs, [&](std::size_t i) {
    Outcome o;
    o.name = specs[i];
    try {
      auto s = load_family(specs[i], cfg);
      o.report = compute_report(s, cfg);
      if (s.spec->family == Family::semidirect_cyclic) {
        auto pred = divisor_sum_formula(s.spec->params[1]);
        o.prediction = std::to_string(pred);
        o.agree = o.report->N == pred ? "yes" : "no";
      } else if (s.spec->family == Family::metacyclic_pq) {
        bool pred = metacyclic_prediction(s.spec->params[0], s.spec->params[1]);
        o.prediction = pred ? ">0" : "none";
        o.agree = pred ? (o.report->N > 0 ? "yes" : "no") : "-";
      }
    } catch (const GroupError& e) {
      o.error = e.what();
    }
    return o;
  });
  int code = 0;
  if (cfg.format == "tsv") out << "family\t" << report_tsv_header() << "\tprediction\tagree\n";
  for (const auto& o : rows) {
    if (!o.report) {
      err << "error: " << o.error << "\n";
      code = 2;
      continue;
    }
    if (cfg.format == "json") {
      auto j = nlohmann::ordered_json::parse(report_json(*o.report));
      j["family"] = o.name;
      j["prediction"] = o.prediction;
      j["agree"] = o.agree;
      out << j.dump() << "\n";
    } else {
      out << o.name << "\t" << report_tsv_row(*o.report) << "\t" << o.prediction << "\t" << o.agree
          << "\n";
    }
  }
  return code;
}

int cmd_survey(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<fs::path> files;
  for (const auto& dir : cfg.paths) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw GroupError(Errc::io_error, "survey: " + dir + " is not a directory");
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  auto rows = parallel_map<Outcome>(files.size(), cfg.jobs, [&](std::size_t i) {
    Outcome o;
    o.name = files[i].filename().string();
    try {
      o.report = compute_report(load_file(files[i].string(), cfg), cfg);
    } catch (const GroupError& e) {
      o.error = e.what();
    }
    return o;
  });

  struct PerOrder {
    std::size_t groups = 0;
    long long max_n = 0;
    std::size_t positive = 0;
  };
  std::map<std::uint64_t, PerOrder> census;
  int code = 0;
  if (cfg.format == "tsv") out << "file\t" << report_tsv_header() << "\n";
  for (const auto& o : rows) {
    if (!o.report) {
      err << "error: " << o.error << "\n";
      code = 2;
      continue;
    }
    auto& c = census[static_cast<std::uint64_t>(o.report->order)];
    ++c.groups;
    c.max_n = std::max(c.max_n, o.report->N);
    if (o.report->N > 0) ++c.positive;
    if (cfg.format == "json") {
      auto j = nlohmann::ordered_json::parse(report_json(*o.report));
      j["file"] = o.name;
      out << j.dump() << "\n";
    } else {
      out << o.name << "\t" << report_tsv_row(*o.report) << "\n";
    }
  }
  std::optional<std::uint64_t> first_positive;
  for (const auto& [order, c] : census)
    if (c.positive > 0 && !first_positive) first_positive = order;
  if (cfg.format == "json") {
    nlohmann::ordered_json s;
    s["groups"] = rows.size();
    s["failed"] = std::count_if(rows.begin(), rows.end(), [](const Outcome& o) { return !o.report; });
    s["first_order_with_N_positive"] =
        first_positive ? nlohmann::ordered_json(*first_positive) : nlohmann::ordered_json(nullptr);
    auto& per = s["per_order"] = nlohmann::ordered_json::array();
    for (const auto& [order, c] : census)
      per.push_back({{"order", order}, {"groups", c.groups}, {"max_N", c.max_n}, {"N_positive", c.positive}});
    out << nlohmann::ordered_json{{"summary", s}}.dump() << "\n";
  } else {
    out << "# order\tgroups\tmax_N\tN_positive\n";
    for (const auto& [order, c] : census)
      out << "# " << order << "\t" << c.groups << "\t" << c.max_n << "\t" << c.positive << "\n";
    out << "# first order with N > 0: " << (first_positive ? std::to_string(*first_positive) : "none")
        << "\n";
  }
  return code;
}

int cmd_classdata(const RunConfig& cfg, std::ostream& out) {
  bool any_positive = false;
  bool header = true;
  for (const auto& path : cfg.paths) {
    auto t = stage("class data", [&] { return read_class_table_file(path); });
    auto r = stage("rank of " + t.label, [&] { return rank_report_from_table(t); });
    emit_report(out, cfg, r, header);
    header = false;
    any_positive = any_positive || r.N > 0;
  }
  return any_positive ? 3 : 0;
}

int cmd_aut(const RunConfig& cfg, std::ostream& out) {
  auto s = load_subject(cfg);
  AutSearchStats stats;
  auto a = obtain_aut(s, cfg, &stats);
  std::uint64_t order = a.known_order ? *a.known_order
                                      : stage("action order", [&] { return action_order(a); });
  std::uint64_t center = 0;
  const auto& g = s.group;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (auto y : g.generators()) central = central && g.mul(x, y) == g.mul(y, x);
    center += central;
  }
  std::uint64_t inn = g.order() / center;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["label"] = g.label();
    j["order"] = g.order();
    j["aut_order"] = order;
    j["inn_order"] = inn;
    j["out_order"] = order / inn;
    j["generators"] = a.generators.size();
    j["action_provenance"] = a.provenance;
    j["search_nodes"] = stats.nodes;
    out << j.dump() << "\n";
  } else {
    out << "label\torder\taut_order\tinn_order\tout_order\tgenerators\taction_provenance\tsearch_nodes\n";
    out << g.label() << "\t" << g.order() << "\t" << order << "\t" << inn << "\t" << order / inn << "\t"
        << a.generators.size() << "\t" << a.provenance << "\t" << stats.nodes << "\n";
  }
  if (!cfg.write_path.empty()) {
    std::ofstream f(cfg.write_path);
    if (!f) throw GroupError(Errc::io_error, "cannot write " + cfg.write_path);
    write_aut(f, g, a.generators);
  }
  return 0;
}

int cmd_classes(const RunConfig& cfg, std::ostream& out) {
  auto s = load_subject(cfg);
  auto a = obtain_aut(s, cfg);
  auto classes = conjugacy_classes(s.group);
  auto t = class_table_from_group(s.group, classes, &a);
  write_class_table(out, t);
  return 0;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& name, auto fn) {
    bool ok = false;
    std::string detail;
    try {
      ok = fn(detail);
    } catch (const GroupError& e) {
      detail = e.what();
    }
    out << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    failures += !ok;
  };
  RunConfig c = cfg;
  c.aut = "auto";
  check("cpm:11,5,3 has N = 1", [&](std::string& d) {
    auto r = compute_report(load_family("cpm:11,5,3", c), c);
    d = "N = " + std::to_string(r.N);
    return r.N == 1 && r.bass_rank == 1;
  });
  check("alt:5 has N = 0", [&](std::string& d) {
    auto r = compute_report(load_family("alt:5", c), c);
    d = "N = " + std::to_string(r.N);
    return r.N == 0;
  });
  check("psl:2,11 has N > 0", [&](std::string& d) {
    auto r = compute_report(load_family("psl:2,11", c), c);
    d = "N = " + std::to_string(r.N);
    return r.N > 0;
  });
  check("L2(7) table matches the explicit group", [&](std::string&) {
    auto s = load_family("psl:2,7", c);
    auto t = read_class_table_file(fs::path(WHRANK_DATA_DIR) / "classdata" / "L2_7.ctbl");
    cross_validate(s.group, obtain_aut(s, c), t);
    return true;
  });
  return failures == 0 ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank of Wh(G) and of its Aut(G)-coinvariants for finite groups", "whrank"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cap", cfg.cap, "enumeration cap")->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.budget, "automorphism search node budget")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_aut = [&](CLI::App* sub) {
    sub->add_option("--aut", cfg.aut, "search | explicit | file:<path> | inn-only (default: auto)")
        ->check([](const std::string& v) -> std::string {
          if (v == "search" || v == "explicit" || v == "inn-only" || v == "auto" || v.rfind("file:", 0) == 0)
            return {};
          return "expected search, explicit, file:<path> or inn-only";
        });
  };
  auto add_input = [&](CLI::App* sub) {
    auto* g = sub->add_option("--group", cfg.group_file, "group file");
    auto* f = sub->add_option("--family", cfg.families, "family spec, e.g. cpm:11,5,3");
    g->excludes(f);
    f->excludes(g);
  };

  auto* rank = app.add_subcommand("rank", "N and bass rank of one group");
  add_input(rank);
  add_aut(rank);
  add_common(rank);

  auto* family = app.add_subcommand("family", "rank over family members, with formula predictions");
  family->add_option("--family", cfg.families, "family spec (repeatable)");
  family->add_option("--sweep", cfg.sweeps, "cpm:<a>..<b>: least prime p = 1 mod m for each m");
  add_aut(family);
  add_common(family);

  auto* survey = app.add_subcommand("survey", "rank of every group file in a directory");
  survey->add_option("dir", cfg.paths, "directories of group files")->required();
  add_aut(survey);
  add_common(survey);

  auto* classdata = app.add_subcommand("classdata", "N and bass rank from class-data files");
  classdata->add_option("table", cfg.paths, "class-data files")->required();
  add_common(classdata);

  auto* aut = app.add_subcommand("aut", "automorphism group order and generators");
  add_input(aut);
  add_aut(aut);
  add_common(aut);
  aut->add_option("--write", cfg.write_path, "write generators in automorphism-file format");

  auto* classes = app.add_subcommand("classes", "class table of an explicit group");
  add_input(classes);
  add_aut(classes);
  add_common(classes);

  auto* selftest = app.add_subcommand("selftest", "quick consistency checks");
  add_common(selftest);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }
  for (auto* sub : {rank, aut, classes}) {
    if (sub->parsed() && cfg.group_file.empty() && cfg.families.size() != 1) {
      err << "usage error: " << sub->get_name() << " needs exactly one of --group or --family\n";
      return 1;
    }
  }
  if (family->parsed() && cfg.families.empty() && cfg.sweeps.empty()) {
    err << "usage error: family needs --family or --sweep\n";
    return 1;
  }

  try {
    if (rank->parsed()) return cmd_rank(cfg, out);
    if (family->parsed()) return cmd_family(cfg, out, err);
    if (survey->parsed()) return cmd_survey(cfg, out, err);
    if (classdata->parsed()) return cmd_classdata(cfg, out);
    if (aut->parsed()) return cmd_aut(cfg, out);
    if (classes->parsed()) return cmd_classes(cfg, out);
    if (selftest->parsed()) return cmd_selftest(cfg, out);
  } catch (const GroupError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace whrank
