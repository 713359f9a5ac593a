// januarial: command line front end.
//
// exit status: 0 ok, 1 an identity check failed, 2 bad input

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include <januarial/januarial.hpp>

namespace ja = januarial;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_identity = 1;
constexpr int exit_input = 2;

struct AnalyzeArgs {
  std::string x, y;
  std::optional<std::uint64_t> k, l;
  std::optional<std::int64_t> p;
  std::string dot;
};

int cmd_analyze(const AnalyzeArgs& a) {
  auto cx = ja::parse_cycles(a.x);
  auto cy = ja::parse_cycles(a.y);
  auto domain = a.p ? ja::PointSet::projective_line(*a.p) : ja::infer_domain(cx, cy);
  auto action = ja::TriangleAction::certify(ja::Perm::from_cycles(domain, cx), ja::Perm::from_cycles(domain, cy), a.k, a.l);
  auto analysis = ja::analyze(action, {a.p});
  if (!a.dot.empty()) {
    std::ofstream out(a.dot);
    if (!out)
      throw ja::DomainError("cannot write " + a.dot);
    out << analysis.diagram.to_dot();
  }
  ja::ReportRecord rec{analysis.report, std::nullopt, action.x().to_string(), action.y().to_string()};
  std::cout << ja::to_json(rec).dump(2) << "\n";
  return exit_ok;
}

int cmd_hecke(std::int64_t p, std::int64_t k, std::size_t max_solutions, bool table) {
  auto rows = ja::hecke_rows(p, k, {max_solutions});
  if (table) {
    std::cout << ja::census_table(rows);
  } else {
    // one compact record per line
    for (const auto& row : rows)
      std::cout << ja::to_json(row.record()).dump() << "\n";
  }
  return exit_ok;
}

int cmd_family(int k, const std::string& cache) {
  ja::OddFamilyOptions opts;
  if (!cache.empty())
    opts.cache_dir = cache;
  auto action = ja::family(k, opts);
  auto report = ja::classify(action);
  if (report.type != ja::JanuarialType::simple || report.h() != 1) {
    std::cerr << "family member for k=" << k << " is " << report.signature() << ", expected simple with h = 1\n";
    return exit_identity;
  }
  ja::ReportRecord rec{report, std::nullopt, action.x().to_string(), action.y().to_string()};
  std::cout << ja::to_json(rec).dump(2) << "\n";
  return exit_ok;
}

int cmd_census(std::int64_t p_max, std::int64_t k_max, std::size_t max_solutions, bool json) {
  auto census = ja::run_census(p_max, k_max, {max_solutions});
  bool ok = true;
  for (const auto& g : census.groups)
    ok = ok && g.conserved;
  if (json) {
    std::cout << ja::census_json(census).dump(1) << "\n";
  } else {
    std::cout << ja::census_table(census.rows);
    std::cout << "\nconservation\n";
    for (const auto& g : census.groups)
      std::cout << "p=" << g.p << " k=" << g.k << " rows=" << g.rows << " g_pk=" << g.g_pk << " "
                << (g.conserved ? "ok" : "VIOLATED") << "\n";
  }
  return ok ? exit_ok : exit_identity;
}

// A report file holds one JSON document (object or array of objects) or one
// object per line.
std::vector<ja::Json> read_reports(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ja::ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::vector<ja::Json> docs;
  try {
    auto doc = ja::Json::parse(text);
    if (doc.is_array())
      for (auto& d : doc)
        docs.push_back(d);
    else
      docs.push_back(doc);
    return docs;
  } catch (const nlohmann::json::parse_error&) {
  }
  std::istringstream lines(text);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      docs.push_back(ja::Json::parse(line));
    } catch (const nlohmann::json::parse_error& e) {
      throw ja::ParseError(path + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  if (docs.empty())
    throw ja::ParseError(path + ": no reports");
  return docs;
}

int cmd_verify(const std::string& path) {
  auto docs = read_reports(path);
  int bad = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    auto rec = ja::record_from_json(docs[i]);
    for (const auto& problem : ja::verify_record(rec)) {
      std::cerr << "report " << i << ": " << problem << "\n";
      ++bad;
    }
  }
  std::cout << docs.size() << " report(s), " << (bad ? std::to_string(bad) + " problem(s)" : "all verified") << "\n";
  return bad ? exit_identity : exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"januarials: coset diagrams with exactly two xy-faces"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "classify an action given by x and y in cycle notation");
  analyze->add_option("--x", an.x, "involution x, e.g. \"(0,7)(1,5)\"")->required();
  analyze->add_option("--y", an.y, "permutation y")->required();
  analyze->add_option("--k", an.k, "required exact order of y");
  analyze->add_option("--l", an.l, "required exact order of xy");
  analyze->add_option("--p", an.p, "act on the projective line over F_p and check the closed-form genus");
  analyze->add_option("--dot", an.dot, "write the coset diagram as Graphviz DOT");

  std::int64_t hp = 0, hk = 0;
  std::size_t hmax = 0;
  bool htable = false;
  auto* hecke = app.add_subcommand("hecke", "januarials from the Hecke construction on PL(F_p)");
  hecke->add_option("--p", hp, "odd prime")->required();
  hecke->add_option("--k", hk, "order of y")->required();
  hecke->add_option("--max-solutions", hmax, "parameter solutions kept per theta (0 = all)")->capture_default_str();
  hecke->add_flag("--table", htable, "human-readable table instead of JSON lines");

  int fk = 0;
  std::string fcache;
  auto* family = app.add_subcommand("family", "the infinite family member for k");
  family->add_option("--k", fk, "k >= 3 (>= 4 when even)")->required();
  family->add_option("--cache", fcache, "odd-k witness directory (default $JANUARIAL_CACHE)");

  std::int64_t cp = 0, ck = 0;
  std::size_t cmax = 16;
  bool cjson = false, ctable = false;
  auto* census = app.add_subcommand("census", "sweep primes p <= p-max and 3 <= k <= k-max");
  census->add_option("--p-max", cp)->required();
  census->add_option("--k-max", ck)->required();
  census->add_option("--max-solutions", cmax, "parameter solutions kept per theta (0 = all)")->capture_default_str();
  auto* json_flag = census->add_flag("--json", cjson, "JSON output");
  census->add_flag("--table", ctable, "table output (default)")->excludes(json_flag);

  std::string vpath;
  auto* verify = app.add_subcommand("verify", "re-check a saved report");
  verify->add_option("--report", vpath)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_input;
  }

  try {
    if (*analyze)
      return cmd_analyze(an);
    if (*hecke)
      return cmd_hecke(hp, hk, hmax, htable);
    if (*family)
      return cmd_family(fk, fcache);
    if (*census)
      return cmd_census(cp, ck, cmax, cjson);
    if (*verify)
      return cmd_verify(vpath);
  } catch (const ja::IdentityViolation& e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return exit_identity;
  } catch (const ja::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
