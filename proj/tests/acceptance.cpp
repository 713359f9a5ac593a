// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <januarial/januarial.hpp>

using namespace januarial;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2fs", seconds_since(t0));
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << secs << "] "
            << o.detail << std::endl;
  if (!o.pass)
    ++failures;
}

const char* printed_x = "(0,7)(1,5)(2,6)(3,11)(4,13)(8,14)(9)(10,16)(12,inf)(15)";
const char* printed_y = "(0,9,14,16,1,6,15,inf)(2,13,8,12,11,4,3,7)(5)(10)";

// Census used by criteria 6 to 8; rows kept per theta.
constexpr std::size_t census_cap = 2048;

struct CensusStats {
  std::size_t rows = 0, groups = 0;
  int conservation_violations = 0;
  int structure_violations = 0;
  int genus_violations = 0;
  double seconds = 0;
  std::string first_problem;
};

CensusStats run_full_census() {
  CensusStats s;
  auto t0 = Clock::now();
  auto census = run_census(50, 10, {census_cap});
  s.rows = census.rows.size();
  s.groups = census.groups.size();
  for (const auto& g : census.groups)
    if (!g.conserved)
      ++s.conservation_violations;

  auto note = [&](int& counter, const std::string& what) {
    ++counter;
    if (s.first_problem.empty())
      s.first_problem = what;
  };
  for (const auto& row : census.rows) {
    auto built = build_action(row.params);
    Analysis an = analyze(built.action, {row.params.p});
    const auto& d = an.diagram;
    std::string tag = "p=" + std::to_string(row.params.p) + " k=" + std::to_string(row.params.k) + " x=" + row.x;

    // every directed edge-side in exactly one face
    std::vector<int> cover(d.darts().size(), 0);
    for (const auto& f : d.faces())
      for (int dart : f.darts)
        ++cover[static_cast<std::size_t>(dart)];
    if (!std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }))
      note(s.structure_violations, "face cover " + tag);
    if (static_cast<int>(an.partition.p1.size()) != an.report.h2 ||
        static_cast<int>(an.partition.p2.size()) != an.report.h1)
      note(s.structure_violations, "partition sizes " + tag);
    for (const auto* part : {&an.partition.p1, &an.partition.p2}) {
      std::map<int, int> uses;
      for (const auto& circuit : *part)
        for (const auto& t : circuit)
          ++uses[t.edge];
      bool exact = static_cast<int>(uses.size()) == an.common.e() &&
                   std::all_of(uses.begin(), uses.end(), [&](const auto& kv) { return kv.second == 1 && an.common.contains_edge(kv.first); });
      if (!exact)
        note(s.structure_violations, "circuit cover " + tag);
    }
    for (auto [v, deg] : an.common.valency)
      if (deg % 2)
        note(s.structure_violations, "odd valency " + tag);

    int euler = d.genus();
    int edge_face = edge_face_genus(d);
    auto formula = hecke_genus_formula(row.params.p, row.params.k, built.action.eta_x(), built.action.eta_y());
    if (!(euler == edge_face && formula == Rational::make(euler, 1)))
      note(s.genus_violations, "genus " + tag + " euler=" + std::to_string(euler) + " edge_face=" +
                                   std::to_string(edge_face) + " formula=" + formula.to_string());
  }
  s.seconds = seconds_since(t0);
  return s;
}

} // namespace

int main() {
  criterion(1, "D(17,17,8) reproduced by hecke --p 17 --k 8", [] {
    auto t0 = Clock::now();
    auto rows = hecke_rows(17, 8);
    double secs = seconds_since(t0);
    for (const auto& row : rows) {
      auto built = build_action(row.params);
      const auto& a = built.action;
      if (a.x().to_string(true) != printed_x || a.y().to_string(true) != printed_y)
        continue;
      auto an = analyze(a, {17});
      const auto& r = an.report;
      auto jan = check_januarial(a);
      std::ostringstream os;
      os << "row theta=" << row.params.theta << " eta=(" << r.eta_x << "," << r.eta_y << ") orbits=" << jan.xy_orbit_sizes.size()
         << "x" << jan.xy_orbit_sizes[0] << " euler=" << an.diagram.genus() << " edge_face=" << edge_face_genus(an.diagram)
         << " formula=" << hecke_genus_formula(17, 8, r.eta_x, r.eta_y).to_string() << " " << to_string(r.type) << " "
         << r.signature() << " alpha=" << r.alpha << " disc_sum=" << r.g1 + r.g2 + (r.h1 + r.h2 + r.alpha) / 2 - 1
         << " runtime=" << secs << "s";
      bool ok = r.eta_x == 2 && r.eta_y == 2 && jan.is_januarial && jan.xy_orbit_sizes == std::vector<int>{9, 9} &&
                an.diagram.genus() == 2 && edge_face_genus(an.diagram) == 2 &&
                hecke_genus_formula(17, 8, r.eta_x, r.eta_y) == Rational::make(2, 1) &&
                r.type == JanuarialType::general && r.h1 == 2 && r.h2 == 1 && r.g1 == 1 && r.g2 == 1 && r.alpha == -1 &&
                r.g1 + r.g2 + (r.h1 + r.h2 + r.alpha) / 2 - 1 == 2 && secs < 5.0;
      return Outcome{ok, os.str()};
    }
    return Outcome{false, "no row with the printed cycles among " + std::to_string(rows.size())};
  });

  criterion(2, "f_9 roots mod 17 = {9,15,16} = PGL(2,17) brute force", [] {
    auto t0 = Clock::now();
    auto roots = primitive_roots(9, 17);
    auto oracle = theta_oracle(17, 9);
    double secs = seconds_since(t0);
    auto show = [](const std::set<std::int64_t>& s) {
      std::string out = "{";
      for (auto v : s)
        out += (out.size() > 1 ? "," : "") + std::to_string(v);
      return out + "}";
    };
    bool ok = roots == std::set<std::int64_t>{9, 15, 16} && roots == oracle && secs < 10.0;
    return Outcome{ok, "roots=" + show(roots) + " oracle=" + show(oracle)};
  });

  criterion(3, "even family k in {4,6,8,10,20} is simple (1,0,0) of genus 0", [] {
    std::ostringstream os;
    bool ok = true;
    for (int k : {4, 6, 8, 10, 20}) {
      auto t0 = Clock::now();
      auto r = classify(even_family(k));
      double secs = seconds_since(t0);
      bool good = r.type == JanuarialType::simple && r.signature() == "(1,0,0)" && r.genus == 0 && secs < 1.0;
      ok = ok && good;
      os << "k=" << k << ":" << r.signature() << "/g" << r.genus << (good ? "" : "!") << " ";
    }
    return Outcome{ok, os.str()};
  });

  criterion(4, "odd family k in {3,5,7}: simple, h = 1, 4k points, xy of order 2k", [] {
    std::ostringstream os;
    bool ok = true;
    for (int k : {3, 5, 7}) {
      auto t0 = Clock::now();
      auto a = odd_family(k, {4, std::nullopt, false}); // fresh search, no cache
      double secs = seconds_since(t0);
      auto r = verify_odd_witness(k, a);
      bool good = r.type == JanuarialType::simple && r.h() == 1 && a.size() == 4 * k &&
                  a.xy().order() == static_cast<std::uint64_t>(2 * k) && secs <= 60.0;
      ok = ok && good;
      os << "k=" << k << ":" << a.x().to_string() << (good ? "" : "!") << " ";
    }
    return Outcome{ok, os.str()};
  });

  criterion(5, "500 seeded random 3-januarials all classify simple", [] {
    auto t0 = Clock::now();
    auto r = three_property(500, 42);
    double secs = seconds_since(t0);
    bool ok = r.all_simple && r.januarials == 500 && secs < 60.0;
    return Outcome{ok, "januarials=" + std::to_string(r.januarials) + " attempts=" + std::to_string(r.attempts) +
                           (r.counterexample ? " counterexample " + *r.counterexample : "")};
  });

  CensusStats census;
  std::string census_error;
  try {
    census = run_full_census();
  } catch (const std::exception& e) {
    census_error = e.what();
  }

  criterion(6, "conservation over the census p <= 50, k <= 10", [&] {
    if (!census_error.empty())
      return Outcome{false, census_error};
    bool ok = census.conservation_violations == 0 && census.groups > 0 && census.seconds < 300.0;
    return Outcome{ok, std::to_string(census.groups) + " (p,k) groups, " + std::to_string(census.rows) +
                           " rows (at most " + std::to_string(census_cap) + " per theta), violations=" +
                           std::to_string(census.conservation_violations) + ", census time " +
                           std::to_string(census.seconds) + "s"};
  });

  criterion(7, "structural invariants on every census januarial", [&] {
    if (!census_error.empty())
      return Outcome{false, census_error};
    return Outcome{census.structure_violations == 0 && census.rows > 0,
                   "violations=" + std::to_string(census.structure_violations) +
                       (census.first_problem.empty() ? "" : " first: " + census.first_problem)};
  });

  criterion(8, "Euler genus = edge-face genus = closed form on every census entry", [&] {
    if (!census_error.empty())
      return Outcome{false, census_error};
    return Outcome{census.genus_violations == 0 && census.rows > 0,
                   "violations=" + std::to_string(census.genus_violations) + " over " + std::to_string(census.rows) +
                       " entries"};
  });

  std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : "all criteria pass") << std::endl;
  return failures ? 1 : 0;
}
