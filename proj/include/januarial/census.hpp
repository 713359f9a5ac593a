#pragma once

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "gf.hpp"
#include "hecke.hpp"
#include "report_json.hpp"
#include "topology.hpp"

namespace januarial {

/// One januarial constructed from the Hecke group on PL(F_p).
struct CensusRow {
  HeckeParams params;
  JanuarialReport report;
  std::string x;
  std::string y;

  ReportRecord record() const { return {report, params.theta, x, y}; }
};

struct HeckeRunOptions {
  /// Parameter solutions kept per theta; 0 keeps all.
  std::size_t max_solutions = 0;
};

/// Builds, classifies and verifies every januarial the construction yields
/// for (p, k), theta ascending and parameters in solver order. Sets the
/// conservation check on each row and throws if it fails.
inline std::vector<CensusRow> hecke_rows(std::int64_t p, std::int64_t k, HeckeRunOptions options = {}) {
  if (p < 3 || !is_prime(p))
    throw DomainError("hecke: " + std::to_string(p) + " is not an odd prime");
  if (k < 2)
    throw DomainError("hecke: k must be at least 2");
  const std::int64_t ell = (p + 1) / 2;
  if (ell < 2)
    throw DomainError("hecke: l = (p+1)/2 must be at least 2");
  auto thetas = primitive_roots(ell, p);
  if (thetas.empty())
    throw DomainError("hecke: f_" + std::to_string(ell) + " has no primitive roots mod " + std::to_string(p));

  std::vector<CensusRow> rows;
  for (std::int64_t theta : thetas) {
    std::vector<HeckeParams> solutions;
    try {
      solutions = solve_params(p, k, theta, {options.max_solutions});
    } catch (const SearchExhausted&) {
      continue;
    }
    for (const auto& params : solutions) {
      auto built = build_action(params);
      auto report = classify(built.action, {p});
      rows.push_back({params, report, built.action.x().to_string(), built.action.y().to_string()});
    }
  }
  if (rows.empty())
    throw SearchExhausted("hecke: no parameter solutions for p = " + std::to_string(p) + ", k = " + std::to_string(k));

  std::vector<JanuarialReport> reports;
  for (const auto& row : rows)
    reports.push_back(row.report);
  bool conserved = conservation_check(reports);
  for (auto& row : rows)
    row.report.checks.conservation = conserved;
  if (!conserved)
    throw IdentityViolation(describe_failure(rows.front().report) + " (conservation across the (p, k) group)");
  return rows;
}

struct CensusGroup {
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::size_t rows = 0;
  int g_pk = 0;
  bool conserved = false;
};

struct Census {
  std::vector<CensusRow> rows;
  std::vector<CensusGroup> groups;
};

/// Sweeps odd primes p <= p_max and 3 <= k <= k_max. Cells without primitive
/// roots or parameter solutions are skipped.
inline Census run_census(std::int64_t p_max, std::int64_t k_max, HeckeRunOptions options = {}) {
  Census census;
  for (std::int64_t p = 3; p <= p_max; ++p) {
    if (!is_prime(p))
      continue;
    for (std::int64_t k = 3; k <= k_max; ++k) {
      std::vector<CensusRow> rows;
      try {
        rows = hecke_rows(p, k, options);
      } catch (const SearchExhausted&) {
        continue;
      } catch (const DomainError&) {
        continue;
      }
      CensusGroup group{p, k, rows.size(), rows.front().report.genus, true};
      for (const auto& row : rows)
        group.conserved = group.conserved && row.report.checks.conservation.value_or(false);
      census.groups.push_back(group);
      for (auto& row : rows)
        census.rows.push_back(std::move(row));
    }
  }
  return census;
}

inline Json census_json(const Census& census) {
  Json rows = Json::array();
  for (const auto& row : census.rows)
    rows.push_back(to_json(row.record()));
  Json groups = Json::array();
  for (const auto& g : census.groups) {
    Json j;
    j["p"] = g.p;
    j["k"] = g.k;
    j["rows"] = g.rows;
    j["g_pk"] = g.g_pk;
    j["conserved"] = g.conserved;
    groups.push_back(j);
  }
  Json out;
  out["rows"] = rows;
  out["conservation"] = groups;
  return out;
}

inline std::string census_table(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(5) << "p" << std::setw(5) << "k" << std::setw(5) << "l" << std::setw(7) << "theta"
     << std::setw(9) << "type" << std::setw(9) << "h" << std::setw(4) << "g1" << std::setw(4) << "g2" << std::setw(7)
     << "alpha" << std::setw(7) << "genus"
     << "checks\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    std::string h = r.type == JanuarialType::simple ? std::to_string(r.h1)
                                                    : "(" + std::to_string(r.h1) + "," + std::to_string(r.h2) + ")";
    os << std::left << std::setw(5) << row.params.p << std::setw(5) << r.k << std::setw(5) << r.l << std::setw(7)
       << row.params.theta << std::setw(9) << to_string(r.type) << std::setw(9) << h << std::setw(4) << r.g1
       << std::setw(4) << r.g2 << std::setw(7) << r.alpha << std::setw(7) << r.genus
       << (r.checks.all() ? "ok" : "FAIL") << "\n";
  }
  return os.str();
}

} // namespace januarial
