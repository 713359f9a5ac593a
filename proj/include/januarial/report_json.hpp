#pragma once

// JSON form of a januarial report. Key order is fixed so that emitted
// documents are byte-stable:
//
//   {p?, k, l, theta?, type, h | [h1, h2], g1, g2, alpha, genus, eta_x, eta_y,
//    V1, E1, V2, E2, checks: {edge_face, simple_genus?, disc_sum, conservation?, even_valency, three_simple?,
//    closed_form?}, x?, y?}

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "action.hpp"
#include "error.hpp"
#include "perm.hpp"
#include "topology.hpp"

namespace januarial {

using Json = nlohmann::ordered_json;

/// A report plus the optional context needed to re-derive it.
struct ReportRecord {
  JanuarialReport report;
  std::optional<std::int64_t> theta;
  std::optional<std::string> x;
  std::optional<std::string> y;
};

inline Json to_json(const ReportRecord& rec) {
  const auto& r = rec.report;
  Json j;
  if (r.p)
    j["p"] = *r.p;
  j["k"] = r.k;
  j["l"] = r.l;
  if (rec.theta)
    j["theta"] = *rec.theta;
  j["type"] = to_string(r.type);
  if (r.type == JanuarialType::simple)
    j["h"] = r.h1;
  else
    j["h"] = Json::array({r.h1, r.h2});
  j["g1"] = r.g1;
  j["g2"] = r.g2;
  j["alpha"] = r.alpha;
  j["genus"] = r.genus;
  j["eta_x"] = r.eta_x;
  j["eta_y"] = r.eta_y;
  j["V1"] = r.v1;
  j["E1"] = r.e1;
  j["V2"] = r.v2;
  j["E2"] = r.e2;
  Json checks;
  checks["edge_face"] = r.checks.edge_face;
  if (r.checks.simple_genus)
    checks["simple_genus"] = *r.checks.simple_genus;
  checks["disc_sum"] = r.checks.disc_sum;
  if (r.checks.conservation)
    checks["conservation"] = *r.checks.conservation;
  checks["even_valency"] = r.checks.even_valency;
  if (r.checks.three_simple)
    checks["three_simple"] = *r.checks.three_simple;
  if (r.checks.closed_form)
    checks["closed_form"] = *r.checks.closed_form;
  j["checks"] = checks;
  if (rec.x)
    j["x"] = *rec.x;
  if (rec.y)
    j["y"] = *rec.y;
  return j;
}

inline Json to_json(const JanuarialReport& r) { return to_json(ReportRecord{r, {}, {}, {}}); }

namespace detail {

template <typename T>
T required(const Json& j, const char* key) {
  if (!j.contains(key))
    throw ParseError(std::string("report: missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("report: key \"") + key + "\" has the wrong type");
  }
}

template <typename T>
std::optional<T> optional_key(const Json& j, const char* key) {
  if (!j.contains(key))
    return std::nullopt;
  return required<T>(j, key);
}

} // namespace detail

inline ReportRecord record_from_json(const Json& j) {
  if (!j.is_object())
    throw ParseError("report: expected a JSON object");
  ReportRecord rec;
  auto& r = rec.report;
  r.p = detail::optional_key<std::int64_t>(j, "p");
  r.k = detail::required<std::int64_t>(j, "k");
  r.l = detail::required<std::int64_t>(j, "l");
  rec.theta = detail::optional_key<std::int64_t>(j, "theta");
  auto type = detail::required<std::string>(j, "type");
  if (type == "simple") {
    r.type = JanuarialType::simple;
    r.h1 = r.h2 = detail::required<int>(j, "h");
  } else if (type == "general") {
    r.type = JanuarialType::general;
    auto h = detail::required<std::vector<int>>(j, "h");
    if (h.size() != 2)
      throw ParseError("report: general type needs h = [h1, h2]");
    r.h1 = h[0];
    r.h2 = h[1];
  } else {
    throw ParseError("report: unknown type \"" + type + "\"");
  }
  r.g1 = detail::required<int>(j, "g1");
  r.g2 = detail::required<int>(j, "g2");
  r.alpha = detail::required<int>(j, "alpha");
  r.genus = detail::required<int>(j, "genus");
  r.eta_x = detail::required<int>(j, "eta_x");
  r.eta_y = detail::required<int>(j, "eta_y");
  r.v1 = detail::optional_key<int>(j, "V1").value_or(0);
  r.e1 = detail::optional_key<int>(j, "E1").value_or(0);
  r.v2 = detail::optional_key<int>(j, "V2").value_or(0);
  r.e2 = detail::optional_key<int>(j, "E2").value_or(0);
  if (!j.contains("checks") || !j["checks"].is_object())
    throw ParseError("report: missing \"checks\" object");
  const Json& c = j["checks"];
  r.checks.edge_face = detail::required<bool>(c, "edge_face");
  r.checks.simple_genus = detail::optional_key<bool>(c, "simple_genus");
  r.checks.disc_sum = detail::required<bool>(c, "disc_sum");
  r.checks.conservation = detail::optional_key<bool>(c, "conservation");
  r.checks.even_valency = detail::required<bool>(c, "even_valency");
  r.checks.three_simple = detail::optional_key<bool>(c, "three_simple");
  r.checks.closed_form = detail::optional_key<bool>(c, "closed_form");
  rec.x = detail::optional_key<std::string>(j, "x");
  rec.y = detail::optional_key<std::string>(j, "y");
  return rec;
}

/// Re-checks a stored report: the genus identities on its own numbers, and,
/// when the permutations are attached, a full recomputation compared field by
/// field. Returns the list of problems (empty when the report holds up).
inline std::vector<std::string> verify_record(const ReportRecord& rec) {
  std::vector<std::string> problems;
  const auto& r = rec.report;
  if (!r.checks.all())
    problems.push_back("report carries a failed check");
  int hsum = r.h1 + r.h2 + r.alpha;
  if (hsum % 2 != 0 || r.g1 + r.g2 + hsum / 2 - 1 != r.genus)
    problems.push_back("genus != g1 + g2 + (h1 + h2 + alpha)/2 - 1");
  if (r.type == JanuarialType::simple && r.g1 + r.g2 + r.h1 - 1 != r.genus)
    problems.push_back("simple type: genus != g1 + g2 + h - 1");
  if (r.p && !(hecke_genus_formula(*r.p, r.k, r.eta_x, r.eta_y) == Rational::make(r.genus, 1)))
    problems.push_back("genus disagrees with the closed form for (p, k, eta_x, eta_y)");

  if (rec.x && rec.y) {
    std::vector<Cycle> cx, cy;
    try {
      cx = parse_cycles(*rec.x);
      cy = parse_cycles(*rec.y);
    } catch (const ParseError& err) {
      problems.push_back(err.what());
      return problems;
    }
    PointSetPtr domain;
    if (r.p) {
      domain = PointSet::projective_line(*r.p);
    } else {
      domain = infer_domain(cx, cy);
    }
    try {
      auto action = TriangleAction::certify(Perm::from_cycles(domain, cx), Perm::from_cycles(domain, cy),
                                            static_cast<std::uint64_t>(r.k), static_cast<std::uint64_t>(r.l));
      auto fresh = classify(action, {r.p});
      fresh.checks.conservation = r.checks.conservation;
      ReportRecord again{fresh, rec.theta, rec.x, rec.y};
      if (to_json(again) != to_json(rec))
        problems.push_back("recomputed report differs from the stored one");
    } catch (const Error& err) {
      problems.push_back(std::string("recomputation failed: ") + err.what());
    }
  }
  return problems;
}

} // namespace januarial
