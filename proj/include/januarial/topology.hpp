#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "error.hpp"

namespace januarial {

/// One pass of a disc boundary along a companion edge, leaving from the
/// point `tail` (an endpoint of the x-edge) towards tail^x.
struct EdgeTraversal {
  int edge;
  int tail;
  int from_vertex;
  int to_vertex;
};

/// The companion diagram: every y-cycle (fixed points included) collapsed to
/// a vertex, every x-edge kept as an edge. The two xy-faces become the discs
/// whose boundaries are recorded as edge traversals.
class CompanionComplex {
public:
  static CompanionComplex build(const EmbeddedDiagram& diagram) { return CompanionComplex(diagram); }

  const EmbeddedDiagram& diagram() const { return diagram_; }

  int vertex_count() const { return static_cast<int>(vertex_points_.size()); }
  int edge_count() const { return static_cast<int>(edge_ends_.size()); }

  /// Points of the y-cycle collapsed to vertex v, in y order.
  const std::vector<int>& vertex_points(int v) const { return vertex_points_[static_cast<std::size_t>(v)]; }
  int vertex_of_point(int z) const { return vertex_of_point_[static_cast<std::size_t>(z)]; }

  /// Endpoints {z, z^x} of edge i, smaller point index first.
  std::pair<int, int> edge_ends(int i) const { return edge_ends_[static_cast<std::size_t>(i)]; }
  /// Edge whose end sits at point z, or -1 when x fixes z.
  int edge_of_point(int z) const { return edge_of_point_[static_cast<std::size_t>(z)]; }
  bool is_loop(int i) const {
    auto [a, b] = edge_ends(i);
    return vertex_of_point(a) == vertex_of_point(b);
  }

  /// Edge ends around vertex v in rotation order: the points of the y-cycle
  /// moved by x, in y order.
  std::vector<int> rotation(int v) const {
    std::vector<int> out;
    for (int z : vertex_points(v))
      if (edge_of_point(z) >= 0)
        out.push_back(z);
    return out;
  }

  /// The xy-orbit bounding disc i (0 or 1); disc 0 holds the least label.
  const std::vector<int>& disc_orbit(int i) const { return disc_orbits_[static_cast<std::size_t>(i)]; }
  const std::vector<EdgeTraversal>& disc_boundary(int i) const { return disc_boundary_[static_cast<std::size_t>(i)]; }
  /// Disc (0 or 1) that traverses the x-edge end leaving point z.
  int disc_of_tail(int z) const { return disc_of_point_[static_cast<std::size_t>(z)]; }

  /// Vertices and edges of the companion subgraph visited by disc i.
  const std::set<int>& visited_vertices(int i) const { return visited_vertices_[static_cast<std::size_t>(i)]; }
  const std::set<int>& visited_edges(int i) const { return visited_edges_[static_cast<std::size_t>(i)]; }

private:
  explicit CompanionComplex(const EmbeddedDiagram& diagram) : diagram_(diagram) {
    const auto& action = diagram.action();
    if (!check_januarial(action).is_januarial)
      throw DomainError("companion: the action is not a januarial");
    const Perm& x = action.x();
    const int n = action.size();

    vertex_of_point_.assign(static_cast<std::size_t>(n), -1);
    for (auto& cycle : action.y().orbit_indices()) {
      for (int z : cycle)
        vertex_of_point_[static_cast<std::size_t>(z)] = static_cast<int>(vertex_points_.size());
      vertex_points_.push_back(std::move(cycle));
    }

    edge_of_point_.assign(static_cast<std::size_t>(n), -1);
    for (auto [a, b] : diagram.x_edges()) {
      int id = static_cast<int>(edge_ends_.size());
      edge_ends_.emplace_back(a, b);
      edge_of_point_[static_cast<std::size_t>(a)] = id;
      edge_of_point_[static_cast<std::size_t>(b)] = id;
    }

    disc_of_point_.assign(static_cast<std::size_t>(n), -1);
    auto orbits = action.xy().orbit_indices();
    std::vector<int> passes(edge_ends_.size(), 0);
    for (int i = 0; i < 2; ++i) {
      disc_orbits_[static_cast<std::size_t>(i)] = orbits[static_cast<std::size_t>(i)];
      auto& boundary = disc_boundary_[static_cast<std::size_t>(i)];
      auto& vv = visited_vertices_[static_cast<std::size_t>(i)];
      auto& ve = visited_edges_[static_cast<std::size_t>(i)];
      for (int w : orbits[static_cast<std::size_t>(i)]) {
        disc_of_point_[static_cast<std::size_t>(w)] = i;
        vv.insert(vertex_of_point(w));
        vv.insert(vertex_of_point(x[w]));
        if (x[w] == w)
          continue;
        int edge = edge_of_point(w);
        boundary.push_back({edge, w, vertex_of_point(w), vertex_of_point(x[w])});
        ve.insert(edge);
        ++passes[static_cast<std::size_t>(edge)];
      }
    }
    for (int count : passes)
      if (count != 2)
        throw IdentityViolation("companion: an edge is not traversed exactly twice by the disc boundaries");
    if (disc_boundary_[0].size() + disc_boundary_[1].size() != 2 * edge_ends_.size())
      throw IdentityViolation("companion: boundary lengths do not sum to twice the edge count");
  }

  EmbeddedDiagram diagram_;
  std::vector<std::vector<int>> vertex_points_;
  std::vector<int> vertex_of_point_;
  std::vector<std::pair<int, int>> edge_ends_;
  std::vector<int> edge_of_point_;
  std::vector<int> disc_of_point_;
  std::array<std::vector<int>, 2> disc_orbits_;
  std::array<std::vector<EdgeTraversal>, 2> disc_boundary_;
  std::array<std::set<int>, 2> visited_vertices_;
  std::array<std::set<int>, 2> visited_edges_;
};

inline CompanionComplex companion(const EmbeddedDiagram& diagram) { return CompanionComplex::build(diagram); }

/// The intersection of the two collapsed discs.
struct CommonGraph {
  std::vector<int> edges;    // companion edges traversed once by each disc
  std::vector<int> vertices; // endpoints of those edges plus vertices both discs visit
  std::map<int, int> valency;
  std::vector<int> isolated_vertices;

  int v() const { return static_cast<int>(vertices.size()); }
  int e() const { return static_cast<int>(edges.size()); }
  int alpha() const { return v() - e(); }
  bool contains_edge(int edge) const { return std::binary_search(edges.begin(), edges.end(), edge); }
  bool empty() const { return vertices.empty(); }
};

inline CommonGraph common_graph(const CompanionComplex& c) {
  CommonGraph g;
  for (int edge = 0; edge < c.edge_count(); ++edge) {
    auto [a, b] = c.edge_ends(edge);
    if (c.disc_of_tail(a) == c.disc_of_tail(b))
      continue;
    g.edges.push_back(edge);
    ++g.valency[c.vertex_of_point(a)];
    ++g.valency[c.vertex_of_point(b)];
  }
  std::set<int> vertices;
  for (const auto& [v, deg] : g.valency)
    vertices.insert(v);
  for (int v : c.visited_vertices(0))
    if (c.visited_vertices(1).count(v) && !vertices.count(v)) {
      vertices.insert(v);
      g.isolated_vertices.push_back(v);
      g.valency[v] = 0;
    }
  g.vertices.assign(vertices.begin(), vertices.end());
  return g;
}

/// Circuit partitions of the common graph: P1 follows disc 0's directions,
/// P2 disc 1's. Each circuit lists the traversals in order.
struct CircuitPartition {
  std::vector<std::vector<EdgeTraversal>> p1;
  std::vector<std::vector<EdgeTraversal>> p2;

  int h1() const { return static_cast<int>(p2.size()); }
  int h2() const { return static_cast<int>(p1.size()); }
};

namespace detail {

/// Follows disc `disc` along common-graph edges. On arriving at a point u the
/// path leaves along the first other common-graph edge end met scanning the
/// vertex rotation forward (in y order) from u; that end must be one the same
/// disc leaves from.
inline std::vector<std::vector<EdgeTraversal>> trace_circuits(const CompanionComplex& c, const CommonGraph& g,
                                                              int disc) {
  const Perm& x = c.diagram().action().x();
  const Perm& y = c.diagram().action().y();
  std::vector<int> tails;
  for (const auto& t : c.disc_boundary(disc))
    if (g.contains_edge(t.edge))
      tails.push_back(t.tail);
  std::sort(tails.begin(), tails.end());

  std::set<int> used;
  std::vector<std::vector<EdgeTraversal>> circuits;
  for (int start : tails) {
    if (used.count(start))
      continue;
    std::vector<EdgeTraversal> circuit;
    int cur = start;
    while (!used.count(cur)) {
      used.insert(cur);
      circuit.push_back({c.edge_of_point(cur), cur, c.vertex_of_point(cur), c.vertex_of_point(x[cur])});
      int arrival = x[cur];
      int next = -1;
      for (int q = y[arrival]; q != arrival; q = y[q]) {
        int edge = c.edge_of_point(q);
        if (edge >= 0 && g.contains_edge(edge)) {
          next = q;
          break;
        }
      }
      if (next < 0)
        throw IdentityViolation("circuit_partition: dead end at a common-graph vertex");
      if (c.disc_of_tail(next) != disc)
        throw IdentityViolation("circuit_partition: right-most edge is not traversed outward by the same disc");
      cur = next;
    }
    if (cur != start)
      throw IdentityViolation("circuit_partition: path does not close up into a circuit");
    circuits.push_back(std::move(circuit));
  }
  return circuits;
}

} // namespace detail

inline CircuitPartition circuit_partition(const CompanionComplex& c, const CommonGraph& g) {
  CircuitPartition out{detail::trace_circuits(c, g, 0), detail::trace_circuits(c, g, 1)};
  for (const auto* part : {&out.p1, &out.p2}) {
    std::multiset<int> covered;
    for (const auto& circuit : *part)
      for (const auto& t : circuit)
        covered.insert(t.edge);
    if (!std::equal(covered.begin(), covered.end(), g.edges.begin(), g.edges.end()))
      throw IdentityViolation("circuit_partition: circuits do not partition the common graph's edges");
  }
  return out;
}

struct DiscGenera {
  int v1 = 0, e1 = 0, v2 = 0, e2 = 0;
  int g1 = 0, g2 = 0;
};

/// g_i = (E_i - V_i - h_i + 1) / 2 over the subgraph visited by disc i.
inline DiscGenera disc_genera(const CompanionComplex& c, const CircuitPartition& partition) {
  DiscGenera out;
  out.v1 = static_cast<int>(c.visited_vertices(0).size());
  out.e1 = static_cast<int>(c.visited_edges(0).size());
  out.v2 = static_cast<int>(c.visited_vertices(1).size());
  out.e2 = static_cast<int>(c.visited_edges(1).size());
  auto genus = [](int e, int v, int h, int which) {
    int twice = e - v - h + 1;
    if (twice < 0 || twice % 2 != 0)
      throw IdentityViolation("disc_genera: disc " + std::to_string(which) + " has 2g = " + std::to_string(twice));
    return twice / 2;
  };
  out.g1 = genus(out.e1, out.v1, partition.h1(), 1);
  out.g2 = genus(out.e2, out.v2, partition.h2(), 2);
  return out;
}

/// Exact rational number, always normalised with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t n, std::int64_t d) {
    if (d == 0)
      throw DomainError("rational with zero denominator");
    if (d < 0)
      n = -n, d = -d;
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0)
      g = 1;
    return {n / g, d / g};
  }
  bool is_integer() const { return den == 1; }
  friend Rational operator+(Rational a, Rational b) { return make(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rational operator-(Rational a, Rational b) { return make(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend bool operator==(const Rational&, const Rational&) = default;
  std::string to_string() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

/// Genus of a januarial built from the Hecke group on PL(F_p):
///   -(p + 1 - eta_y) / 2k + (p + 1 - 2 eta_y - eta_x) / 4.
inline Rational hecke_genus_formula(std::int64_t p, std::int64_t k, std::int64_t eta_x, std::int64_t eta_y) {
  if (k <= 0)
    throw DomainError("hecke_genus_formula: k must be positive");
  return Rational::make(p + 1 - 2 * eta_y - eta_x, 4) - Rational::make(p + 1 - eta_y, 2 * k);
}

enum class JanuarialType { simple, general };

inline std::string to_string(JanuarialType t) { return t == JanuarialType::simple ? "simple" : "general"; }

/// Named identity checks. Optional entries only apply to some inputs.
struct IdentityChecks {
  bool edge_face = false;
  std::optional<bool> simple_genus; // simple type only
  bool disc_sum = false;
  std::optional<bool> conservation; // set by a conservation check over a (p, k) group
  bool even_valency = false;
  std::optional<bool> three_simple; // k = 3 only
  std::optional<bool> closed_form; // Hecke construction only

  bool all() const {
    return edge_face && simple_genus.value_or(true) && disc_sum && conservation.value_or(true) && even_valency && three_simple.value_or(true) &&
           closed_form.value_or(true);
  }
};

struct JanuarialReport {
  std::optional<std::int64_t> p;
  std::int64_t k = 0;
  std::int64_t l = 0;
  JanuarialType type = JanuarialType::general;
  int h1 = 0, h2 = 0;
  int g1 = 0, g2 = 0;
  int alpha = 0;
  int genus = 0;
  int v1 = 0, e1 = 0, v2 = 0, e2 = 0;
  int eta_x = 0, eta_y = 0;
  IdentityChecks checks;

  /// For simple type h = h1 = h2.
  int h() const { return h1; }

  std::string signature() const {
    std::ostringstream os;
    if (type == JanuarialType::simple)
      os << "(" << h1 << "," << g1 << "," << g2 << ")";
    else
      os << "((" << h1 << "," << g1 << "),(" << h2 << "," << g2 << "))";
    return os.str();
  }
};

/// Everything computed along the way, for callers that want the pieces.
struct Analysis {
  EmbeddedDiagram diagram;
  CompanionComplex companion;
  CommonGraph common;
  CircuitPartition partition;
  DiscGenera genera;
  JanuarialReport report;
};

struct ClassifyOptions {
  /// Prime of a Hecke construction; enables the closed-form genus check.
  std::optional<std::int64_t> p;
};

inline std::string describe_failure(const JanuarialReport& r) {
  std::ostringstream os;
  os << "identity check failed for " << to_string(r.type) << " januarial " << r.signature() << ": k=" << r.k
     << " l=" << r.l << " genus=" << r.genus << " alpha=" << r.alpha << " V1=" << r.v1 << " E1=" << r.e1
     << " V2=" << r.v2 << " E2=" << r.e2 << " eta_x=" << r.eta_x << " eta_y=" << r.eta_y << " checks:"
     << " edge_face=" << r.checks.edge_face << " simple_genus=" << r.checks.simple_genus.value_or(true) << " disc_sum=" << r.checks.disc_sum
     << " even_valency=" << r.checks.even_valency << " three_simple=" << r.checks.three_simple.value_or(true)
     << " closed_form=" << r.checks.closed_form.value_or(true);
  return os.str();
}

/// Runs the whole pipeline on an action and verifies every identity that
/// applies. Throws DomainError for inputs outside scope (not a januarial,
/// disconnected) and IdentityViolation when a check fails.
inline Analysis analyze(const TriangleAction& action, ClassifyOptions options = {}) {
  auto jan = check_januarial(action);
  if (!jan.is_januarial)
    throw DomainError("not a januarial: xy has " + std::to_string(jan.xy_orbit_sizes.size()) + " orbits");
  EmbeddedDiagram diagram = build_diagram(action);
  if (!diagram.connected())
    throw DomainError("disconnected diagram: " + std::to_string(diagram.component_count()) +
                      " components; classification refused");
  CompanionComplex comp = companion(diagram);
  CommonGraph common = common_graph(comp);
  CircuitPartition partition = circuit_partition(comp, common);
  DiscGenera genera = disc_genera(comp, partition);

  JanuarialReport r;
  r.p = options.p;
  r.k = static_cast<std::int64_t>(action.k());
  r.l = static_cast<std::int64_t>(action.l());
  r.h1 = partition.h1();
  r.h2 = partition.h2();
  r.g1 = genera.g1;
  r.g2 = genera.g2;
  r.v1 = genera.v1;
  r.e1 = genera.e1;
  r.v2 = genera.v2;
  r.e2 = genera.e2;
  r.alpha = common.alpha();
  r.genus = diagram.genus();
  r.eta_x = action.eta_x();
  r.eta_y = action.eta_y();

  bool all_two = std::all_of(common.valency.begin(), common.valency.end(), [](const auto& kv) { return kv.second == 2; });
  r.type = all_two && common.isolated_vertices.empty() ? JanuarialType::simple : JanuarialType::general;

  r.checks.edge_face = edge_face_genus(diagram) == r.genus;
  int hsum = r.h1 + r.h2 + r.alpha;
  r.checks.disc_sum = hsum % 2 == 0 && r.g1 + r.g2 + hsum / 2 - 1 == r.genus;
  if (r.type == JanuarialType::simple) {
    int simple = r.g1 + r.g2 + r.h1 - 1;
    r.checks.simple_genus = r.h1 == r.h2 && simple == r.genus && r.checks.disc_sum;
  }
  r.checks.even_valency =
      std::all_of(common.valency.begin(), common.valency.end(), [](const auto& kv) { return kv.second % 2 == 0; });
  if (r.k == 3)
    r.checks.three_simple = r.type == JanuarialType::simple;
  if (options.p)
    r.checks.closed_form = hecke_genus_formula(*options.p, r.k, r.eta_x, r.eta_y) == Rational::make(r.genus, 1);

  if (!r.checks.all())
    throw IdentityViolation(describe_failure(r));
  return {std::move(diagram), std::move(comp), std::move(common), std::move(partition), genera, r};
}

inline JanuarialReport classify(const TriangleAction& action, ClassifyOptions options = {}) {
  return analyze(action, options).report;
}

/// g1 + g2 + h (simple) or g1 + g2 + (h1 + h2 + alpha)/2 (general) equals the
/// common genus plus one across reports from one (p, k) construction.
inline bool conservation_check(const std::vector<JanuarialReport>& reports) {
  if (reports.empty())
    return true;
  const auto& first = reports.front();
  for (const auto& r : reports)
    if (r.p != first.p || r.k != first.k)
      throw DomainError("conservation_check: reports come from different (p, k)");
  const int g_pk = first.genus;
  for (const auto& r : reports) {
    if (r.genus != g_pk)
      return false;
    int lhs2; // twice the left-hand side
    if (r.type == JanuarialType::simple)
      lhs2 = 2 * (r.g1 + r.g2 + r.h1);
    else
      lhs2 = 2 * (r.g1 + r.g2) + r.h1 + r.h2 + r.alpha;
    if (lhs2 != 2 * (g_pk + 1))
      return false;
  }
  return true;
}

} // namespace januarial
