#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "action.hpp"
#include "error.hpp"
#include "perm.hpp"

namespace januarial {

/// Exactly two xy-orbits of size |S|/2.
struct JanuarialCheck {
  bool is_januarial = false;
  std::vector<int> xy_orbit_sizes;
};

inline JanuarialCheck check_januarial(const TriangleAction& action) {
  JanuarialCheck out;
  for (const auto& orbit : action.xy().orbit_indices())
    out.xy_orbit_sizes.push_back(static_cast<int>(orbit.size()));
  out.is_januarial = out.xy_orbit_sizes.size() == 2 && 2 * out.xy_orbit_sizes[0] == action.size();
  return out;
}

/// Edge-sides of the coset diagram. Every point z moved by x carries the end
/// of the x-edge {z, z^x}; every point moved by y carries the tail of the
/// y-edge z -> z^y and the head of the y-edge z^(y^-1) -> z.
enum class DartKind : std::uint8_t { x_end, y_out, y_in };

struct Dart {
  int point;
  DartKind kind;
};

enum class FaceKind : std::uint8_t { y_face, xy_face };

struct Face {
  FaceKind kind;
  std::vector<int> darts;
  /// Index of the y-cycle (y-faces) or xy-orbit (xy-faces) the face realises.
  int orbit;
};

/// The coset diagram of a triangle-group action, embedded by the rotation
/// (y_in, x_end, y_out) at every vertex. With this rotation the faces traced
/// by "cross the edge, then turn to the next dart" are precisely the
/// nontrivial y-cycles and the xy-orbits.
class EmbeddedDiagram {
public:
  static EmbeddedDiagram build(const TriangleAction& action) { return EmbeddedDiagram(action); }

  const TriangleAction& action() const { return action_; }

  int vertex_count() const { return action_.size(); }
  int x_edge_count() const { return static_cast<int>(x_edges_.size()); }
  int y_edge_count() const { return static_cast<int>(y_edges_.size()); }
  int edge_count() const { return x_edge_count() + y_edge_count(); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int y_face_count() const { return face_count() - xy_face_count(); }
  int xy_face_count() const { return xy_faces_; }
  int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }

  /// Unordered {z, z^x} with z the smaller index.
  const std::vector<std::pair<int, int>>& x_edges() const { return x_edges_; }
  /// Directed z -> z^y.
  const std::vector<std::pair<int, int>>& y_edges() const { return y_edges_; }

  const std::vector<Dart>& darts() const { return darts_; }
  const std::vector<Face>& faces() const { return faces_; }
  int face_of_dart(int d) const { return face_of_dart_[static_cast<std::size_t>(d)]; }

  /// The other side of the edge carrying dart d.
  int opposite(int d) const { return alpha_[static_cast<std::size_t>(d)]; }
  /// Next dart anticlockwise around the vertex of d.
  int rotate(int d) const { return sigma_[static_cast<std::size_t>(d)]; }

  int component_count() const { return static_cast<int>(component_genus_.size()); }
  bool connected() const { return component_count() == 1; }
  const std::vector<int>& component_genera() const { return component_genus_; }

  /// Genus of the closed orientable surface; requires a connected diagram.
  int genus() const {
    if (!connected())
      throw DomainError("diagram has " + std::to_string(component_count()) +
                        " components; genus is reported per component");
    return component_genus_.front();
  }

  /// Graphviz rendering: x-edges undirected and solid, y-edges directed and
  /// bold. Faces and genus are listed in comments.
  std::string to_dot(const std::string& name = "coset_diagram") const {
    const auto& dom = *action_.domain();
    auto q = [&](int i) { return "\"" + dom[i].to_string() + "\""; };
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    os << "  // vertices " << vertex_count() << ", x-edges " << x_edge_count() << ", y-edges " << y_edge_count()
       << ", faces " << face_count() << "\n";
    if (connected())
      os << "  // genus " << genus() << "\n";
    else
      for (int c = 0; c < component_count(); ++c)
        os << "  // component " << c << " genus " << component_genus_[static_cast<std::size_t>(c)] << "\n";
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      os << "  // face " << f << (faces_[f].kind == FaceKind::y_face ? " y-face:" : " xy-face:");
      for (int d : faces_[f].darts)
        if (darts_[static_cast<std::size_t>(d)].kind != DartKind::y_in)
          os << ' ' << dom[darts_[static_cast<std::size_t>(d)].point];
      os << "\n";
    }
    for (int i = 0; i < vertex_count(); ++i)
      os << "  " << q(i) << ";\n";
    for (auto [a, b] : x_edges_)
      os << "  " << q(a) << " -> " << q(b) << " [dir=none, style=solid, label=\"x\"];\n";
    for (auto [a, b] : y_edges_)
      os << "  " << q(a) << " -> " << q(b) << " [style=bold];\n";
    os << "}\n";
    return os.str();
  }

private:
  explicit EmbeddedDiagram(const TriangleAction& action) : action_(action) {
    const Perm& x = action.x();
    const Perm& y = action.y();
    const int n = action.size();
    std::vector<int> x_end(static_cast<std::size_t>(n), -1), y_out(static_cast<std::size_t>(n), -1),
        y_in(static_cast<std::size_t>(n), -1);
    auto add = [&](int point, DartKind kind) {
      darts_.push_back({point, kind});
      return static_cast<int>(darts_.size()) - 1;
    };
    for (int z = 0; z < n; ++z) {
      if (y[z] != z) {
        y_in[static_cast<std::size_t>(z)] = add(z, DartKind::y_in);
        y_edges_.emplace_back(z, y[z]);
      }
      if (x[z] != z) {
        x_end[static_cast<std::size_t>(z)] = add(z, DartKind::x_end);
        if (z < x[z])
          x_edges_.emplace_back(z, x[z]);
      }
      if (y[z] != z)
        y_out[static_cast<std::size_t>(z)] = add(z, DartKind::y_out);
    }

    alpha_.assign(darts_.size(), -1);
    sigma_.assign(darts_.size(), -1);
    for (int z = 0; z < n; ++z) {
      auto zs = static_cast<std::size_t>(z);
      if (x_end[zs] >= 0)
        alpha_[static_cast<std::size_t>(x_end[zs])] = x_end[static_cast<std::size_t>(x[z])];
      if (y_out[zs] >= 0) {
        int head = y_in[static_cast<std::size_t>(y[z])];
        alpha_[static_cast<std::size_t>(y_out[zs])] = head;
        alpha_[static_cast<std::size_t>(head)] = y_out[zs];
      }
      std::vector<int> around;
      for (int d : {y_in[zs], x_end[zs], y_out[zs]})
        if (d >= 0)
          around.push_back(d);
      for (std::size_t i = 0; i < around.size(); ++i)
        sigma_[static_cast<std::size_t>(around[i])] = around[(i + 1) % around.size()];
    }

    trace_faces(x, y);
    compute_genera(x, y);
  }

  void trace_faces(const Perm& x, const Perm& y) {
    face_of_dart_.assign(darts_.size(), -1);
    auto y_cycles = y.orbit_indices();
    auto xy_orbits = action_.xy().orbit_indices();
    std::vector<int> y_cycle_of(static_cast<std::size_t>(action_.size())),
        xy_orbit_of(static_cast<std::size_t>(action_.size()));
    for (std::size_t c = 0; c < y_cycles.size(); ++c)
      for (int z : y_cycles[c])
        y_cycle_of[static_cast<std::size_t>(z)] = static_cast<int>(c);
    for (std::size_t c = 0; c < xy_orbits.size(); ++c)
      for (int z : xy_orbits[c])
        xy_orbit_of[static_cast<std::size_t>(z)] = static_cast<int>(c);

    // The orbit a dart's face realises: y_in(z) lies on the face of z's
    // y-cycle; x_end(w) on the face of w's xy-orbit; y_out(z) on the face of
    // the xy-orbit of z^x.
    auto orbit_of = [&](const Dart& d) {
      switch (d.kind) {
      case DartKind::y_in:
        return y_cycle_of[static_cast<std::size_t>(d.point)];
      case DartKind::x_end:
        return xy_orbit_of[static_cast<std::size_t>(d.point)];
      case DartKind::y_out:
        return xy_orbit_of[static_cast<std::size_t>(x[d.point])];
      }
      return -1;
    };

    std::set<int> seen_xy, seen_y;
    for (std::size_t start = 0; start < darts_.size(); ++start) {
      if (face_of_dart_[start] >= 0)
        continue;
      Face face{darts_[start].kind == DartKind::y_in ? FaceKind::y_face : FaceKind::xy_face, {},
                orbit_of(darts_[start])};
      int d = static_cast<int>(start);
      while (face_of_dart_[static_cast<std::size_t>(d)] < 0) {
        face_of_dart_[static_cast<std::size_t>(d)] = static_cast<int>(faces_.size());
        face.darts.push_back(d);
        const Dart& dart = darts_[static_cast<std::size_t>(d)];
        bool is_y = dart.kind == DartKind::y_in;
        if (is_y != (face.kind == FaceKind::y_face) || orbit_of(dart) != face.orbit)
          throw IdentityViolation("face tracing mixed darts from different orbits");
        d = sigma_[static_cast<std::size_t>(alpha_[static_cast<std::size_t>(d)])];
      }
      if (d != static_cast<int>(start))
        throw IdentityViolation("face tracing did not close up");
      auto& seen = face.kind == FaceKind::y_face ? seen_y : seen_xy;
      if (!seen.insert(face.orbit).second)
        throw IdentityViolation("two traced faces realise the same orbit");
      if (face.kind == FaceKind::y_face &&
          face.darts.size() != y_cycles[static_cast<std::size_t>(face.orbit)].size())
        throw IdentityViolation("y-face boundary differs from its y-cycle");
      faces_.push_back(std::move(face));
    }
    xy_faces_ = static_cast<int>(seen_xy.size());

    // Every xy-orbit gets a face unless it is an isolated point.
    int expected_xy = 0;
    for (const auto& orbit : xy_orbits)
      if (!(orbit.size() == 1 && x[orbit[0]] == orbit[0] && y[orbit[0]] == orbit[0]))
        ++expected_xy;
    if (xy_faces_ != expected_xy)
      throw IdentityViolation("traced xy-face count differs from the number of xy-orbits");
    std::size_t nontrivial_y = 0;
    for (const auto& c : y_cycles)
      nontrivial_y += c.size() > 1;
    if (seen_y.size() != nontrivial_y)
      throw IdentityViolation("traced y-face count differs from the number of nontrivial y-cycles");

    std::size_t boundary = 0;
    for (const auto& f : faces_)
      boundary += f.darts.size();
    if (boundary != 2 * static_cast<std::size_t>(edge_count()))
      throw IdentityViolation("face boundaries do not cover each edge-side exactly once");
  }

  void compute_genera(const Perm& x, const Perm& y) {
    const int n = action_.size();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v)
        v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      return v;
    };
    for (int z = 0; z < n; ++z) {
      parent[static_cast<std::size_t>(find(z))] = find(x[z]);
      parent[static_cast<std::size_t>(find(z))] = find(y[z]);
    }
    std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
    int comps = 0;
    for (int z = 0; z < n; ++z) {
      int r = find(z);
      if (comp_of[static_cast<std::size_t>(r)] < 0)
        comp_of[static_cast<std::size_t>(r)] = comps++;
    }
    std::vector<long> chi(static_cast<std::size_t>(comps), 0);
    std::vector<int> dart_count(static_cast<std::size_t>(comps), 0);
    auto comp = [&](int z) { return static_cast<std::size_t>(comp_of[static_cast<std::size_t>(find(z))]); };
    for (int z = 0; z < n; ++z)
      chi[comp(z)] += 1;
    for (const auto& d : darts_)
      ++dart_count[comp(d.point)];
    for (std::size_t c = 0; c < chi.size(); ++c)
      chi[c] -= dart_count[c] / 2;
    for (const auto& f : faces_)
      chi[comp(darts_[static_cast<std::size_t>(f.darts.front())].point)] += 1;
    for (std::size_t c = 0; c < chi.size(); ++c) {
      // A lone point carries no darts; it is a sphere with one face.
      long ch = dart_count[c] == 0 ? 2 : chi[c];
      if (ch > 2 || (2 - ch) % 2 != 0)
        throw IdentityViolation("Euler characteristic " + std::to_string(ch) + " gives no valid genus");
      component_genus_.push_back(static_cast<int>((2 - ch) / 2));
    }
  }

  TriangleAction action_;
  std::vector<std::pair<int, int>> x_edges_;
  std::vector<std::pair<int, int>> y_edges_;
  std::vector<Dart> darts_;
  std::vector<int> alpha_;
  std::vector<int> sigma_;
  std::vector<Face> faces_;
  std::vector<int> face_of_dart_;
  int xy_faces_ = 0;
  std::vector<int> component_genus_;
};

inline EmbeddedDiagram build_diagram(const TriangleAction& action) { return EmbeddedDiagram::build(action); }

/// Half of (x-edges that are not loops) minus (y-faces, counting fixed points
/// of y as degenerate faces).
inline int edge_face_genus(const EmbeddedDiagram& diagram) {
  const auto& action = diagram.action();
  if (!check_januarial(action).is_januarial)
    throw DomainError("edge_face_genus: the action is not a januarial");
  if (!diagram.connected())
    throw DomainError("edge_face_genus: the diagram is disconnected");
  int edges = diagram.x_edge_count();
  int y_faces = static_cast<int>(action.y().orbit_indices().size());
  if ((edges - y_faces) % 2 != 0)
    throw IdentityViolation("edge_face_genus: x-edges minus y-faces is odd");
  return (edges - y_faces) / 2;
}

} // namespace januarial
