#pragma once

#include <random>
#include <string>

#include <januarial/januarial.hpp>

namespace fixtures {

using namespace januarial;

inline const char* worked_x = "(0,7)(1,5)(2,6)(3,11)(4,13)(8,14)(10,16)(12,inf)";
inline const char* worked_y = "(0,9,14,16,1,6,15,inf)(2,13,8,12,11,4,3,7)";

inline TriangleAction worked_example() {
  auto line = PointSet::projective_line(17);
  return TriangleAction::certify(Perm::parse(line, worked_x), Perm::parse(line, worked_y), 8, 9);
}

inline TriangleAction action_on(int n, const std::string& x, const std::string& y) {
  auto dom = PointSet::range(1, n);
  return TriangleAction::certify(Perm::parse(dom, x), Perm::parse(dom, y));
}

/// The same action with its points renamed by a random bijection onto 1..n.
inline TriangleAction relabel(const TriangleAction& a, std::mt19937_64& rng) {
  const int n = a.size();
  auto dom = PointSet::range(1, n);
  std::vector<int> name(static_cast<std::size_t>(n));
  std::iota(name.begin(), name.end(), 0);
  std::shuffle(name.begin(), name.end(), rng);
  auto move = [&](const Perm& p) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      img[static_cast<std::size_t>(name[static_cast<std::size_t>(i)])] = name[static_cast<std::size_t>(p[i])];
    return Perm::from_images(dom, img);
  };
  return TriangleAction::certify(move(a.x()), move(a.y()));
}

/// Random action with y a product of k-cycles plus a few fixed points and x a
/// random involution.
inline TriangleAction random_action(std::mt19937_64& rng, int k, int max_points) {
  int polygons = std::uniform_int_distribution<int>(1, std::max(1, (max_points - 2) / k))(rng);
  int fixed = std::uniform_int_distribution<int>(0, 2)(rng);
  int n = polygons * k + fixed;
  auto dom = PointSet::range(1, n);
  Perm y = polygon_rotation(dom, k, polygons);
  std::vector<int> pts(static_cast<std::size_t>(n));
  std::iota(pts.begin(), pts.end(), 1);
  std::shuffle(pts.begin(), pts.end(), rng);
  int t = std::uniform_int_distribution<int>(0, n / 2)(rng);
  std::vector<Cycle> xc;
  for (int i = 0; i < t; ++i)
    xc.push_back({Point(pts[static_cast<std::size_t>(2 * i)]), Point(pts[static_cast<std::size_t>(2 * i + 1)])});
  return TriangleAction::certify(Perm::from_cycles(dom, xc), y);
}

/// Random connected januarials, drawn until `count` are found.
inline std::vector<TriangleAction> random_januarials(std::uint64_t seed, int count, int k, int max_points) {
  std::mt19937_64 rng(seed);
  std::vector<TriangleAction> out;
  for (int tries = 0; static_cast<int>(out.size()) < count && tries < count * 5000; ++tries) {
    auto a = random_action(rng, k, max_points);
    if (check_januarial(a).is_januarial && build_diagram(a).connected())
      out.push_back(a);
  }
  return out;
}

} // namespace fixtures
