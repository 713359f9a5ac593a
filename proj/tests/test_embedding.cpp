#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace januarial;
using fixtures::worked_example;

TEST(Januarial, WorkedExampleHasTwoOrbitsOfNine) {
  auto jan = check_januarial(worked_example());
  EXPECT_TRUE(jan.is_januarial);
  EXPECT_EQ(jan.xy_orbit_sizes, (std::vector<int>{9, 9}));
}

TEST(Januarial, Rejections) {
  // identity x: one xy-orbit per y-cycle
  auto a = fixtures::action_on(6, "", "(1,2,3)(4,5,6)");
  EXPECT_TRUE(check_januarial(a).is_januarial); // two orbits of size 3, but disconnected
  EXPECT_FALSE(build_diagram(a).connected());
  EXPECT_THROW(classify(a), DomainError);

  auto b = fixtures::action_on(9, "", "(1,2,3)(4,5,6)(7,8,9)");
  EXPECT_FALSE(check_januarial(b).is_januarial);
  EXPECT_THROW(classify(b), DomainError);

  // two orbits of different sizes
  auto c = fixtures::action_on(5, "(3,4)", "(1,2,3)(4,5)");
  auto jc = check_januarial(c);
  EXPECT_FALSE(jc.is_januarial);
}

TEST(Embedding, WorkedExampleCounts) {
  auto d = build_diagram(worked_example());
  EXPECT_EQ(d.vertex_count(), 18);
  EXPECT_EQ(d.x_edge_count(), 8);
  EXPECT_EQ(d.y_edge_count(), 16);
  EXPECT_EQ(d.y_face_count(), 2);
  EXPECT_EQ(d.xy_face_count(), 2);
  EXPECT_EQ(d.euler_characteristic(), -2);
  EXPECT_TRUE(d.connected());
  EXPECT_EQ(d.genus(), 2);
  EXPECT_EQ(edge_face_genus(d), 2);
}

TEST(Embedding, FacesCoverEveryDartOnce) {
  auto d = build_diagram(worked_example());
  std::vector<int> seen(d.darts().size(), 0);
  for (const auto& f : d.faces())
    for (int dart : f.darts)
      ++seen[static_cast<std::size_t>(dart)];
  for (int s : seen)
    EXPECT_EQ(s, 1);
  EXPECT_EQ(static_cast<int>(d.darts().size()), 2 * d.edge_count());
}

TEST(Embedding, RotationAndOppositeArePermutations) {
  auto d = build_diagram(worked_example());
  const int n = static_cast<int>(d.darts().size());
  std::vector<int> a(static_cast<std::size_t>(n), 0), s(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    EXPECT_NE(d.opposite(i), i);
    EXPECT_EQ(d.opposite(d.opposite(i)), i);
    ++a[static_cast<std::size_t>(d.opposite(i))];
    ++s[static_cast<std::size_t>(d.rotate(i))];
    EXPECT_EQ(d.darts()[static_cast<std::size_t>(d.rotate(i))].point, d.darts()[static_cast<std::size_t>(i)].point);
  }
  EXPECT_TRUE(std::all_of(a.begin(), a.end(), [](int c) { return c == 1; }));
  EXPECT_TRUE(std::all_of(s.begin(), s.end(), [](int c) { return c == 1; }));
}

TEST(Embedding, EvenFamilyIsSpherical) {
  auto a = even_family(4);
  auto orbits = a.xy().orbits();
  ASSERT_EQ(orbits.size(), 2u);
  std::set<Point> o0(orbits[0].begin(), orbits[0].end()), o1(orbits[1].begin(), orbits[1].end());
  EXPECT_EQ(o0, (std::set<Point>{1, 4, 5, 8}));
  EXPECT_EQ(o1, (std::set<Point>{2, 3, 6, 7}));
  auto d = build_diagram(a);
  EXPECT_EQ(d.genus(), 0);
  EXPECT_EQ(edge_face_genus(d), 0);
}

TEST(Embedding, DisconnectedDiagramReportsPerComponent) {
  auto a = fixtures::action_on(6, "", "(1,2,3)(4,5,6)");
  auto d = build_diagram(a);
  EXPECT_EQ(d.component_count(), 2);
  EXPECT_EQ(d.component_genera(), (std::vector<int>{0, 0}));
  EXPECT_THROW(d.genus(), DomainError);
  EXPECT_THROW(edge_face_genus(d), DomainError);
}

TEST(Embedding, DotExport) {
  auto dot = build_diagram(worked_example()).to_dot();
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("// genus 2"), std::string::npos);
  EXPECT_NE(dot.find("\"12\" -> \"inf\" [dir=none"), std::string::npos);
  EXPECT_NE(dot.find("\"15\" -> \"inf\" [style=bold]"), std::string::npos);
}

TEST(EmbeddingProperty, GenusIsInvariantUnderRelabelling) {
  std::mt19937_64 rng(3);
  for (const auto& a : fixtures::random_januarials(5, 40, 4, 24)) {
    auto g = build_diagram(a).genus();
    for (int i = 0; i < 3; ++i) {
      auto b = fixtures::relabel(a, rng);
      EXPECT_EQ(build_diagram(b).genus(), g);
      // disc numbering follows the least label, so only unordered data is compared
      auto ra = classify(a), rb = classify(b);
      EXPECT_EQ(rb.type, ra.type);
      EXPECT_EQ(rb.alpha, ra.alpha);
      EXPECT_EQ(std::minmax(rb.h1, rb.h2), std::minmax(ra.h1, ra.h2)) << a.x() << " " << a.y();
      EXPECT_EQ(std::minmax(rb.g1, rb.g2), std::minmax(ra.g1, ra.g2)) << a.x() << " " << a.y();
    }
  }
}

TEST(EmbeddingProperty, EulerGenusMatchesEdgeFaceCount) {
  for (int k : {3, 4, 5, 6}) {
    auto sample = fixtures::random_januarials(100 + static_cast<std::uint64_t>(k), 50, k, 28);
    EXPECT_FALSE(sample.empty());
    for (const auto& a : sample) {
      auto d = build_diagram(a);
      EXPECT_EQ(edge_face_genus(d), d.genus());
      EXPECT_GE(d.genus(), 0);
    }
  }
}
