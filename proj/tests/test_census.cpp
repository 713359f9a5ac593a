#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace januarial;

TEST(Hecke, P17K8IncludesWorkedExample) {
  auto rows = hecke_rows(17, 8);
  std::set<std::int64_t> thetas;
  bool found = false;
  for (const auto& row : rows) {
    thetas.insert(row.params.theta);
    EXPECT_EQ(row.report.genus, 2);
    EXPECT_TRUE(row.report.checks.all());
    EXPECT_EQ(row.report.checks.conservation, std::optional<bool>(true));
    if (row.x == fixtures::worked_x && row.y == fixtures::worked_y) {
      found = true;
      EXPECT_EQ(row.report.signature(), "((2,1),(1,1))");
      EXPECT_EQ(row.report.alpha, -1);
      EXPECT_EQ(row.params.theta, 16);
    }
  }
  EXPECT_TRUE(found);
  for (auto t : thetas)
    EXPECT_TRUE(t == 9 || t == 15 || t == 16) << t;
}

TEST(Hecke, CapLimitsRowsPerTheta) {
  auto rows = hecke_rows(17, 8, {3});
  std::map<std::int64_t, int> per;
  for (const auto& row : rows)
    ++per[row.params.theta];
  for (auto [t, n] : per)
    EXPECT_LE(n, 3);
}

TEST(Hecke, Errors) {
  EXPECT_THROW(hecke_rows(7, 100), SearchExhausted);
  EXPECT_THROW(hecke_rows(15, 8), DomainError);
  EXPECT_THROW(hecke_rows(2, 8), DomainError);
  EXPECT_THROW(hecke_rows(17, 1), DomainError);
}

TEST(Census, SmallSweep) {
  auto c = run_census(17, 8, {8});
  bool saw = false;
  for (const auto& g : c.groups) {
    EXPECT_TRUE(g.conserved);
    if (g.p == 17 && g.k == 8) {
      saw = true;
      EXPECT_EQ(g.g_pk, 2);
    }
  }
  EXPECT_TRUE(saw);
  for (const auto& row : c.rows) {
    const auto& r = row.report;
    if (r.p == 17 && r.k == 8) {
      int lhs2 = r.type == JanuarialType::simple ? 2 * (r.g1 + r.g2 + r.h1) : 2 * (r.g1 + r.g2) + r.h1 + r.h2 + r.alpha;
      EXPECT_EQ(lhs2, 6);
    }
  }
}

TEST(Census, EmptyWhenNoPrimes) {
  auto c = run_census(2, 8);
  EXPECT_TRUE(c.rows.empty());
  EXPECT_TRUE(c.groups.empty());
}

TEST(Census, Deterministic) {
  auto a = census_json(run_census(19, 6, {4})).dump();
  auto b = census_json(run_census(19, 6, {4})).dump();
  EXPECT_EQ(a, b);
}

TEST(Census, KnownGenera) {
  std::map<std::pair<int, int>, int> want = {{{5, 3}, 0}, {{7, 7}, 1}, {{17, 8}, 2}, {{17, 9}, 3}, {{47, 8}, 9}};
  for (auto [pk, g] : want) {
    auto rows = hecke_rows(pk.first, pk.second, {4});
    for (const auto& row : rows)
      EXPECT_EQ(row.report.genus, g) << pk.first << "," << pk.second;
  }
}

TEST(Census, TableHasOneLinePerRow) {
  auto rows = hecke_rows(13, 3, {2});
  auto table = census_table(rows);
  EXPECT_EQ(static_cast<std::size_t>(std::count(table.begin(), table.end(), '\n')), rows.size() + 1);
}
