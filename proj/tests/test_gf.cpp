#include <gtest/gtest.h>

#include <random>

#include <januarial/gf.hpp>

using namespace januarial;

TEST(Field, Arithmetic) {
  FieldElem two(2, 17);
  EXPECT_EQ(two.inv().value(), 9);
  EXPECT_EQ((FieldElem(16, 17) + FieldElem(5, 17)).value(), 4);
  EXPECT_EQ((FieldElem(3, 17) - FieldElem(5, 17)).value(), 15);
  EXPECT_EQ((-FieldElem(1, 17)).value(), 16);
  EXPECT_EQ((FieldElem(5, 17) / FieldElem(2, 17)).value(), 11);
  EXPECT_EQ(FieldElem(-1, 17).value(), 16);
}

TEST(Field, Errors) {
  EXPECT_THROW(FieldElem(0, 17).inv(), DomainError);
  EXPECT_THROW(FieldElem(1, 15), DomainError);
  EXPECT_THROW(FieldElem(1, 2), DomainError);
  EXPECT_THROW(FieldElem(1, 17) + FieldElem(1, 19), DomainError);
}

TEST(Field, SquareRoots) {
  auto r = FieldElem(2, 17).sqrt_list();
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].value(), 6);
  EXPECT_EQ(r[1].value(), 11);
  EXPECT_TRUE(FieldElem(3, 17).sqrt_list().empty());
  EXPECT_EQ(sqrt_mod(0, 17), std::vector<std::int64_t>{0});
}

TEST(Field, SquareRootsMatchBruteForce) {
  for (std::int64_t p : {3, 5, 7, 13, 17, 41, 97, 101}) {
    for (std::int64_t v = 0; v < p; ++v) {
      std::vector<std::int64_t> want;
      for (std::int64_t r = 0; r < p; ++r)
        if (r * r % p == v)
          want.push_back(r);
      EXPECT_EQ(sqrt_mod(v, p), want) << "p=" << p << " v=" << v;
    }
  }
}

TEST(Field, IsPrime) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(17));
  EXPECT_TRUE(is_prime(1000003));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(561));
}

TEST(Mobius, WorkedExampleGenerators) {
  MobiusMap X(1, 10, 10, -1, 17);
  MobiusMap Y(0, 4, 4, 8, 17);
  auto line = PointSet::projective_line(17);
  EXPECT_EQ(X.to_perm(line).to_string(true), "(0,7)(1,5)(2,6)(3,11)(4,13)(8,14)(9)(10,16)(12,inf)(15)");
  EXPECT_EQ(Y.to_perm(line).to_string(true), "(0,9,14,16,1,6,15,inf)(2,13,8,12,11,4,3,7)(5)(10)");
  EXPECT_EQ((X * Y).theta().value(), 16);
  EXPECT_EQ(Y.theta().value(), 13);
  EXPECT_EQ(Y.pgl_order(), 8u);
  EXPECT_EQ((X * Y).pgl_order(), 9u);
  EXPECT_EQ(X.pgl_order(), 2u);
}

TEST(Mobius, ApplyAtInfinity) {
  MobiusMap m(2, 3, 5, 7, 17);
  // inf -> 2/5, -7/5 -> inf
  EXPECT_EQ(m.apply(Point::infinity()), Point(2 * inv_mod(5, 17) % 17));
  EXPECT_EQ(m.apply(Point(mod(-7 * inv_mod(5, 17), 17))), Point::infinity());
  EXPECT_EQ(MobiusMap(1, 1, 0, 1, 17).apply(Point::infinity()), Point::infinity());
}

TEST(Mobius, SingularRejected) { EXPECT_THROW(MobiusMap(1, 2, 2, 4, 17), DomainError); }

TEST(Mobius, ProjectiveEquality) {
  EXPECT_EQ(MobiusMap(1, 2, 3, 5, 17), MobiusMap(2, 4, 6, 10, 17));
  EXPECT_FALSE(MobiusMap(1, 2, 3, 5, 17) == MobiusMap(1, 2, 3, 7, 17));
  EXPECT_TRUE(MobiusMap(4, 0, 0, 4, 17).is_scalar());
}

TEST(MobiusProperty, ToPermIsHomomorphism) {
  std::mt19937_64 rng(11);
  for (std::int64_t p : {5, 7, 11, 17, 23}) {
    auto line = PointSet::projective_line(p);
    std::uniform_int_distribution<std::int64_t> u(0, p - 1);
    auto draw = [&] {
      while (true) {
        std::int64_t a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        if (mod(a * d - b * c, p) != 0)
          return MobiusMap(a, b, c, d, p);
      }
    };
    for (int i = 0; i < 50; ++i) {
      auto A = draw(), B = draw(), C = draw();
      EXPECT_EQ((A * B).to_perm(line), compose(A.to_perm(line), B.to_perm(line)));
      EXPECT_EQ((A * B) * C, A * (B * C));
      EXPECT_EQ(A.pgl_order(), A.to_perm(line).order());
      EXPECT_EQ(A.pow(A.pgl_order()), MobiusMap::identity(p));
      // theta is invariant under conjugation
      EXPECT_EQ((B * A * B.pow(B.pgl_order() - 1)).theta(), A.theta());
    }
  }
}
