#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "grouplab/errors.hpp"
#include "grouplab/ff_lacunary.hpp"

using namespace grouplab;

namespace {

// Oracle: x^e by repeated multiplication.
Fq slow_pow(const FqField &f, Fq x, std::uint64_t e) {
  Fq r = 1;
  for (std::uint64_t i = 0; i < e; ++i)
    r = f.mul(r, x);
  return r;
}

} // namespace

TEST(FqField, AxiomsOnSmallFields) {
  for (auto [p, k] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 2u}, {2u, 4u}, {5u, 1u}, {3u, 3u}}) {
    FqField f(p, k);
    const Fq q = f.order();
    for (Fq a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a != 0) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
        EXPECT_EQ(f.pow(a, q - 1), 1u);
      }
      for (Fq b = 0; b < q; ++b)
        for (Fq c = 0; c < q; c += 3)
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    }
  }
}

TEST(FqField, ModulusIsLeastIrreducible) {
  EXPECT_EQ(FqField(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(FqField(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  // X^8 + X^4 + X^3 + X + 1
  EXPECT_EQ(FqField(2, 8).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1, 1, 0, 0, 0, 1}));
  EXPECT_EQ(FqField(3, 4).modulus().size(), 5u);
}

TEST(FqField, Errors) {
  EXPECT_THROW(FqField::of_order(6), NotPrimePower);
  EXPECT_THROW(FqField::of_order(1), NotPrimePower);
  EXPECT_THROW(FqField(2, 21), FieldTooLarge);
  EXPECT_THROW(FqField(4, 1), NotPrimePower);
  EXPECT_EQ(FqField::of_order(81)->degree(), 4u);
}

TEST(FqField, FrobeniusIsPthPower) {
  FqField f(3, 4);
  for (Fq a = 0; a < f.order(); ++a) {
    EXPECT_EQ(f.frob(a, 1), slow_pow(f, a, 3));
    EXPECT_EQ(f.frob(a, 4), a);
  }
}

TEST(FrobeniusPoly, ExamplesAndEvaluation) {
  auto f4 = FqField::of_order(4);
  FqPoly f(f4, {{1, 1}, {0, 1}});
  EXPECT_EQ(frobenius_poly(f, 0), f);
  EXPECT_EQ(frobenius_poly(f, 1), FqPoly(f4, {{2, 1}, {0, 1}}));

  auto f256 = FqField::of_order(256);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Fq> coef(0, 255);
  std::uniform_int_distribution<std::uint64_t> ex(0, 40);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<FqPoly::Term> terms;
    for (int i = 0; i < 5; ++i)
      terms.push_back({ex(rng), coef(rng)});
    FqPoly g(f256, terms);
    for (unsigned it : {1u, 3u}) {
      auto h = frobenius_poly(g, it);
      EXPECT_EQ(roots(h), roots(g));
      for (Fq x = 0; x < 256; ++x)
        EXPECT_EQ(h.eval(x), f256->frob(g.eval(x), it));
    }
  }
}

TEST(Roots, Examples) {
  auto f9 = FqField::of_order(9);
  // X^9 - X
  FqPoly all(f9, {{9, 1}, {1, f9->neg(1)}});
  EXPECT_EQ(roots(all).size(), 9u);
  FqPoly x2p1(f9, {{2, 1}, {0, 1}});
  auto r = roots(x2p1);
  ASSERT_EQ(r.size(), 2u);
  for (auto x : r)
    EXPECT_EQ(f9->mul(x, x), f9->neg(1));
  EXPECT_TRUE(roots(FqPoly(f9, {{0, 5}})).empty());
}

TEST(LacunaryReduce, PureLowDegreeIsFrobenius) {
  auto f16 = FqField::of_order(16);
  FqPoly f(f16, {{3, 7}, {1, 2}, {0, 9}});
  auto q = lacunary_reduce(f, 3, 0.2);
  EXPECT_EQ(q, frobenius_poly(f, 1));
  EXPECT_EQ(roots(q), roots(f));
}

TEST(LacunaryReduce, F16SplitExample) {
  auto f16 = FqField::of_order(16);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Fq> coef(1, 15);
  for (int trial = 0; trial < 50; ++trial) {
    // X^8 g(X) + h(X) with deg g, deg h <= 3.
    std::vector<FqPoly::Term> terms;
    for (std::uint64_t e = 0; e <= 3; ++e) {
      terms.push_back({e, coef(rng)});
      terms.push_back({8 + e, coef(rng)});
    }
    FqPoly f(f16, terms);
    auto q = lacunary_reduce(f, 3, 0.2);
    EXPECT_EQ(roots(q), roots(f));
    EXPECT_LE(double(q.degree()), std::pow(16.0, 0.95));
  }
}

TEST(LacunaryReduce, RandomAdmissibleInstances) {
  struct Case { std::uint32_t q; unsigned L; double eps; };
  for (auto c : {Case{256, 6, 0.2}, Case{256, 7, 0.1}, Case{81, 3, 0.2}, Case{16, 3, 0.2}}) {
    auto field = FqField::of_order(c.q);
    std::mt19937_64 rng(c.q * 31 + c.L);
    for (int trial = 0; trial < 100; ++trial) {
      auto f = random_lacunary(field, c.L, c.eps, rng);
      auto q = lacunary_reduce(f, c.L, c.eps);
      EXPECT_EQ(roots(q), roots(f));
      EXPECT_LE(double(q.degree()), lacunary_degree_bound(c.q, c.eps));
      for (const auto &t : q.terms())
        EXPECT_LT(t.exponent, std::uint64_t(c.q));
    }
  }
}

TEST(LacunaryReduce, PreconditionsRejected) {
  auto f16 = FqField::of_order(16);
  FqPoly f(f16, {{1, 1}});
  EXPECT_THROW(lacunary_reduce(f, 2, 0.2), PreconditionViolated);  // L < 3K/4
  EXPECT_THROW(lacunary_reduce(f, 4, 0.2), PreconditionViolated);  // L = K
  EXPECT_THROW(lacunary_reduce(f, 3, 0.3), PreconditionViolated);  // eps >= 1/4
  EXPECT_THROW(lacunary_reduce(FqPoly(f16, {{7, 1}}), 3, 0.1), PreconditionViolated);
  EXPECT_THROW(lacunary_reduce(FqPoly(f16, {{15, 1}}), 3, 0.2), PreconditionViolated);
}

TEST(LacunaryReduce, ExponentShiftKeepsValues) {
  auto f81 = FqField::of_order(81);
  for (std::uint64_t e = 81; e < 81 + 60; ++e)
    for (Fq x = 0; x < 81; ++x)
      EXPECT_EQ(f81->pow(x, e), f81->pow(x, e - 80));
}
