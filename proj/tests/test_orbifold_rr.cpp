#include <gtest/gtest.h>

#include "fanorr/orbifold_rr.hpp"

using namespace fanorr;

namespace {

// The defining sum, term by term, with no period folding.
Rational ell_direct(int r, int a, int n) {
  Rational s;
  for (int k = 1; k <= n - 1; ++k) {
    const int ka = (k * a) % r;
    s += Rational(std::int64_t(ka) * (r - ka), 2 * r);
  }
  return s;
}

}  // namespace

TEST(QuotientSingularity, Validation) {
  EXPECT_NO_THROW(QuotientSingularity(2, 1));
  EXPECT_THROW(QuotientSingularity(1, 1), DomainError);
  EXPECT_THROW(QuotientSingularity(4, 2), DomainError);
  EXPECT_THROW(QuotientSingularity(5, 0), DomainError);
  EXPECT_THROW(QuotientSingularity(5, 5), DomainError);
  EXPECT_EQ(QuotientSingularity(7, 4).normalized(), QuotientSingularity(7, 3));
  EXPECT_EQ(QuotientSingularity(7, 3).to_string(), "1/7(3,4,1)");
}

TEST(Basket, MultisetEqualityUpToSymmetry) {
  EXPECT_EQ(Basket({{3, 1}, {2, 1}}), Basket({{2, 1}, {3, 2}}));
  EXPECT_NE(Basket({{2, 1}}), Basket({{2, 1}, {2, 1}}));
  EXPECT_EQ(Basket({{2, 1}, {2, 1}, {3, 1}}).to_string(), "{2x1/2(1,1,1), 1/3(1,2,1)}");
  EXPECT_EQ(Basket().to_string(), "{}");
}

TEST(LocalContribution, SpecValues) {
  EXPECT_EQ(local_contribution({2, 1}, 0), Rational(0));
  EXPECT_EQ(local_contribution({2, 1}, 1), Rational(0));
  EXPECT_EQ(local_contribution({2, 1}, 2), Rational(1, 4));
  EXPECT_EQ(local_contribution({3, 1}, 3), Rational(2, 3));
  EXPECT_THROW(local_contribution({2, 1}, -1), DomainError);
}

TEST(LocalContribution, FrozenValues) {
  // evaluated independently with Python fractions
  EXPECT_EQ(local_contribution({7, 3}, 20), Rational(78, 7));
  EXPECT_EQ(local_contribution({9, 4}, 25), Rational(166, 9));
  EXPECT_EQ(local_contribution({5, 2}, 13), Rational(5));
}

TEST(LocalContribution, MatchesDirectSum) {
  for (int r = 2; r <= 12; ++r)
    for (int a = 1; a < r; ++a) {
      if (std::gcd(a, r) != 1) continue;
      for (int n = 0; n <= 60; ++n) ASSERT_EQ(local_contribution({r, a}, n), ell_direct(r, a, n)) << r << " " << a << " " << n;
    }
}

TEST(LocalContribution, SymmetryProperty) {
  for (int r = 2; r <= 12; ++r)
    for (int a = 1; a < r; ++a) {
      if (std::gcd(a, r) != 1) continue;
      for (int n = 0; n <= 60; ++n) ASSERT_EQ(local_contribution({r, a}, n), local_contribution({r, r - a}, n));
    }
}

TEST(LocalContribution, PeriodicityProperty) {
  for (int r = 2; r <= 12; ++r)
    for (int a = 1; a < r; ++a) {
      if (std::gcd(a, r) != 1) continue;
      const QuotientSingularity q(r, a);
      for (int n = 0; n <= 60; ++n)
        ASSERT_EQ(local_contribution(q, n + r), local_contribution(q, n) + local_contribution(q, r + 1))
            << r << " " << a << " " << n;
    }
}

TEST(AnticanonicalCube, SpecValues) {
  EXPECT_EQ(anticanonical_cube(3, {}), Rational(4));
  EXPECT_EQ(anticanonical_cube(2, {{2, 1}}), Rational(5, 2));
  EXPECT_EQ(anticanonical_cube(2, {{2, 1}, {2, 1}}), Rational(3));
  EXPECT_FALSE(is_fano_candidate(anticanonical_cube(0, {{2, 1}})));
  EXPECT_THROW(FanoNumerics::from_genus(0, {{2, 1}}), DomainError);
}

TEST(FanoNumerics, InconsistentRecordsAreFlagged) {
  const FanoNumerics bad(2, Rational(3), Basket{{2, 1}});
  EXPECT_FALSE(bad.rr_consistent());
  EXPECT_TRUE(FanoNumerics::from_genus(2, {{2, 1}}).rr_consistent());
  EXPECT_THROW(FanoNumerics(2, Rational(0), Basket{}), DomainError);
}

TEST(H0Anticanonical, SpecValues) {
  const auto z = FanoNumerics::from_genus(2, {{2, 1}});
  EXPECT_EQ(h0_anticanonical(z, 0).value, Rational(1));
  EXPECT_EQ(h0_anticanonical(z, 1).value, Rational(4));
  EXPECT_EQ(h0_anticanonical(z, 2).value, Rational(11));
  EXPECT_TRUE(h0_anticanonical(z, 2).nonnegative_integer);
  EXPECT_THROW(h0_anticanonical(z, -1), DomainError);
}

TEST(H0Anticanonical, NonIntegralInputsStillEvaluate) {
  const FanoNumerics bad(2, Rational(3), Basket{{2, 1}});
  bool saw_fraction = false;
  for (int n = 0; n <= 6; ++n) saw_fraction = saw_fraction || !h0_anticanonical(bad, n).nonnegative_integer;
  EXPECT_TRUE(saw_fraction);
}

TEST(H0Anticanonical, GenusProperty) {
  // h0(-K) = g + 2 for every numerics built from (g, basket)
  const std::vector<Basket> baskets = {{}, {{2, 1}}, {{2, 1}, {3, 1}}, {{5, 2}}, {{7, 3}, {2, 1}, {2, 1}}, {{11, 4}}};
  for (int g = 0; g <= 6; ++g)
    for (const auto& b : baskets) {
      if (!is_fano_candidate(anticanonical_cube(g, b))) continue;
      EXPECT_EQ(h0_anticanonical(FanoNumerics::from_genus(g, b), 1).value, Rational(g + 2)) << g << b.to_string();
    }
}

TEST(RrHilbertSequence, SpecValues) {
  const auto z = FanoNumerics::from_genus(2, {{2, 1}});
  EXPECT_EQ(rr_hilbert_sequence(z, 1).values, (std::vector<Rational>{1, 4}));
  EXPECT_EQ(rr_hilbert_sequence(z, 0).values, (std::vector<Rational>{1}));
  EXPECT_EQ(rr_hilbert_sequence(FanoNumerics::from_genus(3, {}), 1).values, (std::vector<Rational>{1, 5}));
}

TEST(RrHilbertSequence, FrozenPrefixes) {
  const auto seq = [](int g, Basket b) {
    std::vector<std::int64_t> out;
    for (const auto& v : rr_hilbert_sequence(FanoNumerics::from_genus(g, std::move(b)), 10).values) out.push_back(v.num());
    return out;
  };
  EXPECT_EQ(seq(2, {{2, 1}}), (std::vector<std::int64_t>{1, 4, 11, 24, 46, 79, 126, 189, 271, 374, 501}));
  EXPECT_EQ(seq(1, {{2, 1}, {3, 1}}), (std::vector<std::int64_t>{1, 3, 7, 14, 25, 41, 64, 94, 133, 182, 242}));
  EXPECT_EQ(seq(-1, {{2, 1}, {2, 1}, {2, 1}, {6, 1}, {7, 3}}),
            (std::vector<std::int64_t>{1, 1, 2, 2, 3, 4, 6, 8, 10, 12, 15}));
  EXPECT_EQ(seq(-1, {{2, 1}, {2, 1}, {6, 1}, {9, 4}}), (std::vector<std::int64_t>{1, 1, 2, 2, 3, 4, 6, 8, 10, 13, 16}));
}

TEST(GenusFromH0, Values) {
  EXPECT_EQ(genus_from_h0(4), 2);
  EXPECT_EQ(genus_from_h0(5), 3);
  EXPECT_EQ(genus_from_h0(2), 0);
  EXPECT_EQ(genus_from_h0(1), -1);
  EXPECT_THROW(genus_from_h0(-1), DomainError);
}
