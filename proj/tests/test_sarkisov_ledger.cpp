#include <gtest/gtest.h>

#include "fanorr/sarkisov_ledger.hpp"

using namespace fanorr;

namespace {

LinkRecord quartic_link(const std::vector<int>& w) {
  return {"X4 - - > Y34",
          {FanoNumerics::from_genus(3, {}), cA2_blowup(w)},
          {FanoNumerics::from_genus(2, {{2, 1}, {2, 1}}), kawamata_blowup({2, 1})},
          FanoNumerics::from_genus(2, {{2, 1}}),
          Family({1, 1, 1, 1, 2}, {5})};
}

}  // namespace

TEST(Extraction, CA2BlowupData) {
  for (const auto& w : {std::vector<int>{2, 1, 1, 1}, std::vector<int>{1, 2, 1, 1}}) {
    const auto e = cA2_blowup(w);
    EXPECT_EQ(*e.discrepancy(), Rational(1));
    EXPECT_EQ(*e.exc_cube(), Rational(3, 2));
    EXPECT_EQ(e.degree_drop(), Rational(3, 2));
  }
  EXPECT_THROW(cA2_blowup({1, 1, 1, 1}), DomainError);
  EXPECT_THROW(cA2_blowup({2, 2, 1, 1}), DomainError);
}

TEST(Extraction, KawamataBlowup) {
  const auto e = kawamata_blowup({2, 1});
  EXPECT_EQ(*e.discrepancy(), Rational(1, 2));
  EXPECT_EQ(*e.exc_cube(), Rational(4));
  EXPECT_EQ(e.degree_drop(), Rational(1, 2));  // (1/2)^3 * 4
  // a_E^3 E^3 = 1 / (r a (r - a)) in general
  for (int r = 2; r <= 11; ++r)
    for (int a = 1; a < r; ++a)
      if (std::gcd(a, r) == 1) {
        EXPECT_EQ(kawamata_blowup({r, a}).degree_drop(), Rational(1, std::int64_t(r) * a * (r - a)));
      }
}

TEST(Extraction, Validation) {
  EXPECT_THROW(ExtractionData::geometric("x", Rational(0), Rational(1)), DomainError);
  EXPECT_THROW(ExtractionData::geometric("x", Rational(1), Rational(-1)), DomainError);
  EXPECT_THROW(ExtractionData::inferred("x", Rational(0)), DomainError);
  const auto e = ExtractionData::inferred("x", Rational(2, 3));
  EXPECT_TRUE(e.is_inferred());
  EXPECT_EQ(e.degree_drop(), Rational(2, 3));
  EXPECT_FALSE(e.discrepancy().has_value());
}

TEST(Ledger, AfterExtraction) {
  EXPECT_EQ(anticanonical_after_extraction(Rational(4), cA2_blowup({2, 1, 1, 1})), Rational(5, 2));
  EXPECT_EQ(anticanonical_after_extraction(Rational(3), kawamata_blowup({2, 1})), Rational(5, 2));
}

TEST(Ledger, QuarticLinksPass) {
  for (const auto& w : {std::vector<int>{2, 1, 1, 1}, std::vector<int>{1, 2, 1, 1}}) {
    const auto rep = verify_link(quartic_link(w));
    EXPECT_TRUE(rep.passed());
    for (const char* name : {"left-drop", "right-drop", "midpoint-rr", "left-end-rr", "right-end-rr",
                             "midpoint-family-cube", "midpoint-family-series", "flop-neutral"})
      EXPECT_NE(rep.find(name), nullptr) << name;
  }
}

TEST(Ledger, BrokenDropIsReported) {
  auto rec = quartic_link({2, 1, 1, 1});
  rec.right.extraction = ExtractionData::inferred("wrong", Rational(1, 3));
  const auto rep = verify_link(rec);
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(rep.find("right-drop")->pass);
  EXPECT_FALSE(rep.find("flop-neutral")->pass);
  EXPECT_TRUE(rep.find("left-drop")->pass);
}

TEST(Ledger, WrongMidpointFamilyIsReported) {
  auto rec = quartic_link({2, 1, 1, 1});
  rec.midpoint_family = Family({1, 1, 1, 1, 1}, {4});
  const auto rep = verify_link(rec);
  EXPECT_FALSE(rep.find("midpoint-family-cube")->pass);
  EXPECT_FALSE(rep.find("midpoint-family-series")->pass);
}

TEST(Ledger, InconsistentEndIsReported) {
  auto rec = quartic_link({2, 1, 1, 1});
  rec.left.numerics = FanoNumerics(3, Rational(5), Basket{});
  const auto rep = verify_link(rec);
  EXPECT_FALSE(rep.find("left-end-rr")->pass);
  EXPECT_FALSE(rep.find("left-drop")->pass);
}

TEST(Ledger, ExerciseLinks) {
  // 7/6 -> 1/2 on the left, Kawamata blowup of the 1/4 point on the right
  const LinkRecord a{"X7 - - > Y67",
                     {FanoNumerics::from_genus(1, {{2, 1}, {3, 1}}), ExtractionData::inferred("P", Rational(2, 3))},
                     {FanoNumerics::from_genus(0, {{2, 1}, {3, 1}, {3, 1}, {4, 1}}), kawamata_blowup({4, 1})},
                     FanoNumerics::from_genus(0, {{2, 1}, {3, 1}, {3, 1}, {3, 1}}),
                     Family({1, 1, 2, 3, 3}, {9})};
  EXPECT_EQ(kawamata_blowup({4, 1}).degree_drop(), Rational(1, 12));
  EXPECT_TRUE(verify_link(a).passed());

  const LinkRecord b{"X15 - - > Y1415",
                     {FanoNumerics::from_genus(0, {{2, 1}, {7, 3}}), ExtractionData::inferred("P", Rational(1, 6))},
                     {FanoNumerics::from_genus(-1, {{2, 1}, {2, 1}, {6, 1}, {9, 4}}),
                      ExtractionData::inferred("Q", Rational(1, 126))},
                     FanoNumerics::from_genus(-1, {{2, 1}, {2, 1}, {2, 1}, {6, 1}, {7, 3}}),
                     Family({1, 2, 5, 6, 7}, {20})};
  EXPECT_EQ(b.left.numerics.kcube(), Rational(15, 70));
  EXPECT_TRUE(verify_link(b).passed());
}

TEST(Thresholds, CanonicalThresholdAndWeakMaximality) {
  const MobileSystemData d{4, {{Rational(1), Rational(5)}, {Rational(2), Rational(6)}, {Rational(1, 2), Rational(0)}}};
  EXPECT_EQ(canonical_threshold(d), Rational(1, 5));
  EXPECT_TRUE(is_weak_maximal(d, 0));    // 5 >= 4 * 1
  EXPECT_FALSE(is_weak_maximal(d, 1));   // 6 < 4 * 2
  EXPECT_FALSE(is_weak_maximal(d, 2));
  EXPECT_THROW(is_weak_maximal(d, 3), DomainError);
  EXPECT_THROW(canonical_threshold({1, {{Rational(1), Rational(0)}}}), DomainError);
  // boundary m = n a counts as weak maximal
  EXPECT_TRUE(is_weak_maximal({2, {{Rational(1, 2), Rational(1)}}}, 0));
}
