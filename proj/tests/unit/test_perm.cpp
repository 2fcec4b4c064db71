#include <gtest/gtest.h>

#include "tcc/perm.hpp"

using namespace tcc;

TEST(Permutation, ParseAndPrint) {
  Permutation p = Permutation::parse("(123)", 3);
  EXPECT_EQ(p(0), 1);
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(2), 0);
  EXPECT_EQ(p.to_string(), "(123)");
  EXPECT_EQ(Permutation::parse("(1 2 3)", 3), p);
  EXPECT_EQ(Permutation::parse("(1,2,3)", 3), p);
  EXPECT_EQ(Permutation::parse("(231)", 3), p);
  EXPECT_TRUE(Permutation::parse("e", 4).is_identity());
  EXPECT_TRUE(Permutation::parse("()", 4).is_identity());
  EXPECT_EQ(Permutation::parse("id", 4).to_string(), "e");
  EXPECT_EQ(Permutation::parse("(34)(12)", 4).to_string(), "(12)(34)");
  EXPECT_THROW(Permutation::parse("(14)", 3), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("(1 1)", 3), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("(12", 3), std::invalid_argument);
}

TEST(Permutation, ComposesLeftToRight) {
  Permutation a = Permutation::parse("(12)", 3);
  Permutation b = Permutation::parse("(13)", 3);
  // apply (12) first, then (13): 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
  EXPECT_EQ(compose(a, b).to_string(), "(123)");
  EXPECT_EQ(compose(b, a).to_string(), "(132)");
  // Juxtaposed cycles compose the same way.
  EXPECT_EQ(Permutation::parse("(12)(13)", 3), compose(a, b));
}

TEST(Permutation, InverseAndParity) {
  Permutation p = Permutation::parse("(1234)(56)", 6);
  EXPECT_TRUE(compose(p, inverse(p)).is_identity());
  EXPECT_EQ(parity(p), Parity::even);
  EXPECT_EQ(parity(Permutation::parse("(1234)", 6)), Parity::odd);
  EXPECT_EQ(parity(Permutation::identity(5)), Parity::even);
}

TEST(Permutation, ComposeIsAssociative) {
  Permutation a = Permutation::parse("(1253)", 5), b = Permutation::parse("(24)(15)", 5),
              c = Permutation::parse("(345)", 5);
  EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
}

TEST(SymmetricGroups, Orders) {
  const std::size_t fact[] = {1, 1, 2, 6, 24, 120, 720};
  for (std::size_t n = 2; n <= 6; ++n) {
    EXPECT_EQ(symmetric_group(n).order(), fact[n]);
    EXPECT_EQ(alternating_group(n).order(), fact[n] / 2);
  }
  EXPECT_THROW(symmetric_group(7), std::invalid_argument);
  EXPECT_THROW(alternating_group(1), std::invalid_argument);
}

TEST(SymmetricGroups, S3Labels) {
  FiniteGroup s3 = symmetric_group(3);
  std::vector<std::string> labels;
  for (Element e = 0; e < s3.order(); ++e) labels.push_back(s3.label(e));
  EXPECT_EQ(labels, (std::vector<std::string>{"e", "(12)", "(23)", "(132)", "(123)", "(13)"}));
}

TEST(SymmetricGroups, AlternatingIsEvenPart) {
  FiniteGroup s5 = symmetric_group(5);
  std::size_t even = 0;
  for (Element e = 0; e < s5.order(); ++e)
    if (parity(Permutation::parse(s5.label(e), 5)) == Parity::even) ++even;
  EXPECT_EQ(even, 60u);
  FiniteGroup a5 = alternating_group(5);
  for (Element e = 0; e < a5.order(); ++e)
    EXPECT_EQ(parity(Permutation::parse(a5.label(e), 5)), Parity::even);
}

TEST(SymmetricGroups, TableMatchesPermutationProduct) {
  FiniteGroup s4 = symmetric_group(4);
  for (Element a = 0; a < s4.order(); ++a)
    for (Element b = 0; b < s4.order(); ++b) {
      Permutation pa = Permutation::parse(s4.label(a), 4), pb = Permutation::parse(s4.label(b), 4);
      ASSERT_EQ(s4.label(s4.mul(a, b)), compose(pa, pb).to_string());
    }
}
