#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "tcc/wreath.hpp"

using namespace tcc;
using Rational = boost::multiprecision::cpp_rational;

namespace {

// Evaluation at a rational point is a ring map, so it checks the Laurent
// arithmetic independently of the sparse representation.
Rational eval(const LaurentPoly& p, const Rational& at) {
  Rational s = 0;
  for (const auto& [k, c] : p.terms()) {
    Rational x = 1;
    long long e = k.convert_to<long long>();
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) x *= at;
    s += Rational(c) * (e < 0 ? 1 / x : x);
  }
  return s;
}

LaurentPoly random_poly(std::mt19937_64& rng, int degree, int coeff) {
  std::uniform_int_distribution<int> k(-degree, degree), c(-coeff, coeff), n(0, 4);
  LaurentPoly::Terms t;
  for (int i = n(rng); i > 0; --i) t[k(rng)] += c(rng);
  return LaurentPoly(t);
}

WreathElement random_elem(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> m(-3, 3);
  return {m(rng), random_poly(rng, 3, 3)};
}

// [[l^m, l^m mu], [0, 1]] evaluated at a point; the affine group.
struct Affine {
  Rational a, b;
};

Affine matrix_at(const WreathElement& w, const Rational& at) {
  Rational lm = eval(LaurentPoly::monomial(1, w.m), at);
  return {lm, lm * eval(w.mu, at)};
}

Affine mat_mul(const Affine& x, const Affine& y) { return {x.a * y.a, x.a * y.b + x.b}; }

bool same_matrix(const WreathElement& w, const Affine& m, const Rational& at) {
  Affine v = matrix_at(w, at);
  return v.a == m.a && v.b == m.b;
}

LaurentPoly p(const char* s) { return LaurentPoly::parse(s); }

}  // namespace

TEST(Laurent, TextForms) {
  EXPECT_EQ(one_minus_shift(1).to_string(), "1-l^-1");
  EXPECT_EQ(LaurentPoly::monomial(2, 3).to_string(), "2*l^3");
  EXPECT_EQ(LaurentPoly::parse("1 - l").to_string(), "-l+1");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_TRUE(LaurentPoly::parse("0").is_zero());
  EXPECT_EQ(LaurentPoly::parse("2l"), LaurentPoly::monomial(2, 1));
  EXPECT_EQ(LaurentPoly::parse("l+l"), LaurentPoly::monomial(2, 1));
  EXPECT_TRUE(LaurentPoly::parse("l-l").is_zero());
  EXPECT_EQ(LaurentPoly::parse("-3*l^-2 + 5").coefficient(-2), -3);
  EXPECT_THROW(LaurentPoly::parse("l^"), std::invalid_argument);
  EXPECT_THROW(LaurentPoly::parse("x"), std::invalid_argument);
  EXPECT_THROW(LaurentPoly::parse(""), std::invalid_argument);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly q = random_poly(rng, 5, 9);
    ASSERT_EQ(LaurentPoly::parse(q.to_string()), q) << q.to_string();
  }
}

TEST(Laurent, RingOperationsAgreeWithEvaluation) {
  std::mt19937_64 rng(4);
  const Rational pts[] = {Rational(2), Rational(-3), Rational(1, 5)};
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = random_poly(rng, 4, 5), b = random_poly(rng, 4, 5);
    for (const auto& x : pts) {
      ASSERT_EQ(eval(a + b, x), eval(a, x) + eval(b, x));
      ASSERT_EQ(eval(a - b, x), eval(a, x) - eval(b, x));
      ASSERT_EQ(eval(a * b, x), eval(a, x) * eval(b, x));
      ASSERT_EQ(eval(shift(a, -2), x), eval(a, x) / (x * x));
    }
    ASSERT_EQ(a - a, LaurentPoly());
    ASSERT_EQ(-(-a), a);
  }
}

TEST(Laurent, ExactDivision) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly q = random_poly(rng, 4, 5), d = random_poly(rng, 3, 4);
    if (d.is_zero()) continue;
    auto r = exact_divide(q * d, d);
    ASSERT_TRUE(r.has_value());
    ASSERT_EQ(*r, q);
  }
  EXPECT_FALSE(exact_divide(LaurentPoly::constant(1), LaurentPoly::constant(2)).has_value());
  EXPECT_FALSE(exact_divide(p("l+1"), p("l-1")).has_value());
  EXPECT_EQ(exact_divide(p("l^2-1"), p("l-1")), p("l+1"));
  EXPECT_EQ(exact_divide(p("1-l^-3"), one_minus_shift(1)), p("1+l^-1+l^-2"));
  EXPECT_EQ(exact_divide(LaurentPoly::monomial(3, -4), LaurentPoly::monomial(1, 2)), LaurentPoly::monomial(3, -6));
  EXPECT_THROW(exact_divide(p("l"), LaurentPoly()), std::invalid_argument);
}

TEST(Wreath, ProductAndCommutatorMatchMatrices) {
  std::mt19937_64 rng(8);
  const Rational pts[] = {Rational(2), Rational(-1, 3)};
  for (int i = 0; i < 300; ++i) {
    WreathElement u = random_elem(rng), v = random_elem(rng), w = random_elem(rng);
    for (const auto& x : pts) {
      ASSERT_TRUE(same_matrix(multiply(u, v), mat_mul(matrix_at(u, x), matrix_at(v, x)), x));
      Affine inv = matrix_at(inverse(u), x), id = mat_mul(inv, matrix_at(u, x));
      ASSERT_EQ(id.a, 1);
      ASSERT_EQ(id.b, 0);
    }
    ASSERT_EQ(multiply(multiply(u, v), w), multiply(u, multiply(v, w)));
    ASSERT_EQ(wreath_commutator(u, v), multiply_commutator(u, v));
    ASSERT_EQ(wreath_commutator(u, v).m, 0);
  }
  EXPECT_EQ((WreathElement{2, p("1-l")}.to_string()), "d^2 t(-l+1)");
}

TEST(Wreath, MembershipWithTranslationTwist) {
  WreathElement h = WreathElement::t(LaurentPoly::constant(1));
  for (int l = -4; l <= 4; ++l) {
    auto r = unit_class_membership(h, one_minus_shift(l));
    ASSERT_TRUE(r.is_member()) << l;
    ASSERT_EQ(multiply_commutator(*r.witness, h), WreathElement::t(one_minus_shift(l)));
  }
  EXPECT_FALSE(unit_class_membership(h, p("2-2*l^-1")).is_member());
  EXPECT_FALSE(unit_class_membership(h, p("1-l^-1+1-l^-2")).is_member());
  EXPECT_FALSE(unit_class_membership(h, p("l")).is_member());
  WreathElement h2 = WreathElement::t(p("l^2+3"));
  auto r = unit_class_membership(h2, p("l^2+3") * one_minus_shift(-2));
  ASSERT_TRUE(r.is_member());
  EXPECT_EQ(r.witness->m, -2);
}

TEST(Wreath, MembershipWithShiftTwist) {
  std::mt19937_64 rng(10);
  const WreathElement hs[] = {{1, p("1")}, {2, p("1")}, {-2, p("l+1")}, {3, LaurentPoly()}, {2, p("l^-1-2")}};
  for (const auto& h : hs)
    for (int i = 0; i < 40; ++i) {
      std::uniform_int_distribution<int> l(-5, 5);
      WreathElement z{l(rng), random_poly(rng, 3, 3)};
      LaurentPoly target = wreath_commutator(z, h).mu;
      auto r = unit_class_membership(h, target);
      ASSERT_TRUE(r.is_member()) << h.to_string() << " " << target.to_string();
      ASSERT_EQ(multiply_commutator(*r.witness, h).mu, target);
    }
  EXPECT_FALSE(unit_class_membership(WreathElement{2, p("1")}, p("1")).is_member());
  EXPECT_TRUE(unit_class_membership(WreathElement{1, p("1")}, p("1-l^-1")).is_member());
  EXPECT_FALSE(unit_class_membership(WreathElement{2, LaurentPoly()}, p("1-l^-1")).is_member());
}

TEST(Wreath, IdentityTwistIsFlagged) {
  auto r = unit_class_membership(WreathElement::identity(), LaurentPoly());
  EXPECT_EQ(r.kind, WreathMembership::Kind::trivial_twist);
  EXPECT_TRUE(r.is_member());
  auto s = unit_class_membership(WreathElement::identity(), p("l"));
  EXPECT_EQ(s.kind, WreathMembership::Kind::trivial_twist);
  EXPECT_FALSE(s.is_member());
  EXPECT_THROW(nonclosure_witness(WreathElement::identity()), std::invalid_argument);
}

TEST(Wreath, NonclosureWitnesses) {
  for (const char* mu : {"1", "l^2", "3*l-1"}) {
    WreathElement h = WreathElement::t(p(mu));
    auto w = nonclosure_witness(h);
    ASSERT_TRUE(w.has_value()) << mu;
    EXPECT_TRUE(unit_class_membership(h, w->first.mu).is_member());
    EXPECT_TRUE(unit_class_membership(h, w->second.mu).is_member());
    EXPECT_EQ(w->product, multiply(w->first, w->second));
    EXPECT_FALSE(unit_class_membership(h, w->product.mu).is_member());
  }
  WreathElement h{2, p("1")};
  auto w = nonclosure_witness(h);
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(unit_class_membership(h, w->product.mu).is_member());
}

TEST(Wreath, IdealCasesAreClosed) {
  const WreathElement ideal[] = {{1, p("1")}, {-1, p("l^3-2")}, {2, LaurentPoly()}, {-3, LaurentPoly()}};
  for (const auto& h : ideal) {
    EXPECT_TRUE(unit_class_is_ideal(h)) << h.to_string();
    EXPECT_FALSE(nonclosure_witness(h).has_value()) << h.to_string();
  }
  EXPECT_FALSE(unit_class_is_ideal(WreathElement{2, p("1")}));
  EXPECT_FALSE(unit_class_is_ideal(WreathElement::t(p("1"))));
}
