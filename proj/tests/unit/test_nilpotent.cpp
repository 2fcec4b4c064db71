#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <string>

#include "tcc/nilpotent.hpp"

using namespace tcc;

namespace {

// Magnus embedding: x -> 1 + X, y -> 1 + Y in the ring of noncommuting
// power series truncated above degree `depth`. It is faithful on the free
// nilpotent group of class `depth`, so it checks the collection laws
// without sharing any code with them.
class Magnus {
 public:
  explicit Magnus(std::size_t depth) : depth_(depth) {}

  using Series = std::map<std::string, long long>;

  Series one() const { return {{"", 1}}; }
  Series gen(char v) const { return {{"", 1}, {std::string(1, v), 1}}; }
  Series gen_inverse(char v) const {
    Series s;
    std::string w;
    long long sign = 1;
    for (std::size_t k = 0; k <= depth_; ++k) {
      s[w] = sign;
      w += v;
      sign = -sign;
    }
    return s;
  }

  Series mul(const Series& p, const Series& q) const {
    Series r;
    for (const auto& [a, ca] : p)
      for (const auto& [b, cb] : q) {
        if (a.size() + b.size() > depth_) continue;
        r[a + b] += ca * cb;
      }
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
  }

  Series power(const Series& base, const Series& base_inv, long long k) const {
    Series r = one();
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) r = mul(r, k < 0 ? base_inv : base);
    return r;
  }

  // The inverse of a group element series 1 + u is sum (-u)^k.
  Series inverse(const Series& p) const {
    Series u = p;
    u[""] -= 1;
    if (u[""] == 0) u.erase("");
    Series neg;
    for (const auto& [w, c] : u) neg[w] = -c;
    Series r = one(), term = one();
    for (std::size_t k = 1; k <= depth_; ++k) {
      term = mul(term, neg);
      for (const auto& [w, c] : term) r[w] += c;
    }
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
  }

  Series commutator(const Series& a, const Series& b) const {
    return mul(mul(inverse(a), inverse(b)), mul(a, b));
  }

  Series of(const N22Element& e) const {
    Series x = gen('X'), y = gen('Y');
    Series c = commutator(x, y);
    Series r = power(x, gen_inverse('X'), e.a.convert_to<long long>());
    r = mul(r, power(y, gen_inverse('Y'), e.b.convert_to<long long>()));
    return mul(r, power(c, inverse(c), e.c.convert_to<long long>()));
  }

  Series of(const N23Element& e) const {
    Series x = gen('X'), y = gen('Y');
    Series c = commutator(y, x);
    Series d = commutator(c, y), f = commutator(c, x);
    Series r = power(x, gen_inverse('X'), e.a.convert_to<long long>());
    r = mul(r, power(y, gen_inverse('Y'), e.b.convert_to<long long>()));
    r = mul(r, power(c, inverse(c), e.c.convert_to<long long>()));
    r = mul(r, power(d, inverse(d), e.d.convert_to<long long>()));
    return mul(r, power(f, inverse(f), e.f.convert_to<long long>()));
  }

 private:
  std::size_t depth_;
};

N22Element random22(std::mt19937_64& rng, int r) {
  std::uniform_int_distribution<int> d(-r, r);
  return {d(rng), d(rng), d(rng)};
}

N23Element random23(std::mt19937_64& rng, int r) {
  std::uniform_int_distribution<int> d(-r, r);
  return {d(rng), d(rng), d(rng), d(rng), d(rng)};
}

}  // namespace

TEST(N22, CollectionLawAgreesWithMagnusOracle) {
  Magnus m(2);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    N22Element u = random22(rng, 4), v = random22(rng, 4);
    ASSERT_EQ(m.of(multiply(u, v)), m.mul(m.of(u), m.of(v))) << u.to_string() << " * " << v.to_string();
  }
}

TEST(N22, MagnusOracleSeparatesNormalForms) {
  Magnus m(2);
  std::set<Magnus::Series> images;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) images.insert(m.of(N22Element{a, b, c}));
  EXPECT_EQ(images.size(), 125u);
}

TEST(N22, GroupAxioms) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    N22Element u = random22(rng, 5), v = random22(rng, 5), w = random22(rng, 5);
    EXPECT_EQ(multiply(multiply(u, v), w), multiply(u, multiply(v, w)));
    EXPECT_TRUE(multiply(u, inverse(u)).is_identity());
    EXPECT_TRUE(multiply(inverse(u), u).is_identity());
  }
  N22Element x = N22Element::x(), y = N22Element::y();
  EXPECT_EQ(commutator(x, y), N22Element::commutator_xy());
  EXPECT_EQ(power(x, 3), (N22Element{3, 0, 0}));
  EXPECT_EQ(power(multiply(x, y), 2), (N22Element{2, 2, -1}));
  EXPECT_EQ(power(multiply(x, y), -1), inverse(multiply(x, y)));
}

TEST(N22, TextRoundTrip) {
  N22Element e{2, -1, 5};
  EXPECT_EQ(e.to_string(), "x^2 y^-1 [x,y]^5");
  EXPECT_EQ(N22Element::parse(e.to_string()), e);
  EXPECT_EQ(N22Element::parse("e"), N22Element::identity());
  EXPECT_EQ(N22Element::parse("x y"), (N22Element{1, 1, 0}));
  EXPECT_EQ(N22Element::parse("[x,y]^-3"), (N22Element{0, 0, -3}));
  EXPECT_EQ(N22Element::parse("x^123456789012345678901234567890").a.str(), "123456789012345678901234567890");
  EXPECT_THROW(N22Element::parse("y x"), std::invalid_argument);
  EXPECT_THROW(N22Element::parse("x^"), std::invalid_argument);
  EXPECT_THROW(N22Element::parse(""), std::invalid_argument);
  EXPECT_THROW(N22Element::parse("z^2"), std::invalid_argument);
}

TEST(N22, PinnedDisplacements) {
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      for (int c = -5; c <= 5; ++c) {
        N22Element z{a, b, c};
        ASSERT_EQ(twist_displacement(pinned_map(N22Twist::invert_x), z), (N22Element{-2 * a, 0, -2 * a * b - 2 * c}));
        ASSERT_EQ(twist_displacement(pinned_map(N22Twist::invert_y), z), (N22Element{0, -2 * b, -2 * c}));
        ASSERT_EQ(twist_displacement(pinned_map(N22Twist::invert_both), z), (N22Element{-2 * a, -2 * b, -2 * a * b}));
      }
}

TEST(N22, ClosedFormMembershipMatchesSearch) {
  for (auto t : {N22Twist::invert_x, N22Twist::invert_y, N22Twist::invert_both})
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b)
        for (int c = -4; c <= 4; ++c) {
          N22Element target{a, b, c};
          bool found = n22_bounded_membership(pinned_map(t), target, 4).has_value();
          ASSERT_EQ(n22_unit_class_membership(t, target), found) << to_string(t) << " " << target.to_string();
        }
}

TEST(N22, SubgroupVerdicts) {
  EXPECT_TRUE(n22_subgroup_verdict(N22Twist::invert_x).subgroup);
  EXPECT_TRUE(n22_subgroup_verdict(N22Twist::invert_y).subgroup);
  N22Verdict v = n22_subgroup_verdict(N22Twist::invert_both);
  EXPECT_FALSE(v.subgroup);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ((*v.witness)[0], (N22Element{2, 0, 0}));
  EXPECT_EQ((*v.witness)[1], (N22Element{0, 2, 0}));
  EXPECT_EQ((*v.witness)[2], (N22Element{2, 2, 0}));
  EXPECT_FALSE(n22_closure_on_box(N22Twist::invert_x, 5).has_value());
  EXPECT_FALSE(n22_closure_on_box(N22Twist::invert_y, 5).has_value());
  EXPECT_TRUE(n22_closure_on_box(N22Twist::invert_both, 3).has_value());
  // identity map: only e is a displacement
  N22Map id = N22Map::identity();
  EXPECT_TRUE(n22_bounded_membership(id, N22Element::identity(), 2).has_value());
  EXPECT_FALSE(n22_bounded_membership(id, N22Element::x(), 2).has_value());
}

TEST(N22, MapsAreHomomorphisms) {
  std::mt19937_64 rng(3);
  std::vector<N22Map> maps{pinned_map(N22Twist::invert_x), pinned_map(N22Twist::invert_both),
                           {{1, 1, 0}, {1, 2, 3}}, {{2, -1, 1}, {0, 3, -2}}};
  for (const auto& phi : maps)
    for (int i = 0; i < 100; ++i) {
      N22Element u = random22(rng, 3), v = random22(rng, 3);
      ASSERT_EQ(phi(multiply(u, v)), multiply(phi(u), phi(v)));
    }
}

TEST(N22, AutomorphismAndIaTests) {
  EXPECT_TRUE(pinned_map(N22Twist::invert_both).is_automorphism());
  EXPECT_FALSE(pinned_map(N22Twist::invert_x).is_ia_map());
  N22Map shear{{1, 1, 0}, {0, 1, 0}};
  EXPECT_TRUE(shear.is_automorphism());
  N22Map doubling{{2, 0, 0}, {0, 1, 0}};
  EXPECT_FALSE(doubling.is_automorphism());
  N22Map ia{multiply(N22Element::x(), N22Element::commutator_xy()), N22Element::y()};
  EXPECT_TRUE(ia.is_ia_map());
  EXPECT_TRUE(ia.is_central_nilmap());
  EXPECT_TRUE(N22Map::identity().is_ia_map());
  EXPECT_TRUE(N22Map::identity().is_central_nilmap());
}

TEST(N22, CentralMapsGiveClosedDisplacementSets) {
  std::vector<N22Map> central{{multiply(N22Element::x(), N22Element::commutator_xy()), N22Element::y()},
                              {{1, 0, 2}, {0, 1, -1}}};
  for (const auto& phi : central) {
    ASSERT_TRUE(phi.is_central_nilmap());
    std::vector<N22Element> disp;
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) disp.push_back(twist_displacement(phi, N22Element{a, b, 0}));
    for (const auto& u : disp)
      for (const auto& v : disp) EXPECT_TRUE(n22_bounded_membership(phi, multiply(u, v), 4).has_value());
  }
}

TEST(N23, CollectionLawAgreesWithMagnusOracle) {
  Magnus m(3);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    N23Element u = random23(rng, 3), v = random23(rng, 3);
    ASSERT_EQ(m.of(multiply(u, v)), m.mul(m.of(u), m.of(v))) << u.to_string() << " * " << v.to_string();
  }
}

TEST(N23, BasisCommutators) {
  N23Element x = N23Element::x(), y = N23Element::y();
  N23Element c = commutator(y, x);
  EXPECT_EQ(c, (N23Element{0, 0, 1, 0, 0}));
  EXPECT_EQ(commutator(c, y), (N23Element{0, 0, 0, 1, 0}));
  EXPECT_EQ(commutator(c, x), (N23Element{0, 0, 0, 0, 1}));
  EXPECT_TRUE(commutator(commutator(c, y), x).is_identity());
  EXPECT_TRUE(commutator(commutator(c, x), y).is_identity());
}

TEST(N23, GroupAxioms) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    N23Element u = random23(rng, 5), v = random23(rng, 5), w = random23(rng, 5);
    ASSERT_EQ(multiply(multiply(u, v), w), multiply(u, multiply(v, w)));
    ASSERT_TRUE(multiply(u, inverse(u)).is_identity());
  }
}

TEST(N23, CommutatorWithY) {
  const N23Element y = N23Element::y();
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d)
          for (int f = -3; f <= 3; ++f) {
            N23Element g{a, b, c, d, f};
            ASSERT_EQ(n23_commutator_with_y(g), multiply(inverse(g), multiply(inverse(y), multiply(g, y))));
          }
  EXPECT_TRUE(n23_commutator_with_y(N23Element::identity()).is_identity());
  EXPECT_EQ(n23_commutator_with_y(N23Element::x()), (N23Element{0, 0, -1, 0, 0}));
  EXPECT_EQ(n23_commutator_with_y(N23Element{2, 1, 0, 0, 0}), (N23Element{0, 0, -2, -2, -1}));
  // The same set arises as displacements of the inner map by y.
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    N23Element g = random23(rng, 4);
    EXPECT_EQ(twist_displacement(n23_inner_y(), g), n23_commutator_with_y(g));
  }
}

TEST(N23, MembershipClosedFormAgreesWithBruteForce) {
  using Key = std::array<long long, 3>;
  std::set<Key> brute;
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b)
      for (int c = -6; c <= 6; ++c) {
        N23Element t = commutator(N23Element{a, b, c, 0, 0}, N23Element::y());
        if (abs(t.c) <= 6 && abs(t.d) <= 6 && abs(t.f) <= 21)
          brute.insert({t.c.convert_to<long long>(), t.d.convert_to<long long>(), t.f.convert_to<long long>()});
      }
  for (long long c = -6; c <= 6; ++c)
    for (long long d = -6; d <= 6; ++d)
      for (long long f = -21; f <= 21; ++f)
        ASSERT_EQ(n23_unit_class_membership(N23Element{0, 0, c, d, f}), brute.count({c, d, f}) > 0);
  N23Element xy = commutator(N23Element::x(), N23Element::y());
  EXPECT_TRUE(n23_unit_class_membership(xy));
  EXPECT_FALSE(n23_unit_class_membership(multiply(xy, xy)));
  EXPECT_TRUE(n23_unit_class_membership(N23Element::identity()));
  EXPECT_FALSE(n23_unit_class_membership(N23Element::x()));
}

TEST(N23, IaButNotCentral) {
  N23Element xy = commutator(N23Element::x(), N23Element::y());
  N23Map phi{multiply(N23Element::x(), xy), N23Element::y()};
  EXPECT_TRUE(phi.is_ia_map());
  EXPECT_TRUE(phi.is_automorphism());
  EXPECT_FALSE(phi.is_central_nilmap());
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    N23Element u = random23(rng, 3), v = random23(rng, 3);
    ASSERT_EQ(phi(multiply(u, v)), multiply(phi(u), phi(v)));
  }
}

TEST(N23, TextRoundTrip) {
  N23Element e{1, -2, 3, -4, 5};
  EXPECT_EQ(e.to_string(), "x^1 y^-2 [y,x]^3 [[y,x],y]^-4 [[y,x],x]^5");
  EXPECT_EQ(N23Element::parse(e.to_string()), e);
  EXPECT_EQ(N23Element::parse("[[y,x],x]^2"), (N23Element{0, 0, 0, 0, 2}));
  EXPECT_THROW(N23Element::parse("[x,y]"), std::invalid_argument);
}

TEST(N23, BoundedSearch) {
  N23Element xy = commutator(N23Element::x(), N23Element::y());
  EXPECT_TRUE(n23_bounded_membership(n23_inner_y(), xy, 1).has_value());
  EXPECT_FALSE(n23_bounded_membership(n23_inner_y(), multiply(xy, xy), 2).has_value());
}
