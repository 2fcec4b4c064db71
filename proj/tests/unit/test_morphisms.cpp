#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "tcc/morphisms.hpp"
#include "tcc/perm.hpp"

using namespace tcc;

namespace {

// Every map G -> G given by a table, filtered by the homomorphism law. Only
// feasible for tiny groups; it does not use generators or relators at all.
std::size_t brute_force_endomorphism_count(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> t(n, 0);
  std::size_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          if (t[g.mul(a, b)] != g.mul(t[a], t[b])) return;
      ++count;
      return;
    }
    for (Element v = 0; v < n; ++v) {
      t[i] = v;
      // prune on products among already-assigned points
      bool ok = true;
      for (Element a = 0; a <= i && ok; ++a)
        for (Element b = 0; b <= i && ok; ++b) {
          Element ab = g.mul(a, b);
          if (ab <= i && t[ab] != g.mul(t[a], t[b])) ok = false;
        }
      if (ok) rec(i + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace

struct EndCase {
  std::string name;
  std::size_t endos;
  std::size_t auts;
};

class EndCountTest : public ::testing::TestWithParam<EndCase> {};

TEST_P(EndCountTest, CountsMatch) {
  const auto& c = GetParam();
  FiniteGroup g = catalog(c.name);
  auto endos = enumerate_homomorphisms(g);
  EXPECT_EQ(endos.size(), c.endos);
  EXPECT_EQ(automorphisms(g).size(), c.auts);
  if (g.order() <= 8) EXPECT_EQ(brute_force_endomorphism_count(g), c.endos);
}

INSTANTIATE_TEST_SUITE_P(Groups, EndCountTest,
                         ::testing::Values(EndCase{"C1", 1, 1}, EndCase{"C5", 5, 4}, EndCase{"C6", 6, 2},
                                           EndCase{"K4", 16, 6}, EndCase{"S3", 10, 6}, EndCase{"D4", 36, 8},
                                           EndCase{"prop14", 36, 8}, EndCase{"Q8", 28, 24},
                                           EndCase{"A4", 33, 24}, EndCase{"S4", 58, 24}),
                         [](const auto& info) { return info.param.name; });

TEST(GroupMap, FromTableValidates) {
  FiniteGroup c4 = cyclic_group(4);
  EXPECT_NO_THROW(GroupMap::from_table(c4, {0, 2, 0, 2}));
  EXPECT_THROW(GroupMap::from_table(c4, {0, 2, 1, 3}), std::invalid_argument);
  EXPECT_THROW(GroupMap::from_table(c4, {0, 1}), std::invalid_argument);
  EXPECT_THROW(GroupMap::from_table(c4, {0, 1, 2, 9}), std::invalid_argument);
  GroupMap sq = GroupMap::from_table(c4, {0, 2, 0, 2});
  EXPECT_FALSE(sq.is_automorphism());
  EXPECT_EQ(sq.kernel(), Subset({0, 2}));
  EXPECT_EQ(sq.image(), Subset({0, 2}));
}

TEST(GroupMap, FromGeneratorImages) {
  FiniteGroup g = prop14_group();
  Element x = parse_element(g, "x"), y = parse_element(g, "y"), xy = parse_element(g, "xy");
  std::vector<Element> good{y, x};
  Extension e = from_generator_images(g, good);
  ASSERT_TRUE(e);
  EXPECT_TRUE(e.map->is_automorphism());
  // xy has order 4, so x -> xy violates x^2 = e.
  std::vector<Element> bad{xy, y};
  Extension f = from_generator_images(g, bad);
  EXPECT_FALSE(f);
  EXPECT_TRUE(f.violated_relator.has_value());
  EXPECT_FALSE(f.rejection.empty());
}

TEST(GroupMap, ComposeActsOnTheRight) {
  FiniteGroup s3 = symmetric_group(3);
  Element a = parse_element(s3, "(12)"), b = parse_element(s3, "(13)");
  GroupMap ia = inner_automorphism(s3, a), ib = inner_automorphism(s3, b);
  GroupMap ab = compose(ia, ib);
  // x^(ia ib) = (x^a)^b = x^(ab)
  EXPECT_EQ(ab, inner_automorphism(s3, s3.mul(a, b)));
  EXPECT_EQ(compose(ia, inverse(ia)), identity_map(s3));
  EXPECT_THROW(inverse(trivial_map(s3)), std::invalid_argument);
}

TEST(GroupMap, ConjugateMap) {
  FiniteGroup s3 = symmetric_group(3);
  Element a = parse_element(s3, "(12)"), b = parse_element(s3, "(123)");
  GroupMap phi = inner_automorphism(s3, a);
  GroupMap theta = inner_automorphism(s3, b);
  // theta^-1 phi theta for inner maps is conjugation by a^b.
  EXPECT_EQ(conjugate_map(phi, theta), inner_automorphism(s3, s3.conj(a, b)));
}

TEST(GroupMap, CentralMorphisms) {
  FiniteGroup q8 = catalog("Q8");
  for (Element h = 0; h < q8.order(); ++h) EXPECT_TRUE(is_central_morphism(q8, inner_automorphism(q8, h)));
  FiniteGroup s3 = symmetric_group(3);
  EXPECT_FALSE(is_central_morphism(s3, inner_automorphism(s3, parse_element(s3, "(12)"))));
  EXPECT_TRUE(is_central_morphism(s3, identity_map(s3)));
}

TEST(GroupMap, InducedAndRestricted) {
  FiniteGroup d4 = catalog("D4");
  Subset z = center(d4);
  Quotient q = quotient(d4, z);
  for (const auto& phi : automorphisms(d4)) {
    GroupMap induced = induced_on_quotient(d4, phi, q);
    for (Element x = 0; x < d4.order(); ++x) EXPECT_EQ(induced(q.projection[x]), q.projection[phi(x)]);
    SubgroupView sv = subgroup_group(d4, derived_subgroup(d4));
    GroupMap r = restrict_to(d4, phi, sv);
    for (Element i = 0; i < sv.group.order(); ++i) EXPECT_EQ(sv.embedding[r(i)], phi(sv.embedding[i]));
  }
  FiniteGroup s3 = symmetric_group(3);
  SubgroupView t = subgroup_group(s3, Subset({0, parse_element(s3, "(12)")}));
  EXPECT_THROW(restrict_to(s3, inner_automorphism(s3, parse_element(s3, "(123)")), t), std::invalid_argument);
}

TEST(GroupMap, AutGroupOfProp14IsDihedral) {
  AutGroup a = aut_group(prop14_group());
  EXPECT_EQ(a.group.order(), 8u);
  EXPECT_EQ(a.maps[0], identity_map(prop14_group()));
  EXPECT_FALSE(a.group.is_abelian());
  EXPECT_EQ(center(a.group).size(), 2u);
  std::size_t involutions = 0;
  for (Element e = 1; e < 8; ++e)
    if (a.group.element_order(e) == 2) ++involutions;
  EXPECT_EQ(involutions, 5u);
}

TEST(GroupMap, OrbitCensusProp14) {
  FiniteGroup g = prop14_group();
  auto census = endo_orbit_census(g);
  std::size_t total = 0;
  std::vector<std::size_t> aut_sizes, proper_sizes;
  for (const auto& o : census) {
    total += o.size();
    (o.automorphisms ? aut_sizes : proper_sizes).push_back(o.size());
  }
  EXPECT_EQ(total, 36u);
  std::sort(aut_sizes.begin(), aut_sizes.end());
  std::sort(proper_sizes.begin(), proper_sizes.end());
  EXPECT_EQ(aut_sizes, (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  EXPECT_EQ(proper_sizes, (std::vector<std::size_t>{1, 1, 2, 4, 4, 4, 4, 4, 4}));
}

TEST(GroupMap, ParseAndPrint) {
  FiniteGroup g = prop14_group();
  GroupMap swap = parse_map(g, "x->y, y->x");
  EXPECT_EQ(map_to_string(g, swap), "x->y, y->x");
  EXPECT_EQ(parse_map(g, map_to_string(g, swap)), swap);
  EXPECT_EQ(parse_map(g, "x -> x[x,y], y -> y"), parse_map(g, "x->x[x,y],y->y"));
  EXPECT_THROW(parse_map(g, "x->xy, y->y"), std::invalid_argument);
  EXPECT_THROW(parse_map(g, "x->y"), std::invalid_argument);
  EXPECT_THROW(parse_map(g, "q->y, y->x"), std::invalid_argument);
  EXPECT_THROW(parse_map(g, "x->w, y->x"), std::invalid_argument);
}
