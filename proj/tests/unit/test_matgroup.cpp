#include <gtest/gtest.h>

#include <numeric>

#include "fixtures_common.hpp"
#include "saxl/error.hpp"
#include "saxl/matgroup.hpp"

using namespace saxl;
using testsupport::module;

namespace {

GroupSpec minus_identity(std::uint32_t p, std::size_t d) {
  Field f = Field::prime(p);
  GroupSpec g;
  g.field = f;
  g.d = d;
  g.generators = {Mat::scalar(f, d, f.neg(1))};
  return g;
}

GroupSpec m11_on_11_points(std::uint32_t p) {
  return perm_group_spec(testsupport::m11_perm11(), Field::prime(p));
}

}  // namespace

TEST(Enumerate, MinusIdentity) { EXPECT_EQ(enumerate(minus_identity(3, 2)).order(), 2u); }

TEST(Enumerate, M11From11PointMatrices) {
  GroupSpec g = m11_on_11_points(3);
  g.known_order.reset();
  EXPECT_EQ(enumerate(g).order(), 7920u);
  // independent closure over the permutations
  EXPECT_EQ(ref::perm_closure(testsupport::perms(testsupport::m11_perm11())).size(), 7920u);
}

TEST(Enumerate, M11WithScalarsOverF9) {
  ModuleAction m = module("m11_f3_5a.json", 2, 2);
  EXPECT_EQ(enumerate(m.group).order(), 15840u);
}

TEST(Enumerate, CapExceededThrows) {
  GroupSpec g = m11_on_11_points(2);
  g.known_order.reset();
  try {
    enumerate(g, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(ElementOrder, MinusIdentity) {
  Mat m = minus_identity(5, 3).generators[0];
  EXPECT_EQ(element_order(m), 2u);
  EXPECT_EQ(projective_order(m), 1u);
}

TEST(ElementOrder, ElevenCycle) {
  GroupSpec g = m11_on_11_points(2);
  EXPECT_EQ(element_order(g.generators[0]), 11u);
  EXPECT_EQ(element_order(g.generators[1]), 4u);
}

TEST(ElementOrder, PrimitiveScalarOverF4) {
  Field f = Field::make(2, 2);
  Mat w = Mat::scalar(f, 3, f.primitive());
  EXPECT_EQ(element_order(w), 3u);
  EXPECT_EQ(projective_order(w), 1u);
}

TEST(PrimeOrderClasses, M11SizesAndCounts) {
  GroupSpec g = m11_on_11_points(2);
  g.labels.socle = "M11";
  ClassOptions o;
  o.compute_eigen = false;
  auto classes = prime_order_classes(g, o);
  std::multimap<std::uint64_t, std::uint64_t> got;
  std::uint64_t iP = 0, i2 = 0;
  for (const auto& c : classes) {
    got.emplace(c.element_order, c.class_size);
    iP += c.class_size;
    if (c.element_order == 2) i2 += c.class_size;
    EXPECT_EQ(7920 % c.class_size, 0u);
  }
  // oracle: conjugation orbits on the permutations themselves
  auto p = testsupport::m11_perm11();
  auto elems = ref::perm_closure(testsupport::perms(p));
  auto sizes = ref::perm_class_sizes(elems, testsupport::perms(p));
  std::multimap<std::uint64_t, std::uint64_t> want;
  for (auto [ord, size] : sizes) {
    if (ord == 2 || ord == 3 || ord == 5 || ord == 7 || ord == 11) want.emplace(ord, size);
  }
  EXPECT_EQ(got, want);
  EXPECT_EQ(iP, 3629u);
  EXPECT_EQ(i2, 165u);
  EXPECT_EQ(got.count(11), 2u);
  for (auto it = got.lower_bound(11); it != got.end(); ++it) EXPECT_EQ(it->second, 720u);
}

TEST(PrimeOrderClasses, ScalarsAreQuotiented) {
  auto classes = prime_order_classes(minus_identity(3, 2));
  // -I is scalar, so H is trivial
  EXPECT_TRUE(classes.empty());
  GroupSpec g;
  g.field = Field::prime(5);
  g.d = 2;
  g.generators = {Mat::from_rows(g.field, {{1, 0}, {0, 4}})};
  classes = prime_order_classes(g);
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].element_order, 2u);
  EXPECT_EQ(classes[0].class_size, 1u);
}

TEST(PrimeOrderClasses, CyclicOrderFourOverF5) {
  GroupSpec g;
  g.field = Field::prime(5);
  g.d = 2;
  g.generators = {Mat::from_rows(g.field, {{1, 0}, {0, 2}})};
  auto classes = prime_order_classes(g);
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].element_order, 2u);
}

TEST(ClassEquation, SizesSumToH) {
  for (const char* name : {"m11_f3_5a.json", "m11_f2_10.json", "m12_f2_10.json"}) {
    ModuleAction m = module(name);
    ClassOptions o;
    o.compute_eigen = false;
    auto t = projective_classes(m.group, o);
    std::uint64_t total = 0;
    for (const auto& c : t.classes) {
      total += c.size;
      EXPECT_EQ(t.h_order % c.size, 0u);
    }
    EXPECT_EQ(total, t.h_order) << name;
  }
}

TEST(AdjoinScalars, TrivialIsUnchanged) {
  GroupSpec g = m11_on_11_points(3);
  GroupSpec h = adjoin_scalars(g, 1);
  EXPECT_EQ(h.generators.size(), g.generators.size());
  EXPECT_EQ(h.scalar_order, 1u);
}

TEST(AdjoinScalars, ZTimesM11OverF9) {
  ModuleAction m = module("m11_f3_5a.json", 2, 8);
  EXPECT_EQ(m.group.scalar_order, 8u);
  EXPECT_EQ(enumerate(m.group).order(), 63360u);
}

TEST(AdjoinScalars, RejectsNonDivisor) {
  GroupSpec g;
  g.field = Field::make(2, 2);
  g.d = 2;
  g.generators = {Mat::identity(g.field, 2)};
  EXPECT_THROW(adjoin_scalars(g, 2), Error);
}

TEST(AdjoinScalars, OrderMultipliesOnFixtures) {
  for (std::uint64_t z : {2u, 4u}) {
    ModuleAction m = module("m11_f3_5a.json", 2, z);
    EXPECT_EQ(enumerate(m.group).order(), 7920 * z);
  }
}

TEST(RandomElement, Deterministic) {
  GroupSpec g = m11_on_11_points(3);
  EXPECT_EQ(random_element(g, 42), random_element(g, 42));
}

TEST(RandomElement, OrdersDivideGroupOrder) {
  GroupSpec g = m11_on_11_points(2);
  ProductReplacement pr(g, 5);
  for (int i = 0; i < 10000; ++i) EXPECT_EQ(7920 % element_order(pr.next()), 0u);
}

TEST(RandomElement, GroupOfOrderTwo) {
  GroupSpec g = minus_identity(3, 3);
  Mat id = Mat::identity(g.field, 3);
  for (std::uint64_t s = 0; s < 50; ++s) {
    Mat x = random_element(g, s);
    EXPECT_TRUE(x == id || x == g.generators[0]);
  }
}

TEST(GroupSpecValidate, RejectsSingularGenerator) {
  GroupSpec g;
  g.field = Field::prime(3);
  g.d = 2;
  g.generators = {Mat::from_rows(g.field, {{1, 1}, {1, 1}})};
  EXPECT_THROW(g.validate(), Error);
}
