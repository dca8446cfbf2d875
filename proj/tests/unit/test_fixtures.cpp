#include <gtest/gtest.h>

#include "fixtures_common.hpp"
#include "saxl/error.hpp"

using namespace saxl;

TEST(FixtureFiles, AllModulesLoadWithExpectedShape) {
  struct Want {
    const char* name;
    std::uint64_t q;
    std::size_t d;
  };
  for (auto w : {Want{"m11_f3_5a.json", 3, 5}, Want{"m11_f3_10a.json", 3, 10}, Want{"m11_f3_10b.json", 3, 10},
                 Want{"m11_f3_10p.json", 3, 10}, Want{"m11_f2_10.json", 2, 10}, Want{"m11_f5_10.json", 5, 10},
                 Want{"m11_f5_11.json", 5, 11}, Want{"m12_f2_10.json", 2, 10}, Want{"m12_f3_10.json", 3, 10},
                 Want{"m12_f5_11.json", 5, 11}, Want{"m12_f7_11.json", 7, 11}}) {
    ModuleAction m = load_module(testsupport::fixture(w.name));
    EXPECT_EQ(m.field().order(), w.q) << w.name;
    EXPECT_EQ(m.dim(), w.d) << w.name;
    EXPECT_TRUE(spin_irreducible(m)) << w.name;
  }
}

TEST(FixtureFiles, GroupOrdersByEnumeration) {
  for (const char* name : {"m11_f3_5a.json", "m11_f3_10a.json", "m11_f2_10.json"}) {
    GroupSpec g = load_module(testsupport::fixture(name)).as_group();
    g.known_order.reset();
    EXPECT_EQ(enumerate(g).order(), 7920u) << name;
  }
  GroupSpec g = load_module(testsupport::fixture("m12_f2_10.json")).as_group();
  g.known_order.reset();
  EXPECT_EQ(enumerate(g).order(), 95040u);
}

TEST(FixtureFiles, PermutationGroupOrders) {
  EXPECT_EQ(ref::perm_closure(testsupport::perms(testsupport::m11_perm12())).size(), 7920u);
  EXPECT_EQ(ref::perm_closure(testsupport::perms(testsupport::m12_perm12())).size(), 95040u);
}

TEST(FixtureJson, GroupRoundTrip) {
  ModuleAction m = load_module(testsupport::fixture("m11_f3_5a.json"));
  GroupSpec g = scalar_extend(m, 2).as_group();
  GroupSpec back = group_from_json(group_to_json(g));
  EXPECT_EQ(back.field, g.field);
  EXPECT_EQ(back.generators, g.generators);
  EXPECT_EQ(back.labels.socle, g.labels.socle);
}

TEST(FixtureJson, ClassDataRoundTrip) {
  ModuleAction m = load_module(testsupport::fixture("m11_f3_5a.json"));
  ClassFixture cf{m.group.labels, m.field(), m.dim(), module_classes(m)};
  ClassFixture back = classes_from_json(classes_to_json(cf));
  ASSERT_EQ(back.classes.size(), cf.classes.size());
  for (std::size_t i = 0; i < cf.classes.size(); ++i) {
    EXPECT_EQ(back.classes[i].class_size, cf.classes[i].class_size);
    EXPECT_EQ(back.classes[i].alpha, cf.classes[i].alpha);
    EXPECT_EQ(back.classes[i].eigen->dims(), cf.classes[i].eigen->dims());
    EXPECT_EQ(class_eigen_sum_exact(back.classes[i], 9, 5), class_eigen_sum_exact(cf.classes[i], 9, 5));
  }
}

TEST(FixtureJson, VerdictRoundTrip) {
  Verdict v;
  v.case_id = "x";
  v.technique = Technique::T3;
  v.star_holds = Tri::True;
  v.b2 = Tri::True;
  v.evidence.regular_count = 5;
  v.evidence.group_order = "7920";
  Verdict back = verdict_from_json(verdict_to_json(v));
  EXPECT_EQ(back.technique, v.technique);
  EXPECT_EQ(back.star_holds, v.star_holds);
  EXPECT_EQ(back.evidence.regular_count, v.evidence.regular_count);
}

TEST(FixtureJson, MatrixEntriesValidated) {
  Field f = Field::prime(3);
  EXPECT_THROW(mat_from_json(json::parse("[[0,1],[1,5]]"), f), Error);
  EXPECT_THROW(mat_from_json(json::parse("[[0,1],[1]]"), f), Error);
  json perm = {{"kind", "permutation_group"}, {"degree", 3}, {"generators", {{1, 1, 2}}}};
  EXPECT_THROW(perm_from_json(perm), Error);
}

TEST(FixtureJson, MissingFileIsIo) {
  try {
    load_json_file("/nonexistent/fixture.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}
