#include <gtest/gtest.h>

#include <random>

#include "fixtures_common.hpp"
#include "saxl/error.hpp"
#include "saxl/modtools.hpp"

using namespace saxl;

namespace {

ModuleAction m11_perm(std::uint32_t p, bool twelve = false) {
  auto pf = twelve ? testsupport::m11_perm12() : testsupport::m11_perm11();
  return perm_module(pf.generators, Field::prime(p));
}

bool closed(const ModuleAction& c) {
  // basis rows of the constituent, mapped by ambient generators, stay in the span
  const Field& f = c.field();
  Echelon e = rref(f, [&] {
    std::vector<std::vector<Elem>> rows;
    for (const auto& b : c.basis) rows.push_back(b.coords());
    return rows;
  }(), c.group.d);
  for (const auto& g : c.group.generators) {
    for (const auto& b : c.basis) {
      auto r = reduce_against(f, e, (b * g).coords());
      if (std::any_of(r.begin(), r.end(), [](Elem x) { return x != 0; })) return false;
    }
  }
  return true;
}

/// Restricted generators satisfy the same words as the ambient ones: a word
/// applied to a basis vector ambiently equals the restricted word mapped back.
bool same_relations(const ModuleAction& c, unsigned words, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> gen(0, c.generators.size() - 1);
  for (unsigned w = 0; w < words; ++w) {
    Mat amb = Mat::identity(c.field(), c.group.d), res = Mat::identity(c.field(), c.dim());
    for (int len = 0; len < 10; ++len) {
      std::size_t i = gen(rng);
      amb = amb * c.group.generators[i];
      res = res * c.generators[i];
    }
    for (std::size_t r = 0; r < c.dim(); ++r) {
      Vec lhs = c.basis[r] * amb;
      Vec rhs = Vec::zero(c.field(), c.group.d);
      for (std::size_t j = 0; j < c.dim(); ++j) rhs = rhs + c.basis[j].scaled(res(r, j));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(PermModule, IdentityPermutation) {
  std::vector<Permutation> id{{0, 1, 2, 3}};
  ModuleAction m = perm_module(id, Field::prime(5));
  EXPECT_TRUE(m.generators[0].is_identity());
}

TEST(PermModule, M11ElevenPointsOverF3) {
  ModuleAction m = m11_perm(3);
  EXPECT_EQ(m.dim(), 11u);
  EXPECT_EQ(enumerate(m.group).order(), 7920u);
}

TEST(PermModule, TranspositionOverF2) {
  std::vector<Permutation> t{{1, 0}};
  ModuleAction m = perm_module(t, Field::prime(2));
  EXPECT_EQ(m.generators[0], Mat::from_rows(Field::prime(2), {{0, 1}, {1, 0}}));
}

TEST(PermModule, RejectsMixedDegrees) {
  std::vector<Permutation> bad{{1, 0}, {0, 2, 1}};
  EXPECT_THROW(perm_module(bad, Field::prime(2)), Error);
  std::vector<Permutation> notbij{{0, 0, 1}};
  EXPECT_THROW(perm_module(notbij, Field::prime(2)), Error);
}

TEST(DeletedModule, SignActionOnTwoPoints) {
  std::vector<Permutation> t{{1, 0}};
  ModuleAction d = deleted_module(perm_module(t, Field::prime(3)));
  ASSERT_EQ(d.dim(), 1u);
  EXPECT_EQ(d.generators[0](0, 0), 2u);
}

TEST(DeletedModule, M11Dimensions) {
  EXPECT_EQ(deleted_module(m11_perm(3)).dim(), 10u);
  EXPECT_EQ(deleted_module(m11_perm(2)).dim(), 10u);
  // 12 = 0 mod 3: the sum-zero space contains the all-ones vector
  ModuleAction d = deleted_module(m11_perm(3, true));
  EXPECT_EQ(d.dim(), 11u);
  Vec ones(Field::prime(3), std::vector<Elem>(12, 1));
  EXPECT_EQ(spin(ones, m11_perm(3, true).generators).size(), 1u);
}

TEST(Spin, FixedVectorGivesLine) {
  ModuleAction m = m11_perm(3);
  Vec ones(m.field(), std::vector<Elem>(11, 1));
  auto s = spin(ones, m);
  EXPECT_EQ(s.size(), 1u);
}

TEST(Spin, RandomSeedInIrreducibleFillsModule) {
  ModuleAction m = testsupport::module("m11_f2_10.json");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    std::vector<Elem> c(10);
    for (auto& x : c) x = rng() & 1;
    Vec v(m.field(), c);
    if (v.is_zero()) continue;
    EXPECT_EQ(spin(v, m).size(), 10u);
  }
}

TEST(Spin, IndependentOfGeneratorOrder) {
  ModuleAction m = m11_perm(3, true);
  std::vector<Mat> rev(m.generators.rbegin(), m.generators.rend());
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    std::vector<Elem> c(12, 0);
    c[rng() % 12] = 1;
    c[rng() % 12] = 2;
    Vec v(m.field(), c);
    if (v.is_zero()) continue;
    EXPECT_EQ(spin(v, m.generators), spin(v, rev));
  }
}

TEST(Split, IrreducibleInputIsSingleton) {
  ModuleAction m = testsupport::module("m11_f2_10.json");
  SplitResult s = split(m, 30, 1);
  ASSERT_EQ(s.constituents.size(), 1u);
  EXPECT_EQ(s.constituents[0].dim(), 10u);
  EXPECT_TRUE(s.complete);
}

class SplitProperties : public ::testing::TestWithParam<std::pair<std::uint32_t, bool>> {};

TEST_P(SplitProperties, ConstituentsClosedAndSumToDim) {
  auto [p, twelve] = GetParam();
  ModuleAction m = m11_perm(p, twelve);
  SplitResult s = split(m, 50, 11);
  std::size_t total = 0;
  for (const auto& c : s.constituents) {
    total += c.dim();
    EXPECT_TRUE(spin_irreducible(c));
    EXPECT_TRUE(closed(c));
    EXPECT_TRUE(same_relations(c, 100, 17));
  }
  EXPECT_EQ(total, m.dim());
  EXPECT_TRUE(s.complete);
}

INSTANTIATE_TEST_SUITE_P(M11, SplitProperties,
                         ::testing::Values(std::pair{3u, true}, std::pair{2u, false}, std::pair{3u, false},
                                           std::pair{5u, true}, std::pair{2u, true}));

TEST(Split, TwelvePointM11OverF3HasTwoFives) {
  SplitResult s = split(m11_perm(3, true), 50, 11);
  std::vector<std::size_t> dims;
  for (const auto& c : s.constituents) dims.push_back(c.dim());
  EXPECT_EQ(dims, (std::vector<std::size_t>{5, 5, 1, 1}));
}

TEST(Submodule, QuotientDimension) {
  ModuleAction m = m11_perm(3);
  Vec ones(m.field(), std::vector<Elem>(11, 1));
  auto sub = spin(ones, m);
  ModuleAction q = quotient(m, sub);
  EXPECT_EQ(q.dim(), 10u);
  EXPECT_TRUE(same_relations(q, 20, 2));
  ModuleAction s = submodule(m, sub);
  EXPECT_EQ(s.dim(), 1u);
  EXPECT_TRUE(s.generators[0].is_identity());
}

TEST(ScalarExtend, KeepsOrderAndDimension) {
  ModuleAction m = scalar_extend(testsupport::module("m11_f3_5a.json"), 2);
  EXPECT_EQ(m.field().order(), 9u);
  EXPECT_EQ(m.dim(), 5u);
  EXPECT_EQ(enumerate(m.as_group()).order(), 7920u);
}

TEST(ExteriorSquare, DimensionAndTrace) {
  ModuleAction five = testsupport::module("m11_f3_5a.json");
  ModuleAction ten = exterior_square(five);
  EXPECT_EQ(ten.dim(), 10u);
  const Field& f = five.field();
  // trace(L2 g) = (tr(g)^2 - tr(g^2)) / 2
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) {
    Mat g = Mat::identity(f, 5), w = Mat::identity(f, 10);
    for (int j = 0; j < 6; ++j) {
      std::size_t k = rng() % five.generators.size();
      g = g * five.generators[k];
      w = w * ten.generators[k];
    }
    auto trace = [&](const Mat& a) {
      Elem t = 0;
      for (std::size_t r = 0; r < a.dim(); ++r) t = f.add(t, a(r, r));
      return t;
    };
    Elem t1 = trace(g), t2 = trace(g * g);
    EXPECT_EQ(trace(w), f.mul(f.sub(f.mul(t1, t1), t2), f.inv(2)));
  }
}
