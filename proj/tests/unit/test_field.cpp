#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "saxl/error.hpp"
#include "saxl/field.hpp"
#include "fixtures_common.hpp"

using namespace saxl;

TEST(FieldMake, PrimeFieldUsesX) {
  Field f = Field::make(3, 1);
  EXPECT_EQ(f.order(), 3u);
  EXPECT_EQ(f.characteristic(), 3u);
  EXPECT_TRUE(f.is_prime_field());
}

TEST(FieldMake, F4DefaultModulus) {
  Field f = Field::make(2, 2);
  EXPECT_EQ(f.modulus(), (std::vector<Elem>{1, 1, 1}));
}

TEST(FieldMake, F9WithSuppliedModulus) {
  EXPECT_TRUE(ref::irreducible_by_trial(3, {1, 0, 1}));
  Field f = Field::make(3, 2, std::vector<Elem>{1, 0, 1});
  EXPECT_EQ(f.order(), 9u);
  // x^2 = -1
  EXPECT_EQ(f.mul(3, 3), 2u);
}

TEST(FieldMake, RejectsCompositeP) {
  try {
    Field::make(6, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
}

TEST(FieldMake, RejectsReducibleModulus) {
  // x^2 + 2 = (x + 1)(x + 2) over F_3
  try {
    Field::make(3, 2, std::vector<Elem>{2, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ReducibleModulus);
  }
}

TEST(FieldMake, DefaultModulusIsLeastIrreducible) {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 8}}) {
    Field f = Field::make(p, k);
    std::vector<ref::u32> mod(f.modulus().begin(), f.modulus().end());
    EXPECT_TRUE(ref::irreducible_by_trial(p, mod)) << f.name();
    // no smaller monic candidate (lexicographic in c_{k-1} .. c_0) is irreducible
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    auto rank = [&](const std::vector<ref::u32>& c) {
      std::uint64_t r = 0;
      for (unsigned i = k; i-- > 0;) r = r * p + c[i];
      return r;
    };
    for (std::uint64_t x = 0; x < rank(mod); ++x) {
      std::vector<ref::u32> c(k + 1, 0);
      std::uint64_t y = x;
      for (unsigned i = 0; i < k; ++i) {
        c[i] = static_cast<ref::u32>(y % p);
        y /= p;
      }
      c[k] = 1;
      EXPECT_FALSE(ref::irreducible_by_trial(p, c));
    }
  }
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {};

TEST_P(FieldAxioms, ThousandRandomTriples) {
  auto [p, k] = GetParam();
  Field f = Field::make(p, k);
  ref::NaiveField n = testsupport::naive(f);
  std::mt19937_64 rng(p * 100 + k);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(f.order() - 1));
  for (int i = 0; i < 1000; ++i) {
    Elem a = pick(rng), b = pick(rng), c = pick(rng);
    ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    ASSERT_EQ(f.add(a, f.neg(a)), 0u);
    if (a != 0) {
      ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
    }
    if (f.order() <= 1024) {
      ASSERT_EQ(f.mul(a, b), n.mul(a, b));
      ASSERT_EQ(f.add(a, b), n.add(a, b));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u},
                                           std::pair{3u, 2u}, std::pair{5u, 1u}, std::pair{7u, 1u},
                                           std::pair{3u, 3u}, std::pair{2u, 6u}, std::pair{2u, 8u},
                                           std::pair{3u, 8u}, std::pair{2u, 17u}, std::pair{65521u, 1u}));

TEST(FieldOrder, PrimitiveHasFullOrder) {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 2}, {2, 4}, {5, 1}, {3, 5}}) {
    Field f = Field::make(p, k);
    EXPECT_EQ(f.multiplicative_order(f.primitive()), f.order() - 1);
  }
}
