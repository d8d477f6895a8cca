#include <gtest/gtest.h>

#include <algorithm>

#include "support/random.hpp"
#include "tgembed/eschenburg.hpp"

namespace tgembed {
namespace {

EschParams E(std::array<long, 3> a, std::array<long, 3> b) {
  return {{a[0], a[1], a[2]}, {b[0], b[1], b[2]}};
}

const EschParams kExample = E({2, 0, 0}, {15, -2, -11});

// Applies the index permutations pa to a and pb to b.
EschParams permuted(const EschParams& e, const std::array<int, 3>& pa, const std::array<int, 3>& pb) {
  return {{e.a()[pa[0]], e.a()[pa[1]], e.a()[pa[2]]}, {e.b()[pb[0]], e.b()[pb[1]], e.b()[pb[2]]}};
}

TEST(EschParams, Construction) {
  EXPECT_NO_THROW(kExample);
  EXPECT_NO_THROW(E({0, 0, 0}, {0, 0, 0}));
  try {
    E({1, 0, 0}, {1, 1, 0});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("sum(a) = 1"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("sum(b) = 2"), std::string::npos);
  }
}

TEST(IsFree, Examples) {
  EXPECT_TRUE(is_free(kExample));
  EXPECT_FALSE(is_free(E({0, 0, 0}, {0, 0, 0})));
  EXPECT_TRUE(is_free(E({39, 0, 0}, {55, -3, -13})));
  EXPECT_TRUE(is_free_oracle(kExample));
  EXPECT_FALSE(is_free_oracle(E({0, 0, 0}, {0, 0, 0})));
  EXPECT_TRUE(is_free_oracle(E({1, 1, 1}, {3, 0, 0})));
}

TEST(IsFree, AgreesWithOracle) {
  testing::Gen gen;
  int free_count = 0;
  for (int i = 0; i < 10000; ++i) {
    const EschParams e = gen.esch(60);
    const bool f = is_free(e);
    free_count += f;
    ASSERT_EQ(f, is_free_oracle(e)) << e;
  }
  EXPECT_GT(free_count, 100);  // the sample must exercise both outcomes
}

TEST(KernelOrder, Examples) {
  EXPECT_EQ(kernel_order(kExample), 1);
  EXPECT_EQ(kernel_order(E({2, 2, 2}, {6, 0, 0})), 2);
  EXPECT_EQ(kernel_order(E({0, 0, 0}, {0, 0, 0})), 0);
}

TEST(Effectivize, Examples) {
  EXPECT_EQ(effectivize(E({2, 2, 2}, {6, 0, 0})), E({1, 1, 1}, {3, 0, 0}));
  EXPECT_EQ(effectivize(kExample), kExample);
  EXPECT_EQ(effectivize(E({5, 5, 5}, {9, 3, 3})), E({2, 2, 2}, {4, 1, 1}));
  EXPECT_THROW(effectivize(E({0, 0, 0}, {0, 0, 0})), DegenerateActionError);
}

TEST(Effectivize, NontrivialKernelMeansNotFree) {
  testing::Gen gen;
  int hits = 0;
  for (int i = 0; i < 10000 && hits < 300; ++i) {
    const long g = gen.uniform(2, 6);
    // Build a common-difference structure: all entries congruent mod g.
    const long t = gen.uniform(-5, 5);
    const long a1 = t + g * gen.uniform(-8, 8), a2 = t + g * gen.uniform(-8, 8), a3 = t + g * gen.uniform(-8, 8);
    const long b1 = t + g * gen.uniform(-8, 8), b2 = t + g * gen.uniform(-8, 8);
    const long b3 = a1 + a2 + a3 - b1 - b2;
    const EschParams e({a1, a2, a3}, {b1, b2, b3});
    const Integer k = kernel_order(e);
    if (k < 2) continue;
    ++hits;
    EXPECT_FALSE(is_free(e)) << e;
    EXPECT_EQ(kernel_order(effectivize(e)), 1) << e;
  }
  EXPECT_GE(hits, 300);
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize(E({0, 2, 0}, {15, -11, -2})), kExample);
  EXPECT_EQ(canonicalize(E({1, -1, -1}, {14, -3, -12})), kExample);
  EXPECT_EQ(canonicalize(E({0, 0, 0}, {2, -1, -1})), E({0, 0, 0}, {2, -1, -1}));
}

TEST(Curvature, Examples) {
  EXPECT_TRUE(admits_positive_curvature(kExample));
  EXPECT_FALSE(admits_positive_curvature(E({1, 1, 0}, {2, 1, -1})));
  EXPECT_TRUE(admits_positive_curvature(E({309, 6, 0}, {323, -3, -5})));
  EXPECT_TRUE(is_pc_metric(kExample));
  EXPECT_TRUE(is_pc_metric(E({1, 1, 1}, {-1, 2, 2})));
  EXPECT_FALSE(is_pc_metric(E({1, 1, 1}, {4, 4, -5})));
  EXPECT_TRUE(admits_positive_curvature(E({1, 1, 1}, {4, 4, -5})));
}

TEST(PcNormalForm, Examples) {
  EXPECT_EQ(pc_normal_form(kExample), kExample);
  EXPECT_EQ(pc_normal_form(E({1, 1, 1}, {-1, 2, 2})), E({0, 0, 0}, {2, -1, -1}));
  // The cohomogeneity-one member p = 3 is already in the first chain; the
  // normal form additionally shifts it to min(a) = 0.
  const EschParams p3 = family_cohomogeneity_one(3);
  EXPECT_TRUE(satisfies_first_chain(p3));
  EXPECT_EQ(pc_oriented(p3), p3);
  EXPECT_EQ(pc_normal_form(p3), E({2, 0, 0}, {4, -1, -1}));
  EXPECT_THROW(pc_normal_form(E({1, 1, 1}, {4, 4, -5})), NotPositivelyCurvedError);
}

TEST(H4Order, Examples) {
  EXPECT_EQ(h4_order(kExample), 173);
  EXPECT_EQ(h4_order(E({1, 0, 0}, {1, 0, 0})), 0);
  EXPECT_EQ(h4_order(E({0, 0, 0}, {2, -1, -1})), 3);
}

TEST(Families, Examples) {
  EXPECT_EQ(family_cohomogeneity_one(1), E({1, 1, 1}, {3, 0, 0}));
  EXPECT_EQ(family_cohomogeneity_one(2), E({2, 1, 1}, {4, 0, 0}));
  EXPECT_TRUE(is_free(family_cohomogeneity_one(1)));
  EXPECT_THROW(family_cohomogeneity_one(0), DomainError);
  EXPECT_EQ(family_cohomogeneity_two(FamilyVariant::A, 0), E({39, 0, 0}, {55, -3, -13}));
  EXPECT_EQ(family_cohomogeneity_two(FamilyVariant::B, 0), E({12909, 0, 0}, {12925, -3, -13}));
  EXPECT_EQ(family_cohomogeneity_two(FamilyVariant::A, 1), E({15054, 0, 0}, {15070, -3, -13}));
  EXPECT_THROW(family_cohomogeneity_two(FamilyVariant::A, -1), DomainError);
}

TEST(Families, CohomogeneityOneIsFreeAndPositivelyCurved) {
  for (long p = 1; p <= 1000; ++p) {
    const EschParams e = family_cohomogeneity_one(p);
    ASSERT_TRUE(is_free(e)) << p;
    ASSERT_TRUE(is_pc_metric(e)) << p;
  }
}

TEST(Invariance, ShiftPreservesPredicates) {
  testing::Gen gen;
  for (int i = 0; i < 3000; ++i) {
    const EschParams e = gen.esch(40);
    const EschParams s = e.shifted(gen.uniform(-1000, 1000));
    ASSERT_EQ(is_free(e), is_free(s)) << e;
    ASSERT_EQ(admits_positive_curvature(e), admits_positive_curvature(s)) << e;
    ASSERT_EQ(is_pc_metric(e), is_pc_metric(s)) << e;
    ASSERT_EQ(h4_order(e), h4_order(s)) << e;
    ASSERT_EQ(kernel_order(e), kernel_order(s)) << e;
  }
}

TEST(Invariance, PermutationsPreservePredicates) {
  testing::Gen gen;
  for (int i = 0; i < 1000; ++i) {
    const EschParams e = gen.esch(40);
    for (const auto& pa : detail::kS3) {
      for (const auto& pb : detail::kS3) {
        const EschParams p = permuted(e, pa, pb);
        ASSERT_EQ(is_free(e), is_free(p)) << e;
        ASSERT_EQ(admits_positive_curvature(e), admits_positive_curvature(p)) << e;
        ASSERT_EQ(h4_order(e), h4_order(p)) << e;
      }
      // is_pc_metric: any permutation of a, identity or (b2, b3) swap on b.
      ASSERT_EQ(is_pc_metric(e), is_pc_metric(permuted(e, pa, {0, 1, 2}))) << e;
      ASSERT_EQ(is_pc_metric(e), is_pc_metric(permuted(e, pa, {0, 2, 1}))) << e;
    }
  }
}

TEST(Invariance, NormalFormsAreIdempotentAndPreservePredicates) {
  testing::Gen gen;
  for (int i = 0; i < 3000; ++i) {
    const EschParams e = gen.esch(40);
    const EschParams c = canonicalize(e);
    ASSERT_EQ(canonicalize(c), c);
    ASSERT_EQ(is_free(e), is_free(c));
    ASSERT_EQ(admits_positive_curvature(e), admits_positive_curvature(c));
    ASSERT_EQ(is_pc_metric(e), is_pc_metric(c));
    ASSERT_EQ(h4_order(e), h4_order(c));
    ASSERT_EQ(kernel_order(e), kernel_order(c));
    if (is_pc_metric(e)) {
      const EschParams n = pc_normal_form(e);
      ASSERT_EQ(pc_normal_form(n), n);
      ASSERT_TRUE(satisfies_first_chain(n)) << e;
      ASSERT_EQ(is_free(n), is_free(e));
      ASSERT_EQ(h4_order(n), h4_order(e));
    }
  }
}

TEST(H4Order, OddForFreeSamples) {
  testing::Gen gen;
  for (int i = 0; i < 5000; ++i) {
    const EschParams e = gen.free_esch(60);
    ASSERT_TRUE(is_odd(h4_order(e))) << e;
  }
}

}  // namespace
}  // namespace tgembed
