#include <gtest/gtest.h>

#include "bounds_reference.hpp"
#include "kronkit/ressayre.hpp"

using namespace kronkit;

namespace {

using namespace kt::bounds;

std::string str(const mp::cpp_int& x) { return x.str(); }

}  // namespace

TEST(BoundsCrossCheck, SiegelBound) {
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(siegel_bound(m).get_str(), str(ref_siegel(m))) << "m=" << m;
}

TEST(BoundsCrossCheck, MinGapAndThreshold) {
  for (int m = 1; m <= 8; ++m) {
    for (int k : k_values()) {
      const Rational gap = min_gap(m, k);
      ASSERT_EQ(gap.numerator(), 1);
      ASSERT_EQ(gap.denominator().get_str(), str(ref_gap_den(m, k))) << m << " " << k;
      const Rational t2 = accept_threshold2(m, k);
      ASSERT_EQ(t2.numerator(), 1);
      ASSERT_EQ(t2.denominator().get_str(), str(ref_threshold_den(m, k))) << m << " " << k;
      // threshold = gap / 2
      ASSERT_EQ(t2 * Rational(4), gap * gap);
    }
  }
}

TEST(BoundsCrossCheck, RequiredBits) {
  for (int m = 1; m <= 8; ++m) {
    for (int k : k_values()) {
      const long b = required_bits(m, k);
      ASSERT_EQ(b, ref_required_bits(m, k)) << m << " " << k;
      ASSERT_TRUE(float_condition(m, k, b)) << m << " " << k;
      ASSERT_FALSE(float_condition(m, k, b - 1)) << m << " " << k;
    }
  }
}

// ---------------------------------------------------------------------------
// Truncation error against the stated bounds

TEST(TruncationBounds, ProjectorAndMarginalErrors) {
  std::mt19937_64 rng(52);
  for (int m : {2, 3}) {
    const double dim = m * m * m;
    for (long b : {8L, 16L, 24L}) {
      const double projector_bound = 5.0 * std::pow(dim, 0.25) * std::pow(2.0, -b / 2.0);
      const double marginal_bound = 5.0 * std::pow(m, 0.75) * std::pow(2.0, -b / 2.0);
      for (int t = 0; t < 100; ++t) {
        const auto psi = kt::random_unit_vector(rng, static_cast<std::size_t>(dim));
        const auto e = measure(psi, m, b);
        EXPECT_LE(e.projector_trace_norm, projector_bound) << "m=" << m << " b=" << b;
        EXPECT_LE(e.worst_marginal_frobenius, marginal_bound) << "m=" << m << " b=" << b;
      }
    }
  }
}
