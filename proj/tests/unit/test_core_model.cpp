#include <gtest/gtest.h>

#include <set>

#include "kronkit/error.hpp"
#include "kronkit/instance.hpp"
#include "kronkit/rational.hpp"
#include "support.hpp"

using namespace kronkit;

using kt::error_of;

TEST(Rational, LowestTermsPositiveDenominator) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(Integer(0), Integer(-7)).str(), "0/1");
  EXPECT_EQ(Rational(2).str(), "2/1");
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-3/7").str(), "-3/7");
  EXPECT_EQ(Rational::parse("10/4"), Rational(Integer(5), Integer(2)));
  EXPECT_EQ(Rational::parse("12"), Rational(12));
  EXPECT_EQ(Rational::parse("+5/1"), Rational(5));
  EXPECT_EQ(error_of([] { Rational::parse("1/0"); }), Errc::ParseError);
  EXPECT_THROW(Rational(Integer(1), Integer(0)), std::domain_error);
  EXPECT_EQ(error_of([] { Rational::parse("1/x"); }), Errc::ParseError);
  EXPECT_EQ(error_of([] { Rational::parse(""); }), Errc::ParseError);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(GaussianRational(1) / GaussianRational(), std::domain_error);
}

TEST(Rational, PropertyRoundTrips) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const Rational a = kt::random_big_rational(rng);
    const Rational b = kt::random_big_rational(rng);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) {
      EXPECT_EQ((a * b) / b, a);
    }
    EXPECT_EQ(Rational::parse(a.str()), a);
    EXPECT_GT(a.denominator(), 0);
    EXPECT_EQ(gcd(a.numerator(), a.denominator()), a.is_zero() ? a.denominator() : Integer(1));
  }
}

TEST(Rational, OrderingMatchesCrossMultiplication) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    const Rational a = kt::random_rational(rng);
    const Rational b = kt::random_rational(rng);
    const Integer lhs = a.numerator() * b.denominator();
    const Integer rhs = b.numerator() * a.denominator();
    EXPECT_EQ(a < b, lhs < rhs);
    EXPECT_EQ(a == b, lhs == rhs);
  }
}

TEST(GaussianRational, RingOperations) {
  const GaussianRational i(0, 1);
  EXPECT_EQ(i * i, GaussianRational(-1));
  const GaussianRational z(Rational(3), Rational(-4));
  EXPECT_EQ(z.norm2(), Rational(25));
  EXPECT_EQ(z * z.conj(), GaussianRational(25));
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const auto a = kt::random_gaussian(rng);
    const auto b = kt::random_gaussian(rng);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a * b).norm2(), a.norm2() * b.norm2());
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(YoungDiagram, Examples) {
  const auto d = parse_young({2, 1});
  EXPECT_EQ(d.boxes(), 3);
  EXPECT_EQ(d.height(), 2);
  const auto e = parse_young({3});
  EXPECT_EQ(e.boxes(), 3);
  EXPECT_EQ(e.height(), 1);
  EXPECT_EQ(error_of([] { parse_young({1, 2}); }), Errc::NotWeaklyDecreasing);
  EXPECT_EQ(error_of([] { parse_young({2, 0}); }), Errc::NonPositiveRow);
  EXPECT_EQ(error_of([] { parse_young({-1}); }), Errc::NonPositiveRow);
  EXPECT_EQ(error_of([] { parse_young(std::span<const int>()); }), Errc::EmptyDiagram);
}

TEST(YoungDiagram, PaddingAndStretching) {
  const auto d = parse_young({3, 1});
  EXPECT_EQ(d.padded(4), (std::vector<int>{3, 1, 0, 0}));
  EXPECT_EQ(d.stretched(3), parse_young({9, 3}));
  EXPECT_EQ(d.str(), "3,1");
}

TEST(YoungDiagram, PropertySerializeRoundTrip) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 300; ++t) {
    const int k = static_cast<int>(kt::uniform(rng, 1, 30));
    const auto d = kt::random_diagram(rng, k, 6);
    EXPECT_EQ(parse_young(d.str()), d);
    EXPECT_EQ(parse_young(std::span<const int>(d.rows())), d);
    EXPECT_EQ(d.boxes(), k);
  }
}

TEST(KronInstance, Examples) {
  const auto inst = kt::instance({2}, {2}, {1, 1}, 2);
  EXPECT_EQ(inst.m(), 2);
  EXPECT_FALSE(inst.rank_overridden());
  EXPECT_EQ(inst.padded(Subsystem::A), (std::vector<int>{2, 0}));

  EXPECT_EQ(error_of([] { kt::instance({2}, {2}, {1, 1}, 3); }), Errc::BoxCountMismatch);

  const auto padded = kt::instance({1}, {1}, {1}, 1, 2);
  EXPECT_EQ(padded.m(), 2);
  EXPECT_TRUE(padded.rank_overridden());
  for (Subsystem s : kSubsystems) EXPECT_EQ(padded.padded(s), (std::vector<int>{1, 0}));

  EXPECT_EQ(error_of([] { kt::instance({1, 1}, {2}, {2}, 2, 1); }), Errc::RankTooSmall);
}

TEST(KronInstance, Stretched) {
  const auto inst = kt::instance({2, 1}, {3}, {1, 1, 1}, 3).stretched(2);
  EXPECT_EQ(inst.k(), 6);
  EXPECT_EQ(inst.m(), 3);
  EXPECT_EQ(inst.lambda(Subsystem::C), parse_young({2, 2, 2}));
}

TEST(WeightIndex, Examples) {
  EXPECT_EQ(weight_index(2, 1, 1, 1), 0U);
  EXPECT_EQ(weight_index(2, 2, 2, 2), 7U);
  EXPECT_EQ(weight_index(2, 1, 2, 1), 2U);
  EXPECT_EQ(error_of([] { weight_index(2, 3, 1, 1); }), Errc::IndexOutOfRange);
  EXPECT_EQ(error_of([] { weight_index(2, 1, 0, 1); }), Errc::IndexOutOfRange);
}

TEST(WeightIndex, PropertyBijection) {
  for (int m = 1; m <= 5; ++m) {
    std::set<std::size_t> seen;
    std::size_t prev = 0;
    bool first = true;
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        for (int l = 1; l <= m; ++l) {
          const std::size_t idx = weight_index(m, i, j, l);
          EXPECT_LT(idx, static_cast<std::size_t>(m * m * m));
          if (!first) {
            EXPECT_EQ(idx, prev + 1);  // lexicographic
          }
          prev = idx;
          first = false;
          seen.insert(idx);
        }
      }
    }
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(m * m * m));
  }
}
