#include <gtest/gtest.h>

#include <climits>

#include "nsalg/error.hpp"
#include "nsalg/rat.hpp"
#include "support.hpp"

using nsalg::Rat;
using nsalg::testkit::Gen;

TEST(Rat, ReducesToLowestTerms) {
  EXPECT_EQ(Rat(6, -4).str(), "-3/2");
  EXPECT_EQ(Rat(0, 7).str(), "0");
  EXPECT_TRUE(Rat(4, 2).is_integer());
}

TEST(Rat, ZeroDenominatorThrows) {
  try {
    Rat(1, 0);
    FAIL() << "expected DivisionByZero";
  } catch (const nsalg::Error& e) {
    EXPECT_EQ(e.code(), nsalg::ErrorCode::DivisionByZero);
  }
  EXPECT_THROW(Rat(1) / Rat(0), nsalg::Error);
}

TEST(Rat, ParsesFractionsAndBigIntegers) {
  EXPECT_EQ(Rat::parse("-10/4"), Rat(-5, 2));
  EXPECT_EQ(Rat::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
  EXPECT_THROW(Rat::parse("1.5"), nsalg::Error);
  EXPECT_THROW(Rat::parse("1/"), nsalg::Error);
  EXPECT_THROW(Rat::parse(""), nsalg::Error);
}

TEST(Rat, OverflowSpillsAndShrinksBack) {
  Rat big = Rat(INT64_MAX) + Rat(1);
  EXPECT_FALSE(big.is_small());
  EXPECT_EQ(big.str(), "9223372036854775808");
  Rat back = big - Rat(1);
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, Rat(INT64_MAX));
  Rat m = Rat(INT64_MIN);
  EXPECT_EQ((-m).str(), "9223372036854775808");
}

// Arithmetic agrees with GMP on random operands near the int64 boundary.
TEST(RatProperty, MatchesMpqArithmetic) {
  Gen g;
  const std::int64_t edges[] = {0, 1, -1, 2, 3, INT64_MAX, INT64_MIN + 1, INT64_MAX / 3, 1LL << 40, -(1LL << 33)};
  auto pick = [&] {
    std::int64_t n = edges[g.index(std::size(edges))] + g.integer(-2, 2);
    std::int64_t d = edges[g.index(std::size(edges))];
    if (d <= 0) d = 1 + g.integer(0, 5);
    return std::pair{n, d};
  };
  for (int iter = 0; iter < 2000; ++iter) {
    auto [an, ad] = pick();
    auto [bn, bd] = pick();
    Rat a(an, ad), b(bn, bd);
    mpq_class qa(mpz_class(std::to_string(an)), mpz_class(std::to_string(ad)));
    mpq_class qb(mpz_class(std::to_string(bn)), mpz_class(std::to_string(bd)));
    qa.canonicalize();
    qb.canonicalize();
    ASSERT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
    ASSERT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
    ASSERT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
    if (!b.is_zero()) ASSERT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
    ASSERT_EQ(a < b, qa < qb);
    ASSERT_EQ(a == b, qa == qb);
    // Canonical storage: equal values have equal representations.
    ASSERT_EQ(Rat::from_mpq((a + b).to_mpq()).is_small(), (a + b).is_small());
  }
}

TEST(RatProperty, ParseStrRoundTrip) {
  Gen g;
  for (int iter = 0; iter < 500; ++iter) {
    Rat r = g.rat() * Rat(g.integer(-1000000, 1000000)) / Rat(g.integer(1, 999));
    EXPECT_EQ(Rat::parse(r.str()), r);
  }
}
