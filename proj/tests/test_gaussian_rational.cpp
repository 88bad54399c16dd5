#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "holocert/errors.hpp"
#include "holocert/gaussian_rational.hpp"

using holocert::GR;

namespace {

GR random_gr(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

}  // namespace

TEST(GaussianRational, MultiplyAndInvert) {
  const GR a = GR::parse("2-1i");
  EXPECT_EQ(a * a.inv(), GR(1));
  EXPECT_EQ((a * a).to_string(), "3-4i");
  EXPECT_EQ(a.inv().to_string(), "2/5+1/5i");
}

TEST(GaussianRational, NormalizesToLowestTerms) {
  const GR z(mpq_class(6, 4), mpq_class(-10, 15));
  EXPECT_EQ(z.to_string(), "3/2-2/3i");
  EXPECT_EQ(z, GR::parse("3/2-2/3i"));
}

TEST(GaussianRational, LiteralRoundTrip) {
  for (const char* s : {"2-1i", "0+2i", "1+0i", "-3/7+5/2i", "0+0i", "-1-1i"}) {
    EXPECT_EQ(GR::parse(s).to_string(), s) << s;
  }
}

TEST(GaussianRational, ShortLiterals) {
  EXPECT_EQ(GR::parse("i"), GR::i());
  EXPECT_EQ(GR::parse("-i"), -GR::i());
  EXPECT_EQ(GR::parse("2i"), GR(0, 2));
  EXPECT_EQ(GR::parse("  5 "), GR(5));
  EXPECT_EQ(GR::parse("1-i"), GR(1, -1));
  EXPECT_EQ(GR::parse("-1/2"), GR::ratio(-1, 2));
}

TEST(GaussianRational, MalformedLiteralsThrow) {
  for (const char* s : {"", "abc", "1/0", "2+", "2+3", "1/", "3i+2", "1+2i3"}) {
    EXPECT_THROW(GR::parse(s), holocert::ParseError) << s;
  }
}

TEST(GaussianRational, DivisionByZeroThrows) {
  EXPECT_THROW(GR(0).inv(), holocert::DivisionByZero);
  EXPECT_THROW(GR(3) / GR(0), holocert::DivisionByZero);
}

TEST(GaussianRational, FieldAxiomsOnRandomInstances) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const GR a = random_gr(rng);
    const GR b = random_gr(rng);
    const GR c = random_gr(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, GR(0));
    if (!a.is_zero()) EXPECT_EQ((b / a) * a, b);
  }
}

TEST(GaussianRational, Powers) {
  EXPECT_EQ(GR::i().pow(4), GR(1));
  EXPECT_EQ(GR(1, 1).pow(2), GR(0, 2));
  EXPECT_EQ(GR(5).pow(0), GR(1));
}

TEST(GaussianRational, CompactForm) {
  EXPECT_EQ(GR(2).to_compact_string(), "2");
  EXPECT_EQ(GR(0, 2).to_compact_string(), "2i");
  EXPECT_EQ(GR(2, -1).to_compact_string(), "(2-1i)");
  EXPECT_EQ(GR(0, mpq_class(-1, 3)).to_compact_string(), "-1/3i");
}

TEST(GaussianRational, IntegerTest) {
  EXPECT_TRUE(GR(-4).is_integer());
  EXPECT_FALSE(GR::ratio(1, 3).is_integer());
  EXPECT_FALSE(GR(1, 1).is_integer());
}
