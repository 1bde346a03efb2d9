#include <gtest/gtest.h>

#include "barriers/ordinal.hpp"
#include "oracles.hpp"

using barriers::Ordinal;
using barriers::fund_seq;

namespace {

Ordinal P(const char* text) { return Ordinal::parse(text); }

TEST(Ordinal, CompareExamples) {
  EXPECT_EQ(cmp(Ordinal::omega(), Ordinal::omega()), std::strong_ordering::equal);
  EXPECT_EQ(cmp(P("w^2"), P("w*3")), std::strong_ordering::greater);
  EXPECT_EQ(cmp(P("w^w"), P("w^3*5")), std::strong_ordering::greater);
  EXPECT_LT(P("5"), P("w"));
  EXPECT_LT(P("w^w"), P("w^w + 1"));
}

TEST(Ordinal, ArithmeticExamples) {
  // The library result is compared with the two-level oracle as well as the literal value.
  const oracle::Big w = oracle::Big::mono(oracle::Small::nat(1), 1);
  const oracle::Big w_w = oracle::Big::mono(oracle::Small({0, 1}), 1);
  EXPECT_EQ(oracle::to_ordinal(oracle::mul(w, w_w)), P("w^w"));
  EXPECT_EQ(mul(Ordinal::omega(), P("w^w")), P("w^w"));
  EXPECT_EQ(mul(Ordinal::omega(), P("w^2")), P("w^3"));
  EXPECT_EQ(add(P("w^2"), P("w^2*2")), P("w^2*3"));
  EXPECT_EQ(add(P("3"), Ordinal::omega()), Ordinal::omega());
  EXPECT_EQ(mul(P("w+1"), P("2")), P("w*2+1"));
  EXPECT_EQ(mul(P("2"), Ordinal::omega()), Ordinal::omega());
  EXPECT_EQ(omega_pow(P("w")), P("w^w"));
}

TEST(Ordinal, FundamentalSequenceExamples) {
  EXPECT_EQ(fund_seq(Ordinal::omega(), 3), Ordinal(3));
  EXPECT_EQ(fund_seq(P("w^2"), 2), P("w*2"));
  EXPECT_EQ(fund_seq(P("w^w"), 2), P("w^2"));
  EXPECT_EQ(fund_seq(P("w*2"), 4), P("w+4"));
  EXPECT_EQ(fund_seq(P("w^(w+1)"), 2), P("w^w*2"));
  EXPECT_EQ(fund_seq(P("w^(w*2)"), 3), P("w^(w+3)"));
  EXPECT_EQ(fund_seq(P("w^w^w"), 2), P("w^w^2"));
  EXPECT_THROW(fund_seq(P("w+1"), 0), std::invalid_argument);
  EXPECT_THROW(fund_seq(Ordinal(), 0), std::invalid_argument);
}

TEST(Ordinal, ParseAndPrint) {
  EXPECT_EQ(P("w^w + w^2*3 + 5").to_string(), "w^w + w^2*3 + 5");
  EXPECT_EQ(P("1 + w").to_string(), "w");
  EXPECT_EQ(P("w^(w+1)").to_string(), "w^(w + 1)");
  EXPECT_EQ(P("w^w^w").to_string(), "w^(w^w)");
  EXPECT_EQ(P("0").to_string(), "0");
  EXPECT_EQ(P("w^1").to_string(), "w");
  EXPECT_EQ(P(" w ^ 2 * 3 ").to_string(), "w^2*3");
  EXPECT_THROW(P("w^"), std::invalid_argument);
  EXPECT_THROW(P("w*w"), std::invalid_argument);
  EXPECT_THROW(P("x"), std::invalid_argument);
  EXPECT_THROW(P("(w"), std::invalid_argument);
}

TEST(Ordinal, Classification) {
  EXPECT_TRUE(P("0").is_zero());
  EXPECT_TRUE(P("7").is_finite());
  EXPECT_EQ(P("7").finite_value(), 7u);
  EXPECT_TRUE(P("w+2").is_successor());
  EXPECT_EQ(P("w+2").predecessor(), P("w+1"));
  EXPECT_TRUE(P("w^2*3").is_limit());
  EXPECT_FALSE(P("0").is_limit());
  EXPECT_THROW(P("w").predecessor(), std::invalid_argument);
  EXPECT_THROW(P("w").finite_value(), std::invalid_argument);
}

class OrdinalPool : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    pool_ = oracle::pool(220);
    for (const auto& b : pool_) values_.push_back(oracle::to_ordinal(b));
  }
  static std::vector<oracle::Big> pool_;
  static std::vector<Ordinal> values_;
};

std::vector<oracle::Big> OrdinalPool::pool_;
std::vector<Ordinal> OrdinalPool::values_;

TEST_F(OrdinalPool, PoolIsLargeAndBelowBound) {
  ASSERT_GE(values_.size(), 200u);
  for (const auto& v : values_) EXPECT_LT(v, P("w^w*3"));
}

TEST_F(OrdinalPool, ComparisonAgreesWithOracleAndIsTrichotomous) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    for (std::size_t j = 0; j < values_.size(); ++j) {
      const auto c = cmp(values_[i], values_[j]);
      const int lt = c < 0, eq = c == 0, gt = c > 0;
      ASSERT_EQ(lt + eq + gt, 1);
      ASSERT_EQ(c, oracle::cmp(pool_[i], pool_[j]) <=> 0);
      ASSERT_EQ(cmp(values_[j], values_[i]), -oracle::cmp(pool_[i], pool_[j]) <=> 0);
    }
  }
}

TEST_F(OrdinalPool, ArithmeticAgreesWithOracle) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    for (std::size_t j = 0; j < values_.size(); j += 3) {
      ASSERT_EQ(add(values_[i], values_[j]), oracle::to_ordinal(oracle::add(pool_[i], pool_[j])))
          << values_[i].to_string() << " + " << values_[j].to_string();
      ASSERT_EQ(mul(values_[i], values_[j]), oracle::to_ordinal(oracle::mul(pool_[i], pool_[j])))
          << values_[i].to_string() << " * " << values_[j].to_string();
    }
  }
}

TEST_F(OrdinalPool, AssociativityAndLeftDistributivity) {
  const std::size_t n = 40;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; k += 7) {
        const auto& a = values_[i];
        const auto& b = values_[j];
        const auto& c = values_[k];
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
      }
    }
  }
}

TEST_F(OrdinalPool, FundamentalSequencesIncreaseBelowTheLimit) {
  std::size_t limits = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto& l = values_[i];
    if (!l.is_limit()) continue;
    ++limits;
    for (std::uint64_t n = 0; n <= 10; ++n) {
      const Ordinal a = fund_seq(l, n);
      ASSERT_EQ(a, oracle::to_ordinal(oracle::fund(pool_[i], n))) << l.to_string() << "[" << n << "]";
      ASSERT_LT(a, fund_seq(l, n + 1));
      ASSERT_LT(fund_seq(l, n + 1), l);
    }
  }
  EXPECT_GT(limits, 50u);
}

TEST_F(OrdinalPool, TextRoundTrip) {
  for (const auto& v : values_) ASSERT_EQ(Ordinal::parse(v.to_string()), v) << v.to_string();
}

}  // namespace
