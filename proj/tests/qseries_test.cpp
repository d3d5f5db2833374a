#include <gtest/gtest.h>

#include "oracles.hpp"
#include "schmidt/enumerate.hpp"
#include "schmidt/errors.hpp"
#include "schmidt/qseries.hpp"

using namespace schmidt;

namespace {

std::vector<BigInt> big(const std::vector<Int>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Series, EulerPentagonal) {
  EXPECT_EQ(pochhammer(1, 1, 5).coeffs(), big({1, -1, -1, 0, 0, 1}));
  EXPECT_EQ(pochhammer(1, 1, 60).coeffs(), big(oracle::pentagonal(60)));
}

TEST(Series, InverseTimesSelfIsOne) {
  const auto e = pochhammer(1, 1, 40);
  EXPECT_EQ(e * series_invert(e), TruncatedSeries::one(40));
  EXPECT_EQ(series_invert(e), partition_gf(40));
}

TEST(Series, InvertRequiresUnitConstant) {
  EXPECT_THROW(series_invert(TruncatedSeries(3, {2, 1})), DomainError);
  EXPECT_THROW(series_invert(TruncatedSeries(3)), DomainError);
  EXPECT_EQ(series_invert(TruncatedSeries(3, {-1})).coeffs(), big({-1, 0, 0, 0}));
}

TEST(Series, MixedOrderIsAnError) {
  EXPECT_THROW(series_mul(TruncatedSeries::one(3), TruncatedSeries::one(4)), DomainError);
  EXPECT_THROW(series_add(TruncatedSeries::one(3), TruncatedSeries::one(4)), DomainError);
  EXPECT_THROW(TruncatedSeries(1, {1, 2, 3}), DomainError);
}

TEST(Series, PowMatchesRepeatedProduct) {
  const auto p = partition_gf(20);
  EXPECT_EQ(series_pow(p, 3), p * p * p);
  EXPECT_EQ(series_pow(p, 0), TruncatedSeries::one(20));
}

TEST(Series, PartitionAndOverpartitionMatchEnumeration) {
  const auto p = partition_gf(20);
  const auto o = overpartition_gf(20);
  for (Int n = 0; n <= 20; ++n) {
    EXPECT_EQ(p[static_cast<std::size_t>(n)], partitions(n).size());
    EXPECT_EQ(o[static_cast<std::size_t>(n)], overpartitions(n).size());
  }
}

TEST(Series, LargeCoefficientsStayExact) {
  // p(500)
  EXPECT_EQ(partition_gf(500)[500], BigInt("2300165032574323995027"));
}

TEST(Series, DiamondSpotValues) {
  const auto d = diamond_gf(1, 6);
  EXPECT_EQ(d[0], 1);
  EXPECT_EQ(d[1], 4);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(d[n], diamonds(static_cast<Int>(n), 1).size()) << n;
}

TEST(Series, BivariateTableMatchesEnumeration) {
  const auto table = bivariate_over_gf(8);
  for (Int n = 0; n <= 8; ++n) {
    std::vector<BigInt> by_s(9);
    for (const auto& p : overpartitions(n)) by_s[p.overline_count()] += 1;
    for (std::size_t s = 0; s <= 8; ++s) EXPECT_EQ(table[static_cast<std::size_t>(n)][s], by_s[s]);
  }
}

TEST(Parser, ProductExpressions) {
  EXPECT_EQ(evaluate_product("POCH(1,1)^1", 5).coeffs(), big({1, -1, -1, 0, 0, 1}));
  EXPECT_EQ(evaluate_product("POCH(1,1)", 5), pochhammer(1, 1, 5));
  EXPECT_EQ(evaluate_product("POCH(2,2)^1 / POCH(1,1)^4", 12), diamond_gf(1, 12));
  EXPECT_EQ(evaluate_product(" 1 / POCH(1,1)^2", 10), series_pow(partition_gf(10), 2));
  EXPECT_EQ(evaluate_product("POCH(1,1) * POCH(1,1)", 10), series_pow(pochhammer(1, 1, 10), 2));
}

TEST(Parser, RejectsGarbage) {
  EXPECT_THROW(evaluate_product("POCH(1)", 5), DomainError);
  EXPECT_THROW(evaluate_product("POCH(0,1)", 5), DomainError);
  EXPECT_THROW(evaluate_product("POCH(1,1) +", 5), DomainError);
  EXPECT_THROW(evaluate_product("", 5), DomainError);
}
