#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schmidt/errors.hpp"

namespace schmidt {

using BigInt = boost::multiprecision::cpp_int;

/// Power series c_0 + c_1 q + ... + c_N q^N with exact integer coefficients.
/// Arithmetic between series of different truncation orders is an error.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  /// Missing trailing coefficients are zero; more than order+1 is an error.
  TruncatedSeries(std::size_t order, std::vector<BigInt> coeffs);

  static TruncatedSeries one(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t n) const { return coeffs_[n]; }
  BigInt& operator[](std::size_t n) { return coeffs_[n]; }

  /// In-place multiplication by (1 - q^e) and division by (1 - q^e).
  TruncatedSeries& times_one_minus(std::size_t e);
  TruncatedSeries& over_one_minus(std::size_t e);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Requires c_0 = +1 or -1 so the inverse stays integral.
TruncatedSeries series_invert(const TruncatedSeries& a);
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned exponent);

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }
inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return series_add(a, b); }

/// prod_{i >= 0} (1 - q^{a_exp + i*step}) truncated at order n, i.e. the
/// q-Pochhammer symbol (q^a_exp; q^step)_inf.
TruncatedSeries pochhammer(std::size_t a_exp, std::size_t step, std::size_t n);

/// 1 / (q;q)_inf: ordinary partition counts.
TruncatedSeries partition_gf(std::size_t n);

/// (q^2;q^2)^k / (q;q)^{3k+1}, counting k-elongated partition diamonds.
TruncatedSeries diamond_gf(unsigned k, std::size_t n);

/// (-q;q) / (q;q), counting overpartitions.
TruncatedSeries overpartition_gf(std::size_t n);

/// table[n][s] = number of overpartitions of n with s overlined parts, the
/// coefficient of z^s q^n in prod_m (1 + z q^m) / (1 - q^m).
std::vector<std::vector<BigInt>> bivariate_over_gf(std::size_t n);

/// Evaluates products of q-Pochhammer terms, e.g.
///   "POCH(2,2)^1 / POCH(1,1)^4"
/// Grammar: expr := term (('*' | '/') term)*,  term := '1' | POCH(a,b) ['^' e].
TruncatedSeries evaluate_product(std::string_view expr, std::size_t n);

}  // namespace schmidt
