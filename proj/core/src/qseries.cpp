#include "schmidt/qseries.hpp"

#include <cctype>
#include <charconv>
#include <string>

namespace schmidt {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > order + 1) {
    throw DimensionError("series: " + std::to_string(coeffs_.size()) + " coefficients exceed order " +
                         std::to_string(order));
  }
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries& TruncatedSeries::times_one_minus(std::size_t e) {
  if (e == 0) throw DomainError("series: factor (1 - q^0) is not allowed");
  for (std::size_t n = order(); n >= e; --n) coeffs_[n] -= coeffs_[n - e];
  return *this;
}

TruncatedSeries& TruncatedSeries::over_one_minus(std::size_t e) {
  if (e == 0) throw DomainError("series: division by (1 - q^0)");
  for (std::size_t n = e; n <= order(); ++n) coeffs_[n] += coeffs_[n - e];
  return *this;
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw DimensionError("series: truncation orders differ (" + std::to_string(a.order()) + " vs " +
                         std::to_string(b.order()) + ")");
  }
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries out = a;
  for (std::size_t n = 0; n <= a.order(); ++n) out[n] += b[n];
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const std::size_t order = a.order();
  TruncatedSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries series_invert(const TruncatedSeries& a) {
  if (a[0] != 1 && a[0] != -1) throw DomainError("series_invert: constant term must be +1 or -1");
  const std::size_t order = a.order();
  const BigInt& unit = a[0];  // its own inverse
  TruncatedSeries b(order);
  b[0] = unit;
  for (std::size_t n = 1; n <= order; ++n) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= n; ++i) acc += a[i] * b[n - i];
    b[n] = -acc * unit;
  }
  return b;
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned exponent) {
  TruncatedSeries result = TruncatedSeries::one(a.order());
  TruncatedSeries base = a;
  while (exponent != 0) {
    if (exponent & 1U) result = series_mul(result, base);
    exponent >>= 1U;
    if (exponent != 0) base = series_mul(base, base);
  }
  return result;
}

TruncatedSeries pochhammer(std::size_t a_exp, std::size_t step, std::size_t n) {
  if (a_exp == 0 || step == 0) throw DomainError("pochhammer: a_exp and step must be positive");
  TruncatedSeries s = TruncatedSeries::one(n);
  for (std::size_t e = a_exp; e <= n; e += step) s.times_one_minus(e);
  return s;
}

TruncatedSeries partition_gf(std::size_t n) { return series_invert(pochhammer(1, 1, n)); }

TruncatedSeries diamond_gf(unsigned k, std::size_t n) {
  if (k == 0) throw DomainError("diamond_gf: k must be positive");
  return series_pow(pochhammer(2, 2, n), k) * series_pow(partition_gf(n), 3 * k + 1);
}

TruncatedSeries overpartition_gf(std::size_t n) {
  TruncatedSeries s = TruncatedSeries::one(n);
  for (std::size_t m = 1; m <= n; ++m) {
    // (1 + q^m)
    for (std::size_t i = n; i >= m; --i) s[i] += s[i - m];
    s.over_one_minus(m);
  }
  return s;
}

std::vector<std::vector<BigInt>> bivariate_over_gf(std::size_t n) {
  std::vector<std::vector<BigInt>> table(n + 1, std::vector<BigInt>(n + 1));
  table[0][0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    // times (1 + z q^m)
    for (std::size_t i = n; i >= m; --i) {
      for (std::size_t s = n; s >= 1; --s) table[i][s] += table[i - m][s - 1];
    }
    // over (1 - q^m)
    for (std::size_t i = m; i <= n; ++i) {
      for (std::size_t s = 0; s <= n; ++s) table[i][s] += table[i - m][s];
    }
  }
  return table;
}

namespace {

class ProductParser {
 public:
  ProductParser(std::string_view text, std::size_t order) : text_(text), order_(order) {}

  TruncatedSeries parse() {
    TruncatedSeries acc = term();
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char op = text_[pos_];
      if (op != '*' && op != '/') fail("expected '*' or '/'");
      ++pos_;
      TruncatedSeries rhs = term();
      acc = op == '*' ? acc * rhs : acc * series_invert(rhs);
    }
    return acc;
  }

 private:
  TruncatedSeries term() {
    skip_space();
    if (!at_end() && text_[pos_] == '1') {
      ++pos_;
      return TruncatedSeries::one(order_);
    }
    expect_word("POCH");
    expect('(');
    const std::size_t a = number();
    expect(',');
    const std::size_t b = number();
    expect(')');
    std::size_t e = 1;
    skip_space();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      e = number();
    }
    return series_pow(pochhammer(a, b, order_), static_cast<unsigned>(e));
  }

  std::size_t number() {
    skip_space();
    std::size_t v = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr == first) fail("expected a nonnegative integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) fail("expected POCH(a,b)");
    pos_ += w.size();
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("series expression: " + what + " at column " + std::to_string(pos_ + 1));
  }

  std::string_view text_;
  std::size_t order_;
  std::size_t pos_ = 0;
};

}  // namespace

TruncatedSeries evaluate_product(std::string_view expr, std::size_t n) { return ProductParser(expr, n).parse(); }

}  // namespace schmidt
