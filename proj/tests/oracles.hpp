#pragma once

// Test-only reference computations. None of these call the code under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Matrix = std::vector<std::vector<Int>>;  // rows x cols

// Literal three-case entry formula, no prefix sums.
inline std::vector<Int> phi(const Matrix& a) {
  const std::size_t k = a.size();
  const std::size_t t = k ? a[0].size() : 0;
  std::vector<Int> out(k * t);
  for (std::size_t j = 1; j <= t; ++j) {
    for (std::size_t i = 1; i <= k; ++i) {
      Int v = 0;
      if (i == 1) {
        for (std::size_t s = 1; s <= k; ++s) v += a[s - 1][j - 1];
      } else if (j == t) {
        for (std::size_t s = i; s <= k; ++s) v += a[s - 1][t - 1];
      } else {
        for (std::size_t s = i; s <= k; ++s) v += a[s - 1][j - 1];
        for (std::size_t s = 1; s + 1 <= i; ++s) v += a[s - 1][j];
      }
      out[(j - 1) * k + (i - 1)] = v;
    }
  }
  return out;
}

// Cell-level Durfee split: cells (i,j) with i >= j hang below the diagonal
// and are read by columns; cells with j > i are read by rows.
struct Split {
  std::vector<Int> alpha, beta;
  std::set<std::size_t> alpha_marks, beta_marks;  // 0-based indices
};

inline Split durfee_cells(const std::vector<Int>& parts, const std::vector<bool>& marks) {
  std::size_t t = 0;
  while (t < parts.size() && parts[t] >= static_cast<Int>(t + 1)) ++t;
  std::map<std::size_t, Int> col, row;
  Split out;
  for (std::size_t i = 1; i <= parts.size(); ++i) {
    for (Int j = 1; j <= parts[i - 1]; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      if (i >= ju) {
        ++col[ju];
      } else {
        ++row[i];
      }
      const bool corner = ju == static_cast<std::size_t>(parts[i - 1]);
      if (corner && !marks.empty() && marks[i - 1]) {
        if (i >= ju) {
          out.alpha_marks.insert(ju - 1);
        } else {
          out.beta_marks.insert(i - 1);
        }
      }
    }
  }
  for (std::size_t j = 1; j <= t; ++j) out.alpha.push_back(col[j]);
  for (std::size_t i = 1; i <= t; ++i) {
    if (row[i] > 0) out.beta.push_back(row[i]);
  }
  return out;
}

// Euler: (q;q)_inf = sum_m (-1)^m q^{m(3m-1)/2}, m over all integers.
inline std::vector<Int> pentagonal(std::size_t n) {
  std::vector<Int> c(n + 1, 0);
  for (Int m = -static_cast<Int>(n); m <= static_cast<Int>(n); ++m) {
    const Int e = m * (3 * m - 1) / 2;
    if (e >= 0 && e <= static_cast<Int>(n)) c[static_cast<std::size_t>(e)] += (m % 2 == 0) ? 1 : -1;
  }
  return c;
}

}  // namespace oracle
