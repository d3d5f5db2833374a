#include "schmidt/phi.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace schmidt {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0), marks_(rows * cols, false) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

IntMatrix::IntMatrix(const std::vector<std::vector<Int>>& rows)
    : IntMatrix(rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (rows[i].size() != cols_) {
      throw DimensionError("matrix row " + std::to_string(i + 1) + " has length " +
                           std::to_string(rows[i].size()) + ", expected " + std::to_string(cols_));
    }
    std::copy(rows[i].begin(), rows[i].end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : IntMatrix(std::vector<std::vector<Int>>(rows.begin(), rows.end())) {}

bool IntMatrix::has_marks() const noexcept {
  return std::find(marks_.begin(), marks_.end(), true) != marks_.end();
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

Int IntMatrix::total() const noexcept { return std::accumulate(data_.begin(), data_.end(), Int{0}); }

std::vector<Int> phi_forward(const IntMatrix& a) {
  const std::size_t k = a.rows();
  const std::size_t t = a.cols();
  std::vector<Int> out(k * t);

  // suffix[i] = a(i,j) + ... + a(k-1,j) for the current column j.
  std::vector<Int> suffix(k + 1);
  for (std::size_t j = 0; j < t; ++j) {
    suffix[k] = 0;
    for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] + a(i, j);

    Int next_prefix = 0;  // a(0,j+1) + ... + a(i-1,j+1)
    for (std::size_t i = 0; i < k; ++i) {
      Int v;
      if (i == 0) {
        v = suffix[0];
      } else if (j + 1 == t) {
        v = suffix[i];
      } else {
        next_prefix += a(i - 1, j + 1);
        v = suffix[i] + next_prefix;
      }
      out[j * k + i] = v;
    }
  }
  return out;
}

IntMatrix phi_inverse(std::span<const Int> seq, std::size_t k) {
  if (k == 0) throw DimensionError("phi_inverse: k must be positive");
  if (seq.empty() || seq.size() % k != 0) {
    throw DimensionError("phi_inverse: sequence length " + std::to_string(seq.size()) +
                         " is not a positive multiple of k=" + std::to_string(k));
  }
  const std::size_t t = seq.size() / k;
  IntMatrix a(k, t);

  // Last column: a(i,t) = lambda_{(t-1)k+i} - sum of the entries below it.
  {
    const std::size_t j = t - 1;
    Int below = 0;
    for (std::size_t i = k; i-- > 0;) {
      a(i, j) = seq[j * k + i] - below;
      below += a(i, j);
    }
  }
  // Remaining columns right to left; rows bottom to top. a(i,j) depends on
  // rows below it in column j and rows above it in column j+1.
  for (std::size_t j = t - 1; j-- > 0;) {
    Int below = 0;
    for (std::size_t i = k; i-- > 0;) {
      Int v = seq[j * k + i] - below;
      for (std::size_t s = 0; s < i; ++s) v -= a(s, j + 1);
      a(i, j) = v;
      below += v;
    }
  }
  return a;
}

std::vector<bool> phi_marks(const IntMatrix& a) {
  const std::size_t k = a.rows();
  std::vector<bool> out(k * a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < k; ++i) out[j * k + i] = a.marked(i, j);
  }
  return out;
}

void apply_marks(IntMatrix& a, const std::vector<bool>& seq_marks) {
  const std::size_t k = a.rows();
  if (seq_marks.size() != k * a.cols()) throw DimensionError("apply_marks: mark vector has wrong length");
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < k; ++i) a.set_mark(i, j, seq_marks[j * k + i]);
  }
}

MatrixClass classify_matrix(const IntMatrix& a) {
  const std::size_t k = a.rows();
  const std::size_t t = a.cols();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (a(i, j) < 0) {
        throw DomainError("classify_matrix: negative entry at (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")");
      }
    }
  }

  bool weak = true;
  bool strict = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j + 1 < t; ++j) {
      if (a(i, j) < a(i, j + 1)) weak = false;
      if (a(i, j) != 0 && a(i, j) <= a(i, j + 1)) strict = false;
    }
  }

  // Zeros must form a terminal run of the column-major order phi reads:
  // the bottom of some column j and everything right of it.
  bool seen_zero = false;
  for (std::size_t j = 0; j < t && strict; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      if (a(i, j) == 0) {
        seen_zero = true;
      } else if (seen_zero) {
        strict = false;
        break;
      }
    }
  }
  return {weak, strict};
}

SequenceClass classify_sequence(std::span<const Int> seq) noexcept {
  bool weak = true;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] < seq[i + 1]) weak = false;
  }
  if (!seq.empty() && seq.back() < 0) weak = false;

  std::size_t m = 0;
  while (m < seq.size() && seq[m] > 0 && (m == 0 || seq[m - 1] > seq[m])) ++m;
  bool strict = std::all_of(seq.begin() + static_cast<std::ptrdiff_t>(m), seq.end(),
                            [](Int v) { return v == 0; });
  return {weak, strict};
}

}  // namespace schmidt
