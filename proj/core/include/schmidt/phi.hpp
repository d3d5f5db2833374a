#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "schmidt/partition.hpp"

namespace schmidt {

/// Dense k x t integer matrix with an optional overline mask. Entries may
/// be negative; row/column accessors are 0-based.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Row-major nested initializer; all rows must have equal positive length.
  explicit IntMatrix(const std::vector<std::vector<Int>>& rows);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool marked(std::size_t i, std::size_t j) const { return marks_[i * cols_ + j]; }
  void set_mark(std::size_t i, std::size_t j, bool on = true) { marks_[i * cols_ + j] = on; }
  bool has_marks() const noexcept;

  std::span<const Int> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<std::vector<Int>> to_rows() const;
  Int total() const noexcept;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> data_;
  std::vector<bool> marks_;
};

/// Maps A to the length-kt sequence whose entry (j-1)k+i (1-based) is the
/// sum of column j when i = 1, the sum of rows i..k of the last column when
/// j = t, and otherwise rows i..k of column j plus rows 1..i-1 of column j+1.
/// The sum of the entries at positions 1, k+1, 2k+1, ... equals the sum of A.
std::vector<Int> phi_forward(const IntMatrix& a);

/// Inverse of phi_forward. Columns are recovered right to left, rows bottom
/// to top within each column. Throws DimensionError unless seq.size() is a
/// positive multiple of k.
IntMatrix phi_inverse(std::span<const Int> seq, std::size_t k);

/// Marks of A read in the same column-major order phi_forward uses, i.e. the
/// mark of a(i,j) lands at position (j-1)k+i of the output.
std::vector<bool> phi_marks(const IntMatrix& a);

/// Matrix for a mark vector laid out as phi_marks produces it.
void apply_marks(IntMatrix& a, const std::vector<bool>& seq_marks);

struct MatrixClass {
  bool weak_rows;                   // every row weakly decreasing
  bool strict_rows_with_zero_tail;  // nonzero row entries strict, zeros a terminal run in column-major order
  friend bool operator==(const MatrixClass&, const MatrixClass&) = default;
};

struct SequenceClass {
  bool weakly_decreasing;                  // weakly decreasing, last entry >= 0
  bool strictly_decreasing_mod_zero_tail;  // strictly decreasing positives, then zeros
  friend bool operator==(const SequenceClass&, const SequenceClass&) = default;
};

/// Throws DomainError if A has a negative entry.
MatrixClass classify_matrix(const IntMatrix& a);
SequenceClass classify_sequence(std::span<const Int> seq) noexcept;

}  // namespace schmidt
