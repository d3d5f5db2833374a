#pragma once

#include <cstddef>
#include <tuple>
#include <utility>

#include "schmidt/partition.hpp"
#include "schmidt/phi.hpp"

namespace schmidt {

/// A partition viewed through its Schmidt weight: the sum of the parts at
/// 1-based positions 1, k+1, 2k+1, ...
///
/// The strict variant (a "Schmidt k-partition") additionally requires
/// distinct parts; `is_strict()` reports which variant a value belongs to.
class SchmidtPartition {
 public:
  SchmidtPartition(Partition parts, int k);

  const Partition& partition() const noexcept { return parts_; }
  const std::vector<Int>& parts() const noexcept { return parts_.parts(); }
  int k() const noexcept { return k_; }
  std::size_t length() const noexcept { return parts_.length(); }
  bool is_strict() const noexcept { return parts_.is_strict(); }
  Int weight() const { return schmidt_weight(parts_.parts(), k_); }

  /// Block count t = ceil(length / k) and fill r = length - (t-1)k.
  std::size_t blocks() const noexcept;
  std::size_t fill() const noexcept;

  friend auto operator<=>(const SchmidtPartition&, const SchmidtPartition&) = default;
  friend bool operator==(const SchmidtPartition&, const SchmidtPartition&) = default;

 private:
  Partition parts_;
  int k_;
};

/// Shape of a tuple as it appears in the counting theorems: t is the
/// longest member length, r the last member index (1-based) attaining it.
struct TupleShape {
  std::size_t t = 0;
  std::size_t r = 0;
  friend bool operator==(const TupleShape&, const TupleShape&) = default;
};

/// Shape of a sequence of `length` entries cut into rows of k: t = ceil(len/k),
/// r = 1 + (len - 1) mod k.
TupleShape sequence_shape(std::size_t length, std::size_t k);

/// t and r of a tuple by member lengths. Throws if every member is empty.
TupleShape tuple_shape(std::span<const Partition> tuple);
TupleShape tuple_shape(std::span<const Overpartition> tuple);

/// The k x t matrix whose i-th row is member i padded with trailing zeros.
IntMatrix tuple_matrix(std::span<const Partition> tuple, std::size_t t);

/// Rows of a nonnegative matrix read back as partitions (zeros dropped).
PartitionTuple matrix_rows(const IntMatrix& a);

// Strict tuples (members 1..r of length t, members r+1..k of length t-1,
// all strict) <-> Schmidt k-partitions with (t-1)k + r parts.
SchmidtPartition strict_tuple_to_schmidt(std::span<const Partition> tuple);
std::tuple<PartitionTuple, std::size_t, std::size_t> schmidt_to_strict_tuple(const SchmidtPartition& s);

// Arbitrary nonempty k-tuples <-> unrestricted Schmidt k-partitions.
std::tuple<SchmidtPartition, std::size_t, std::size_t> unrestricted_tuple_to_schmidt(
    std::span<const Partition> tuple);
PartitionTuple schmidt_to_unrestricted_tuple(const SchmidtPartition& s);

/// Splits a nonempty partition with Durfee size t into the cells on or below
/// the diagonal, read column by column (alpha, strict, length t), and the
/// cells right of the diagonal, read row by row (beta, strict, length t or
/// t-1).
std::pair<Partition, Partition> durfee_decompose(const Partition& p);
Partition durfee_compose(const Partition& alpha, const Partition& beta);

enum class Direction { forward, backward };

struct Triple {
  Partition first;
  Partition second;
  Partition third;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Forward: (alpha 2-distinct of length t, beta strict of length t, gamma of
/// length <= t) -> (alpha - staircase, beta, gamma + staircase) where the
/// staircase is (t-1, ..., 1, 0). Backward inverts it.
Triple staircase_transform(const Triple& triple, std::size_t t, Direction direction);

}  // namespace schmidt
