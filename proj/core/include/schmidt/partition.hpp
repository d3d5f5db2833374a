#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schmidt/errors.hpp"

namespace schmidt {

using Int = std::int64_t;

/*
 * Value types for the partition-like objects handled by the library.
 *
 * Every type validates on construction and is immutable afterwards, so a
 * constructed value always satisfies its invariant. Internally all indices
 * are 0-based; error messages report 1-based positions.
 *
 * Overline marks are kept in a parallel boolean vector, never folded into
 * the part values.
 */

/// Weakly decreasing sequence of positive integers. The empty partition is
/// a valid value of weight 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Int> parts);
  Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

  const std::vector<Int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  Int operator[](std::size_t i) const { return parts_[i]; }

  Int weight() const noexcept;
  bool is_strict() const noexcept;

  /// Returns a description of the first violation, or nullopt if `parts`
  /// is a valid partition.
  static std::optional<std::string> check(std::span<const Int> parts);

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Int> parts_;
};

/// Partition in which the final occurrence of a part value may carry an
/// overline.
class Overpartition {
 public:
  Overpartition() = default;
  Overpartition(std::vector<Int> parts, std::vector<bool> marks);
  /// Unmarked copy of an ordinary partition.
  explicit Overpartition(const Partition& p);

  const std::vector<Int>& parts() const noexcept { return parts_; }
  const std::vector<bool>& marks() const noexcept { return marks_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  Int operator[](std::size_t i) const { return parts_[i]; }
  bool marked(std::size_t i) const { return marks_[i]; }

  Int weight() const noexcept;
  std::size_t overline_count() const noexcept;
  Partition underlying() const { return Partition(parts_); }

  static std::optional<std::string> check(std::span<const Int> parts,
                                          const std::vector<bool>& marks);

  friend auto operator<=>(const Overpartition&, const Overpartition&) = default;
  friend bool operator==(const Overpartition&, const Overpartition&) = default;

 private:
  std::vector<Int> parts_;
  std::vector<bool> marks_;
};

/// Strictly decreasing overpartition where part i may be overlined only if
/// it exceeds the next part by at least 2, or it is the last part.
class StrictOverpartition {
 public:
  StrictOverpartition() = default;
  StrictOverpartition(std::vector<Int> parts, std::vector<bool> marks);
  explicit StrictOverpartition(Overpartition base);

  const Overpartition& base() const noexcept { return base_; }
  const std::vector<Int>& parts() const noexcept { return base_.parts(); }
  const std::vector<bool>& marks() const noexcept { return base_.marks(); }
  std::size_t length() const noexcept { return base_.length(); }
  bool empty() const noexcept { return base_.empty(); }
  Int operator[](std::size_t i) const { return base_[i]; }
  bool marked(std::size_t i) const { return base_.marked(i); }
  Int weight() const noexcept { return base_.weight(); }
  std::size_t overline_count() const noexcept { return base_.overline_count(); }

  static std::optional<std::string> check(std::span<const Int> parts,
                                          const std::vector<bool>& marks);

  friend auto operator<=>(const StrictOverpartition&, const StrictOverpartition&) = default;
  friend bool operator==(const StrictOverpartition&, const StrictOverpartition&) = default;

 private:
  Overpartition base_;
};

// k-tuple partitions. Which slots of an overpartition tuple may carry marks
// is decided by the operation consuming it (e.g. only even slots for
// diamonds).
using PartitionTuple = std::vector<Partition>;
using OverpartitionTuple = std::vector<Overpartition>;
using StrictOverpartitionTuple = std::vector<StrictOverpartition>;

Int weight(const Partition& p) noexcept;
Int weight(const Overpartition& p) noexcept;
Int weight(const StrictOverpartition& p) noexcept;
Int weight(std::span<const Partition> tuple) noexcept;
Int weight(std::span<const Overpartition> tuple) noexcept;
Int weight(std::span<const StrictOverpartition> tuple) noexcept;

/// Sum of the entries at 1-based positions 1, k+1, 2k+1, ...
Int schmidt_weight(std::span<const Int> seq, int k);

/// Side of the largest square fitting in the Ferrers diagram.
std::size_t durfee_size(const Partition& p) noexcept;

/// True iff consecutive parts differ by at least k.
bool is_k_distinct(const Partition& p, Int k) noexcept;

/// Strips the marks of every member.
PartitionTuple underlying(std::span<const Overpartition> tuple);

}  // namespace schmidt
