#pragma once

#include <cstddef>
#include <vector>

#include "schmidt/partition.hpp"

namespace schmidt {

/*
 * k-elongated partition diamonds.
 *
 * A diamond of length t is stored flat as t(2k+1)+1 nonnegative entries.
 * Block b (0-based) starts with its head at offset b(2k+1), followed by k
 * pairs; the head of block b+1 closes block b, and the final entry is 0.
 * Within a block, every node dominates every node of the following group:
 *
 *   head >= both entries of pair 1, min(pair m) >= max(pair m+1),
 *   min(pair k) >= next head.
 *
 * The weight is the sum of the block heads. Diamonds are kept canonical:
 * the last block has a nonzero entry, and the only weight-0 diamond is the
 * all-zero diamond of length 1.
 */

struct DiamondStats {
  std::size_t length = 0;         // number of building blocks t
  Int weight = 0;
  std::size_t nonzero_count = 0;  // nonzero entries among the first t(2k+1)
  friend bool operator==(const DiamondStats&, const DiamondStats&) = default;
};

/// Checks every diamond invariant and returns the statistics; throws
/// DomainError naming the first violation.
DiamondStats validate_diamond(std::span<const Int> entries, int k);

class Diamond {
 public:
  Diamond(int k, std::vector<Int> entries);

  int k() const noexcept { return k_; }
  const std::vector<Int>& entries() const noexcept { return entries_; }
  const DiamondStats& stats() const noexcept { return stats_; }
  std::size_t length() const noexcept { return stats_.length; }
  Int weight() const noexcept { return stats_.weight; }
  std::size_t block_size() const noexcept { return 2 * static_cast<std::size_t>(k_) + 1; }

  friend auto operator<=>(const Diamond& a, const Diamond& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }
  friend bool operator==(const Diamond& a, const Diamond& b) {
    return a.k_ == b.k_ && a.entries_ == b.entries_;
  }

 private:
  int k_;
  std::vector<Int> entries_;
  DiamondStats stats_;
};

/// (2k+1)-tuple with overpartitions in the even slots (1-based) and ordinary
/// partitions in the odd slots -> diamond. Marks in slot 2i swap the
/// corresponding pair so the pair becomes strictly increasing.
Diamond tuple_to_diamond(std::span<const Overpartition> tuple, int k);

/// Inverse of tuple_to_diamond. A pair with a strictly smaller first entry
/// yields an overline; equal pairs never do.
OverpartitionTuple diamond_to_tuple(const Diamond& d);

}  // namespace schmidt
