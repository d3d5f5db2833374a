#include "schmidt/diamond.hpp"

#include <algorithm>
#include <string>

#include "schmidt/phi.hpp"
#include "schmidt/tuple_maps.hpp"

namespace schmidt {

namespace {

std::string pos(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

DiamondStats validate_diamond(std::span<const Int> entries, int k) {
  if (k < 1) throw DomainError("diamond: k must be positive");
  const std::size_t block = 2 * static_cast<std::size_t>(k) + 1;
  if (entries.size() < block + 1 || entries.size() % block != 1) {
    throw DimensionError("diamond: length " + std::to_string(entries.size()) +
                         " is not t(2k+1)+1 for any t >= 1 (k=" + std::to_string(k) + ")");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0) throw DomainError("diamond: entry " + pos(i) + " is negative");
  }
  if (entries.back() != 0) throw DomainError("diamond: final entry must be 0");

  DiamondStats s;
  s.length = entries.size() / block;
  for (std::size_t b = 0; b < s.length; ++b) {
    const std::size_t head = b * block;
    s.weight += entries[head];
    // Groups in chain order: head, pair 1, ..., pair k, next head.
    Int upper = entries[head];
    for (std::size_t m = 0; m < static_cast<std::size_t>(k); ++m) {
      const std::size_t p = head + 1 + 2 * m;
      if (std::max(entries[p], entries[p + 1]) > upper) {
        throw DomainError("diamond: chain order violated at positions " + pos(p) + "," + pos(p + 1));
      }
      upper = std::min(entries[p], entries[p + 1]);
    }
    if (entries[head + block] > upper) {
      throw DomainError("diamond: chain order violated at position " + pos(head + block));
    }
  }
  s.nonzero_count = static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end() - 1, [](Int v) { return v != 0; }));

  const std::size_t last_head = (s.length - 1) * block;
  if (entries[last_head] == 0 && s.length > 1) {
    throw DomainError("diamond: last building block is all zero (non-canonical)");
  }
  return s;
}

Diamond::Diamond(int k, std::vector<Int> entries)
    : k_(k), entries_(std::move(entries)), stats_(validate_diamond(entries_, k_)) {}

Diamond tuple_to_diamond(std::span<const Overpartition> tuple, int k) {
  if (k < 1) throw DomainError("tuple_to_diamond: k must be positive");
  const std::size_t rows = 2 * static_cast<std::size_t>(k) + 1;
  if (tuple.size() != rows) {
    throw DimensionError("tuple_to_diamond: expected a " + std::to_string(rows) + "-tuple, got " +
                         std::to_string(tuple.size()));
  }
  for (std::size_t i = 0; i < rows; i += 2) {
    if (tuple[i].overline_count() != 0) {
      throw DomainError("tuple_to_diamond: slot " + pos(i) + " is an ordinary partition and cannot carry overlines");
    }
  }
  const TupleShape shape = tuple_shape(tuple);
  const PartitionTuple plain = underlying(tuple);
  const std::vector<Int> lambda = phi_forward(tuple_matrix(plain, shape.t));

  std::vector<Int> pi(rows * shape.t + 1, 0);
  for (std::size_t j = 0; j < shape.t; ++j) {
    const std::size_t base = j * rows;
    pi[base] = lambda[base];
    for (std::size_t i = 1; i <= static_cast<std::size_t>(k); ++i) {
      const std::size_t p = base + 2 * i - 1;  // 1-based position base + 2i
      const Overpartition& member = tuple[2 * i - 1];
      const bool swap = j < member.length() && member.marked(j);
      pi[p] = swap ? lambda[p + 1] : lambda[p];
      pi[p + 1] = swap ? lambda[p] : lambda[p + 1];
    }
  }
  return Diamond(k, std::move(pi));
}

OverpartitionTuple diamond_to_tuple(const Diamond& d) {
  if (d.weight() == 0) throw DomainError("diamond_to_tuple: the empty diamond has no tuple preimage");
  const int k = d.k();
  const std::size_t rows = d.block_size();
  const std::size_t t = d.length();
  const auto& pi = d.entries();

  std::vector<Int> lambda(pi.begin(), pi.end() - 1);
  std::vector<bool> seq_marks(lambda.size(), false);
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 1; i <= static_cast<std::size_t>(k); ++i) {
      const std::size_t p = j * rows + 2 * i - 1;
      if (pi[p] < pi[p + 1]) {
        std::swap(lambda[p], lambda[p + 1]);
        seq_marks[p] = true;
      }
    }
  }
  IntMatrix a = phi_inverse(lambda, rows);
  apply_marks(a, seq_marks);

  OverpartitionTuple out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Int> parts;
    std::vector<bool> marks;
    for (std::size_t j = 0; j < t; ++j) {
      if (a(i, j) == 0) {
        if (a.marked(i, j)) throw DomainError("diamond_to_tuple: overline on a zero entry");
        continue;
      }
      parts.push_back(a(i, j));
      marks.push_back(a.marked(i, j));
    }
    out.emplace_back(std::move(parts), std::move(marks));
  }
  return out;
}

}  // namespace schmidt
