#include "schmidt/partition.hpp"

#include <algorithm>
#include <numeric>

namespace schmidt {

namespace {

std::string pos(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

std::optional<std::string> Partition::check(std::span<const Int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) {
      return "part " + pos(i) + " is " + std::to_string(parts[i]) + ", parts must be positive";
    }
    if (i + 1 < parts.size() && parts[i] < parts[i + 1]) {
      return "parts not weakly decreasing at position " + pos(i);
    }
  }
  return std::nullopt;
}

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  if (auto err = check(parts_)) throw DomainError("invalid partition: " + *err);
}

Int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), Int{0}); }

bool Partition::is_strict() const noexcept {
  return std::adjacent_find(parts_.begin(), parts_.end(), std::less_equal<>{}) == parts_.end();
}

std::optional<std::string> Overpartition::check(std::span<const Int> parts,
                                                const std::vector<bool>& marks) {
  if (parts.size() != marks.size()) return std::string("mark vector length differs from part count");
  if (auto err = Partition::check(parts)) return err;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (marks[i] && parts[i] == parts[i + 1]) {
      return "overline on part " + pos(i) + " which is not the final occurrence of " +
             std::to_string(parts[i]);
    }
  }
  return std::nullopt;
}

Overpartition::Overpartition(std::vector<Int> parts, std::vector<bool> marks)
    : parts_(std::move(parts)), marks_(std::move(marks)) {
  if (auto err = check(parts_, marks_)) throw DomainError("invalid overpartition: " + *err);
}

Overpartition::Overpartition(const Partition& p) : parts_(p.parts()), marks_(p.length(), false) {}

Int Overpartition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

std::size_t Overpartition::overline_count() const noexcept {
  return static_cast<std::size_t>(std::count(marks_.begin(), marks_.end(), true));
}

std::optional<std::string> StrictOverpartition::check(std::span<const Int> parts,
                                                      const std::vector<bool>& marks) {
  if (parts.size() != marks.size()) return std::string("mark vector length differs from part count");
  if (auto err = Partition::check(parts)) return err;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i] == parts[i + 1]) return "parts not strictly decreasing at position " + pos(i);
    if (marks[i] && parts[i] - parts[i + 1] < 2) {
      return "overline on part " + pos(i) + " whose gap to the next part is below 2";
    }
  }
  return std::nullopt;
}

StrictOverpartition::StrictOverpartition(std::vector<Int> parts, std::vector<bool> marks)
    : StrictOverpartition(Overpartition(std::move(parts), std::move(marks))) {}

StrictOverpartition::StrictOverpartition(Overpartition base) : base_(std::move(base)) {
  if (auto err = check(base_.parts(), base_.marks())) {
    throw DomainError("invalid strict overpartition: " + *err);
  }
}

Int weight(const Partition& p) noexcept { return p.weight(); }
Int weight(const Overpartition& p) noexcept { return p.weight(); }
Int weight(const StrictOverpartition& p) noexcept { return p.weight(); }

Int weight(std::span<const Partition> tuple) noexcept {
  Int w = 0;
  for (const auto& p : tuple) w += p.weight();
  return w;
}

Int weight(std::span<const Overpartition> tuple) noexcept {
  Int w = 0;
  for (const auto& p : tuple) w += p.weight();
  return w;
}

Int weight(std::span<const StrictOverpartition> tuple) noexcept {
  Int w = 0;
  for (const auto& p : tuple) w += p.weight();
  return w;
}

Int schmidt_weight(std::span<const Int> seq, int k) {
  if (k < 1) throw DomainError("schmidt_weight: k must be positive");
  Int w = 0;
  for (std::size_t i = 0; i < seq.size(); i += static_cast<std::size_t>(k)) w += seq[i];
  return w;
}

std::size_t durfee_size(const Partition& p) noexcept {
  std::size_t d = 0;
  while (d < p.length() && p[d] >= static_cast<Int>(d + 1)) ++d;
  return d;
}

bool is_k_distinct(const Partition& p, Int k) noexcept {
  for (std::size_t i = 0; i + 1 < p.length(); ++i) {
    if (p[i] - p[i + 1] < k) return false;
  }
  return true;
}

PartitionTuple underlying(std::span<const Overpartition> tuple) {
  PartitionTuple out;
  out.reserve(tuple.size());
  for (const auto& p : tuple) out.push_back(p.underlying());
  return out;
}

}  // namespace schmidt
