#pragma once

#include <cstddef>
#include <tuple>
#include <utility>

#include "schmidt/partition.hpp"
#include "schmidt/tuple_maps.hpp"

namespace schmidt {

/// Overpartition tracked by its Schmidt weight. The strict variant (a
/// "Schmidt k-overpartition") must also be a valid StrictOverpartition.
class SchmidtOverpartition {
 public:
  SchmidtOverpartition(Overpartition parts, int k);

  const Overpartition& overpartition() const noexcept { return parts_; }
  const std::vector<Int>& parts() const noexcept { return parts_.parts(); }
  const std::vector<bool>& marks() const noexcept { return parts_.marks(); }
  int k() const noexcept { return k_; }
  std::size_t length() const noexcept { return parts_.length(); }
  std::size_t overline_count() const noexcept { return parts_.overline_count(); }
  Int weight() const { return schmidt_weight(parts_.parts(), k_); }
  bool is_strict() const;
  SchmidtPartition unmarked() const { return {parts_.underlying(), k_}; }

  friend auto operator<=>(const SchmidtOverpartition&, const SchmidtOverpartition&) = default;
  friend bool operator==(const SchmidtOverpartition&, const SchmidtOverpartition&) = default;

 private:
  Overpartition parts_;
  int k_;
};

/// Strict overpartition tuple with the length pattern of
/// strict_tuple_to_schmidt -> Schmidt k-overpartition. The mark of part j of
/// member i moves to position (j-1)k+i. An overlined 1 is only accepted in
/// slot r, the last member of full length.
SchmidtOverpartition over_strict_tuple_to_schmidt(std::span<const StrictOverpartition> tuple);
std::tuple<StrictOverpartitionTuple, std::size_t, std::size_t> schmidt_over_to_strict_tuple(
    const SchmidtOverpartition& s);

std::tuple<SchmidtOverpartition, std::size_t, std::size_t> over_unrestricted_tuple_to_schmidt(
    std::span<const Overpartition> tuple);
OverpartitionTuple schmidt_over_to_unrestricted_tuple(const SchmidtOverpartition& s);

/// Durfee decomposition of a marked Ferrers diagram. A marked corner right of
/// the diagonal overlines the matching part of beta; one on or below the
/// diagonal overlines the part of alpha for its column.
std::pair<StrictOverpartition, StrictOverpartition> over_durfee_decompose(const Overpartition& p);
Overpartition over_durfee_compose(const StrictOverpartition& alpha, const StrictOverpartition& beta);

}  // namespace schmidt
