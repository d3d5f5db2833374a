#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "schmidt/diamond.hpp"
#include "schmidt/overlays.hpp"
#include "schmidt/partition.hpp"
#include "schmidt/qseries.hpp"
#include "schmidt/tuple_maps.hpp"

namespace schmidt {

/*
 * Brute-force generators for every family of objects the bijections act on.
 *
 * Generation is built directly from the definitions (recursive choice of
 * parts under the defining constraints) and never calls into the bijection
 * modules, so the counts and element sets here serve as independent oracles.
 */

// Typed generators. Each returns every object of the stated weight exactly
// once; order is the natural recursion order (parts chosen largest first).
std::vector<Partition> partitions(Int n);
std::vector<Partition> strict_partitions(Int n);
std::vector<Overpartition> overpartitions(Int n);
std::vector<StrictOverpartition> strict_overpartitions(Int n);

// k-tuples of total weight n whose members are all of the named kind.
std::vector<PartitionTuple> partition_tuples(Int n, int k);
std::vector<PartitionTuple> strict_partition_tuples(Int n, int k);
std::vector<OverpartitionTuple> overpartition_tuples(Int n, int k);
std::vector<StrictOverpartitionTuple> strict_overpartition_tuples(Int n, int k);
/// (2k+1)-tuples with overpartitions in the even slots (1-based).
std::vector<OverpartitionTuple> diamond_tuples(Int n, int k);

/// Sequences with Schmidt weight n, strictly or weakly decreasing.
std::vector<SchmidtPartition> schmidt_partitions(Int n, int k, bool strict);
/// Overpartitions with Schmidt weight n; strict=true restricts to strict
/// overpartitions.
std::vector<SchmidtOverpartition> schmidt_overpartitions(Int n, int k, bool strict);
/// Canonical k-elongated partition diamonds of weight n.
std::vector<Diamond> diamonds(Int n, int k);

enum class Family {
  P,     // strict k-tuples, members 1..r of length t, the rest t-1
  Q,     // Schmidt k-partitions with (t-1)k + r parts
  F,     // k-tuples with longest length t attained last at r
  G,     // unrestricted Schmidt k-partitions of length (t-1)k + r
  H,     // (2k+1)-tuples, even slots overpartitions, shape (t, r)
  D,     // diamonds of length t with (t-1)(2k+1) + r nonzero entries
  PBAR,  // strict overpartition k-tuples as P, s marks, overlined 1 only in slot r
  QBAR,  // Schmidt k-overpartitions as Q with s marks
  FBAR,  // overpartition k-tuples as F with s marks
  GBAR,  // unrestricted Schmidt k-overpartitions as G with s marks
  PARTITIONS,
  STRICT,
  OVERPARTITIONS,
  KTUPLE,
  SCHMIDT_ANY,
  UNRESTRICTED_SCHMIDT_ANY,
  DIAMOND_ANY,
};

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

struct FamilySpec {
  Family family = Family::PARTITIONS;
  Int n = 0;
  int k = 1;
  std::optional<std::size_t> t;
  std::optional<std::size_t> r;
  std::optional<std::size_t> s;  // overline count; all counts when absent
};

/// Throws DomainError if the family's required parameters are missing or
/// out of range.
void validate_spec(const FamilySpec& spec);

using Object = std::variant<Partition, Overpartition, StrictOverpartition, PartitionTuple, OverpartitionTuple,
                            StrictOverpartitionTuple, SchmidtPartition, SchmidtOverpartition, Diamond>;

nlohmann::json to_json(const Object& obj);

/// Every member of the family, each once, sorted by canonical JSON encoding.
std::vector<Object> enumerate(const FamilySpec& spec);

struct CountOptions {
  /// Above this weight, PARTITIONS / KTUPLE / OVERPARTITIONS are counted by
  /// dynamic programming instead of enumeration.
  Int crossover = 12;
};

BigInt count(const FamilySpec& spec, const CountOptions& options = {});

// Dynamic-programming counters, independent of the series module.
BigInt count_partitions_dp(Int n);
BigInt count_tuples_dp(Int n, int k);
BigInt count_overpartitions_dp(Int n);

}  // namespace schmidt
