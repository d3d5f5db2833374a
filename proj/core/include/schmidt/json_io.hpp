#pragma once

#include <nlohmann/json.hpp>

#include "schmidt/diamond.hpp"
#include "schmidt/overlays.hpp"
#include "schmidt/partition.hpp"
#include "schmidt/phi.hpp"
#include "schmidt/tuple_maps.hpp"

// JSON encodings:
//   Partition         [5, 2]
//   Overpartition     [{"part": 7, "over": false}, {"part": 4, "over": true}]
//   k-tuple           [member, member, ...]
//   IntMatrix         {"rows": k, "cols": t, "entries": [[...], ...], "marks": [[bool, ...], ...]}
//   Diamond           {"k": 2, "entries": [...]}
// Schmidt (over)partitions encode as their underlying (over)partition.
//
// Decoders accept a plain integer array wherever an overpartition is
// expected (no marks). They throw DomainError on malformed input.

namespace schmidt {

void to_json(nlohmann::json& j, const Partition& p);
void to_json(nlohmann::json& j, const Overpartition& p);
void to_json(nlohmann::json& j, const StrictOverpartition& p);
void to_json(nlohmann::json& j, const SchmidtPartition& s);
void to_json(nlohmann::json& j, const SchmidtOverpartition& s);
void to_json(nlohmann::json& j, const IntMatrix& a);
void to_json(nlohmann::json& j, const Diamond& d);

Partition partition_from_json(const nlohmann::json& j);
Overpartition overpartition_from_json(const nlohmann::json& j);
StrictOverpartition strict_overpartition_from_json(const nlohmann::json& j);
PartitionTuple partition_tuple_from_json(const nlohmann::json& j);
OverpartitionTuple overpartition_tuple_from_json(const nlohmann::json& j);
StrictOverpartitionTuple strict_overpartition_tuple_from_json(const nlohmann::json& j);
IntMatrix matrix_from_json(const nlohmann::json& j);
Diamond diamond_from_json(const nlohmann::json& j);

/// Total order used for canonical listings: by type (null, bool, number,
/// string, array, object), then numerically, lexicographically, or element
/// by element (objects by sorted key, then value).
bool canonical_less(const nlohmann::json& a, const nlohmann::json& b);

struct CanonicalLess {
  bool operator()(const nlohmann::json& a, const nlohmann::json& b) const { return canonical_less(a, b); }
};

}  // namespace schmidt
