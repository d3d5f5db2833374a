#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "schmidt/partition.hpp"

namespace schmidt {

enum class Theorem {
  p_eq_q,        // strict k-tuples        <-> Schmidt k-partitions
  f_eq_g,        // k-tuples               <-> unrestricted Schmidt k-partitions
  h_eq_d,        // (2k+1)-tuples          <-> k-elongated partition diamonds
  pbar_eq_qbar,  // strict overpartition tuples <-> Schmidt k-overpartitions
  fbar_eq_gbar,  // overpartition tuples   <-> unrestricted Schmidt k-overpartitions
  durfee,        // partitions by Durfee size <-> Schmidt 2-partitions (k fixed at 2)
  over_durfee,   // overpartitions by Durfee size and marks <-> Schmidt 2-overpartitions
  staircase,     // (2-distinct, strict, ordinary) triples <-> Schmidt 3-partitions (k fixed at 3)
};

/// Accepts "p=q", "f=g", "h=d", "pbar=qbar" (or "p̄=q̄"), "fbar=gbar"
/// (or "f̄=ḡ"), "durfee", "over-durfee", "staircase".
std::optional<Theorem> parse_theorem(std::string_view id);
std::string_view theorem_name(Theorem th);

/// Statistic cell of a theorem. Unused coordinates are zero; s is absent for
/// theorems without marks.
struct Cell {
  Int n = 0;
  std::size_t t = 0;
  std::size_t r = 0;
  std::optional<std::size_t> s;
  friend auto operator<=>(const Cell&, const Cell&) = default;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellResult {
  Cell cell;
  std::uint64_t lhs = 0;  // enumerated domain size
  std::uint64_t rhs = 0;  // enumerated target size
  bool ok = false;
  std::string problem;                    // empty when ok
  std::optional<nlohmann::json> witness;  // first offending object
};

struct Report {
  Theorem theorem{};
  int k = 0;
  Int n_max = 0;
  std::vector<CellResult> cells;  // ordered by cell
  bool ok() const noexcept;
};

struct VerifyOptions {
  Int n_min = 1;
  unsigned threads = 1;
  /// Test hook: deliberately corrupts the forward map so the harness must
  /// report a failure.
  bool corrupt_mapping = false;
};

/// For every cell with weight in [n_min, n_max]: both sides are enumerated
/// independently, their sizes compared, and every domain element is pushed
/// through the forward map. The image must lie in the target cell, images
/// must be distinct, and the inverse must recover the element.
Report verify_bijection(Theorem th, Int n_max, int k, const VerifyOptions& options = {});

nlohmann::json cell_json(const Cell& c);
nlohmann::json report_json(const Report& report);
/// One line per cell plus a summary line.
std::string format_report(const Report& report);

}  // namespace schmidt
