#pragma once

#include <string>

#include "schmidt/diamond.hpp"
#include "schmidt/partition.hpp"

namespace schmidt::render {

/// Graphviz digraph of the chain order: an edge a -> b means entry a >= b.
std::string diamond_dot(const Diamond& d);

/// One line per building block, e.g. "37 >= (34,31) >= (22,23) >= 22".
std::string diamond_text(const Diamond& d);

/// Ferrers diagram, one row per part; 'o' marks a cell and '#' a marked
/// (overlined) corner cell.
std::string ferrers_text(const Overpartition& p);

/// Compact human notation: (7,7',5) with ' for an overline.
std::string notation(const Partition& p);
std::string notation(const Overpartition& p);

}  // namespace schmidt::render
