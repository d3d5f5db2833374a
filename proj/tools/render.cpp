#include "render.hpp"

#include <sstream>

namespace schmidt::render {

namespace {

std::string node(std::size_t i) { return "p" + std::to_string(i + 1); }

}  // namespace

std::string diamond_dot(const Diamond& d) {
  const auto& e = d.entries();
  const std::size_t block = d.block_size();
  const auto k = static_cast<std::size_t>(d.k());
  std::ostringstream os;
  os << "digraph diamond {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < e.size(); ++i) {
    os << "  " << node(i) << " [label=\"" << e[i] << "\", xlabel=\"pi_" << i + 1 << "\"];\n";
  }
  const auto edge = [&os](std::size_t a, std::size_t b) { os << "  " << node(a) << " -> " << node(b) << ";\n"; };
  for (std::size_t b = 0; b < d.length(); ++b) {
    const std::size_t head = b * block;
    // groups: {head}, pair 1, ..., pair k, {next head}
    std::vector<std::vector<std::size_t>> groups{{head}};
    for (std::size_t m = 0; m < k; ++m) groups.push_back({head + 1 + 2 * m, head + 2 + 2 * m});
    groups.push_back({head + block});
    for (std::size_t g = 0; g + 1 < groups.size(); ++g) {
      for (std::size_t from : groups[g]) {
        for (std::size_t to : groups[g + 1]) edge(from, to);
      }
    }
  }
  os << "}\n";
  return os.str();
}

std::string diamond_text(const Diamond& d) {
  const auto& e = d.entries();
  const std::size_t block = d.block_size();
  std::ostringstream os;
  os << "k=" << d.k() << " length=" << d.length() << " weight=" << d.weight()
     << " nonzero=" << d.stats().nonzero_count << '\n';
  for (std::size_t b = 0; b < d.length(); ++b) {
    const std::size_t head = b * block;
    os << "block " << b + 1 << ": " << e[head];
    for (std::size_t m = 0; m < static_cast<std::size_t>(d.k()); ++m) {
      os << " >= (" << e[head + 1 + 2 * m] << ',' << e[head + 2 + 2 * m] << ')';
    }
    os << " >= " << e[head + block] << '\n';
  }
  return os.str();
}

std::string ferrers_text(const Overpartition& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.length(); ++i) {
    for (Int c = 0; c < p[i]; ++c) os << (p.marked(i) && c + 1 == p[i] ? '#' : 'o');
    os << '\n';
  }
  return os.str();
}

std::string notation(const Partition& p) { return notation(Overpartition(p)); }

std::string notation(const Overpartition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
    if (p.marked(i)) s += '\'';
  }
  return s + ')';
}

}  // namespace schmidt::render
