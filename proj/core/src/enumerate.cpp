#include "schmidt/enumerate.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "schmidt/json_io.hpp"

namespace schmidt {

namespace {

void require_weight(Int n) {
  if (n < 0) throw DomainError("weight n must be nonnegative");
}

void require_k(int k) {
  if (k < 1) throw DomainError("k must be positive");
}

void partitions_rec(Int rem, Int max_part, bool strict, std::vector<Int>& cur, std::vector<Partition>& out) {
  if (rem == 0) {
    out.emplace_back(cur);
    return;
  }
  for (Int v = std::min(max_part, rem); v >= 1; --v) {
    cur.push_back(v);
    partitions_rec(rem - v, strict ? v - 1 : v, strict, cur, out);
    cur.pop_back();
  }
}

void overpartitions_rec(Int rem, Int max_part, std::vector<Int>& parts, std::vector<bool>& marks,
                        std::vector<Overpartition>& out) {
  if (rem == 0) {
    out.emplace_back(parts, marks);
    return;
  }
  // Choose the next distinct value, its multiplicity, and whether its final
  // occurrence is overlined.
  for (Int v = std::min(max_part, rem); v >= 1; --v) {
    for (Int mult = 1; mult * v <= rem; ++mult) {
      for (bool mark : {false, true}) {
        for (Int c = 0; c < mult; ++c) {
          parts.push_back(v);
          marks.push_back(mark && c + 1 == mult);
        }
        overpartitions_rec(rem - mult * v, v - 1, parts, marks, out);
        parts.resize(parts.size() - static_cast<std::size_t>(mult));
        marks.resize(marks.size() - static_cast<std::size_t>(mult));
      }
    }
  }
}

// Calls emit(marks) for every subset of the eligible positions.
template <class Emit>
void mark_subsets(const std::vector<std::size_t>& eligible, std::size_t length, Emit&& emit) {
  const std::size_t m = eligible.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<bool> marks(length, false);
    for (std::size_t b = 0; b < m; ++b) {
      if (mask & (std::size_t{1} << b)) marks[eligible[b]] = true;
    }
    emit(std::move(marks));
  }
}

// Positions where a strict overpartition may carry a mark.
std::vector<std::size_t> strict_markable(const std::vector<Int>& parts) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 == parts.size() || parts[i] - parts[i + 1] >= 2) out.push_back(i);
  }
  return out;
}

// Positions holding the final occurrence of their value.
std::vector<std::size_t> final_occurrences(const std::vector<Int>& parts) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 == parts.size() || parts[i] != parts[i + 1]) out.push_back(i);
  }
  return out;
}

// by_weight[slot][w] lists the admissible members of `slot` with weight w.
template <class M>
void product_rec(const std::vector<const std::vector<std::vector<M>>*>& by_weight, std::size_t slot, Int rem,
                 std::vector<M>& cur, std::vector<std::vector<M>>& out) {
  if (slot == by_weight.size()) {
    if (rem == 0) out.push_back(cur);
    return;
  }
  const bool last = slot + 1 == by_weight.size();
  for (Int w = last ? rem : 0; w <= rem; ++w) {
    for (const M& m : (*by_weight[slot])[static_cast<std::size_t>(w)]) {
      cur.push_back(m);
      product_rec(by_weight, slot + 1, rem - w, cur, out);
      cur.pop_back();
    }
  }
}

template <class M, class Gen>
std::vector<std::vector<M>> by_weight_table(Int n, Gen&& gen) {
  std::vector<std::vector<M>> table;
  table.reserve(static_cast<std::size_t>(n) + 1);
  for (Int w = 0; w <= n; ++w) table.push_back(gen(w));
  return table;
}

template <class M>
std::vector<std::vector<M>> homogeneous_tuples(Int n, int k, const std::vector<std::vector<M>>& table) {
  std::vector<const std::vector<std::vector<M>>*> slots(static_cast<std::size_t>(k), &table);
  std::vector<std::vector<M>> out;
  std::vector<M> cur;
  product_rec(slots, 0, n, cur, out);
  return out;
}

void schmidt_rec(int k, bool strict, std::size_t pos, Int upper, Int rem, std::vector<Int>& cur,
                 std::vector<SchmidtPartition>& out) {
  if (rem == 0 && !cur.empty()) out.emplace_back(Partition(cur), k);
  const bool counted = pos % static_cast<std::size_t>(k) == 0;
  const Int top = counted ? std::min(upper, rem) : upper;
  for (Int v = top; v >= 1; --v) {
    cur.push_back(v);
    schmidt_rec(k, strict, pos + 1, strict ? v - 1 : v, counted ? rem - v : rem, cur, out);
    cur.pop_back();
  }
}

// Diamonds: heads are chosen at block starts, then the k pairs, each pair
// bounded by the minimum of the group before it.
struct DiamondBuilder {
  int k;
  std::vector<Int> cur;
  std::vector<Diamond>* out;

  void block(Int upper, Int rem) {
    for (Int h = std::min(upper, rem); h >= 1; --h) {
      cur.push_back(h);
      pairs(0, h, rem - h);
      cur.pop_back();
    }
  }

  void pairs(int m, Int bound, Int rem) {
    if (m == k) {
      if (rem == 0) {
        cur.push_back(0);
        out->emplace_back(k, cur);
        cur.pop_back();
      } else if (bound >= 1) {
        block(bound, rem);
      }
      return;
    }
    for (Int a = 0; a <= bound; ++a) {
      for (Int b = 0; b <= bound; ++b) {
        cur.push_back(a);
        cur.push_back(b);
        pairs(m + 1, std::min(a, b), rem);
        cur.pop_back();
        cur.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<Partition> partitions(Int n) {
  require_weight(n);
  std::vector<Partition> out;
  std::vector<Int> cur;
  partitions_rec(n, n, false, cur, out);
  return out;
}

std::vector<Partition> strict_partitions(Int n) {
  require_weight(n);
  std::vector<Partition> out;
  std::vector<Int> cur;
  partitions_rec(n, n, true, cur, out);
  return out;
}

std::vector<Overpartition> overpartitions(Int n) {
  require_weight(n);
  std::vector<Overpartition> out;
  std::vector<Int> parts;
  std::vector<bool> marks;
  overpartitions_rec(n, n, parts, marks, out);
  return out;
}

std::vector<StrictOverpartition> strict_overpartitions(Int n) {
  std::vector<StrictOverpartition> out;
  for (const auto& p : strict_partitions(n)) {
    mark_subsets(strict_markable(p.parts()), p.length(),
                 [&](std::vector<bool> marks) { out.emplace_back(p.parts(), std::move(marks)); });
  }
  return out;
}

std::vector<PartitionTuple> partition_tuples(Int n, int k) {
  require_weight(n);
  require_k(k);
  return homogeneous_tuples(n, k, by_weight_table<Partition>(n, partitions));
}

std::vector<PartitionTuple> strict_partition_tuples(Int n, int k) {
  require_weight(n);
  require_k(k);
  return homogeneous_tuples(n, k, by_weight_table<Partition>(n, strict_partitions));
}

std::vector<OverpartitionTuple> overpartition_tuples(Int n, int k) {
  require_weight(n);
  require_k(k);
  return homogeneous_tuples(n, k, by_weight_table<Overpartition>(n, overpartitions));
}

std::vector<StrictOverpartitionTuple> strict_overpartition_tuples(Int n, int k) {
  require_weight(n);
  require_k(k);
  return homogeneous_tuples(n, k, by_weight_table<StrictOverpartition>(n, strict_overpartitions));
}

std::vector<OverpartitionTuple> diamond_tuples(Int n, int k) {
  require_weight(n);
  require_k(k);
  const auto plain = by_weight_table<Overpartition>(n, [](Int w) {
    std::vector<Overpartition> out;
    for (const auto& p : partitions(w)) out.emplace_back(p);
    return out;
  });
  const auto marked = by_weight_table<Overpartition>(n, overpartitions);
  std::vector<const std::vector<std::vector<Overpartition>>*> slots;
  for (int i = 0; i < 2 * k + 1; ++i) slots.push_back(i % 2 == 0 ? &plain : &marked);
  std::vector<OverpartitionTuple> out;
  OverpartitionTuple cur;
  product_rec(slots, 0, n, cur, out);
  return out;
}

std::vector<SchmidtPartition> schmidt_partitions(Int n, int k, bool strict) {
  require_weight(n);
  require_k(k);
  std::vector<SchmidtPartition> out;
  if (n == 0) {
    out.emplace_back(Partition{}, k);
    return out;
  }
  // The first part is counted, so every part is at most n.
  std::vector<Int> cur;
  schmidt_rec(k, strict, 0, n, n, cur, out);
  return out;
}

std::vector<SchmidtOverpartition> schmidt_overpartitions(Int n, int k, bool strict) {
  std::vector<SchmidtOverpartition> out;
  for (const auto& s : schmidt_partitions(n, k, strict)) {
    const auto& parts = s.parts();
    mark_subsets(strict ? strict_markable(parts) : final_occurrences(parts), parts.size(),
                 [&](std::vector<bool> marks) { out.emplace_back(Overpartition(parts, std::move(marks)), k); });
  }
  return out;
}

std::vector<Diamond> diamonds(Int n, int k) {
  require_weight(n);
  require_k(k);
  std::vector<Diamond> out;
  if (n == 0) {
    out.emplace_back(k, std::vector<Int>(2 * static_cast<std::size_t>(k) + 2, 0));
    return out;
  }
  // Heads dominate everything after them, so every entry is at most n.
  DiamondBuilder b{k, {}, &out};
  b.block(n, n);
  return out;
}

// ---------------------------------------------------------------------------
// Family dispatch

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 17> kFamilyNames{{
    {Family::P, "P"},
    {Family::Q, "Q"},
    {Family::F, "F"},
    {Family::G, "G"},
    {Family::H, "H"},
    {Family::D, "D"},
    {Family::PBAR, "PBAR"},
    {Family::QBAR, "QBAR"},
    {Family::FBAR, "FBAR"},
    {Family::GBAR, "GBAR"},
    {Family::PARTITIONS, "PARTITIONS"},
    {Family::STRICT, "STRICT"},
    {Family::OVERPARTITIONS, "OVERPARTITIONS"},
    {Family::KTUPLE, "KTUPLE"},
    {Family::SCHMIDT_ANY, "SCHMIDT_ANY"},
    {Family::UNRESTRICTED_SCHMIDT_ANY, "UNRESTRICTED_SCHMIDT_ANY"},
    {Family::DIAMOND_ANY, "DIAMOND_ANY"},
}};

bool uses_shape(Family f) {
  switch (f) {
    case Family::P: case Family::Q: case Family::F: case Family::G: case Family::H: case Family::D:
    case Family::PBAR: case Family::QBAR: case Family::FBAR: case Family::GBAR:
      return true;
    default:
      return false;
  }
}

bool uses_marks(Family f) {
  switch (f) {
    case Family::PBAR: case Family::QBAR: case Family::FBAR: case Family::GBAR: case Family::OVERPARTITIONS:
      return true;
    default:
      return false;
  }
}

struct Shape {
  std::size_t t;
  std::size_t r;
};

// Longest member length t and the last slot attaining it (1-based).
template <class Tuple>
Shape longest(const Tuple& tuple) {
  Shape s{0, 0};
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].length() > 0 && tuple[i].length() >= s.t) s = {tuple[i].length(), i + 1};
  }
  return s;
}

// Members 1..r of length t, members r+1..k of length t-1.
template <class Tuple>
bool staggered(const Tuple& tuple, Shape s) {
  if (s.t == 0) return false;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].length() != (i < s.r ? s.t : s.t - 1)) return false;
  }
  return true;
}

Shape sequence_cut(std::size_t length, std::size_t k) {
  if (length == 0) return {0, 0};
  return {(length + k - 1) / k, 1 + (length - 1) % k};
}

template <class Tuple>
std::size_t tuple_marks(const Tuple& tuple) {
  std::size_t s = 0;
  for (const auto& m : tuple) s += m.overline_count();
  return s;
}

bool matches(const FamilySpec& spec, Shape got) { return got.t == *spec.t && got.r == *spec.r; }

bool marks_match(const FamilySpec& spec, std::size_t s) { return !spec.s || *spec.s == s; }

template <class T>
void append(std::vector<Object>& out, std::vector<T>&& items) {
  out.reserve(out.size() + items.size());
  for (auto& x : items) out.emplace_back(std::move(x));
}

std::vector<Object> generate(const FamilySpec& spec) {
  validate_spec(spec);
  const Int n = spec.n;
  const int k = spec.k;
  const auto uk = static_cast<std::size_t>(k);
  std::vector<Object> out;

  switch (spec.family) {
    case Family::PARTITIONS:
      append(out, partitions(n));
      break;
    case Family::STRICT:
      append(out, strict_partitions(n));
      break;
    case Family::OVERPARTITIONS: {
      auto all = overpartitions(n);
      std::erase_if(all, [&](const Overpartition& p) { return !marks_match(spec, p.overline_count()); });
      append(out, std::move(all));
      break;
    }
    case Family::KTUPLE:
      append(out, partition_tuples(n, k));
      break;
    case Family::SCHMIDT_ANY:
      append(out, schmidt_partitions(n, k, true));
      break;
    case Family::UNRESTRICTED_SCHMIDT_ANY:
      append(out, schmidt_partitions(n, k, false));
      break;
    case Family::DIAMOND_ANY:
      append(out, diamonds(n, k));
      break;
    case Family::P: {
      auto all = strict_partition_tuples(n, k);
      std::erase_if(all, [&](const PartitionTuple& tp) {
        const Shape s = longest(tp);
        return !staggered(tp, s) || !matches(spec, s);
      });
      append(out, std::move(all));
      break;
    }
    case Family::Q: {
      auto all = schmidt_partitions(n, k, true);
      std::erase_if(all, [&](const SchmidtPartition& s) { return !matches(spec, sequence_cut(s.length(), uk)); });
      append(out, std::move(all));
      break;
    }
    case Family::F: {
      auto all = partition_tuples(n, k);
      std::erase_if(all, [&](const PartitionTuple& tp) { return !matches(spec, longest(tp)); });
      append(out, std::move(all));
      break;
    }
    case Family::G: {
      auto all = schmidt_partitions(n, k, false);
      std::erase_if(all, [&](const SchmidtPartition& s) { return !matches(spec, sequence_cut(s.length(), uk)); });
      append(out, std::move(all));
      break;
    }
    case Family::H: {
      auto all = diamond_tuples(n, k);
      std::erase_if(all, [&](const OverpartitionTuple& tp) { return !matches(spec, longest(tp)); });
      append(out, std::move(all));
      break;
    }
    case Family::D: {
      auto all = diamonds(n, k);
      const std::size_t block = 2 * uk + 1;
      std::erase_if(all, [&](const Diamond& d) {
        const std::size_t t = d.length();
        const std::size_t nz = d.stats().nonzero_count;
        if (d.weight() == 0 || nz <= (t - 1) * block) return true;
        return !matches(spec, {t, nz - (t - 1) * block});
      });
      append(out, std::move(all));
      break;
    }
    case Family::PBAR: {
      auto all = strict_overpartition_tuples(n, k);
      std::erase_if(all, [&](const StrictOverpartitionTuple& tp) {
        const Shape s = longest(tp);
        if (!staggered(tp, s) || !matches(spec, s) || !marks_match(spec, tuple_marks(tp))) return true;
        for (std::size_t i = 0; i < tp.size(); ++i) {
          if (i + 1 == s.r) continue;
          for (std::size_t j = 0; j < tp[i].length(); ++j) {
            if (tp[i].marked(j) && tp[i][j] < 2) return true;
          }
        }
        return false;
      });
      append(out, std::move(all));
      break;
    }
    case Family::QBAR: {
      auto all = schmidt_overpartitions(n, k, true);
      std::erase_if(all, [&](const SchmidtOverpartition& s) {
        return !matches(spec, sequence_cut(s.length(), uk)) || !marks_match(spec, s.overline_count());
      });
      append(out, std::move(all));
      break;
    }
    case Family::FBAR: {
      auto all = overpartition_tuples(n, k);
      std::erase_if(all, [&](const OverpartitionTuple& tp) {
        return !matches(spec, longest(tp)) || !marks_match(spec, tuple_marks(tp));
      });
      append(out, std::move(all));
      break;
    }
    case Family::GBAR: {
      auto all = schmidt_overpartitions(n, k, false);
      std::erase_if(all, [&](const SchmidtOverpartition& s) {
        return !matches(spec, sequence_cut(s.length(), uk)) || !marks_match(spec, s.overline_count());
      });
      append(out, std::move(all));
      break;
    }
  }
  return out;
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, s] : kFamilyNames) {
    if (s == name) return f;
  }
  return std::nullopt;
}

std::string_view family_name(Family f) {
  for (const auto& [g, s] : kFamilyNames) {
    if (g == f) return s;
  }
  return "?";
}

void validate_spec(const FamilySpec& spec) {
  const std::string name(family_name(spec.family));
  if (spec.n < 0) throw DomainError(name + ": n must be nonnegative");
  if (spec.k < 1) throw DomainError(name + ": k must be positive");
  if (uses_shape(spec.family)) {
    if (!spec.t || !spec.r) throw DomainError(name + ": requires t and r");
    const bool wide = spec.family == Family::H || spec.family == Family::D;
    const std::size_t r_max = wide ? 2 * static_cast<std::size_t>(spec.k) + 1 : static_cast<std::size_t>(spec.k);
    if (*spec.t < 1) throw DomainError(name + ": t must be at least 1");
    if (*spec.r < 1 || *spec.r > r_max) {
      throw DomainError(name + ": r must lie in 1.." + std::to_string(r_max));
    }
  } else if (spec.t || spec.r) {
    throw DomainError(name + ": does not take t or r");
  }
  if (spec.s && !uses_marks(spec.family)) throw DomainError(name + ": does not take s");
}

nlohmann::json to_json(const Object& obj) {
  return std::visit([](const auto& v) { return nlohmann::json(v); }, obj);
}

std::vector<Object> enumerate(const FamilySpec& spec) {
  std::vector<Object> objects = generate(spec);
  std::vector<std::pair<nlohmann::json, std::size_t>> keyed;
  keyed.reserve(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i) keyed.emplace_back(to_json(objects[i]), i);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (canonical_less(x.first, y.first)) return true;
    if (canonical_less(y.first, x.first)) return false;
    return x.second < y.second;
  });
  std::vector<Object> out;
  out.reserve(objects.size());
  for (auto& [key, i] : keyed) out.push_back(std::move(objects[i]));
  return out;
}

BigInt count_partitions_dp(Int n) {
  require_weight(n);
  std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1);
  ways[0] = 1;
  for (Int part = 1; part <= n; ++part) {
    for (Int w = part; w <= n; ++w) ways[static_cast<std::size_t>(w)] += ways[static_cast<std::size_t>(w - part)];
  }
  return ways[static_cast<std::size_t>(n)];
}

BigInt count_tuples_dp(Int n, int k) {
  require_weight(n);
  require_k(k);
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<BigInt> p(size);
  for (std::size_t w = 0; w < size; ++w) p[w] = count_partitions_dp(static_cast<Int>(w));
  std::vector<BigInt> acc = p;
  for (int i = 1; i < k; ++i) {
    std::vector<BigInt> next(size);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; a + b < size; ++b) next[a + b] += acc[a] * p[b];
    }
    acc = std::move(next);
  }
  return acc.back();
}

BigInt count_overpartitions_dp(Int n) {
  require_weight(n);
  const auto size = static_cast<std::size_t>(n) + 1;
  // overlined parts form a strict partition, the rest an ordinary one
  std::vector<BigInt> strict(size);
  strict[0] = 1;
  for (std::size_t part = 1; part < size; ++part) {
    for (std::size_t w = size - 1; w >= part; --w) strict[w] += strict[w - part];
  }
  BigInt total = 0;
  for (std::size_t a = 0; a < size; ++a) total += count_partitions_dp(static_cast<Int>(a)) * strict[size - 1 - a];
  return total;
}

BigInt count(const FamilySpec& spec, const CountOptions& options) {
  validate_spec(spec);
  if (spec.n > options.crossover) {
    switch (spec.family) {
      case Family::PARTITIONS:
        return count_partitions_dp(spec.n);
      case Family::KTUPLE:
        return count_tuples_dp(spec.n, spec.k);
      case Family::OVERPARTITIONS:
        if (!spec.s) return count_overpartitions_dp(spec.n);
        break;
      default:
        break;
    }
  }
  return BigInt(generate(spec).size());
}

}  // namespace schmidt
