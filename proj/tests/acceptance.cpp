// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "schmidt/diamond.hpp"
#include "schmidt/enumerate.hpp"
#include "schmidt/overlays.hpp"
#include "schmidt/phi.hpp"
#include "schmidt/qseries.hpp"
#include "schmidt/tuple_maps.hpp"
#include "schmidt/verify.hpp"

using namespace schmidt;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

bool verified(Outcome& o, Theorem th, Int n_max, int k) {
  const Report r = verify_bijection(th, n_max, k);
  std::size_t cells = 0;
  for (const auto& c : r.cells) {
    ++cells;
    if (!c.ok) {
      std::ostringstream os;
      os << theorem_name(th) << " k=" << k << " cell " << cell_json(c.cell).dump() << ": " << c.problem;
      o.fail(os.str());
      return false;
    }
    if (c.lhs != c.rhs) {
      o.fail(std::string(theorem_name(th)) + ": count mismatch");
      return false;
    }
  }
  if (cells == 0) o.fail(std::string(theorem_name(th)) + ": no cells checked");
  return o.ok;
}

Overpartition op(std::vector<Int> parts, std::vector<bool> marks = {}) {
  if (marks.empty()) marks.assign(parts.size(), false);
  return Overpartition(std::move(parts), std::move(marks));
}

StrictOverpartition sop(std::vector<Int> parts, std::vector<bool> marks = {}) {
  if (marks.empty()) marks.assign(parts.size(), false);
  return StrictOverpartition(std::move(parts), std::move(marks));
}

Outcome phi_worked_example() {
  Outcome o;
  const IntMatrix a{{5, 5, 4, 3}, {7, 4, 1, 0}, {-5, -9, 0, 1}};
  const std::vector<Int> want{7, 7, 4, 0, -1, -4, 5, 4, 3, 4, 1, 1};
  if (phi_forward(a) != want) o.fail("forward image differs");
  if (phi_inverse(want, 3) != a) o.fail("inverse does not recover the matrix");
  return o;
}

Outcome phi_round_trip() {
  Outcome o;
  std::mt19937 rng(12345);
  std::uniform_int_distribution<Int> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int it = 0; it < 10000 && o.ok; ++it) {
    const std::size_t k = dim(rng), t = dim(rng);
    IntMatrix a(k, t);
    std::vector<Int> s(k * t);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < t; ++j) a(i, j) = entry(rng);
    }
    for (auto& v : s) v = entry(rng);
    if (phi_forward(a) != oracle::phi(a.to_rows())) o.fail("forward disagrees with the entry formula");
    if (phi_inverse(phi_forward(a), k) != a) o.fail("inverse(forward(A)) != A at iteration " + std::to_string(it));
    if (phi_forward(phi_inverse(s, k)) != s) o.fail("forward(inverse(s)) != s at iteration " + std::to_string(it));
  }
  return o;
}

// Zeros confined to the bottom of the last column, rows strict.
bool zeros_in_last_column(const IntMatrix& a) {
  const std::size_t k = a.rows(), t = a.cols();
  bool seen = false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (j + 1 < t && a(i, j) <= a(i, j + 1)) return false;
      if (j + 1 < t && a(i, j) == 0) return false;
    }
    if (a(i, t - 1) == 0) {
      seen = true;
    } else if (seen) {
      return false;
    }
  }
  return true;
}

Outcome phi_theorem_exhaustive() {
  Outcome o;
  std::size_t checked = 0, spill = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t t = 1; t <= 3; ++t) {
      const std::size_t cells = k * t;
      std::size_t total = 1;
      for (std::size_t c = 0; c < cells; ++c) total *= 4;
      IntMatrix a(k, t);
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t x = code;
        for (std::size_t c = 0; c < cells; ++c, x /= 4) a(c / t, c % t) = static_cast<Int>(x % 4);
        const auto m = classify_matrix(a);
        const auto s = classify_sequence(phi_forward(a));
        if (m.weak_rows != s.weakly_decreasing || m.strict_rows_with_zero_tail != s.strictly_decreasing_mod_zero_tail) {
          o.fail("exception at k=" + std::to_string(k) + " t=" + std::to_string(t) + " code " + std::to_string(code));
        }
        if (zeros_in_last_column(a) != m.strict_rows_with_zero_tail) ++spill;
        ++checked;
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(checked) + " matrices; " + std::to_string(spill) +
               " have a zero run leaving the last column";
  }
  return o;
}

Outcome p_eq_q() {
  Outcome o;
  for (int k : {2, 3}) verified(o, Theorem::p_eq_q, 15, k);
  return o;
}

Outcome f_eq_g() {
  Outcome o;
  for (int k : {2, 3}) verified(o, Theorem::f_eq_g, 12, k);
  for (Int n = 0; n <= 12 && o.ok; ++n) {
    CountOptions brute{1000};
    if (count({Family::UNRESTRICTED_SCHMIDT_ANY, n, 2, {}, {}, {}}, brute) !=
        count({Family::KTUPLE, n, 2, {}, {}, {}}, brute)) {
      o.fail("k-tuple corollary fails at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome h_eq_d() {
  Outcome o;
  for (int k : {1, 2}) verified(o, Theorem::h_eq_d, 6, k);
  const OverpartitionTuple tuple{op({5, 2}), op({7, 4, 4, 2}, {false, false, true, false}), op({11, 3, 2, 1}),
                                 op({6, 5, 3}, {true, false, true}), op({8, 8, 2})};
  const std::vector<Int> pi{37, 34, 31, 22, 23, 22, 20, 20, 19, 17, 11, 9, 11, 5, 8, 3, 3, 1, 0, 0, 0};
  const Diamond d = tuple_to_diamond(tuple, 2);
  if (d.entries() != pi) o.fail("worked diamond differs");
  if (d.length() != 4 || d.weight() != 73 || d.stats().nonzero_count != 18) o.fail("worked diamond statistics");
  if (diamond_to_tuple(Diamond(2, pi)) != tuple) o.fail("worked diamond does not map back");
  return o;
}

Outcome diamond_series() {
  Outcome o;
  const std::pair<unsigned, std::size_t> ranges[] = {{1, 10}, {2, 8}};
  for (auto [k, n_max] : ranges) {
    const auto gf = diamond_gf(k, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
      const auto brute = diamonds(static_cast<Int>(n), static_cast<int>(k)).size();
      if (gf[n] != brute) {
        o.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + ": series " + gf[n].str() + " vs " +
               std::to_string(brute));
      }
    }
  }
  if (diamond_gf(1, 1)[1] != 4 || diamonds(1, 1).size() != 4) o.fail("q^1 coefficient for k=1 is not 4");
  return o;
}

Outcome schmidt_original() {
  Outcome o;
  for (Int n = 0; n <= 30 && o.ok; ++n) {
    if (count({Family::SCHMIDT_ANY, n, 2, {}, {}, {}}) != count({Family::PARTITIONS, n, 1, {}, {}, {}}, {1000})) {
      o.fail("count mismatch at n=" + std::to_string(n));
    }
  }
  verified(o, Theorem::durfee, 20, 2);
  return o;
}

Outcome overpartition_theorems() {
  Outcome o;
  for (int k : {2, 3}) {
    verified(o, Theorem::pbar_eq_qbar, 10, k);
    verified(o, Theorem::fbar_eq_gbar, 10, k);
  }
  const StrictOverpartitionTuple triple{sop({9, 6, 4, 2, 1}, {false, false, true, false, false}),
                                        sop({13, 8, 7, 3, 1}, {true, false, true, false, true}),
                                        sop({11, 7, 5, 2}, {false, true, false, true})};
  const Overpartition want({33, 30, 25, 21, 19, 18, 16, 14, 10, 7, 6, 4, 2, 1},
                           {false, true, false, false, false, true, true, true, false, false, false, true, false, true});
  const auto s = over_strict_tuple_to_schmidt(triple);
  if (s.overpartition() != want || s.weight() != 79 || s.overline_count() != 6) o.fail("worked triple image differs");
  if (std::get<0>(schmidt_over_to_strict_tuple(s)) != triple) o.fail("worked triple does not map back");
  verified(o, Theorem::over_durfee, 12, 2);
  return o;
}

Outcome series_oracles() {
  Outcome o;
  const std::size_t N = 25;
  const auto p = partition_gf(N);
  const auto bi = evaluate_product("1 / POCH(1,1)^2", N);
  const auto ov = overpartition_gf(N);
  for (std::size_t n = 0; n <= N; ++n) {
    const Int w = static_cast<Int>(n);
    if (p[n] != partitions(w).size()) o.fail("partition coefficient at n=" + std::to_string(n));
    if (bi[n] != partition_tuples(w, 2).size()) o.fail("bipartition coefficient at n=" + std::to_string(n));
    if (ov[n] != overpartitions(w).size()) o.fail("overpartition coefficient at n=" + std::to_string(n));
  }
  const auto table = bivariate_over_gf(10);
  for (Int n = 0; n <= 10; ++n) {
    std::vector<std::uint64_t> by_s(11, 0);
    for (const auto& s : schmidt_overpartitions(n, 2, true)) ++by_s[s.overline_count()];
    for (std::size_t s = 0; s <= 10; ++s) {
      if (table[static_cast<std::size_t>(n)][s] != by_s[s]) {
        o.fail("T[" + std::to_string(n) + "][" + std::to_string(s) + "]");
      }
    }
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "phi worked example", 1.0, phi_worked_example},
      {2, "phi round trip on 10000 random matrices", 5.0, phi_round_trip},
      {3, "matrix/sequence monotonicity equivalences, exhaustive", 120.0, phi_theorem_exhaustive},
      {4, "p=q, n<=15, k in {2,3}", 120.0, p_eq_q},
      {5, "f=g, n<=12, k in {2,3}, k-tuple corollary", 120.0, f_eq_g},
      {6, "h=d, n<=6, k in {1,2}, worked diamond", 300.0, h_eq_d},
      {7, "diamond generating function vs enumeration", 300.0, diamond_series},
      {8, "Schmidt's theorem n<=30, Durfee refinement n<=20", 60.0, schmidt_original},
      {9, "overpartition theorems, worked triple, overpartition Durfee", 300.0, overpartition_theorems},
      {10, "series oracles and bivariate table", 60.0, series_oracles},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) o.fail("runtime limit exceeded");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << timing << ")";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << '\n';
    failed += o.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria FAILED") << '\n';
  return failed == 0 ? 0 : 1;
}
