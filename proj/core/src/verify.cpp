#include "schmidt/verify.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "schmidt/diamond.hpp"
#include "schmidt/enumerate.hpp"
#include "schmidt/json_io.hpp"
#include "schmidt/overlays.hpp"
#include "schmidt/tuple_maps.hpp"

namespace schmidt {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 8> kTheoremNames{{
    {Theorem::p_eq_q, "p=q"},
    {Theorem::f_eq_g, "f=g"},
    {Theorem::h_eq_d, "h=d"},
    {Theorem::pbar_eq_qbar, "pbar=qbar"},
    {Theorem::fbar_eq_gbar, "fbar=gbar"},
    {Theorem::durfee, "durfee"},
    {Theorem::over_durfee, "over-durfee"},
    {Theorem::staircase, "staircase"},
}};

template <class Tuple>
std::pair<std::size_t, std::size_t> longest(const Tuple& tuple) {
  std::pair<std::size_t, std::size_t> s{0, 0};
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].length() > 0 && tuple[i].length() >= s.first) s = {tuple[i].length(), i + 1};
  }
  return s;
}

template <class Tuple>
bool staggered(const Tuple& tuple) {
  const auto [t, r] = longest(tuple);
  if (t == 0) return false;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].length() != (i < r ? t : t - 1)) return false;
  }
  return true;
}

template <class Tuple>
std::size_t marks_of(const Tuple& tuple) {
  std::size_t s = 0;
  for (const auto& m : tuple) s += m.overline_count();
  return s;
}

std::pair<std::size_t, std::size_t> cut(std::size_t length, std::size_t k) {
  return {(length + k - 1) / k, 1 + (length - 1) % k};
}

// Compares one weight's worth of domain and target objects cell by cell.
template <class L, class R, class KeyL, class KeyR, class Fwd, class Inv>
std::vector<CellResult> check_weight(const std::vector<L>& lhs, const std::vector<R>& rhs, KeyL key_l, KeyR key_r,
                                     Fwd fwd, Inv inv, bool corrupt) {
  std::map<Cell, std::vector<const L*>> domain;
  std::map<Cell, std::set<R>> target;
  std::map<Cell, CellResult> results;

  for (const L& l : lhs) domain[key_l(l)].push_back(&l);
  for (const R& r : rhs) {
    const Cell c = key_r(r);
    if (!target[c].insert(r).second) {
      auto& res = results[c];
      res.problem = "duplicate object in target enumeration";
      res.witness = json(r);
    }
  }
  for (const auto& [c, items] : domain) results[c].cell = c;
  for (const auto& [c, items] : target) results[c].cell = c;

  for (auto& [c, res] : results) {
    const auto& items = domain[c];
    const auto& goal = target[c];
    res.lhs = items.size();
    res.rhs = goal.size();

    std::set<R> images;
    for (std::size_t idx = 0; idx < items.size() && res.problem.empty(); ++idx) {
      const L& obj = *items[idx];
      try {
        R image = fwd(obj);
        if (corrupt && idx == 0 && items.size() >= 2) image = fwd(*items[1]);
        if (!goal.contains(image)) {
          res.problem = "image lies outside the target cell";
          res.witness = json{{"object", json(obj)}, {"image", json(image)}};
        } else if (!images.insert(image).second) {
          res.problem = "forward map is not injective";
          res.witness = json{{"object", json(obj)}, {"image", json(image)}};
        } else if (!(inv(image) == obj)) {
          res.problem = "inverse map does not recover the object";
          res.witness = json{{"object", json(obj)}, {"image", json(image)}};
        }
      } catch (const std::exception& e) {
        res.problem = std::string("map raised: ") + e.what();
        res.witness = json{{"object", json(obj)}};
      }
    }
    if (res.problem.empty() && res.lhs != res.rhs) {
      res.problem = "counts differ";
      for (const R& r : goal) {
        if (!images.contains(r)) {
          res.witness = json{{"unmatched", json(r)}};
          break;
        }
      }
    }
    res.ok = res.problem.empty();
  }

  std::vector<CellResult> out;
  out.reserve(results.size());
  for (auto& [c, res] : results) out.push_back(std::move(res));
  return out;
}

std::vector<CellResult> verify_weight(Theorem th, Int n, int k, bool corrupt) {
  const auto uk = static_cast<std::size_t>(k);
  switch (th) {
    case Theorem::p_eq_q: {
      auto lhs = strict_partition_tuples(n, k);
      std::erase_if(lhs, [](const PartitionTuple& tp) { return !staggered(tp); });
      return check_weight(
          lhs, schmidt_partitions(n, k, true),
          [n](const PartitionTuple& tp) {
            auto [t, r] = longest(tp);
            return Cell{n, t, r, {}};
          },
          [n, uk](const SchmidtPartition& s) {
            auto [t, r] = cut(s.length(), uk);
            return Cell{n, t, r, {}};
          },
          [](const PartitionTuple& tp) { return strict_tuple_to_schmidt(tp); },
          [](const SchmidtPartition& s) { return std::get<0>(schmidt_to_strict_tuple(s)); }, corrupt);
    }
    case Theorem::f_eq_g:
      return check_weight(
          partition_tuples(n, k), schmidt_partitions(n, k, false),
          [n](const PartitionTuple& tp) {
            auto [t, r] = longest(tp);
            return Cell{n, t, r, {}};
          },
          [n, uk](const SchmidtPartition& s) {
            auto [t, r] = cut(s.length(), uk);
            return Cell{n, t, r, {}};
          },
          [](const PartitionTuple& tp) { return std::get<0>(unrestricted_tuple_to_schmidt(tp)); },
          [](const SchmidtPartition& s) { return schmidt_to_unrestricted_tuple(s); }, corrupt);
    case Theorem::h_eq_d: {
      const std::size_t block = 2 * uk + 1;
      return check_weight(
          diamond_tuples(n, k), diamonds(n, k),
          [n](const OverpartitionTuple& tp) {
            auto [t, r] = longest(tp);
            return Cell{n, t, r, {}};
          },
          [n, block](const Diamond& d) {
            const std::size_t t = d.length();
            return Cell{n, t, d.stats().nonzero_count - (t - 1) * block, {}};
          },
          [k](const OverpartitionTuple& tp) { return tuple_to_diamond(tp, k); },
          [](const Diamond& d) { return diamond_to_tuple(d); }, corrupt);
    }
    case Theorem::pbar_eq_qbar: {
      auto lhs = strict_overpartition_tuples(n, k);
      std::erase_if(lhs, [](const StrictOverpartitionTuple& tp) {
        if (!staggered(tp)) return true;
        const std::size_t r = longest(tp).second;
        for (std::size_t i = 0; i < tp.size(); ++i) {
          if (i + 1 == r) continue;
          for (std::size_t j = 0; j < tp[i].length(); ++j) {
            if (tp[i].marked(j) && tp[i][j] < 2) return true;
          }
        }
        return false;
      });
      return check_weight(
          lhs, schmidt_overpartitions(n, k, true),
          [n](const StrictOverpartitionTuple& tp) {
            auto [t, r] = longest(tp);
            return Cell{n, t, r, marks_of(tp)};
          },
          [n, uk](const SchmidtOverpartition& s) {
            auto [t, r] = cut(s.length(), uk);
            return Cell{n, t, r, s.overline_count()};
          },
          [](const StrictOverpartitionTuple& tp) { return over_strict_tuple_to_schmidt(tp); },
          [](const SchmidtOverpartition& s) { return std::get<0>(schmidt_over_to_strict_tuple(s)); }, corrupt);
    }
    case Theorem::fbar_eq_gbar:
      return check_weight(
          overpartition_tuples(n, k), schmidt_overpartitions(n, k, false),
          [n](const OverpartitionTuple& tp) {
            auto [t, r] = longest(tp);
            return Cell{n, t, r, marks_of(tp)};
          },
          [n, uk](const SchmidtOverpartition& s) {
            auto [t, r] = cut(s.length(), uk);
            return Cell{n, t, r, s.overline_count()};
          },
          [](const OverpartitionTuple& tp) { return std::get<0>(over_unrestricted_tuple_to_schmidt(tp)); },
          [](const SchmidtOverpartition& s) { return schmidt_over_to_unrestricted_tuple(s); }, corrupt);
    case Theorem::durfee:
      return check_weight(
          partitions(n), schmidt_partitions(n, 2, true),
          [n](const Partition& p) { return Cell{n, durfee_size(p), 0, {}}; },
          [n](const SchmidtPartition& s) { return Cell{n, cut(s.length(), 2).first, 0, {}}; },
          [](const Partition& p) {
            auto [alpha, beta] = durfee_decompose(p);
            return strict_tuple_to_schmidt(PartitionTuple{alpha, beta});
          },
          [](const SchmidtPartition& s) {
            auto [tp, t, r] = schmidt_to_strict_tuple(s);
            return durfee_compose(tp[0], tp[1]);
          },
          corrupt);
    case Theorem::over_durfee:
      return check_weight(
          overpartitions(n), schmidt_overpartitions(n, 2, true),
          [n](const Overpartition& p) { return Cell{n, durfee_size(p.underlying()), 0, p.overline_count()}; },
          [n](const SchmidtOverpartition& s) { return Cell{n, cut(s.length(), 2).first, 0, s.overline_count()}; },
          [](const Overpartition& p) {
            auto [alpha, beta] = over_durfee_decompose(p);
            return over_strict_tuple_to_schmidt(StrictOverpartitionTuple{alpha, beta});
          },
          [](const SchmidtOverpartition& s) {
            auto [tp, t, r] = schmidt_over_to_strict_tuple(s);
            return over_durfee_compose(tp[0], tp[1]);
          },
          corrupt);
    case Theorem::staircase: {
      // (alpha 2-distinct of length t, beta strict of length t, gamma of length <= t)
      std::vector<PartitionTuple> lhs;
      for (Int a = 1; a <= n; ++a) {
        for (Int b = 1; a + b <= n; ++b) {
          const Int c = n - a - b;
          for (const auto& alpha : partitions(a)) {
            if (!is_k_distinct(alpha, 2)) continue;
            for (const auto& beta : strict_partitions(b)) {
              if (beta.length() != alpha.length()) continue;
              for (const auto& gamma : partitions(c)) {
                if (gamma.length() <= alpha.length()) lhs.push_back({alpha, beta, gamma});
              }
            }
          }
        }
      }
      auto rhs = schmidt_partitions(n, 3, true);
      std::erase_if(rhs, [](const SchmidtPartition& s) { return cut(s.length(), 3).second == 1; });
      return check_weight(
          lhs, rhs,
          [n](const PartitionTuple& tp) {
            const std::size_t t = tp[0].length();
            return Cell{n, t, tp[2].length() == t ? std::size_t{3} : std::size_t{2}, {}};
          },
          [n](const SchmidtPartition& s) {
            auto [t, r] = cut(s.length(), 3);
            return Cell{n, t, r, {}};
          },
          [](const PartitionTuple& tp) {
            Triple out = staircase_transform({tp[0], tp[1], tp[2]}, tp[0].length(), Direction::forward);
            return strict_tuple_to_schmidt(PartitionTuple{out.first, out.second, out.third});
          },
          [](const SchmidtPartition& s) {
            auto [tp, t, r] = schmidt_to_strict_tuple(s);
            Triple back = staircase_transform({tp[0], tp[1], tp[2]}, t, Direction::backward);
            return PartitionTuple{back.first, back.second, back.third};
          },
          corrupt);
    }
  }
  return {};
}

}  // namespace

std::optional<Theorem> parse_theorem(std::string_view id) {
  if (id == "p̄=q̄") return Theorem::pbar_eq_qbar;
  if (id == "f̄=ḡ") return Theorem::fbar_eq_gbar;
  if (id == "over_durfee") return Theorem::over_durfee;
  for (const auto& [th, name] : kTheoremNames) {
    if (name == id) return th;
  }
  return std::nullopt;
}

std::string_view theorem_name(Theorem th) {
  for (const auto& [t, name] : kTheoremNames) {
    if (t == th) return name;
  }
  return "?";
}

bool Report::ok() const noexcept {
  return std::all_of(cells.begin(), cells.end(), [](const CellResult& c) { return c.ok; });
}

Report verify_bijection(Theorem th, Int n_max, int k, const VerifyOptions& options) {
  if (th == Theorem::durfee || th == Theorem::over_durfee) k = 2;
  if (th == Theorem::staircase) k = 3;
  if (k < 1) throw DomainError("verify: k must be positive");
  if (options.n_min < 0) throw DomainError("verify: n_min must be nonnegative");

  Report report{th, k, n_max, {}};
  std::vector<Int> weights;
  for (Int n = options.n_min; n <= n_max; ++n) weights.push_back(n);

  // Weights are independent; workers take them round-robin and results are
  // merged by weight so the output order never depends on scheduling.
  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(weights.size())));
  std::vector<std::vector<CellResult>> per_weight(weights.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
      per_weight[i] = verify_weight(th, weights[i], k, options.corrupt_mapping);
    }
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < weights.size(); i += workers) {
          per_weight[i] = verify_weight(th, weights[i], k, options.corrupt_mapping);
        }
      }));
    }
    for (auto& j : jobs) j.get();
  }
  for (auto& cells : per_weight) {
    for (auto& c : cells) report.cells.push_back(std::move(c));
  }
  return report;
}

json cell_json(const Cell& c) {
  json j{{"n", c.n}, {"t", c.t}, {"r", c.r}};
  if (c.s) j["s"] = *c.s;
  return j;
}

json report_json(const Report& report) {
  json cells = json::array();
  for (const auto& c : report.cells) {
    cells.push_back({{"cell", cell_json(c.cell)},
                     {"lhs", c.lhs},
                     {"rhs", c.rhs},
                     {"ok", c.ok},
                     {"witness", c.witness ? *c.witness : json(nullptr)}});
  }
  return {{"theorem", theorem_name(report.theorem)},
          {"k", report.k},
          {"n_max", report.n_max},
          {"ok", report.ok()},
          {"cells", std::move(cells)}};
}

std::string format_report(const Report& report) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : report.cells) {
    os << "n=" << c.cell.n << " t=" << c.cell.t << " r=" << c.cell.r;
    if (c.cell.s) os << " s=" << *c.cell.s;
    os << "  lhs=" << c.lhs << " rhs=" << c.rhs << "  " << (c.ok ? "ok" : "FAIL");
    if (!c.ok) {
      ++failed;
      os << "  " << c.problem;
      if (c.witness) os << "  witness=" << c.witness->dump();
    }
    os << '\n';
  }
  os << "theorem " << theorem_name(report.theorem) << " k=" << report.k << " n<=" << report.n_max << ": "
     << report.cells.size() << " cells, ";
  if (failed == 0) {
    os << "all pass\n";
  } else {
    os << failed << " FAILED\n";
  }
  return os.str();
}

}  // namespace schmidt
