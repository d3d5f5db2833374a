#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "render.hpp"
#include "schmidt/diamond.hpp"
#include "schmidt/enumerate.hpp"
#include "schmidt/errors.hpp"
#include "schmidt/json_io.hpp"
#include "schmidt/overlays.hpp"
#include "schmidt/phi.hpp"
#include "schmidt/qseries.hpp"
#include "schmidt/tuple_maps.hpp"
#include "schmidt/verify.hpp"

namespace schmidt::cli {

namespace {

using nlohmann::json;

struct FamilyFlags {
  std::string family;
  Int n = 0;
  int k = 1;
  std::optional<std::size_t> t, r, s;
  Int crossover = CountOptions{}.crossover;
  bool json_out = false;
};

struct MapFlags {
  std::string theorem;
  std::string direction = "forward";
  std::string input;
  std::optional<int> k;
};

struct VerifyFlags {
  std::string theorem;
  Int n_max = 0;
  Int n_min = 1;
  int k = 2;
  bool json_out = false;
  unsigned threads = 1;
  bool corrupt = false;
};

struct SeriesFlags {
  std::string expr;
  std::size_t terms = 10;
  bool json_out = false;
  bool lines = false;
};

struct RenderFlags {
  std::string diamond;
  std::string overpartition;
  std::string format = "text";
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--family", f.family, "P Q F G H D PBAR QBAR FBAR GBAR PARTITIONS STRICT OVERPARTITIONS KTUPLE "
                                        "SCHMIDT_ANY UNRESTRICTED_SCHMIDT_ANY DIAMOND_ANY")
      ->required();
  cmd->add_option("--n", f.n, "weight")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--k", f.k, "tuple size / Schmidt modulus")->check(CLI::PositiveNumber);
  cmd->add_option("--t", f.t, "length statistic");
  cmd->add_option("--r", f.r, "fill statistic");
  cmd->add_option("--s", f.s, "overline count");
}

FamilySpec to_spec(const FamilyFlags& f) {
  auto fam = parse_family(f.family);
  if (!fam) throw DomainError("unknown family '" + f.family + "'");
  FamilySpec spec{*fam, f.n, f.k, f.t, f.r, f.s};
  validate_spec(spec);
  return spec;
}

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

std::string text_of(const Object& obj) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Partition> || std::is_same_v<T, Overpartition>) {
          return render::notation(v);
        } else if constexpr (std::is_same_v<T, StrictOverpartition>) {
          return render::notation(v.base());
        } else if constexpr (std::is_same_v<T, SchmidtPartition>) {
          return render::notation(v.partition());
        } else if constexpr (std::is_same_v<T, SchmidtOverpartition>) {
          return render::notation(v.overpartition());
        } else if constexpr (std::is_same_v<T, Diamond>) {
          std::string s = "<";
          for (std::size_t i = 0; i < v.entries().size(); ++i) s += (i ? "," : "") + std::to_string(v.entries()[i]);
          return s + ">";
        } else {
          std::string s = "(";
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            if constexpr (std::is_same_v<T, StrictOverpartitionTuple>) {
              s += render::notation(v[i].base());
            } else {
              s += render::notation(v[i]);
            }
          }
          return s + ")";
        }
      },
      obj);
}

int cmd_count(const FamilyFlags& f, std::ostream& out) {
  out << count(to_spec(f), CountOptions{f.crossover}) << '\n';
  return ok;
}

int cmd_enumerate(const FamilyFlags& f, std::ostream& out) {
  const auto items = enumerate(to_spec(f));
  if (f.json_out) {
    json arr = json::array();
    for (const auto& o : items) arr.push_back(to_json(o));
    out << arr.dump() << '\n';
  } else {
    for (const auto& o : items) out << text_of(o) << '\n';
  }
  return ok;
}

int need_k(const MapFlags& m) {
  if (!m.k) throw DomainError("--k is required for this direction");
  return *m.k;
}

void check_k(const MapFlags& m, std::size_t actual) {
  if (m.k && static_cast<std::size_t>(*m.k) != actual) {
    throw DimensionError("--k " + std::to_string(*m.k) + " does not match input of size " + std::to_string(actual));
  }
}

json map_forward(Theorem th, const json& in, const MapFlags& m) {
  switch (th) {
    case Theorem::p_eq_q: {
      auto tp = partition_tuple_from_json(in);
      check_k(m, tp.size());
      return strict_tuple_to_schmidt(tp);
    }
    case Theorem::f_eq_g: {
      auto tp = partition_tuple_from_json(in);
      check_k(m, tp.size());
      return std::get<0>(unrestricted_tuple_to_schmidt(tp));
    }
    case Theorem::h_eq_d: {
      auto tp = overpartition_tuple_from_json(in);
      if (tp.size() % 2 == 0) throw DimensionError("diamond tuples have 2k+1 members");
      const int k = static_cast<int>(tp.size() / 2);
      check_k(m, tp.size() / 2);
      return tuple_to_diamond(tp, k);
    }
    case Theorem::pbar_eq_qbar: {
      auto tp = strict_overpartition_tuple_from_json(in);
      check_k(m, tp.size());
      return over_strict_tuple_to_schmidt(tp);
    }
    case Theorem::fbar_eq_gbar: {
      auto tp = overpartition_tuple_from_json(in);
      check_k(m, tp.size());
      return std::get<0>(over_unrestricted_tuple_to_schmidt(tp));
    }
    case Theorem::durfee: {
      auto [alpha, beta] = durfee_decompose(partition_from_json(in));
      return strict_tuple_to_schmidt(PartitionTuple{alpha, beta});
    }
    case Theorem::over_durfee: {
      auto [alpha, beta] = over_durfee_decompose(overpartition_from_json(in));
      return over_strict_tuple_to_schmidt(StrictOverpartitionTuple{alpha, beta});
    }
    case Theorem::staircase: {
      auto tp = partition_tuple_from_json(in);
      if (tp.size() != 3) throw DimensionError("staircase expects a triple");
      auto moved = staircase_transform({tp[0], tp[1], tp[2]}, tp[0].length(), Direction::forward);
      return strict_tuple_to_schmidt(PartitionTuple{moved.first, moved.second, moved.third});
    }
  }
  return nullptr;
}

json map_backward(Theorem th, const json& in, const MapFlags& m) {
  switch (th) {
    case Theorem::p_eq_q: {
      SchmidtPartition s(partition_from_json(in), need_k(m));
      return std::get<0>(schmidt_to_strict_tuple(s));
    }
    case Theorem::f_eq_g:
      return schmidt_to_unrestricted_tuple(SchmidtPartition(partition_from_json(in), need_k(m)));
    case Theorem::h_eq_d: {
      Diamond d = diamond_from_json(in);
      check_k(m, static_cast<std::size_t>(d.k()));
      return diamond_to_tuple(d);
    }
    case Theorem::pbar_eq_qbar: {
      SchmidtOverpartition s(overpartition_from_json(in), need_k(m));
      return std::get<0>(schmidt_over_to_strict_tuple(s));
    }
    case Theorem::fbar_eq_gbar:
      return schmidt_over_to_unrestricted_tuple(SchmidtOverpartition(overpartition_from_json(in), need_k(m)));
    case Theorem::durfee: {
      check_k(m, 2);
      auto tp = std::get<0>(schmidt_to_strict_tuple(SchmidtPartition(partition_from_json(in), 2)));
      return durfee_compose(tp[0], tp[1]);
    }
    case Theorem::over_durfee: {
      check_k(m, 2);
      auto tp = std::get<0>(schmidt_over_to_strict_tuple(SchmidtOverpartition(overpartition_from_json(in), 2)));
      return over_durfee_compose(tp[0], tp[1]);
    }
    case Theorem::staircase: {
      check_k(m, 3);
      auto [tp, t, r] = schmidt_to_strict_tuple(SchmidtPartition(partition_from_json(in), 3));
      if (r == 1) throw DomainError("staircase image has 3t or 3t-1 parts");
      auto back = staircase_transform({tp[0], tp[1], tp[2]}, t, Direction::backward);
      return PartitionTuple{back.first, back.second, back.third};
    }
  }
  return nullptr;
}

int cmd_map(const MapFlags& m, std::ostream& out) {
  const json in = read_json(m.input);
  json result;
  if (m.theorem == "phi") {
    if (m.direction == "forward") {
      result = phi_forward(matrix_from_json(in));
    } else {
      result = phi_inverse(in.get<std::vector<Int>>(), static_cast<std::size_t>(need_k(m)));
    }
  } else {
    auto th = parse_theorem(m.theorem);
    if (!th) throw DomainError("unknown theorem '" + m.theorem + "'");
    result = m.direction == "forward" ? map_forward(*th, in, m) : map_backward(*th, in, m);
  }
  out << result.dump() << '\n';
  return ok;
}

int cmd_verify(const VerifyFlags& v, std::ostream& out) {
  auto th = parse_theorem(v.theorem);
  if (!th) throw DomainError("unknown theorem '" + v.theorem + "'");
  VerifyOptions opts;
  opts.n_min = v.n_min;
  opts.threads = v.threads;
  opts.corrupt_mapping = v.corrupt;
  const Report report = verify_bijection(*th, v.n_max, v.k, opts);
  if (v.json_out) {
    out << report_json(report).dump(2) << '\n';
  } else {
    out << format_report(report);
  }
  return report.ok() ? ok : verification_failed;
}

int cmd_series(const SeriesFlags& s, std::ostream& out) {
  const TruncatedSeries f = evaluate_product(s.expr, s.terms);
  if (s.json_out) {
    json arr = json::array();
    for (const auto& c : f.coeffs()) arr.push_back(json::parse(c.str()));
    out << arr.dump() << '\n';
    return ok;
  }
  const char sep = s.lines ? '\n' : ' ';
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out << sep;
    out << f.coeffs()[i];
  }
  out << '\n';
  return ok;
}

int cmd_render(const RenderFlags& r, std::ostream& out) {
  if (r.diamond.empty() == r.overpartition.empty()) {
    throw CLI::ValidationError("render", "exactly one of --diamond or --overpartition is required");
  }
  if (!r.diamond.empty()) {
    const Diamond d = diamond_from_json(read_json(r.diamond));
    out << (r.format == "dot" ? render::diamond_dot(d) : render::diamond_text(d));
    return ok;
  }
  if (r.format != "text") throw CLI::ValidationError("render", "overpartitions render only as text");
  out << render::ferrers_text(overpartition_from_json(read_json(r.overpartition)));
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schmidt-type partition bijections, enumeration and q-series", "schmidt"};
  app.require_subcommand(1);

  FamilyFlags count_f, enum_f;
  auto* count_cmd = app.add_subcommand("count", "count a family");
  add_family_flags(count_cmd, count_f);
  count_cmd->add_option("--crossover", count_f.crossover, "weight above which DP counting is used");

  auto* enum_cmd = app.add_subcommand("enumerate", "list a family in canonical order");
  add_family_flags(enum_cmd, enum_f);
  enum_cmd->add_flag("--json", enum_f.json_out, "JSON array output");

  MapFlags map_f;
  auto* map_cmd = app.add_subcommand("map", "apply one bijection to one object");
  map_cmd->add_option("--theorem", map_f.theorem, "phi p=q f=g h=d pbar=qbar fbar=gbar durfee over-durfee staircase")
      ->required();
  map_cmd->add_option("--direction", map_f.direction)->check(CLI::IsMember({"forward", "backward"}));
  map_cmd->add_option("--input", map_f.input, "JSON file, or - for stdin")->required();
  map_cmd->add_option("--k", map_f.k)->check(CLI::PositiveNumber);

  VerifyFlags ver_f;
  auto* ver_cmd = app.add_subcommand("verify", "exhaustive bijection check by cell");
  ver_cmd->add_option("--theorem", ver_f.theorem)->required();
  ver_cmd->add_option("--n-max", ver_f.n_max)->required()->check(CLI::NonNegativeNumber);
  ver_cmd->add_option("--n-min", ver_f.n_min)->check(CLI::NonNegativeNumber);
  ver_cmd->add_option("--k", ver_f.k)->check(CLI::PositiveNumber);
  ver_cmd->add_flag("--json", ver_f.json_out);
  ver_cmd->add_option("--threads", ver_f.threads)->check(CLI::Range(1u, 256u));
  ver_cmd->add_flag("--corrupt", ver_f.corrupt)->group("");

  SeriesFlags ser_f;
  auto* ser_cmd = app.add_subcommand("series", "expand a product of q-Pochhammer symbols");
  ser_cmd->add_option("--expr", ser_f.expr, "e.g. \"POCH(2,2)^1 / POCH(1,1)^4\"")->required();
  ser_cmd->add_option("--terms", ser_f.terms, "truncation order N (coefficients of q^0..q^N)");
  ser_cmd->add_flag("--json", ser_f.json_out);
  ser_cmd->add_flag("--lines", ser_f.lines, "one coefficient per line");

  RenderFlags ren_f;
  auto* ren_cmd = app.add_subcommand("render", "static rendering");
  ren_cmd->add_option("--diamond", ren_f.diamond, "diamond JSON file");
  ren_cmd->add_option("--overpartition", ren_f.overpartition, "overpartition JSON file");
  ren_cmd->add_option("--format", ren_f.format)->check(CLI::IsMember({"dot", "text"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << (app.get_subcommands().empty() ? app.help() : app.get_subcommands()[0]->help());
    return usage_error;
  }

  try {
    if (*count_cmd) return cmd_count(count_f, out);
    if (*enum_cmd) return cmd_enumerate(enum_f, out);
    if (*map_cmd) return cmd_map(map_f, out);
    if (*ver_cmd) return cmd_verify(ver_f, out);
    if (*ser_cmd) return cmd_series(ser_f, out);
    if (*ren_cmd) return cmd_render(ren_f, out);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n\n" << ren_cmd->help();
    return usage_error;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace schmidt::cli
