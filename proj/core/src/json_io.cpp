#include "schmidt/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace schmidt {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw DomainError("json: " + what); }

Int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<Int>();
}

const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

}  // namespace

void to_json(json& j, const Partition& p) { j = p.parts(); }

void to_json(json& j, const Overpartition& p) {
  j = json::array();
  for (std::size_t i = 0; i < p.length(); ++i) j.push_back({{"part", p[i]}, {"over", p.marked(i)}});
}

void to_json(json& j, const StrictOverpartition& p) { to_json(j, p.base()); }
void to_json(json& j, const SchmidtPartition& s) { to_json(j, s.partition()); }
void to_json(json& j, const SchmidtOverpartition& s) { to_json(j, s.overpartition()); }

void to_json(json& j, const IntMatrix& a) {
  j = {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", a.to_rows()}};
  if (a.has_marks()) {
    json marks = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a.marked(i, c));
      marks.push_back(std::move(row));
    }
    j["marks"] = std::move(marks);
  }
}

void to_json(json& j, const Diamond& d) { j = {{"k", d.k()}, {"entries", d.entries()}}; }

Partition partition_from_json(const json& j) {
  std::vector<Int> parts;
  for (const auto& v : as_array(j, "partition")) parts.push_back(as_int(v, "part"));
  return Partition(std::move(parts));
}

Overpartition overpartition_from_json(const json& j) {
  std::vector<Int> parts;
  std::vector<bool> marks;
  for (const auto& v : as_array(j, "overpartition")) {
    if (v.is_object()) {
      if (!v.contains("part")) bad("overpartition entry lacks \"part\"");
      parts.push_back(as_int(v["part"], "part"));
      bool over = false;
      if (v.contains("over")) {
        if (!v["over"].is_boolean()) bad("\"over\" must be a boolean");
        over = v["over"].get<bool>();
      }
      marks.push_back(over);
    } else {
      parts.push_back(as_int(v, "part"));
      marks.push_back(false);
    }
  }
  return Overpartition(std::move(parts), std::move(marks));
}

StrictOverpartition strict_overpartition_from_json(const json& j) {
  return StrictOverpartition(overpartition_from_json(j));
}

PartitionTuple partition_tuple_from_json(const json& j) {
  PartitionTuple out;
  for (const auto& m : as_array(j, "tuple")) out.push_back(partition_from_json(m));
  return out;
}

OverpartitionTuple overpartition_tuple_from_json(const json& j) {
  OverpartitionTuple out;
  for (const auto& m : as_array(j, "tuple")) out.push_back(overpartition_from_json(m));
  return out;
}

StrictOverpartitionTuple strict_overpartition_tuple_from_json(const json& j) {
  StrictOverpartitionTuple out;
  for (const auto& m : as_array(j, "tuple")) out.push_back(strict_overpartition_from_json(m));
  return out;
}

IntMatrix matrix_from_json(const json& j) {
  const json* entries = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) bad("matrix object lacks \"entries\"");
    entries = &j["entries"];
  }
  std::vector<std::vector<Int>> rows;
  for (const auto& r : as_array(*entries, "matrix entries")) {
    std::vector<Int> row;
    for (const auto& v : as_array(r, "matrix row")) row.push_back(as_int(v, "matrix entry"));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) bad("matrix has no rows");
  IntMatrix a(rows);
  if (j.is_object()) {
    if (j.contains("rows") && as_int(j["rows"], "rows") != static_cast<Int>(a.rows())) bad("\"rows\" disagrees with entries");
    if (j.contains("cols") && as_int(j["cols"], "cols") != static_cast<Int>(a.cols())) bad("\"cols\" disagrees with entries");
    if (j.contains("marks")) {
      const auto& marks = as_array(j["marks"], "marks");
      if (marks.size() != a.rows()) bad("\"marks\" has the wrong number of rows");
      for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto& row = as_array(marks[i], "marks row");
        if (row.size() != a.cols()) bad("\"marks\" row has the wrong length");
        for (std::size_t c = 0; c < a.cols(); ++c) {
          if (!row[c].is_boolean()) bad("marks must be booleans");
          a.set_mark(i, c, row[c].get<bool>());
        }
      }
    }
  }
  return a;
}

Diamond diamond_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("entries")) bad("diamond must be {\"k\": int, \"entries\": [...]}");
  std::vector<Int> entries;
  for (const auto& v : as_array(j["entries"], "diamond entries")) entries.push_back(as_int(v, "diamond entry"));
  return Diamond(static_cast<int>(as_int(j["k"], "k")), std::move(entries));
}

namespace {

int type_rank(const nlohmann::json& j) {
  if (j.is_null()) return 0;
  if (j.is_boolean()) return 1;
  if (j.is_number()) return 2;
  if (j.is_string()) return 3;
  if (j.is_array()) return 4;
  return 5;
}

}  // namespace

bool canonical_less(const nlohmann::json& a, const nlohmann::json& b) {
  const int ra = type_rank(a), rb = type_rank(b);
  if (ra != rb) return ra < rb;
  switch (ra) {
    case 0:
      return false;
    case 1:
      return !a.get<bool>() && b.get<bool>();
    case 2:
      if (a.is_number_float() || b.is_number_float()) return a.get<double>() < b.get<double>();
      if (a.is_number_unsigned() && b.is_number_unsigned()) return a.get<std::uint64_t>() < b.get<std::uint64_t>();
      return a.get<std::int64_t>() < b.get<std::int64_t>();
    case 3:
      return a.get_ref<const std::string&>() < b.get_ref<const std::string&>();
    case 4:
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
    default: {
      auto ia = a.items().begin(), ib = b.items().begin();
      for (; ia != a.items().end() && ib != b.items().end(); ++ia, ++ib) {
        if (ia.key() != ib.key()) return ia.key() < ib.key();
        if (canonical_less(ia.value(), ib.value())) return true;
        if (canonical_less(ib.value(), ia.value())) return false;
      }
      return ia == a.items().end() && ib != b.items().end();
    }
  }
}

}  // namespace schmidt
