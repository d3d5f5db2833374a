#include "schmidt/overlays.hpp"

#include <string>

#include "schmidt/phi.hpp"

namespace schmidt {

SchmidtOverpartition::SchmidtOverpartition(Overpartition parts, int k) : parts_(std::move(parts)), k_(k) {
  if (k < 1) throw DomainError("Schmidt overpartition modulus k must be positive");
}

bool SchmidtOverpartition::is_strict() const {
  return !StrictOverpartition::check(parts_.parts(), parts_.marks()).has_value();
}

namespace {

std::vector<Int> padded(const std::vector<Int>& seq, std::size_t k) {
  std::vector<Int> out = seq;
  out.resize((seq.size() + k - 1) / k * k, 0);
  return out;
}

// Marks of member i, part j go to sequence position j*k + i (0-based).
template <class Member>
std::vector<bool> transported_marks(std::span<const Member> tuple, std::size_t length) {
  const std::size_t k = tuple.size();
  std::vector<bool> marks(length, false);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < tuple[i].length(); ++j) {
      if (tuple[i].marked(j)) marks[j * k + i] = true;
    }
  }
  return marks;
}

// Reads member i back from the matrix rows, attaching the mark of position j*k + i.
std::vector<bool> member_marks(const std::vector<bool>& seq_marks, std::size_t k, std::size_t i,
                               std::size_t length) {
  std::vector<bool> out(length);
  for (std::size_t j = 0; j < length; ++j) out[j] = seq_marks[j * k + i];
  return out;
}

}  // namespace

SchmidtOverpartition over_strict_tuple_to_schmidt(std::span<const StrictOverpartition> tuple) {
  const std::size_t k = tuple.size();
  if (k == 0) throw DomainError("over_strict_tuple_to_schmidt: empty tuple");
  PartitionTuple plain;
  plain.reserve(k);
  for (const auto& m : tuple) plain.push_back(m.base().underlying());
  const TupleShape shape = tuple_shape(plain);

  for (std::size_t i = 0; i < k; ++i) {
    if (i + 1 == shape.r) continue;
    const auto& m = tuple[i];
    for (std::size_t j = 0; j < m.length(); ++j) {
      if (m.marked(j) && m[j] < 2) {
        throw DomainError("over_strict_tuple_to_schmidt: overlined 1 in member " + std::to_string(i + 1) +
                          ", only allowed in member r=" + std::to_string(shape.r));
      }
    }
  }

  SchmidtPartition base = strict_tuple_to_schmidt(plain);
  std::vector<bool> marks = transported_marks(tuple, base.length());
  return SchmidtOverpartition(Overpartition(base.parts(), std::move(marks)), static_cast<int>(k));
}

std::tuple<StrictOverpartitionTuple, std::size_t, std::size_t> schmidt_over_to_strict_tuple(
    const SchmidtOverpartition& s) {
  if (!s.is_strict()) throw DomainError("schmidt_over_to_strict_tuple: not a strict overpartition");
  const auto k = static_cast<std::size_t>(s.k());
  auto [plain, t, r] = schmidt_to_strict_tuple(s.unmarked());

  std::vector<bool> seq_marks = s.marks();
  seq_marks.resize(t * k, false);
  StrictOverpartitionTuple out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.emplace_back(plain[i].parts(), member_marks(seq_marks, k, i, plain[i].length()));
  }
  return {std::move(out), t, r};
}

std::tuple<SchmidtOverpartition, std::size_t, std::size_t> over_unrestricted_tuple_to_schmidt(
    std::span<const Overpartition> tuple) {
  const std::size_t k = tuple.size();
  if (k == 0) throw DomainError("over_unrestricted_tuple_to_schmidt: empty tuple");
  auto [base, t, r] = unrestricted_tuple_to_schmidt(underlying(tuple));
  std::vector<bool> marks = transported_marks(tuple, base.length());
  return {SchmidtOverpartition(Overpartition(base.parts(), std::move(marks)), static_cast<int>(k)), t, r};
}

OverpartitionTuple schmidt_over_to_unrestricted_tuple(const SchmidtOverpartition& s) {
  if (s.length() == 0) throw DomainError("schmidt_over_to_unrestricted_tuple: empty sequence");
  const auto k = static_cast<std::size_t>(s.k());
  IntMatrix a = phi_inverse(padded(s.parts(), k), k);
  std::vector<bool> seq_marks = s.marks();
  seq_marks.resize(a.rows() * a.cols(), false);
  apply_marks(a, seq_marks);

  OverpartitionTuple out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Int> parts;
    std::vector<bool> marks;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) {
        if (a.marked(i, j)) throw DomainError("schmidt_over_to_unrestricted_tuple: overline lands on a zero entry");
        continue;
      }
      parts.push_back(a(i, j));
      marks.push_back(a.marked(i, j));
    }
    out.emplace_back(std::move(parts), std::move(marks));
  }
  return out;
}

std::pair<StrictOverpartition, StrictOverpartition> over_durfee_decompose(const Overpartition& p) {
  const Partition plain = p.underlying();
  auto [alpha, beta] = durfee_decompose(plain);
  std::vector<bool> alpha_marks(alpha.length(), false);
  std::vector<bool> beta_marks(beta.length(), false);

  for (std::size_t i = 0; i < p.length(); ++i) {
    if (!p.marked(i)) continue;
    // The marked cell is the corner (row i+1, column parts[i]).
    const auto column = static_cast<std::size_t>(p[i]);
    if (column > i + 1) {
      beta_marks[i] = true;
    } else {
      alpha_marks[column - 1] = true;
    }
  }
  return {StrictOverpartition(alpha.parts(), std::move(alpha_marks)),
          StrictOverpartition(beta.parts(), std::move(beta_marks))};
}

Overpartition over_durfee_compose(const StrictOverpartition& alpha, const StrictOverpartition& beta) {
  const Partition plain = durfee_compose(alpha.base().underlying(), beta.base().underlying());
  std::vector<bool> marks(plain.length(), false);

  for (std::size_t c = 0; c < alpha.length(); ++c) {
    if (!alpha.marked(c)) continue;
    // Last cell of column c+1 sits in row alpha_c + c (1-based).
    const auto row = static_cast<std::size_t>(alpha[c]) + c - 1;
    if (plain[row] != static_cast<Int>(c + 1)) {
      throw DomainError("over_durfee_compose: overlined part " + std::to_string(c + 1) +
                        " of alpha does not end on a corner cell");
    }
    marks[row] = true;
  }
  for (std::size_t i = 0; i < beta.length(); ++i) {
    if (beta.marked(i)) marks[i] = true;
  }

  Overpartition out;
  try {
    out = Overpartition(plain.parts(), std::move(marks));
  } catch (const DomainError& e) {
    throw DomainError(std::string("over_durfee_compose: marks are not on corner cells: ") + e.what());
  }
  if (over_durfee_decompose(out) != std::pair{alpha, beta}) {
    throw DomainError("over_durfee_compose: marks do not decompose back to the given pair");
  }
  return out;
}

}  // namespace schmidt
