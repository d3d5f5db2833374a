#include "schmidt/tuple_maps.hpp"

#include <algorithm>
#include <string>

namespace schmidt {

SchmidtPartition::SchmidtPartition(Partition parts, int k) : parts_(std::move(parts)), k_(k) {
  if (k < 1) throw DomainError("Schmidt partition modulus k must be positive");
}

std::size_t SchmidtPartition::blocks() const noexcept {
  return sequence_shape(length(), static_cast<std::size_t>(k_)).t;
}

std::size_t SchmidtPartition::fill() const noexcept {
  return sequence_shape(length(), static_cast<std::size_t>(k_)).r;
}

TupleShape sequence_shape(std::size_t length, std::size_t k) {
  if (length == 0) return {0, 0};
  return {(length + k - 1) / k, 1 + (length - 1) % k};
}

namespace {

template <class Member>
TupleShape shape_of(std::span<const Member> tuple) {
  TupleShape s;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    // >= keeps the largest index attaining the maximum
    if (!tuple[i].empty() && tuple[i].length() >= s.t) s = {tuple[i].length(), i + 1};
  }
  if (s.t == 0) throw DomainError("tuple has no nonempty member");
  return s;
}

std::vector<Int> padded(const std::vector<Int>& seq, std::size_t k) {
  std::vector<Int> out = seq;
  out.resize((seq.size() + k - 1) / k * k, 0);
  return out;
}

}  // namespace

TupleShape tuple_shape(std::span<const Partition> tuple) { return shape_of(tuple); }
TupleShape tuple_shape(std::span<const Overpartition> tuple) { return shape_of(tuple); }

IntMatrix tuple_matrix(std::span<const Partition> tuple, std::size_t t) {
  IntMatrix a(tuple.size(), t);
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].length() > t) throw DimensionError("tuple member longer than the column count");
    for (std::size_t j = 0; j < tuple[i].length(); ++j) a(i, j) = tuple[i][j];
  }
  return a;
}

PartitionTuple matrix_rows(const IntMatrix& a) {
  PartitionTuple out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Int> parts;
    for (Int v : a.row(i)) {
      if (v != 0) parts.push_back(v);
    }
    out.emplace_back(std::move(parts));
  }
  return out;
}

SchmidtPartition strict_tuple_to_schmidt(std::span<const Partition> tuple) {
  const std::size_t k = tuple.size();
  if (k == 0) throw DomainError("strict_tuple_to_schmidt: empty tuple");
  const TupleShape shape = tuple_shape(tuple);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t want = i < shape.r ? shape.t : shape.t - 1;
    if (tuple[i].length() != want) {
      throw DomainError("strict_tuple_to_schmidt: member " + std::to_string(i + 1) + " has length " +
                        std::to_string(tuple[i].length()) + ", expected " + std::to_string(want));
    }
    if (!tuple[i].is_strict()) {
      throw DomainError("strict_tuple_to_schmidt: member " + std::to_string(i + 1) + " is not strict");
    }
  }
  std::vector<Int> seq = phi_forward(tuple_matrix(tuple, shape.t));
  seq.resize((shape.t - 1) * k + shape.r);
  return SchmidtPartition(Partition(std::move(seq)), static_cast<int>(k));
}

std::tuple<PartitionTuple, std::size_t, std::size_t> schmidt_to_strict_tuple(const SchmidtPartition& s) {
  if (s.length() == 0) throw DomainError("schmidt_to_strict_tuple: empty sequence");
  if (!s.is_strict()) throw DomainError("schmidt_to_strict_tuple: parts are not strictly decreasing");
  const auto k = static_cast<std::size_t>(s.k());
  const TupleShape shape = sequence_shape(s.length(), k);
  IntMatrix a = phi_inverse(padded(s.parts(), k), k);
  return {matrix_rows(a), shape.t, shape.r};
}

std::tuple<SchmidtPartition, std::size_t, std::size_t> unrestricted_tuple_to_schmidt(
    std::span<const Partition> tuple) {
  const std::size_t k = tuple.size();
  if (k == 0) throw DomainError("unrestricted_tuple_to_schmidt: empty tuple");
  const TupleShape shape = tuple_shape(tuple);
  std::vector<Int> seq = phi_forward(tuple_matrix(tuple, shape.t));
  seq.resize((shape.t - 1) * k + shape.r);
  return {SchmidtPartition(Partition(std::move(seq)), static_cast<int>(k)), shape.t, shape.r};
}

PartitionTuple schmidt_to_unrestricted_tuple(const SchmidtPartition& s) {
  if (s.length() == 0) throw DomainError("schmidt_to_unrestricted_tuple: empty sequence");
  const auto k = static_cast<std::size_t>(s.k());
  return matrix_rows(phi_inverse(padded(s.parts(), k), k));
}

std::pair<Partition, Partition> durfee_decompose(const Partition& p) {
  if (p.empty()) throw DomainError("durfee_decompose: empty partition");
  const std::size_t t = durfee_size(p);

  std::vector<Int> alpha(t);
  for (std::size_t c = 0; c < t; ++c) {
    // column c+1 holds the rows whose part is at least c+1
    Int height = 0;
    while (static_cast<std::size_t>(height) < p.length() && p[static_cast<std::size_t>(height)] > static_cast<Int>(c)) {
      ++height;
    }
    alpha[c] = height - static_cast<Int>(c);
  }
  std::vector<Int> beta;
  for (std::size_t i = 0; i < t; ++i) {
    const Int overhang = p[i] - static_cast<Int>(i + 1);
    if (overhang > 0) beta.push_back(overhang);
  }
  return {Partition(std::move(alpha)), Partition(std::move(beta))};
}

Partition durfee_compose(const Partition& alpha, const Partition& beta) {
  const std::size_t t = alpha.length();
  if (t == 0) throw DomainError("durfee_compose: alpha must be nonempty");
  if (beta.length() != t && beta.length() + 1 != t) {
    throw DimensionError("durfee_compose: beta has length " + std::to_string(beta.length()) +
                         ", expected " + std::to_string(t) + " or " + std::to_string(t - 1));
  }
  if (!alpha.is_strict() || !beta.is_strict()) throw DomainError("durfee_compose: alpha and beta must be strict");

  // Column heights of the first t columns, and the first t row lengths.
  std::vector<Int> column(t);
  for (std::size_t c = 0; c < t; ++c) column[c] = alpha[c] + static_cast<Int>(c);
  const auto height = static_cast<std::size_t>(column[0]);
  std::vector<Int> parts(height);
  for (std::size_t i = 0; i < t; ++i) parts[i] = static_cast<Int>(i + 1) + (i < beta.length() ? beta[i] : 0);
  for (std::size_t i = t; i < height; ++i) {
    parts[i] = static_cast<Int>(std::count_if(column.begin(), column.end(),
                                              [i](Int h) { return h > static_cast<Int>(i); }));
  }
  Partition out(std::move(parts));
  if (durfee_size(out) != t) throw DomainError("durfee_compose: inconsistent (alpha, beta) pair");
  return out;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(std::string("staircase_transform: ") + what);
}

}  // namespace

Triple staircase_transform(const Triple& triple, std::size_t t, Direction direction) {
  require(t >= 1, "t must be positive");
  const auto stair = [t](std::size_t i) { return static_cast<Int>(t - 1 - i); };

  if (direction == Direction::forward) {
    const auto& [alpha, beta, gamma] = triple;
    require(alpha.length() == t && is_k_distinct(alpha, 2), "alpha must be 2-distinct of length t");
    require(beta.length() == t && beta.is_strict(), "beta must be strict of length t");
    require(gamma.length() <= t, "gamma must have length at most t");

    std::vector<Int> mu(t), omega(t);
    for (std::size_t i = 0; i < t; ++i) {
      mu[i] = alpha[i] - stair(i);
      require(mu[i] >= 1, "alpha is too small to remove the staircase");
      omega[i] = (i < gamma.length() ? gamma[i] : 0) + stair(i);
    }
    if (omega.back() == 0) omega.pop_back();
    return {Partition(std::move(mu)), beta, Partition(std::move(omega))};
  }

  const auto& [mu, nu, omega] = triple;
  require(mu.length() == t && mu.is_strict(), "mu must be strict of length t");
  require(nu.length() == t && nu.is_strict(), "nu must be strict of length t");
  require((omega.length() == t || omega.length() + 1 == t) && omega.is_strict(),
          "omega must be strict of length t or t-1");

  std::vector<Int> alpha(t), gamma;
  for (std::size_t i = 0; i < t; ++i) {
    alpha[i] = mu[i] + stair(i);
    const Int g = (i < omega.length() ? omega[i] : 0) - stair(i);
    require(g >= 0, "omega is too small to remove the staircase");
    if (g > 0) gamma.push_back(g);
  }
  return {Partition(std::move(alpha)), nu, Partition(std::move(gamma))};
}

}  // namespace schmidt
