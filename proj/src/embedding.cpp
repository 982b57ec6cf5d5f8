#include "ueig/embedding.hpp"

#include <cmath>
#include <numeric>

namespace ueig {

double factorial(std::size_t m) {
  double f = 1.0;
  for (std::size_t i = 2; i <= m; ++i) f *= static_cast<double>(i);
  return f;
}

EmbeddedTensor sym_embed(const Tensor& a) {
  const std::size_t m = a.order();
  if (m < 2) throw InputError("symmetric embedding needs a tensor of order >= 2");
  const std::size_t n = std::accumulate(a.dims().begin(), a.dims().end(), std::size_t{0});
  BlockPartition partition = BlockPartition::uniform(m, a.dims());
  Tensor s(std::vector<std::size_t>(m, n));

  // Block [p] = A^<p>: its entry at p(j) is A_j, placed at the offsets of
  // blocks p[0], ..., p[m-1].
  for (const Permutation& p : all_permutations(m)) {
    std::vector<std::size_t> stride_of_source(m);
    std::size_t base = 0;
    for (std::size_t r = 0; r < m; ++r) {
      stride_of_source[p[r]] = s.strides()[r];
      base += partition.offset(r, p[r]) * s.strides()[r];
    }
    Index j(m, 0);
    auto entry = a.data().begin();
    do {
      std::size_t off = base;
      for (std::size_t k = 0; k < m; ++k) off += j[k] * stride_of_source[k];
      s.data()[off] = *entry++;
    } while (next_index(j, a.dims()));
  }
  return EmbeddedTensor{std::move(s), std::move(partition), a.dims()};
}

bool is_symmetric(const Tensor& s, double tol) {
  if (!s.is_cubical()) throw InputError("symmetry check needs equal mode sizes, got " + format_dims(s.dims()));
  const std::size_t m = s.order();
  for (std::size_t r = 0; r + 1 < m; ++r) {
    std::vector<std::size_t> swap(m);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[r], swap[r + 1]);
    if (max_abs_diff(s, transpose(s, Permutation(swap))) > tol) return false;
  }
  return true;
}

std::vector<CVector> split_blocks(std::span<const Complex> x,
                                  const std::vector<std::size_t>& lengths) {
  std::size_t total = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  if (total != x.size()) {
    throw InputError("vector of length " + std::to_string(x.size()) +
                     " cannot be split into blocks " + format_dims(lengths));
  }
  std::vector<CVector> out;
  std::size_t pos = 0;
  for (std::size_t len : lengths) {
    out.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(pos),
                     x.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  return out;
}

LiftedEigenpair lift_eigenpair(double lambda_s, std::span<const Complex> x,
                               const std::vector<std::size_t>& source_dims, double block_tol) {
  if (lambda_s == 0.0) {
    throw NumericalError("zero eigenvalue: a US-eigenpair with lambda = 0 does not lift to A");
  }
  const std::size_t m = source_dims.size();
  const double root_m = std::sqrt(static_cast<double>(m));
  LiftedEigenpair out;
  out.lambda = std::pow(root_m, static_cast<double>(m)) / factorial(m) * lambda_s;
  out.factors.normalization = Normalization::per_vector;
  out.factors.vectors = split_blocks(x, source_dims);
  const double expected = 1.0 / root_m;
  for (CVector& v : out.factors.vectors) {
    double bn = vector_norm(v);
    out.block_norms.push_back(bn);
    if (std::abs(bn - expected) > block_tol) {
      throw NumericalError("block norm " + std::to_string(bn) + " differs from 1/sqrt(m) = " +
                           std::to_string(expected) + "; input is not a US-eigenvector");
    }
    for (Complex& z : v) z *= root_m;
  }
  return out;
}

double shift_to_embedded(double alpha_a, std::size_t order) {
  if (!(alpha_a > 0.0)) throw InputError("shift must be positive");
  return factorial(order) * factorial(order - 1) * alpha_a;
}

}  // namespace ueig
