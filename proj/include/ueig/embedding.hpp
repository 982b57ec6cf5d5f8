#ifndef UEIG_EMBEDDING_HPP_
#define UEIG_EMBEDDING_HPP_

#include <vector>

#include "ueig/tensor.hpp"

namespace ueig {

/// Symmetric n x ... x n tensor (n = n1 + ... + nm) built from a
/// non-symmetric tensor A, together with the block layout it was built on.
struct EmbeddedTensor {
  Tensor tensor;
  BlockPartition partition;
  std::vector<std::size_t> source_dims;
};

/// sym(A): block [p] holds A^<p> for every permutation p of the modes and
/// all other blocks are zero. Requires order >= 2.
EmbeddedTensor sym_embed(const Tensor& a);

/// True iff S is invariant under every mode transposition to within `tol`
/// (checked entrywise on the adjacent swaps, which generate the group).
/// Throws InputError for a non-cubical tensor.
bool is_symmetric(const Tensor& s, double tol);

struct LiftedEigenpair {
  double lambda = 0.0;
  RankOneFactors factors;
  /// Norms of the blocks of x before rescaling; all 1/sqrt(m) for a true
  /// US-eigenvector.
  std::vector<double> block_norms;
};

inline constexpr double kDefaultBlockNormTol = 1e-6;

/// Converts a US-eigenpair (lambda_s, x) of sym(A) into a U-eigenpair of A:
/// lambda_a = sqrt(m)^m / m! * lambda_s, factors sqrt(m) * x^(i).
/// Throws NumericalError when lambda_s == 0 or a block norm differs from
/// 1/sqrt(m) by more than `block_tol`.
LiftedEigenpair lift_eigenpair(double lambda_s, std::span<const Complex> x,
                               const std::vector<std::size_t>& source_dims,
                               double block_tol = kDefaultBlockNormTol);

/// Shift for the embedded iteration equivalent to shift alpha_a on A:
/// m! (m-1)! alpha_a.
double shift_to_embedded(double alpha_a, std::size_t order);

/// m!, as a double.
double factorial(std::size_t m);

/// Splits a length-n vector into consecutive pieces of the given lengths.
std::vector<CVector> split_blocks(std::span<const Complex> x,
                                  const std::vector<std::size_t>& lengths);

}  // namespace ueig

#endif  // UEIG_EMBEDDING_HPP_
