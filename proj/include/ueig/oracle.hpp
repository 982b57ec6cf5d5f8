#ifndef UEIG_ORACLE_HPP_
#define UEIG_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "ueig/tensor.hpp"

namespace ueig {

// Reference values for the largest U-eigenvalue that do not go through the
// shifted iterations. Used to check solver output in tests and from the CLI.

enum class OracleMethod { svd, sampling, analytic };
std::string_view to_string(OracleMethod method);

struct OracleResult {
  /// Exact for svd and analytic; a lower bound for sampling.
  double lambda_lower_bound = 0.0;
  OracleMethod method = OracleMethod::sampling;
  /// Samples drawn, or power iterations taken.
  std::size_t work = 0;
};

/// Largest singular value of an order-2 tensor by power iteration on the
/// Gram operator v -> A^H (A v), to relative tolerance 1e-12.
/// Throws InputError for any other order.
OracleResult svd_oracle(const Tensor& a);

/// Max of |<A, x1 (x) ... (x) xm>| over `samples` random unit factor tuples.
OracleResult sampling_oracle(const Tensor& a, std::size_t samples, std::uint64_t seed);

/// Exact answer for sums of rank-one basis terms: when the nonzero entries
/// have pairwise distinct indices in at least two modes, the largest U-eigenvalue
/// is the largest entry modulus. (Cauchy-Schwarz over those two modes bounds
/// the overlap by it, and the basis vectors of that entry attain it.) For order 1
/// this needs at most one nonzero entry. Empty when the structure check fails.
std::optional<OracleResult> orthogonal_sum_oracle(const Tensor& a);

}  // namespace ueig

#endif  // UEIG_ORACLE_HPP_
