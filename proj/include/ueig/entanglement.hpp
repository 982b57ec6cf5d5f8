#ifndef UEIG_ENTANGLEMENT_HPP_
#define UEIG_ENTANGLEMENT_HPP_

#include <string>
#include <vector>

#include "ueig/solvers.hpp"
#include "ueig/tensor.hpp"

namespace ueig {

/// Unit-norm multipartite pure state. `input_norm` keeps the norm the
/// amplitudes had before normalization.
class PureState {
 public:
  /// Accepts amplitudes whose norm is within `renorm_tol` of one and
  /// rescales them; anything further off is rejected with InputError.
  static PureState checked(Tensor amplitudes, std::string label, double renorm_tol = 1e-6);
  /// Rescales any nonzero tensor to unit norm.
  static PureState normalized(Tensor amplitudes, std::string label);

  const Tensor& tensor() const { return tensor_; }
  const std::string& label() const { return label_; }
  double input_norm() const { return input_norm_; }

 private:
  PureState(Tensor t, std::string label, double input_norm)
      : tensor_(std::move(t)), label_(std::move(label)), input_norm_(input_norm) {}

  Tensor tensor_;
  std::string label_;
  double input_norm_;
};

/// E_G = sqrt(2 - 2 G). Values up to 1 + 1e-10 are clamped to 1; anything
/// outside (0, 1 + 1e-10] throws InputError.
double gme_from_lambda(double lambda_max);

struct AlgorithmRun {
  Algorithm algorithm = Algorithm::gauss_seidel;
  double lambda = 0.0;
  /// Sweeps taken by the start that produced the reported eigenpair.
  int iterations = 0;
  /// Sweeps summed over all starts.
  int total_iterations = 0;
  double seconds = 0.0;
};

struct GmeReport {
  std::string label;
  double entanglement_eigenvalue = 0.0;
  double gme = 0.0;
  RankOneFactors closest_product_state;
  double residual = 0.0;
  std::vector<AlgorithmRun> runs;
};

GmeReport analyze(const PureState& state, const SolverConfig& cfg);

struct ClosestCheck {
  /// |psi - x1 (x) ... (x) xm|
  double distance = 0.0;
  /// sqrt(2 - 2 Re <psi, x1 (x) ... (x) xm>), equal to `distance` for unit inputs.
  double expansion = 0.0;
};

ClosestCheck verify_closest(const PureState& state, const RankOneFactors& factors);

}  // namespace ueig

#endif  // UEIG_ENTANGLEMENT_HPP_
