#include "ueig/entanglement.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace ueig {

PureState PureState::checked(Tensor amplitudes, std::string label, double renorm_tol) {
  const double n = norm(amplitudes);
  if (std::abs(n - 1.0) > renorm_tol) {
    throw InputError("state '" + label + "' has norm " + std::to_string(n) +
                     ", expected 1 within " + std::to_string(renorm_tol));
  }
  for (Complex& z : amplitudes.data()) z /= n;
  return PureState(std::move(amplitudes), std::move(label), n);
}

PureState PureState::normalized(Tensor amplitudes, std::string label) {
  const double n = norm(amplitudes);
  if (n == 0.0) throw InputError("state '" + label + "' is the zero vector");
  for (Complex& z : amplitudes.data()) z /= n;
  return PureState(std::move(amplitudes), std::move(label), n);
}

double gme_from_lambda(double lambda_max) {
  constexpr double kSlack = 1e-10;
  if (!(lambda_max > 0.0) || lambda_max > 1.0 + kSlack) {
    throw InputError("entanglement eigenvalue " + std::to_string(lambda_max) +
                     " is outside (0, 1]; the state is not normalized or the solver failed");
  }
  return std::sqrt(2.0 - 2.0 * std::min(lambda_max, 1.0));
}

GmeReport analyze(const PureState& state, const SolverConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  MultiStartResult result = multi_start(state.tensor(), cfg);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  GmeReport report;
  report.label = state.label();
  report.entanglement_eigenvalue = std::min(result.best.lambda, 1.0);
  report.gme = gme_from_lambda(result.best.lambda);
  report.closest_product_state = result.best.factors;
  report.residual = result.best.residual;
  int total = 0;
  for (const StartResult& s : result.starts)
    if (s.pair) total += s.pair->trace.iterations();
  report.runs.push_back(
      {cfg.algorithm, result.best.lambda, result.best.trace.iterations(), total, seconds});
  return report;
}

ClosestCheck verify_closest(const PureState& state, const RankOneFactors& factors) {
  if (factors.dims() != state.tensor().dims()) {
    throw InputError("product state dims " + format_dims(factors.dims()) +
                     " do not match state dims " + format_dims(state.tensor().dims()));
  }
  const Tensor product = rank_one(factors);
  ClosestCheck check;
  double d = 0.0;
  for (std::size_t i = 0; i < product.size(); ++i)
    d += std::norm(state.tensor().data()[i] - product.data()[i]);
  check.distance = std::sqrt(d);
  const double re = overlap(state.tensor(), factors).real();
  check.expansion = std::sqrt(std::max(0.0, 2.0 - 2.0 * re));
  return check;
}

}  // namespace ueig
