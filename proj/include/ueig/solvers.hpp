#ifndef UEIG_SOLVERS_HPP_
#define UEIG_SOLVERS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ueig/embedding.hpp"
#include "ueig/tensor.hpp"

namespace ueig {

enum class Algorithm { embed, joint, gauss_seidel };

/// "embed", "joint", "gauss-seidel".
std::string_view to_string(Algorithm algo);
/// Accepts the names above; "gauss_seidel" is also taken.
Algorithm parse_algorithm(std::string_view name);

struct SolverConfig {
  Algorithm algorithm = Algorithm::gauss_seidel;
  /// Shift on A. The embed algorithm runs with shift_to_embedded(alpha, m).
  /// Unset means default_alpha(algorithm, m).
  std::optional<double> alpha;
  double tol = 1e-9;
  int max_iter = 5000;
  int starts = 10;
  std::uint64_t seed = 0;
  /// Worker threads for multi_start; 0 picks the hardware concurrency.
  /// Results do not depend on this value.
  unsigned threads = 0;

  void validate() const;
  double effective_alpha(std::size_t order) const;
};

/// Default shift on A: 1 for gauss-seidel; m^-(m-1) for joint and embed.
/// Near an eigenpair the jointly normalized update with shift a moves like a
/// per-vector update with shift a * m^(m-1), so these defaults give all three
/// algorithms the same effective shift.
double default_alpha(Algorithm algo, std::size_t order);

struct TraceStep {
  int k = 0;
  Complex lambda;
  double abs_lambda = 0.0;
  double step_error = 0.0;
};

enum class Status { converged, max_iter_reached };
std::string_view to_string(Status status);

struct IterationTrace {
  std::vector<TraceStep> steps;
  Status status = Status::max_iter_reached;

  int iterations() const { return static_cast<int>(steps.size()); }
  /// True when |lambda_k| never decreased by more than `slack`.
  bool monotone(double slack = 0.0) const;
};

struct UEigenpair {
  double lambda = 0.0;
  RankOneFactors factors;
  double residual = 0.0;
  IterationTrace trace;
};

/// Shifted power iteration on the symmetric embedding S:
///   xhat_k = lambda_{k-1} conj(<S, x_{k-1}^{m-1}>) + alpha_s x_{k-1},
///   x_k = xhat_k / |xhat_k|,  lambda_k = <S, x_k^m>.
class EmbedIteration {
 public:
  EmbedIteration(const EmbeddedTensor& s, double alpha_s, CVector start);

  void step();
  int k() const { return k_; }
  Complex lambda() const { return lambda_; }
  const CVector& x() const { return x_; }

 private:
  const EmbeddedTensor* s_;
  double alpha_;
  CVector x_;
  Complex lambda_;
  int k_ = 0;
};

/// Simultaneous update of all modes followed by joint normalization
/// (sum of squared factor norms equal to one).
class JointIteration {
 public:
  JointIteration(const Tensor& a, double alpha, RankOneFactors start);

  void step();
  int k() const { return k_; }
  Complex lambda() const { return lambda_; }
  const RankOneFactors& factors() const { return x_; }

 private:
  const Tensor* a_;
  double alpha_;
  RankOneFactors x_;
  Complex lambda_;
  int k_ = 0;
};

/// Mode-by-mode update in order 1..m, each mode using the already updated
/// factors of earlier modes and normalized on its own.
class GaussSeidelIteration {
 public:
  GaussSeidelIteration(const Tensor& a, double alpha, RankOneFactors start);

  void step();
  int k() const { return k_; }
  Complex lambda() const { return lambda_; }
  const RankOneFactors& factors() const { return x_; }

 private:
  const Tensor* a_;
  double alpha_;
  RankOneFactors x_;
  Complex lambda_;
  int k_ = 0;
};

/// Stop rule: | |lambda_k| - |lambda_{k-1}| | < tol.
bool check_stop(Complex previous, Complex current, double tol);
/// Applies the rule to the last two entries; false for fewer than two.
bool check_stop(std::span<const Complex> lambdas, double tol);

/// Principal m-th root of the unit phase |z| / z.
Complex phase_root(Complex z, std::size_t m);

UEigenpair solve_embed(const Tensor& a, const SolverConfig& cfg, std::span<const Complex> start);
/// Same, reusing a prebuilt embedding of `a`.
UEigenpair solve_embed(const Tensor& a, const EmbeddedTensor& s, const SolverConfig& cfg,
                       std::span<const Complex> start);
UEigenpair solve_joint(const Tensor& a, const SolverConfig& cfg, const RankOneFactors& start);
UEigenpair solve_gauss_seidel(const Tensor& a, const SolverConfig& cfg,
                              const RankOneFactors& start);

/// max_k | <A, (x)_{i != k} x_i> - lambda conj(x_k) |.
double residual(const Tensor& a, const RankOneFactors& factors, double lambda);
double residual(const Tensor& a, const UEigenpair& pair);

/// Complex standard-normal factors for the given dims, normalized per the
/// algorithm's convention (joint for embed and joint, per-vector for
/// gauss-seidel). The raw draw is the same for every algorithm, so the
/// embed start is the concatenation of the joint start.
RankOneFactors draw_start(const std::vector<std::size_t>& dims, Algorithm algo,
                          std::uint64_t seed);

struct StartResult {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::optional<UEigenpair> pair;
  std::string error;
};

struct MultiStartResult {
  UEigenpair best;
  std::size_t best_index = 0;
  std::vector<StartResult> starts;
};

/// Runs cfg.starts seeded starts and keeps the largest eigenvalue (first one
/// on ties). A failing start is recorded, not fatal; throws NumericalError
/// only when every start fails.
MultiStartResult multi_start(const Tensor& a, const SolverConfig& cfg);

}  // namespace ueig

#endif  // UEIG_SOLVERS_HPP_
