#include "ueig/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "ueig/random.hpp"

namespace ueig {

namespace {

constexpr double kStartNormTol = 1e-10;

void check_unit(double value, const char* what) {
  if (std::abs(value - 1.0) > kStartNormTol) {
    throw InputError(std::string(what) + " must be 1, got " + std::to_string(value));
  }
}

double joint_norm(const RankOneFactors& f) {
  double s = 0.0;
  for (const CVector& v : f.vectors) {
    double n = vector_norm(v);
    s += n * n;
  }
  return std::sqrt(s);
}

void check_factor_shapes(const Tensor& a, const RankOneFactors& f) {
  if (f.dims() != a.dims()) {
    throw InputError("start factors " + format_dims(f.dims()) + " do not match tensor dims " +
                     format_dims(a.dims()));
  }
}

CVector current_point(const EmbedIteration& it) { return it.x(); }
template <typename Iteration>
CVector current_point(const Iteration& it) {
  return it.factors().concatenated();
}

double distance(const CVector& x, const CVector& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::norm(x[i] - y[i]);
  return std::sqrt(s);
}

// Converged when check_stop holds and the iterate itself moved less than tol.
// |lambda| is stationary at an eigenpair, so the eigenvalue test alone stops
// while the vectors are still O(sqrt(tol)) away.
template <typename Iteration>
IterationTrace iterate(Iteration& it, const SolverConfig& cfg) {
  IterationTrace trace;
  trace.steps.reserve(static_cast<std::size_t>(std::min(cfg.max_iter, 1024)));
  Complex previous = it.lambda();
  CVector previous_x = current_point(it);
  for (int k = 1; k <= cfg.max_iter; ++k) {
    it.step();
    const Complex current = it.lambda();
    CVector current_x = current_point(it);
    const double move = distance(current_x, previous_x);
    const double err = std::max(std::abs(std::abs(current) - std::abs(previous)), move);
    trace.steps.push_back({it.k(), current, std::abs(current), err});
    if (check_stop(previous, current, cfg.tol) && move < cfg.tol) {
      trace.status = Status::converged;
      return trace;
    }
    previous = current;
    previous_x = std::move(current_x);
  }
  trace.status = Status::max_iter_reached;
  return trace;
}

void require_nonzero(Complex lambda) {
  if (lambda == Complex{}) {
    throw NumericalError("zero eigenvalue: the iteration ended at lambda = 0, phase correction is undefined");
  }
}

// The sqrt(m) rescaling of jointly normalized iterates is only unit up to the
// distance from the fixed point; snap each factor onto the sphere.
void make_unit(RankOneFactors& f) {
  for (CVector& v : f.vectors) {
    const double n = vector_norm(v);
    for (Complex& z : v) z /= n;
  }
}

}  // namespace

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::embed: return "embed";
    case Algorithm::joint: return "joint";
    case Algorithm::gauss_seidel: return "gauss-seidel";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "embed") return Algorithm::embed;
  if (name == "joint") return Algorithm::joint;
  if (name == "gauss-seidel" || name == "gauss_seidel") return Algorithm::gauss_seidel;
  throw InputError("unknown algorithm '" + std::string(name) +
                   "' (expected embed, joint or gauss-seidel)");
}

std::string_view to_string(Status status) {
  return status == Status::converged ? "converged" : "max_iter_reached";
}

void SolverConfig::validate() const {
  if (alpha && !(*alpha > 0.0)) throw InputError("alpha must be positive");
  if (!(tol > 0.0)) throw InputError("tol must be positive");
  if (max_iter < 1) throw InputError("max_iter must be at least 1");
  if (starts < 1) throw InputError("starts must be at least 1");
}

double SolverConfig::effective_alpha(std::size_t order) const {
  return alpha ? *alpha : default_alpha(algorithm, order);
}

double default_alpha(Algorithm algo, std::size_t order) {
  if (algo == Algorithm::gauss_seidel) return 1.0;
  return std::pow(static_cast<double>(order), -static_cast<double>(order - 1));
}

bool IterationTrace::monotone(double slack) const {
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i].abs_lambda < steps[i - 1].abs_lambda - slack) return false;
  }
  return true;
}

EmbedIteration::EmbedIteration(const EmbeddedTensor& s, double alpha_s, CVector start)
    : s_(&s), alpha_(alpha_s), x_(std::move(start)) {
  if (x_.size() != s.tensor.dim(0)) throw InputError("start vector length does not match embedding");
  check_unit(vector_norm(x_), "start vector norm");
  lambda_ = overlap(s_->tensor, {std::vector<CVector>(s_->tensor.order(), x_)});
}

void EmbedIteration::step() {
  const std::size_t m = s_->tensor.order();
  RankOneFactors repeated{std::vector<CVector>(m, x_)};
  // S is symmetric, so the contraction over modes 2..m stands for every mode
  CVector g = contract_excluding_conj(s_->tensor, repeated, 0);
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = lambda_ * g[j] + alpha_ * x_[j];
  const double len = vector_norm(g);
  if (len == 0.0) throw NumericalError("iterate vanished (|xhat| = 0)");
  for (Complex& z : g) z /= len;
  x_ = std::move(g);
  lambda_ = overlap(s_->tensor, {std::vector<CVector>(m, x_)});
  ++k_;
}

JointIteration::JointIteration(const Tensor& a, double alpha, RankOneFactors start)
    : a_(&a), alpha_(alpha), x_(std::move(start)) {
  check_factor_shapes(a, x_);
  check_unit(joint_norm(x_), "joint norm of start factors");
  x_.normalization = Normalization::joint;
  lambda_ = overlap(a, x_);
}

void JointIteration::step() {
  const std::size_t m = a_->order();
  std::vector<CVector> next(m);
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    next[i] = contract_excluding_conj(*a_, x_, i);
    for (std::size_t j = 0; j < next[i].size(); ++j)
      next[i][j] = lambda_ * next[i][j] + alpha_ * x_.vectors[i][j];
    const double n = vector_norm(next[i]);
    total += n * n;
  }
  if (total == 0.0) throw NumericalError("all iterates vanished");
  const double scale = 1.0 / std::sqrt(total);
  for (CVector& v : next)
    for (Complex& z : v) z *= scale;
  x_.vectors = std::move(next);
  lambda_ = overlap(*a_, x_);
  ++k_;
}

GaussSeidelIteration::GaussSeidelIteration(const Tensor& a, double alpha, RankOneFactors start)
    : a_(&a), alpha_(alpha), x_(std::move(start)) {
  check_factor_shapes(a, x_);
  for (const CVector& v : x_.vectors) check_unit(vector_norm(v), "start factor norm");
  x_.normalization = Normalization::per_vector;
  lambda_ = overlap(a, x_);
}

void GaussSeidelIteration::step() {
  for (std::size_t i = 0; i < a_->order(); ++i) {
    CVector g = contract_excluding_conj(*a_, x_, i);
    for (std::size_t j = 0; j < g.size(); ++j) g[j] = lambda_ * g[j] + alpha_ * x_.vectors[i][j];
    const double len = vector_norm(g);
    if (len == 0.0) {
      throw NumericalError("iterate of mode " + std::to_string(i + 1) + " vanished");
    }
    for (Complex& z : g) z /= len;
    x_.vectors[i] = std::move(g);
  }
  lambda_ = overlap(*a_, x_);
  ++k_;
}

bool check_stop(Complex previous, Complex current, double tol) {
  return std::abs(std::abs(current) - std::abs(previous)) < tol;
}

bool check_stop(std::span<const Complex> lambdas, double tol) {
  if (lambdas.size() < 2) return false;
  return check_stop(lambdas[lambdas.size() - 2], lambdas.back(), tol);
}

Complex phase_root(Complex z, std::size_t m) {
  const Complex unit = std::abs(z) / z;
  return std::polar(1.0, std::arg(unit) / static_cast<double>(m));
}

UEigenpair solve_embed(const Tensor& a, const SolverConfig& cfg, std::span<const Complex> start) {
  return solve_embed(a, sym_embed(a), cfg, start);
}

UEigenpair solve_embed(const Tensor& a, const EmbeddedTensor& s, const SolverConfig& cfg,
                       std::span<const Complex> start) {
  cfg.validate();
  const std::size_t m = a.order();
  EmbedIteration it(s, shift_to_embedded(cfg.effective_alpha(m), m), CVector(start.begin(), start.end()));
  UEigenpair out;
  out.trace = iterate(it, cfg);
  require_nonzero(it.lambda());
  const double lambda_s = std::abs(it.lambda());
  CVector x = it.x();
  const Complex phase = phase_root(it.lambda(), m);
  for (Complex& z : x) z *= phase;
  LiftedEigenpair lifted = lift_eigenpair(lambda_s, x, a.dims());
  out.lambda = lifted.lambda;
  out.factors = std::move(lifted.factors);
  make_unit(out.factors);
  out.residual = residual(a, out);
  return out;
}

UEigenpair solve_joint(const Tensor& a, const SolverConfig& cfg, const RankOneFactors& start) {
  cfg.validate();
  const std::size_t m = a.order();
  JointIteration it(a, cfg.effective_alpha(m), start);
  UEigenpair out;
  out.trace = iterate(it, cfg);
  require_nonzero(it.lambda());
  const double root_m = std::sqrt(static_cast<double>(m));
  out.lambda = std::pow(root_m, static_cast<double>(m)) * std::abs(it.lambda());
  const Complex scale = root_m * phase_root(it.lambda(), m);
  out.factors = it.factors();
  out.factors.normalization = Normalization::per_vector;
  for (CVector& v : out.factors.vectors)
    for (Complex& z : v) z *= scale;
  make_unit(out.factors);
  out.residual = residual(a, out);
  return out;
}

UEigenpair solve_gauss_seidel(const Tensor& a, const SolverConfig& cfg,
                              const RankOneFactors& start) {
  cfg.validate();
  GaussSeidelIteration it(a, cfg.effective_alpha(a.order()), start);
  UEigenpair out;
  out.trace = iterate(it, cfg);
  require_nonzero(it.lambda());
  out.lambda = std::abs(it.lambda());
  const Complex phase = phase_root(it.lambda(), a.order());
  out.factors = it.factors();
  for (CVector& v : out.factors.vectors)
    for (Complex& z : v) z *= phase;
  out.residual = residual(a, out);
  return out;
}

double residual(const Tensor& a, const RankOneFactors& factors, double lambda) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.order(); ++k) {
    CVector g = contract_excluding(a, factors, k);
    double s = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j)
      s += std::norm(g[j] - lambda * std::conj(factors.vectors[k][j]));
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

double residual(const Tensor& a, const UEigenpair& pair) {
  return residual(a, pair.factors, pair.lambda);
}

RankOneFactors draw_start(const std::vector<std::size_t>& dims, Algorithm algo,
                          std::uint64_t seed) {
  ComplexNormalSource source(seed);
  RankOneFactors f;
  for (std::size_t n : dims) f.vectors.push_back(source.vector(n));
  if (algo == Algorithm::gauss_seidel) {
    f.normalization = Normalization::per_vector;
    for (CVector& v : f.vectors) {
      const double len = vector_norm(v);
      for (Complex& z : v) z /= len;
    }
  } else {
    f.normalization = Normalization::joint;
    const double len = joint_norm(f);
    for (CVector& v : f.vectors)
      for (Complex& z : v) z /= len;
  }
  return f;
}

MultiStartResult multi_start(const Tensor& a, const SolverConfig& cfg) {
  cfg.validate();
  std::optional<EmbeddedTensor> embedded;
  if (cfg.algorithm == Algorithm::embed) embedded = sym_embed(a);

  const auto run_one = [&](std::size_t index) {
    StartResult r;
    r.index = index;
    r.seed = derive_seed(cfg.seed, index);
    try {
      RankOneFactors start = draw_start(a.dims(), cfg.algorithm, r.seed);
      switch (cfg.algorithm) {
        case Algorithm::embed:
          r.pair = solve_embed(a, *embedded, cfg, start.concatenated());
          break;
        case Algorithm::joint:
          r.pair = solve_joint(a, cfg, start);
          break;
        case Algorithm::gauss_seidel:
          r.pair = solve_gauss_seidel(a, cfg, start);
          break;
      }
    } catch (const NumericalError& e) {
      r.error = e.what();
    }
    return r;
  };

  const std::size_t count = static_cast<std::size_t>(cfg.starts);
  std::vector<StartResult> results(count);
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = run_one(i);
  } else {
    // each worker takes indices w, w + workers, ...; slots are disjoint
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < count; i += workers) results[i] = run_one(i);
      }));
    }
    for (auto& job : jobs) job.get();
  }

  MultiStartResult out;
  bool found = false;
  for (const StartResult& r : results) {
    if (!r.pair) continue;
    if (!found || r.pair->lambda > out.best.lambda) {
      out.best = *r.pair;
      out.best_index = r.index;
      found = true;
    }
  }
  if (!found) throw NumericalError("every start failed: " + results.front().error);
  out.starts = std::move(results);
  return out;
}

}  // namespace ueig
