#include "ueig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ueig/random.hpp"

namespace ueig {

std::string_view to_string(OracleMethod method) {
  switch (method) {
    case OracleMethod::svd: return "svd";
    case OracleMethod::sampling: return "sampling";
    case OracleMethod::analytic: return "analytic";
  }
  return "?";
}

OracleResult svd_oracle(const Tensor& a) {
  if (a.order() != 2) {
    throw InputError("svd oracle needs an order-2 tensor, got dims " + format_dims(a.dims()));
  }
  const std::size_t rows = a.dim(0);
  const std::size_t cols = a.dim(1);
  const auto apply = [&](const CVector& v) {
    CVector av(rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) av[i] += a({i, j}) * v[j];
    return av;
  };
  const auto apply_adjoint = [&](const CVector& u) {
    CVector w(cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) w[j] += std::conj(a({i, j})) * u[i];
    return w;
  };

  constexpr double kTol = 1e-12;
  constexpr std::size_t kMaxIter = 1'000'000;
  ComplexNormalSource source(0x5eed);
  CVector v = source.vector(cols);
  double len = vector_norm(v);
  for (Complex& z : v) z /= len;

  double sigma_sq = 0.0;
  std::size_t it = 0;
  while (it < kMaxIter) {
    ++it;
    CVector w = apply_adjoint(apply(v));
    // Rayleigh quotient of the Gram operator at the current unit v
    const double next = vector_dot(v, w).real();
    len = vector_norm(w);
    if (len == 0.0) return {0.0, OracleMethod::svd, it};
    for (Complex& z : w) z /= len;
    v = std::move(w);
    const bool done = std::abs(next - sigma_sq) <= kTol * std::max(next, 1e-300);
    sigma_sq = next;
    if (done) break;
  }
  return {vector_norm(apply(v)), OracleMethod::svd, it};
}

OracleResult sampling_oracle(const Tensor& a, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw InputError("sampling oracle needs at least one sample");
  ComplexNormalSource source(seed);
  RankOneFactors f;
  f.vectors.resize(a.order());
  double best = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t k = 0; k < a.order(); ++k) {
      f.vectors[k] = source.vector(a.dim(k));
      const double len = vector_norm(f.vectors[k]);
      for (Complex& z : f.vectors[k]) z /= len;
    }
    best = std::max(best, std::abs(overlap(a, f)));
  }
  return {best, OracleMethod::sampling, samples};
}

std::optional<OracleResult> orthogonal_sum_oracle(const Tensor& a) {
  std::vector<Index> support;
  double largest = 0.0;
  Index idx(a.order(), 0);
  auto entry = a.data().begin();
  do {
    if (*entry != Complex{}) {
      support.push_back(idx);
      largest = std::max(largest, std::abs(*entry));
    }
    ++entry;
  } while (next_index(idx, a.dims()));

  if (a.order() == 1) {
    if (support.size() > 1) return std::nullopt;
    return OracleResult{largest, OracleMethod::analytic, 0};
  }
  std::size_t distinct_modes = 0;
  for (std::size_t k = 0; k < a.order(); ++k) {
    std::set<std::size_t> seen;
    bool distinct = true;
    for (const Index& s : support) {
      if (!seen.insert(s[k]).second) {
        distinct = false;
        break;
      }
    }
    if (distinct) ++distinct_modes;
  }
  if (distinct_modes < 2) return std::nullopt;
  return OracleResult{largest, OracleMethod::analytic, 0};
}

}  // namespace ueig
