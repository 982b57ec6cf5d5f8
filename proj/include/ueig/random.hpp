#ifndef UEIG_RANDOM_HPP_
#define UEIG_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "ueig/tensor.hpp"

namespace ueig {

/// Seeded source of complex standard-normal draws.
///
/// Engine: std::mt19937_64 (its output sequence is fixed by the C++
/// standard). Uniforms take the top 53 bits of one engine output, u in
/// [0, 1). Each complex draw consumes two uniforms u1, u2 and applies the
/// Box-Muller transform r = sqrt(-2 ln(1 - u1)), re = r cos(2 pi u2),
/// im = r sin(2 pi u2). std::normal_distribution is avoided because its
/// output differs between standard library implementations.
class ComplexNormalSource {
 public:
  explicit ComplexNormalSource(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  Complex next();
  CVector vector(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Seed for start `index` of a multi-start sweep under `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace ueig

#endif  // UEIG_RANDOM_HPP_
