#include "ueig/random.hpp"

#include <cmath>
#include <numbers>

namespace ueig {

double ComplexNormalSource::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Complex ComplexNormalSource::next() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log1p(-u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

CVector ComplexNormalSource::vector(std::size_t n) {
  CVector v(n);
  for (Complex& z : v) z = next();
  return v;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix_seed(mix_seed(master) ^ index);
}

}  // namespace ueig
