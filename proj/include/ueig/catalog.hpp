#ifndef UEIG_CATALOG_HPP_
#define UEIG_CATALOG_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ueig/entanglement.hpp"
#include "ueig/tensor.hpp"

namespace ueig {

/// Builds a state from ket strings: digit d of each ket maps to index d + 1
/// in its mode, every ket getting the same amplitude times its sign.
Tensor from_kets(const std::vector<std::size_t>& dims,
                 const std::vector<std::pair<std::string, double>>& signed_kets,
                 double amplitude);

/// 3-qubit state sqrt(1/3)|001> + sqrt(2/3)|100>.
PureState example_4_1();
/// 2x3x3 state with six amplitudes sqrt(1/6).
PureState example_4_2();
/// 5-qubit absolutely maximally entangled state.
PureState example_4_3();
/// n x n x n state A_{ijk} = (cos(i - j + k) + i sin(i + j - k)) / sqrt(n^3),
/// indices from 1, rescaled to unit norm (input_norm() keeps the raw norm).
PureState trig_tensor(std::size_t n);
/// 3x3x3x3x3x2 state with eighteen amplitudes 1/(3 sqrt 2).
PureState example_4_6();
/// 10x8x5x7 tensor with four nonzero entries.
Tensor example_4_7();
/// Complex standard-normal amplitudes, normalized; deterministic per seed.
PureState random_state(const std::vector<std::size_t>& dims, std::uint64_t seed);
/// Complex standard-normal entries without normalization.
Tensor random_tensor(const std::vector<std::size_t>& dims, std::uint64_t seed);

struct CatalogEntry {
  std::string id;
  std::string description;
  std::vector<std::size_t> dims;
  std::optional<double> expected_lambda;
  std::optional<double> expected_gme;
  /// True when the entry is a normalized pure state.
  bool is_state = true;
  /// Slow rows are skipped by default table regeneration.
  bool long_running = false;
  std::function<Tensor()> build;
};

/// Every deterministic fixture, in a fixed order.
const std::vector<CatalogEntry>& catalog();

/// Finds a fixture by id. Besides the fixed ids, "random:<d1>x<d2>x...:<seed>"
/// yields random_state for the given dims and seed. Throws InputError listing
/// the valid ids when nothing matches.
CatalogEntry find_entry(const std::string& id);

}  // namespace ueig

#endif  // UEIG_CATALOG_HPP_
