#ifndef UEIG_IO_HPP_
#define UEIG_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "ueig/embedding.hpp"
#include "ueig/entanglement.hpp"
#include "ueig/solvers.hpp"
#include "ueig/tensor.hpp"

namespace ueig {

using Json = nlohmann::ordered_json;

// Tensor JSON:
//   {"dims": [n1, ..., nm],
//    "entries": [{"idx": [i1, ..., im], "re": r, "im": s}, ...]}
// idx is 1-based. The writer lists nonzero entries only, in storage order.

Json tensor_to_json(const Tensor& t);
/// Throws InputError naming the offending field.
Tensor tensor_from_json(const Json& j);

/// Parses tensor JSON text. Syntax errors are reported as InputError with the
/// line and column and the offending line quoted.
Tensor parse_tensor(std::string_view text);
Tensor read_tensor_file(const std::string& path);

/// Tensor JSON plus "source_dims".
Json embedded_to_json(const EmbeddedTensor& e);

Json complex_to_json(Complex z);
Json factors_to_json(const RankOneFactors& f);

/// {lambda, gme, factors, residual, iterations, status, algorithm, seed}.
/// gme is null when the input is not a unit-norm state.
Json eigenpair_to_json(const UEigenpair& pair, Algorithm algo, std::uint64_t seed,
                       std::optional<double> gme);

}  // namespace ueig

#endif  // UEIG_IO_HPP_
