#ifndef UEIG_TENSOR_HPP_
#define UEIG_TENSOR_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ueig {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;
using Index = std::vector<std::size_t>;

/// Raised for malformed user input: bad shapes, out-of-range indices, invalid
/// permutations, non-normalized states.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an iteration or conversion hits a degenerate numerical state,
/// e.g. a vanishing iterate or a zero eigenvalue.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Dense complex tensor of order m with mode sizes (n1, ..., nm).
 *
 * Entries are stored row-major: the last index varies fastest. All indices
 * taken by member functions are 0-based; only the JSON/file layer and
 * `from_sparse` speak 1-based indices.
 */
class Tensor {
 public:
  explicit Tensor(std::vector<std::size_t> dims);
  Tensor(std::vector<std::size_t> dims, std::vector<Complex> data);

  std::size_t order() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t mode) const { return dims_.at(mode); }
  std::size_t size() const { return data_.size(); }
  const std::vector<std::size_t>& strides() const { return strides_; }

  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }

  std::size_t offset(std::span<const std::size_t> index) const;
  Complex& operator()(std::span<const std::size_t> index) { return data_[offset(index)]; }
  const Complex& operator()(std::span<const std::size_t> index) const {
    return data_[offset(index)];
  }
  Complex& operator()(std::initializer_list<std::size_t> index) {
    return (*this)(std::span<const std::size_t>(index.begin(), index.size()));
  }
  const Complex& operator()(std::initializer_list<std::size_t> index) const {
    return (*this)(std::span<const std::size_t>(index.begin(), index.size()));
  }

  bool is_cubical() const;
  std::size_t nonzero_count() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::vector<Complex> data_;
};

/// One explicitly listed entry; `index` is 1-based.
struct SparseEntry {
  Index index;
  Complex value;
};

/// Dense tensor with the listed entries set and all others zero.
/// Throws InputError on empty dims, out-of-range or duplicate indices.
Tensor from_sparse(const std::vector<std::size_t>& dims, std::span<const SparseEntry> entries);

/// Advances a 0-based row-major multi-index. Returns false after the last one.
bool next_index(Index& index, std::span<const std::size_t> dims);

enum class Normalization { per_vector, joint };

/// One complex vector per mode. The normalization attribute records which
/// convention the vectors are meant to satisfy; it is not enforced on
/// construction.
struct RankOneFactors {
  std::vector<CVector> vectors;
  Normalization normalization = Normalization::per_vector;

  std::size_t order() const { return vectors.size(); }
  std::vector<std::size_t> dims() const;
  /// Vectors concatenated mode by mode.
  CVector concatenated() const;
};

double vector_norm(std::span<const Complex> v);
/// Sum over j of conj(x_j) * y_j.
Complex vector_dot(std::span<const Complex> x, std::span<const Complex> y);

double norm(const Tensor& t);
/// Sum of conj(X) * Y over all entries.
Complex inner(const Tensor& x, const Tensor& y);
Tensor rank_one(const RankOneFactors& factors);

/// <T, x1 (x) ... (x) xm> = sum conj(T_i) x1_i1 ... xm_im.
Complex overlap(const Tensor& t, const RankOneFactors& factors);

/// The mode-k vector <T, (x)_{i != k} x_i>, computed in a single pass over
/// the entries. The mode-k factor is ignored.
CVector contract_excluding(const Tensor& t, const RankOneFactors& factors, std::size_t mode);

/// Componentwise conjugate of contract_excluding.
CVector contract_excluding_conj(const Tensor& t, const RankOneFactors& factors,
                                std::size_t mode);

/// Mode permutation, stored 0-based. `map()[r]` is the source mode placed at
/// output position r.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> map);
  static Permutation identity(std::size_t m);
  static Permutation from_one_based(std::span<const std::size_t> one_based);

  std::size_t size() const { return map_.size(); }
  const std::vector<std::size_t>& map() const { return map_; }
  std::size_t operator[](std::size_t r) const { return map_[r]; }
  Permutation inverse() const;
  /// p(j) = (j[p0], ..., j[p_{m-1}]).
  Index apply(std::span<const std::size_t> index) const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> map_;
};

/// All permutations of 0..m-1 in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t m);

/// p-transposition: the output entry at p(j) equals the input entry at j.
/// Output dims are (n[p0], ..., n[p_{m-1}]).
Tensor transpose(const Tensor& t, const Permutation& p);

/// Per-mode partition of the index ranges into consecutive blocks.
class BlockPartition {
 public:
  explicit BlockPartition(std::vector<std::vector<std::size_t>> block_lengths);
  /// One block per mode covering the full range.
  static BlockPartition trivial(std::span<const std::size_t> dims);
  /// Every mode split by the same lengths (used by the symmetric embedding).
  static BlockPartition uniform(std::size_t order, std::vector<std::size_t> lengths);

  std::size_t order() const { return lengths_.size(); }
  std::size_t block_count(std::size_t mode) const { return lengths_.at(mode).size(); }
  std::size_t length(std::size_t mode, std::size_t block) const { return lengths_.at(mode).at(block); }
  /// Sum of the lengths of blocks 0..block-1 in the given mode.
  std::size_t offset(std::size_t mode, std::size_t block) const { return offsets_.at(mode).at(block); }
  std::vector<std::size_t> dims() const;
  const std::vector<std::vector<std::size_t>>& lengths() const { return lengths_; }

  /// Partition of T^<p> when this one partitions T.
  BlockPartition permuted(const Permutation& p) const;

 private:
  std::vector<std::vector<std::size_t>> lengths_;
  std::vector<std::vector<std::size_t>> offsets_;
};

/// Subtensor at 0-based block multi-index `block_index`.
Tensor block(const Tensor& t, const BlockPartition& partition,
             std::span<const std::size_t> block_index);

/// max |x_i - y_i| over all entries; throws on shape mismatch.
double max_abs_diff(const Tensor& x, const Tensor& y);

std::string format_dims(std::span<const std::size_t> dims);

}  // namespace ueig

#endif  // UEIG_TENSOR_HPP_
