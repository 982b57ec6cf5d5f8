#include "ueig/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace ueig {

namespace {

std::vector<std::size_t> row_major_strides(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];
  return strides;
}

std::size_t checked_volume(const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw InputError("tensor must have at least one mode");
  std::size_t volume = 1;
  for (std::size_t n : dims) {
    if (n == 0) throw InputError("tensor mode sizes must be positive, got " + format_dims(dims));
    volume *= n;
  }
  return volume;
}

void check_factor_dims(const Tensor& t, const RankOneFactors& factors, std::size_t skip) {
  if (factors.order() != t.order()) {
    throw InputError("factor count " + std::to_string(factors.order()) +
                     " does not match tensor order " + std::to_string(t.order()));
  }
  for (std::size_t i = 0; i < t.order(); ++i) {
    if (i == skip) continue;
    if (factors.vectors[i].size() != t.dim(i)) {
      throw InputError("factor " + std::to_string(i + 1) + " has length " +
                       std::to_string(factors.vectors[i].size()) + ", expected " +
                       std::to_string(t.dim(i)));
    }
  }
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> dims)
    : dims_(std::move(dims)), strides_(row_major_strides(dims_)), data_(checked_volume(dims_)) {}

Tensor::Tensor(std::vector<std::size_t> dims, std::vector<Complex> data)
    : dims_(std::move(dims)), strides_(row_major_strides(dims_)), data_(std::move(data)) {
  if (data_.size() != checked_volume(dims_)) {
    throw InputError("data length " + std::to_string(data_.size()) +
                     " does not match dims " + format_dims(dims_));
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InputError("tensor entries must be finite");
  }
}

std::size_t Tensor::offset(std::span<const std::size_t> index) const {
  if (index.size() != dims_.size()) throw InputError("index arity does not match tensor order");
  std::size_t off = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= dims_[k]) throw InputError("index out of range in mode " + std::to_string(k + 1));
    off += index[k] * strides_[k];
  }
  return off;
}

bool Tensor::is_cubical() const {
  return std::all_of(dims_.begin(), dims_.end(), [&](std::size_t n) { return n == dims_[0]; });
}

std::size_t Tensor::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Complex& z) { return z != Complex{}; }));
}

Tensor from_sparse(const std::vector<std::size_t>& dims, std::span<const SparseEntry> entries) {
  Tensor t(dims);
  std::set<std::size_t> seen;
  Index zero_based(dims.size());
  for (const SparseEntry& e : entries) {
    if (e.index.size() != dims.size()) {
      throw InputError("entry index has " + std::to_string(e.index.size()) +
                       " components, tensor has order " + std::to_string(dims.size()));
    }
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (e.index[k] < 1 || e.index[k] > dims[k]) {
        throw InputError("entry index " + format_dims(e.index) + " out of range for dims " +
                         format_dims(dims));
      }
      zero_based[k] = e.index[k] - 1;
    }
    std::size_t off = t.offset(zero_based);
    if (!seen.insert(off).second) throw InputError("duplicate entry index " + format_dims(e.index));
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag()))
      throw InputError("entry " + format_dims(e.index) + " is not finite");
    t.data()[off] = e.value;
  }
  return t;
}

bool next_index(Index& index, std::span<const std::size_t> dims) {
  for (std::size_t k = dims.size(); k-- > 0;) {
    if (++index[k] < dims[k]) return true;
    index[k] = 0;
  }
  return false;
}

std::vector<std::size_t> RankOneFactors::dims() const {
  std::vector<std::size_t> d;
  d.reserve(vectors.size());
  for (const CVector& v : vectors) d.push_back(v.size());
  return d;
}

CVector RankOneFactors::concatenated() const {
  CVector out;
  for (const CVector& v : vectors) out.insert(out.end(), v.begin(), v.end());
  return out;
}

double vector_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex vector_dot(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw InputError("vector length mismatch");
  Complex s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double norm(const Tensor& t) { return vector_norm(t.data()); }

Complex inner(const Tensor& x, const Tensor& y) {
  if (x.dims() != y.dims()) {
    throw InputError("inner product of tensors with dims " + format_dims(x.dims()) + " and " +
                     format_dims(y.dims()));
  }
  return vector_dot(x.data(), y.data());
}

Tensor rank_one(const RankOneFactors& factors) {
  Tensor t(factors.dims());
  Index idx(t.order(), 0);
  auto out = t.data().begin();
  do {
    Complex p{1.0, 0.0};
    for (std::size_t k = 0; k < idx.size(); ++k) p *= factors.vectors[k][idx[k]];
    *out++ = p;
  } while (next_index(idx, t.dims()));
  return t;
}

Complex overlap(const Tensor& t, const RankOneFactors& factors) {
  check_factor_dims(t, factors, t.order());
  Complex sum{};
  Index idx(t.order(), 0);
  auto entry = t.data().begin();
  do {
    if (*entry != Complex{}) {
      Complex p = std::conj(*entry);
      for (std::size_t k = 0; k < idx.size(); ++k) p *= factors.vectors[k][idx[k]];
      sum += p;
    }
    ++entry;
  } while (next_index(idx, t.dims()));
  return sum;
}

CVector contract_excluding(const Tensor& t, const RankOneFactors& factors, std::size_t mode) {
  if (mode >= t.order()) {
    throw InputError("mode " + std::to_string(mode + 1) + " out of range for order " +
                     std::to_string(t.order()));
  }
  check_factor_dims(t, factors, mode);
  CVector out(t.dim(mode));
  Index idx(t.order(), 0);
  auto entry = t.data().begin();
  do {
    // zero entries dominate symmetric embeddings; skipping them is exact
    if (*entry != Complex{}) {
      Complex p = std::conj(*entry);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k != mode) p *= factors.vectors[k][idx[k]];
      }
      out[idx[mode]] += p;
    }
    ++entry;
  } while (next_index(idx, t.dims()));
  return out;
}

CVector contract_excluding_conj(const Tensor& t, const RankOneFactors& factors,
                                std::size_t mode) {
  CVector v = contract_excluding(t, factors, mode);
  for (Complex& z : v) z = std::conj(z);
  return v;
}

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> hit(map_.size(), false);
  for (std::size_t v : map_) {
    if (v >= map_.size() || hit[v]) throw InputError("not a permutation: " + format_dims(map_));
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<std::size_t> map(m);
  std::iota(map.begin(), map.end(), 0);
  return Permutation(std::move(map));
}

Permutation Permutation::from_one_based(std::span<const std::size_t> one_based) {
  std::vector<std::size_t> map;
  map.reserve(one_based.size());
  for (std::size_t v : one_based) {
    if (v == 0) throw InputError("permutation entries are 1-based");
    map.push_back(v - 1);
  }
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t r = 0; r < map_.size(); ++r) inv[map_[r]] = r;
  return Permutation(std::move(inv));
}

Index Permutation::apply(std::span<const std::size_t> index) const {
  if (index.size() != map_.size()) throw InputError("permutation size does not match index arity");
  Index out(map_.size());
  for (std::size_t r = 0; r < map_.size(); ++r) out[r] = index[map_[r]];
  return out;
}

std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<std::size_t> map(m);
  std::iota(map.begin(), map.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(map);
  } while (std::next_permutation(map.begin(), map.end()));
  return out;
}

Tensor transpose(const Tensor& t, const Permutation& p) {
  if (p.size() != t.order()) throw InputError("permutation size does not match tensor order");
  Tensor out(p.apply(t.dims()));
  // stride of source mode p[r] placed at output position r
  std::vector<std::size_t> out_strides(t.order());
  for (std::size_t r = 0; r < t.order(); ++r) out_strides[p[r]] = out.strides()[r];
  Index idx(t.order(), 0);
  auto entry = t.data().begin();
  do {
    std::size_t off = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) off += idx[k] * out_strides[k];
    out.data()[off] = *entry++;
  } while (next_index(idx, t.dims()));
  return out;
}

BlockPartition::BlockPartition(std::vector<std::vector<std::size_t>> block_lengths)
    : lengths_(std::move(block_lengths)) {
  if (lengths_.empty()) throw InputError("partition must cover at least one mode");
  offsets_.reserve(lengths_.size());
  for (const auto& mode : lengths_) {
    if (mode.empty()) throw InputError("every mode needs at least one block");
    std::vector<std::size_t> off(mode.size(), 0);
    for (std::size_t b = 0; b < mode.size(); ++b) {
      if (mode[b] == 0) throw InputError("block lengths must be positive");
      if (b > 0) off[b] = off[b - 1] + mode[b - 1];
    }
    offsets_.push_back(std::move(off));
  }
}

BlockPartition BlockPartition::trivial(std::span<const std::size_t> dims) {
  std::vector<std::vector<std::size_t>> lengths;
  for (std::size_t n : dims) lengths.push_back({n});
  return BlockPartition(std::move(lengths));
}

BlockPartition BlockPartition::uniform(std::size_t order, std::vector<std::size_t> lengths) {
  return BlockPartition(std::vector<std::vector<std::size_t>>(order, std::move(lengths)));
}

std::vector<std::size_t> BlockPartition::dims() const {
  std::vector<std::size_t> d;
  for (const auto& mode : lengths_) d.push_back(std::accumulate(mode.begin(), mode.end(), std::size_t{0}));
  return d;
}

BlockPartition BlockPartition::permuted(const Permutation& p) const {
  if (p.size() != order()) throw InputError("permutation size does not match partition order");
  std::vector<std::vector<std::size_t>> lengths(order());
  for (std::size_t r = 0; r < order(); ++r) lengths[r] = lengths_[p[r]];
  return BlockPartition(std::move(lengths));
}

Tensor block(const Tensor& t, const BlockPartition& partition,
             std::span<const std::size_t> block_index) {
  if (partition.dims() != t.dims()) {
    throw InputError("partition of " + format_dims(partition.dims()) +
                     " does not fit tensor of dims " + format_dims(t.dims()));
  }
  if (block_index.size() != t.order()) throw InputError("block index arity does not match order");
  std::vector<std::size_t> sub_dims(t.order());
  std::vector<std::size_t> base(t.order());
  for (std::size_t k = 0; k < t.order(); ++k) {
    if (block_index[k] >= partition.block_count(k)) {
      throw InputError("block index out of range in mode " + std::to_string(k + 1));
    }
    sub_dims[k] = partition.length(k, block_index[k]);
    base[k] = partition.offset(k, block_index[k]);
  }
  Tensor sub(sub_dims);
  Index j(t.order(), 0);
  Index src(t.order());
  auto out = sub.data().begin();
  do {
    for (std::size_t k = 0; k < j.size(); ++k) src[k] = base[k] + j[k];
    *out++ = t(src);
  } while (next_index(j, sub_dims));
  return sub;
}

double max_abs_diff(const Tensor& x, const Tensor& y) {
  if (x.dims() != y.dims()) throw InputError("shape mismatch in comparison");
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x.data()[i] - y.data()[i]));
  return d;
}

std::string format_dims(std::span<const std::size_t> dims) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < dims.size(); ++k) os << (k ? "," : "") << dims[k];
  os << ')';
  return os.str();
}

}  // namespace ueig
