#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "ueig/catalog.hpp"
#include "ueig/tensor.hpp"

namespace ueig {
namespace {

using testing::basis;
using testing::unit_factors;
const Complex I(0.0, 1.0);

Tensor ex41() { return example_4_1().tensor(); }

TEST(FromSparse, BuildsTheThreeQubitExample) {
  const std::vector<SparseEntry> entries = {{{1, 1, 2}, std::sqrt(1.0 / 3.0)},
                                            {{2, 1, 1}, std::sqrt(2.0 / 3.0)}};
  Tensor t = from_sparse({2, 2, 2}, entries);
  EXPECT_NEAR(std::abs(t({0, 0, 1}) - std::sqrt(1.0 / 3.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t({1, 0, 0}) - std::sqrt(2.0 / 3.0)), 0.0, 1e-15);
  EXPECT_EQ(t.nonzero_count(), 2u);
  EXPECT_EQ(max_abs_diff(t, ex41()), 0.0);
}

TEST(FromSparse, EmptyEntriesGiveZeroTensor) {
  Tensor t = from_sparse({2, 2}, {});
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.nonzero_count(), 0u);
}

TEST(FromSparse, SingleEntryVector) {
  const std::vector<SparseEntry> e = {{{2}, I}};
  Tensor t = from_sparse({3}, e);
  EXPECT_EQ(t({0}), Complex(0));
  EXPECT_EQ(t({1}), I);
  EXPECT_EQ(t({2}), Complex(0));
}

TEST(FromSparse, RejectsBadInput) {
  const std::vector<SparseEntry> out_of_range = {{{3, 1}, 1.0}};
  const std::vector<SparseEntry> zero_index = {{{0, 1}, 1.0}};
  const std::vector<SparseEntry> dup = {{{1, 1}, 1.0}, {{1, 1}, 2.0}};
  const std::vector<SparseEntry> short_index = {{{1}, 1.0}};
  EXPECT_THROW(from_sparse({2, 2}, out_of_range), InputError);
  EXPECT_THROW(from_sparse({2, 2}, zero_index), InputError);
  EXPECT_THROW(from_sparse({2, 2}, dup), InputError);
  EXPECT_THROW(from_sparse({2, 2}, short_index), InputError);
  EXPECT_THROW(from_sparse({}, {}), InputError);
  EXPECT_THROW(from_sparse({2, 0}, {}), InputError);
}

TEST(TensorCtor, RejectsNonFiniteAndWrongLength) {
  EXPECT_THROW(Tensor({2}, CVector{1.0}), InputError);
  EXPECT_THROW(Tensor({1}, CVector{Complex(NAN, 0)}), InputError);
  EXPECT_THROW(Tensor({1}, CVector{Complex(0, INFINITY)}), InputError);
}

TEST(Layout, LastIndexFastest) {
  Tensor t({2, 3});
  EXPECT_EQ(t.strides(), (std::vector<std::size_t>{3, 1}));
  t({1, 2}) = 5.0;
  EXPECT_EQ(t.data()[5], Complex(5.0));
}

TEST(Norm, Examples) {
  EXPECT_NEAR(norm(ex41()), 1.0, 1e-15);
  EXPECT_EQ(norm(Tensor({3, 2})), 0.0);
  Tensor t({1});
  t({0}) = Complex(3, 4);
  EXPECT_NEAR(norm(t), 5.0, 1e-15);
}

TEST(Inner, Examples) {
  Tensor t = random_tensor({2, 3, 2}, 11);
  const Complex tt = inner(t, t);
  EXPECT_NEAR(tt.real(), norm(t) * norm(t), 1e-12);
  EXPECT_EQ(tt.imag(), 0.0);

  EXPECT_EQ(inner(rank_one({{basis(2, 0), basis(2, 0)}}), rank_one({{basis(2, 0), basis(2, 1)}})),
            Complex(0));

  Tensor x({2}), y({2});
  x({0}) = I;
  y({0}) = 1.0;
  EXPECT_EQ(inner(x, y), -I);
  EXPECT_THROW(inner(Tensor({2}), Tensor({3})), InputError);
}

TEST(RankOne, Examples) {
  Tensor e12 = rank_one({{basis(2, 0), basis(2, 1)}});
  EXPECT_EQ(e12({0, 1}), Complex(1));
  EXPECT_EQ(e12.nonzero_count(), 1u);

  const double r = 1.0 / std::sqrt(2.0);
  Tensor t = rank_one({{{r, I * r}, {1.0, 0.0}}});
  EXPECT_NEAR(std::abs(t({0, 0}) - r), 0.0, 1e-15);
  EXPECT_EQ(t({0, 1}), Complex(0));
  EXPECT_NEAR(std::abs(t({1, 0}) - I * r), 0.0, 1e-15);
  EXPECT_EQ(t({1, 1}), Complex(0));

  EXPECT_NEAR(norm(rank_one(unit_factors({3, 4, 2}, 5))), 1.0, 1e-12);
}

TEST(Overlap, Examples) {
  const Complex v = overlap(ex41(), {{basis(2, 1), basis(2, 0), basis(2, 0)}});
  EXPECT_NEAR(std::abs(v - std::sqrt(2.0 / 3.0)), 0.0, 1e-15);

  RankOneFactors f = unit_factors({2, 2, 2}, 3);
  f.vectors[1].assign(2, 0.0);
  EXPECT_EQ(overlap(random_tensor({2, 2, 2}, 1), f), Complex(0));

  RankOneFactors g = unit_factors({3, 2, 4}, 9);
  EXPECT_NEAR(std::abs(overlap(rank_one(g), g) - 1.0), 0.0, 1e-12);

  EXPECT_THROW(overlap(ex41(), unit_factors({2, 2}, 1)), InputError);
  EXPECT_THROW(overlap(ex41(), unit_factors({2, 3, 2}, 1)), InputError);
}

TEST(ContractExcluding, Examples) {
  RankOneFactors f{{CVector(2), basis(2, 0), basis(2, 1)}};
  const CVector c = contract_excluding(ex41(), f, 0);
  EXPECT_NEAR(std::abs(c[0] - std::sqrt(1.0 / 3.0)), 0.0, 1e-15);
  EXPECT_EQ(c[1], Complex(0));

  RankOneFactors e{{basis(3, 0), basis(2, 0), basis(4, 0)}};
  Tensor r = rank_one(e);
  for (std::size_t k = 0; k < 3; ++k) {
    const CVector v = contract_excluding(r, e, k);
    EXPECT_EQ(v, e.vectors[k]);
  }
  for (const Complex& z : contract_excluding(Tensor({2, 3}), unit_factors({2, 3}, 1), 1))
    EXPECT_EQ(z, Complex(0));

  EXPECT_THROW(contract_excluding(ex41(), f, 3), InputError);
}

TEST(ContractExcludingConj, Examples) {
  Tensor t({2, 2});
  t({0, 0}) = I;
  RankOneFactors f{{basis(2, 0), basis(2, 0)}};
  EXPECT_EQ(contract_excluding(t, f, 0)[0], -I);
  EXPECT_EQ(contract_excluding_conj(t, f, 0)[0], I);
  EXPECT_EQ(contract_excluding_conj(t, f, 0)[1], Complex(0));

  Tensor real({2, 3}, {1.0, -2.0, 0.5, 3.0, 0.0, 1.5});
  RankOneFactors rf{{{0.6, 0.8}, {1.0, 0.0, 0.0}}};
  EXPECT_EQ(contract_excluding(real, rf, 0), contract_excluding_conj(real, rf, 0));
}

TEST(Transpose, Examples) {
  Tensor t = random_tensor({2, 3, 4}, 8);
  EXPECT_EQ(max_abs_diff(transpose(t, Permutation::identity(3)), t), 0.0);

  Tensor m = random_tensor({2, 3}, 4);
  Tensor mt = transpose(m, Permutation({1, 0}));
  ASSERT_EQ(mt.dims(), (std::vector<std::size_t>{3, 2}));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(mt({j, i}), m({i, j}));

  const std::size_t p1[] = {2, 3, 1};
  Tensor a = transpose(ex41(), Permutation::from_one_based(p1));
  EXPECT_NEAR(std::abs(a({0, 1, 0}) - std::sqrt(1.0 / 3.0)), 0.0, 1e-15);
}

TEST(Transpose, OutputDimsFollowPermutation) {
  Tensor t = random_tensor({2, 3, 4}, 8);
  Tensor u = transpose(t, Permutation({2, 0, 1}));
  EXPECT_EQ(u.dims(), (std::vector<std::size_t>{4, 2, 3}));
}

TEST(PermutationTest, RejectsInvalidMaps) {
  EXPECT_THROW(Permutation({0, 0}), InputError);
  EXPECT_THROW(Permutation({0, 2}), InputError);
  const std::size_t bad[] = {0, 1};
  EXPECT_THROW(Permutation::from_one_based(bad), InputError);
  EXPECT_THROW(transpose(ex41(), Permutation({1, 0})), InputError);
}

TEST(PermutationTest, AllPermutationsLexicographic) {
  const auto all = all_permutations(3);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front().map(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(all[1].map(), (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_EQ(all.back().map(), (std::vector<std::size_t>{2, 1, 0}));
}

TEST(Block, TrivialPartitionIsIdentity) {
  Tensor t = random_tensor({2, 3, 2}, 3);
  const std::size_t zero[] = {0, 0, 0};
  EXPECT_EQ(max_abs_diff(block(t, BlockPartition::trivial(t.dims()), zero), t), 0.0);
}

TEST(Block, LowerLeftSubmatrix) {
  Tensor t = random_tensor({4, 4}, 2);
  BlockPartition p = BlockPartition::uniform(2, {2, 2});
  const std::size_t idx[] = {1, 0};
  Tensor b = block(t, p, idx);
  ASSERT_EQ(b.dims(), (std::vector<std::size_t>{2, 2}));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(b({i, j}), t({i + 2, j}));
}

TEST(Block, EmbeddingPartitionBlockShape) {
  BlockPartition p = BlockPartition::uniform(3, {3, 4, 5});
  EXPECT_EQ(p.dims(), (std::vector<std::size_t>{12, 12, 12}));
  EXPECT_EQ(p.offset(0, 2), 7u);
  const std::size_t idx[] = {0, 1, 2};
  Tensor b = block(Tensor(p.dims()), p, idx);
  EXPECT_EQ(b.dims(), (std::vector<std::size_t>{3, 4, 5}));
}

TEST(Block, RejectsOutOfRangeBlock) {
  const std::size_t idx[] = {2, 0};
  EXPECT_THROW(block(Tensor({4, 4}), BlockPartition::uniform(2, {2, 2}), idx), InputError);
}

TEST(Block, PartitionMustCoverDims) {
  EXPECT_THROW(block(Tensor({4, 4}), BlockPartition::uniform(2, {2, 1}),
                     std::vector<std::size_t>{0, 0}),
               InputError);
}

// Properties on seeded random instances.

class TensorProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(TensorProperties, ConjugateSymmetry) {
  const auto dims = testing::random_dims(GetParam(), 1, 4, 4);
  Tensor x = random_tensor(dims, GetParam() * 2 + 1);
  Tensor y = random_tensor(dims, GetParam() * 2 + 2);
  EXPECT_NEAR(std::abs(inner(x, y) - std::conj(inner(y, x))), 0.0, 1e-12);
}

TEST_P(TensorProperties, ContractionConsistency) {
  const auto dims = testing::random_dims(GetParam(), 1, 4, 4);
  Tensor t = random_tensor(dims, GetParam() + 100);
  RankOneFactors f = unit_factors(dims, GetParam() + 200);
  const Complex ov = overlap(t, f);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const CVector c = contract_excluding(t, f, k);
    Complex s = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) s += f.vectors[k][j] * c[j];
    EXPECT_NEAR(std::abs(s - ov), 0.0, 1e-12) << "mode " << k;
  }
}

TEST_P(TensorProperties, BlockOfTransposeIsTransposeOfBlock) {
  const auto dims = testing::random_dims(GetParam(), 2, 4, 4);
  const std::size_t m = dims.size();
  // split every mode into up to two blocks
  std::vector<std::vector<std::size_t>> lengths;
  for (std::size_t n : dims) {
    if (n >= 2) lengths.push_back({n / 2, n - n / 2});
    else lengths.push_back({n});
  }
  Tensor t = random_tensor(dims, GetParam() + 300);
  BlockPartition part(lengths);
  for (const Permutation& p : all_permutations(m)) {
    Tensor tp = transpose(t, p);
    BlockPartition pp = part.permuted(p);
    Index bi(m, 0);
    std::vector<std::size_t> counts(m);
    for (std::size_t k = 0; k < m; ++k) counts[k] = part.block_count(k);
    do {
      const Index pbi = p.apply(bi);
      Tensor lhs = block(tp, pp, pbi);
      Tensor rhs = transpose(block(t, part, bi), p);
      EXPECT_EQ(max_abs_diff(lhs, rhs), 0.0);
    } while (next_index(bi, counts));
  }
}

TEST_P(TensorProperties, TransposeRoundTrip) {
  const auto dims = testing::random_dims(GetParam(), 1, 4, 4);
  Tensor t = random_tensor(dims, GetParam() + 400);
  for (const Permutation& p : all_permutations(dims.size()))
    EXPECT_EQ(max_abs_diff(transpose(transpose(t, p), p.inverse()), t), 0.0);
}

TEST_P(TensorProperties, RankOneNormIsProductOfNorms) {
  const auto dims = testing::random_dims(GetParam(), 1, 4, 4);
  ComplexNormalSource rng(GetParam() + 500);
  RankOneFactors f;
  double expected = 1.0;
  for (std::size_t n : dims) {
    f.vectors.push_back(rng.vector(n));
    expected *= vector_norm(f.vectors.back());
  }
  EXPECT_NEAR(norm(rank_one(f)), expected, 1e-12 * std::max(1.0, expected));
}

TEST_P(TensorProperties, OverlapBoundedByNorm) {
  const auto dims = testing::random_dims(GetParam(), 1, 4, 4);
  Tensor t = random_tensor(dims, GetParam() + 600);
  EXPECT_LE(std::abs(overlap(t, unit_factors(dims, GetParam() + 700))), norm(t) + 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Seeds, TensorProperties, ::testing::Range<std::uint64_t>(1, 21));

}  // namespace
}  // namespace ueig
