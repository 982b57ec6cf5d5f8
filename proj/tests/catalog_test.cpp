#include <gtest/gtest.h>

#include <cmath>

#include "ueig/catalog.hpp"
#include "ueig/solvers.hpp"

namespace ueig {
namespace {

TEST(Catalog, ThreeQubitEntries) {
  Tensor t = example_4_1().tensor();
  EXPECT_NEAR(norm(t), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(t({0, 0, 1}) - std::sqrt(1.0 / 3.0)), 0.0, 1e-15);
}

TEST(Catalog, SixTermEntries) {
  Tensor t = example_4_2().tensor();
  EXPECT_EQ(t.dims(), (std::vector<std::size_t>{2, 3, 3}));
  EXPECT_EQ(t.nonzero_count(), 6u);
  // A_111 = A_212 = A_123 = sqrt(1/6)
  for (auto idx : {std::vector<std::size_t>{0, 0, 0}, {1, 0, 1}, {0, 1, 2}})
    EXPECT_NEAR(std::abs(t(idx) - std::sqrt(1.0 / 6.0)), 0.0, 1e-15);
}

TEST(Catalog, AmeSigns) {
  Tensor t = example_4_3().tensor();
  EXPECT_EQ(t.nonzero_count(), 8u);
  const double a = 1.0 / (2.0 * std::sqrt(2.0));
  EXPECT_NEAR(std::abs(t({0, 1, 1, 1, 1}) + a), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t({1, 0, 1, 0, 1}) + a), 0.0, 1e-15);
}

TEST(Catalog, TrigFormulaOneBasedThenNormalized) {
  PureState s = trig_tensor(2);
  // the printed scaling already gives unit norm, so rescaling is a no-op
  EXPECT_NEAR(s.input_norm(), 1.0, 1e-12);
  EXPECT_NEAR(trig_tensor(7).input_norm(), 1.0, 1e-12);
  // entry (1,1,1): cos(1) + i sin(1) over sqrt(8); entry (2,1,2): cos(3) + i sin(1)
  const Complex e111 = Complex(std::cos(1.0), std::sin(1.0)) / std::sqrt(8.0);
  const Complex e212 = Complex(std::cos(3.0), std::sin(1.0)) / std::sqrt(8.0);
  EXPECT_NEAR(std::abs(s.tensor()({0, 0, 0}) - e111), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.tensor()({1, 0, 1}) - e212), 0.0, 1e-15);
}

TEST(Catalog, SixPartyEntries) {
  Tensor t = example_4_6().tensor();
  EXPECT_EQ(t.dims(), (std::vector<std::size_t>{3, 3, 3, 3, 3, 2}));
  EXPECT_EQ(t.nonzero_count(), 18u);
}

TEST(Catalog, SparseFourModeEntries) {
  Tensor t = example_4_7();
  EXPECT_EQ(t.dims(), (std::vector<std::size_t>{10, 8, 5, 7}));
  EXPECT_EQ(t.nonzero_count(), 4u);
  EXPECT_NEAR(norm(t), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(t({7, 6, 1, 5}) - 1.0 / std::sqrt(6.0)), 0.0, 1e-15);
}

TEST(Catalog, EveryEntryBuildsItsDimsAtUnitNorm) {
  for (const CatalogEntry& e : catalog()) {
    if (e.id == "trig_50") continue;
    Tensor t = e.build();
    EXPECT_EQ(t.dims(), e.dims) << e.id;
    EXPECT_NEAR(norm(t), 1.0, 1e-12) << e.id;
  }
}

TEST(Catalog, FindEntry) {
  EXPECT_EQ(find_entry("trig_5").dims, (std::vector<std::size_t>{5, 5, 5}));
  CatalogEntry r = find_entry("random:3x2x4:17");
  EXPECT_EQ(r.dims, (std::vector<std::size_t>{3, 2, 4}));
  EXPECT_EQ(max_abs_diff(r.build(), random_state({3, 2, 4}, 17).tensor()), 0.0);
  try {
    find_entry("example_9_9");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("example_4_1"), std::string::npos);
  }
  EXPECT_THROW(find_entry("random:3x0:1"), InputError);
  EXPECT_THROW(find_entry("random:3x3"), InputError);
}

TEST(RandomState, DeterministicAndNormalized) {
  Tensor a = random_state({3, 3, 3, 3}, 5).tensor();
  EXPECT_EQ(max_abs_diff(a, random_state({3, 3, 3, 3}, 5).tensor()), 0.0);
  EXPECT_GT(max_abs_diff(a, random_state({3, 3, 3, 3}, 6).tensor()), 0.0);
  EXPECT_NEAR(norm(a), 1.0, 1e-12);

  SolverConfig cfg;
  MultiStartResult r = multi_start(a, cfg);
  EXPECT_GT(r.best.lambda, 0.0);
  EXPECT_LE(r.best.lambda, 1.0);
  EXPECT_LE(r.best.residual, 1e-8);
}

}  // namespace
}  // namespace ueig
