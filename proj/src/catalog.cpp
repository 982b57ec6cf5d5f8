#include "ueig/catalog.hpp"

#include <cmath>
#include <sstream>

#include "ueig/random.hpp"

namespace ueig {

Tensor from_kets(const std::vector<std::size_t>& dims,
                 const std::vector<std::pair<std::string, double>>& signed_kets,
                 double amplitude) {
  std::vector<SparseEntry> entries;
  for (const auto& [ket, sign] : signed_kets) {
    if (ket.size() != dims.size()) throw InputError("ket |" + ket + "> has wrong length");
    Index idx;
    for (char c : ket) {
      if (c < '0' || c > '9') throw InputError("ket |" + ket + "> has a non-digit");
      idx.push_back(static_cast<std::size_t>(c - '0') + 1);
    }
    entries.push_back({idx, Complex(sign * amplitude, 0.0)});
  }
  return from_sparse(dims, entries);
}

PureState example_4_1() {
  const std::vector<SparseEntry> entries = {{{1, 1, 2}, std::sqrt(1.0 / 3.0)},
                                            {{2, 1, 1}, std::sqrt(2.0 / 3.0)}};
  return PureState::checked(from_sparse({2, 2, 2}, entries), "example_4_1");
}

PureState example_4_2() {
  Tensor t = from_kets({2, 3, 3},
                       {{"000", 1}, {"101", 1}, {"012", 1}, {"110", 1}, {"021", 1}, {"122", 1}},
                       std::sqrt(1.0 / 6.0));
  return PureState::checked(std::move(t), "example_4_2");
}

PureState example_4_3() {
  Tensor t = from_kets({2, 2, 2, 2, 2},
                       {{"00000", 1},
                        {"00011", 1},
                        {"01100", 1},
                        {"01111", -1},
                        {"11010", 1},
                        {"11001", 1},
                        {"10110", 1},
                        {"10101", -1}},
                       1.0 / (2.0 * std::sqrt(2.0)));
  return PureState::checked(std::move(t), "example_4_3");
}

PureState trig_tensor(std::size_t n) {
  if (n == 0) throw InputError("trig_tensor needs n >= 1");
  Tensor t({n, n, n});
  const double scale = 1.0 / std::sqrt(static_cast<double>(n * n * n));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = 1; k <= n; ++k) {
        const double a = static_cast<double>(i) - static_cast<double>(j) + static_cast<double>(k);
        const double b = static_cast<double>(i) + static_cast<double>(j) - static_cast<double>(k);
        t({i - 1, j - 1, k - 1}) = Complex(std::cos(a), std::sin(b)) * scale;
      }
    }
  }
  return PureState::normalized(std::move(t), "trig_" + std::to_string(n));
}

PureState example_4_6() {
  Tensor t = from_kets({3, 3, 3, 3, 3, 2},
                       {{"000000", 1}, {"001121", 1}, {"010220", 1}, {"012011", 1},
                        {"021210", 1}, {"022101", 1}, {"111110", 1}, {"112201", 1},
                        {"121000", 1}, {"120121", 1}, {"102020", 1}, {"100211", 1},
                        {"222220", 1}, {"220011", 1}, {"202110", 1}, {"201201", 1},
                        {"210100", 1}, {"211021", 1}},
                       1.0 / (3.0 * std::sqrt(2.0)));
  return PureState::checked(std::move(t), "example_4_6");
}

Tensor example_4_7() {
  const double r6 = 1.0 / std::sqrt(6.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const std::vector<SparseEntry> entries = {{{8, 7, 2, 6}, Complex(r6, 0.0)},
                                            {{9, 5, 4, 3}, Complex(r3, 0.0)},
                                            {{1, 2, 2, 1}, Complex(0.0, r6)},
                                            {{3, 8, 1, 2}, Complex(-r3, 0.0)}};
  return from_sparse({10, 8, 5, 7}, entries);
}

Tensor random_tensor(const std::vector<std::size_t>& dims, std::uint64_t seed) {
  Tensor t(dims);
  ComplexNormalSource source(seed);
  for (Complex& z : t.data()) z = source.next();
  return t;
}

PureState random_state(const std::vector<std::size_t>& dims, std::uint64_t seed) {
  if (dims.empty()) throw InputError("random_state needs at least one mode");
  return PureState::normalized(random_tensor(dims, seed),
                               "random:" + format_dims(dims) + ":" + std::to_string(seed));
}

namespace {

CatalogEntry state_entry(std::string id, std::string description, std::vector<std::size_t> dims,
                         std::optional<double> lambda, std::optional<double> gme,
                         std::function<PureState()> make, bool long_running = false) {
  return CatalogEntry{std::move(id), std::move(description), std::move(dims), lambda, gme,
                      true, long_running, [make = std::move(make)] { return make().tensor(); }};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back(state_entry("example_4_1", "sqrt(1/3)|001> + sqrt(2/3)|100>", {2, 2, 2}, 0.8165,
                          0.6058, example_4_1));
  c.push_back(state_entry("example_4_2", "2x3x3 six-term state", {2, 3, 3}, 0.5774, 0.9194,
                          example_4_2));
  c.push_back(state_entry("example_4_3", "5-qubit AME state", {2, 2, 2, 2, 2}, 0.3626, 1.1291,
                          example_4_3));
  const struct {
    std::size_t n;
    double lambda;
    double gme;
  } trig[] = {{2, 0.8895, 0.4701},  {5, 0.7815, 0.6611},  {10, 0.7072, 0.7652},
              {15, 0.7243, 0.7425}, {20, 0.7175, 0.7516}, {50, 0.7087, 0.7632}};
  for (const auto& row : trig) {
    c.push_back(state_entry("trig_" + std::to_string(row.n),
                            "trigonometric state, n = " + std::to_string(row.n),
                            {row.n, row.n, row.n}, row.lambda, row.gme,
                            [n = row.n] { return trig_tensor(n); }, row.n >= 15));
  }
  c.push_back(state_entry("example_4_6", "3x3x3x3x3x2 eighteen-term state", {3, 3, 3, 3, 3, 2},
                          std::nullopt, 1.2364, example_4_6));
  c.push_back(CatalogEntry{"example_4_7", "10x8x5x7 tensor with four entries", {10, 8, 5, 7},
                           0.5774, std::nullopt, false, false, example_4_7});
  return c;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad dims '" + text + "'");
    dims.push_back(std::stoul(part));
    if (dims.back() == 0) throw InputError("bad dims '" + text + "': sizes must be positive");
  }
  if (dims.empty()) throw InputError("bad dims '" + text + "'");
  return dims;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

CatalogEntry find_entry(const std::string& id) {
  for (const CatalogEntry& e : catalog())
    if (e.id == id) return e;
  if (id.rfind("random:", 0) == 0) {
    const std::size_t colon = id.find(':', 7);
    if (colon == std::string::npos) throw InputError("expected random:<dims>:<seed>, got '" + id + "'");
    const std::vector<std::size_t> dims = parse_dims(id.substr(7, colon - 7));
    const std::string seed_text = id.substr(colon + 1);
    if (seed_text.empty() || seed_text.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad seed in '" + id + "'");
    const std::uint64_t seed = std::stoull(seed_text);
    return CatalogEntry{id, "random state", dims, std::nullopt, std::nullopt, true, false,
                        [dims, seed] { return random_state(dims, seed).tensor(); }};
  }
  std::string valid;
  for (const CatalogEntry& e : catalog()) valid += "\n  " + e.id;
  valid += "\n  random:<d1>x<d2>x...:<seed>";
  throw InputError("unknown catalog id '" + id + "'; valid ids:" + valid);
}

}  // namespace ueig
