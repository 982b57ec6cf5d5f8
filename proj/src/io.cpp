#include "ueig/io.hpp"

#include <fstream>
#include <sstream>

namespace ueig {

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json tensor_to_json(const Tensor& t) {
  Json entries = Json::array();
  Index idx(t.order(), 0);
  auto entry = t.data().begin();
  do {
    if (*entry != Complex{}) {
      Json one_based = Json::array();
      for (std::size_t i : idx) one_based.push_back(i + 1);
      entries.push_back(Json{{"idx", one_based}, {"re", entry->real()}, {"im", entry->imag()}});
    }
    ++entry;
  } while (next_index(idx, t.dims()));
  return Json{{"dims", t.dims()}, {"entries", std::move(entries)}};
}

namespace {

std::size_t positive_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw InputError(where + " must be a positive integer");
  return v.get<std::size_t>();
}

double number(const Json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where + " must be a number");
  return v.get<double>();
}

}  // namespace

Tensor tensor_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("tensor JSON must be an object");
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty())
    throw InputError("tensor JSON needs a nonempty \"dims\" array");
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < j["dims"].size(); ++k)
    dims.push_back(positive_int(j["dims"][k], "dims[" + std::to_string(k) + "]"));
  std::vector<SparseEntry> entries;
  if (j.contains("entries")) {
    if (!j["entries"].is_array()) throw InputError("\"entries\" must be an array");
    for (std::size_t e = 0; e < j["entries"].size(); ++e) {
      const Json& item = j["entries"][e];
      const std::string where = "entries[" + std::to_string(e) + "]";
      if (!item.is_object() || !item.contains("idx") || !item["idx"].is_array())
        throw InputError(where + " needs an \"idx\" array");
      SparseEntry s;
      for (std::size_t k = 0; k < item["idx"].size(); ++k)
        s.index.push_back(positive_int(item["idx"][k], where + ".idx[" + std::to_string(k) + "]"));
      const double re = item.contains("re") ? number(item["re"], where + ".re") : 0.0;
      const double im = item.contains("im") ? number(item["im"], where + ".im") : 0.0;
      s.value = Complex(re, im);
      entries.push_back(std::move(s));
    }
  }
  return from_sparse(dims, entries);
}

Tensor parse_tensor(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte is 1-based and points just past the offending character
    std::size_t byte = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    const bool at_end = text.find_first_not_of(" \t\r\n", byte) == std::string_view::npos;
    if (at_end) {
      const std::size_t last = text.find_last_not_of(" \t\r\n");
      byte = last == std::string_view::npos ? 0 : last + 1;
    }
    std::size_t line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::ostringstream msg;
    msg << "malformed tensor JSON" << (at_end ? " (unexpected end of input)" : "") << " at line "
        << line << ", column " << (byte - line_start + 1)
        << ":\n  " << text.substr(line_start, line_end - line_start) << "\n  "
        << std::string(byte - line_start, ' ') << "^";
    throw InputError(msg.str());
  }
  return tensor_from_json(j);
}

Tensor read_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_tensor(buffer.str());
}

Json embedded_to_json(const EmbeddedTensor& e) {
  Json j = tensor_to_json(e.tensor);
  j["source_dims"] = e.source_dims;
  return j;
}

Json factors_to_json(const RankOneFactors& f) {
  Json out = Json::array();
  for (const CVector& v : f.vectors) {
    Json vec = Json::array();
    for (const Complex& z : v) vec.push_back(complex_to_json(z));
    out.push_back(std::move(vec));
  }
  return out;
}

Json eigenpair_to_json(const UEigenpair& pair, Algorithm algo, std::uint64_t seed,
                       std::optional<double> gme) {
  Json j;
  j["lambda"] = pair.lambda;
  j["gme"] = gme ? Json(*gme) : Json(nullptr);
  j["factors"] = factors_to_json(pair.factors);
  j["residual"] = pair.residual;
  j["iterations"] = pair.trace.iterations();
  j["status"] = std::string(to_string(pair.trace.status));
  j["algorithm"] = std::string(to_string(algo));
  j["seed"] = seed;
  return j;
}

}  // namespace ueig
