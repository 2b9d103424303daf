// SPDX-License-Identifier: Apache-2.0
#include "sipcert/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sipcert {

namespace {

using ordered_json = nlohmann::ordered_json;

double parse_double(std::string_view text, const std::string& what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument(what + ": cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_double_list(std::string_view text, const std::string& what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_double(text.substr(start, comma - start), what));
    start = comma + 1;
  }
  return out;
}

Vector json_vector(const ordered_json& arr, const std::string& what) {
  if (!arr.is_array() || arr.empty()) {
    throw std::runtime_error(what + " must be a nonempty array of numbers");
  }
  std::vector<double> coords;
  coords.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) throw std::runtime_error(what + " must contain only numbers");
    coords.push_back(v.get<double>());
  }
  try {
    return Vector(std::move(coords));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(what + ": " + e.what());
  }
}

}  // namespace

NormSpec parse_norm(const std::string& text) {
  auto fail = [&]() -> NormSpec {
    throw std::invalid_argument("unrecognized norm '" + text +
                                "' (expected lp:P, lp:inf or wlp:P:w1,w2,...)");
  };
  const std::size_t c1 = text.find(':');
  if (c1 == std::string::npos) return fail();
  const std::string head = text.substr(0, c1);

  if (head == "lp") {
    const std::string p = text.substr(c1 + 1);
    if (p == "inf") return NormSpec::lp_inf();
    return NormSpec::lp(parse_double(p, "norm exponent"));
  }
  if (head == "wlp") {
    const std::size_t c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) return fail();
    const std::string p = text.substr(c1 + 1, c2 - c1 - 1);
    auto weights = parse_double_list(text.substr(c2 + 1), "norm weights");
    if (p == "inf") return NormSpec::weighted_lp_inf(std::move(weights));
    return NormSpec::weighted_lp(parse_double(p, "norm exponent"), std::move(weights));
  }
  return fail();
}

Dataset load_dataset_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");

  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw std::runtime_error("invalid JSON in '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("dataset must be a JSON object");

  static const char* known[] = {"schema", "norm", "vectors", "weights", "anchor", "tol"};
  for (const auto& [key, _] : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw std::runtime_error("unknown dataset key '" + key + "'");
  }

  if (doc.contains("schema")) {
    if (!doc["schema"].is_string() || doc["schema"].get<std::string>() != kDatasetSchema) {
      throw std::runtime_error(std::string("dataset schema must be '") + kDatasetSchema + "'");
    }
  }

  if (!doc.contains("norm") || !doc["norm"].is_string()) {
    throw std::runtime_error("dataset needs a string 'norm' field");
  }
  const std::string norm_text = doc["norm"].get<std::string>();

  if (!doc.contains("vectors") || !doc["vectors"].is_array() || doc["vectors"].empty()) {
    throw std::runtime_error("dataset needs a nonempty 'vectors' array");
  }
  std::vector<Vector> vectors;
  vectors.reserve(doc["vectors"].size());
  for (std::size_t i = 0; i < doc["vectors"].size(); ++i) {
    vectors.push_back(json_vector(doc["vectors"][i], "vectors[" + std::to_string(i) + "]"));
  }

  std::optional<std::vector<double>> weights;
  if (doc.contains("weights")) {
    if (!doc["weights"].is_array()) throw std::runtime_error("'weights' must be an array");
    weights = doc["weights"].get<std::vector<double>>();
  }

  std::optional<Vector> anchor;
  if (doc.contains("anchor")) anchor = json_vector(doc["anchor"], "anchor");

  double tol = 1e-9;
  if (doc.contains("tol")) {
    if (!doc["tol"].is_number()) throw std::runtime_error("'tol' must be a number");
    tol = doc["tol"].get<double>();
  }

  return make_dataset(std::move(vectors), norm_text, std::move(weights), std::move(anchor), tol);
}

std::vector<Vector> load_vectors_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");

  std::vector<Vector> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string cleaned;
    for (char ch : line) {
      if (!std::isspace(static_cast<unsigned char>(ch))) cleaned += ch;
    }
    if (cleaned.empty()) continue;
    try {
      out.emplace_back(parse_double_list(cleaned, "csv row"));
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.empty()) throw std::runtime_error("no vectors found in '" + path + "'");
  return out;
}

Dataset make_dataset(std::vector<Vector> vectors, const std::string& norm_text,
                     std::optional<std::vector<double>> weights,
                     std::optional<Vector> anchor, double tol) {
  if (vectors.empty()) throw std::runtime_error("dataset needs at least one vector");
  const std::size_t dim = vectors.front().dim();
  for (const Vector& v : vectors) {
    if (v.dim() != dim) throw std::runtime_error("dataset rows must share one dimension");
  }
  if (anchor && anchor->dim() != dim) {
    throw std::runtime_error("anchor dimension differs from the vectors");
  }
  if (!(tol > 0.0)) throw std::runtime_error("tol must be positive");

  NormSpec norm;
  try {
    norm = parse_norm(norm_text);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
  if (norm.required_dim() && *norm.required_dim() != dim) {
    throw std::runtime_error("norm weight count differs from the vector dimension");
  }

  if (weights && weights->size() != vectors.size()) {
    throw std::runtime_error("weights length differs from the vector count");
  }
  WeightVector ps = weights ? WeightVector(std::move(*weights))
                            : WeightVector::uniform(vectors.size());

  std::string canonical = norm.description();
  return Dataset{std::move(norm), std::move(canonical), std::move(vectors), std::move(ps),
                 std::move(anchor), tol};
}

}  // namespace sipcert
