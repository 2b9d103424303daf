// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sipcert/bounds.hpp"
#include "sipcert/norm.hpp"
#include "sipcert/vector.hpp"

namespace sipcert {

inline constexpr const char* kDatasetSchema = "sipcert-dataset/1";

/// One batch of input data: a norm, the vectors, optional weights
/// (uniform by default, normalized on load), an optional anchor, and the
/// enclosure tolerance.
struct Dataset {
  NormSpec norm;
  std::string norm_text;
  std::vector<Vector> vectors;
  WeightVector weights;
  std::optional<Vector> anchor;
  double tol = 1e-9;
};

/// Parses "lp:P", "lp:inf", "wlp:P:w1,w2,..." (P may be "inf").
/// Throws std::invalid_argument for anything else.
NormSpec parse_norm(const std::string& text);

/// Loads the JSON dataset document. Unknown keys, shape mismatches and
/// invalid values all throw std::runtime_error with a readable message.
Dataset load_dataset_json(const std::string& path);

/// Loads bare coordinate rows: one vector per line, comma-separated,
/// '#' comments and blank lines ignored.
std::vector<Vector> load_vectors_csv(const std::string& path);

/// Assembles a dataset from CSV rows plus flag-style norm/weight text.
Dataset make_dataset(std::vector<Vector> vectors, const std::string& norm_text,
                     std::optional<std::vector<double>> weights,
                     std::optional<Vector> anchor, double tol);

}  // namespace sipcert
