// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sipcert/bounds.hpp"
#include "sipcert/dataset.hpp"
#include "sipcert/semi_inner.hpp"
#include "sipcert/witness.hpp"

namespace sipcert {

inline constexpr const char* kReportSchema = "sipcert-report/1";
inline constexpr const char* kWitnessSchema = "sipcert-witness/1";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitSoundnessError = 2;

enum class OutputFormat { json, text };

/// How the anchor for the anchored bounds is chosen.
struct AnchorChoice {
  enum class Kind { dataset_or_mean, mean, index, coords };
  Kind kind = Kind::dataset_or_mean;
  std::size_t index = 0;
  std::optional<Vector> coords;

  /// Parses "mean", "index:K" or "coords:a,b,...".
  static AnchorChoice parse(const std::string& text);
};

struct ReportOptions {
  AnchorChoice anchor;
  std::vector<std::string> bound_names;  // empty selects every bound
  std::optional<double> rho;             // enables the margin bound
  std::optional<double> tol_override;
  OutputFormat format = OutputFormat::json;

  // CSV ingestion: rows from the file, norm/weights from flags.
  bool input_is_csv = false;
  std::string csv_norm_text = "lp:2";
  std::optional<std::vector<double>> csv_weights;

  /// Testing aid: adds delta to the named bound's value before the
  /// soundness gate runs, to demonstrate that a corrupted bound
  /// implementation is caught.
  std::optional<std::pair<std::string, double>> inject_error;
};

struct SipEnclosurePair {
  std::size_t index = 0;
  Enclosure inferior;
  Enclosure superior;
};

struct ReportData {
  std::string norm_text;
  std::size_t vector_count = 0;
  std::size_t dim = 0;
  double tol = 1e-9;
  double ratio = 0.0;
  Vector anchor;
  std::vector<BoundResult> bounds;
  std::optional<BoundResult> best_lower;
  std::optional<BoundResult> upper_refinement;
  std::vector<SipEnclosurePair> enclosures;
};

/// Evaluates the selected bounds and per-vector enclosures on a dataset.
/// Throws std::invalid_argument / std::runtime_error on unusable input.
ReportData build_report(const Dataset& ds, const ReportOptions& opt);

/// Deterministic rendering: fixed field order, shortest round-trip float
/// formatting. Identical data renders to identical bytes.
std::string render_report(const ReportData& report, OutputFormat format);

/// Lower certificates above the ratio or upper certificates below it
/// (beyond 1e-9) indicate an implementation bug; one message per offense.
std::vector<std::string> soundness_violations(const ReportData& report);

/// Full pipeline: load, evaluate, gate, render to `out`. Diagnostics and
/// warnings go to `diag`. Returns kExitOk, kExitInputError on unusable
/// input, or kExitSoundnessError when the gate fires (no report is
/// emitted in that case).
int run_report(const std::string& input_path, const ReportOptions& opt,
               std::ostream& out, std::ostream& diag);

struct WitnessOptions {
  Vector anchor{1.0, 0.0};
  std::string norm_text = "lp:2";
  std::size_t count = 3;
  OutputFormat format = OutputFormat::json;
};

std::string render_witness_table(WitnessKind kind, const WitnessOptions& opt,
                                 std::span<const SlackRow> rows, OutputFormat format);

/// Same contract as run_report: exit 2 when a measured constant exceeds
/// its closed form or a witness bound overshoots its reference.
int run_witness(const std::string& kind_text, std::span<const double> eps_list,
                const WitnessOptions& opt, std::ostream& out, std::ostream& diag);

}  // namespace sipcert
