// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sipcert/bounds.hpp"
#include "sipcert/norm.hpp"
#include "sipcert/vector.hpp"

namespace sipcert {

/// Families x_1 = ... = x_n = eps * a that drive each bound to its
/// extreme constant as eps -> 0. The quadratic families approach the 1/2
/// constants from above; the gap families sit at exact equality.
enum class WitnessKind {
  quadratic,           // pointwise quadratic bound; admissible 1/(2-eps)
  weighted_quadratic,  // aggregate quadratic inequality; admissible eps + (1-eps)^2/2
  ratio_quadratic,     // anchored ratio bound, quadratic form; admissible 1/(2-eps)
  gap,                 // pointwise norm-gap bound; equality family
  ratio_gap,           // anchored ratio bound, gap form; equality family
};

const char* to_string(WitnessKind kind);
std::optional<WitnessKind> witness_kind_from_string(std::string_view text);

/// True for the families built from several identical vectors; the
/// pointwise families use a single one.
bool witness_is_aggregate(WitnessKind kind);

struct WitnessCase {
  WitnessKind kind;
  double epsilon;
  Vector anchor;
  std::vector<Vector> xs;  // copies of eps * anchor
  WeightVector weights;    // uniform
  double admissible_constant;
};

/// Closed-form admissible constant of the family at the given eps;
/// 1 for the equality families.
double witness_admissible_constant(WitnessKind kind, double eps);

/// Builds the instance for one eps. Requires eps in (0,1) and a nonzero
/// anchor. n_count only matters for the aggregate kinds.
WitnessCase sharpness_witness(WitnessKind kind, const Vector& a, double eps,
                              std::size_t n_count = 3);

struct SlackRow {
  double eps = 0.0;
  double admissible_formula = 0.0;   // closed-form constant
  double admissible_measured = 0.0;  // same constant recovered from bound evaluations
  double bound_value = 0.0;          // the evaluated bound
  double reference_value = 0.0;      // the quantity it certifies
  double slack = 0.0;                // reference - bound; >= 0 when sound
};

/// Evaluates the family across a strictly decreasing eps list. The
/// measured columns come from actual bound evaluations under the given
/// norm, not from the closed formulas.
std::vector<SlackRow> slack_curve(WitnessKind kind, const Vector& a,
                                  std::span<const double> eps_list,
                                  const NormSpec& n = NormSpec(),
                                  std::size_t n_count = 3);

}  // namespace sipcert
