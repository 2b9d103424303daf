// SPDX-License-Identifier: Apache-2.0
#include "sipcert/report.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace sipcert {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kCertificateTol = 1e-9;

const std::vector<std::string>& all_bound_names() {
  static const std::vector<std::string> names = {
      "quadratic", "coarse", "norm_gap", "margin", "align_lower", "align_upper"};
  return names;
}

Vector resolve_anchor(const Dataset& ds, const AnchorChoice& choice) {
  switch (choice.kind) {
    case AnchorChoice::Kind::dataset_or_mean:
      if (ds.anchor) return *ds.anchor;
      return weighted_sum(ds.vectors, ds.weights.values());
    case AnchorChoice::Kind::mean:
      return weighted_sum(ds.vectors, ds.weights.values());
    case AnchorChoice::Kind::index:
      if (choice.index >= ds.vectors.size()) {
        throw std::invalid_argument("anchor index out of range");
      }
      return ds.vectors[choice.index];
    case AnchorChoice::Kind::coords:
      if (!choice.coords) throw std::invalid_argument("anchor coordinates missing");
      if (choice.coords->dim() != ds.vectors.front().dim()) {
        throw std::invalid_argument("anchor dimension differs from the vectors");
      }
      return *choice.coords;
  }
  throw std::logic_error("resolve_anchor: unknown kind");
}

ordered_json issues_json(const std::vector<PreconditionIssue>& issues) {
  ordered_json arr = ordered_json::array();
  for (const auto& issue : issues) {
    ordered_json entry;
    if (issue.index) entry["index"] = *issue.index;
    entry["condition"] = issue.condition;
    arr.push_back(std::move(entry));
  }
  return arr;
}

ordered_json bound_json(const BoundResult& b) {
  ordered_json j;
  j["name"] = b.name;
  j["side"] = b.side == CertificateSide::lower ? "lower" : "upper";
  j["value"] = b.value;
  j["applicable"] = b.applicable;
  j["diagnostics"] = issues_json(b.diagnostics);
  return j;
}

ordered_json enclosure_json(const Enclosure& e) {
  ordered_json j;
  j["lo"] = e.lo;
  j["hi"] = e.hi;
  j["method"] = e.method == EvalMethod::closed_form ? "closed-form" : "numeric";
  j["smooth"] = e.smooth_detected;
  j["iterations"] = e.iterations;
  return j;
}

ordered_json vector_json(const Vector& v) {
  ordered_json arr = ordered_json::array();
  for (double c : v.coords()) arr.push_back(c);
  return arr;
}

void render_bound_text(std::string& out, const BoundResult& b) {
  out += "bound " + b.name;
  out += b.side == CertificateSide::lower ? " lower" : " upper";
  out += " value " + format_double(b.value);
  out += b.applicable ? " applicable" : " inapplicable";
  out += '\n';
  for (const auto& issue : b.diagnostics) {
    out += "  issue";
    if (issue.index) out += "[" + std::to_string(*issue.index) + "]";
    out += " " + issue.condition + '\n';
  }
}

void render_enclosure_text(std::string& out, const char* side, const Enclosure& e) {
  out += std::string(" ") + side + " lo " + format_double(e.lo) + " hi " +
         format_double(e.hi) +
         (e.method == EvalMethod::closed_form ? " closed-form" : " numeric") +
         (e.smooth_detected ? " smooth" : " nonsmooth") + " iterations " +
         std::to_string(e.iterations);
}

}  // namespace

AnchorChoice AnchorChoice::parse(const std::string& text) {
  AnchorChoice out;
  if (text == "mean") {
    out.kind = Kind::mean;
    return out;
  }
  if (text.rfind("index:", 0) == 0) {
    out.kind = Kind::index;
    const std::string num = text.substr(6);
    try {
      out.index = std::stoul(num);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid anchor index '" + num + "'");
    }
    return out;
  }
  if (text.rfind("coords:", 0) == 0) {
    out.kind = Kind::coords;
    std::vector<double> coords;
    std::string cur;
    for (char ch : text.substr(7) + ",") {
      if (ch == ',') {
        try {
          coords.push_back(std::stod(cur));
        } catch (const std::exception&) {
          throw std::invalid_argument("invalid anchor coordinate '" + cur + "'");
        }
        cur.clear();
      } else {
        cur += ch;
      }
    }
    out.coords = Vector(std::move(coords));
    return out;
  }
  throw std::invalid_argument("unrecognized anchor '" + text +
                              "' (expected mean, index:K or coords:a,b,...)");
}

ReportData build_report(const Dataset& ds, const ReportOptions& opt) {
  std::vector<std::string> selection = opt.bound_names;
  if (selection.empty()) {
    selection = all_bound_names();
    if (!opt.rho) {
      selection.erase(std::find(selection.begin(), selection.end(), "margin"));
    }
  }
  for (const std::string& name : selection) {
    const auto& all = all_bound_names();
    if (std::find(all.begin(), all.end(), name) == all.end()) {
      throw std::invalid_argument("unknown bound '" + name + "'");
    }
    if (name == "margin" && !opt.rho) {
      throw std::invalid_argument("the margin bound needs --rho");
    }
  }
  auto selected = [&](const std::string& name) {
    return std::find(selection.begin(), selection.end(), name) != selection.end();
  };

  const double tol = opt.tol_override.value_or(ds.tol);
  const Vector anchor = resolve_anchor(ds, opt.anchor);
  const double ratio = triangle_ratio(ds.vectors, ds.weights, ds.norm);

  ReportData rep{ds.norm_text,
                 ds.vectors.size(),
                 ds.vectors.front().dim(),
                 tol,
                 ratio,
                 anchor,
                 {},
                 {},
                 {},
                 {}};

  for (RatioBoundForm form : {RatioBoundForm::quadratic, RatioBoundForm::coarse,
                              RatioBoundForm::norm_gap}) {
    if (!selected(ratio_bound_name(form))) continue;
    rep.bounds.push_back(reverse_ratio_bound(ds.vectors, ds.weights, anchor, ds.norm, form));
  }
  if (selected("margin")) {
    rep.bounds.push_back(reverse_ratio_bound(ds.vectors, ds.weights, anchor, ds.norm,
                                             RatioBoundForm::margin, opt.rho));
  }
  if (selected("align_lower")) {
    rep.bounds.push_back(
        self_anchor_bound(ds.vectors, ds.weights, ds.norm, CertificateSide::lower, tol));
  }
  if (selected("align_upper")) {
    rep.bounds.push_back(
        self_anchor_bound(ds.vectors, ds.weights, ds.norm, CertificateSide::upper, tol));
  }

  if (opt.inject_error) {
    bool found = false;
    for (BoundResult& b : rep.bounds) {
      if (b.name == opt.inject_error->first) {
        b.value += opt.inject_error->second;
        found = true;
      }
    }
    if (!found) {
      throw std::invalid_argument("inject target '" + opt.inject_error->first +
                                  "' is not among the evaluated bounds");
    }
  }

  for (const BoundResult& b : rep.bounds) {
    if (!b.applicable) continue;
    if (b.side == CertificateSide::lower) {
      if (!rep.best_lower || b.value > rep.best_lower->value) rep.best_lower = b;
    } else {
      rep.upper_refinement = b;
    }
  }

  for (std::size_t j = 0; j < ds.vectors.size(); ++j) {
    SipEnclosurePair pair;
    pair.index = j;
    pair.inferior = semi_inner(ds.vectors[j], anchor, ds.norm, SipSide::inferior, tol);
    pair.superior = semi_inner(ds.vectors[j], anchor, ds.norm, SipSide::superior, tol);
    rep.enclosures.push_back(pair);
  }
  return rep;
}

std::string render_report(const ReportData& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["norm"] = report.norm_text;
    j["count"] = report.vector_count;
    j["dim"] = report.dim;
    j["tol"] = report.tol;
    j["ratio"] = report.ratio;
    j["anchor_used"] = vector_json(report.anchor);
    ordered_json bounds = ordered_json::array();
    for (const auto& b : report.bounds) bounds.push_back(bound_json(b));
    j["bounds"] = std::move(bounds);
    j["best_lower"] = report.best_lower ? bound_json(*report.best_lower) : ordered_json();
    j["upper_refinement"] =
        report.upper_refinement ? bound_json(*report.upper_refinement) : ordered_json();
    ordered_json encl = ordered_json::array();
    for (const auto& pair : report.enclosures) {
      ordered_json e;
      e["index"] = pair.index;
      e["inferior"] = enclosure_json(pair.inferior);
      e["superior"] = enclosure_json(pair.superior);
      encl.push_back(std::move(e));
    }
    j["enclosures"] = std::move(encl);
    return j.dump(2) + "\n";
  }

  std::string out;
  out += std::string("report ") + kReportSchema + '\n';
  out += "norm " + report.norm_text + '\n';
  out += "count " + std::to_string(report.vector_count) + " dim " +
         std::to_string(report.dim) + '\n';
  out += "tol " + format_double(report.tol) + '\n';
  out += "ratio " + format_double(report.ratio) + '\n';
  out += "anchor " + to_string(report.anchor) + '\n';
  for (const auto& b : report.bounds) render_bound_text(out, b);
  out += "best_lower ";
  out += report.best_lower
             ? report.best_lower->name + " " + format_double(report.best_lower->value)
             : std::string("none");
  out += '\n';
  out += "upper_refinement ";
  out += report.upper_refinement ? report.upper_refinement->name + " " +
                                       format_double(report.upper_refinement->value)
                                 : std::string("none");
  out += '\n';
  for (const auto& pair : report.enclosures) {
    out += "enclosure " + std::to_string(pair.index);
    render_enclosure_text(out, "inferior", pair.inferior);
    render_enclosure_text(out, "superior", pair.superior);
    out += '\n';
  }
  return out;
}

std::vector<std::string> soundness_violations(const ReportData& report) {
  std::vector<std::string> out;
  for (const auto& b : report.bounds) {
    if (!b.applicable) continue;
    if (b.side == CertificateSide::lower && b.value > report.ratio + kCertificateTol) {
      out.push_back("lower certificate '" + b.name + "' = " + format_double(b.value) +
                    " exceeds the triangle ratio " + format_double(report.ratio));
    }
    if (b.side == CertificateSide::upper && b.value < report.ratio - kCertificateTol) {
      out.push_back("upper certificate '" + b.name + "' = " + format_double(b.value) +
                    " falls below the triangle ratio " + format_double(report.ratio));
    }
  }
  return out;
}

int run_report(const std::string& input_path, const ReportOptions& opt,
               std::ostream& out, std::ostream& diag) {
  try {
    Dataset ds = [&]() -> Dataset {
      if (opt.input_is_csv) {
        return make_dataset(load_vectors_csv(input_path), opt.csv_norm_text,
                            opt.csv_weights, std::nullopt, opt.tol_override.value_or(1e-9));
      }
      return load_dataset_json(input_path);
    }();

    if (ds.weights.renormalized()) {
      diag << "warning: weights did not sum to 1 and were renormalized\n";
    }

    const ReportData report = build_report(ds, opt);
    const std::vector<std::string> violations = soundness_violations(report);
    if (!violations.empty()) {
      for (const std::string& v : violations) diag << "soundness: " << v << '\n';
      return kExitSoundnessError;
    }
    out << render_report(report, opt.format);
    return kExitOk;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

std::string render_witness_table(WitnessKind kind, const WitnessOptions& opt,
                                 std::span<const SlackRow> rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json j;
    j["schema"] = kWitnessSchema;
    j["kind"] = to_string(kind);
    j["norm"] = opt.norm_text;
    j["anchor"] = vector_json(opt.anchor);
    j["count"] = opt.count;
    ordered_json arr = ordered_json::array();
    for (const SlackRow& r : rows) {
      ordered_json row;
      row["eps"] = r.eps;
      row["admissible"] = r.admissible_formula;
      row["measured"] = r.admissible_measured;
      row["bound"] = r.bound_value;
      row["reference"] = r.reference_value;
      row["slack"] = r.slack;
      arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
  }

  std::string out;
  out += std::string("witness ") + kWitnessSchema + '\n';
  out += std::string("kind ") + to_string(kind) + '\n';
  out += "norm " + opt.norm_text + '\n';
  out += "anchor " + to_string(opt.anchor) + '\n';
  out += "count " + std::to_string(opt.count) + '\n';
  for (const SlackRow& r : rows) {
    out += "row eps " + format_double(r.eps) + " admissible " +
           format_double(r.admissible_formula) + " measured " +
           format_double(r.admissible_measured) + " bound " +
           format_double(r.bound_value) + " reference " +
           format_double(r.reference_value) + " slack " + format_double(r.slack) + '\n';
  }
  return out;
}

int run_witness(const std::string& kind_text, std::span<const double> eps_list,
                const WitnessOptions& opt, std::ostream& out, std::ostream& diag) {
  const std::optional<WitnessKind> kind = witness_kind_from_string(kind_text);
  if (!kind) {
    diag << "error: unknown witness kind '" << kind_text << "'\n";
    return kExitInputError;
  }
  std::vector<SlackRow> rows;
  try {
    const NormSpec norm = parse_norm(opt.norm_text);
    rows = slack_curve(*kind, opt.anchor, eps_list, norm, opt.count);
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  bool sound = true;
  for (const SlackRow& r : rows) {
    if (r.admissible_measured >
        r.admissible_formula + kCertificateTol * std::max(1.0, r.admissible_formula)) {
      diag << "soundness: measured constant " << format_double(r.admissible_measured)
           << " exceeds the admissible " << format_double(r.admissible_formula)
           << " at eps " << format_double(r.eps) << '\n';
      sound = false;
    }
    if (r.slack < -kCertificateTol * std::max(1.0, std::abs(r.reference_value))) {
      diag << "soundness: bound " << format_double(r.bound_value)
           << " overshoots its reference " << format_double(r.reference_value)
           << " at eps " << format_double(r.eps) << '\n';
      sound = false;
    }
  }
  if (!sound) return kExitSoundnessError;

  out << render_witness_table(*kind, opt, rows, opt.format);
  return kExitOk;
}

}  // namespace sipcert
