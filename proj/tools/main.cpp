// SPDX-License-Identifier: Apache-2.0
//
// sipcert: semi-inner products and triangle-ratio certificates on
// finite-dimensional real normed spaces.
//
// Exit codes: 0 success, 1 input error, 2 certificate soundness failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sipcert/report.hpp"

namespace {

std::vector<double> parse_csv_doubles(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "cannot parse number '" + item + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(what, "expected a comma-separated list");
  return out;
}

sipcert::OutputFormat parse_format(const std::string& text) {
  if (text == "json") return sipcert::OutputFormat::json;
  if (text == "text") return sipcert::OutputFormat::text;
  throw CLI::ValidationError("--format", "expected json or text");
}

// Emits to the chosen file or stdout; returns the run's exit code.
template <typename Fn>
int with_output(const std::string& output_path, Fn&& fn) {
  if (output_path.empty()) return fn(std::cout);
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << output_path << "'\n";
    return sipcert::kExitInputError;
  }
  return fn(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sipcert: semi-inner products, reverse triangle-inequality certificates\n"
      "and sharpness curves on finite-dimensional real normed spaces"};
  app.require_subcommand(1);

  // --- report ---
  auto* report = app.add_subcommand(
      "report", "Evaluate the triangle ratio, every ratio bound and per-vector "
                "semi-inner product enclosures on a dataset");
  std::string input_path;
  report->add_option("input", input_path, "Dataset file (JSON, or CSV rows with --csv)")
      ->required();
  bool is_csv = false;
  report->add_flag("--csv", is_csv, "Treat the input as bare CSV coordinate rows");
  std::string norm_text = "lp:2";
  report->add_option("--norm", norm_text,
                     "Norm for CSV input: lp:P | lp:inf | wlp:P:w1,w2,...");
  std::string weights_text;
  report->add_option("--weights", weights_text,
                     "Weights for CSV input, comma-separated (default uniform)");
  std::string anchor_text;
  report->add_option("--anchor", anchor_text, "Anchor choice: mean | index:K | coords:a,b,...");
  double tol = 0.0;
  auto* tol_opt = report->add_option("--tol", tol, "Enclosure tolerance override");
  std::string bounds_text = "all";
  report->add_option("--bounds", bounds_text, "Bounds to evaluate: all or a comma list of "
                                              "quadratic,coarse,norm_gap,margin,align_lower,align_upper");
  double rho = 0.0;
  auto* rho_opt = report->add_option("--rho", rho, "Margin parameter in (0,1); enables the margin bound");
  std::string format_text = "json";
  report->add_option("--format", format_text, "Output format: json | text");
  std::string output_path;
  report->add_option("-o,--output", output_path, "Write the report here instead of stdout");
  std::string inject_text;
  report->add_option("--inject-bound-error", inject_text,
                     "Testing aid: NAME:DELTA perturbs one bound value before the "
                     "soundness gate")
      ->group("Testing");

  // --- witness ---
  auto* witness = app.add_subcommand(
      "witness", "Tabulate a sharpness family: admissible constants, measured "
                 "constants and slack per eps");
  std::string kind_text;
  witness->add_option("--kind", kind_text,
                      "Family: quadratic | weighted-quadratic | ratio-quadratic | gap | ratio-gap")
      ->required();
  std::string eps_text;
  witness->add_option("--eps", eps_text, "Strictly decreasing eps values in (0,1), comma-separated")
      ->required();
  std::string w_anchor_text = "1,0";
  witness->add_option("--anchor", w_anchor_text, "Anchor coordinates, comma-separated");
  std::string w_norm_text = "lp:2";
  witness->add_option("--norm", w_norm_text, "Norm: lp:P | lp:inf | wlp:P:w1,w2,...");
  std::size_t count = 3;
  witness->add_option("--count", count, "Vector count for the aggregate families");
  std::string w_format_text = "json";
  witness->add_option("--format", w_format_text, "Output format: json | text");
  std::string w_output_path;
  witness->add_option("-o,--output", w_output_path, "Write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return sipcert::kExitInputError;
  }

  try {
    if (*report) {
      sipcert::ReportOptions opt;
      opt.input_is_csv = is_csv;
      opt.csv_norm_text = norm_text;
      if (!weights_text.empty()) {
        opt.csv_weights = parse_csv_doubles(weights_text, "--weights");
      }
      if (!anchor_text.empty()) opt.anchor = sipcert::AnchorChoice::parse(anchor_text);
      if (*tol_opt) opt.tol_override = tol;
      if (*rho_opt) opt.rho = rho;
      if (bounds_text != "all") {
        std::stringstream ss(bounds_text);
        std::string name;
        while (std::getline(ss, name, ',')) opt.bound_names.push_back(name);
      }
      opt.format = parse_format(format_text);
      if (!inject_text.empty()) {
        const std::size_t colon = inject_text.rfind(':');
        if (colon == std::string::npos) {
          std::cerr << "error: --inject-bound-error expects NAME:DELTA\n";
          return sipcert::kExitInputError;
        }
        opt.inject_error = {inject_text.substr(0, colon),
                            std::stod(inject_text.substr(colon + 1))};
      }
      return with_output(output_path, [&](std::ostream& out) {
        return sipcert::run_report(input_path, opt, out, std::cerr);
      });
    }

    sipcert::WitnessOptions opt;
    opt.anchor = sipcert::Vector(parse_csv_doubles(w_anchor_text, "--anchor"));
    opt.norm_text = w_norm_text;
    opt.count = count;
    opt.format = parse_format(w_format_text);
    const std::vector<double> eps = parse_csv_doubles(eps_text, "--eps");
    return with_output(w_output_path, [&](std::ostream& out) {
      return sipcert::run_witness(kind_text, eps, opt, out, std::cerr);
    });
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return sipcert::kExitInputError;
  }
}
