#pragma once

#include "randmin/params.hpp"
#include "randmin/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace randmin {

/// One density result with its derived quantities.
struct DensityReport {
  int sigma = 0;
  int k = 0;
  int w = 0;
  BigRational dr;
  BigRational dfr;  // (w+1) DR
  BigRational dev;  // sigma^(w+k) (DR - 2/(w+1))
  std::string method;
  double seconds = 0.0;

  static DensityReport from_density(const Params& params, const BigRational& dr, std::string method,
                                    double seconds = 0.0);

  /// Exact values as {"num": "...", "den": "..."} plus float renderings.
  nlohmann::json to_json() const;
  static std::string csv_header();
  std::string to_csv_row() const;
  std::string to_text() const;
};

/// Float with 12 significant digits, as used in every CSV cell.
std::string format_float(double x);

/// {"num": "...", "den": "..."}
nlohmann::json rational_json(const BigRational& q);

/// log_base |q|, or nullopt when q == 0.
std::optional<double> log_abs_base(const BigRational& q, double base);

/// Sign of DFR - 2 as "above", "below" or "equal".
std::string sign_label(const BigRational& dfr);

}  // namespace randmin
