#pragma once

// CSV and JSON serialisation of evaluation records.

#include <optional>
#include <string>
#include <vector>

#include "orthocorr/family.hpp"

namespace orthocorr {

struct OutputRecord {
  std::string family;
  std::optional<double> alpha;
  std::optional<double> beta;
  int m = 0;
  int n = 0;
  double y = 0.0;
  double value = 0.0;
  std::string method;  ///< closed, oracle, recurrence or coeffs
  double est_error = 0.0;
};

/// Record with the family name and the parameters the family actually has.
OutputRecord make_record(const Family& family, int m, int n, double y, double value,
                         std::string method, double est_error);

/// 17 significant digits, so the text parses back to the same double.
std::string format_number(double value);

std::string csv_header();
std::string to_csv_row(const OutputRecord& record);
std::string to_csv(const std::vector<OutputRecord>& records);

/// A JSON array of flat objects with the CSV column names as keys.
std::string to_json(const std::vector<OutputRecord>& records);

/// One row with the coefficients c_0..c_m of R_{m,n}.
struct CoefficientRow {
  std::string family;
  std::optional<double> alpha;
  std::optional<double> beta;
  int m = 0;
  int n = 0;
  std::string method;
  std::vector<double> coeffs;
};

std::string to_csv(const CoefficientRow& row);
std::string to_json(const CoefficientRow& row);

}  // namespace orthocorr
