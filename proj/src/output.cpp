#include "orthocorr/output.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace orthocorr {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

// Non-finite values have no JSON literal; they are written as null.
ordered_json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

ordered_json json_optional(const std::optional<double>& v) {
  if (!v) return nullptr;
  return json_number(*v);
}

}  // namespace

OutputRecord make_record(const Family& family, int m, int n, double y, double value,
                         std::string method, double est_error) {
  OutputRecord r;
  r.family = std::string(to_string(family.kind()));
  if (family.has_alpha()) r.alpha = family.alpha();
  if (family.has_beta()) r.beta = family.beta();
  r.m = m;
  r.n = n;
  r.y = y;
  r.value = value;
  r.method = std::move(method);
  r.est_error = est_error;
  return r;
}

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

std::string csv_header() { return "family,alpha,beta,m,n,y,value,method,est_error"; }

std::string to_csv_row(const OutputRecord& r) {
  std::ostringstream out;
  out << r.family << ',' << optional_number(r.alpha) << ',' << optional_number(r.beta) << ','
      << r.m << ',' << r.n << ',' << format_number(r.y) << ',' << format_number(r.value) << ','
      << r.method << ',' << format_number(r.est_error);
  return out.str();
}

std::string to_csv(const std::vector<OutputRecord>& records) {
  std::string out = csv_header() + "\r\n";
  for (const auto& r : records) out += to_csv_row(r) + "\r\n";
  return out;
}

std::string to_json(const std::vector<OutputRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) {
    ordered_json o;
    o["family"] = r.family;
    o["alpha"] = json_optional(r.alpha);
    o["beta"] = json_optional(r.beta);
    o["m"] = r.m;
    o["n"] = r.n;
    o["y"] = json_number(r.y);
    o["value"] = json_number(r.value);
    o["method"] = r.method;
    o["est_error"] = json_number(r.est_error);
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string to_csv(const CoefficientRow& row) {
  std::ostringstream out;
  out << "family,alpha,beta,m,n,method";
  for (std::size_t j = 0; j < row.coeffs.size(); ++j) out << ",c" << j;
  out << "\r\n"
      << row.family << ',' << optional_number(row.alpha) << ',' << optional_number(row.beta)
      << ',' << row.m << ',' << row.n << ',' << row.method;
  for (double c : row.coeffs) out << ',' << format_number(c);
  out << "\r\n";
  return out.str();
}

std::string to_json(const CoefficientRow& row) {
  ordered_json o;
  o["family"] = row.family;
  o["alpha"] = json_optional(row.alpha);
  o["beta"] = json_optional(row.beta);
  o["m"] = row.m;
  o["n"] = row.n;
  o["method"] = row.method;
  for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
    o["c" + std::to_string(j)] = json_number(row.coeffs[j]);
  }
  return o.dump(2) + "\n";
}

}  // namespace orthocorr
