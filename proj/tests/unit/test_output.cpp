#include <charconv>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "orthocorr/output.hpp"
#include "support.hpp"

using namespace orthocorr;

TEST_CASE("numbers round-trip") {
  test::Draw draw(21);
  for (int i = 0; i < 2000; ++i) {
    const double v = std::ldexp(draw.real(-1.0, 1.0), draw.integer(-300, 300));
    const std::string text = format_number(v);
    double back = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), back);
    CHECK(back == v);
  }
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(-3.0) == "-3");
}

TEST_CASE("csv layout") {
  CHECK(csv_header() == "family,alpha,beta,m,n,y,value,method,est_error");
  const auto h = make_record(Family::hermite(), 2, 1, 1.0, 42.5, "closed", 1e-14);
  CHECK(to_csv_row(h) == "hermite,,,2,1,1,42.5,closed,1e-14");
  const auto j = make_record(Family::jacobi(0.3, 1.2), 3, 2, 0.7, -1.25, "oracle", 0.0);
  CHECK(to_csv_row(j) == "jacobi,0.29999999999999999,1.2,3,2,0.69999999999999996,-1.25,oracle,0");
  const auto l = make_record(Family::laguerre(0.0), 1, 0, 2.0, -2.0, "coeffs", 0.0);
  CHECK(to_csv_row(l) == "laguerre,0,,1,0,2,-2,coeffs,0");
  CHECK(to_csv({h, l}) ==
        "family,alpha,beta,m,n,y,value,method,est_error\r\n" + to_csv_row(h) + "\r\n" + to_csv_row(l) + "\r\n");
}

TEST_CASE("json layout") {
  const auto j = make_record(Family::jacobi(0.3, 1.2), 3, 2, 0.7, -1.25, "oracle", 0.0);
  const auto h = make_record(Family::hermite(), 2, 1, 1.0, std::numeric_limits<double>::infinity(), "closed", 0.0);
  const auto parsed = nlohmann::json::parse(to_json({j, h}));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 2);
  const auto& first = parsed[0];
  CHECK(first.size() == 9);
  for (const char* key : {"family", "alpha", "beta", "m", "n", "y", "value", "method", "est_error"}) {
    CHECK(first.contains(key));
    CHECK_FALSE(first[key].is_object());
  }
  CHECK(first["alpha"].get<double>() == 0.3);
  CHECK(first["value"].get<double>() == -1.25);
  CHECK(parsed[1]["alpha"].is_null());
  CHECK(parsed[1]["value"].is_null());
}

TEST_CASE("coefficient rows") {
  CoefficientRow row{"legendre", std::nullopt, std::nullopt, 1, 0, "closed", {0.0, 2.0}};
  CHECK(to_csv(row) == "family,alpha,beta,m,n,method,c0,c1\r\nlegendre,,,1,0,closed,0,2\r\n");
  const auto parsed = nlohmann::json::parse(to_json(row));
  CHECK(parsed["c1"].get<double>() == 2.0);
  CHECK(parsed["alpha"].is_null());
}
