#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "teichkit/algebra/complex.hpp"
#include "teichkit/algebra/matrix2.hpp"
#include "teichkit/algebra/quadratic_irrational.hpp"
#include "teichkit/algebra/rational.hpp"
#include "teichkit/atlas_groupoid.hpp"
#include "teichkit/hopf.hpp"
#include "teichkit/teich_topology.hpp"
#include "teichkit/torus_foliation.hpp"

namespace teichkit::cli {

using Json = nlohmann::ordered_json;

/// Malformed or mistyped command input. Reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output number: rounded to 12 significant digits, emitted as an integer
/// when the rounded value is integral. Keeps outputs byte-stable.
Json number(double v);

Json to_json(Complex z);
Json to_json(const Matrix2C& m);
Json to_json(const IntMatrix2& m);
Json to_json(const Rational& r);
Json to_json(const QuadraticIrrational& q);
Json to_json(const hopf::HopfClass& c);
Json to_json(const teich::TeichPoint& x);
Json to_json(const teich::TeichImage& im);
Json to_json(const foliation::ContinuedFraction& cf);
Json to_json(const atlas::GroupElement& g);
Json to_json(const atlas::AtlasPoint& m);

/// Parses a JSON document from a flag value; throws UsageError.
Json parse_document(std::string_view text, std::string_view flag);

double real_from_json(const Json& j);
std::int64_t int_from_json(const Json& j);
/// [re, im] or a bare real number.
Complex complex_from_json(const Json& j);
Matrix2C matrix_from_json(const Json& j);
IntMatrix2 int_matrix_from_json(const Json& j);
/// "num/den" string or an integer.
Rational rational_from_json(const Json& j);
/// {"p": int, "q": int, "d": int}.
QuadraticIrrational quadratic_from_json(const Json& j);
/// {"class": "diagonal", "lambda1", "lambda2"} or {"class": "resonant", "lambda", "p"}.
hopf::HopfClass hopf_class_from_json(const Json& j, Tolerance tol);
/// {"matrix": M} or {"resonant": {"lambda", "p", "c"?}}.
hopf::ContractionInput contraction_from_json(const Json& j);
/// {"stratum": "base"|"c"|"cp", "p"?: int, "params": [...]}.
teich::TeichPoint teich_point_from_json(const Json& j);
/// {"a": M, "t": [re, im]}.
atlas::GroupElement group_element_from_json(const Json& j, Tolerance tol);
atlas::AtlasPoint atlas_point_from_json(const Json& j, Tolerance tol);

/// Slope flag: "p/q", an integer, or a quadratic-irrational JSON object.
foliation::Slope slope_from_text(std::string_view text);

}  // namespace teichkit::cli
