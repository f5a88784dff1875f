#include "teichkit/cli/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace teichkit::cli {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw UsageError(std::string("expected an object with key \"") + key + "\"");
  }
  return j.at(key);
}

void expect_array(const Json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size) {
    throw UsageError(std::string(what) + " must be an array of length " + std::to_string(size));
  }
}

}  // namespace

Json number(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, "non-finite value in output");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double rounded = std::strtod(buf, nullptr);
  if (rounded == std::trunc(rounded) && std::abs(rounded) < 1e15) {
    return static_cast<std::int64_t>(rounded);
  }
  return rounded;
}

Json to_json(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Json to_json(const Matrix2C& m) {
  return Json::array({Json::array({to_json(m.a()), to_json(m.b())}), Json::array({to_json(m.c()), to_json(m.d())})});
}

Json to_json(const IntMatrix2& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const QuadraticIrrational& q) {
  Json j;
  j["p"] = q.p();
  j["q"] = q.q();
  j["d"] = q.d();
  return j;
}

Json to_json(const hopf::HopfClass& c) {
  Json j;
  if (const auto* d = std::get_if<hopf::Diagonal>(&c)) {
    j["class"] = "diagonal";
    j["lambda1"] = to_json(d->lambda1());
    j["lambda2"] = to_json(d->lambda2());
  } else {
    const auto& r = std::get<hopf::Resonant>(c);
    j["class"] = "resonant";
    j["lambda"] = to_json(r.lambda());
    j["p"] = r.p();
  }
  return j;
}

Json to_json(const teich::TeichPoint& x) {
  Json j;
  if (const auto* b = std::get_if<teich::Base>(&x)) {
    j["stratum"] = "base";
    j["params"] = Json::array({to_json(b->d), to_json(b->t)});
  } else if (const auto* c = std::get_if<teich::CurveC>(&x)) {
    j["stratum"] = "c";
    j["params"] = Json::array({to_json(c->lambda)});
  } else {
    const auto& cp = std::get<teich::CurveCp>(x);
    j["stratum"] = "cp";
    j["p"] = cp.p;
    j["params"] = Json::array({to_json(cp.lambda)});
  }
  return j;
}

Json to_json(const teich::TeichImage& im) {
  Json j;
  j["d"] = to_json(im.d);
  j["t"] = to_json(im.t);
  return j;
}

Json to_json(const foliation::ContinuedFraction& cf) {
  Json j;
  j["preperiod"] = cf.preperiod;
  j["period"] = cf.period;
  return j;
}

Json to_json(const atlas::GroupElement& g) {
  Json j;
  j["a"] = to_json(g.a());
  j["t"] = to_json(g.t());
  return j;
}

Json to_json(const atlas::AtlasPoint& m) {
  Json j;
  j["a"] = to_json(m.a());
  j["t"] = to_json(m.t());
  return j;
}

Json parse_document(std::string_view text, std::string_view flag) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw UsageError("malformed JSON for " + std::string(flag));
  return j;
}

double real_from_json(const Json& j) {
  if (!j.is_number()) throw UsageError("expected a number, got " + j.dump());
  return j.get<double>();
}

std::int64_t int_from_json(const Json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (v == std::trunc(v) && std::abs(v) < 9e15) return static_cast<std::int64_t>(v);
  }
  throw UsageError("expected an integer, got " + j.dump());
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  expect_array(j, 2, "complex number");
  return {real_from_json(j[0]), real_from_json(j[1])};
}

Matrix2C matrix_from_json(const Json& j) {
  expect_array(j, 2, "matrix");
  expect_array(j[0], 2, "matrix row");
  expect_array(j[1], 2, "matrix row");
  return {complex_from_json(j[0][0]), complex_from_json(j[0][1]), complex_from_json(j[1][0]),
          complex_from_json(j[1][1])};
}

IntMatrix2 int_matrix_from_json(const Json& j) {
  expect_array(j, 2, "integer matrix");
  expect_array(j[0], 2, "matrix row");
  expect_array(j[1], 2, "matrix row");
  return {int_from_json(j[0][0]), int_from_json(j[0][1]), int_from_json(j[1][0]), int_from_json(j[1][1])};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  return Rational(int_from_json(j));
}

QuadraticIrrational quadratic_from_json(const Json& j) {
  return {int_from_json(member(j, "p")), int_from_json(member(j, "q")), int_from_json(member(j, "d"))};
}

hopf::HopfClass hopf_class_from_json(const Json& j, Tolerance tol) {
  const Json& kind = member(j, "class");
  if (kind == "diagonal") {
    return hopf::Diagonal(complex_from_json(member(j, "lambda1")), complex_from_json(member(j, "lambda2")), tol);
  }
  if (kind == "resonant") {
    return hopf::Resonant(complex_from_json(member(j, "lambda")), static_cast<int>(int_from_json(member(j, "p"))),
                          tol);
  }
  throw UsageError("unknown Hopf class " + kind.dump());
}

hopf::ContractionInput contraction_from_json(const Json& j) {
  if (j.is_object() && j.contains("matrix")) return hopf::LinearContraction{matrix_from_json(j.at("matrix"))};
  const Json& r = member(j, "resonant");
  hopf::ResonantForm form;
  form.lambda = complex_from_json(member(r, "lambda"));
  form.p = static_cast<int>(int_from_json(member(r, "p")));
  if (r.contains("c")) form.c = complex_from_json(r.at("c"));
  return form;
}

teich::TeichPoint teich_point_from_json(const Json& j) {
  const Json& stratum = member(j, "stratum");
  const Json& params = member(j, "params");
  if (stratum == "base") {
    expect_array(params, 2, "base params");
    return teich::Base{complex_from_json(params[0]), complex_from_json(params[1])};
  }
  expect_array(params, 1, "curve params");
  if (stratum == "c") return teich::CurveC{complex_from_json(params[0])};
  if (stratum == "cp") return teich::CurveCp{static_cast<int>(int_from_json(member(j, "p"))), complex_from_json(params[0])};
  throw UsageError("unknown stratum " + stratum.dump());
}

atlas::GroupElement group_element_from_json(const Json& j, Tolerance tol) {
  return {matrix_from_json(member(j, "a")), complex_from_json(member(j, "t")), tol};
}

atlas::AtlasPoint atlas_point_from_json(const Json& j, Tolerance tol) {
  return {matrix_from_json(member(j, "a")), complex_from_json(member(j, "t")), tol};
}

foliation::Slope slope_from_text(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text[first] == '{') {
    return quadratic_from_json(parse_document(text, "slope"));
  }
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError("malformed slope '" + std::string(text) + "': " + e.what());
  }
}

}  // namespace teichkit::cli
