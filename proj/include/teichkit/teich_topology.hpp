#pragma once

#include <optional>
#include <variant>

#include "teichkit/algebra/complex.hpp"
#include "teichkit/hopf.hpp"

namespace teichkit::teich {

/// Point of the open domain D of (det, trace) pairs of contracting matrices.
struct Base {
  Complex d;
  Complex t;
};

/// Point of the non-separated copy C of the discriminant curve 4 det = tr^2,
/// encoding the Jordan block with eigenvalue lambda.
struct CurveC {
  Complex lambda;
};

/// Point of the non-separated copy C_p (p >= 2) of the curve
/// {(lambda^{p+1}, lambda + lambda^p)}, encoding g_{lambda,p}.
struct CurveCp {
  int p;
  Complex lambda;
};

using TeichPoint = std::variant<Base, CurveC, CurveCp>;

/// The (det, trace) coordinates shared by a point and its twin.
struct TeichImage {
  Complex d;
  Complex t;
};

/// Both roots of x^2 - t x + d have modulus in (eps, 1 - eps).
bool is_in_D(Complex d, Complex t, Tolerance tol = {});

/// Throws InvalidPoint when the point violates its stratum's invariants.
void validate(const TeichPoint& x, Tolerance tol = {});

TeichPoint point_of_class(const hopf::HopfClass& c);
hopf::HopfClass class_of_point(const TeichPoint& x, Tolerance tol = {});

TeichImage image(const TeichPoint& x);

/// Max-norm distance between the images of two points.
double image_distance(const TeichPoint& x, const TeichPoint& y);

/// Same stratum and parameters within eps.
bool approx_equal(const TeichPoint& x, const TeichPoint& y, Tolerance tol = {});

/// The other point with the same image: base <-> curve. Base points off every
/// curve image have no twin.
std::optional<TeichPoint> twin(const TeichPoint& x, Tolerance tol = {});

/// False exactly for pairs with equal images. Throws SamePoint for x == y.
bool separated(const TeichPoint& x, const TeichPoint& y, Tolerance tol = {});

/// Every neighborhood of x contains y.
bool adheres(const TeichPoint& x, const TeichPoint& y, Tolerance tol = {});

/// Basic neighborhood of radius r around center. For a base center this is
/// every point whose image lies in the open ball; for a curve center the base
/// points on that curve's own image locus are removed.
bool neighborhood_contains(const TeichPoint& center, double radius, const TeichPoint& x, Tolerance tol = {});

}  // namespace teichkit::teich
