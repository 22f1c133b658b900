#pragma once

// The slitted polygon of the genus-3 Arnoux-Yoccoz surface and its affine
// pseudo-Anosov map h, exact over Q(alpha).

#include <optional>
#include <string>
#include <vector>

#include "flowzeta/cubic_field.hpp"
#include "flowzeta/unipoly.hpp"

namespace flowzeta::ay {

struct Point {
  CubicFieldElt x;
  CubicFieldElt y;

  friend bool operator==(const Point&, const Point&) = default;
  std::string to_string() const;
};

enum class Region { R1, R2, R3, R4, Boundary };

std::string to_string(Region r);

/// (alpha + alpha^2) / 2, the x-coordinate splitting R1/R2 from R3/R4.
CubicFieldElt split_x();

/// Vertical slits {x = x_k, 0 <= y <= top_k}; their tops are the three
/// polygon representatives of one cone point.
struct Slit {
  CubicFieldElt x;
  CubicFieldElt top;
};
std::vector<Slit> slits();

/// Closed polygon with vertices (0,0), (0,1), (a,1), (a,a+a^2),
/// (a+a^2,a+a^2), (a+a^2,a), (1,a), (1,0).
bool in_polygon(const Point& p);

/// Throws std::domain_error for points outside the polygon. Points on a slit
/// (including its top) are Boundary; other edge points are classified by
/// the regions' weak inequalities.
Region classify_region(const Point& p);

/// Piecewise map (alpha x, y / alpha) + translation of the point's region.
/// Throws std::domain_error for Boundary points.
Point apply_h(const Point& p);

/// The period-two point ((a - a^2) / (2 (1 + a^2)), 1 / (1/a - a)).
Point base_point();

struct StretchCertificate {
  UniPoly polynomial;  // x^3 - x^2 - x - 1
  bool vanishes_at_inverse_alpha = false;
};

StretchCertificate stretch_factor_certificate();

/// Points p off the slits with h(p) = p or h(h(p)) = p, found by solving
/// each affine branch composition exactly and keeping the consistent ones.
std::vector<Point> short_orbit_points();

/// Parses "(c0,c1,c2),(c0,c1,c2)".
Point parse_point(const std::string& text);

}  // namespace flowzeta::ay
