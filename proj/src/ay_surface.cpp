#include "flowzeta/ay_surface.hpp"

#include <algorithm>
#include <stdexcept>

#include "flowzeta/parse_error.hpp"

namespace flowzeta::ay {

namespace {

const CubicFieldElt& a() {
  static const CubicFieldElt v = CubicFieldElt::alpha();
  return v;
}

CubicFieldElt half(const CubicFieldElt& e) { return e * CubicFieldElt(Rational(1, 2)); }

CubicFieldElt power(const CubicFieldElt& e, int k) {
  CubicFieldElt out(1);
  for (int i = 0; i < k; ++i) out = out * e;
  return out;
}

struct Branch {
  CubicFieldElt tx;
  CubicFieldElt ty;
};

// R1 and R2/R3 translations as in the usual coordinates. R4 is shifted by
// (alpha + alpha^4)/2 so that h(R4) is the strip between h(R1) and h(R3).
Branch branch(Region r) {
  switch (r) {
    case Region::R1:
      return {-half(a() - power(a(), 4)), CubicFieldElt(0)};
    case Region::R2:
    case Region::R3:
      return {a(), CubicFieldElt(-1)};
    case Region::R4:
      return {half(a() + power(a(), 4)), CubicFieldElt(0)};
    case Region::Boundary:
      break;
  }
  throw std::domain_error("apply_h: no affine branch on the boundary");
}

Point apply_branch(Region r, const Point& p) {
  const Branch t = branch(r);
  return {a() * p.x + t.tx, p.y / a() + t.ty};
}

}  // namespace

std::string Point::to_string() const { return x.to_string() + "," + y.to_string(); }

std::string to_string(Region r) {
  switch (r) {
    case Region::R1: return "R1";
    case Region::R2: return "R2";
    case Region::R3: return "R3";
    case Region::R4: return "R4";
    case Region::Boundary: return "Boundary";
  }
  return "?";
}

CubicFieldElt split_x() { return half(a() + power(a(), 2)); }

std::vector<Slit> slits() {
  const CubicFieldElt denom = CubicFieldElt(1) - power(a(), 3);
  return {
      {half(power(a(), 2) + power(a(), 4)), power(a(), 2) / denom},
      {split_x(), a() / denom},
      {a() + half(power(a(), 2) + power(a(), 3)), power(a(), 3) / denom},
  };
}

bool in_polygon(const Point& p) {
  const CubicFieldElt zero(0), one(1);
  const CubicFieldElt aa = a() + power(a(), 2);
  if (p.x < zero || p.x > one || p.y < zero) return false;
  if (p.x <= a()) return p.y <= one;
  if (p.x <= aa) return p.y <= aa;
  return p.y <= a();
}

Region classify_region(const Point& p) {
  if (!in_polygon(p)) throw std::domain_error("classify_region: point " + p.to_string() + " is outside the polygon");
  for (const auto& s : slits())
    if (p.x == s.x && p.y <= s.top) return Region::Boundary;
  const CubicFieldElt s = split_x();
  const bool low = p.y <= a();
  if (p.x > s) return low ? Region::R1 : Region::R2;
  return low ? Region::R4 : Region::R3;
}

Point apply_h(const Point& p) {
  const Region r = classify_region(p);
  if (r == Region::Boundary)
    throw std::domain_error("apply_h: point " + p.to_string() + " lies on a slit");
  return apply_branch(r, p);
}

Point base_point() {
  const CubicFieldElt x = (a() - power(a(), 2)) / (CubicFieldElt(2) * (CubicFieldElt(1) + power(a(), 2)));
  const CubicFieldElt y = CubicFieldElt(1) / (a().inverse() - a());
  return {x, y};
}

StretchCertificate stretch_factor_certificate() {
  StretchCertificate c{UniPoly{-1, -1, -1, 1}, false};
  c.vanishes_at_inverse_alpha = evaluate(c.polynomial, a().inverse()).is_zero();
  return c;
}

std::vector<Point> short_orbit_points() {
  const Region regions[] = {Region::R1, Region::R2, Region::R3, Region::R4};
  const CubicFieldElt one(1);
  std::vector<Point> found;
  auto record = [&found](const Point& p) {
    if (std::find(found.begin(), found.end(), p) == found.end()) found.push_back(p);
  };
  auto lands_in = [](const Point& p, Region r) { return in_polygon(p) && classify_region(p) == r; };

  for (Region r : regions) {
    // alpha x + tx = x, y / alpha + ty = y
    const Branch t = branch(r);
    const Point p{t.tx / (one - a()), t.ty / (one - a().inverse())};
    if (lands_in(p, r)) record(p);
  }
  for (Region r1 : regions)
    for (Region r2 : regions) {
      // alpha^2 x + alpha tx1 + tx2 = x, y / alpha^2 + ty1 / alpha + ty2 = y
      const Branch t1 = branch(r1);
      const Branch t2 = branch(r2);
      const Point p{(a() * t1.tx + t2.tx) / (one - a() * a()),
                    (t1.ty / a() + t2.ty) / (one - (a() * a()).inverse())};
      if (!lands_in(p, r1)) continue;
      if (!lands_in(apply_branch(r1, p), r2)) continue;
      record(p);
    }
  return found;
}

Point parse_point(const std::string& text) {
  const auto close = text.find(')');
  if (close == std::string::npos) throw ParseError(0, "point '" + text + "': expected (..),(..)");
  const auto comma = text.find(',', close);
  if (comma == std::string::npos) throw ParseError(0, "point '" + text + "': expected (..),(..)");
  return {parse_cubic(text.substr(0, close + 1)), parse_cubic(text.substr(comma + 1))};
}

}  // namespace flowzeta::ay
