#include "flowzeta/cubic_field.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "flowzeta/parse_error.hpp"

namespace flowzeta {

namespace {

struct AlphaInterval {
  Rational lo;
  Rational hi;
};

// x^3 + x^2 + x - 1 is increasing, negative at lo and positive at hi.
void bisect_alpha(AlphaInterval& iv) {
  Rational mid = (iv.lo + iv.hi) / 2;
  Rational f = ((mid + 1) * mid + 1) * mid - 1;
  if (f < 0) {
    iv.lo = std::move(mid);
  } else {
    iv.hi = std::move(mid);
  }
}

const AlphaInterval& cached_alpha() {
  static const AlphaInterval iv = [] {
    AlphaInterval a{Rational(543, 1000), Rational(544, 1000)};
    a.lo.canonicalize();
    a.hi.canonicalize();
    for (int i = 0; i < 64; ++i) bisect_alpha(a);
    return a;
  }();
  return iv;
}

// Enclosure of c * x^k over x in [lo, hi], 0 < lo.
std::pair<Rational, Rational> scaled_range(const Rational& c, const Rational& lo, const Rational& hi) {
  Rational a = c * lo;
  Rational b = c * hi;
  if (a > b) std::swap(a, b);
  return {a, b};
}

}  // namespace

CubicFieldElt::CubicFieldElt(Rational c0, Rational c1, Rational c2)
    : c_{std::move(c0), std::move(c1), std::move(c2)} {
  for (auto& c : c_) c.canonicalize();
}

CubicFieldElt& CubicFieldElt::operator+=(const CubicFieldElt& o) {
  for (int i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

CubicFieldElt& CubicFieldElt::operator-=(const CubicFieldElt& o) {
  for (int i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

CubicFieldElt operator-(const CubicFieldElt& a) { return {-a.c_[0], -a.c_[1], -a.c_[2]}; }

CubicFieldElt operator*(const CubicFieldElt& a, const CubicFieldElt& b) {
  std::array<Rational, 5> p;
  for (auto& x : p) x = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p[i + j] += a.c_[i] * b.c_[j];
  // alpha^3 = 1 - alpha - alpha^2, alpha^4 = 2 alpha - 1
  return {p[0] + p[3] - p[4], p[1] - p[3] + 2 * p[4], p[2] - p[3]};
}

CubicFieldElt CubicFieldElt::inverse() const {
  if (is_zero()) throw std::domain_error("CubicFieldElt: inverse of zero");
  // Columns are this * 1, this * alpha, this * alpha^2; solve M x = e_0.
  const CubicFieldElt cols[3] = {*this, *this * alpha(), *this * alpha() * alpha()};
  Rational m[3][4];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = cols[j].c_[i];
    m[i][3] = i == 0 ? 1 : 0;
  }
  for (int k = 0; k < 3; ++k) {
    int p = k;
    while (m[p][k] == 0) ++p;  // nonsingular: multiplication by a nonzero element
    if (p != k)
      for (int j = 0; j < 4; ++j) std::swap(m[p][j], m[k][j]);
    for (int i = 0; i < 3; ++i) {
      if (i == k || m[i][k] == 0) continue;
      const Rational f = m[i][k] / m[k][k];
      for (int j = k; j < 4; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

CubicFieldElt operator/(const CubicFieldElt& a, const CubicFieldElt& b) { return a * b.inverse(); }

int CubicFieldElt::sign() const {
  if (is_zero()) return 0;
  AlphaInterval iv = cached_alpha();
  for (;;) {
    const auto [l1, h1] = scaled_range(c_[1], iv.lo, iv.hi);
    const auto [l2, h2] = scaled_range(c_[2], iv.lo * iv.lo, iv.hi * iv.hi);
    const Rational lower = c_[0] + l1 + l2;
    const Rational upper = c_[0] + h1 + h2;
    if (lower > 0) return 1;
    if (upper < 0) return -1;
    // Terminates: alpha has degree 3, so a nonzero element is not zero at alpha.
    bisect_alpha(iv);
  }
}

double CubicFieldElt::to_double() const {
  const AlphaInterval& iv = cached_alpha();
  const Rational x = (iv.lo + iv.hi) / 2;
  const Rational v = c_[0] + c_[1] * x + c_[2] * x * x;
  return v.get_d();
}

std::string CubicFieldElt::to_string() const {
  return "(" + c_[0].get_str() + "," + c_[1].get_str() + "," + c_[2].get_str() + ")";
}

CubicFieldElt evaluate(const UniPoly& p, const CubicFieldElt& x) {
  CubicFieldElt acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + CubicFieldElt(Rational(*it));
  return acc;
}

CubicFieldElt parse_cubic(const std::string& text) {
  std::string body;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') body += ch;
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw ParseError(0, "field element '" + text + "': expected (c0,c1,c2)");
  body = body.substr(1, body.size() - 2);
  std::istringstream in(body);
  std::string field;
  std::array<Rational, 3> c;
  std::size_t k = 0;
  while (std::getline(in, field, ',')) {
    if (k == 3) throw ParseError(0, "field element '" + text + "': more than three coordinates");
    Rational q;
    if (field.empty() || q.set_str(field, 10) != 0 || q.get_den() == 0)
      throw ParseError(0, "field element '" + text + "': bad rational '" + field + "'");
    q.canonicalize();
    c[k++] = q;
  }
  if (k != 3) throw ParseError(0, "field element '" + text + "': expected three coordinates");
  return {c[0], c[1], c[2]};
}

}  // namespace flowzeta
