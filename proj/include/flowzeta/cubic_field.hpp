#pragma once

#include <string>

#include "flowzeta/integer.hpp"
#include "flowzeta/unipoly.hpp"

namespace flowzeta {

/// c0 + c1*alpha + c2*alpha^2 in Q(alpha), where alpha ~ 0.5437 is the real
/// root of x^3 + x^2 + x - 1.
class CubicFieldElt {
 public:
  CubicFieldElt() = default;
  CubicFieldElt(Rational c0, Rational c1 = 0, Rational c2 = 0);
  CubicFieldElt(long c0) : CubicFieldElt(Rational(c0)) {}

  static CubicFieldElt alpha() { return {0, 1, 0}; }
  static UniPoly minimal_polynomial() { return UniPoly{-1, 1, 1, 1}; }

  const Rational& c0() const { return c_[0]; }
  const Rational& c1() const { return c_[1]; }
  const Rational& c2() const { return c_[2]; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

  CubicFieldElt& operator+=(const CubicFieldElt& o);
  CubicFieldElt& operator-=(const CubicFieldElt& o);
  friend CubicFieldElt operator+(CubicFieldElt a, const CubicFieldElt& b) { return a += b; }
  friend CubicFieldElt operator-(CubicFieldElt a, const CubicFieldElt& b) { return a -= b; }
  friend CubicFieldElt operator-(const CubicFieldElt& a);
  friend CubicFieldElt operator*(const CubicFieldElt& a, const CubicFieldElt& b);
  friend CubicFieldElt operator/(const CubicFieldElt& a, const CubicFieldElt& b);
  friend bool operator==(const CubicFieldElt& a, const CubicFieldElt& b) {
    return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2];
  }

  /// Throws std::domain_error for zero.
  CubicFieldElt inverse() const;

  /// Exact sign of the real number, by interval refinement of alpha.
  int sign() const;
  double to_double() const;

  /// "(c0,c1,c2)"
  std::string to_string() const;

 private:
  Rational c_[3];
};

/// Orders by real value.
inline bool operator<(const CubicFieldElt& a, const CubicFieldElt& b) { return (a - b).sign() < 0; }
inline bool operator<=(const CubicFieldElt& a, const CubicFieldElt& b) { return (a - b).sign() <= 0; }
inline bool operator>(const CubicFieldElt& a, const CubicFieldElt& b) { return b < a; }
inline bool operator>=(const CubicFieldElt& a, const CubicFieldElt& b) { return b <= a; }

/// Evaluates an integer polynomial at a field element.
CubicFieldElt evaluate(const UniPoly& p, const CubicFieldElt& x);

/// Parses "(c0,c1,c2)" with rational entries such as 1/2. Throws ParseError.
CubicFieldElt parse_cubic(const std::string& text);

}  // namespace flowzeta
