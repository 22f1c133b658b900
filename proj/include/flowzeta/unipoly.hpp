#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "flowzeta/integer.hpp"

namespace flowzeta {

/// Dense integer polynomial in one variable, constant term first. The
/// coefficient vector never ends in a zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly monomial(std::size_t degree, Integer coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t k) const;
  const Integer& leading() const { return coeffs_.back(); }

  Integer operator()(const Integer& x) const;
  Rational operator()(const Rational& x) const;
  /// Sign of p(x) without forming large intermediate fractions.
  int sign_at(const Rational& x) const;

  UniPoly derivative() const;
  /// t^deg * p(1/t)
  UniPoly reversed() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Integer& c, UniPoly a);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Content made positive: gcd of the coefficients.
  Integer content() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Quotient when m divides p exactly over the integers, otherwise nullopt.
/// Throws std::invalid_argument when m is zero.
std::optional<UniPoly> exact_quotient(const UniPoly& p, const UniPoly& m);

inline bool divides(const UniPoly& p, const UniPoly& m) { return exact_quotient(p, m).has_value(); }

/// x^g - x^{g-1} - ... - x - 1
UniPoly stretch_minimal_polynomial(std::size_t g);

}  // namespace flowzeta
