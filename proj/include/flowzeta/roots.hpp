#pragma once

#include <vector>

#include "flowzeta/integer.hpp"
#include "flowzeta/unipoly.hpp"

namespace flowzeta {

/// Open rational interval (lo, hi) known to contain exactly the root of
/// interest and no larger real root.
struct RootInterval {
  Rational lo;
  Rational hi;

  Rational midpoint() const { return (lo + hi) / 2; }
  double approx() const { return midpoint().get_d(); }
};

/// Negated-remainder Sturm chain p, p', -rem(p, p'), ... kept primitive over Z.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Number of distinct real roots in (a, b). Requires a < b and that neither
/// endpoint is a root.
std::size_t count_real_roots(const std::vector<UniPoly>& sturm, const Rational& a,
                             const Rational& b);

/// Largest real root isolated by Sturm counting and refined by bisection to
/// width <= tol. Throws std::invalid_argument for degree < 1 or tol <= 0 and
/// std::domain_error when p has no real root.
RootInterval largest_real_root(const UniPoly& p, const Rational& tol = Rational(1, 1000000000));

}  // namespace flowzeta
