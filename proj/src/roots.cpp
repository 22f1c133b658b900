#include "flowzeta/roots.hpp"

#include <stdexcept>

namespace flowzeta {

namespace {

// Remainder r of a positive multiple of f modulo g, over the integers.
UniPoly positive_pseudo_remainder(const UniPoly& f, const UniPoly& g) {
  std::vector<Integer> r = f.coefficients();
  const auto& gc = g.coefficients();
  const std::size_t dg = gc.size() - 1;
  const Integer lead_abs = abs(gc[dg]);
  const int lead_sign = sgn(gc[dg]);
  while (r.size() > dg) {
    const std::size_t shift = r.size() - 1 - dg;
    const Integer top = r.back();
    for (auto& c : r) c *= lead_abs;
    for (std::size_t j = 0; j <= dg; ++j) r[shift + j] -= lead_sign * top * gc[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return UniPoly(std::move(r));
}

UniPoly primitive(const UniPoly& p) {
  const Integer c = p.content();
  if (c <= 1) return p;
  std::vector<Integer> out = p.coefficients();
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return UniPoly(std::move(out));
}

std::size_t sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& s : chain) {
    const int v = s.sign_at(x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

}  // namespace

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(primitive(d));
  for (;;) {
    UniPoly r = positive_pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(primitive(-r));
  }
  return chain;
}

std::size_t count_real_roots(const std::vector<UniPoly>& sturm, const Rational& a,
                             const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("count_real_roots: empty interval");
  const std::size_t va = sign_variations(sturm, a);
  const std::size_t vb = sign_variations(sturm, b);
  return va >= vb ? va - vb : 0;
}

RootInterval largest_real_root(const UniPoly& p, const Rational& tol) {
  if (p.degree() < 1) throw std::invalid_argument("largest_real_root: degree must be at least 1");
  if (tol <= 0) throw std::invalid_argument("largest_real_root: tolerance must be positive");

  // Cauchy bound: every root satisfies |z| < 1 + max |c_i / c_d|.
  const auto& c = p.coefficients();
  Rational bound = 0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    Rational ratio(abs(c[k]), abs(c.back()));
    ratio.canonicalize();
    if (ratio > bound) bound = ratio;
  }
  bound += 1;

  const auto chain = sturm_sequence(p);
  RootInterval iv{-bound, bound};
  if (count_real_roots(chain, iv.lo, iv.hi) == 0)
    throw std::domain_error("largest_real_root: polynomial has no real root");

  while (iv.hi - iv.lo > tol) {
    Rational width = iv.hi - iv.lo;
    Rational split = iv.lo + width / 2;
    // Never split on a root; p has finitely many, so this terminates.
    for (Rational step = width / 8; p.sign_at(split) == 0; step /= 2) split = iv.lo + width / 2 + step;
    if (count_real_roots(chain, split, iv.hi) > 0) {
      iv.lo = split;
    } else {
      iv.hi = split;
    }
  }
  return iv;
}

}  // namespace flowzeta
