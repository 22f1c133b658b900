#include "flowzeta/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace flowzeta {

UniPoly::UniPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::monomial(std::size_t degree, Integer coeff) {
  std::vector<Integer> c(degree + 1, Integer(0));
  c[degree] = std::move(coeff);
  return UniPoly(std::move(c));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer UniPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Integer UniPoly::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int UniPoly::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  // den^d * p(num/den) is integral with the same sign, den > 0.
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = coeffs_.back();
  Integer den_pow = 1;
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
    den_pow *= den;
    acc = acc * num + coeffs_[k] * den_pow;
  }
  return sgn(acc);
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::reversed() const {
  std::vector<Integer> r(coeffs_.rbegin(), coeffs_.rend());
  return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator-(UniPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const Integer& c, UniPoly a) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

Integer UniPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::optional<UniPoly> exact_quotient(const UniPoly& p, const UniPoly& m) {
  if (m.is_zero()) throw std::invalid_argument("exact_quotient: division by the zero polynomial");
  if (p.is_zero()) return UniPoly{};
  if (p.degree() < m.degree()) return std::nullopt;
  std::vector<Integer> rem = p.coefficients();
  const auto& mc = m.coefficients();
  const std::size_t dm = mc.size() - 1;
  std::vector<Integer> quot(rem.size() - dm, Integer(0));
  for (std::size_t k = rem.size(); k-- > dm;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), mc[dm].get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), rem[k].get_mpz_t(), mc[dm].get_mpz_t());
    for (std::size_t j = 0; j <= dm; ++j) rem[k - dm + j] -= q * mc[j];
    quot[k - dm] = std::move(q);
  }
  for (std::size_t k = 0; k < dm; ++k)
    if (rem[k] != 0) return std::nullopt;
  return UniPoly(std::move(quot));
}

UniPoly stretch_minimal_polynomial(std::size_t g) {
  std::vector<Integer> c(g + 1, Integer(-1));
  c[g] = 1;
  return UniPoly(std::move(c));
}

}  // namespace flowzeta
