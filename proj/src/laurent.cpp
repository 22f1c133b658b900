#include "flowzeta/laurent.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

#include "flowzeta/parse_error.hpp"

namespace flowzeta {

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

LaurentPoly LaurentPoly::constant(std::size_t num_vars, const Integer& c) {
  LaurentPoly p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponent exponent, const Integer& coeff) {
  LaurentPoly p(exponent.size());
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t num_vars, std::size_t index, long power) {
  if (index >= num_vars) throw std::invalid_argument("LaurentPoly::variable: index out of range");
  Exponent e(num_vars, 0);
  e[index] = power;
  return monomial(std::move(e));
}

Integer LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != num_vars_) throw std::invalid_argument("LaurentPoly: exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const {
  if (e.size() != num_vars_) throw std::invalid_argument("LaurentPoly: exponent length mismatch");
  LaurentPoly out(num_vars_);
  for (const auto& [exp, c] : terms_) {
    Exponent moved = exp;
    for (std::size_t i = 0; i < num_vars_; ++i) moved[i] += e[i];
    out.terms_.emplace(std::move(moved), c);
  }
  return out;
}

LaurentPoly LaurentPoly::with_extra_vars(std::size_t extra) const {
  LaurentPoly out(num_vars_ + extra);
  for (const auto& [exp, c] : terms_) {
    Exponent longer = exp;
    longer.resize(num_vars_ + extra, 0);
    out.terms_.emplace(std::move(longer), c);
  }
  return out;
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (num_vars_ != o.num_vars_)
    throw std::invalid_argument("LaurentPoly: variable count mismatch (" +
                                std::to_string(num_vars_) + " vs " +
                                std::to_string(o.num_vars_) + ")");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  LaurentPoly out(a.num_vars_);
  Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly operator*(const Integer& c, const LaurentPoly& a) {
  LaurentPoly out(a.num_vars_);
  if (c == 0) return out;
  for (const auto& [e, x] : a.terms_) out.terms_.emplace(e, c * x);
  return out;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (names.size() != num_vars_)
    throw std::invalid_argument("LaurentPoly::to_string: wrong number of variable names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (any) mono << '*';
      any = true;
      mono << names[i];
      if (e[i] != 1) mono << '^' << e[i];
    }
    if (!any) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << mono.str();
    }
  }
  return os.str();
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  p.check_compatible(q);
  if (q.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  const std::size_t n = p.num_vars();
  LaurentPoly quotient(n);
  if (p.is_zero()) return quotient;

  // Per-variable degree ranges add under multiplication in an integral
  // domain, which bounds every quotient exponent and forces termination.
  auto ranges = [n](const LaurentPoly& f) {
    Exponent lo(n, 0), hi(n, 0);
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = first ? e[i] : std::min(lo[i], e[i]);
        hi[i] = first ? e[i] : std::max(hi[i], e[i]);
      }
      first = false;
    }
    return std::pair{lo, hi};
  };
  const auto [plo, phi] = ranges(p);
  const auto [qlo, qhi] = ranges(q);

  const auto& [qlead_exp, qlead_coeff] = *q.terms().rbegin();
  LaurentPoly rem = p;
  while (!rem.is_zero()) {
    const auto& [rexp, rcoeff] = *rem.terms().rbegin();
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = rexp[i] - qlead_exp[i];
      if (e[i] < plo[i] - qlo[i] || e[i] > phi[i] - qhi[i])
        throw InexactDivision("exact_div: divisor does not divide dividend");
    }
    if (!mpz_divisible_p(rcoeff.get_mpz_t(), qlead_coeff.get_mpz_t()))
      throw InexactDivision("exact_div: divisor does not divide dividend");
    Integer c;
    mpz_divexact(c.get_mpz_t(), rcoeff.get_mpz_t(), qlead_coeff.get_mpz_t());
    const LaurentPoly step = LaurentPoly::monomial(e, c);
    quotient += step;
    rem -= step * q;
  }
  return quotient;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars)
    : rows_(rows), cols_(cols), num_vars_(num_vars), data_(rows * cols, LaurentPoly(num_vars)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t num_vars) {
  PolyMatrix m(n, n, num_vars);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(num_vars, 1);
  return m;
}

LaurentPoly det_ring(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_ring: matrix is not square");
  const std::size_t n = m.rows();
  if (n > 20) throw std::invalid_argument("det_ring: matrix too large for subset expansion");
  const std::size_t nv = m.num_vars();
  if (n == 0) return LaurentPoly::constant(nv, 1);

  // minors[mask] = det of rows 0..popcount(mask)-1 restricted to columns in mask.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<LaurentPoly> minors(full + 1, LaurentPoly(nv));
  minors[0] = LaurentPoly::constant(nv, 1);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    const std::size_t row = k - 1;
    LaurentPoly acc(nv);
    std::size_t position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const LaurentPoly& entry = m(row, j);
      const LaurentPoly& minor = minors[mask & ~(std::size_t{1} << j)];
      if (!entry.is_zero() && !minor.is_zero()) {
        if ((row + position) % 2 == 0) {
          acc += entry * minor;
        } else {
          acc -= entry * minor;
        }
      }
      ++position;
    }
    minors[mask] = std::move(acc);
  }
  return minors[full];
}

long ExponentFunctional::operator()(const Exponent& e) const {
  if (e.size() != weights.size())
    throw std::invalid_argument("ExponentFunctional: length mismatch");
  long v = 0;
  for (std::size_t i = 0; i < e.size(); ++i) v += weights[i] * e[i];
  return v;
}

UniPoly specialize(const LaurentPoly& p, const ExponentFunctional& u) {
  std::vector<Integer> coeffs;
  for (const auto& [e, c] : p.terms()) {
    const long k = u(e);
    if (k < 0) throw std::domain_error("specialize: monomial receives negative exponent " + std::to_string(k));
    const auto idx = static_cast<std::size_t>(k);
    if (coeffs.size() <= idx) coeffs.resize(idx + 1, Integer(0));
    coeffs[idx] += c;
  }
  return UniPoly(std::move(coeffs));
}

LaurentPoly invert_vars(const LaurentPoly& p) {
  LaurentPoly out(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    Exponent neg = e;
    for (auto& x : neg) x = -x;
    out.add_term(neg, c);
  }
  return out;
}

std::optional<SymmetryWitness> symmetry_witness(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("symmetry_witness: zero polynomial");
  const std::size_t n = p.num_vars();
  Exponent lo = p.terms().begin()->first;
  Exponent hi = lo;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], e[i]);
      hi[i] = std::max(hi[i], e[i]);
    }
  Exponent h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = lo[i] + hi[i];
  const LaurentPoly mirrored = invert_vars(p).shifted(h);
  if (mirrored == p) return SymmetryWitness{1, h};
  if (-mirrored == p) return SymmetryWitness{-1, h};
  return std::nullopt;
}

std::vector<Point2> support_hull_2d(const LaurentPoly& p) {
  if (p.num_vars() != 2) throw std::invalid_argument("support_hull_2d: need exactly two variables");
  if (p.is_zero()) throw std::invalid_argument("support_hull_2d: zero polynomial");
  std::vector<Point2> pts;
  for (const auto& [e, c] : p.terms()) pts.push_back({e[0], e[1]});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  auto cross = [](const Point2& o, const Point2& a, const Point2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& pt : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
    hull[k++] = pt;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<std::string> deck_variable_names(std::size_t r) {
  if (r == 1) return {"v"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= r; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

std::vector<std::string> zeta_variable_names(std::size_t r) {
  auto names = deck_variable_names(r);
  names.push_back("t");
  return names;
}

namespace {

class LaurentParser {
 public:
  LaurentParser(const std::string& text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  LaurentPoly parse() {
    LaurentPoly out(names_.size());
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      out.add_term(e, sign * c);
      skip_space();
    }
    return out;
  }

 private:
  std::pair<Exponent, Integer> term() {
    Exponent e(names_.size(), 0);
    Integer c = 1;
    for (;;) {
      skip_space();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c *= integer();
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += get();
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) fail("unknown variable '" + name + "'");
        long power = 1;
        skip_space();
        if (peek() == '^') {
          get();
          skip_space();
          bool neg = false;
          if (peek() == '-') {
            neg = true;
            get();
          }
          power = integer().get_si();
          if (neg) power = -power;
        }
        e[static_cast<std::size_t>(it - names_.begin())] += power;
      } else {
        fail("expected a coefficient or variable");
      }
      skip_space();
      if (peek() != '*') break;
      get();
    }
    return {e, c};
  }

  Integer integer() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    if (digits.empty()) fail("expected digits");
    return Integer(digits);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "polynomial, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  const std::string& text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text, const std::vector<std::string>& names) {
  return LaurentParser(text, names).parse();
}

}  // namespace flowzeta
