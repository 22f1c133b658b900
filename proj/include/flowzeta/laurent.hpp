#pragma once

// Sparse multivariate Laurent polynomials over Z: the group ring
// Z[v1^{+-1}, ..., vr^{+-1}, t^{+-1}] in which the zeta function lives.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowzeta/integer.hpp"
#include "flowzeta/unipoly.hpp"

namespace flowzeta {

using Exponent = std::vector<long>;

/// Total degree first, then lexicographic. Translation invariant, so the
/// largest term of a product is the product of the largest terms.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Integer, GradedLex>;

  explicit LaurentPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static LaurentPoly constant(std::size_t num_vars, const Integer& c);
  static LaurentPoly monomial(Exponent exponent, const Integer& coeff = 1);
  static LaurentPoly variable(std::size_t num_vars, std::size_t index, long power = 1);

  std::size_t num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Integer coefficient(const Exponent& e) const;
  Integer constant_term() const { return coefficient(Exponent(num_vars_, 0)); }

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Integer& c);

  /// Multiplication by the unit x^e.
  LaurentPoly shifted(const Exponent& e) const;
  /// Appends `extra` variables that do not occur.
  LaurentPoly with_extra_vars(std::size_t extra) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Integer& c, const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Ascending term order; `names.size()` must equal num_vars.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_compatible(const LaurentPoly& o) const;
  friend LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

  std::size_t num_vars_;
  TermMap terms_;
};

/// Division did not come out exact.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// r with q * r == p. Throws InexactDivision when no such r exists and
/// std::invalid_argument when q is zero.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// Dense matrix over the Laurent ring; every entry shares num_vars.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars);

  static PolyMatrix identity(std::size_t n, std::size_t num_vars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t num_vars() const { return num_vars_; }

  LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t num_vars_ = 0;
  std::vector<LaurentPoly> data_;
};

/// Exact determinant by Laplace expansion memoized over column subsets.
/// Throws std::invalid_argument for non-square input or n > 20.
LaurentPoly det_ring(const PolyMatrix& m);

/// Values a cohomology class assigns to each variable.
struct ExponentFunctional {
  std::vector<long> weights;

  long operator()(const Exponent& e) const;
};

/// Replaces c * x^e by c * t^{u(e)}. Throws std::domain_error when some
/// monomial gets a negative value.
UniPoly specialize(const LaurentPoly& p, const ExponentFunctional& u);

LaurentPoly invert_vars(const LaurentPoly& p);

struct SymmetryWitness {
  int sign = 1;
  Exponent shift;

  friend bool operator==(const SymmetryWitness&, const SymmetryWitness&) = default;
};

/// (s, h) with s * x^h * invert_vars(p) == p, where h is the per-variable
/// sum of the minimum and maximum support exponents; nullopt if that fails.
std::optional<SymmetryWitness> symmetry_witness(const LaurentPoly& p);

using Point2 = std::array<long, 2>;

/// Convex hull of the support, counterclockwise from the lexicographic
/// minimum, collinear points dropped.
std::vector<Point2> support_hull_2d(const LaurentPoly& p);

/// {"v", "t"} for r == 1, {"v1", ..., "vr", "t"} otherwise.
std::vector<std::string> zeta_variable_names(std::size_t r);
/// Names for the deck variables alone: {"v"} or {"v1", ..., "vr"}.
std::vector<std::string> deck_variable_names(std::size_t r);

/// Parses the text form produced by to_string. Throws ParseError.
LaurentPoly parse_laurent(const std::string& text, const std::vector<std::string>& names);

}  // namespace flowzeta
