#include "flowzeta/linalg.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "flowzeta/parse_error.hpp"

namespace flowzeta {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("IntMatrix: entry count does not match shape");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& z) { return z == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("IntMatrix: shape mismatch in difference");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os;
}

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> SnfResult::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Least |entry| among nonzero entries of the trailing block starting at (t, t).
std::optional<Position> least_in_block(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      if (!best || mpz_cmpabs(d(i, j).get_mpz_t(), d(best->row, best->col).get_mpz_t()) < 0) best = Position{i, j};
    }
  return best;
}

// Least |entry| among the nonzero entries of row t and column t of the block.
Position least_in_cross(const IntMatrix& d, std::size_t t) {
  Position best{t, t};
  auto consider = [&](std::size_t i, std::size_t j) {
    if (d(i, j) == 0) return;
    if (d(best.row, best.col) == 0 || mpz_cmpabs(d(i, j).get_mpz_t(), d(best.row, best.col).get_mpz_t()) < 0)
      best = Position{i, j};
  };
  for (std::size_t i = t; i < d.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < d.cols(); ++j) consider(t, j);
  return best;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfResult r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& D = r.D;
  IntMatrix& U = r.U;
  IntMatrix& V = r.V;

  auto move_to_pivot = [&](std::size_t t, Position p) {
    D.swap_rows(t, p.row);
    U.swap_rows(t, p.row);
    D.swap_cols(t, p.col);
    V.swap_cols(t, p.col);
  };

  const std::size_t limit = std::min(D.rows(), D.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    auto start = least_in_block(D, t);
    if (!start) break;
    move_to_pivot(t, *start);

    for (;;) {
      bool remainder_left = false;
      for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (D(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) remainder_left = true;
      }
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (D(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) remainder_left = true;
      }
      if (remainder_left) {
        move_to_pivot(t, least_in_cross(D, t));
        continue;
      }

      // Row and column are clear; enforce d_t | every remaining entry.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < D.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < D.cols(); ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      D.add_row_multiple(t, *offending, Integer(1));
      U.add_row_multiple(t, *offending, Integer(1));
    }

    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return r;
}

namespace {

void normalize_row_sign(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(i, j) == 0) continue;
    if (m(i, j) < 0) m.negate_row(i);
    return;
  }
}

}  // namespace

CokernelStructure cokernel(const IntMatrix& m) {
  const SnfResult snf = smith_normal_form(m);
  CokernelStructure c;
  std::size_t rank = 0;
  for (const Integer& d : snf.diagonal()) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) c.torsion_invariants.push_back(d);
  }
  c.free_rank = m.rows() - rank;
  c.projection = IntMatrix(c.free_rank, m.rows());
  for (std::size_t k = 0; k < c.free_rank; ++k) {
    for (std::size_t j = 0; j < m.rows(); ++j) c.projection(k, j) = snf.U(rank + k, j);
    normalize_row_sign(c.projection, k);
  }
  return c;
}

CokernelStructure normalize_projection(CokernelStructure c, std::size_t designated) {
  if (c.free_rank != 1) {
    throw std::invalid_argument("normalize_projection: free rank is " +
                                std::to_string(c.free_rank) + ", expected 1");
  }
  if (designated >= c.projection.cols()) {
    throw std::invalid_argument("normalize_projection: designated index out of range");
  }
  const Integer value = c.projection(0, designated);
  if (value == -1) {
    c.projection.negate_row(0);
  } else if (value != 1) {
    throw std::invalid_argument("normalize_projection: basis element " +
                                std::to_string(designated) +
                                " does not generate the free quotient (value " +
                                value.get_str() + ")");
  }
  return c;
}

IntMatrix parse_int_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::vector<Integer> entries;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string token;
    std::size_t count = 0;
    while (fields >> token) {
      Integer v;
      if (v.set_str(token, 10) != 0) throw ParseError(line_no, "not an integer: '" + token + "'");
      entries.push_back(std::move(v));
      ++count;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw ParseError(line_no, "ragged row: expected " + std::to_string(cols) +
                                    " entries, found " + std::to_string(count));
    }
    ++rows;
  }
  if (rows == 0) throw ParseError(0, "empty matrix");
  return IntMatrix(rows, cols, std::move(entries));
}

}  // namespace flowzeta
