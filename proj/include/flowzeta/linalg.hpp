#pragma once

// Exact integer linear algebra: determinants, Smith normal form with
// unimodular certificates, and cokernel structure.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "flowzeta/integer.hpp"

namespace flowzeta {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<Integer>& entries() const { return data_; }
  std::vector<Integer> row(std::size_t i) const;

  bool is_zero() const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Fraction-free (Bareiss) determinant. Throws std::invalid_argument when
/// the matrix is not square.
Integer determinant(const IntMatrix& m);

struct SnfResult {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal
  IntMatrix V;  // cols x cols, unimodular

  /// d_1, d_2, ... for i < min(rows, cols).
  std::vector<Integer> diagonal() const;
};

/// U * M * V == D with D diagonal, nonnegative, and d_i | d_{i+1}
/// (zeros last). Pivots on the least-absolute nonzero entry.
SnfResult smith_normal_form(const IntMatrix& m);

struct CokernelStructure {
  std::vector<Integer> torsion_invariants;
  std::size_t free_rank = 0;
  /// free_rank x rows(M); kills the image of M.
  IntMatrix projection;
};

/// coker(M: Z^cols -> Z^rows).
CokernelStructure cokernel(const IntMatrix& m);

/// Rescale a rank-one projection by +-1 so that basis element `designated`
/// maps to +1. Throws std::invalid_argument when the free rank is not one
/// or the designated element does not generate the free quotient.
CokernelStructure normalize_projection(CokernelStructure c, std::size_t designated);

/// Whitespace-separated rows, one per line. Blank lines and lines starting
/// with '#' are skipped. Throws ParseError on ragged or malformed rows.
IntMatrix parse_int_matrix(const std::string& text);

}  // namespace flowzeta
