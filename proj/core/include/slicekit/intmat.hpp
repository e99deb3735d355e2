#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slicekit/errors.hpp"

namespace slicekit {

/// Exact arbitrary-precision integer; no overflow anywhere in the group
/// and Mackey calculus.
using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
  }
  bool operator!=(const IntMatrix& other) const { return !(*this == other); }

  bool is_zero() const;

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;

  IntMatrix transposed() const;

  /// [this | right], matching row counts.
  IntMatrix hstack(const IntMatrix& right) const;

  /// Rows [0, count) as a new matrix.
  IntMatrix top_rows(std::size_t count) const;

  /// Columns [first, first + count) as a new matrix.
  IntMatrix columns(std::size_t first, std::size_t count) const;

  IntMatrix column(std::size_t j) const { return columns(j, 1); }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += q * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);
  /// col[dst] += q * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);
  void negate_row(std::size_t r);

  std::string to_text() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Smith normal form u * m * v = d with u, v unimodular and d diagonal,
/// d_1 | d_2 | ... | d_rank > 0, all later diagonal entries zero.
struct SmithResult {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::size_t rank = 0;

  /// The positive diagonal entries d_1, ..., d_rank.
  std::vector<Int> nonzero_diagonal() const;
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Integer solution x of a * x = b (one column of x per column of b), or
/// nullopt when no solution exists over the integers.
std::optional<IntMatrix> solve_columns(const IntMatrix& a, const IntMatrix& b);

/// Basis of the lattice {x : m * x = 0}, one basis vector per column. The
/// basis is primitive: every integer solution is an integer combination.
IntMatrix integer_kernel(const IntMatrix& m);

/// Exact determinant (Bareiss), square matrices only.
Int determinant(const IntMatrix& m);

}  // namespace slicekit
