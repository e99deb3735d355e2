#include "slicekit/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace slicekit {

namespace {

/// Quotient with remainder of minimal absolute value: a = q*b + r with
/// |r| <= |b|/2. Keeps entry growth under control during elimination.
Int nearest_quotient(const Int& a, const Int& b) {
  Int q = a / b;  // truncated
  Int r = a - q * b;
  if (2 * abs(r) > abs(b)) {
    q += (r > 0) == (b > 0) ? 1 : -1;
  }
  return q;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(
    const std::vector<std::vector<long long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw invalid_input("IntMatrix: ragged row lengths");
    }
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw invalid_input("IntMatrix: size mismatch");
  IntMatrix result(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& lhs = at(i, k);
      if (lhs == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        result.at(i, j) += lhs * other.at(k, j);
      }
    }
  }
  return result;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw invalid_input("IntMatrix: size mismatch");
  }
  IntMatrix result = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    result.data_[i] += other.data_[i];
  }
  return result;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw invalid_input("IntMatrix: size mismatch");
  }
  IntMatrix result = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    result.data_[i] -= other.data_[i];
  }
  return result;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix result(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) result.at(j, i) = at(i, j);
  }
  return result;
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const {
  if (rows_ != right.rows_) throw invalid_input("hstack: row count mismatch");
  IntMatrix result(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) result.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) {
      result.at(i, cols_ + j) = right.at(i, j);
    }
  }
  return result;
}

IntMatrix IntMatrix::top_rows(std::size_t count) const {
  if (count > rows_) throw invalid_input("top_rows: out of range");
  IntMatrix result(count, cols_);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) result.at(i, j) = at(i, j);
  }
  return result;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw invalid_input("columns: out of range");
  IntMatrix result(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      result.at(i, j) = at(i, first + j);
    }
  }
  return result;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += q * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += q * at(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

std::string IntMatrix::to_text() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) out << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out << ' ';
      out << at(i, j);
    }
  }
  out << ']';
  return out.str();
}

std::vector<Int> SmithResult::nonzero_diagonal() const {
  std::vector<Int> diag;
  for (std::size_t i = 0; i < rank; ++i) diag.push_back(d.at(i, i));
  return diag;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithResult result{IntMatrix::identity(rows), m, IntMatrix::identity(cols),
                     0};
  IntMatrix& u = result.u;
  IntMatrix& d = result.d;
  IntMatrix& v = result.v;

  const std::size_t bound = std::min(rows, cols);
  std::size_t t = 0;
  while (t < bound) {
    // Minimal-absolute-value pivot over the remaining submatrix.
    std::size_t pr = t, pc = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (d.at(i, j) == 0) continue;
        if (!found || abs(d.at(i, j)) < abs(d.at(pr, pc))) {
          pr = i;
          pc = j;
          found = true;
        }
      }
    }
    if (!found) break;
    d.swap_rows(t, pr);
    u.swap_rows(t, pr);
    d.swap_cols(t, pc);
    v.swap_cols(t, pc);

    // Clear row t and column t. A nonzero remainder becomes a strictly
    // smaller pivot, so this terminates.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = nearest_quotient(d.at(i, t), d.at(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d.at(i, t) != 0) {
          d.swap_rows(t, i);
          u.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = nearest_quotient(d.at(t, j), d.at(t, t));
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d.at(t, j) != 0) {
          d.swap_cols(t, j);
          v.swap_cols(t, j);
          clean = false;
        }
      }
    }

    // Enforce the divisibility chain: fold any entry the pivot does not
    // divide into row t and re-eliminate.
    bool divides_all = true;
    for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d.at(i, j) % d.at(t, t) != 0) {
          d.add_row_multiple(t, i, 1);
          u.add_row_multiple(t, i, 1);
          divides_all = false;
          break;
        }
      }
    }
    if (divides_all) ++t;
  }

  for (std::size_t i = 0; i < bound; ++i) {
    if (d.at(i, i) < 0) {
      d.negate_row(i);
      u.negate_row(i);
    }
    if (d.at(i, i) != 0) result.rank = i + 1;
  }
  return result;
}

std::optional<IntMatrix> solve_columns(const IntMatrix& a,
                                       const IntMatrix& b) {
  if (a.rows() != b.rows()) {
    throw invalid_input("solve_columns: row count mismatch");
  }
  SmithResult snf = smith_normal_form(a);
  IntMatrix c = snf.u * b;
  IntMatrix y(a.cols(), b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t i = 0; i < snf.rank; ++i) {
      if (c.at(i, col) % snf.d.at(i, i) != 0) return std::nullopt;
      y.at(i, col) = c.at(i, col) / snf.d.at(i, i);
    }
    for (std::size_t i = snf.rank; i < a.rows(); ++i) {
      if (c.at(i, col) != 0) return std::nullopt;
    }
  }
  return snf.v * y;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SmithResult snf = smith_normal_form(m);
  // m*x = 0 iff d*(v^-1 x) = 0 iff the first rank coordinates of v^-1 x
  // vanish, so the trailing columns of v form a primitive kernel basis.
  return snf.v.columns(snf.rank, m.cols() - snf.rank);
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw invalid_input("determinant: matrix not square");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a.at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) =
            (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace slicekit
