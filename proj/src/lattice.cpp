#include "toric/lattice.hpp"

#include <sstream>
#include <utility>

#include "toric/errors.hpp"

namespace toric {

bool is_zero(std::span<const Integer> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Integer content(std::span<const Integer> v) {
  Integer g;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

LatticeVector primitive_vector(std::span<const Integer> v) {
  if (is_zero(v)) throw PreconditionError("primitive_vector: zero vector has no primitive generator");
  const Integer g = content(v);
  LatticeVector out(v.begin(), v.end());
  if (g != Integer(1)) {
    for (auto& x : out) x /= g;
  }
  return out;
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const LatticeVector> columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InvalidInput("IntMatrix::from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

LatticeVector IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_) throw InvalidInput("IntMatrix::apply: dimension mismatch");
  LatticeVector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Integer& e = (*this)(r, c);
      if (!e.is_zero()) out[r] += e * v[c];
    }
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("IntMatrix::operator*: dimension mismatch");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        if (!o(k, c).is_zero()) out(r, c) += a * o(k, c);
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::sub_row_multiple(std::size_t dst, std::size_t src, Integer factor) {
  if (factor.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Integer& s = (*this)(src, c);
    if (!s.is_zero()) (*this)(dst, c) -= factor * s;
  }
}

void IntMatrix::sub_col_multiple(std::size_t dst, std::size_t src, Integer factor) {
  if (factor.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Integer& s = (*this)(r, src);
    if (!s.is_zero()) (*this)(r, dst) -= factor * s;
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InvalidInput("determinant: matrix is not square");
  if (n == 0) return Integer(1);
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return Integer(0);
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  Integer det = m(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InvalidInput("unimodular_inverse: matrix is not square");
  IntMatrix a = m;
  IntMatrix inv = IntMatrix::identity(n);
  auto row_sub = [&](std::size_t dst, std::size_t src, Integer q) {
    a.sub_row_multiple(dst, src, q);
    inv.sub_row_multiple(dst, src, q);
  };
  for (std::size_t c = 0; c < n; ++c) {
    // Euclid on column c until only the pivot row is nonzero below the diagonal.
    for (;;) {
      std::size_t best = n;
      for (std::size_t r = c; r < n; ++r) {
        if (a(r, c).is_zero()) continue;
        if (best == n || abs(a(r, c)) < abs(a(best, c))) best = r;
      }
      if (best == n) return std::nullopt;
      a.swap_rows(c, best);
      inv.swap_rows(c, best);
      bool clear = true;
      for (std::size_t r = c + 1; r < n; ++r) {
        if (a(r, c).is_zero()) continue;
        row_sub(r, c, a(r, c) / a(c, c));
        if (!a(r, c).is_zero()) clear = false;
      }
      if (clear) break;
    }
    if (abs(a(c, c)) != Integer(1)) return std::nullopt;
    if (a(c, c).sign() < 0) {
      a.negate_row(c);
      inv.negate_row(c);
    }
  }
  for (std::size_t c = n; c-- > 0;) {
    for (std::size_t r = 0; r < c; ++r) {
      if (!a(r, c).is_zero()) row_sub(r, c, a(r, c));
    }
  }
  return inv;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  SmithForm out{input, IntMatrix::identity(input.rows()), IntMatrix::identity(input.cols()), {}};
  IntMatrix& d = out.d;
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  const std::size_t steps = rows < cols ? rows : cols;

  auto row_sub = [&](std::size_t dst, std::size_t src, Integer q) {
    d.sub_row_multiple(dst, src, q);
    out.u.sub_row_multiple(dst, src, q);
  };
  auto col_sub = [&](std::size_t dst, std::size_t src, Integer q) {
    d.sub_col_multiple(dst, src, q);
    out.v.sub_col_multiple(dst, src, q);
  };

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t br = rows, bc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (d(r, c).is_zero()) continue;
          if (br == rows || abs(d(r, c)) < abs(d(br, bc))) {
            br = r;
            bc = c;
          }
        }
      }
      if (br == rows) break;  // trailing block is zero
      d.swap_rows(t, br);
      out.u.swap_rows(t, br);
      d.swap_cols(t, bc);
      out.v.swap_cols(t, bc);

      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (d(r, t).is_zero()) continue;
        row_sub(r, t, d(r, t) / d(t, t));
        if (!d(r, t).is_zero()) dirty = true;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (d(t, c).is_zero()) continue;
        col_sub(c, t, d(t, c) / d(t, t));
        if (!d(t, c).is_zero()) dirty = true;
      }
      if (dirty) continue;

      // Enforce the divisibility chain on the remaining block.
      std::size_t offender = rows;
      for (std::size_t r = t + 1; r < rows && offender == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (!(d(r, c) % d(t, t)).is_zero()) {
            offender = r;
            break;
          }
        }
      }
      if (offender == rows) break;
      // row t += row offender
      row_sub(t, offender, Integer(-1));
    }
    if (d(t, t).sign() < 0) {
      d.negate_row(t);
      out.u.negate_row(t);
    }
  }
  out.diagonal.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(d(t, t));
  return out;
}

}  // namespace toric
