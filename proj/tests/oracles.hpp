#pragma once

// Independent reference computations used only by the tests. None of these
// go through IntMatrix inverses or Smith forms.

#include <cstdint>
#include <optional>
#include <vector>

#include "toric/fan.hpp"
#include "toric/invariants.hpp"

namespace toric::oracle {

/// Laplace expansion along the first row.
inline Integer laplace_determinant(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Integer(1);
  if (n == 1) return m[0][0];
  Integer det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][c] * laplace_determinant(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

/// Searches coefficients a in [-bound, bound]^(n-1) with u + u' + sum a_i v_i = 0.
inline std::optional<std::vector<Integer>> brute_force_relation(const Fan& f, const Wall& w, int bound) {
  const std::size_t k = w.rays.size();
  std::vector<int> a(k, -bound);
  for (;;) {
    bool zero = true;
    for (std::size_t c = 0; c < f.dim() && zero; ++c) {
      Integer s = f.ray(w.extra_rays[0])[c] + f.ray(w.extra_rays[1])[c];
      for (std::size_t i = 0; i < k; ++i) s += Integer(a[i]) * f.ray(w.rays[i])[c];
      zero = s.is_zero();
    }
    if (zero) {
      std::vector<Integer> out;
      for (int x : a) out.emplace_back(x);
      return out;
    }
    std::size_t i = 0;
    while (i < k && a[i] == bound) a[i++] = -bound;
    if (i == k) return std::nullopt;
    ++a[i];
  }
}

/// Solves A x = b for a unimodular A by Cramer's rule with Laplace
/// determinants (small n only).
inline std::vector<Integer> cramer_solve(const std::vector<std::vector<Integer>>& a, const std::vector<Integer>& b) {
  const Integer det = laplace_determinant(a);
  std::vector<Integer> x;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto ai = a;
    for (std::size_t r = 0; r < a.size(); ++r) ai[r][i] = b[r];
    x.push_back(laplace_determinant(ai) / det);
  }
  return x;
}

/// Divisibility of the class of d in Pic: move d to a representative vanishing
/// on the rays of maximal cone 0 (subtract div(chi^m) with <m, v_i> = d_i
/// there); the remaining coefficients are coordinates in a basis of Pic.
inline Integer index_by_cone_normalization(const Fan& f, const ToricDivisor& d) {
  const Cone& sigma = f.max_cone(0);
  const std::size_t n = f.dim();
  std::vector<std::vector<Integer>> rows;  // rows = rays of sigma, so rows * m = d|sigma
  std::vector<Integer> rhs;
  for (auto i : sigma) {
    rows.push_back(f.ray(i));
    rhs.push_back(d.coeffs[i]);
  }
  const std::vector<Integer> m = cramer_solve(rows, rhs);
  Integer g;
  for (std::size_t rho = 0; rho < f.num_rays(); ++rho) {
    Integer pairing;
    for (std::size_t c = 0; c < n; ++c) pairing += m[c] * f.ray(rho)[c];
    g = gcd(g, d.coeffs[rho] - pairing);
  }
  return g;
}

}  // namespace toric::oracle
