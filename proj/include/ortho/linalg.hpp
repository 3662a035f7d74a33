#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ortho/rational.hpp"

namespace ortho {

using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;

inline Rational det2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return a * d - b * c;
}

inline Rational det3(const RatMatrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Reduced row echelon form by Gauss-Jordan elimination. Pivot selection is
// "first nonzero"; over exact rationals any nonzero pivot is fine.
struct Echelon {
  RatMatrix m;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
  std::size_t rank = 0;
};

inline Echelon reduce(RatMatrix m) {
  Echelon e;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = Rational(1) / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.rank = row;
  e.m = std::move(m);
  return e;
}

inline std::size_t rank_of(const RatMatrix& m) { return reduce(m).rank; }

// Any particular solution of A x = b, or nullopt when inconsistent.
// Free variables are set to zero.
inline std::optional<RatRow> solve(const RatMatrix& a, const RatRow& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  RatMatrix aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  Echelon e = reduce(std::move(aug));
  for (std::size_t i = 0; i < e.rank; ++i)
    if (e.pivots[i] == cols) return std::nullopt;
  RatRow x(cols, Rational(0));
  for (std::size_t i = 0; i < e.rank; ++i) x[e.pivots[i]] = e.m[i][cols];
  return x;
}

// Basis of the kernel of A acting on `cols` variables; one basis vector per
// free column, with that free variable set to one.
inline std::vector<RatRow> nullspace(const RatMatrix& a, std::size_t cols) {
  Echelon e = reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t col : e.pivots) is_pivot[col] = true;
  std::vector<RatRow> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatRow v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ortho
