#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "destack/int_matrix.hpp"

namespace destack {

// Column-operation Hermite form. For a square nonsingular input the result is
// upper triangular with a_ii > 0 and a_ii > a_ij >= 0 for j > i; the general
// full-column-rank case places the pivot of column j at a strictly increasing
// row, with the same row-wise reduction at pivot rows. Columns that never
// receive a pivot come out identically zero (rank-deficient input) and sit at
// the left; their transformation columns span the kernel.
struct Echelon {
  IntMatrix h;  // h = m * u
  IntMatrix u;  // unimodular
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col), col descending
};

namespace detail {

inline void combineColumns(IntMatrix& h, IntMatrix& u, std::size_t row, std::size_t p,
                           std::size_t c) {
  // Unimodular transform on columns (p, c) making h(row,p) = gcd, h(row,c) = 0.
  Int a = h(row, p), b = h(row, c);
  if (b == 0) return;
  Int g, s, t;
  extGcd(a, b, g, s, t);
  Int ag = a / g, bg = b / g;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    Int hp = h(i, p), hc = h(i, c);
    h(i, p) = s * hp + t * hc;
    h(i, c) = ag * hc - bg * hp;
  }
  for (std::size_t i = 0; i < u.rows(); ++i) {
    Int up = u(i, p), uc = u(i, c);
    u(i, p) = s * up + t * uc;
    u(i, c) = ag * uc - bg * up;
  }
}

inline void negateColumn(IntMatrix& h, IntMatrix& u, std::size_t c) {
  for (std::size_t i = 0; i < h.rows(); ++i) h(i, c) = -h(i, c);
  for (std::size_t i = 0; i < u.rows(); ++i) u(i, c) = -u(i, c);
}

inline void reduceRightOfPivot(IntMatrix& h, IntMatrix& u, std::size_t row, std::size_t p) {
  for (std::size_t c = p + 1; c < h.cols(); ++c) {
    Int q = floorDiv(h(row, c), h(row, p));
    if (q == 0) continue;
    for (std::size_t i = 0; i < h.rows(); ++i) h(i, c) -= q * h(i, p);
    for (std::size_t i = 0; i < u.rows(); ++i) u(i, c) -= q * u(i, p);
  }
}

}  // namespace detail

inline Echelon columnEchelon(IntMatrix m) {
  Echelon e;
  std::size_t c = m.cols();
  IntMatrix u = IntMatrix::identity(c);
  std::size_t act = c;  // columns 0..act-1 still unpivoted
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  for (std::size_t ri = m.rows(); ri-- > 0 && act > 0;) {
    bool any = false;
    for (std::size_t j = 0; j < act; ++j)
      if (m(ri, j) != 0) {
        any = true;
        break;
      }
    if (!any) continue;
    for (std::size_t j = 0; j + 1 < act; ++j)
      detail::combineColumns(m, u, ri, act - 1, j);
    if (m(ri, act - 1) < 0) detail::negateColumn(m, u, act - 1);
    pivots.emplace_back(ri, act - 1);
    --act;
  }
  // Reduce entries to the right of each pivot, deepest pivot row first.
  for (const auto& [row, col] : pivots) detail::reduceRightOfPivot(m, u, row, col);
  std::reverse(pivots.begin(), pivots.end());  // now col ascending
  e.h = std::move(m);
  e.u = std::move(u);
  e.pivots = std::move(pivots);
  return e;
}

struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
};

// Hermite normal form by column operations, h = m*u. Requires full column
// rank; the square case is upper triangular with positive diagonal dominating
// the reduced entries to its right.
inline HermiteForm hnf(const IntMatrix& m) {
  Echelon e = columnEchelon(m);
  require(e.pivots.size() == m.cols(), Errc::RankDeficient,
          "matrix lacks full column rank: " + m.str());
  return HermiteForm{std::move(e.h), std::move(e.u)};
}

inline std::size_t rank(const IntMatrix& m) { return columnEchelon(m).pivots.size(); }

// Basis of the integer kernel {x : m x = 0}, one column per basis vector.
inline IntMatrix kernelBasis(const IntMatrix& m) {
  Echelon e = columnEchelon(m);
  std::size_t k = m.cols() - e.pivots.size();
  std::vector<std::size_t> zeroCols(k);
  for (std::size_t j = 0; j < k; ++j) zeroCols[j] = j;  // unpivoted columns sit leftmost
  return e.u.selectColumns(zeroCols);
}

// Determinant of a square matrix via fraction-free elimination on a copy.
inline Int determinant(IntMatrix m) {
  require(m.rows() == m.cols(), Errc::Precondition, "determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

struct SmithForm {
  IntMatrix d;  // diagonal, d = u * m * v, invariant factors d_1 | d_2 | ...
  IntMatrix u;  // unimodular, rows
  IntMatrix v;  // unimodular, cols
};

inline SmithForm snf(IntMatrix m) {
  std::size_t r = m.rows(), c = m.cols();
  IntMatrix u = IntMatrix::identity(r), v = IntMatrix::identity(c);

  auto swapRows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < c; ++j) std::swap(m(a, j), m(b, j));
    for (std::size_t j = 0; j < r; ++j) std::swap(u(a, j), u(b, j));
  };
  auto swapCols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < r; ++i) std::swap(m(i, a), m(i, b));
    for (std::size_t i = 0; i < c; ++i) std::swap(v(i, a), v(i, b));
  };
  auto rowCombine = [&](std::size_t t, std::size_t i) {
    // make m(t, t) = gcd(m(t,t), m(i,t)) and m(i,t) = 0
    Int g, s, w;
    extGcd(m(t, t), m(i, t), g, s, w);
    Int at = m(t, t) / g, ai = m(i, t) / g;
    for (std::size_t j = 0; j < c; ++j) {
      Int mt = m(t, j), mi = m(i, j);
      m(t, j) = s * mt + w * mi;
      m(i, j) = at * mi - ai * mt;
    }
    for (std::size_t j = 0; j < r; ++j) {
      Int ut = u(t, j), ui = u(i, j);
      u(t, j) = s * ut + w * ui;
      u(i, j) = at * ui - ai * ut;
    }
  };
  auto colCombine = [&](std::size_t t, std::size_t j) {
    Int g, s, w;
    extGcd(m(t, t), m(t, j), g, s, w);
    Int at = m(t, t) / g, aj = m(t, j) / g;
    for (std::size_t i = 0; i < r; ++i) {
      Int mt = m(i, t), mj = m(i, j);
      m(i, t) = s * mt + w * mj;
      m(i, j) = at * mj - aj * mt;
    }
    for (std::size_t i = 0; i < c; ++i) {
      Int vt = v(i, t), vj = v(i, j);
      v(i, t) = s * vt + w * vj;
      v(i, j) = at * vj - aj * vt;
    }
  };

  std::size_t n = std::min(r, c);
  for (std::size_t t = 0; t < n; ++t) {
    // find a nonzero entry in the trailing submatrix
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < r && !found; ++i)
      for (std::size_t j = t; j < c && !found; ++j)
        if (m(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != t) swapRows(t, pi);
    if (pj != t) swapCols(t, pj);
    for (;;) {
      for (std::size_t i = t + 1; i < r; ++i)
        if (m(i, t) != 0) rowCombine(t, i);
      bool rowClear = true;
      for (std::size_t j = t + 1; j < c; ++j)
        if (m(t, j) != 0) {
          colCombine(t, j);
          rowClear = false;
        }
      if (!rowClear) continue;  // column may be dirty again
      bool colClear = true;
      for (std::size_t i = t + 1; i < r; ++i)
        if (m(i, t) != 0) colClear = false;
      if (!colClear) continue;
      // enforce divisibility of the trailing block by m(t,t)
      bool fixed = true;
      for (std::size_t i = t + 1; i < r && fixed; ++i)
        for (std::size_t j = t + 1; j < c && fixed; ++j)
          if (m(i, j) % m(t, t) != 0) {
            for (std::size_t jj = 0; jj < c; ++jj) m(t, jj) += m(i, jj);
            for (std::size_t jj = 0; jj < r; ++jj) u(t, jj) += u(i, jj);
            fixed = false;
          }
      if (fixed) break;
    }
    if (m(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) m(t, j) = -m(t, j);
      for (std::size_t j = 0; j < r; ++j) u(t, j) = -u(t, j);
    }
  }
  return SmithForm{std::move(m), std::move(u), std::move(v)};
}

// Integer solution x of (columns of m) * x = target, if one exists.
inline std::optional<std::vector<Int>> solveInColumnSpan(const IntMatrix& m,
                                                         const std::vector<Int>& target) {
  require(target.size() == m.rows(), Errc::Precondition, "target length mismatch");
  Echelon e = columnEchelon(m);
  std::vector<Int> rhs = target;
  std::vector<Int> y(m.cols());
  // pivots have strictly decreasing rows as column decreases; solve from the
  // deepest pivot upwards
  for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
    auto [row, col] = *it;
    Int num = rhs[row];
    if (num % e.h(row, col) != 0) return std::nullopt;
    Int q = num / e.h(row, col);
    y[col] = q;
    if (q != 0)
      for (std::size_t i = 0; i < m.rows(); ++i) rhs[i] -= q * e.h(i, col);
  }
  for (const Int& x : rhs)
    if (x != 0) return std::nullopt;
  return e.u.apply(y);
}

inline bool inColumnSpan(const IntMatrix& m, const std::vector<Int>& target) {
  return solveInColumnSpan(m, target).has_value();
}

// Canonical basis (paper-convention Hermite form) of the lattice generated by
// the columns of m, restricted to its actual rank; full-rank square output
// when the lattice has full rank.
inline IntMatrix latticeBasis(const IntMatrix& m) {
  Echelon e = columnEchelon(m);
  std::size_t rk = e.pivots.size();
  std::vector<std::size_t> idx(rk);
  for (std::size_t j = 0; j < rk; ++j) idx[j] = m.cols() - rk + j;
  return e.h.selectColumns(idx);
}

}  // namespace destack
