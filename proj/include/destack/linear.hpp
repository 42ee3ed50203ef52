#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "destack/int_matrix.hpp"

namespace destack {

// Exact rational feasibility of small linear systems. Equalities are
// eliminated by integer substitution; the残 remaining inequalities go through
// Fourier-Motzkin. Sizes here are tiny (cone overlap checks), and rows are
// gcd-normalized and deduplicated to keep intermediate systems small.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t vars) : vars_(vars) {}

  // c[0..n-1] . x + c[n] >= 0
  void addInequality(std::vector<Int> row) { ineqs_.push_back(normalize(std::move(row))); }
  // c[0..n-1] . x + c[n] == 0
  void addEquality(std::vector<Int> row) { eqs_.push_back(normalize(std::move(row))); }

  bool feasible() const {
    std::vector<std::vector<Int>> eqs = eqs_;
    std::vector<std::vector<Int>> ineqs = ineqs_;
    std::vector<bool> eliminated(vars_, false);

    // substitute equalities away one variable at a time
    for (std::size_t e = 0; e < eqs.size(); ++e) {
      std::size_t v = vars_;
      for (std::size_t j = 0; j < vars_; ++j)
        if (!eliminated[j] && eqs[e][j] != 0) {
          if (v == vars_ || absInt(eqs[e][j]) < absInt(eqs[e][v])) v = j;
        }
      if (v == vars_) {
        if (eqs[e][vars_] != 0) return false;  // 0 = nonzero
        continue;
      }
      eliminated[v] = true;
      const std::vector<Int> piv = eqs[e];
      for (std::size_t k = e + 1; k < eqs.size(); ++k) eliminateVar(eqs[k], piv, v, false);
      for (auto& r : ineqs) eliminateVar(r, piv, v, true);
    }

    std::set<std::vector<Int>> rows;
    for (auto& r : ineqs) {
      r = normalize(std::move(r));
      if (constInfeasible(r, vars_)) return false;
      rows.insert(r);
    }
    for (std::size_t v = 0; v < vars_; ++v) {
      if (eliminated[v]) continue;
      std::set<std::vector<Int>> next;
      std::vector<std::vector<Int>> pos, neg;
      for (const auto& r : rows) {
        if (r[v] > 0)
          pos.push_back(r);
        else if (r[v] < 0)
          neg.push_back(r);
        else
          next.insert(r);
      }
      for (const auto& p : pos)
        for (const auto& n : neg) {
          std::vector<Int> combo(vars_ + 1);
          for (std::size_t i = 0; i <= vars_; ++i) combo[i] = (-n[v]) * p[i] + p[v] * n[i];
          combo = normalize(std::move(combo));
          if (constInfeasible(combo, vars_)) return false;
          next.insert(std::move(combo));
        }
      rows = std::move(next);
    }
    for (const auto& r : rows)
      if (r[vars_] < 0) return false;
    return true;
  }

 private:
  // make row[v] zero using pivot equality; keepDirection scales by |piv[v]| so
  // inequality orientation survives
  static void eliminateVar(std::vector<Int>& row, const std::vector<Int>& piv, std::size_t v,
                           bool keepDirection) {
    if (row[v] == 0) return;
    Int a = piv[v], b = row[v];
    Int scaleRow = keepDirection ? absInt(a) : a;
    Int scalePiv = keepDirection ? (a > 0 ? b : Int(-b)) : b;
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = row[i] * scaleRow - piv[i] * scalePiv;
  }

  static bool constInfeasible(const std::vector<Int>& r, std::size_t vars) {
    for (std::size_t i = 0; i < vars; ++i)
      if (r[i] != 0) return false;
    return r[vars] < 0;
  }

  static std::vector<Int> normalize(std::vector<Int> row) {
    Int g = 0;
    for (const Int& x : row) g = gcdInt(g, x);
    if (g > 1)
      for (Int& x : row) x /= g;
    return row;
  }

  std::size_t vars_;
  std::vector<std::vector<Int>> eqs_;
  std::vector<std::vector<Int>> ineqs_;
};

// Do the relative interiors of cone(A) and cone(B) meet? Columns are ray
// generators; empty cones have relative interior {0} and never meet a
// nonempty simplicial cone's interior.
inline bool relativeInteriorsMeet(const IntMatrix& a, const IntMatrix& b) {
  std::size_t p = a.cols(), q = b.cols();
  if (p == 0 || q == 0) return false;
  std::size_t n = a.rows();
  LinearSystem sys(p + q);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> row(p + q + 1);
    for (std::size_t j = 0; j < p; ++j) row[j] = a(i, j);
    for (std::size_t j = 0; j < q; ++j) row[p + j] = -b(i, j);
    sys.addEquality(std::move(row));
  }
  for (std::size_t v = 0; v < p + q; ++v) {
    std::vector<Int> row(p + q + 1);
    row[v] = 1;
    row[p + q] = -1;  // x_v >= 1 (strict positivity up to scaling)
    sys.addInequality(std::move(row));
  }
  return sys.feasible();
}

// Membership of a vector in the (closed) cone spanned by linearly independent
// columns: solve over Q and check signs.
inline bool simplicialConeContains(const IntMatrix& rays, const std::vector<Int>& x) {
  std::size_t p = rays.cols();
  if (p == 0) {
    for (const Int& c : x)
      if (c != 0) return false;
    return true;
  }
  LinearSystem sys(p);
  for (std::size_t i = 0; i < rays.rows(); ++i) {
    std::vector<Int> row(p + 1);
    for (std::size_t j = 0; j < p; ++j) row[j] = rays(i, j);
    row[p] = -x[i];  // sum a_j rays_j = x
    sys.addEquality(std::move(row));
  }
  for (std::size_t v = 0; v < p; ++v) {
    std::vector<Int> row(p + 1);
    row[v] = 1;
    sys.addInequality(std::move(row));  // a_v >= 0
  }
  return sys.feasible();
}

}  // namespace destack
