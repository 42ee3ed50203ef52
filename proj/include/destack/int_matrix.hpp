#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "destack/errors.hpp"

namespace destack {

// All lattice and character arithmetic runs on arbitrary-precision integers.
// No floating point appears anywhere in the library core.
using Int = boost::multiprecision::cpp_int;

inline Int absInt(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcdInt(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int lcmInt(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return absInt(a / gcdInt(a, b) * b);
}

// g = gcd(a,b) >= 0 together with s,t such that s*a + t*b = g.
inline void extGcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;  // truncated division is fine for the invariant
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    Int t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  s = s0;
  t = t0;
}

// Floor division: result q with a - q*b in [0, b) for b > 0.
inline Int floorDiv(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline Int gcdVec(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcdInt(g, x);
  return g;
}

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Int> entries)
      : rows_(rows), cols_(cols), a_(entries) {
    require(a_.size() == rows * cols, Errc::Precondition, "entry count mismatch");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix fromColumns(std::size_t rows, const std::vector<std::vector<Int>>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      require(cols[j].size() == rows, Errc::Precondition, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static IntMatrix fromRows(const std::vector<std::vector<Int>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == c, Errc::Precondition, "row length mismatch");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix diagonal(const std::vector<Int>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    require(cols_ == o.rows_, Errc::Precondition, "matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  std::vector<Int> apply(const std::vector<Int>& x) const {
    require(x.size() == cols_, Errc::Precondition, "vector length mismatch");
    std::vector<Int> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  std::vector<Int> column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<Int> row(std::size_t i) const {
    std::vector<Int> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  IntMatrix topRows(std::size_t n) const {
    IntMatrix t(n, cols_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(i, j) = (*this)(i, j);
    return t;
  }

  IntMatrix selectColumns(const std::vector<std::size_t>& idx) const {
    IntMatrix t(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t i = 0; i < rows_; ++i) t(i, j) = (*this)(i, idx[j]);
    return t;
  }

  bool isZero() const {
    for (const Int& x : a_)
      if (x != 0) return false;
    return true;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

}  // namespace destack
