#include "support.hpp"

#include "destack/normal_form.hpp"
#include "fixtures.hpp"

namespace testsupport {

StackyFan weightedProjectiveLine(int a, int b) {
  using destack::IntMatrix;
  IntMatrix w(2, 1, {Int(a), Int(b)});
  auto s = destack::snf(w);
  destack::require(s.d(0, 0) == 1, destack::Errc::Precondition, "weights must be coprime");
  // quotient Z^2/(a,b) identified with the second Smith coordinate
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<Int> x(2);
    x[i] = 1;
    std::vector<Int> y = s.u.apply(x);
    rays.push_back(makeRay({y[1]}, static_cast<long>(i)));
  }
  return StackyFan(1, std::move(rays), {Cone{0}, Cone{1}});
}

StackyFan weightedProjectivePlane(int a, int b, int c) {
  using destack::IntMatrix;
  IntMatrix w(3, 1, {Int(a), Int(b), Int(c)});
  auto s = destack::snf(w);
  destack::require(s.d(0, 0) == 1, destack::Errc::Precondition, "weights must have gcd 1");
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Int> x(3);
    x[i] = 1;
    std::vector<Int> y = s.u.apply(x);
    rays.push_back(makeRay({y[1], y[2]}, static_cast<long>(i)));
  }
  return StackyFan(2, std::move(rays), {Cone{0, 1}, Cone{1, 2}, Cone{0, 2}});
}

IntMatrix randomMatrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniformInt(rng, lo, hi);
  return m;
}

IntMatrix randomNonsingular(Rng& rng, std::size_t n, int lo, int hi) {
  for (;;) {
    IntMatrix m = randomMatrix(rng, n, n, lo, hi);
    if (destack::determinant(m) != 0) return m;
  }
}

bool sameColumnLattice(const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (!destack::inColumnSpan(a, b.column(j))) return false;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!destack::inColumnSpan(b, a.column(j))) return false;
  return true;
}

destack::StackyFan randomFan(Rng& rng, std::size_t rank, int subdivisions, int maxScale) {
  using destack::Cone;
  using destack::StackyFan;
  std::vector<Ray> rays;
  Cone top;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Int> e(rank);
    e[i] = 1;
    rays.push_back(makeRay(e, static_cast<long>(i)));
    top.push_back(i);
  }
  StackyFan f(rank, rays, {top});
  for (int s = 0; s < subdivisions; ++s) {
    std::vector<Cone> big;
    for (const Cone& c : f.cones())
      if (c.size() >= 2) big.push_back(c);
    if (big.empty()) break;
    const Cone& c = big[rng() % big.size()];
    f = f.withStarSubdivision(c, f.maxOrderKey() + 1, false, false).fan;
  }
  for (std::size_t i = 0; i < f.rayCount(); ++i)
    if (rng() % 2 == 0) f = f.withRootStack(i, Int(1 + (int)(rng() % maxScale)));
  return f;
}

destack::StackyFan randomFanBoundedOrder(Rng& rng, std::size_t rank, int subdivisions,
                                         int maxScale, const Int& orderCap) {
  for (;;) {
    destack::StackyFan f = randomFan(rng, rank, subdivisions, maxScale);
    bool ok = true;
    for (const destack::Cone& c : f.maximalCones())
      if (f.localGroup(c).group.order() > orderCap) ok = false;
    if (ok) return f;
  }
}

bool isPaperHermite(const IntMatrix& h) {
  if (h.rows() != h.cols()) return false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h(i, i) <= 0) return false;
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (j < i && h(i, j) != 0) return false;
      if (j > i && !(h(i, j) >= 0 && h(i, j) < h(i, i))) return false;
    }
  }
  return true;
}

}  // namespace testsupport
