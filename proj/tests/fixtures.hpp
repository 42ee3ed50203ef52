#pragma once

// Named fan fixtures shared by tests: the two order-2 local models whose
// coarse spaces are respectively smooth and singular, the 1/4(1,1) cone, and
// builders for cyclic quotient cones and weighted projective stacks.

#include "destack/stacky_fan.hpp"

namespace testsupport {

using destack::Cone;
using destack::Int;
using destack::Ray;
using destack::StackyFan;

inline Ray makeRay(std::vector<Int> beta, long key, bool inD = false, bool dist = false) {
  Ray r;
  r.beta = std::move(beta);
  r.orderKey = key;
  r.inD = inD;
  r.distinguished = dist;
  return r;
}

// smooth local model: quadrant with beta = {(1,0),(0,2)}
inline StackyFan smoothHalfModel() {
  return StackyFan(2, {makeRay({Int(1), Int(0)}, 0), makeRay({Int(0), Int(2)}, 1)},
                   {Cone{0, 1}});
}

// singular local model: the A1 cone, beta = {(0,1),(2,-1)}
inline StackyFan a1Fan(bool raysInD = false) {
  return StackyFan(2,
                   {makeRay({Int(0), Int(1)}, 0, raysInD), makeRay({Int(2), Int(-1)}, 1, raysInD)},
                   {Cone{0, 1}});
}

// 1/r(1,a) cyclic quotient cone: rays (0,1) and (r,-a)
inline StackyFan cyclicQuotientFan(int r, int a) {
  return StackyFan(2, {makeRay({Int(0), Int(1)}, 0), makeRay({Int(r), Int(-a)}, 1)},
                   {Cone{0, 1}});
}

inline StackyFan quarterOneOneFan() { return cyclicQuotientFan(4, 1); }

// plain smooth quadrant
inline StackyFan smoothQuadrant() {
  return StackyFan(2, {makeRay({Int(1), Int(0)}, 0), makeRay({Int(0), Int(1)}, 1)},
                   {Cone{0, 1}});
}

// full smooth plane fan (four quadrants)
inline StackyFan smoothPlaneFan() {
  return StackyFan(2,
                   {makeRay({Int(1), Int(0)}, 0), makeRay({Int(0), Int(1)}, 1),
                    makeRay({Int(-1), Int(0)}, 2), makeRay({Int(0), Int(-1)}, 3)},
                   {Cone{0, 1}, Cone{1, 2}, Cone{2, 3}, Cone{0, 3}});
}

// Weighted projective stack P(a,b): fan in Z^2/(a,b) ~ Z with rays the images
// of the standard basis.
StackyFan weightedProjectiveLine(int a, int b);

// Weighted projective stack P(a,b,c) via Z^3/(a,b,c) ~ Z^2, gcd(a,b,c) = 1.
StackyFan weightedProjectivePlane(int a, int b, int c);

// Two disjoint A1-type charts in one ambient fan.
inline StackyFan twoChartFan() {
  return StackyFan(2,
                   {makeRay({Int(0), Int(1)}, 0), makeRay({Int(2), Int(-1)}, 1),
                    makeRay({Int(-1), Int(0)}, 2), makeRay({Int(-1), Int(-3)}, 3)},
                   {Cone{0, 1}, Cone{2, 3}});
}

}  // namespace testsupport
