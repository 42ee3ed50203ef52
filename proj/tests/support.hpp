#pragma once

// Shared fixtures and independent oracles used by the unit and acceptance
// suites. Oracles here deliberately avoid the library's main code paths.

#include <random>
#include <vector>

#include "destack/int_matrix.hpp"
#include "destack/stacky_fan.hpp"

namespace testsupport {

using destack::Int;
using destack::IntMatrix;

// Deterministic RNG for property tests; mt19937_64 is fully specified by the
// standard, so seeds reproduce across platforms.
using Rng = std::mt19937_64;

inline int uniformInt(Rng& rng, int lo, int hi) {
  // avoid distribution objects: their output is implementation-defined
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

// random matrix with entries in [lo, hi]
IntMatrix randomMatrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi);

// random square matrix guaranteed nonsingular (resamples until det != 0)
IntMatrix randomNonsingular(Rng& rng, std::size_t n, int lo, int hi);

// Brute-force check that two matrices generate the same column lattice by
// verifying mutual column containment.
bool sameColumnLattice(const IntMatrix& a, const IntMatrix& b);

// Paper-convention Hermite predicate for square matrices: upper triangular,
// positive diagonal, and a_ii > a_ij >= 0 for j > i.
bool isPaperHermite(const IntMatrix& h);

// Random stacky fan: refine the positive orthant by random stacky star
// subdivisions, then scale random rays. Deterministic in the rng state.
destack::StackyFan randomFan(Rng& rng, std::size_t rank, int subdivisions, int maxScale);

// Same, but resampled until every cone's local group order is at most the cap.
destack::StackyFan randomFanBoundedOrder(Rng& rng, std::size_t rank, int subdivisions,
                                         int maxScale, const Int& orderCap);

}  // namespace testsupport
