#pragma once

// Seeded random generators used by property tests, sampling oracles and the
// Monte-Carlo volume experiment. Every generator takes the engine explicitly.

#include <cstdint>
#include <random>

#include "witnesskit/matcore.hpp"

namespace witnesskit {

using Rng = std::mt19937_64;

/// Complex standard-normal vector, normalised to unit length.
inline ComplexVector random_pure_state(Index d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(d);
  for (Index i = 0; i < d; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

/// Hermitian matrix (G + G^dagger)/2 with complex standard-normal G.
inline HermitianMatrix random_hermitian(Index d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return HermitianMatrix((g + g.adjoint()) / 2.0);
}

inline RealMatrix random_real_matrix(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  RealMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = normal(rng);
  return m;
}

/// Haar-ish random orthogonal matrix from the QR factorisation of a Gaussian matrix.
inline RealMatrix random_orthogonal(Index n, Rng& rng) {
  const RealMatrix g = random_real_matrix(n, n, rng);
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  return q;
}

}  // namespace witnesskit
