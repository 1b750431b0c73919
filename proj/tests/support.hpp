#pragma once

// Test-only oracles and generators. Oracles here deliberately avoid the
// library's basis/coefficient machinery: they work from Pauli matrices written
// out by hand, index reshuffling, or linearity of apply_map.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "witnesskit/witnesskit.hpp"

namespace wk_test {

using namespace witnesskit;

inline ComplexMatrix pauli(int k) {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

/// C(b, a) = Tr(rho (s_a^T (x) s_b)) / 2 for the ordering (I, X, Y, Z), which is
/// the Gell-Mann ordering for d = 2.
inline RealMatrix pauli_correlation(const ComplexMatrix& rho) {
  RealMatrix c(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      ComplexMatrix op = Eigen::kroneckerProduct(ComplexMatrix(pauli(a).transpose()), pauli(b)).eval();
      c(b, a) = (rho * op).trace().real() / 2.0;
    }
  return c;
}

/// Realignment R(rho)_{(i,k),(j,l)} = rho_{(i,j),(k,l)}.
inline ComplexMatrix realign(const ComplexMatrix& rho, int d1, int d2) {
  ComplexMatrix r(Index(d1) * d1, Index(d2) * d2);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j)
      for (int k = 0; k < d1; ++k)
        for (int l = 0; l < d2; ++l) r(Index(i) * d1 + k, Index(j) * d2 + l) = rho(Index(i) * d2 + j, Index(k) * d2 + l);
  return r;
}

/// Choi matrix sum_{mn} |m><n| (x) Phi(|m><n|), with Phi(E) = Phi(H1) + i Phi(H2)
/// for E = H1 + i H2 split into Hermitian parts.
inline ComplexMatrix choi_by_linearity(const MapSpec& m) {
  const int d1 = m.d1;
  const int d2 = m.d2;
  ComplexMatrix out = ComplexMatrix::Zero(Index(d1) * d2, Index(d1) * d2);
  const Complex i(0.0, 1.0);
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d1; ++b) {
      ComplexMatrix e = ComplexMatrix::Zero(d1, d1);
      e(a, b) = 1.0;
      const ComplexMatrix h1 = (e + e.adjoint()) / 2.0;
      const ComplexMatrix h2 = (e - e.adjoint()) / (2.0 * i);
      const ComplexMatrix img = apply_map(m, HermitianMatrix(h1)).matrix() + i * apply_map(m, HermitianMatrix(h2)).matrix();
      out.block(Index(a) * d2, Index(b) * d2, d2, d2) = img;
    }
  return out;
}

inline RealVector random_unit_direction(Index n, Rng& rng) {
  RealVector v = random_real_matrix(n, 1, rng);
  return v / v.norm();
}

/// Random map data whose R00 is set to `scale` times the positivity lhs, so
/// scale >= 1 passes the certificate (scale == 1 saturates it).
inline MapSpec random_map_scaled_to_positivity(int d1, int d2, Rng& rng, double scale) {
  MapSpec m = MapSpec::zero(d1, d2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  m.s = u(rng) * random_unit_direction(m.s.size(), rng);
  m.t = u(rng) * random_unit_direction(m.t.size(), rng);
  m.lambda = random_real_matrix(m.lambda.rows(), m.lambda.cols(), rng);
  m.lambda *= u(rng) / op_norm(m.lambda);
  m.r00 = 0.0;
  m.r00 = scale * positivity_certificate(m).lhs;
  return m;
}

/// Random map data scaled so that the CP certificate lhs equals rhs / scale^2.
inline MapSpec random_map_scaled_to_cp(int d1, int d2, Rng& rng, double scale) {
  MapSpec m = random_map_scaled_to_positivity(d1, d2, rng, 1.0);
  const double lhs = cp_certificate(m).lhs;
  m.r00 = scale * std::sqrt(lhs * (double(d1) * d2 - 1.0));
  return m;
}

/// Density matrices of mixed character: pure, low-rank, full-rank and noisy
/// maximally entangled states, chosen by the seed.
inline HermitianMatrix mixed_test_state(int d1, int d2, std::uint64_t seed) {
  const Index n = Index(d1) * d2;
  switch (seed % 4) {
    case 0: return random_density(d1, d2, seed, 1);
    case 1: return random_density(d1, d2, seed, 2);
    case 2: return random_density(d1, d2, seed);
    default: {
      Rng rng(seed);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      const double p = u(rng);
      const int d = std::min(d1, d2);
      ComplexVector phi = ComplexVector::Zero(n);
      for (int m = 0; m < d; ++m) phi(Index(m) * d2 + m) = 1.0 / std::sqrt(double(d));
      ComplexMatrix rho = p * phi * phi.adjoint() + (1.0 - p) * ComplexMatrix::Identity(n, n) / double(n);
      return HermitianMatrix(std::move(rho));
    }
  }
}

}  // namespace wk_test
