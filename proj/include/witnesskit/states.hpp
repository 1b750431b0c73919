#pragma once

// Example states: maximally entangled projectors, the one-parameter 4x4 PPT
// entangled family, the Terhal UPB state in 3x4, and seeded random states.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "witnesskit/matcore.hpp"
#include "witnesskit/random.hpp"

namespace witnesskit {

/// |phi+> = sum_m |mm>/sqrt(d).
inline ComplexVector max_entangled_vector(int d) {
  if (d < 2) throw DimensionError("max_entangled requires d >= 2");
  ComplexVector v = ComplexVector::Zero(Index(d) * d);
  for (int m = 0; m < d; ++m) v(Index(m) * d + m) = 1.0 / std::sqrt(double(d));
  return v;
}

inline HermitianMatrix max_entangled(int d) { return HermitianMatrix::projector(max_entangled_vector(d)); }

struct Rho4Params {
  double a = 1.0;
};

/// Unnormalised 16x16 template with entries in {0, 1, a, 1/a}.
inline RealMatrix rho4_template(double a) {
  RealMatrix m = RealMatrix::Zero(16, 16);
  for (int i : {0, 5, 10, 15})
    for (int j : {0, 5, 10, 15}) m(i, j) = 1.0;
  const double inv = 1.0 / a;
  // diagonal
  for (int i : {2, 7, 8, 13}) m(i, i) = 1.0;
  for (int i : {3, 4, 9, 14}) m(i, i) = a;
  for (int i : {1, 6, 11, 12}) m(i, i) = inv;
  // off-diagonal unit couplings
  const std::array<std::array<int, 2>, 6> pairs{{{1, 14}, {2, 8}, {3, 6}, {4, 11}, {7, 13}, {9, 12}}};
  for (const auto& p : pairs) {
    m(p[0], p[1]) = 1.0;
    m(p[1], p[0]) = 1.0;
  }
  return m;
}

/// Normalised with N = 4a + 4/a + 8. PPT and entangled for every a > 0 except a = 1.
inline HermitianMatrix rho4(Rho4Params p) {
  if (!(p.a > 0.0) || !std::isfinite(p.a)) throw ValueError("rho4 requires a finite a > 0");
  const double n = 4.0 * p.a + 4.0 / p.a + 8.0;
  return HermitianMatrix::from_real(rho4_template(p.a) / n);
}

/// Closed-form singular values of Q for rho4(a): |a-1|/(4|a+1|) twice,
/// a/(2(a+1)^2) six times, (a-1)^2/(4(a+1)^2) once. Sorted descending.
inline RealVector rho4_q_singular_values_closed(double a) {
  if (!(a > 0.0)) throw ValueError("rho4 requires a > 0");
  const double ap1 = a + 1.0;
  const double first = std::abs(a - 1.0) / (4.0 * std::abs(ap1));
  const double second = std::abs(a) / (2.0 * ap1 * ap1);
  const double third = (a - 1.0) * (a - 1.0) / (4.0 * ap1 * ap1);
  RealVector v(9);
  v << first, first, second, second, second, second, second, second, third;
  std::sort(v.data(), v.data() + v.size(), [](double x, double y) { return x > y; });
  return v;
}

/// a -> infinity limit of rho4: the weight concentrates on the four `a` diagonal entries.
inline HermitianMatrix rho4_limit() {
  RealMatrix m = RealMatrix::Zero(16, 16);
  for (int i : {3, 4, 9, 14}) m(i, i) = 0.25;  // |03>, |10>, |21>, |32>
  return HermitianMatrix::from_real(m);
}

/// |a> (x) |b>.
inline ComplexVector product_ket(const ComplexVector& first, const ComplexVector& second) {
  return kron(first, second);
}

/// The seven product vectors of Terhal's unextendible product basis in 3 (x) 4.
inline std::vector<ComplexVector> terhal_upb() {
  auto e = [](int d, int i) {
    ComplexVector v = ComplexVector::Zero(d);
    v(i) = 1.0;
    return v;
  };
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<ComplexVector> out;
  out.push_back(product_ket(e(3, 0), h * (e(4, 1) - e(4, 3))));
  out.push_back(product_ket(e(3, 1), h * (e(4, 2) - e(4, 3))));
  out.push_back(product_ket(e(3, 2), h * (e(4, 0) - e(4, 3))));
  out.push_back(product_ket(h * (e(3, 0) - e(3, 1)), e(4, 0)));
  out.push_back(product_ket(h * (e(3, 1) - e(3, 2)), e(4, 1)));
  out.push_back(product_ket(h * (e(3, 2) - e(3, 0)), e(4, 2)));
  out.push_back(product_ket(ComplexVector::Ones(3) / std::sqrt(3.0), ComplexVector::Ones(4) / 2.0));
  return out;
}

/// (I - sum_i |psi_i><psi_i|) / 5 built from the UPB.
inline HermitianMatrix terhal_state_from_upb() {
  ComplexMatrix m = ComplexMatrix::Identity(12, 12);
  for (const auto& v : terhal_upb()) m -= v * v.adjoint();
  return HermitianMatrix(ComplexMatrix(m / 5.0));
}

/// Terhal UPB state as an explicit matrix of integers / 60.
inline HermitianMatrix terhal_state() {
  static constexpr int kEntries[12][12] = {
      {5, -1, -1, -1, 5, -1, -1, -1, -1, -1, -1, -1},  //
      {-1, 5, -1, 5, -1, -1, -1, -1, -1, -1, -1, -1},  //
      {-1, -1, 5, -1, -1, -1, -1, -1, -1, -1, 5, -1},  //
      {-1, 5, -1, 5, -1, -1, -1, -1, -1, -1, -1, -1},  //
      {5, -1, -1, -1, 5, -1, -1, -1, -1, -1, -1, -1},  //
      {-1, -1, -1, -1, -1, 5, -1, -1, -1, 5, -1, -1},  //
      {-1, -1, -1, -1, -1, -1, 5, 5, -1, -1, -1, -1},  //
      {-1, -1, -1, -1, -1, -1, 5, 5, -1, -1, -1, -1},  //
      {-1, -1, -1, -1, -1, -1, -1, -1, 5, -1, -1, 5},  //
      {-1, -1, -1, -1, -1, 5, -1, -1, -1, 5, -1, -1},  //
      {-1, -1, 5, -1, -1, -1, -1, -1, -1, -1, 5, -1},  //
      {-1, -1, -1, -1, -1, -1, -1, -1, 5, -1, -1, 5},
  };
  RealMatrix m(12, 12);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) m(i, j) = kEntries[i][j] / 60.0;
  return HermitianMatrix::from_real(m);
}

/// Wishart-style random density matrix G G^dagger / Tr, G complex Gaussian of
/// size (d1 d2) x rank. rank <= 0 means full rank.
inline HermitianMatrix random_density(int d1, int d2, std::uint64_t seed, int rank = 0) {
  if (d1 < 2 || d2 < 2) throw DimensionError("random_density requires dims >= 2");
  const Index n = Index(d1) * d2;
  const Index k = rank <= 0 ? n : Index(rank);
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(n, k);
  for (Index j = 0; j < k; ++j)
    for (Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Exact Hermitian symmetry before wrapping (rounding in the product is ~1e-17).
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return HermitianMatrix(std::move(rho));
}

/// Normalised |alpha> (x) |beta> from complex Gaussian factors.
inline ComplexVector random_product_state(int d1, int d2, std::uint64_t seed) {
  if (d1 < 2 || d2 < 2) throw DimensionError("random_product_state requires dims >= 2");
  Rng rng(seed);
  const ComplexVector a = random_pure_state(d1, rng);
  const ComplexVector b = random_pure_state(d2, rng);
  return kron(a, b);
}

/// Convex mixture of `terms` random pure product states with random weights.
inline HermitianMatrix random_separable(int d1, int d2, std::uint64_t seed, int terms) {
  if (terms < 1) throw ValueError("random_separable requires at least one term");
  Rng rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const Index n = Index(d1) * d2;
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  double total = 0.0;
  for (int i = 0; i < terms; ++i) {
    const ComplexVector v = kron(random_pure_state(d1, rng), random_pure_state(d2, rng));
    const double w = uniform(rng) + 1e-3;
    rho += w * v * v.adjoint();
    total += w;
  }
  rho /= total;
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return HermitianMatrix(std::move(rho));
}

}  // namespace witnesskit
