#pragma once

// Entanglement witnesses W = sum_{a,b} R(b, a) G_a^T (x) O_b together with their
// coefficient record (R00, s, t, Lambda), the named witnesses, mirroring, and
// the vertex construction of the optimal witness for a given state.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <sstream>

#include "witnesskit/basis.hpp"
#include "witnesskit/criteria.hpp"
#include "witnesskit/maps.hpp"
#include "witnesskit/matcore.hpp"
#include "witnesskit/random.hpp"
#include "witnesskit/states.hpp"

namespace witnesskit {

struct Witness {
  int d1;
  int d2;
  HermitianMatrix w;
  MapSpec coeffs;

  /// Has a negative eigenvalue below -eps.
  bool is_proper(double eps = tol::kVerdict) const { return min_eigenvalue(w) < -eps; }
};

/// W is the Choi matrix of the map; the coefficients are the map data.
inline Witness witness_from_map(const MapSpec& m) { return {m.d1, m.d2, choi_matrix(m), m}; }

inline Witness witness_from_operator(const HermitianMatrix& w, int d1, int d2) {
  return {d1, d2, w, map_from_choi(w, d1, d2)};
}

/// Tr(W rho).
inline double expectation(const Witness& w, const HermitianMatrix& rho) {
  if (rho.dim() != w.w.dim()) throw DimensionError("expectation: state and witness dimensions differ");
  return (w.w.matrix() * rho.matrix()).trace().real();
}

/// R00 c00 + r1.s + r2.t + Tr(Q Lambda^T), the same value through coordinates.
inline double coordinate_expectation(const MapSpec& coeffs, const CorrelationData& cd) {
  if (coeffs.d1 != cd.d1 || coeffs.d2 != cd.d2) throw DimensionError("coordinate_expectation: dims differ");
  return coeffs.r00 * cd.c00() + cd.r1().dot(coeffs.s) + cd.r2().dot(coeffs.t) +
         (cd.q().array() * coeffs.lambda.array()).sum();
}

/// For W satisfying the positivity certificate, mu I - W is non-negative on
/// separable states for every mu >= 2 R00 / sqrt(d1 d2).
inline double mirror_bound(const Witness& w) {
  const PositivityCertificate cert = positivity_certificate(w.coeffs);
  if (!cert.satisfied) {
    std::ostringstream os;
    os << "mirror_bound: witness does not satisfy the positivity certificate (margin " << cert.margin << ")";
    throw PreconditionError(os.str());
  }
  return 2.0 * w.coeffs.r00 / std::sqrt(double(w.d1) * w.d2);
}

/// mu I - W, with coefficients (mu sqrt(d1 d2) - R00, -s, -t, -Lambda).
inline Witness mirrored(const Witness& w, double mu) {
  const Index n = w.w.dim();
  HermitianMatrix op(ComplexMatrix(mu * ComplexMatrix::Identity(n, n) - w.w.matrix()));
  MapSpec c(w.d1, w.d2, mu * std::sqrt(double(w.d1) * w.d2) - w.coeffs.r00, -w.coeffs.s, -w.coeffs.t,
            -w.coeffs.lambda);
  return {w.d1, w.d2, std::move(op), std::move(c)};
}

/// 3x3 witness of the Choi map:
/// sum_i (2|i,i><i,i| + |i,i-1><i,i-1|) - 3|phi+><phi+|.
inline Witness choi_map_witness() {
  ComplexMatrix m = ComplexMatrix::Zero(9, 9);
  for (int i = 0; i < 3; ++i) {
    m(4 * i, 4 * i) += 2.0;
    const int j = (i + 2) % 3;
    m(3 * i + j, 3 * i + j) += 1.0;
  }
  const ComplexVector phi = max_entangled_vector(3);
  m -= 3.0 * phi * phi.adjoint();
  return witness_from_operator(HermitianMatrix(std::move(m)), 3, 3);
}

/// W_k = (|v_k><v_k|)^Gamma for the six two-qubit families
/// v1 = a phi+ + b phi-,  v2 = a psi+ + b psi-,  v3 = a phi+ + b psi+,
/// v4 = a phi- + b psi-,  v5 = a phi+ + i b psi-, v6 = a phi- + i b psi+.
inline Witness bell_diagonal_witness(int family, double a, double b) {
  if (family < 1 || family > 6) throw ValueError("bell_diagonal_witness: family must be 1..6");
  if (std::abs(a * a + b * b - 1.0) > 1e-12) throw ValueError("bell_diagonal_witness: need a^2 + b^2 = 1");
  const double h = 1.0 / std::sqrt(2.0);
  const ComplexVector phi_p = (ComplexVector(4) << h, 0, 0, h).finished();
  const ComplexVector phi_m = (ComplexVector(4) << h, 0, 0, -h).finished();
  const ComplexVector psi_p = (ComplexVector(4) << 0, h, h, 0).finished();
  const ComplexVector psi_m = (ComplexVector(4) << 0, h, -h, 0).finished();
  const Complex ib(0.0, b);
  ComplexVector v;
  switch (family) {
    case 1: v = a * phi_p + b * phi_m; break;
    case 2: v = a * psi_p + b * psi_m; break;
    case 3: v = a * phi_p + b * psi_p; break;
    case 4: v = a * phi_m + b * psi_m; break;
    case 5: v = a * phi_p + ib * psi_m; break;
    default: v = a * phi_m + ib * psi_p; break;
  }
  return witness_from_operator(partial_transpose(HermitianMatrix::projector(v), 2, 2, Subsystem::Second), 2, 2);
}

struct OptimalWitnessResult {
  std::array<double, 4> f;  // F0 = 1, F1, F2, F3
  int chosen_vertex;
  double value;  // R00/sqrt(d1 d2) * F[chosen_vertex]
  Witness witness;
};

/// Minimises Tr(W rho) over the simplex of witnesses saturating the positivity
/// certificate, parametrised by s = -x r1, t = -y r2, Lambda = -l U V^T (Q = U q V^T).
/// The minimum sits on a vertex; ties go to the lowest index, and v1/v2 are
/// skipped when r1 = 0 or r2 = 0.
inline OptimalWitnessResult optimal_witness(const HermitianMatrix& rho, int d1, int d2, double r00 = 1.0) {
  if (!(r00 > 0.0)) throw ValueError("optimal_witness: R00 must be positive");
  const CorrelationData cd = correlation_data(rho, d1, d2);
  const FValues fv = f_values(cd);
  const RealVector r1 = cd.r1();
  const RealVector r2 = cd.r2();
  const std::array<double, 4> f{1.0, fv.f1, fv.f2, fv.f3};
  const std::array<bool, 4> reachable{true, r1.norm() > 0.0, r2.norm() > 0.0, true};

  int best = 0;
  for (int i = 1; i < 4; ++i)
    if (reachable[std::size_t(i)] && f[std::size_t(i)] < f[std::size_t(best)]) best = i;

  MapSpec c = MapSpec::zero(d1, d2);
  c.r00 = r00;
  if (best == 1) {
    c.s = -(r00 / (r1.norm() * std::sqrt(d1 - 1.0))) * r1;
  } else if (best == 2) {
    c.t = -(r00 / (r2.norm() * std::sqrt(d2 - 1.0))) * r2;
  } else if (best == 3) {
    const double lmax = r00 / std::sqrt((d1 - 1.0) * (d2 - 1.0));
    const RealSvd svd = svd_real(cd.q());
    c.lambda = -lmax * svd.u * svd.v.transpose();
  }
  const double value = r00 / std::sqrt(double(d1) * d2) * f[std::size_t(best)];
  return {f, best, value, witness_from_map(c)};
}

/// Minimum of <a (x) b| W |a (x) b> over n seeded random product vectors.
inline double block_positivity_sample(const Witness& w, int n, std::uint64_t seed) {
  if (n < 1) throw ValueError("block_positivity_sample requires n >= 1");
  Rng rng(seed);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const ComplexVector v = kron(random_pure_state(w.d1, rng), random_pure_state(w.d2, rng));
    const double e = v.dot(w.w.matrix() * v).real();  // dot conjugates the first argument
    best = std::min(best, e);
  }
  return best;
}

}  // namespace witnesskit
