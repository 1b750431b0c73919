#pragma once

// Linear maps between operator spaces, represented by their affine action
// on generalized Bloch vectors:
//
//   (y0)   (R00  s^T) (x0)
//   (y ) = (t    L  ) (x )
//
// in the Gell-Mann bases of the input (d1) and output (d2) spaces.

#include <cmath>
#include <iostream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "witnesskit/basis.hpp"
#include "witnesskit/matcore.hpp"
#include "witnesskit/random.hpp"

namespace witnesskit {

struct MapSpec {
  int d1 = 2;
  int d2 = 2;
  double r00 = 0.0;
  RealVector s;       // d1^2 - 1
  RealVector t;       // d2^2 - 1
  RealMatrix lambda;  // (d2^2 - 1) x (d1^2 - 1)

  MapSpec() = default;

  MapSpec(int d1_, int d2_, double r00_, RealVector s_, RealVector t_, RealMatrix lambda_)
      : d1(d1_), d2(d2_), r00(r00_), s(std::move(s_)), t(std::move(t_)), lambda(std::move(lambda_)) {
    validate();
  }

  /// Zero map data of the right shape.
  static MapSpec zero(int d1, int d2) {
    const Index n1 = Index(d1) * d1 - 1;
    const Index n2 = Index(d2) * d2 - 1;
    return MapSpec(d1, d2, 0.0, RealVector::Zero(n1), RealVector::Zero(n2), RealMatrix::Zero(n2, n1));
  }

  /// Full coefficient matrix R (d2^2 x d1^2), R(b, a) with a the input index.
  RealMatrix full() const {
    RealMatrix r(lambda.rows() + 1, lambda.cols() + 1);
    r(0, 0) = r00;
    r.block(0, 1, 1, s.size()) = s.transpose();
    r.block(1, 0, t.size(), 1) = t;
    r.bottomRightCorner(lambda.rows(), lambda.cols()) = lambda;
    return r;
  }

  static MapSpec from_full(int d1, int d2, const RealMatrix& r) {
    if (r.rows() != Index(d2) * d2 || r.cols() != Index(d1) * d1)
      throw DimensionError("full coefficient matrix must be d2^2 x d1^2");
    return MapSpec(d1, d2, r(0, 0), r.row(0).tail(r.cols() - 1).transpose(), r.col(0).tail(r.rows() - 1),
                   r.bottomRightCorner(r.rows() - 1, r.cols() - 1));
  }

  bool is_trace_preserving(double eps = 1e-12) const {
    return s.norm() <= eps && std::abs(r00 - std::sqrt(double(d1) / d2)) <= eps;
  }

  bool is_unital(double eps = 1e-12) const {
    return t.norm() <= eps && std::abs(r00 - std::sqrt(double(d2) / d1)) <= eps;
  }

  void validate() const {
    if (d1 < 2 || d2 < 2) throw DimensionError("map dimensions must be >= 2");
    const Index n1 = Index(d1) * d1 - 1;
    const Index n2 = Index(d2) * d2 - 1;
    if (s.size() != n1) throw DimensionError("s must have length d1^2-1");
    if (t.size() != n2) throw DimensionError("t must have length d2^2-1");
    if (lambda.rows() != n2 || lambda.cols() != n1)
      throw DimensionError("lambda must be (d2^2-1) x (d1^2-1)");
    if (!std::isfinite(r00) || !s.allFinite() || !t.allFinite() || !lambda.allFinite())
      throw ValueError("map data has non-finite entries");
  }
};

/// sqrt(d2-1)|t| + sqrt(d1-1)|s| + sqrt((d1-1)(d2-1)) ||L||_inf <= R00 implies positivity.
struct PositivityCertificate {
  double lhs;
  double rhs;
  double margin;  // rhs - lhs
  bool satisfied;
};

/// |s|^2 + |t|^2 + Tr(L L^T) <= R00^2 / (d1 d2 - 1) implies complete positivity.
struct CpCertificate {
  double lhs;
  double rhs;
  double margin;
  bool satisfied;
};

inline PositivityCertificate positivity_certificate(const MapSpec& m) {
  const double lhs = std::sqrt(double(m.d2 - 1)) * m.t.norm() + std::sqrt(double(m.d1 - 1)) * m.s.norm() +
                     std::sqrt(double(m.d1 - 1) * (m.d2 - 1)) * op_norm(m.lambda);
  const double margin = m.r00 - lhs;
  return {lhs, m.r00, margin, margin >= -tol::kCertificate};
}

inline CpCertificate cp_certificate(const MapSpec& m) {
  const double lhs = m.s.squaredNorm() + m.t.squaredNorm() + m.lambda.squaredNorm();
  const double rhs = m.r00 * m.r00 / (double(m.d1) * m.d2 - 1.0);
  return {lhs, rhs, rhs - lhs, lhs <= rhs + tol::kCertificate};
}

/// Phi(X) = (R00 x0 + s.x) O_0 + (x0 t + L x).O
inline HermitianMatrix apply_map(const MapSpec& m, const HermitianMatrix& x) {
  if (x.dim() != m.d1) throw DimensionError("apply_map: input dimension differs from d1");
  const BlochCoords in = expand(x, gell_mann_basis(m.d1));
  BlochCoords out;
  out.x0 = m.r00 * in.x0 + m.s.dot(in.x);
  out.x = in.x0 * m.t + m.lambda * in.x;
  return reconstruct(out, gell_mann_basis(m.d2));
}

/// C = sum_{a,b} R(b, a) G_a^T (x) O_b  (equals sum_{mn} |m><n| (x) Phi(|m><n|)).
inline HermitianMatrix choi_matrix(const MapSpec& m) {
  return assemble_transposed_product(m.full(), gell_mann_basis(m.d1), gell_mann_basis(m.d2));
}

inline MapSpec map_from_choi(const HermitianMatrix& c, int d1, int d2) {
  if (d1 < 2 || d2 < 2) throw DimensionError("map_from_choi: dimensions must be >= 2");
  if (c.dim() != Index(d1) * d2) throw DimensionError("map_from_choi: Choi matrix is not (d1 d2) square");
  return MapSpec::from_full(d1, d2, transposed_product_coefficients(c, gell_mann_basis(d1), gell_mann_basis(d2)));
}

inline MapSpec identity_map(int d) {
  MapSpec m = MapSpec::zero(d, d);
  m.r00 = 1.0;
  m.lambda.setIdentity();
  return m;
}

/// X -> X^T: +1 on symmetric and diagonal Gell-Mann elements, -1 on antisymmetric ones.
inline MapSpec transposition_map(int d) {
  if (d < 2) throw DimensionError("transposition_map requires d >= 2");
  MapSpec m = MapSpec::zero(d, d);
  m.r00 = 1.0;
  for (Index k = 1; k < Index(d) * d; ++k)
    m.lambda(k - 1, k - 1) = gell_mann_kind(d, k) == GellMannKind::Antisymmetric ? -1.0 : 1.0;
  return m;
}

/// X -> I Tr X - X.
inline MapSpec reduction_map(int d) {
  if (d < 2) throw DimensionError("reduction_map requires d >= 2");
  MapSpec m = MapSpec::zero(d, d);
  m.r00 = d - 1.0;
  m.lambda = -RealMatrix::Identity(m.lambda.rows(), m.lambda.cols());
  return m;
}

/// X -> I Tr X - sum_{k,l} L_{lk} Tr(G_k X) G_l. Warns on ||L||_inf > 1 but does not reject.
inline MapSpec generalized_reduction_map(const RealMatrix& lambda, std::ostream* warn = &std::clog) {
  if (lambda.rows() != lambda.cols()) throw DimensionError("generalized_reduction_map: lambda must be square");
  const int d = int(std::lround(std::sqrt(double(lambda.rows() + 1))));
  if (d < 2 || Index(d) * d - 1 != lambda.rows())
    throw DimensionError("generalized_reduction_map: lambda must be (d^2-1) x (d^2-1)");
  const double norm = op_norm(lambda);
  if (norm > 1.0 + tol::kCertificate && warn != nullptr)
    *warn << "warning: generalized reduction map with ||Lambda||_inf = " << norm << " > 1\n";
  MapSpec m = MapSpec::zero(d, d);
  m.r00 = d - 1.0;
  m.lambda = -lambda;
  return m;
}

/// X -> I Tr X - sum_{a,b} O_{ba} Tr(G_a X) O_b for an isometry O (d2^2 x d1^2, O O^T = I, d1 >= d2).
inline MapSpec isometry_map(const RealMatrix& o, int d1, int d2) {
  if (d1 < 2 || d2 < 2) throw DimensionError("isometry_map: dimensions must be >= 2");
  if (d1 < d2) throw PreconditionError("isometry_map is only defined for d1 >= d2");
  if (o.rows() != Index(d2) * d2 || o.cols() != Index(d1) * d1)
    throw DimensionError("isometry_map: O must be d2^2 x d1^2");
  const double defect = (o * o.transpose() - RealMatrix::Identity(o.rows(), o.rows())).norm();
  if (defect > 1e-10) {
    std::ostringstream os;
    os << "isometry_map: ||O O^T - I||_F = " << defect;
    throw PreconditionError(os.str());
  }
  RealMatrix r = -o;
  r(0, 0) += std::sqrt(double(d1) * d2);
  return MapSpec::from_full(d1, d2, r);
}

/// Fujiwara-Algoet tetrahedron for the Bloch-axis contractions of a unital qubit channel.
inline bool fujiwara_algoet_check(double l1, double l2, double l3) {
  return std::abs(l1 + l2) <= 1.0 + l3 && std::abs(l1 - l2) <= 1.0 - l3;
}

/// vol(|l| <= 1/sqrt(3)) / vol(tetrahedron) = (4 pi / 3) 3^{-3/2} / (8/3).
inline double volume_ratio_analytic() { return std::numbers::pi * std::sqrt(3.0) / 18.0; }

/// Monte-Carlo estimate of the ratio above, uniform sampling of [-1,1]^3.
inline double volume_ratio_mc(std::uint64_t samples, std::uint64_t seed) {
  if (samples < 10000) throw ValueError("volume_ratio_mc requires at least 1e4 samples");
  Rng rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  const double r2 = 1.0 / 3.0;
  std::uint64_t in_tetra = 0;
  std::uint64_t in_ball = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double a = uniform(rng);
    const double b = uniform(rng);
    const double c = uniform(rng);
    if (fujiwara_algoet_check(a, b, c)) {
      ++in_tetra;
      if (a * a + b * b + c * c <= r2) ++in_ball;
    }
  }
  return in_tetra == 0 ? 0.0 : double(in_ball) / double(in_tetra);
}

}  // namespace witnesskit
