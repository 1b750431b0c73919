#pragma once

// Dense complex/real matrix helpers shared by the rest of the library:
// Hermitian strong type, decompositions, norms, tensor structure and
// Mehta's trace-based positivity test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <utility>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "witnesskit/errors.hpp"

namespace witnesskit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

namespace tol {
inline constexpr double kHermitian = 1e-10;       // relative, Frobenius
inline constexpr double kMehtaSlack = 1e-12;      // additive slack in Tr A^2 <= (Tr A)^2/(d-1)
inline constexpr double kCertificate = 1e-12;     // additive slack of map certificates
inline constexpr double kNegligibleSingular = 1e-12;  // relative to the largest singular value
inline constexpr double kVerdict = 1e-9;          // criterion value must exceed bound by this
}  // namespace tol

namespace detail {

inline std::string shape_of(Index rows, Index cols) {
  std::ostringstream os;
  os << rows << "x" << cols;
  return os.str();
}

}  // namespace detail

/// Square complex matrix that was checked to be finite and Hermitian.
///
/// The check is ||A - A^dagger||_F <= rel_tol * max(1, ||A||_F). Inputs that
/// fail are rejected; nothing is symmetrised.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(ComplexMatrix m, double rel_tol = tol::kHermitian) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
      throw DimensionError("Hermitian matrix must be square and non-empty, got " +
                           detail::shape_of(m_.rows(), m_.cols()));
    }
    if (!m_.allFinite()) throw ValueError("matrix has non-finite entries");
    const double asym = (m_ - m_.adjoint()).norm();
    if (asym > rel_tol * std::max(1.0, m_.norm())) {
      std::ostringstream os;
      os << "matrix is not Hermitian: ||A - A^dagger||_F = " << asym;
      throw ValueError(os.str());
    }
  }

  static HermitianMatrix identity(Index n) {
    return HermitianMatrix(ComplexMatrix::Identity(n, n));
  }

  static HermitianMatrix from_real(const RealMatrix& m) { return HermitianMatrix(m.cast<Complex>()); }

  /// Rank-one projector |v><v| (v is not normalised here).
  static HermitianMatrix projector(const ComplexVector& v) { return HermitianMatrix(v * v.adjoint()); }

  Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

  double trace() const { return m_.trace().real(); }

 private:
  ComplexMatrix m_;
};

/// Hilbert-Schmidt inner product Tr(A B^dagger).
template <typename DerivedA, typename DerivedB>
Complex hs_inner(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: shape mismatch " + detail::shape_of(a.rows(), a.cols()) + " vs " +
                         detail::shape_of(b.rows(), b.cols()));
  }
  Complex acc{0.0, 0.0};
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i) acc += Complex(a(i, j)) * std::conj(Complex(b(i, j)));
  return acc;
}

inline Complex hs_inner(const HermitianMatrix& a, const HermitianMatrix& b) {
  return hs_inner(a.matrix(), b.matrix());
}

/// Kronecker product, row index of the result is i_a * rows(B) + i_b.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                      typename DerivedB::Scalar>::ReturnType;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::kroneckerProduct(a.template cast<Scalar>(), b.template cast<Scalar>());
  return out;
}

inline HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(kron(a.matrix(), b.matrix()));
}

struct EigenDecomposition {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns are eigenvectors, unitary
};

inline EigenDecomposition eig_hermitian(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) throw ValueError("eigendecomposition did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

inline RealVector eigenvalues(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ValueError("eigendecomposition did not converge");
  return solver.eigenvalues();
}

inline double min_eigenvalue(const HermitianMatrix& a) { return eigenvalues(a)(0); }

/// Singular values in descending order. Values below 1e-12 * largest are set to exactly zero.
template <typename Derived>
RealVector svd_values(const Eigen::MatrixBase<Derived>& a) {
  using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.size() == 0) return RealVector{};
  Eigen::JacobiSVD<Plain> svd(a.eval());
  RealVector values = svd.singularValues();
  const double cutoff = tol::kNegligibleSingular * values(0);
  for (Index i = 0; i < values.size(); ++i)
    if (values(i) < cutoff) values(i) = 0.0;
  return values;
}

/// Thin real SVD A = U diag(values) V^T, values descending.
struct RealSvd {
  RealMatrix u;
  RealVector values;
  RealMatrix v;
};

inline RealSvd svd_real(const RealMatrix& a) {
  Eigen::JacobiSVD<RealMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

template <typename Derived>
double trace_norm(const Eigen::MatrixBase<Derived>& a) {
  return svd_values(a).sum();
}

inline double trace_norm(const HermitianMatrix& a) { return trace_norm(a.matrix()); }

template <typename Derived>
double op_norm(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0.0;
  return svd_values(a)(0);
}

enum class Subsystem { First = 1, Second = 2 };

/// Block-wise transpose of one tensor factor of a d1*d2 operator.
inline HermitianMatrix partial_transpose(const HermitianMatrix& x, int d1, int d2,
                                         Subsystem which = Subsystem::Second) {
  if (d1 < 1 || d2 < 1 || x.dim() != Index(d1) * d2) {
    std::ostringstream os;
    os << "partial_transpose: dim " << x.dim() << " != " << d1 << "*" << d2;
    throw DimensionError(os.str());
  }
  const ComplexMatrix& m = x.matrix();
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j)
      for (int k = 0; k < d1; ++k)
        for (int l = 0; l < d2; ++l) {
          const Index row = Index(i) * d2 + j;
          const Index col = Index(k) * d2 + l;
          if (which == Subsystem::Second)
            out(row, col) = m(Index(i) * d2 + l, Index(k) * d2 + j);
          else
            out(row, col) = m(Index(k) * d2 + j, Index(i) * d2 + l);
        }
  return HermitianMatrix(std::move(out));
}

/// Trace over one tensor factor of a d1*d2 operator.
inline HermitianMatrix partial_trace(const HermitianMatrix& x, int d1, int d2, Subsystem traced) {
  if (d1 < 1 || d2 < 1 || x.dim() != Index(d1) * d2)
    throw DimensionError("partial_trace: dimension mismatch");
  const ComplexMatrix& m = x.matrix();
  if (traced == Subsystem::Second) {
    ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
    for (int i = 0; i < d1; ++i)
      for (int k = 0; k < d1; ++k)
        for (int j = 0; j < d2; ++j) out(i, k) += m(Index(i) * d2 + j, Index(k) * d2 + j);
    return HermitianMatrix(std::move(out));
  }
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (int j = 0; j < d2; ++j)
    for (int l = 0; l < d2; ++l)
      for (int i = 0; i < d1; ++i) out(j, l) += m(Index(i) * d2 + j, Index(i) * d2 + l);
  return HermitianMatrix(std::move(out));
}

struct MehtaVerdict {
  double lhs;  // Tr A^2
  double rhs;  // (Tr A)^2 / (d - 1)
  bool satisfied;
};

/// Mehta's lemma: Tr A^2 <= (Tr A)^2/(d-1) implies A >= 0. Sufficient only.
inline MehtaVerdict mehta_positive(const HermitianMatrix& a) {
  const Index d = a.dim();
  if (d < 2) throw DimensionError("mehta_positive requires d >= 2");
  const double tr = a.trace();
  const double tr2 = (a.matrix() * a.matrix()).trace().real();
  const double rhs = tr * tr / double(d - 1);
  // A negative trace cannot be certified even if the squared inequality holds.
  const bool ok = tr2 <= rhs + tol::kMehtaSlack && tr >= 0.0;
  return {tr2, rhs, ok};
}

}  // namespace witnesskit
