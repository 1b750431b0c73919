#pragma once

// Orthonormal Hermitian operator bases (generalized Gell-Mann) and the
// generalized Bloch-vector coordinates of operators in them.

#include <cmath>
#include <vector>

#include "witnesskit/matcore.hpp"

namespace witnesskit {

/// Ordered orthonormal Hermitian basis of d x d operators; element 0 is I/sqrt(d),
/// all others are traceless.
class OperatorBasis {
 public:
  OperatorBasis(int dim, std::vector<HermitianMatrix> elements)
      : dim_(dim), elements_(std::move(elements)) {
    if (dim_ < 2) throw DimensionError("operator basis requires d >= 2");
    if (elements_.size() != std::size_t(dim_) * dim_)
      throw DimensionError("operator basis must have d^2 elements");
    for (const auto& e : elements_)
      if (e.dim() != dim_) throw DimensionError("basis element has wrong dimension");
  }

  int dim() const { return dim_; }
  /// d^2
  Index size() const { return Index(elements_.size()); }
  const HermitianMatrix& operator[](Index i) const { return elements_[std::size_t(i)]; }
  const std::vector<HermitianMatrix>& elements() const { return elements_; }

 private:
  int dim_;
  std::vector<HermitianMatrix> elements_;
};

enum class GellMannKind { Identity, Symmetric, Antisymmetric, Diagonal };

/// Kind of the Gell-Mann element at position `index` in the canonical ordering
/// [identity, symmetric pairs, antisymmetric pairs, diagonals].
inline GellMannKind gell_mann_kind(int d, Index index) {
  const Index pairs = Index(d) * (d - 1) / 2;
  if (index == 0) return GellMannKind::Identity;
  if (index <= pairs) return GellMannKind::Symmetric;
  if (index <= 2 * pairs) return GellMannKind::Antisymmetric;
  return GellMannKind::Diagonal;
}

/// Generalized Gell-Mann basis normalised to Tr(G_a G_b) = delta_ab.
///
/// Order: I/sqrt(d); (|j><k| + |k><j|)/sqrt(2) for j<k lexicographic;
/// (-i|j><k| + i|k><j|)/sqrt(2) for j<k lexicographic;
/// (sum_{m<l} |m><m| - l|l><l|)/sqrt(l(l+1)) for l = 1..d-1.
inline OperatorBasis gell_mann_basis(int d) {
  if (d < 2) throw DimensionError("gell_mann_basis requires d >= 2");
  std::vector<HermitianMatrix> out;
  out.reserve(std::size_t(d) * d);
  out.push_back(HermitianMatrix(ComplexMatrix::Identity(d, d) / std::sqrt(double(d))));

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = inv_sqrt2;
      m(k, j) = inv_sqrt2;
      out.emplace_back(std::move(m));
    }
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = Complex(0.0, -inv_sqrt2);
      m(k, j) = Complex(0.0, inv_sqrt2);
      out.emplace_back(std::move(m));
    }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    const double norm = 1.0 / std::sqrt(double(l) * (l + 1));
    for (int i = 0; i < l; ++i) m(i, i) = norm;
    m(l, l) = -double(l) * norm;
    out.emplace_back(std::move(m));
  }
  return OperatorBasis(d, std::move(out));
}

/// Generalized Bloch coordinates (x0, x) of an operator.
struct BlochCoords {
  double x0 = 0.0;
  RealVector x;

  /// (x0, x_1, ..., x_{d^2-1}) as one vector.
  RealVector full() const {
    RealVector v(x.size() + 1);
    v(0) = x0;
    v.tail(x.size()) = x;
    return v;
  }

  static BlochCoords from_full(const RealVector& v) {
    if (v.size() < 1) throw DimensionError("Bloch coordinate vector is empty");
    return {v(0), v.tail(v.size() - 1)};
  }
};

/// x_a = Tr(G_a X).
inline BlochCoords expand(const HermitianMatrix& x, const OperatorBasis& basis) {
  if (x.dim() != basis.dim()) throw DimensionError("expand: operator and basis dimensions differ");
  RealVector full(basis.size());
  for (Index a = 0; a < basis.size(); ++a)
    full(a) = (basis[a].matrix() * x.matrix()).trace().real();
  return BlochCoords::from_full(full);
}

/// sum_a c_a G_a.
inline HermitianMatrix reconstruct(const BlochCoords& c, const OperatorBasis& basis) {
  if (c.x.size() + 1 != basis.size()) throw DimensionError("reconstruct: coordinate length mismatch");
  const int d = basis.dim();
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m += c.x0 * basis[0].matrix();
  for (Index a = 1; a < basis.size(); ++a) m += c.x(a - 1) * basis[a].matrix();
  return HermitianMatrix(std::move(m));
}

/// Coefficient matrix M (d2^2 x d1^2) of a bipartite operator W in the product
/// basis G_a^T (x) O_b:  M(b, a) = Tr(W (G_a^T (x) O_b)).
inline RealMatrix transposed_product_coefficients(const HermitianMatrix& w, const OperatorBasis& first,
                                                  const OperatorBasis& second) {
  const int d1 = first.dim();
  const int d2 = second.dim();
  if (w.dim() != Index(d1) * d2) throw DimensionError("operator dimension is not d1*d2");
  const ComplexMatrix& m = w.matrix();
  RealMatrix out(second.size(), first.size());
  // Tr(W (G^T (x) O)) = sum_{ijkl} W_{(ij),(kl)} G_{ik} O_{lj}
  for (Index a = 0; a < first.size(); ++a) {
    const ComplexMatrix& g = first[a].matrix();
    for (Index b = 0; b < second.size(); ++b) {
      const ComplexMatrix& o = second[b].matrix();
      Complex acc{0.0, 0.0};
      for (int i = 0; i < d1; ++i)
        for (int k = 0; k < d1; ++k) {
          const Complex gik = g(i, k);
          if (gik == Complex{0.0, 0.0}) continue;
          for (int j = 0; j < d2; ++j)
            for (int l = 0; l < d2; ++l) acc += m(Index(i) * d2 + j, Index(k) * d2 + l) * gik * o(l, j);
        }
      out(b, a) = acc.real();
    }
  }
  return out;
}

/// sum_{a,b} M(b, a) G_a^T (x) O_b.
inline HermitianMatrix assemble_transposed_product(const RealMatrix& coeffs, const OperatorBasis& first,
                                                   const OperatorBasis& second) {
  if (coeffs.rows() != second.size() || coeffs.cols() != first.size())
    throw DimensionError("coefficient matrix must be d2^2 x d1^2");
  const Index n = Index(first.dim()) * second.dim();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index a = 0; a < first.size(); ++a) {
    const ComplexMatrix gt = first[a].matrix().transpose();
    for (Index b = 0; b < second.size(); ++b) {
      const double c = coeffs(b, a);
      if (c == 0.0) continue;
      out += c * kron(gt, second[b].matrix());
    }
  }
  return HermitianMatrix(std::move(out));
}

/// SWAP on C^d (x) C^d: |i,j> -> |j,i>.
inline ComplexMatrix swap_operator(int d) {
  const Index n = Index(d) * d;
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) p(Index(j) * d + i, Index(i) * d + j) = 1.0;
  return p;
}

/// ||sum_a G_a (x) G_a - SWAP||_F
inline double swap_identity_residual(const OperatorBasis& basis) {
  const int d = basis.dim();
  ComplexMatrix sum = ComplexMatrix::Zero(Index(d) * d, Index(d) * d);
  for (const auto& g : basis.elements()) sum += kron(g.matrix(), g.matrix());
  return (sum - swap_operator(d)).norm();
}

/// ||sum_a G_a^T (x) G_a - d P+||_F with P+ the projector on sum_m |mm>/sqrt(d).
inline double max_entangled_identity_residual(const OperatorBasis& basis) {
  const int d = basis.dim();
  const Index n = Index(d) * d;
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& g : basis.elements()) sum += kron(ComplexMatrix(g.matrix().transpose()), g.matrix());
  ComplexVector phi = ComplexVector::Zero(n);
  for (int m = 0; m < d; ++m) phi(Index(m) * d + m) = 1.0;  // sqrt(d) |phi+>
  return (sum - phi * phi.adjoint()).norm();
}

}  // namespace witnesskit
