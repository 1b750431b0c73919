#pragma once

// Correlation-matrix based separability criteria: CCNR, the (x1, x2) filter
// family, de Vicente's bound and the F-values of the optimal-witness simplex,
// plus the PPT test, bundled into a DetectionReport.

#include <cmath>
#include <sstream>
#include <vector>

#include "witnesskit/basis.hpp"
#include "witnesskit/matcore.hpp"

namespace witnesskit {

/// State data in the product basis G_a^T (x) O_b:
/// rho = sum C(b, a) G_a^T (x) O_b, with c00 = C(0,0), r1 = C(0, 1:), r2 = C(1:, 0), Q = C(1:, 1:).
struct CorrelationData {
  int d1 = 2;
  int d2 = 2;
  RealMatrix c;  // d2^2 x d1^2

  double c00() const { return c(0, 0); }
  RealVector r1() const { return c.row(0).tail(c.cols() - 1).transpose(); }
  RealVector r2() const { return c.col(0).tail(c.rows() - 1); }
  RealMatrix q() const { return c.bottomRightCorner(c.rows() - 1, c.cols() - 1); }
};

struct FilterParams {
  double x1 = 0.0;
  double x2 = 0.0;
};

struct FilterResult {
  FilterParams params;
  double value;
  double bound;
};

struct FValues {
  double f1;
  double f2;
  double f3;
};

inline void require_density_dims(const HermitianMatrix& rho, int d1, int d2) {
  if (d1 < 2 || d2 < 2) throw DimensionError("subsystem dimensions must be >= 2");
  if (rho.dim() != Index(d1) * d2) {
    std::ostringstream os;
    os << "state dimension " << rho.dim() << " != " << d1 << "*" << d2;
    throw DimensionError(os.str());
  }
}

inline void require_unit_trace(const HermitianMatrix& rho, double eps = 1e-10) {
  if (std::abs(rho.trace() - 1.0) > eps) {
    std::ostringstream os;
    os << "state trace is " << rho.trace() << ", expected 1";
    throw ValueError(os.str());
  }
}

inline CorrelationData correlation_data(const HermitianMatrix& rho, int d1, int d2, double trace_tol = 1e-10) {
  require_density_dims(rho, d1, d2);
  require_unit_trace(rho, trace_tol);
  return {d1, d2, transposed_product_coefficients(rho, gell_mann_basis(d1), gell_mann_basis(d2))};
}

/// ||C||_1; separable states give <= 1.
inline double ccnr_value(const CorrelationData& cd) { return trace_norm(cd.c); }

/// ||Q||_1; separable states give <= devicente_threshold.
inline double devicente_value(const CorrelationData& cd) { return trace_norm(cd.q()); }

inline double devicente_threshold(int d1, int d2) {
  return std::sqrt(double(d1 - 1) * (d2 - 1) / (double(d1) * d2));
}

/// N(x) = sqrt((d - 1 + x^2) / d)
inline double filter_normalisation(int d, double x) { return std::sqrt((d - 1.0 + x * x) / d); }

/// ||D1(x1) C D2(x2)||_1 against N1(x1) N2(x2), with D = diag(x, 1, ..., 1).
inline FilterResult filter_value(const CorrelationData& cd, FilterParams p) {
  if (!(p.x1 >= 0.0) || !(p.x2 >= 0.0)) throw ValueError("filter parameters must be non-negative");
  // C is stored d2^2 x d1^2, so D1 acts on its columns and D2 on its rows.
  RealMatrix filtered = cd.c;
  filtered.col(0) *= p.x1;
  filtered.row(0) *= p.x2;
  return {p, trace_norm(filtered), filter_normalisation(cd.d1, p.x1) * filter_normalisation(cd.d2, p.x2)};
}

inline FValues f_values(const CorrelationData& cd) {
  const double d1 = cd.d1;
  const double d2 = cd.d2;
  return {1.0 - cd.r1().norm() * std::sqrt(d1 * d2 / (d1 - 1.0)),
          1.0 - cd.r2().norm() * std::sqrt(d1 * d2 / (d2 - 1.0)),
          1.0 - devicente_value(cd) * std::sqrt(d1 * d2 / ((d1 - 1.0) * (d2 - 1.0)))};
}

inline std::vector<FilterParams> default_filters() { return {{0.0, 0.0}, {1.0, 1.0}}; }

struct DetectionReport {
  int d1 = 2;
  int d2 = 2;
  double ccnr = 0.0;
  double devicente = 0.0;
  double devicente_threshold = 0.0;
  std::vector<FilterResult> filter_results;
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
  double ppt_min_eigenvalue = 0.0;

  struct Verdicts {
    bool ccnr = false;
    bool devicente = false;
    bool ppt = false;  // true when the partial transpose has a negative eigenvalue
    std::vector<bool> filter;
  } verdicts;

  bool any_detected() const {
    if (verdicts.ccnr || verdicts.devicente || verdicts.ppt) return true;
    for (bool f : verdicts.filter)
      if (f) return true;
    return false;
  }
};

inline bool exceeds(double value, double bound) { return value > bound + tol::kVerdict; }

inline DetectionReport detect(const HermitianMatrix& rho, int d1, int d2,
                              const std::vector<FilterParams>& filters = default_filters(),
                              double trace_tol = 1e-10) {
  const CorrelationData cd = correlation_data(rho, d1, d2, trace_tol);
  DetectionReport rep;
  rep.d1 = d1;
  rep.d2 = d2;
  rep.ccnr = ccnr_value(cd);
  rep.devicente = devicente_value(cd);
  rep.devicente_threshold = devicente_threshold(d1, d2);
  for (const auto& p : filters) {
    rep.filter_results.push_back(filter_value(cd, p));
    const auto& fr = rep.filter_results.back();
    rep.verdicts.filter.push_back(exceeds(fr.value, fr.bound));
  }
  const FValues f = f_values(cd);
  rep.f1 = f.f1;
  rep.f2 = f.f2;
  rep.f3 = f.f3;
  rep.ppt_min_eigenvalue = min_eigenvalue(partial_transpose(rho, d1, d2, Subsystem::Second));
  rep.verdicts.ccnr = exceeds(rep.ccnr, 1.0);
  rep.verdicts.devicente = exceeds(rep.devicente, rep.devicente_threshold);
  rep.verdicts.ppt = rep.ppt_min_eigenvalue < -tol::kVerdict;
  return rep;
}

}  // namespace witnesskit
