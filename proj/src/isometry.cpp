#include "miso/isometry.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "miso/differences.hpp"
#include "miso/error.hpp"

namespace miso {
namespace {

// Powers computed by repeated multiplication; matrices here are desk-scale
// and eigendecompositions misbehave on non-normal inputs.
std::vector<ComplexMatrix> powers(const ComplexMatrix& t, int m) {
  std::vector<ComplexMatrix> p;
  p.reserve(static_cast<std::size_t>(m) + 1);
  p.push_back(ComplexMatrix::Identity(t.rows(), t.cols()));
  for (int k = 1; k <= m; ++k) p.push_back(p.back() * t);
  return p;
}

void require_order(int m, const char* what) {
  if (m < 1) throw DomainError(std::string(what) + ": m must be at least 1");
}

void require_vector(const ComplexMatrix& t, const ComplexVector& x, const char* what) {
  require_square(t, what);
  if (x.size() != t.cols()) {
    throw DimensionMismatch(std::string(what) + ": vector length " + std::to_string(x.size()) +
                            " does not match dimension " + std::to_string(t.cols()));
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

// Largest |eigenvalue| of a Hermitian matrix and its eigenvector.
std::pair<double, ComplexVector> top_eigenpair(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(h));
  const Eigen::VectorXd& ev = es.eigenvalues();
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < ev.size(); ++i) {
    if (std::fabs(ev(i)) > std::fabs(ev(best))) best = i;
  }
  return {std::fabs(ev(best)), es.eigenvectors().col(best)};
}

}  // namespace

double misometry_defect_vector(const ComplexMatrix& t, int m, const ComplexVector& x) {
  require_order(m, "misometry_defect_vector");
  require_vector(t, x, "misometry_defect_vector");
  double total = 0.0;
  double binom = 1.0;
  ComplexVector tkx = x;
  for (int k = 0; k <= m; ++k) {
    const double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
    total += sign * binom * tkx.squaredNorm();
    binom = binom * (m - k) / (k + 1);
    if (k < m) tkx = t * tkx;
  }
  return total;
}

ComplexMatrix misometry_defect_operator(const ComplexMatrix& t, int m) {
  require_order(m, "misometry_defect_operator");
  require_square(t, "misometry_defect_operator");
  const auto p = powers(t, m);
  ComplexMatrix total = ComplexMatrix::Zero(t.rows(), t.cols());
  double binom = 1.0;
  for (int k = 0; k <= m; ++k) {
    const double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
    total += (sign * binom) * (p[k].adjoint() * p[k]);
    binom = binom * (m - k) / (k + 1);
  }
  return hermitian_part(total);
}

double defect_scale(const ComplexMatrix& t, int m) {
  return std::max(1.0, std::pow(operator_norm(t), 2.0 * m));
}

DefectReport defect_report(const ComplexMatrix& t, int m, double tol, int table_max) {
  require_order(m, "defect_report");
  require_square(t, "defect_report");
  DefectReport r;
  r.order_tested = m;
  const auto [norm, vec] = top_eigenpair(misometry_defect_operator(t, m));
  r.defect_norm = norm;
  r.scale = defect_scale(t, m);
  r.verdict = r.defect_norm <= tol * r.scale;
  if (!r.verdict) r.witness = vec;
  for (int k = 1; k <= table_max; ++k) {
    r.per_order_table.emplace_back(k, top_eigenpair(misometry_defect_operator(t, k)).first);
  }
  return r;
}

std::optional<int> isometry_order(const ComplexMatrix& t, int m_max, double tol) {
  return isometry_order_on_window(t, t.rows(), m_max, tol);
}

std::optional<int> isometry_order_on_window(const ComplexMatrix& t, Eigen::Index window,
                                            int m_max, double tol) {
  require_order(m_max, "isometry_order");
  require_square(t, "isometry_order");
  if (window < 1 || window > t.rows()) throw DomainError("isometry_order: bad window");
  for (int m = 1; m <= m_max; ++m) {
    const ComplexMatrix d = misometry_defect_operator(t, m).topLeftCorner(window, window);
    const double norm = top_eigenpair(d).first;
    if (norm <= tol * defect_scale(t, m)) return m;
  }
  return std::nullopt;
}

bool power_norm_polynomial_check(const ComplexMatrix& t, const ComplexVector& x, int m,
                                 int n_samples, double tol) {
  require_order(m, "power_norm_polynomial_check");
  require_vector(t, x, "power_norm_polynomial_check");
  if (n_samples < m + 2) throw DomainError("power_norm_polynomial_check: need n_samples >= m+2");
  std::vector<double> values;
  values.reserve(n_samples);
  ComplexVector v = x;
  for (int n = 0; n < n_samples; ++n) {
    values.push_back(v.squaredNorm());
    v = t * v;
  }
  const double reference = *std::max_element(values.begin(), values.end());
  DifferenceSpec spec;
  spec.order = m;
  spec.tol = tol;
  spec.reference = reference;
  spec.slack = 64.0;
  return check_differences(values, {}, spec).vanishes;
}

cplx msymmetry_defect(const ComplexMatrix& a, int m, const ComplexVector& x) {
  require_order(m, "msymmetry_defect");
  require_vector(a, x, "msymmetry_defect");
  std::vector<ComplexVector> ax{x};
  for (int k = 1; k <= m; ++k) ax.push_back(a * ax.back());
  cplx total = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= m; ++k) {
    const double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
    // <A^{m-k} x, A^k x> = (A^k x)* (A^{m-k} x)
    total += sign * binom * ax[k].dot(ax[m - k]);
    binom = binom * (m - k) / (k + 1);
  }
  return total;
}

double kernel_condition_residual(const ComplexMatrix& t, double tol) {
  require_square(t, "kernel_condition_check");
  const Subspace ker = kernel(t.adjoint(), tol);
  if (ker.dimension() == 0) return 0.0;
  const ComplexMatrix image = t.adjoint() * t * ker.basis;
  const ComplexMatrix outside = image - ker.basis * (ker.basis.adjoint() * image);
  return operator_norm(outside) / std::max(1.0, operator_norm(t) * operator_norm(t));
}

bool kernel_condition_check(const ComplexMatrix& t, double tol) {
  return kernel_condition_residual(t, tol) <= tol;
}

EmbeddabilityReport embeddability_report(const ComplexMatrix& t, double tol) {
  require_square(t, "embeddability_report");
  EmbeddabilityReport r;
  const Eigen::VectorXd s = singular_values(t);
  r.smallest_singular_value = s(s.size() - 1);
  r.embeddable = r.smallest_singular_value > tol * std::max(1.0, s(0));
  r.ker_dim = kernel(t, tol).dimension();
  r.coker_dim = kernel(t.adjoint(), tol).dimension();
  if (r.embeddable) {
    try {
      r.generator = matrix_log_principal(t, tol);
    } catch (const BranchCut& e) {
      r.log_error = e.what();
    }
  }
  return r;
}

}  // namespace miso
