#pragma once

// m-isometry and m-symmetry defects of matrices.
//
// The m-th defect operator of T is
//
//   Delta_m(T) = sum_{k=0}^m (-1)^{m-k} C(m,k) T*^k T^k,
//
// a Hermitian matrix that vanishes exactly when T is an m-isometry. Verdicts
// compare ||Delta_m(T)|| against tol * max(1, ||T||^{2m}).

#include <optional>
#include <utility>
#include <vector>

#include "miso/matrix_core.hpp"

namespace miso {

struct DefectReport {
  int order_tested = 1;
  double defect_norm = 0.0;
  double scale = 1.0;
  bool verdict = false;
  /// Top eigenvector of Delta_m(T) by |eigenvalue|; present iff !verdict.
  std::optional<ComplexVector> witness;
  /// (m, ||Delta_m(T)||) for m = 1..table_max.
  std::vector<std::pair<int, double>> per_order_table;
};

/// sum_k C(m,k) (-1)^{m-k} ||T^k x||^2 (real, possibly negative).
double misometry_defect_vector(const ComplexMatrix& t, int m, const ComplexVector& x);

ComplexMatrix misometry_defect_operator(const ComplexMatrix& t, int m);

/// max(1, ||T||^{2m}): the magnitude ||T^k x||^2 can reach at order m.
double defect_scale(const ComplexMatrix& t, int m);

/// Verdict on Delta_m(T); per_order_table covers 1..table_max (0 = none).
DefectReport defect_report(const ComplexMatrix& t, int m, double tol, int table_max = 0);

/// Least m <= m_max with a vanishing defect, if any.
std::optional<int> isometry_order(const ComplexMatrix& t, int m_max, double tol = 1e-8);

/// isometry_order for the compression P Delta_m(T) P onto the first
/// `window` coordinates. Truncated shifts are m-isometries only away from the
/// truncation edge.
std::optional<int> isometry_order_on_window(const ComplexMatrix& t, Eigen::Index window,
                                            int m_max, double tol = 1e-8);

/// m-th finite differences of n -> ||T^n x||^2, n = 0..n_samples-1, vanish.
bool power_norm_polynomial_check(const ComplexMatrix& t, const ComplexVector& x, int m,
                                 int n_samples, double tol = 1e-8);

/// sum_k (-1)^{m-k} C(m,k) <A^{m-k} x, A^k x>, with <u, v> = v* u.
cplx msymmetry_defect(const ComplexMatrix& a, int m, const ComplexVector& x);

/// T*T maps Ker T* into Ker T* (residual after projecting back onto Ker T*).
bool kernel_condition_check(const ComplexMatrix& t, double tol = 1e-8);
double kernel_condition_residual(const ComplexMatrix& t, double tol = 1e-8);

struct EmbeddabilityReport {
  bool embeddable = false;
  Eigen::Index ker_dim = 0;
  Eigen::Index coker_dim = 0;
  double smallest_singular_value = 0.0;
  std::optional<ComplexMatrix> generator;
  /// Set when the matrix is invertible but the principal logarithm hit its
  /// branch cut; the verdict stays reported.
  std::optional<std::string> log_error;
};

/// Invertible matrices embed in e^{tA}; the generator is the principal
/// logarithm when one exists.
EmbeddabilityReport embeddability_report(const ComplexMatrix& t, double tol = 1e-10);

}  // namespace miso
