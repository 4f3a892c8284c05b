#pragma once

// Dense complex linear algebra for desk-scale operators: adjoints, numerical
// kernels, spectra, and the matrix exponential / principal logarithm.

#include <Eigen/Dense>
#include <complex>

namespace miso {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Orthonormal basis stored as the columns of `basis` (rows = ambient dim).
struct Subspace {
  ComplexMatrix basis;

  Eigen::Index dimension() const { return basis.cols(); }
  Eigen::Index ambient_dimension() const { return basis.rows(); }
  /// Orthogonal projector onto the subspace.
  ComplexMatrix projector() const { return basis * basis.adjoint(); }
};

/// Throws DomainError unless m is square, nonempty and finite.
void require_square(const ComplexMatrix& m, const char* what);

ComplexMatrix adjoint(const ComplexMatrix& m);

/// Spectral (operator 2-) norm.
double operator_norm(const ComplexMatrix& m);

/// Singular values in decreasing order.
Eigen::VectorXd singular_values(const ComplexMatrix& m);

/// Null space: right singular vectors whose singular value is below
/// tol * sigma_max. The zero matrix has the whole space as kernel.
Subspace kernel(const ComplexMatrix& m, double tol = 1e-12);

/// Eigenvalues from the complex Schur form.
ComplexVector eigenvalues(const ComplexMatrix& m);

double spectral_radius(const ComplexMatrix& m);

/// e^M by scaling and squaring with a degree-13 Padé kernel (or a lower
/// degree when the 1-norm permits).
ComplexMatrix matrix_exp(const ComplexMatrix& m);

/// e^{tA} for an upper-triangular (Schur) factor; `unitary` undoes the
/// similarity. Used by semigroups that cache their Schur form.
ComplexMatrix matrix_exp_schur(const ComplexMatrix& unitary, const ComplexMatrix& triangular,
                               double t);

/// Principal logarithm through the Schur form and inverse scaling and
/// squaring. Throws SingularMatrix when |lambda| <= tol * ||M|| for some
/// eigenvalue and BranchCut when an eigenvalue lies on (-inf, 0).
ComplexMatrix matrix_log_principal(const ComplexMatrix& m, double tol = 1e-12);

/// Integer power by repeated multiplication (k >= 0).
ComplexMatrix matrix_power(const ComplexMatrix& m, int k);

}  // namespace miso
