#pragma once

// Matrix semigroups T(t) = e^{tA} and the four equivalent characterizations
// of m-isometric semigroups: (i) every T(t) is an m-isometry, (ii) every
// trajectory ||T(t)x||^2 is a polynomial of degree < m, (iii) the generator
// identity sum_k C(m,k) <A^{m-k}x, A^k x> = 0, (iv) the cogenerator
// V = (A+I)(A-I)^{-1} is an m-isometry.

#include <optional>
#include <string>
#include <vector>

#include "miso/config.hpp"
#include "miso/matrix_core.hpp"

namespace miso {

class GeneratorSemigroup {
 public:
  /// Caches the complex Schur form of `generator`.
  explicit GeneratorSemigroup(ComplexMatrix generator);

  const ComplexMatrix& generator() const { return generator_; }
  Eigen::Index dimension() const { return generator_.rows(); }

  /// e^{tA}; negative t is allowed for group probes.
  ComplexMatrix evolve(double t) const;

  const ComplexVector& spectrum() const { return spectrum_; }

 private:
  ComplexMatrix generator_;
  ComplexMatrix schur_u_;
  ComplexMatrix schur_t_;
  ComplexVector spectrum_;
};

struct TrajectorySample {
  std::vector<double> t_grid;
  std::vector<double> values;
  ComplexVector x;

  double step() const { return t_grid.size() > 1 ? t_grid[1] - t_grid[0] : 0.0; }
};

struct BoundReport {
  double spectral_bound = 0.0;
  double growth_estimate = 0.0;
};

BoundReport bound_report(const GeneratorSemigroup& g, double t_probe);

/// (A+I)(A-I)^{-1}. Throws ResolventViolation when A-I is numerically
/// singular (smallest singular value <= tol * max(1, ||A-I||)).
ComplexMatrix cogenerator(const GeneratorSemigroup& g, double tol = 1e-12);

/// ||(A+I)(A-I)^{-1} - (I + 2(A-I)^{-1})|| for the same generator.
double cogenerator_cross_check(const GeneratorSemigroup& g, double tol = 1e-12);

/// sum_k C(m,k) <A^{m-k}x, A^k x> (no alternating sign).
cplx generator_condition(const ComplexMatrix& a, int m, const ComplexVector& x);

/// Hermitian operator B with <Bx, x> = generator_condition(a, m, x).
ComplexMatrix generator_condition_operator(const ComplexMatrix& a, int m);

TrajectorySample sample_trajectory(const GeneratorSemigroup& g, const ComplexVector& x,
                                   double t_max, int n);

/// Least d <= d_max whose (d+1)-th finite differences vanish (relative to
/// max|values|, above the roundoff floor), checked at unit stride and at the
/// widest stride whose stencil fits the sample.
std::optional<int> polynomial_degree(const TrajectorySample& sample, int d_max, double tol);

/// Whether the order-th differences of the sample vanish in the sense above;
/// `residual` receives max |difference| / max|values|.
bool trajectory_differences_vanish(const TrajectorySample& sample, int order, double tol,
                                   double* residual = nullptr);

struct ConditionVerdict {
  bool pass = false;
  double residual = 0.0;
  std::optional<ComplexVector> witness;
  std::string note;
};

struct SemigroupIsometryReport {
  int m = 1;
  ConditionVerdict cond_i;
  ConditionVerdict cond_ii;
  ConditionVerdict cond_iii;
  ConditionVerdict cond_iv;

  bool all_pass() const { return cond_i.pass && cond_ii.pass && cond_iii.pass && cond_iv.pass; }
  bool agree() const {
    return cond_i.pass == cond_ii.pass && cond_ii.pass == cond_iii.pass &&
           cond_iii.pass == cond_iv.pass;
  }
};

/// Evaluates all four conditions. (i) probes T(t) on the trajectory grid,
/// (ii) checks trajectories of the basis and polarization vectors
/// e_j + e_k, e_j + i e_k, (iii) and (iv) are operator-level.
/// Throws ResolventViolation when the cogenerator is undefined.
SemigroupIsometryReport check_semigroup_m_isometry(const GeneratorSemigroup& g, int m,
                                                   const ProbeConfig& cfg);

/// Least m <= m_max at which every condition passes.
std::optional<int> semigroup_isometry_order(const GeneratorSemigroup& g, int m_max,
                                            const ProbeConfig& cfg);

/// Jordan block of order n (ones on the superdiagonal) in the top-left of a
/// dim x dim zero matrix.
GeneratorSemigroup nilpotent_generator(int n, int dim);

/// Generator iB; m-symmetric B gives an m-isometric semigroup.
GeneratorSemigroup msymmetric_generator(const ComplexMatrix& b);

/// Defect verdict for T(t) at n grid points of [t1, t2].
bool interval_test(const GeneratorSemigroup& g, int m, double t1, double t2, int n, double tol);

struct GroupTestResult {
  bool pass_t1 = false;
  bool pass_t2 = false;
  bool pass_grid = false;
};

/// Defect verdicts at t1, t2, and on a grid of `grid_points` over
/// [-(t1+t2), t1+t2]. Irrationality of t1/t2 is the caller's assertion.
GroupTestResult group_two_point_test(const GeneratorSemigroup& g, int m, double t1, double t2,
                                     double tol, int grid_points = 65);

/// Both sides of the binomial identity linking (iii) and (iv):
///   lhs = 2^m sum_k C(m,k) <A^{m-k}x, A^k x>
///   rhs = sum_k (-1)^{m-k} C(m,k) ||(A+I)^k (A-I)^{m-k} x||^2
/// plus the absolute-sum scale sum_k C(m,k) ||(A+I)^k (A-I)^{m-k} x||^2.
struct CayleyIdentitySides {
  cplx lhs;
  double rhs = 0.0;
  double scale = 0.0;
};
CayleyIdentitySides cayley_identity_sides(const ComplexMatrix& a, int m, const ComplexVector& x);

}  // namespace miso
