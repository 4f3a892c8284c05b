#include "miso/semigroup.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "miso/differences.hpp"
#include "miso/error.hpp"
#include "miso/isometry.hpp"

namespace miso {
namespace {

// Trajectory values pass through a matrix exponential, so their noise floor
// is wider than for closed-form samples.
constexpr double kTrajectorySlack = 64.0;

void require_order(int m, const char* what) {
  if (m < 1) throw DomainError(std::string(what) + ": m must be at least 1");
}

void require_vector(const ComplexMatrix& a, const ComplexVector& x, const char* what) {
  require_square(a, what);
  if (x.size() != a.cols()) {
    throw DimensionMismatch(std::string(what) + ": vector length " + std::to_string(x.size()) +
                            " does not match dimension " + std::to_string(a.cols()));
  }
}

std::vector<double> binomials(int m) {
  std::vector<double> c(static_cast<std::size_t>(m) + 1);
  double b = 1.0;
  for (int k = 0; k <= m; ++k) {
    c[k] = b;
    b = b * (m - k) / (k + 1);
  }
  return c;
}

// Basis vectors plus e_j + e_k and e_j + i e_k: a Hermitian form vanishing on
// all of these vanishes identically.
std::vector<ComplexVector> polarization_vectors(Eigen::Index n) {
  std::vector<ComplexVector> out;
  for (Eigen::Index j = 0; j < n; ++j) out.push_back(ComplexVector::Unit(n, j));
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      ComplexVector v = ComplexVector::Unit(n, j);
      v(k) = 1.0;
      out.push_back(v);
      v(k) = cplx(0.0, 1.0);
      out.push_back(v);
    }
  }
  return out;
}

std::vector<double> uniform_grid(double a, double b, int n) {
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = a + (b - a) * i / (n - 1);
  return t;
}

bool defect_passes(const ComplexMatrix& t, int m, double tol) {
  return defect_report(t, m, tol).verdict;
}

}  // namespace

GeneratorSemigroup::GeneratorSemigroup(ComplexMatrix generator)
    : generator_(std::move(generator)) {
  require_square(generator_, "GeneratorSemigroup");
  Eigen::ComplexSchur<ComplexMatrix> schur(generator_);
  schur_u_ = schur.matrixU();
  schur_t_ = schur.matrixT();
  spectrum_ = schur_t_.diagonal();
}

ComplexMatrix GeneratorSemigroup::evolve(double t) const {
  if (t == 0.0) return ComplexMatrix::Identity(dimension(), dimension());
  return matrix_exp_schur(schur_u_, schur_t_, t);
}

BoundReport bound_report(const GeneratorSemigroup& g, double t_probe) {
  if (!(t_probe > 0.0)) throw DomainError("bound_report: t_probe must be positive");
  BoundReport r;
  r.spectral_bound = g.spectrum().real().maxCoeff();
  r.growth_estimate = std::log(spectral_radius(g.evolve(t_probe))) / t_probe;
  return r;
}

ComplexMatrix cogenerator(const GeneratorSemigroup& g, double tol) {
  const auto n = g.dimension();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix shifted = g.generator() - ident;
  const Eigen::VectorXd s = singular_values(shifted);
  if (!(s(n - 1) > tol * std::max(1.0, s(0)))) {
    std::ostringstream os;
    os << "cogenerator: A - I is numerically singular (smallest singular value " << s(n - 1)
       << ")";
    throw ResolventViolation(os.str());
  }
  // V (A - I) = A + I  <=>  (A - I)^T V^T = (A + I)^T
  const ComplexMatrix vt =
      shifted.transpose().partialPivLu().solve((g.generator() + ident).transpose());
  return vt.transpose();
}

double cogenerator_cross_check(const GeneratorSemigroup& g, double tol) {
  const auto n = g.dimension();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix v = cogenerator(g, tol);
  const ComplexMatrix alt = ident + 2.0 * (g.generator() - ident).inverse();
  return operator_norm(v - alt);
}

cplx generator_condition(const ComplexMatrix& a, int m, const ComplexVector& x) {
  require_order(m, "generator_condition");
  require_vector(a, x, "generator_condition");
  std::vector<ComplexVector> ax{x};
  for (int k = 1; k <= m; ++k) ax.push_back(a * ax.back());
  const auto c = binomials(m);
  cplx total = 0.0;
  for (int k = 0; k <= m; ++k) total += c[k] * ax[k].dot(ax[m - k]);
  return total;
}

ComplexMatrix generator_condition_operator(const ComplexMatrix& a, int m) {
  require_order(m, "generator_condition_operator");
  require_square(a, "generator_condition_operator");
  std::vector<ComplexMatrix> p{ComplexMatrix::Identity(a.rows(), a.cols())};
  for (int k = 1; k <= m; ++k) p.push_back(p.back() * a);
  const auto c = binomials(m);
  ComplexMatrix total = ComplexMatrix::Zero(a.rows(), a.cols());
  for (int k = 0; k <= m; ++k) total += c[k] * (p[k].adjoint() * p[m - k]);
  return 0.5 * (total + total.adjoint());
}

TrajectorySample sample_trajectory(const GeneratorSemigroup& g, const ComplexVector& x,
                                   double t_max, int n) {
  if (!(t_max > 0.0)) throw DomainError("sample_trajectory: t_max must be positive");
  if (n < 4) throw DomainError("sample_trajectory: need at least 4 points");
  if (x.size() != g.dimension()) throw DimensionMismatch("sample_trajectory: vector length");
  TrajectorySample s;
  s.x = x;
  s.t_grid = uniform_grid(0.0, t_max, n);
  s.values.reserve(n);
  for (double t : s.t_grid) s.values.push_back((g.evolve(t) * x).squaredNorm());
  return s;
}

bool trajectory_differences_vanish(const TrajectorySample& sample, int order, double tol,
                                   double* residual) {
  const std::size_t n = sample.values.size();
  if (order < 1 || n < static_cast<std::size_t>(order) + 1) {
    throw DomainError("trajectory_differences_vanish: sample too short for order");
  }
  const double reference =
      std::max(*std::max_element(sample.values.begin(), sample.values.end()),
               std::numeric_limits<double>::min());
  DifferenceSpec spec;
  spec.order = order;
  spec.step = sample.step();
  spec.tol = tol;
  spec.reference = reference;
  spec.slack = kTrajectorySlack;

  bool vanish = true;
  double worst = 0.0;
  const std::size_t wide = (n - 1) / static_cast<std::size_t>(order);
  for (std::size_t stride : {std::size_t{1}, wide}) {
    spec.stride = stride;
    const DifferenceCheck c = check_differences(sample.values, {}, spec);
    vanish = vanish && c.vanishes;
    worst = std::max(worst, c.max_residual / reference);
    if (wide == 1) break;
  }
  if (residual) *residual = worst;
  return vanish;
}

std::optional<int> polynomial_degree(const TrajectorySample& sample, int d_max, double tol) {
  if (d_max < 0) throw DomainError("polynomial_degree: d_max must be nonnegative");
  if (sample.values.size() < static_cast<std::size_t>(d_max) + 2) {
    throw DomainError("polynomial_degree: need at least d_max + 2 samples");
  }
  for (int d = 0; d <= d_max; ++d) {
    if (trajectory_differences_vanish(sample, d + 1, tol)) return d;
  }
  return std::nullopt;
}

SemigroupIsometryReport check_semigroup_m_isometry(const GeneratorSemigroup& g, int m,
                                                   const ProbeConfig& cfg) {
  require_order(m, "check_semigroup_m_isometry");
  cfg.validate();
  if (cfg.points < m + 2) throw DomainError("check_semigroup_m_isometry: need points >= m + 2");
  SemigroupIsometryReport r;
  r.m = m;
  const double tol = cfg.tol_verdict;

  // (i) T(t) is an m-isometry on the trajectory grid.
  {
    ConditionVerdict& c = r.cond_i;
    c.pass = true;
    double worst_ratio = -1.0;
    for (double t : uniform_grid(0.0, cfg.t_max, cfg.points)) {
      const DefectReport d = defect_report(g.evolve(t), m, tol);
      const double ratio = d.defect_norm / d.scale;
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        if (!d.verdict) {
          c.witness = d.witness;
          std::ostringstream os;
          os << "worst defect at t = " << t;
          c.note = os.str();
        }
      }
      c.pass = c.pass && d.verdict;
    }
    c.residual = worst_ratio;
    if (c.pass) c.witness.reset();
  }

  // (ii) trajectories are polynomials of degree < m.
  {
    ConditionVerdict& c = r.cond_ii;
    c.pass = true;
    for (const ComplexVector& x : polarization_vectors(g.dimension())) {
      const TrajectorySample s = sample_trajectory(g, x, cfg.t_max, cfg.points);
      double residual = 0.0;
      const bool ok = trajectory_differences_vanish(s, m, tol, &residual);
      c.residual = std::max(c.residual, residual);
      if (!ok && c.pass) {
        c.pass = false;
        c.witness = x;
        const auto degree = polynomial_degree(s, std::min(cfg.points - 2, 2 * m + 4), tol);
        c.note = degree ? "trajectory degree " + std::to_string(*degree)
                        : std::string("trajectory is not a low-degree polynomial");
      }
    }
  }

  // (iii) the generator identity, as a Hermitian operator.
  {
    ConditionVerdict& c = r.cond_iii;
    const ComplexMatrix& a = g.generator();
    const ComplexMatrix b = generator_condition_operator(a, m);
    std::vector<double> pnorm{1.0};
    ComplexMatrix p = ComplexMatrix::Identity(a.rows(), a.cols());
    for (int k = 1; k <= m; ++k) {
      p = p * a;
      pnorm.push_back(operator_norm(p));
    }
    const auto coeff = binomials(m);
    double scale = 0.0;
    for (int k = 0; k <= m; ++k) scale += coeff[k] * pnorm[k] * pnorm[m - k];
    scale = std::max(1.0, scale);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(b);
    Eigen::Index best = 0;
    es.eigenvalues().cwiseAbs().maxCoeff(&best);
    c.residual = std::fabs(es.eigenvalues()(best)) / scale;
    c.pass = c.residual <= tol;
    if (!c.pass) c.witness = es.eigenvectors().col(best);
  }

  // (iv) the cogenerator is an m-isometry.
  {
    ConditionVerdict& c = r.cond_iv;
    const ComplexMatrix v = cogenerator(g, cfg.tol_linear);
    const DefectReport d = defect_report(v, m, tol);
    c.pass = d.verdict;
    c.residual = d.defect_norm / d.scale;
    c.witness = d.witness;
  }
  return r;
}

std::optional<int> semigroup_isometry_order(const GeneratorSemigroup& g, int m_max,
                                            const ProbeConfig& cfg) {
  for (int m = 1; m <= m_max; ++m) {
    if (check_semigroup_m_isometry(g, m, cfg).all_pass()) return m;
  }
  return std::nullopt;
}

GeneratorSemigroup nilpotent_generator(int n, int dim) {
  if (n < 2) throw DomainError("nilpotent_generator: order must be at least 2");
  if (n > dim) throw DomainError("nilpotent_generator: order exceeds dimension");
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = 1.0;
  return GeneratorSemigroup(std::move(a));
}

GeneratorSemigroup msymmetric_generator(const ComplexMatrix& b) {
  return GeneratorSemigroup(cplx(0.0, 1.0) * b);
}

bool interval_test(const GeneratorSemigroup& g, int m, double t1, double t2, int n, double tol) {
  require_order(m, "interval_test");
  if (!(t1 >= 0.0 && t1 < t2)) throw DomainError("interval_test: need 0 <= t1 < t2");
  if (n < 2) throw DomainError("interval_test: need at least 2 points");
  for (double t : uniform_grid(t1, t2, n)) {
    if (!defect_passes(g.evolve(t), m, tol)) return false;
  }
  return true;
}

GroupTestResult group_two_point_test(const GeneratorSemigroup& g, int m, double t1, double t2,
                                     double tol, int grid_points) {
  require_order(m, "group_two_point_test");
  if (!(t1 > 0.0 && t2 > 0.0)) throw DomainError("group_two_point_test: need t1, t2 > 0");
  if (grid_points < 2) throw DomainError("group_two_point_test: need at least 2 grid points");
  GroupTestResult r;
  r.pass_t1 = defect_passes(g.evolve(t1), m, tol);
  r.pass_t2 = defect_passes(g.evolve(t2), m, tol);
  r.pass_grid = true;
  const double span = t1 + t2;
  for (double t : uniform_grid(-span, span, grid_points)) {
    if (!defect_passes(g.evolve(t), m, tol)) {
      r.pass_grid = false;
      break;
    }
  }
  return r;
}

CayleyIdentitySides cayley_identity_sides(const ComplexMatrix& a, int m, const ComplexVector& x) {
  require_order(m, "cayley_identity_sides");
  require_vector(a, x, "cayley_identity_sides");
  const auto n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix plus = a + ident;
  const ComplexMatrix minus = a - ident;
  const auto c = binomials(m);

  CayleyIdentitySides s;
  s.lhs = std::ldexp(1.0, m) * generator_condition(a, m, x);
  for (int k = 0; k <= m; ++k) {
    ComplexVector y = x;
    for (int j = 0; j < m - k; ++j) y = minus * y;
    for (int j = 0; j < k; ++j) y = plus * y;
    const double sq = y.squaredNorm();
    const double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
    s.rhs += sign * c[k] * sq;
    s.scale += c[k] * sq;
  }
  return s;
}

}  // namespace miso
