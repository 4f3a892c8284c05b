#include "miso/matrix_core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <sstream>

#include "miso/error.hpp"

namespace miso {
namespace {

double one_norm(const ComplexMatrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

// Padé numerator/denominator pieces for orders 3..9.
void pade_low(const ComplexMatrix& a, std::span<const double> b, ComplexMatrix& u,
              ComplexMatrix& v) {
  const auto n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  ComplexMatrix power = ident;
  ComplexMatrix odd = ComplexMatrix::Zero(n, n);
  ComplexMatrix even = ComplexMatrix::Zero(n, n);
  for (std::size_t j = 0; j + 1 < b.size(); j += 2) {
    even += b[j] * power;
    odd += b[j + 1] * power;
    power = power * a2;
  }
  u = a * odd;
  v = even;
}

constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

ComplexMatrix exp_pade(const ComplexMatrix& a) {
  static constexpr std::array<double, 4> b3 = {120.0, 60.0, 12.0, 1.0};
  static constexpr std::array<double, 6> b5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
  static constexpr std::array<double, 8> b7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                               25200.0,    1512.0,    56.0,      1.0};
  static constexpr std::array<double, 10> b9 = {
      17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
      2162160.0,     110880.0,     3960.0,       90.0,        1.0};
  static constexpr std::array<double, 5> theta = {1.495585217958292e-2, 2.539398330063230e-1,
                                                  9.504178996162932e-1, 2.097847961257068e0,
                                                  5.371920351148152e0};

  const auto n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const double norm1 = one_norm(a);
  ComplexMatrix u;
  ComplexMatrix v;
  auto solve = [&](const ComplexMatrix& uu, const ComplexMatrix& vv) -> ComplexMatrix {
    return (vv - uu).partialPivLu().solve(vv + uu);
  };

  if (norm1 <= theta[0]) {
    pade_low(a, b3, u, v);
    return solve(u, v);
  }
  if (norm1 <= theta[1]) {
    pade_low(a, b5, u, v);
    return solve(u, v);
  }
  if (norm1 <= theta[2]) {
    pade_low(a, b7, u, v);
    return solve(u, v);
  }
  if (norm1 <= theta[3]) {
    pade_low(a, b9, u, v);
    return solve(u, v);
  }

  int squarings = 0;
  if (norm1 > theta[4]) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta[4])));
  }
  const ComplexMatrix as = a / std::ldexp(1.0, squarings);
  const auto& b = kPade13;
  const ComplexMatrix a2 = as * as;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  u = as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
            b[1] * ident);
  v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 +
      b[0] * ident;
  ComplexMatrix r = solve(u, v);
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

// Principal square root of an upper-triangular matrix (column recurrence).
ComplexMatrix sqrt_upper_triangular(const ComplexMatrix& t) {
  const auto n = t.rows();
  ComplexMatrix r = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    r(j, j) = std::sqrt(t(j, j));
    for (Eigen::Index i = j - 1; i >= 0; --i) {
      cplx s = 0.0;
      for (Eigen::Index k = i + 1; k < j; ++k) s += r(i, k) * r(k, j);
      r(i, j) = (t(i, j) - s) / (r(i, i) + r(j, j));
    }
  }
  return r;
}

// log(I + X) for ||X|| <= 1/4 by 8-point Gauss-Legendre quadrature of
// int_0^1 X (I + sX)^{-1} ds, which is the [8/8] Padé approximant.
ComplexMatrix log1p_pade(const ComplexMatrix& x) {
  static constexpr std::array<double, 4> nodes = {0.1834346424956498, 0.5255324099163290,
                                                  0.7966664774136267, 0.9602898564975363};
  static constexpr std::array<double, 4> weights = {0.3626837833783620, 0.3137066458778873,
                                                    0.2223810344533745, 0.1012285362903763};
  const auto n = x.rows();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  ComplexMatrix total = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    for (double sign : {-1.0, 1.0}) {
      const double s = 0.5 * (1.0 + sign * nodes[k]);
      const double w = 0.5 * weights[k];
      // Triangular inputs keep triangular solves exact in structure.
      total += w * (ident + s * x).triangularView<Eigen::Upper>().solve(x);
    }
  }
  return total;
}

}  // namespace

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw DomainError(std::string(what) + ": matrix must be nonempty");
  }
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionMismatch(os.str());
  }
  if (!m.allFinite()) throw DomainError(std::string(what) + ": matrix has non-finite entries");
}

ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

Eigen::VectorXd singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

double operator_norm(const ComplexMatrix& m) {
  const Eigen::VectorXd s = singular_values(m);
  return s.size() == 0 ? 0.0 : s(0);
}

Subspace kernel(const ComplexMatrix& m, double tol) {
  if (!(tol > 0.0)) throw DomainError("kernel: tol must be positive");
  const auto n = m.cols();
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  if (smax == 0.0) return {ComplexMatrix::Identity(n, n)};
  // Columns of V beyond rank(M) span the kernel; rank counts sigma >= tol*smax.
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) >= tol * smax) ++rank;
  return {svd.matrixV().rightCols(n - rank)};
}

ComplexVector eigenvalues(const ComplexMatrix& m) {
  require_square(m, "eigenvalues");
  Eigen::ComplexSchur<ComplexMatrix> schur(m, false);
  return schur.matrixT().diagonal();
}

double spectral_radius(const ComplexMatrix& m) { return eigenvalues(m).cwiseAbs().maxCoeff(); }

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
  require_square(m, "matrix_exp");
  return exp_pade(m);
}

ComplexMatrix matrix_exp_schur(const ComplexMatrix& unitary, const ComplexMatrix& triangular,
                               double t) {
  ComplexMatrix e = exp_pade(t * triangular);
  return unitary * e.triangularView<Eigen::Upper>() * unitary.adjoint();
}

ComplexMatrix matrix_log_principal(const ComplexMatrix& m, double tol) {
  require_square(m, "matrix_log_principal");
  const auto n = m.rows();
  Eigen::ComplexSchur<ComplexMatrix> schur(m);
  ComplexMatrix t = schur.matrixT();
  const double scale = std::max(1.0, operator_norm(m));

  for (Eigen::Index i = 0; i < n; ++i) {
    const cplx lambda = t(i, i);
    if (std::abs(lambda) <= tol * scale) {
      std::ostringstream os;
      os << "matrix_log_principal: eigenvalue " << lambda << " is numerically zero";
      throw SingularMatrix(os.str());
    }
    if (lambda.real() < 0.0 && std::abs(lambda.imag()) <= tol * std::abs(lambda)) {
      std::ostringstream os;
      os << "matrix_log_principal: eigenvalue " << lambda << " lies on the negative real axis";
      throw BranchCut(os.str());
    }
  }

  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  int roots = 0;
  while (one_norm(t - ident) > 0.25) {
    if (roots == 128) throw Error("matrix_log_principal: square-root iteration did not converge");
    t = sqrt_upper_triangular(t);
    ++roots;
  }
  ComplexMatrix l = std::ldexp(1.0, roots) * log1p_pade(t - ident);
  return schur.matrixU() * l * schur.matrixU().adjoint();
}

ComplexMatrix matrix_power(const ComplexMatrix& m, int k) {
  if (k < 0) throw DomainError("matrix_power: exponent must be nonnegative");
  ComplexMatrix result = ComplexMatrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) result = result * m;
  return result;
}

}  // namespace miso
