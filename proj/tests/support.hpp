#pragma once
// Seeded random matrices and the generator corpus shared by the test binaries.
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "miso/matrix_core.hpp"
#include "miso/semigroup.hpp"

namespace miso::test {

using Rng = std::mt19937_64;

inline ComplexMatrix random_matrix(Rng& rng, Eigen::Index n, double scale = 1.0) {
  std::normal_distribution<double> nd(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = scale * cplx(nd(rng), nd(rng));
  return m;
}

inline ComplexVector random_vector(Rng& rng, Eigen::Index n) {
  std::normal_distribution<double> nd(0.0, 1.0);
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = cplx(nd(rng), nd(rng));
  return v;
}

inline ComplexMatrix random_unitary(Rng& rng, Eigen::Index n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(rng, n));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

inline ComplexMatrix random_skew_hermitian(Rng& rng, Eigen::Index n, double scale = 1.0) {
  const ComplexMatrix r = random_matrix(rng, n, scale);
  return 0.5 * (r - r.adjoint());
}

inline ComplexMatrix jordan_block(Eigen::Index n) {
  ComplexMatrix q = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) q(i, i + 1) = 1.0;
  return q;
}

inline ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

struct CorpusGenerator {
  std::string name;
  ComplexMatrix generator;
  /// Least m with an m-isometric semigroup; 0 for non-examples.
  int expected_order = 0;
};

/// Nilpotent blocks, skew-Hermitian generators, commuting mixtures
/// iH + N (H Hermitian commuting with N), unitary conjugates and
/// non-isometric random generators.
inline std::vector<CorpusGenerator> generator_corpus(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CorpusGenerator> out;
  for (int n = 2; n <= 4; ++n) {
    out.push_back({"jordan" + std::to_string(n), jordan_block(n), 2 * n - 1});
  }
  out.push_back({"jordan2_padded", block_diag(jordan_block(2), ComplexMatrix::Zero(1, 1)), 3});
  out.push_back({"jordan3_padded", block_diag(jordan_block(3), ComplexMatrix::Zero(2, 2)), 5});
  for (int n = 1; n <= 4; ++n) {
    out.push_back({"skew" + std::to_string(n), random_skew_hermitian(rng, n), 1});
  }
  const cplx i(0.0, 1.0);
  out.push_back({"shifted_jordan2", jordan_block(2) + 0.7 * i * ComplexMatrix::Identity(2, 2), 3});
  out.push_back({"shifted_jordan3", jordan_block(3) - 1.3 * i * ComplexMatrix::Identity(3, 3), 5});
  out.push_back({"skew_plus_jordan2", block_diag(random_skew_hermitian(rng, 2), jordan_block(2)), 3});
  out.push_back({"skew_plus_jordan3", block_diag(random_skew_hermitian(rng, 1), jordan_block(3)), 5});
  {
    const ComplexMatrix u = random_unitary(rng, 3);
    out.push_back({"conjugated_jordan3", u.adjoint() * jordan_block(3) * u, 5});
  }
  {
    const ComplexMatrix u = random_unitary(rng, 4);
    const ComplexMatrix m = block_diag(jordan_block(2) + 0.4 * i * ComplexMatrix::Identity(2, 2),
                                       random_skew_hermitian(rng, 2));
    out.push_back({"conjugated_mixture", u.adjoint() * m * u, 3});
  }
  out.push_back({"msymmetric_q", i * jordan_block(2), 3});
  out.push_back({"non_isometric_diag", ComplexMatrix(Eigen::Vector2cd(cplx(-0.5, 0.0), cplx(0.3, 1.0)).asDiagonal()), 0});
  for (int n = 2; n <= 4; ++n) {
    out.push_back({"non_isometric_random" + std::to_string(n),
                   0.6 * random_matrix(rng, n) - 0.5 * ComplexMatrix::Identity(n, n), 0});
  }
  out.push_back({"dissipative", -0.25 * ComplexMatrix::Identity(2, 2) + jordan_block(2), 0});
  out.push_back({"expansive", 0.2 * ComplexMatrix::Identity(3, 3) + random_skew_hermitian(rng, 3), 0});
  return out;
}

}  // namespace miso::test
