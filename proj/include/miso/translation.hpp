#pragma once

// Translation semigroups on discretized weighted L^2(R+) spaces.
//
// A grid has N cells of width h, node s_i = i*h, and a strictly positive
// weight sample per node. Shifts are restricted to lattice multiples t = j*h
// so that finite-difference structure is exact. Defect verdicts ignore the
// last m*j cells, where truncation at the horizon N*h loses mass.

#include <complex>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace miso::translation {

using cplx = std::complex<double>;

class WeightedGrid {
 public:
  /// Throws DomainError unless h > 0, N >= 4 and all weights are positive
  /// and finite.
  WeightedGrid(double h, std::vector<double> weights);

  double h() const { return h_; }
  int cells() const { return static_cast<int>(weights_.size()); }
  double horizon() const { return h_ * cells(); }
  double node(int i) const { return i * h_; }
  const std::vector<double>& weights() const { return weights_; }
  double operator[](int i) const { return weights_[static_cast<std::size_t>(i)]; }

  /// Same grid, weights squared (the profile rho^2).
  WeightedGrid squared() const;

 private:
  double h_;
  std::vector<double> weights_;
};

enum class WeightFamily {
  constant,
  affine,             // 1 + s
  quadratic,          // s^2 + s + 1
  cubic,              // s^3 + s^2 + s + 1
  sqrt_affine,        // sqrt(1 + s)
  exponential,        // e^s
  neg_exponential,    // e^{-s}
  reciprocal_affine,  // 1 / (1 + s)
};

WeightFamily parse_family(const std::string& name);
std::string family_name(WeightFamily f);
const std::vector<WeightFamily>& all_families();
double family_value(WeightFamily f, double s);

/// Samples the family at s_i = i*h for i = 0..cells-1.
WeightedGrid make_grid(WeightFamily f, double h, int cells);
WeightedGrid make_grid(const std::function<double(double)>& profile, double h, int cells);

/// CSV with header and `s,value` rows on a uniform grid starting at 0.
WeightedGrid read_weight_csv(const std::filesystem::path& path);
void write_weight_csv(const std::filesystem::path& path, const WeightedGrid& grid);

struct WeightedGridFunction {
  WeightedGrid grid;
  std::vector<cplx> values;

  WeightedGridFunction(WeightedGrid g, std::vector<cplx> v);
  static WeightedGridFunction zeros(const WeightedGrid& g);

  /// h * sum |f_i|^2 w_i
  double squared_norm() const;
  /// h * sum f_i conj(g_i) w_i (same grid assumed).
  cplx inner(const WeightedGridFunction& other) const;
};

/// rho_{i+j} <= M e^{omega j h} rho_i for all valid i, j.
bool admissible_right(const WeightedGrid& grid, double bound, double omega);

/// (S f)_i = 0 for i < j, f_{i-j} otherwise.
WeightedGridFunction right_translate(const WeightedGridFunction& f, int j);

/// (S* f)_i = (rho_{i+j} / rho_i) f_{i+j} for i + j < N, else 0.
WeightedGridFunction adjoint_right_translate(const WeightedGridFunction& f, int j);

/// (S_rho f)_i = (rho_i / rho_{i-j}) f_{i-j}; f lives on an unweighted grid.
WeightedGridFunction weighted_translate(const WeightedGridFunction& f, const WeightedGrid& rho,
                                        int j);

/// (T* f)_i = (w_{i-j} / w_i) f_{i-j}; the grid weights of f are w.
WeightedGridFunction left_adjoint_translate(const WeightedGridFunction& f, int j);

struct WeightTestResult {
  bool pass = false;
  /// max |g_i| over the interior window
  double max_residual = 0.0;
  /// max |g_i| / (j h)^m
  double max_normalized = 0.0;
  int window_begin = 0;
  int window_end = 0;  // exclusive
  std::vector<double> residuals;
};

/// g_i = sum_k C(m,k) (-1)^{m-k} rho_{i+kj} / rho_i on i in [0, N - m j).
/// Throws DomainError when m*j >= N, m < 1 or j < 1.
WeightTestResult weight_test(const WeightedGrid& grid, int m, int j, double tol);

/// weight_test on rho^2: the weighted translation is an m-isometry.
WeightTestResult weighted_translate_m_test(const WeightedGrid& rho, int m, int j, double tol);

/// g_i = sum_k C(m,k) (-1)^{m-k} w_i / w_{i+kj}: the adjoint of the left shift
/// is an m-isometry.
WeightTestResult reciprocal_weight_test(const WeightedGrid& grid, int m, int j, double tol);

enum class Mode { right, weighted, left_adjoint };
Mode parse_mode(const std::string& name);
std::string mode_name(Mode mode);

/// Dispatches to the lattice test matching `mode`.
WeightTestResult mode_test(Mode mode, const WeightedGrid& grid, int m, int j, double tol);

/// sum_k (-1)^{m-k} C(m,k) ||op^k f||^2 for the operator of `mode`; the norm
/// is that of the space the operator acts on (weighted by the grid for
/// right/left-adjoint, unweighted for the weighted translation).
double operator_defect(Mode mode, const WeightedGrid& grid, const std::vector<cplx>& f, int m,
                       int j);

/// h * sum_i g_i |f_i|^2 weight_i with the g of `mode_test`; equals
/// operator_defect on f supported in the interior window.
double residual_defect(Mode mode, const WeightedGrid& grid, const std::vector<cplx>& f, int m,
                       int j);

}  // namespace miso::translation
