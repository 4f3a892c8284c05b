#include "miso/translation.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "miso/differences.hpp"
#include "miso/error.hpp"
#include "miso/kernels/kernels.hpp"

namespace miso::translation {
namespace {

// Weight samples are closed-form evaluations accurate to an ulp or two.
constexpr double kWeightSlack = 6.0;

void require_shift(const WeightedGrid& g, int j, const char* what) {
  if (j < 0 || j >= g.cells()) {
    throw DomainError(std::string(what) + ": shift " + std::to_string(j) + " outside [0, " +
                      std::to_string(g.cells()) + ")");
  }
}

void require_test_shape(const WeightedGrid& g, int m, int j, const char* what) {
  if (m < 1) throw DomainError(std::string(what) + ": m must be at least 1");
  if (j < 1) throw DomainError(std::string(what) + ": shift must be at least 1 cell");
  if (static_cast<long>(m) * j >= g.cells()) {
    throw DomainError(std::string(what) + ": m*j = " + std::to_string(m * j) +
                      " leaves no interior window on " + std::to_string(g.cells()) + " cells");
  }
}

WeightTestResult run_lattice(std::span<const double> values, std::span<const double> scale,
                             double h, int m, int j, int cells, double tol) {
  WeightTestResult r;
  r.window_begin = 0;
  r.window_end = cells - m * j;
  DifferenceSpec spec;
  spec.order = m;
  spec.stride = static_cast<std::size_t>(j);
  spec.step = h;
  spec.tol = tol;
  spec.reference = 1.0;
  spec.slack = kWeightSlack;
  spec.windows = static_cast<std::size_t>(r.window_end);
  DifferenceCheck c = check_differences(values, scale.first(spec.windows), spec);
  r.pass = c.vanishes;
  r.max_residual = c.max_residual;
  r.max_normalized = c.max_normalized;
  r.residuals = std::move(c.residuals);
  return r;
}

WeightedGrid unit_grid(const WeightedGrid& like) {
  return WeightedGrid(like.h(), std::vector<double>(like.weights().size(), 1.0));
}

std::vector<double> coeffs_for(int m) { return difference_coeffs(m); }

}  // namespace

WeightedGrid::WeightedGrid(double h, std::vector<double> weights)
    : h_(h), weights_(std::move(weights)) {
  if (!(h_ > 0.0) || !std::isfinite(h_)) throw DomainError("WeightedGrid: h must be positive");
  if (weights_.size() < 4) throw DomainError("WeightedGrid: need at least 4 cells");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      std::ostringstream os;
      os << "WeightedGrid: weight " << weights_[i] << " at cell " << i
         << " is not strictly positive and finite";
      throw DomainError(os.str());
    }
  }
}

WeightedGrid WeightedGrid::squared() const {
  std::vector<double> sq(weights_.size());
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = weights_[i] * weights_[i];
  return WeightedGrid(h_, std::move(sq));
}

const std::vector<WeightFamily>& all_families() {
  static const std::vector<WeightFamily> families = {
      WeightFamily::constant,    WeightFamily::affine,          WeightFamily::quadratic,
      WeightFamily::cubic,       WeightFamily::sqrt_affine,     WeightFamily::exponential,
      WeightFamily::neg_exponential, WeightFamily::reciprocal_affine};
  return families;
}

std::string family_name(WeightFamily f) {
  switch (f) {
    case WeightFamily::constant: return "constant";
    case WeightFamily::affine: return "affine";
    case WeightFamily::quadratic: return "quadratic";
    case WeightFamily::cubic: return "cubic";
    case WeightFamily::sqrt_affine: return "sqrt-affine";
    case WeightFamily::exponential: return "exponential";
    case WeightFamily::neg_exponential: return "neg-exponential";
    case WeightFamily::reciprocal_affine: return "reciprocal-affine";
  }
  return "unknown";
}

WeightFamily parse_family(const std::string& name) {
  for (WeightFamily f : all_families()) {
    if (family_name(f) == name) return f;
  }
  throw ParseError("unknown weight family '" + name + "'");
}

double family_value(WeightFamily f, double s) {
  switch (f) {
    case WeightFamily::constant: return 1.0;
    case WeightFamily::affine: return 1.0 + s;
    case WeightFamily::quadratic: return s * s + s + 1.0;
    case WeightFamily::cubic: return s * s * s + s * s + s + 1.0;
    case WeightFamily::sqrt_affine: return std::sqrt(1.0 + s);
    case WeightFamily::exponential: return std::exp(s);
    case WeightFamily::neg_exponential: return std::exp(-s);
    case WeightFamily::reciprocal_affine: return 1.0 / (1.0 + s);
  }
  return 1.0;
}

WeightedGrid make_grid(WeightFamily f, double h, int cells) {
  return make_grid([f](double s) { return family_value(f, s); }, h, cells);
}

WeightedGrid make_grid(const std::function<double(double)>& profile, double h, int cells) {
  if (cells < 4) throw DomainError("make_grid: need at least 4 cells");
  std::vector<double> w(static_cast<std::size_t>(cells));
  for (int i = 0; i < cells; ++i) w[i] = profile(i * h);
  return WeightedGrid(h, std::move(w));
}

WeightedGrid read_weight_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open weight file " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path.string() + ": empty weight file");
  std::vector<double> s;
  std::vector<double> w;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    double a = 0.0;
    double b = 0.0;
    char tail = 0;
    if (std::sscanf(line.c_str(), " %lf , %lf %c", &a, &b, &tail) != 2) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected 's,value'");
    }
    s.push_back(a);
    w.push_back(b);
  }
  if (s.size() < 4) throw ParseError(path.string() + ": need at least 4 weight rows");
  const double h = s[1] - s[0];
  if (std::fabs(s[0]) > 1e-12 || !(h > 0.0)) {
    throw ParseError(path.string() + ": nodes must start at 0 and increase");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::fabs(s[i] - i * h) > 1e-9 * std::max(1.0, i * h)) {
      throw ParseError(path.string() + ": nodes are not uniformly spaced");
    }
  }
  return WeightedGrid(h, std::move(w));
}

void write_weight_csv(const std::filesystem::path& path, const WeightedGrid& grid) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write weight file " + path.string());
  out << "s,value\n";
  char buf[64];
  for (int i = 0; i < grid.cells(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", grid.node(i), grid[i]);
    out << buf;
  }
  if (!out) throw Error("write failed for " + path.string());
}

WeightedGridFunction::WeightedGridFunction(WeightedGrid g, std::vector<cplx> v)
    : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid.weights().size()) {
    throw DimensionMismatch("WeightedGridFunction: value count does not match grid");
  }
}

WeightedGridFunction WeightedGridFunction::zeros(const WeightedGrid& g) {
  return WeightedGridFunction(g, std::vector<cplx>(g.weights().size()));
}

double WeightedGridFunction::squared_norm() const {
  return grid.h() * kernels::weighted_sq_norm(values, grid.weights());
}

cplx WeightedGridFunction::inner(const WeightedGridFunction& other) const {
  cplx total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    total += values[i] * std::conj(other.values[i]) * grid.weights()[i];
  }
  return grid.h() * total;
}

bool admissible_right(const WeightedGrid& grid, double bound, double omega) {
  if (!(bound >= 1.0)) throw DomainError("admissible_right: M must be at least 1");
  const int n = grid.cells();
  for (int j = 1; j < n; ++j) {
    const double cap = bound * std::exp(omega * j * grid.h());
    for (int i = 0; i + j < n; ++i) {
      if (grid[i + j] > cap * grid[i]) return false;
    }
  }
  return true;
}

WeightedGridFunction right_translate(const WeightedGridFunction& f, int j) {
  require_shift(f.grid, j, "right_translate");
  WeightedGridFunction out = WeightedGridFunction::zeros(f.grid);
  std::copy(f.values.begin(), f.values.end() - j, out.values.begin() + j);
  return out;
}

WeightedGridFunction adjoint_right_translate(const WeightedGridFunction& f, int j) {
  require_shift(f.grid, j, "adjoint_right_translate");
  WeightedGridFunction out = WeightedGridFunction::zeros(f.grid);
  const std::size_t n = f.values.size() - static_cast<std::size_t>(j);
  const auto& rho = f.grid.weights();
  kernels::scale_complex({std::span(f.values).subspan(j, n), std::span(rho).subspan(j, n),
                          std::span(rho).first(n), std::span(out.values).first(n)});
  return out;
}

WeightedGridFunction weighted_translate(const WeightedGridFunction& f, const WeightedGrid& rho,
                                        int j) {
  require_shift(f.grid, j, "weighted_translate");
  if (rho.cells() != f.grid.cells()) {
    throw DimensionMismatch("weighted_translate: weight profile length does not match grid");
  }
  WeightedGridFunction out = WeightedGridFunction::zeros(f.grid);
  const std::size_t n = f.values.size() - static_cast<std::size_t>(j);
  const auto& w = rho.weights();
  kernels::scale_complex({std::span(f.values).first(n), std::span(w).subspan(j, n),
                          std::span(w).first(n), std::span(out.values).subspan(j, n)});
  return out;
}

WeightedGridFunction left_adjoint_translate(const WeightedGridFunction& f, int j) {
  require_shift(f.grid, j, "left_adjoint_translate");
  WeightedGridFunction out = WeightedGridFunction::zeros(f.grid);
  const std::size_t n = f.values.size() - static_cast<std::size_t>(j);
  const auto& w = f.grid.weights();
  kernels::scale_complex({std::span(f.values).first(n), std::span(w).first(n),
                          std::span(w).subspan(j, n), std::span(out.values).subspan(j, n)});
  return out;
}

WeightTestResult weight_test(const WeightedGrid& grid, int m, int j, double tol) {
  require_test_shape(grid, m, j, "weight_test");
  const auto& rho = grid.weights();
  std::vector<double> inv(rho.size());
  for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = 1.0 / rho[i];
  return run_lattice(rho, inv, grid.h(), m, j, grid.cells(), tol);
}

WeightTestResult weighted_translate_m_test(const WeightedGrid& rho, int m, int j, double tol) {
  return weight_test(rho.squared(), m, j, tol);
}

WeightTestResult reciprocal_weight_test(const WeightedGrid& grid, int m, int j, double tol) {
  require_test_shape(grid, m, j, "reciprocal_weight_test");
  const auto& w = grid.weights();
  std::vector<double> inv(w.size());
  for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = 1.0 / w[i];
  return run_lattice(inv, w, grid.h(), m, j, grid.cells(), tol);
}

Mode parse_mode(const std::string& name) {
  if (name == "right") return Mode::right;
  if (name == "weighted") return Mode::weighted;
  if (name == "left-adjoint") return Mode::left_adjoint;
  throw ParseError("unknown translation mode '" + name + "'");
}

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::right: return "right";
    case Mode::weighted: return "weighted";
    case Mode::left_adjoint: return "left-adjoint";
  }
  return "unknown";
}

WeightTestResult mode_test(Mode mode, const WeightedGrid& grid, int m, int j, double tol) {
  switch (mode) {
    case Mode::right: return weight_test(grid, m, j, tol);
    case Mode::weighted: return weighted_translate_m_test(grid, m, j, tol);
    case Mode::left_adjoint: return reciprocal_weight_test(grid, m, j, tol);
  }
  throw DomainError("mode_test: unknown mode");
}

double operator_defect(Mode mode, const WeightedGrid& grid, const std::vector<cplx>& f, int m,
                       int j) {
  if (m < 1) throw DomainError("operator_defect: m must be at least 1");
  const WeightedGrid space = mode == Mode::weighted ? unit_grid(grid) : grid;
  WeightedGridFunction g(space, f);
  const auto c = coeffs_for(m);
  double total = 0.0;
  for (int k = 0; k <= m; ++k) {
    total += c[k] * g.squared_norm();
    if (k == m) break;
    switch (mode) {
      case Mode::right: g = right_translate(g, j); break;
      case Mode::weighted: g = weighted_translate(g, grid, j); break;
      case Mode::left_adjoint: g = left_adjoint_translate(g, j); break;
    }
  }
  return total;
}

double residual_defect(Mode mode, const WeightedGrid& grid, const std::vector<cplx>& f, int m,
                       int j) {
  const WeightTestResult r = mode_test(mode, grid, m, j, 1e-9);
  double total = 0.0;
  for (int i = r.window_begin; i < r.window_end; ++i) {
    const double weight = mode == Mode::weighted ? 1.0 : grid[i];
    total += r.residuals[i] * std::norm(f[i]) * weight;
  }
  return grid.h() * total;
}

}  // namespace miso::translation
