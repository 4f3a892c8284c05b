#include "miso/differences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "miso/error.hpp"
#include "miso/kernels/kernels.hpp"

namespace miso {

std::vector<double> difference_coeffs(int order) {
  if (order < 0) throw DomainError("difference order must be nonnegative");
  std::vector<double> c(static_cast<std::size_t>(order) + 1);
  double binom = 1.0;
  for (int k = 0; k <= order; ++k) {
    c[k] = ((order - k) % 2 == 0) ? binom : -binom;
    binom = binom * (order - k) / (k + 1);
  }
  return c;
}

DifferenceCheck check_differences(std::span<const double> values, std::span<const double> scale,
                                  const DifferenceSpec& spec) {
  if (spec.order < 0 || spec.stride == 0) throw DomainError("check_differences: bad stencil");
  const std::size_t span = static_cast<std::size_t>(spec.order) * spec.stride;
  if (values.size() <= span) throw DomainError("check_differences: too few samples for stencil");
  std::size_t windows = values.size() - span;
  if (spec.windows != 0) windows = std::min(windows, spec.windows);
  if (!scale.empty() && scale.size() < windows) {
    throw DimensionMismatch("check_differences: scale shorter than window count");
  }

  const std::vector<double> coeffs = difference_coeffs(spec.order);
  DifferenceCheck out;
  out.residuals.assign(windows, 0.0);
  std::vector<double> magnitude(windows, 0.0);
  kernels::lattice_combination({values, coeffs,
                                scale.empty() ? scale : scale.first(windows), spec.stride,
                                out.residuals, magnitude});

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double lattice = std::pow(spec.step * static_cast<double>(spec.stride), spec.order);
  const double allowed = spec.tol * lattice * spec.reference;
  out.worst_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < windows; ++i) {
    const double r = std::fabs(out.residuals[i]);
    out.max_residual = std::max(out.max_residual, r);
    const double excess = r - (allowed + spec.slack * eps * magnitude[i]);
    out.worst_excess = std::max(out.worst_excess, excess);
    if (!(excess <= 0.0)) out.vanishes = false;
  }
  out.max_normalized = lattice > 0.0 ? out.max_residual / lattice : out.max_residual;
  return out;
}

}  // namespace miso
