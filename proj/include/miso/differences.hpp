#pragma once

// Lattice finite differences with a roundoff-aware vanishing test.
//
// A window i passes when
//
//   |r_i| <= tol * (stride*step)^order * reference + slack * eps * mag_i
//
// where r_i is the (scaled) order-th forward difference and mag_i the same
// combination taken with absolute values. The first term is the tolerance on
// the order-th derivative; the second is the floating-point noise floor of the
// alternating sum. A lattice polynomial of degree < order passes for any step;
// a smooth non-polynomial leaves a residual of size ~ (stride*step)^order and
// fails once that exceeds the noise floor.

#include <cstddef>
#include <span>
#include <vector>

namespace miso {

/// (-1)^{order-k} C(order, k) for k = 0..order, as doubles.
std::vector<double> difference_coeffs(int order);

struct DifferenceCheck {
  bool vanishes = true;
  /// max_i |r_i|
  double max_residual = 0.0;
  /// max_i |r_i| / (stride*step)^order: a derivative-scale residual.
  double max_normalized = 0.0;
  /// max_i |r_i| - noise_i (<= 0 when every window sits under the noise floor).
  double worst_excess = 0.0;
  std::vector<double> residuals;
};

struct DifferenceSpec {
  int order = 1;
  std::size_t stride = 1;
  double step = 1.0;
  double tol = 1e-8;
  double reference = 1.0;
  double slack = 4.0;
  /// Number of windows to evaluate; 0 means every window that fits.
  std::size_t windows = 0;
};

/// Finite differences of `values`, optionally multiplied per window by
/// `scale` (empty = 1).
DifferenceCheck check_differences(std::span<const double> values, std::span<const double> scale,
                                  const DifferenceSpec& spec);

}  // namespace miso
