#include "miso/kernels/kernels.hpp"

#include <arm_neon.h>

#include <cmath>

namespace miso::kernels {
namespace {

void lattice_combination_neon(const LatticeArgs& a) {
  const std::size_t n = a.residual.size();
  const std::size_t terms = a.coeffs.size();
  const double* values = a.values.data();
  const bool scaled = !a.scale.empty();

  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t sum = vdupq_n_f64(0.0);
    float64x2_t mag = vdupq_n_f64(0.0);
    for (std::size_t k = 0; k < terms; ++k) {
      const float64x2_t c = vdupq_n_f64(a.coeffs[k]);
      const float64x2_t v = vld1q_f64(values + i + k * a.stride);
      sum = vaddq_f64(sum, vmulq_f64(c, v));
      mag = vaddq_f64(mag, vmulq_f64(vabsq_f64(c), vabsq_f64(v)));
    }
    if (scaled) {
      const float64x2_t s = vld1q_f64(a.scale.data() + i);
      sum = vmulq_f64(sum, s);
      mag = vmulq_f64(mag, vabsq_f64(s));
    }
    vst1q_f64(a.residual.data() + i, sum);
    vst1q_f64(a.magnitude.data() + i, mag);
  }
  for (; i < n; ++i) {
    double sum = 0.0;
    double mag = 0.0;
    for (std::size_t k = 0; k < terms; ++k) {
      const double v = values[i + k * a.stride];
      sum = sum + a.coeffs[k] * v;
      mag = mag + std::fabs(a.coeffs[k]) * std::fabs(v);
    }
    if (scaled) {
      sum = sum * a.scale[i];
      mag = mag * std::fabs(a.scale[i]);
    }
    a.residual[i] = sum;
    a.magnitude[i] = mag;
  }
}

double weighted_sq_norm_neon(std::span<const cplx> f, std::span<const double> w) {
  const double* p = reinterpret_cast<const double*>(f.data());
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const float64x2_t z = vld1q_f64(p + 2 * i);
    acc = vaddq_f64(acc, vmulq_f64(vmulq_f64(z, z), vdupq_n_f64(w[i])));
  }
  return vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
}

void scale_complex_neon(const ScaleArgs& a) {
  const double* src = reinterpret_cast<const double*>(a.src.data());
  double* out = reinterpret_cast<double*>(a.out.data());
  for (std::size_t i = 0; i < a.src.size(); ++i) {
    const float64x2_t r = vdupq_n_f64(a.numer[i] / a.denom[i]);
    vst1q_f64(out + 2 * i, vmulq_f64(r, vld1q_f64(src + 2 * i)));
  }
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{"neon", &lattice_combination_neon,
                                 &weighted_sq_norm_neon, &scale_complex_neon};
  return table;
}

}  // namespace miso::kernels
