#include "miso/kernels/kernels.hpp"

#include <cmath>

namespace miso::kernels {
namespace {

void lattice_combination_scalar(const LatticeArgs& a) {
  const std::size_t n = a.residual.size();
  const std::size_t terms = a.coeffs.size();
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    double mag = 0.0;
    for (std::size_t k = 0; k < terms; ++k) {
      const double v = a.values[i + k * a.stride];
      sum = sum + a.coeffs[k] * v;
      mag = mag + std::fabs(a.coeffs[k]) * std::fabs(v);
    }
    if (!a.scale.empty()) {
      sum = sum * a.scale[i];
      mag = mag * std::fabs(a.scale[i]);
    }
    a.residual[i] = sum;
    a.magnitude[i] = mag;
  }
}

double weighted_sq_norm_scalar(std::span<const cplx> f, std::span<const double> w) {
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double re = f[i].real();
    const double im = f[i].imag();
    acc += (re * re + im * im) * w[i];
  }
  return acc;
}

void scale_complex_scalar(const ScaleArgs& a) {
  for (std::size_t i = 0; i < a.src.size(); ++i) {
    const double r = a.numer[i] / a.denom[i];
    a.out[i] = cplx(r * a.src[i].real(), r * a.src[i].imag());
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", &lattice_combination_scalar,
                                 &weighted_sq_norm_scalar, &scale_complex_scalar};
  return table;
}

}  // namespace miso::kernels
