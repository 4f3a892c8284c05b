#include "miso/kernels/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace miso::kernels {
namespace {

// Four consecutive output cells per iteration. The k-loop runs in the same
// order as the scalar kernel so residuals agree bit for bit.
void lattice_combination_avx2(const LatticeArgs& a) {
  const std::size_t n = a.residual.size();
  const std::size_t terms = a.coeffs.size();
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  const double* values = a.values.data();
  const bool scaled = !a.scale.empty();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d sum = _mm256_setzero_pd();
    __m256d mag = _mm256_setzero_pd();
    for (std::size_t k = 0; k < terms; ++k) {
      const __m256d c = _mm256_set1_pd(a.coeffs[k]);
      const __m256d abs_c = _mm256_andnot_pd(sign_mask, c);
      const __m256d v = _mm256_loadu_pd(values + i + k * a.stride);
      sum = _mm256_add_pd(sum, _mm256_mul_pd(c, v));
      mag = _mm256_add_pd(mag, _mm256_mul_pd(abs_c, _mm256_andnot_pd(sign_mask, v)));
    }
    if (scaled) {
      const __m256d s = _mm256_loadu_pd(a.scale.data() + i);
      sum = _mm256_mul_pd(sum, s);
      mag = _mm256_mul_pd(mag, _mm256_andnot_pd(sign_mask, s));
    }
    _mm256_storeu_pd(a.residual.data() + i, sum);
    _mm256_storeu_pd(a.magnitude.data() + i, mag);
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

// Complex entries are interleaved (re, im); two cells per 256-bit register.
double weighted_sq_norm_avx2(std::span<const cplx> f, std::span<const double> w) {
  const double* p = reinterpret_cast<const double*>(f.data());
  const std::size_t n = f.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d z = _mm256_loadu_pd(p + 2 * i);
    const __m256d ww = _mm256_set_pd(w[i + 1], w[i + 1], w[i], w[i]);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_mul_pd(z, z), ww));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) {
    const double re = f[i].real();
    const double im = f[i].imag();
    total += (re * re + im * im) * w[i];
  }
  return total;
}

void scale_complex_avx2(const ScaleArgs& a) {
  const std::size_t n = a.src.size();
  const double* src = reinterpret_cast<const double*>(a.src.data());
  double* out = reinterpret_cast<double*>(a.out.data());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m128d num = _mm_loadu_pd(a.numer.data() + i);
    const __m128d den = _mm_loadu_pd(a.denom.data() + i);
    const __m128d r = _mm_div_pd(num, den);
    // (r0, r0, r1, r1)
    const __m256d rr = _mm256_permute4x64_pd(_mm256_castpd128_pd256(r), 0x50);
    const __m256d z = _mm256_loadu_pd(src + 2 * i);
    _mm256_storeu_pd(out + 2 * i, _mm256_mul_pd(rr, z));
  }
  for (; i < n; ++i) {
    const double r = a.numer[i] / a.denom[i];
    a.out[i] = cplx(r * a.src[i].real(), r * a.src[i].imag());
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", &lattice_combination_avx2,
                                 &weighted_sq_norm_avx2, &scale_complex_avx2};
  return table;
}

}  // namespace miso::kernels
