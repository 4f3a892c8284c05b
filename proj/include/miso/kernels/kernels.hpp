#pragma once

// Data-parallel inner loops shared by the grid-based probes.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 (x86-64) or NEON (aarch64) variant. The active variant
// is chosen once at startup from the CPU feature bits and can be forced with
// the MISO_KERNELS environment variable ("scalar", "avx2", "neon").
//
// Elementwise kernels are bit-identical across variants (same operation order,
// no FMA contraction). Reductions differ only in summation order.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace miso::kernels {

using cplx = std::complex<double>;

/// residual[i] = scale[i] * sum_k coeffs[k] * values[i + k*stride]
/// magnitude[i] = |scale[i]| * sum_k |coeffs[k]| * |values[i + k*stride]|
///
/// Requires values.size() >= residual.size() + (coeffs.size()-1)*stride.
/// An empty `scale` means scale[i] == 1.
struct LatticeArgs {
  std::span<const double> values;
  std::span<const double> coeffs;
  std::span<const double> scale;
  std::size_t stride = 1;
  std::span<double> residual;
  std::span<double> magnitude;
};

/// out[i] = (numer[i] / denom[i]) * src[i]; all spans of equal length.
struct ScaleArgs {
  std::span<const cplx> src;
  std::span<const double> numer;
  std::span<const double> denom;
  std::span<cplx> out;
};

struct KernelTable {
  std::string_view name;
  void (*lattice_combination)(const LatticeArgs&);
  /// sum_i |f[i]|^2 * w[i]
  double (*weighted_sq_norm)(std::span<const cplx> f, std::span<const double> w);
  void (*scale_complex)(const ScaleArgs&);
};

const KernelTable& scalar_table();
#if defined(MISO_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(MISO_HAVE_NEON)
const KernelTable& neon_table();
#endif

/// The table selected for this process.
const KernelTable& active();

/// Every variant usable on the running CPU, scalar first.
std::span<const KernelTable* const> available();

// Convenience wrappers over active().
void lattice_combination(const LatticeArgs& args);
double weighted_sq_norm(std::span<const cplx> f, std::span<const double> w);
void scale_complex(const ScaleArgs& args);

}  // namespace miso::kernels
