#include "miso/kernels/kernels.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace miso::kernels {
namespace {

std::vector<const KernelTable*> detect() {
  std::vector<const KernelTable*> tables{&scalar_table()};
#if defined(MISO_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) tables.push_back(&avx2_table());
#endif
#if defined(MISO_HAVE_NEON)
  tables.push_back(&neon_table());
#endif
  return tables;
}

const std::vector<const KernelTable*>& tables() {
  static const std::vector<const KernelTable*> t = detect();
  return t;
}

const KernelTable* select() {
  const auto& t = tables();
  if (const char* forced = std::getenv("MISO_KERNELS")) {
    for (const KernelTable* table : t) {
      if (table->name == forced) return table;
    }
  }
  return t.back();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable* chosen = select();
  return *chosen;
}

std::span<const KernelTable* const> available() { return tables(); }

void lattice_combination(const LatticeArgs& args) { active().lattice_combination(args); }

double weighted_sq_norm(std::span<const cplx> f, std::span<const double> w) {
  return active().weighted_sq_norm(f, w);
}

void scale_complex(const ScaleArgs& args) { active().scale_complex(args); }

}  // namespace miso::kernels
