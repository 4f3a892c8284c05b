#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "miso/differences.hpp"
#include "miso/kernels/kernels.hpp"

namespace k = miso::kernels;
using k::cplx;

namespace {

std::vector<double> random_doubles(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

std::vector<cplx> random_complex(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<cplx> v(n);
  for (cplx& x : v) x = cplx(nd(rng), nd(rng));
  return v;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST(KernelDispatch, ScalarIsAlwaysAvailable) {
  const auto tables = k::available();
  ASSERT_FALSE(tables.empty());
  EXPECT_EQ(tables.front()->name, "scalar");
  bool active_listed = false;
  for (const k::KernelTable* t : tables) active_listed = active_listed || t == &k::active();
  EXPECT_TRUE(active_listed);
}

TEST(LatticeCombination, ScalarReferenceByHand) {
  const std::vector<double> values = {1, 4, 9, 16, 25, 36};
  const std::vector<double> coeffs = miso::difference_coeffs(2);
  std::vector<double> res(4), mag(4);
  k::scalar_table().lattice_combination({values, coeffs, {}, 1, res, mag});
  for (double r : res) EXPECT_EQ(r, 2.0);
  EXPECT_EQ(mag[0], 1 + 8 + 9);
  std::vector<double> res2(2), mag2(2);
  k::scalar_table().lattice_combination({values, coeffs, {}, 2, res2, mag2});
  EXPECT_EQ(res2[0], 1 - 18 + 25);
}

class KernelVariants : public ::testing::TestWithParam<std::size_t> {
 protected:
  const k::KernelTable& variant() const { return *k::available()[GetParam()]; }
};

TEST_P(KernelVariants, LatticeCombinationIsBitIdentical) {
  std::mt19937_64 rng(61 + GetParam());
  for (int order = 1; order <= 8; ++order) {
    for (std::size_t stride : {1u, 2u, 5u}) {
      for (std::size_t windows : {1u, 3u, 4u, 7u, 33u, 130u}) {
        const auto values = random_doubles(rng, windows + order * stride, 0.5, 2.0);
        const auto scale = random_doubles(rng, windows, -2.0, 2.0);
        const auto coeffs = miso::difference_coeffs(order);
        std::vector<double> r0(windows), m0(windows), r1(windows), m1(windows);
        k::scalar_table().lattice_combination({values, coeffs, scale, stride, r0, m0});
        variant().lattice_combination({values, coeffs, scale, stride, r1, m1});
        EXPECT_TRUE(bitwise_equal(r0, r1)) << order << " " << stride << " " << windows;
        EXPECT_TRUE(bitwise_equal(m0, m1));
        k::scalar_table().lattice_combination({values, coeffs, {}, stride, r0, m0});
        variant().lattice_combination({values, coeffs, {}, stride, r1, m1});
        EXPECT_TRUE(bitwise_equal(r0, r1));
        EXPECT_TRUE(bitwise_equal(m0, m1));
      }
    }
  }
}

TEST_P(KernelVariants, ScaleComplexIsBitIdentical) {
  std::mt19937_64 rng(71 + GetParam());
  for (std::size_t n : {0u, 1u, 2u, 3u, 5u, 64u, 257u}) {
    const auto src = random_complex(rng, n);
    const auto numer = random_doubles(rng, n, 0.1, 3.0);
    const auto denom = random_doubles(rng, n, 0.1, 3.0);
    std::vector<cplx> a(n), b(n);
    k::scalar_table().scale_complex({src, numer, denom, a});
    variant().scale_complex({src, numer, denom, b});
    EXPECT_EQ(std::memcmp(a.data(), b.data(), n * sizeof(cplx)), 0) << n;
  }
}

TEST_P(KernelVariants, WeightedNormAgreesToRoundoff) {
  std::mt19937_64 rng(81 + GetParam());
  for (std::size_t n : {0u, 1u, 3u, 4u, 17u, 1000u, 4099u}) {
    const auto f = random_complex(rng, n);
    const auto w = random_doubles(rng, n, 0.1, 5.0);
    const double a = k::scalar_table().weighted_sq_norm(f, w);
    const double b = variant().weighted_sq_norm(f, w);
    EXPECT_LE(std::abs(a - b), 4.0 * n * 1.2e-16 * a) << n;
    double direct = 0.0;
    for (std::size_t i = 0; i < n; ++i) direct += std::norm(f[i]) * w[i];
    EXPECT_LE(std::abs(a - direct), 4.0 * n * 1.2e-16 * direct);
  }
}

INSTANTIATE_TEST_SUITE_P(All, KernelVariants, ::testing::Range<std::size_t>(0, k::available().size()),
                         [](const auto& info) {
                           return std::string(k::available()[info.param]->name);
                         });
