#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "miso/error.hpp"
#include "miso/translation.hpp"
#include "support.hpp"

using namespace miso::translation;
using miso::test::Rng;

namespace {

constexpr double kTol = 1e-9;

std::vector<cplx> random_interior(Rng& rng, int cells, int support) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<cplx> f(static_cast<std::size_t>(cells), cplx(0.0));
  for (int i = 0; i < support; ++i) f[static_cast<std::size_t>(i)] = cplx(nd(rng), nd(rng));
  return f;
}

WeightedGrid poly_grid(const std::vector<double>& coeffs, double h, int cells) {
  return make_grid(
      [&](double s) {
        double v = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * s + *it;
        return v;
      },
      h, cells);
}

}  // namespace

TEST(WeightedGrid, Validation) {
  EXPECT_THROW(WeightedGrid(0.0, {1, 1, 1, 1}), miso::DomainError);
  EXPECT_THROW(WeightedGrid(0.1, {1, 1, 1}), miso::DomainError);
  EXPECT_THROW(WeightedGrid(0.1, {1, 1, 0, 1}), miso::DomainError);
  EXPECT_THROW(WeightedGrid(0.1, {1, 1, NAN, 1}), miso::DomainError);
  const WeightedGrid g(0.5, {1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(g.horizon(), 2.0);
  EXPECT_DOUBLE_EQ(g.squared()[3], 16.0);
}

TEST(Families, NamesRoundTripAndValues) {
  for (WeightFamily f : all_families()) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("bogus"), miso::ParseError);
  EXPECT_DOUBLE_EQ(family_value(WeightFamily::quadratic, 2.0), 7.0);
  EXPECT_DOUBLE_EQ(family_value(WeightFamily::reciprocal_affine, 3.0), 0.25);
  const WeightedGrid g = make_grid(WeightFamily::affine, 1.0 / 64, 100);
  EXPECT_DOUBLE_EQ(g[10], 1.0 + 10.0 / 64);
}

TEST(Admissible, Examples) {
  const double h = 1.0 / 64;
  EXPECT_TRUE(admissible_right(make_grid(WeightFamily::constant, h, 256), 1.0, 0.0));
  EXPECT_TRUE(admissible_right(make_grid(WeightFamily::affine, h, 256), 1.0, 1.0));
  const WeightedGrid gauss = make_grid([](double s) { return std::exp(s * s); }, 0.25, 80);
  EXPECT_FALSE(admissible_right(gauss, 2.0, 10.0));
  EXPECT_THROW(admissible_right(gauss, 0.5, 1.0), miso::DomainError);
}

TEST(RightTranslate, Examples) {
  const WeightedGrid g = make_grid(WeightFamily::constant, 0.1, 16);
  std::vector<cplx> delta(16, 0.0);
  delta[0] = 1.0;
  const WeightedGridFunction f(g, delta);
  EXPECT_EQ(right_translate(f, 0).values, f.values);
  const WeightedGridFunction s = right_translate(f, 3);
  for (int i = 0; i < 16; ++i) EXPECT_EQ(s.values[i], i == 3 ? cplx(1.0) : cplx(0.0));
  Rng rng(41);
  const WeightedGridFunction r(g, random_interior(rng, 16, 12));
  EXPECT_NEAR(right_translate(r, 4).squared_norm(), r.squared_norm(), 1e-13);
  EXPECT_THROW(right_translate(f, 16), miso::DomainError);
  EXPECT_THROW(right_translate(f, -1), miso::DomainError);
}

TEST(AdjointRightTranslate, ExamplesAndAdjointness) {
  Rng rng(42);
  const WeightedGrid ones = make_grid(WeightFamily::constant, 0.1, 32);
  const WeightedGridFunction f(ones, random_interior(rng, 32, 32));
  EXPECT_EQ(adjoint_right_translate(f, 0).values, f.values);
  const WeightedGridFunction left = adjoint_right_translate(f, 5);
  for (int i = 0; i < 32; ++i) EXPECT_EQ(left.values[i], i + 5 < 32 ? f.values[i + 5] : cplx(0.0));

  const WeightedGrid rho = make_grid(WeightFamily::quadratic, 0.1, 32);
  for (int j : {1, 3, 7}) {
    const WeightedGridFunction a(rho, random_interior(rng, 32, 32 - j));
    const WeightedGridFunction b(rho, random_interior(rng, 32, 32));
    const cplx lhs = right_translate(a, j).inner(b);
    const cplx rhs = a.inner(adjoint_right_translate(b, j));
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * (1 + std::abs(lhs)));
  }
}

TEST(WeightTest, Examples) {
  const double h = 1.0 / 64;
  for (int j : {1, 2, 5}) {
    const WeightTestResult aff = weight_test(make_grid(WeightFamily::affine, h, 512), 2, j, kTol);
    EXPECT_TRUE(aff.pass);
    EXPECT_LE(aff.max_residual, 1e-14);
  }
  const WeightTestResult ex = weight_test(make_grid(WeightFamily::exponential, h, 512), 2, 1, kTol);
  EXPECT_FALSE(ex.pass);
  EXPECT_NEAR(ex.max_residual, std::pow(std::exp(h) - 1.0, 2), 1e-12);
  const WeightedGrid quad = make_grid(WeightFamily::quadratic, h, 512);
  EXPECT_TRUE(weight_test(quad, 3, 1, kTol).pass);
  EXPECT_FALSE(weight_test(quad, 2, 1, kTol).pass);
}

TEST(WeightTest, Errors) {
  const WeightedGrid g = make_grid(WeightFamily::affine, 0.1, 10);
  EXPECT_THROW(weight_test(g, 5, 2, kTol), miso::DomainError);
  EXPECT_THROW(weight_test(g, 0, 1, kTol), miso::DomainError);
  EXPECT_THROW(weight_test(g, 1, 0, kTol), miso::DomainError);
  EXPECT_NO_THROW(weight_test(g, 3, 3, kTol));
}

TEST(WeightTest, StrictnessForPolynomialsOfExactDegree) {
  const std::vector<std::vector<double>> polys = {
      {2.0}, {1.0, 0.5}, {1.0, -0.3, 0.2}, {3.0, 1.0, -0.5, 0.25}};
  for (double h : {1.0 / 64, 1.0 / 128}) {
    for (std::size_t d = 0; d < polys.size(); ++d) {
      const WeightedGrid g = poly_grid(polys[d], h, 640);
      for (int j : {1, 2, 5}) {
        EXPECT_TRUE(weight_test(g, static_cast<int>(d) + 1, j, kTol).pass) << d << " " << j;
        if (d > 0) {
          EXPECT_FALSE(weight_test(g, static_cast<int>(d), j, kTol).pass) << d << " " << j;
        }
      }
    }
  }
}

TEST(WeightTest, ShrinkingTheWindowNeverFlipsAPass) {
  const double h = 1.0 / 64;
  for (WeightFamily fam : all_families()) {
    const WeightedGrid full = make_grid(fam, h, 300);
    std::vector<double> shorter(full.weights().begin(), full.weights().end() - 1);
    const WeightedGrid trimmed(h, shorter);
    for (int m = 1; m <= 4; ++m) {
      for (int j : {1, 2, 5}) {
        const WeightTestResult a = weight_test(full, m, j, kTol);
        const WeightTestResult b = weight_test(trimmed, m, j, kTol);
        EXPECT_EQ(b.window_end, a.window_end - 1);
        EXPECT_LE(b.max_residual, a.max_residual);
        if (a.pass) {
          EXPECT_TRUE(b.pass) << family_name(fam) << " m=" << m << " j=" << j;
        }
      }
    }
  }
}

TEST(WeightedTranslate, Examples) {
  Rng rng(43);
  const double h = 1.0 / 64;
  const WeightedGrid ones = make_grid(WeightFamily::constant, h, 128);
  const WeightedGridFunction f(ones, random_interior(rng, 128, 128));
  EXPECT_EQ(weighted_translate(f, ones, 3).values, right_translate(f, 3).values);

  // S_rho = M_rho S M_rho^{-1}, cellwise
  const WeightedGrid rho = make_grid(WeightFamily::cubic, h, 128);
  for (int j : {1, 4}) {
    std::vector<cplx> divided(128);
    for (int i = 0; i < 128; ++i) divided[i] = f.values[i] / rho[i];
    const WeightedGridFunction shifted = right_translate(WeightedGridFunction(ones, divided), j);
    const WeightedGridFunction direct = weighted_translate(f, rho, j);
    for (int i = 0; i < 128; ++i) {
      EXPECT_LE(std::abs(direct.values[i] - rho[i] * shifted.values[i]),
                1e-14 * std::abs(direct.values[i]) + 1e-300);
    }
  }
  EXPECT_THROW(weighted_translate(f, make_grid(WeightFamily::constant, h, 64), 1),
               miso::DimensionMismatch);
}

TEST(WeightedTranslate, SqrtAffineDefectVanishes) {
  Rng rng(44);
  const double h = 1.0 / 64;
  const WeightedGrid rho = make_grid(WeightFamily::sqrt_affine, h, 256);
  for (int j : {1, 2, 5}) {
    const std::vector<cplx> f = random_interior(rng, 256, 256 - 2 * j);
    const double norm = WeightedGridFunction(make_grid(WeightFamily::constant, h, 256), f).squared_norm();
    EXPECT_LE(std::abs(operator_defect(Mode::weighted, rho, f, 2, j)), 1e-12 * norm);
  }
}

TEST(WeightedTranslateTest, Examples) {
  const double h = 1.0 / 64;
  EXPECT_TRUE(weighted_translate_m_test(make_grid(WeightFamily::sqrt_affine, h, 512), 2, 1, kTol).pass);
  EXPECT_TRUE(weighted_translate_m_test(make_grid(WeightFamily::constant, h, 512), 1, 1, kTol).pass);
  for (int m = 1; m <= 6; ++m)
    EXPECT_FALSE(weighted_translate_m_test(make_grid(WeightFamily::exponential, h, 512), m, 1, kTol).pass);
}

TEST(ConjugationInvariance, WeightedMatchesRightOnSquaredGrid) {
  for (double h : {1.0 / 64, 1.0 / 128}) {
    const WeightedGrid rho = make_grid(WeightFamily::sqrt_affine, h, 512);
    for (int m = 1; m <= 3; ++m) {
      for (int j : {1, 2, 5}) {
        EXPECT_EQ(weighted_translate_m_test(rho, m, j, kTol).pass,
                  weight_test(rho.squared(), m, j, kTol).pass);
      }
    }
  }
}

TEST(LeftAdjointTranslate, Examples) {
  Rng rng(45);
  const double h = 1.0 / 64;
  const WeightedGrid ones = make_grid(WeightFamily::constant, h, 128);
  const WeightedGridFunction f(ones, random_interior(rng, 128, 120));
  EXPECT_EQ(left_adjoint_translate(f, 2).values, right_translate(f, 2).values);
  EXPECT_NEAR(left_adjoint_translate(f, 2).squared_norm(), f.squared_norm(), 1e-13);

  const WeightedGrid w = make_grid(WeightFamily::reciprocal_affine, h, 256);
  const std::vector<cplx> g = random_interior(rng, 256, 250);
  const double norm = WeightedGridFunction(w, g).squared_norm();
  EXPECT_LE(std::abs(operator_defect(Mode::left_adjoint, w, g, 2, 3)), 1e-12 * norm);
  for (int m = 1; m <= 6; ++m)
    EXPECT_FALSE(reciprocal_weight_test(make_grid(WeightFamily::neg_exponential, h, 512), m, 1, kTol).pass);
}

TEST(ReciprocalWeightTest, Examples) {
  const double h = 1.0 / 64;
  const WeightedGrid w = make_grid(WeightFamily::reciprocal_affine, h, 512);
  EXPECT_TRUE(reciprocal_weight_test(w, 2, 1, kTol).pass);
  EXPECT_FALSE(reciprocal_weight_test(w, 1, 1, kTol).pass);
  EXPECT_TRUE(reciprocal_weight_test(make_grid(WeightFamily::constant, h, 512), 1, 1, kTol).pass);
}

TEST(NormDefectEquivalence, RandomInteriorFunctions) {
  Rng rng(46);
  const double h = 1.0 / 64;
  const int cells = 192;
  int trial = 0;
  for (WeightFamily fam : all_families()) {
    const WeightedGrid grid = make_grid(fam, h, cells);
    for (Mode mode : {Mode::right, Mode::weighted, Mode::left_adjoint}) {
      for (int rep = 0; rep < 5; ++rep, ++trial) {
        const int m = 1 + trial % 4;
        const int j = 1 + trial % 3;
        const std::vector<cplx> f = random_interior(rng, cells, cells - m * j);
        const double op = operator_defect(mode, grid, f, m, j);
        const double res = residual_defect(mode, grid, f, m, j);
        const double norm =
            WeightedGridFunction(mode == Mode::weighted ? make_grid(WeightFamily::constant, h, cells) : grid, f)
                .squared_norm();
        EXPECT_LE(std::abs(op - res), 1e-9 * std::max(1.0, norm))
            << family_name(fam) << " " << mode_name(mode) << " m=" << m << " j=" << j;
      }
    }
  }
  EXPECT_GE(trial, 100);
}

TEST(Modes, ParseAndDispatch) {
  EXPECT_EQ(parse_mode("left-adjoint"), Mode::left_adjoint);
  EXPECT_EQ(mode_name(Mode::weighted), "weighted");
  EXPECT_THROW(parse_mode("sideways"), miso::ParseError);
  const WeightedGrid g = make_grid(WeightFamily::affine, 1.0 / 64, 64);
  EXPECT_EQ(mode_test(Mode::right, g, 2, 1, kTol).residuals, weight_test(g, 2, 1, kTol).residuals);
}

TEST(WeightCsv, RoundTripAndErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "miso_test_weights";
  std::filesystem::create_directories(dir);
  const WeightedGrid g = make_grid(WeightFamily::sqrt_affine, 1.0 / 64, 100);
  write_weight_csv(dir / "w.csv", g);
  const WeightedGrid back = read_weight_csv(dir / "w.csv");
  EXPECT_EQ(back.cells(), 100);
  EXPECT_DOUBLE_EQ(back.h(), g.h());
  EXPECT_EQ(back.weights(), g.weights());

  auto write = [&](const char* name, const char* text) {
    std::ofstream(dir / name) << text;
    return dir / name;
  };
  EXPECT_THROW(read_weight_csv(write("empty.csv", "")), miso::ParseError);
  EXPECT_THROW(read_weight_csv(write("short.csv", "s,value\n0,1\n0.1,1\n")), miso::ParseError);
  EXPECT_THROW(read_weight_csv(write("uneven.csv", "s,value\n0,1\n0.1,1\n0.3,1\n0.4,1\n")),
               miso::ParseError);
  EXPECT_THROW(read_weight_csv(write("junk.csv", "s,value\n0,1\nx,y\n0.2,1\n0.3,1\n")),
               miso::ParseError);
  EXPECT_THROW(read_weight_csv(dir / "missing.csv"), miso::ParseError);
  std::filesystem::remove_all(dir);
}
