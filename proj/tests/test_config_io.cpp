#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "miso/config.hpp"
#include "miso/error.hpp"
#include "miso/matrix_io.hpp"
#include "support.hpp"

using namespace miso;

TEST(ProbeConfig, DefaultsValidate) {
  const ProbeConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_EQ(cfg.echo().at("rng_seed"), "20161017");
  EXPECT_EQ(cfg.echo().size(), 10u);
}

TEST(ProbeConfig, ApplyText) {
  ProbeConfig cfg;
  std::istringstream in("# comment\n tol_verdict = 1e-6 \n\npoints=17  # trailing\nrng_seed = 7\n");
  cfg.apply_text(in);
  EXPECT_DOUBLE_EQ(cfg.tol_verdict, 1e-6);
  EXPECT_EQ(cfg.points, 17);
  EXPECT_EQ(cfg.rng_seed, 7u);
}

TEST(ProbeConfig, Errors) {
  ProbeConfig cfg;
  std::istringstream unknown("colour = blue\n");
  EXPECT_THROW(cfg.apply_text(unknown), ParseError);
  std::istringstream bad("points = many\n");
  EXPECT_THROW(cfg.apply_text(bad), ParseError);
  std::istringstream noeq("points 12\n");
  EXPECT_THROW(cfg.apply_text(noeq), ParseError);
  EXPECT_THROW(cfg.apply_file("/nonexistent/miso.cfg"), Error);
  cfg.points = 2;
  EXPECT_THROW(cfg.validate(), DomainError);
}

TEST(MatrixIo, RoundTripIsExact) {
  test::Rng rng(91);
  const ComplexMatrix m = test::random_matrix(rng, 4);
  std::stringstream ss;
  write_matrix(ss, m);
  EXPECT_EQ(parse_matrix(ss), m);
}

TEST(MatrixIo, ParseErrors) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
  };
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("2 x\n"), ParseError);
  EXPECT_THROW(parse("1 1\n1\n"), ParseError);
  EXPECT_THROW(parse("1 1\n1 0\n2 0\n"), ParseError);
  EXPECT_THROW(parse("0 0\n"), ParseError);
  EXPECT_EQ(parse("1 2\n1 0\n0 -1\n")(0, 1), cplx(0, -1));
  EXPECT_THROW(read_matrix("/nonexistent/m.mat"), Error);
}
