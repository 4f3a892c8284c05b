#include "miso/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "miso/error.hpp"

namespace miso {
namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void fail(const std::string& source, int lineno, const std::string& msg) {
  throw ParseError(source + ":" + std::to_string(lineno) + ": " + msg);
}

}  // namespace

ComplexMatrix parse_matrix(std::istream& in, const std::string& source) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) fail(source, lineno, "empty matrix file");

  long rows = 0;
  long cols = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> rows >> cols) || (header >> extra)) {
      fail(source, lineno, "expected header 'rows cols'");
    }
  }
  if (rows <= 0 || cols <= 0) fail(source, lineno, "dimensions must be positive");
  if (rows * cols > 1'000'000) fail(source, lineno, "matrix too large");

  ComplexMatrix m(rows, cols);
  for (long idx = 0; idx < rows * cols; ++idx) {
    if (!next_content_line(in, line, lineno)) {
      fail(source, lineno, "expected " + std::to_string(rows * cols) + " entries, got " +
                               std::to_string(idx));
    }
    std::istringstream entry(line);
    double re = 0.0;
    double im = 0.0;
    std::string extra;
    if (!(entry >> re >> im) || (entry >> extra)) fail(source, lineno, "expected 're im'");
    if (!std::isfinite(re) || !std::isfinite(im)) fail(source, lineno, "non-finite entry");
    m(idx / cols, idx % cols) = cplx(re, im);
  }
  if (next_content_line(in, line, lineno)) fail(source, lineno, "trailing content");
  return m;
}

ComplexMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file " + path.string());
  return parse_matrix(in, path.string());
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  char buf[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g %.17g\n", m(i, j).real(), m(i, j).imag());
      out << buf;
    }
  }
}

void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write matrix file " + path.string());
  write_matrix(out, m);
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace miso
