#pragma once

// Plain-text matrix files:
//
//   rows cols
//   re im        (rows*cols lines, row-major)

#include <filesystem>
#include <iosfwd>

#include "miso/matrix_core.hpp"

namespace miso {

ComplexMatrix parse_matrix(std::istream& in, const std::string& source = "<stream>");
ComplexMatrix read_matrix(const std::filesystem::path& path);

/// Writes with 17 significant digits so a read-back is exact.
void write_matrix(std::ostream& out, const ComplexMatrix& m);
void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m);

}  // namespace miso
