#pragma once

// Command-line front end. Subcommands:
//
//   lemma-verify     exact check of the binomial identities, CSV
//   check-operator   m-isometry defects of a matrix, JSON
//   check-semigroup  the four m-isometry conditions for e^{tA}, JSON (+ SVG)
//   translation      lattice weight tests for translation semigroups, JSON (+ CSV)
//   embed            weighted-shift embedding residuals, JSON
//   corpus           regenerate the bundled example corpus
//
// Exit codes: 0 all verdicts pass, 1 some verdict fails, 2 usage or input error.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "miso/config.hpp"

namespace miso::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kSchemaVersion = 1;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CorpusEntry {
  std::string path;  // relative to the corpus root
  std::string sha256;
};

/// Writes the deterministic example corpus and its manifest into `dir`.
/// Throws miso::Error on I/O failure.
std::vector<CorpusEntry> write_corpus(const std::filesystem::path& dir, const ProbeConfig& cfg);

/// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);
std::string sha256_bytes(const std::string& bytes);

}  // namespace miso::cli
