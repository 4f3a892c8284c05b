#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

namespace miso {

/// Tolerances, grid geometry and seed behind every numerical verdict.
struct ProbeConfig {
  double tol_verdict = 1e-8;
  double tol_linear = 1e-12;
  std::uint64_t rng_seed = 20161017;
  // translation grids
  double grid_h = 1.0 / 64.0;
  int grid_cells = 4096;
  // semigroup trajectories
  double t_max = 2.0;
  int points = 33;
  int m_max = 8;
  // embedding grids
  int embed_q = 8;
  int embed_horizon = 8;

  /// Throws DomainError if a field is out of range.
  void validate() const;

  /// Applies `key = value` lines ('#' starts a comment). Unknown keys throw.
  void apply_text(std::istream& in, const std::string& source = "<config>");
  void apply_file(const std::filesystem::path& path);
  void set(const std::string& key, const std::string& value);

  /// Fields keyed by name, formatted for reports.
  std::map<std::string, std::string> echo() const;
};

}  // namespace miso
