#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "miso/semigroup.hpp"

namespace miso::cli {

struct PlotSeries {
  TrajectorySample sample;
  std::optional<int> degree;
  std::string label;
};

/// Standalone SVG with one polyline per series and a degree annotation.
/// Throws DomainError when there is nothing to draw.
std::string trajectory_svg(const std::vector<PlotSeries>& series);

void plot_trajectory(const TrajectorySample& sample, std::optional<int> fitted_degree,
                     const std::filesystem::path& out);

void write_svg(const std::vector<PlotSeries>& series, const std::filesystem::path& out);

}  // namespace miso::cli
