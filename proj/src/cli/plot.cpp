#include "miso/plot.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "miso/error.hpp"

namespace miso::cli {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 48.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string trajectory_svg(const std::vector<PlotSeries>& series) {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double v_lo = 0.0;
  double v_hi = 0.0;
  bool any = false;
  for (const auto& s : series) {
    if (s.sample.values.empty() || s.sample.values.size() != s.sample.t_grid.size()) continue;
    const auto [tmin, tmax] = std::minmax_element(s.sample.t_grid.begin(), s.sample.t_grid.end());
    const auto [vmin, vmax] = std::minmax_element(s.sample.values.begin(), s.sample.values.end());
    if (!any) {
      t_lo = *tmin, t_hi = *tmax, v_lo = *vmin, v_hi = *vmax;
      any = true;
    } else {
      t_lo = std::min(t_lo, *tmin), t_hi = std::max(t_hi, *tmax);
      v_lo = std::min(v_lo, *vmin), v_hi = std::max(v_hi, *vmax);
    }
  }
  if (!any) throw DomainError("trajectory_svg: empty sample");
  if (t_hi == t_lo) t_hi = t_lo + 1.0;
  if (v_hi - v_lo < 1e-12 * std::max(1.0, std::fabs(v_hi))) {
    v_lo -= 0.5;
    v_hi += 0.5;
  }
  auto px = [&](double t) { return kMargin + (t - t_lo) / (t_hi - t_lo) * (kWidth - 2 * kMargin); };
  auto py = [&](double v) {
    return kHeight - kMargin - (v - v_lo) / (v_hi - v_lo) * (kHeight - 2 * kMargin);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kHeight - kMargin) << "\" x2=\""
      << num(kWidth - kMargin) << "\" y2=\"" << num(kHeight - kMargin)
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kMargin) << "\" x2=\""
      << num(kMargin) << "\" y2=\"" << num(kHeight - kMargin) << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 12)
      << "\" text-anchor=\"middle\" font-size=\"12\">t in [" << num(t_lo) << ", " << num(t_hi)
      << "]</text>\n";
  svg << "<text x=\"12\" y=\"" << num(kMargin - 16) << "\" font-size=\"12\">|T(t)x|^2 in ["
      << num(v_lo) << ", " << num(v_hi) << "]</text>\n";

  std::size_t idx = 0;
  for (const auto& s : series) {
    if (s.sample.values.empty()) continue;
    const char* color = kPalette[idx % std::size(kPalette)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.sample.values.size(); ++i) {
      if (i) svg << ' ';
      svg << num(px(s.sample.t_grid[i])) << ',' << num(py(s.sample.values[i]));
    }
    svg << "\"/>\n";
    std::string caption = s.label.empty() ? std::string() : s.label + ": ";
    caption += s.degree ? "degree " + std::to_string(*s.degree) : std::string("not polynomial");
    svg << "<text x=\"" << num(kWidth - kMargin - 4) << "\" y=\""
        << num(kMargin + 14.0 * static_cast<double>(idx)) << "\" text-anchor=\"end\" fill=\""
        << color << "\" font-size=\"12\">" << escape(caption) << "</text>\n";
    ++idx;
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_svg(const std::vector<PlotSeries>& series, const std::filesystem::path& out) {
  const std::string text = trajectory_svg(series);
  std::ofstream f(out);
  if (!f) throw Error("cannot write SVG file " + out.string());
  f << text;
  if (!f) throw Error("write failed for " + out.string());
}

void plot_trajectory(const TrajectorySample& sample, std::optional<int> fitted_degree,
                     const std::filesystem::path& out) {
  write_svg({PlotSeries{sample, fitted_degree, {}}}, out);
}

}  // namespace miso::cli
