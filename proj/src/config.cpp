#include "miso/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>

#include "miso/error.hpp"

namespace miso {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ParseError("config: " + key + " expects a real number, got '" + v + "'");
  }
  return out;
}

template <class Int>
Int to_int(const std::string& key, const std::string& v) {
  Int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ParseError("config: " + key + " expects an integer, got '" + v + "'");
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void ProbeConfig::validate() const {
  if (!(tol_verdict > 0.0)) throw DomainError("config: tol_verdict must be positive");
  if (!(tol_linear > 0.0)) throw DomainError("config: tol_linear must be positive");
  if (!(grid_h > 0.0)) throw DomainError("config: grid_h must be positive");
  if (grid_cells < 4) throw DomainError("config: grid_cells must be at least 4");
  if (!(t_max > 0.0)) throw DomainError("config: t_max must be positive");
  if (points < 4) throw DomainError("config: points must be at least 4");
  if (m_max < 1) throw DomainError("config: m_max must be at least 1");
  if (embed_q < 2) throw DomainError("config: embed_q must be at least 2");
  if (embed_horizon < 2) throw DomainError("config: embed_horizon must be at least 2");
}

void ProbeConfig::set(const std::string& key, const std::string& value) {
  if (key == "tol_verdict") {
    tol_verdict = to_double(key, value);
  } else if (key == "tol_linear") {
    tol_linear = to_double(key, value);
  } else if (key == "rng_seed") {
    rng_seed = to_int<std::uint64_t>(key, value);
  } else if (key == "grid_h") {
    grid_h = to_double(key, value);
  } else if (key == "grid_cells") {
    grid_cells = to_int<int>(key, value);
  } else if (key == "t_max") {
    t_max = to_double(key, value);
  } else if (key == "points") {
    points = to_int<int>(key, value);
  } else if (key == "m_max") {
    m_max = to_int<int>(key, value);
  } else if (key == "embed_q") {
    embed_q = to_int<int>(key, value);
  } else if (key == "embed_horizon") {
    embed_horizon = to_int<int>(key, value);
  } else {
    throw ParseError("config: unknown key '" + key + "'");
  }
}

void ProbeConfig::apply_text(std::istream& in, const std::string& source) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(source + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void ProbeConfig::apply_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path.string());
  apply_text(in, path.string());
}

std::map<std::string, std::string> ProbeConfig::echo() const {
  return {{"tol_verdict", fmt(tol_verdict)},
          {"tol_linear", fmt(tol_linear)},
          {"rng_seed", std::to_string(rng_seed)},
          {"grid_h", fmt(grid_h)},
          {"grid_cells", std::to_string(grid_cells)},
          {"t_max", fmt(t_max)},
          {"points", std::to_string(points)},
          {"m_max", std::to_string(m_max)},
          {"embed_q", std::to_string(embed_q)},
          {"embed_horizon", std::to_string(embed_horizon)}};
}

}  // namespace miso
