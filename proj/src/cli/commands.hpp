#pragma once

#include <complex>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "miso/config.hpp"

namespace miso::cli {

using Json = nlohmann::ordered_json;

/// Outcome of one subcommand: the result object for the report plus the
/// overall verdict.
struct CommandResult {
  Json result = Json::object();
  bool pass = true;
};

struct OperatorOptions {
  std::string matrix;
  int m_max = 8;
  std::optional<int> m;
  std::string table_out;
};

struct SemigroupOptions {
  std::string generator;
  int m = 1;
  std::string plot;
};

struct TranslationOptions {
  std::string family;
  std::string mode = "right";
  int m = 2;
  int shift_cells = 1;
  std::string csv;
};

struct EmbedOptions {
  std::string weights;
  double t = 0.5;
  double t_prime = 0.25;
  bool verify_t1 = false;
  int samples = 8;
};

/// CSV rows m,p,q,value,expected,pass for 0 <= p, q <= m <= m_max.
std::string lemma_verify_csv(int m_max, bool& all_pass);

CommandResult check_operator(const OperatorOptions& opt, const ProbeConfig& cfg);
CommandResult check_semigroup(const SemigroupOptions& opt, const ProbeConfig& cfg);
CommandResult translation_command(const TranslationOptions& opt, const ProbeConfig& cfg);
CommandResult embed_command(const EmbedOptions& opt, const ProbeConfig& cfg);
CommandResult corpus_command(const std::string& out_dir, const ProbeConfig& cfg);

Json complex_json(std::complex<double> z);

}  // namespace miso::cli
