#include "miso/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "miso/error.hpp"

namespace miso::cli {
namespace {

struct CommonOptions {
  std::string config_file;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string out;
  bool no_timestamp = false;
};

void add_common(CLI::App* sub, CommonOptions& c) {
  sub->add_option("--config", c.config_file, "key = value config file");
  sub->add_option("--seed", c.seed, "RNG seed (overrides config and MISO_SEED)");
  sub->add_option("--tol", c.tol, "verdict tolerance");
  sub->add_option("--out", c.out, "write the report here instead of stdout");
  sub->add_flag("--no-timestamp", c.no_timestamp, "omit wall-clock duration from the report");
}

// Precedence: defaults < config file < MISO_SEED < flags.
ProbeConfig resolve_config(const CommonOptions& c) {
  ProbeConfig cfg;
  if (!c.config_file.empty()) cfg.apply_file(c.config_file);
  if (const char* env = std::getenv("MISO_SEED"); env && *env) cfg.set("rng_seed", env);
  if (c.seed) cfg.rng_seed = *c.seed;
  if (c.tol) cfg.tol_verdict = *c.tol;
  return cfg;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write report " + path);
  f << text;
  if (!f) throw Error("write failed for " + path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"m-isometric semigroup toolkit"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  CommonOptions common;

  int lemma_m_max = 10;
  auto* lemma = app.add_subcommand("lemma-verify", "exact binomial identity check (CSV)");
  lemma->add_option("--m-max", lemma_m_max, "largest m")->required();

  OperatorOptions op;
  std::optional<int> op_m_max;
  auto* oper = app.add_subcommand("check-operator", "m-isometry defects of a matrix");
  oper->add_option("--matrix", op.matrix, "matrix file")->required();
  oper->add_option("--m-max", op_m_max, "largest order probed");
  oper->add_option("--m", op.m, "test this order instead of the detected one");
  oper->add_option("--emit-table", op.table_out, "write per-order defects as CSV");

  SemigroupOptions sg;
  std::optional<double> t_max;
  std::optional<int> points;
  auto* semi = app.add_subcommand("check-semigroup", "m-isometry conditions for e^{tA}");
  semi->add_option("--generator", sg.generator, "generator matrix file")->required();
  semi->add_option("--m", sg.m, "order m")->required();
  semi->add_option("--t-max", t_max, "trajectory horizon");
  semi->add_option("--points", points, "trajectory grid points");
  semi->add_option("--plot", sg.plot, "write basis trajectories as SVG");

  TranslationOptions tr;
  std::optional<double> grid_h;
  std::optional<int> cells;
  auto* trans = app.add_subcommand("translation", "lattice tests for translation semigroups");
  trans->add_option("--family", tr.family, "named weight family or weight CSV")->required();
  trans->add_option("--mode", tr.mode, "right | weighted | left-adjoint")
      ->check(CLI::IsMember({"right", "weighted", "left-adjoint"}));
  trans->add_option("--m", tr.m, "order m")->required();
  trans->add_option("--shift-cells", tr.shift_cells, "lattice shift j")->required();
  trans->add_option("--h", grid_h, "grid step");
  trans->add_option("--cells", cells, "cell count");
  trans->add_option("--csv", tr.csv, "write the residual profile g_i as CSV");

  EmbedOptions em;
  std::optional<int> q;
  std::optional<int> horizon;
  auto* emb = app.add_subcommand("embed", "weighted shift embedding residuals");
  emb->add_option("--weights", em.weights, "directory of .mat blocks or scalar list")->required();
  emb->add_option("--t", em.t, "lattice time t")->required();
  emb->add_option("--t-prime", em.t_prime, "lattice time t'")->required();
  emb->add_option("--q", q, "cells per unit interval");
  emb->add_option("--horizon", horizon, "unit intervals");
  emb->add_option("--samples", em.samples, "random test functions");
  emb->add_flag("--verify-t1", em.verify_t1, "check T(1) against the shift");

  std::string corpus_dir;
  auto* corp = app.add_subcommand("corpus", "regenerate the example corpus");
  corp->add_option("--out-dir", corpus_dir, "output directory")->required();

  for (auto* sub : {lemma, oper, semi, trans, emb, corp}) add_common(sub, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    ProbeConfig cfg = resolve_config(common);
    if (op_m_max) cfg.m_max = *op_m_max;
    if (t_max) cfg.t_max = *t_max;
    if (points) cfg.points = *points;
    if (grid_h) cfg.grid_h = *grid_h;
    if (cells) cfg.grid_cells = *cells;
    if (q) cfg.embed_q = *q;
    if (horizon) cfg.embed_horizon = *horizon;
    cfg.validate();

    if (lemma->parsed()) {
      bool all_pass = true;
      emit(lemma_verify_csv(lemma_m_max, all_pass), common.out, out);
      return all_pass ? kExitPass : kExitFail;
    }

    CommandResult result;
    std::string name;
    if (oper->parsed()) {
      name = "check-operator";
      op.m_max = cfg.m_max;
      result = check_operator(op, cfg);
    } else if (semi->parsed()) {
      name = "check-semigroup";
      result = check_semigroup(sg, cfg);
    } else if (trans->parsed()) {
      name = "translation";
      result = translation_command(tr, cfg);
    } else if (emb->parsed()) {
      name = "embed";
      result = embed_command(em, cfg);
    } else {
      name = "corpus";
      result = corpus_command(corpus_dir, cfg);
    }

    Json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = name;
    report["argv"] = args;
    Json config = Json::object();
    for (const auto& [k, v] : cfg.echo()) config[k] = v;
    report["config"] = config;
    report["result"] = std::move(result.result);
    report["pass"] = result.pass;
    if (!common.no_timestamp) {
      const auto elapsed = std::chrono::steady_clock::now() - started;
      report["duration_ms"] =
          std::chrono::duration<double, std::milli>(elapsed).count();
    }
    emit(report.dump(2) + "\n", common.out, out);
    return result.pass ? kExitPass : kExitFail;
  } catch (const miso::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace miso::cli
