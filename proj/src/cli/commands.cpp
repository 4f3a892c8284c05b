#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "miso/cli.hpp"
#include "miso/combinat.hpp"
#include "miso/embedding.hpp"
#include "miso/error.hpp"
#include "miso/isometry.hpp"
#include "miso/matrix_io.hpp"
#include "miso/plot.hpp"
#include "miso/semigroup.hpp"
#include "miso/translation.hpp"

namespace miso::cli {
namespace fs = std::filesystem;

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

namespace {

Json vector_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

Json matrix_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i).transpose()));
  return out;
}

Json optional_vector(const std::optional<ComplexVector>& v) {
  return v ? vector_json(*v) : Json(nullptr);
}

Json condition_json(const ConditionVerdict& c) {
  Json j;
  j["pass"] = c.pass;
  j["residual"] = c.residual;
  j["witness"] = optional_vector(c.witness);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

void write_text(const fs::path& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << body;
  if (!out) throw Error("write failed for " + path.string());
}

std::vector<std::complex<double>> parse_scalar_list(const std::string& text) {
  std::vector<std::complex<double>> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t\r\n"));
    item.erase(item.find_last_not_of(" \t\r\n") + 1);
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ParseError("weights: cannot parse scalar '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v)) {
      throw ParseError("weights: cannot parse scalar '" + item + "'");
    }
    out.emplace_back(v, 0.0);
  }
  if (out.empty()) throw ParseError("weights: empty scalar list");
  return out;
}

embedding::OperatorWeightSequence load_weights(const std::string& spec) {
  const fs::path p(spec);
  std::error_code ec;
  if (fs::is_directory(p, ec)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(p)) {
      if (e.is_regular_file() && e.path().extension() == ".mat") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ParseError("weights: no .mat files in " + spec);
    std::vector<ComplexMatrix> blocks;
    for (const auto& f : files) blocks.push_back(read_matrix(f));
    return embedding::OperatorWeightSequence(std::move(blocks));
  }
  if (fs::is_regular_file(p, ec)) {
    std::ifstream in(p);
    return embedding::OperatorWeightSequence::scalars(
        parse_scalar_list(std::string(std::istreambuf_iterator<char>(in), {})));
  }
  return embedding::OperatorWeightSequence::scalars(parse_scalar_list(spec));
}

ComplexVector random_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = cplx(normal(rng), normal(rng));
  return v;
}

}  // namespace

std::string lemma_verify_csv(int m_max, bool& all_pass) {
  if (m_max < 0) throw DomainError("lemma-verify: --m-max must be nonnegative");
  std::ostringstream csv;
  csv << "m,p,q,value,expected,pass\n";
  all_pass = true;
  for (int m = 0; m <= m_max; ++m) {
    const combinat::BigInt power = combinat::BigInt(1) << m;
    for (int p = 0; p <= m; ++p) {
      for (int q = 0; q <= m; ++q) {
        combinat::BigInt value;
        combinat::BigInt expected;
        if (p + q == m) {
          value = combinat::lemma_diag_sum(m, q);
          expected = power * combinat::binom(m, q);
        } else {
          value = combinat::lemma_offdiag_sum(m, p, q);
          expected = 0;
        }
        const bool ok = value == expected;
        all_pass = all_pass && ok;
        csv << m << ',' << p << ',' << q << ',' << value << ',' << expected << ','
            << (ok ? "true" : "false") << '\n';
      }
    }
  }
  return csv.str();
}

CommandResult check_operator(const OperatorOptions& opt, const ProbeConfig& cfg) {
  const ComplexMatrix t = read_matrix(opt.matrix);
  require_square(t, "check-operator");
  if (opt.m_max < 1) throw DomainError("check-operator: --m-max must be at least 1");
  const double tol = cfg.tol_verdict;

  CommandResult out;
  const auto order = isometry_order(t, opt.m_max, tol);
  const int tested = opt.m ? *opt.m : (order ? *order : opt.m_max);
  const DefectReport report = defect_report(t, tested, tol, opt.m_max);

  Json& r = out.result;
  r["matrix"] = opt.matrix;
  r["dimension"] = t.rows();
  r["order_tested"] = report.order_tested;
  r["defect_norm"] = report.defect_norm;
  r["scale"] = report.scale;
  r["verdict"] = report.verdict;
  r["witness"] = optional_vector(report.witness);
  r["isometry_order"] = order ? Json(*order) : Json(nullptr);
  Json table = Json::array();
  for (const auto& [m, norm] : report.per_order_table) {
    table.push_back({{"m", m}, {"defect_norm", norm}});
  }
  r["per_order_table"] = table;
  r["kernel_condition"] = {{"pass", kernel_condition_check(t, tol)},
                           {"residual", kernel_condition_residual(t, tol)}};
  const EmbeddabilityReport emb = embeddability_report(t, cfg.tol_linear * 100.0);
  Json e;
  e["embeddable"] = emb.embeddable;
  e["ker_dim"] = emb.ker_dim;
  e["coker_dim"] = emb.coker_dim;
  e["smallest_singular_value"] = emb.smallest_singular_value;
  e["generator"] = emb.generator ? matrix_json(*emb.generator) : Json(nullptr);
  if (emb.generator) {
    e["exp_residual"] = operator_norm(matrix_exp(*emb.generator) - t) /
                        std::max(1.0, operator_norm(t));
  }
  if (emb.log_error) e["log_error"] = *emb.log_error;
  r["embeddability"] = e;
  out.pass = report.verdict;

  if (!opt.table_out.empty()) {
    std::ostringstream csv;
    csv << "m,defect_norm\n";
    char buf[64];
    for (const auto& [m, norm] : report.per_order_table) {
      std::snprintf(buf, sizeof buf, "%d,%.17g\n", m, norm);
      csv << buf;
    }
    write_text(opt.table_out, csv.str());
  }
  return out;
}

CommandResult check_semigroup(const SemigroupOptions& opt, const ProbeConfig& cfg) {
  const GeneratorSemigroup g(read_matrix(opt.generator));
  if (opt.m < 1) throw DomainError("check-semigroup: --m must be at least 1");
  const SemigroupIsometryReport rep = check_semigroup_m_isometry(g, opt.m, cfg);

  CommandResult out;
  Json& r = out.result;
  r["generator"] = opt.generator;
  r["dimension"] = g.dimension();
  r["m"] = opt.m;
  r["conditions"] = {{"i", condition_json(rep.cond_i)},
                     {"ii", condition_json(rep.cond_ii)},
                     {"iii", condition_json(rep.cond_iii)},
                     {"iv", condition_json(rep.cond_iv)}};
  r["all_agree"] = rep.agree();
  const BoundReport b = bound_report(g, cfg.t_max);
  r["bounds"] = {{"spectral_bound", b.spectral_bound}, {"growth_estimate", b.growth_estimate}};
  r["cogenerator"] = matrix_json(cogenerator(g, cfg.tol_linear));
  r["cogenerator_cross_check"] = cogenerator_cross_check(g, cfg.tol_linear);

  Json degrees = Json::array();
  std::vector<PlotSeries> series;
  const int d_max = std::min(cfg.points - 2, 2 * cfg.m_max);
  for (Eigen::Index j = 0; j < g.dimension(); ++j) {
    TrajectorySample s = sample_trajectory(g, ComplexVector::Unit(g.dimension(), j), cfg.t_max,
                                           cfg.points);
    const auto d = polynomial_degree(s, d_max, cfg.tol_verdict);
    degrees.push_back(d ? Json(*d) : Json(nullptr));
    series.push_back({std::move(s), d, "e" + std::to_string(j + 1)});
  }
  r["basis_trajectory_degrees"] = degrees;
  if (!opt.plot.empty()) write_svg(series, opt.plot);

  out.pass = rep.all_pass();
  return out;
}

CommandResult translation_command(const TranslationOptions& opt, const ProbeConfig& cfg) {
  using namespace translation;
  const Mode mode = parse_mode(opt.mode);
  std::error_code ec;
  const bool from_csv = fs::is_regular_file(opt.family, ec);
  const WeightedGrid grid = from_csv ? read_weight_csv(opt.family)
                                     : make_grid(parse_family(opt.family), cfg.grid_h,
                                                 cfg.grid_cells);
  const WeightTestResult res = mode_test(mode, grid, opt.m, opt.shift_cells, cfg.tol_verdict);

  CommandResult out;
  Json& r = out.result;
  r["family"] = opt.family;
  r["source"] = from_csv ? "csv" : "named";
  r["mode"] = mode_name(mode);
  r["m"] = opt.m;
  r["shift_cells"] = opt.shift_cells;
  r["h"] = grid.h();
  r["cells"] = grid.cells();
  r["pass"] = res.pass;
  r["max_residual"] = res.max_residual;
  r["max_normalized_residual"] = res.max_normalized;
  r["window"] = {res.window_begin, res.window_end};
  if (mode == Mode::right) {
    // Admissibility with omega set by the largest one-cell growth ratio.
    double omega = 0.0;
    for (int i = 0; i + 1 < grid.cells(); ++i) {
      omega = std::max(omega, std::log(grid[i + 1] / grid[i]) / grid.h());
    }
    r["admissible_right"] = {{"M", 1.0}, {"omega", omega},
                             {"pass", admissible_right(grid, 1.0, omega * (1.0 + 1e-12))}};
  }
  out.pass = res.pass;

  if (!opt.csv.empty()) {
    std::ostringstream csv;
    csv << "i,s,g\n";
    char buf[96];
    for (int i = res.window_begin; i < res.window_end; ++i) {
      std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", i, grid.node(i), res.residuals[i]);
      csv << buf;
    }
    write_text(opt.csv, csv.str());
  }
  return out;
}

CommandResult embed_command(const EmbedOptions& opt, const ProbeConfig& cfg) {
  using namespace embedding;
  const OperatorWeightSequence w = load_weights(opt.weights);
  const int q = cfg.embed_q;
  const int horizon = cfg.embed_horizon;
  if (opt.samples < 1) throw DomainError("embed: --samples must be at least 1");
  lattice_cells(opt.t, q);
  lattice_cells(opt.t_prime, q);

  std::mt19937_64 rng(cfg.rng_seed);
  CommandResult out;
  Json& r = out.result;
  r["fiber_dim"] = w.fiber_dim();
  r["blocks"] = w.size();
  r["uniform_bound"] = w.uniform_bound();
  r["q"] = q;
  r["horizon"] = horizon;
  r["t"] = opt.t;
  r["t_prime"] = opt.t_prime;

  double worst = 0.0;
  bool law_ok = true;
  for (int s = 0; s < opt.samples; ++s) {
    FiberGridFunction f = FiberGridFunction::zeros(w.fiber_dim(), q, horizon);
    for (int i = 0; i < f.cells(); ++i) f.values.col(i) = random_vector(rng, w.fiber_dim());
    const double res = semigroup_law_residual(w, opt.t, opt.t_prime, f);
    worst = std::max(worst, res);
    law_ok = law_ok && res <= cfg.tol_linear * std::max(1.0, std::sqrt(f.squared_norm()));
  }
  r["semigroup_law"] = {{"samples", opt.samples}, {"max_residual", worst}, {"pass", law_ok}};
  out.pass = law_ok;

  const ComplexMatrix s = shift_matrix(w, horizon);
  r["truncated_shift_coker_dim"] = kernel(s.adjoint(), 1e-10).dimension();

  if (opt.verify_t1) {
    Sequence seq;
    for (int n = 0; n + 1 < horizon; ++n) seq.push_back(random_vector(rng, w.fiber_dim()));
    double norm = 0.0;
    for (const auto& v : seq) norm += v.squaredNorm();
    const double res = verify_t1_matches_shift(w, seq, q, horizon);
    const bool ok = res <= cfg.tol_linear * std::max(1.0, std::sqrt(norm) * w.uniform_bound());
    r["t1_matches_shift"] = {{"residual", res}, {"pass", ok}};
    out.pass = out.pass && ok;
  }
  return out;
}

CommandResult corpus_command(const std::string& out_dir, const ProbeConfig& cfg) {
  const auto entries = write_corpus(out_dir, cfg);
  CommandResult out;
  Json files = Json::array();
  for (const auto& e : entries) files.push_back({{"path", e.path}, {"sha256", e.sha256}});
  out.result["out_dir"] = out_dir;
  out.result["artifacts"] = entries.size();
  out.result["manifest_sha256"] = sha256_file(fs::path(out_dir) / "manifest.txt");
  out.result["files"] = files;
  return out;
}

}  // namespace miso::cli
