#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

#include "miso/cli.hpp"
#include "miso/error.hpp"
#include "miso/matrix_io.hpp"
#include "miso/semigroup.hpp"
#include "miso/translation.hpp"

namespace miso::cli {
namespace fs = std::filesystem;

std::string sha256_bytes(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256: digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  return sha256_bytes(std::string(std::istreambuf_iterator<char>(in), {}));
}

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, int n, double scale) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = scale * cplx(normal(rng), normal(rng));
  }
  return m;
}

ComplexMatrix random_skew_hermitian(std::mt19937_64& rng, int n) {
  const ComplexMatrix g = random_matrix(rng, n, 1.0);
  return 0.5 * (g - g.adjoint());
}

class CorpusWriter {
 public:
  explicit CorpusWriter(fs::path root) : root_(std::move(root)) {}

  void matrix(const std::string& rel, const ComplexMatrix& m) {
    prepare(rel);
    write_matrix(root_ / rel, m);
    entries_.push_back({rel, sha256_file(root_ / rel)});
  }

  void weights(const std::string& rel, const translation::WeightedGrid& g) {
    prepare(rel);
    translation::write_weight_csv(root_ / rel, g);
    entries_.push_back({rel, sha256_file(root_ / rel)});
  }

  void text(const std::string& rel, const std::string& body) {
    prepare(rel);
    std::ofstream out(root_ / rel);
    if (!out) throw Error("cannot write " + (root_ / rel).string());
    out << body;
    if (!out) throw Error("write failed for " + (root_ / rel).string());
    out.close();
    entries_.push_back({rel, sha256_file(root_ / rel)});
  }

  std::vector<CorpusEntry> finish() {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.path < b.path; });
    std::ostringstream manifest;
    for (const auto& e : entries_) manifest << e.sha256 << "  " << e.path << '\n';
    std::ofstream out(root_ / "manifest.txt");
    if (!out) throw Error("cannot write manifest in " + root_.string());
    out << manifest.str();
    if (!out) throw Error("write failed for manifest");
    return entries_;
  }

 private:
  void prepare(const std::string& rel) {
    std::error_code ec;
    fs::create_directories((root_ / rel).parent_path(), ec);
    if (ec) throw Error("cannot create directory for " + rel + ": " + ec.message());
  }

  fs::path root_;
  std::vector<CorpusEntry> entries_;
};

}  // namespace

std::vector<CorpusEntry> write_corpus(const fs::path& dir, const ProbeConfig& cfg) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Error("cannot create corpus directory " + dir.string() +
                (ec ? ": " + ec.message() : std::string()));
  }
  std::mt19937_64 rng(cfg.rng_seed);
  CorpusWriter w(dir);

  // Generators: nilpotent Jordan blocks give strict (2n-1)-isometric semigroups.
  for (int n = 2; n <= 4; ++n) {
    w.matrix("generators/jordan" + std::to_string(n) + ".mat",
             nilpotent_generator(n, n).generator());
  }
  for (int n = 2; n <= 4; ++n) {
    w.matrix("generators/skew_hermitian" + std::to_string(n) + ".mat",
             random_skew_hermitian(rng, n));
  }
  {
    // i*lambda*I + Q commutes, so the semigroup stays 3-isometric.
    ComplexMatrix a = nilpotent_generator(2, 2).generator();
    a += cplx(0.0, 0.7) * ComplexMatrix::Identity(2, 2);
    w.matrix("generators/mixture_shifted_jordan2.mat", a);

    ComplexMatrix b = ComplexMatrix::Zero(4, 4);
    b.topLeftCorner(2, 2) = random_skew_hermitian(rng, 2);
    b.bottomRightCorner(2, 2) = nilpotent_generator(2, 2).generator();
    w.matrix("generators/mixture_blockdiag.mat", b);
  }
  {
    // Non-examples: a dissipative diagonal and a generic random matrix.
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = -0.5;
    d(1, 1) = cplx(0.3, 1.0);
    w.matrix("generators/non_isometric_diag.mat", d);
    ComplexMatrix r = random_matrix(rng, 3, 0.6);
    r += 0.5 * ComplexMatrix::Identity(3, 3) * cplx(-1.0, 0.0);
    w.matrix("generators/non_isometric_random.mat", r);
  }

  // Operators for the kernel condition and embeddability reports.
  {
    ComplexMatrix shift = ComplexMatrix::Zero(3, 3);
    shift(1, 0) = 1.0;
    shift(2, 1) = 1.0;
    w.matrix("operators/forward_shift3.mat", shift);
    ComplexMatrix counter = shift;
    counter(2, 0) = 1.0;
    w.matrix("operators/kernel_counterexample.mat", counter);
    ComplexMatrix unipotent = ComplexMatrix::Identity(2, 2);
    unipotent(0, 1) = 1.0;
    w.matrix("operators/unipotent2.mat", unipotent);
  }

  // Weight profiles on the configured grid.
  using translation::WeightFamily;
  for (WeightFamily f : {WeightFamily::constant, WeightFamily::affine, WeightFamily::quadratic,
                         WeightFamily::sqrt_affine, WeightFamily::exponential,
                         WeightFamily::reciprocal_affine}) {
    w.weights("weights/" + translation::family_name(f) + ".csv",
              translation::make_grid(f, cfg.grid_h, cfg.grid_cells));
  }

  // Weight sequences for the shift embedding.
  {
    std::ostringstream scalars;
    char buf[40];
    for (int n = 1; n <= cfg.embed_horizon; ++n) {
      std::snprintf(buf, sizeof buf, "%s%.17g", n == 1 ? "" : ",", std::sqrt((n + 1.0) / n));
      scalars << buf;
    }
    scalars << '\n';
    w.text("shifts/sqrt_ratio.txt", scalars.str());
    for (int n = 1; n <= cfg.embed_horizon; ++n) {
      char name[48];
      std::snprintf(name, sizeof name, "shifts/blocks/W%02d.mat", n);
      w.matrix(name, random_matrix(rng, 2, 0.7));
    }
  }
  return w.finish();
}

}  // namespace miso::cli
