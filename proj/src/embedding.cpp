#include "miso/embedding.hpp"

#include <cmath>
#include <string>

#include "miso/error.hpp"

namespace miso::embedding {

OperatorWeightSequence::OperatorWeightSequence(std::vector<ComplexMatrix> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw DomainError("OperatorWeightSequence: no blocks");
  const auto d = blocks_.front().rows();
  for (const auto& b : blocks_) {
    require_square(b, "OperatorWeightSequence");
    if (b.rows() != d) throw DimensionMismatch("OperatorWeightSequence: mixed block sizes");
    uniform_bound_ = std::max(uniform_bound_, operator_norm(b));
  }
}

OperatorWeightSequence OperatorWeightSequence::scalars(const std::vector<cplx>& values) {
  std::vector<ComplexMatrix> blocks;
  for (cplx v : values) blocks.push_back(ComplexMatrix::Constant(1, 1, v));
  return OperatorWeightSequence(std::move(blocks));
}

const ComplexMatrix& OperatorWeightSequence::block(std::size_t n) const {
  if (n == 0) throw DomainError("OperatorWeightSequence: weights are indexed from 1");
  return blocks_[std::min(n, blocks_.size()) - 1];
}

FiberGridFunction FiberGridFunction::zeros(Eigen::Index d, int q, int horizon) {
  if (q < 1 || horizon < 1) throw DomainError("FiberGridFunction: q and horizon must be positive");
  return {q, horizon, ComplexMatrix::Zero(d, static_cast<Eigen::Index>(q) * horizon)};
}

FiberGridFunction FiberGridFunction::from_sequence(const Sequence& seq, int q, int horizon) {
  if (seq.empty()) throw DomainError("from_sequence: empty sequence");
  if (static_cast<int>(seq.size()) > horizon) {
    throw DomainError("from_sequence: sequence longer than horizon");
  }
  FiberGridFunction f = zeros(seq.front().size(), q, horizon);
  for (std::size_t n = 0; n < seq.size(); ++n) {
    if (seq[n].size() != f.values.rows()) throw DimensionMismatch("from_sequence: fiber size");
    for (int c = 0; c < q; ++c) f.values.col(static_cast<Eigen::Index>(n) * q + c) = seq[n];
  }
  return f;
}

Sequence shift_apply(const OperatorWeightSequence& w, const Sequence& seq) {
  Sequence out;
  if (seq.empty()) return out;
  const auto d = w.fiber_dim();
  out.reserve(seq.size());
  out.push_back(ComplexVector::Zero(d));
  for (std::size_t n = 1; n < seq.size(); ++n) {
    if (seq[n - 1].size() != d) {
      throw DimensionMismatch("shift_apply: vector length does not match block size");
    }
    out.push_back(w.block(n) * seq[n - 1]);
  }
  if (seq.back().size() != d) throw DimensionMismatch("shift_apply: vector length");
  return out;
}

ComplexMatrix shift_matrix(const OperatorWeightSequence& w, int length) {
  if (length < 1) throw DomainError("shift_matrix: length must be positive");
  const auto d = w.fiber_dim();
  ComplexMatrix s = ComplexMatrix::Zero(length * d, length * d);
  for (int n = 1; n < length; ++n) s.block(n * d, (n - 1) * d, d, d) = w.block(n);
  return s;
}

int lattice_cells(double t, int q) {
  const double scaled = t * q;
  const double rounded = std::round(scaled);
  if (!(t >= 0.0) || std::fabs(scaled - rounded) > 1e-9 * std::max(1.0, scaled)) {
    throw DomainError("t = " + std::to_string(t) + " is not a nonnegative multiple of 1/" +
                      std::to_string(q));
  }
  return static_cast<int>(rounded);
}

namespace {

FiberGridFunction step_cells(const OperatorWeightSequence& w, const FiberGridFunction& f, int j) {
  if (w.fiber_dim() != f.values.rows()) {
    throw DimensionMismatch("embed: fiber dimension does not match weight blocks");
  }
  const int q = f.q;
  FiberGridFunction out = FiberGridFunction::zeros(f.values.rows(), q, f.horizon);
  for (int i = j; i < f.cells(); ++i) {
    const int n = i / q;
    if (n >= 1 && i - n * q < j) {
      out.values.col(i) = w.block(static_cast<std::size_t>(n)) * f.values.col(i - j);
    } else {
      out.values.col(i) = f.values.col(i - j);
    }
  }
  return out;
}

}  // namespace

FiberGridFunction embed_step(const OperatorWeightSequence& w, const FiberGridFunction& f,
                             double t) {
  const int j = lattice_cells(t, f.q);
  if (j > f.q) throw DomainError("embed_step: t must lie in [0, 1]");
  return step_cells(w, f, j);
}

FiberGridFunction embed_apply(const OperatorWeightSequence& w, const FiberGridFunction& f,
                              double t) {
  const int j = lattice_cells(t, f.q);
  FiberGridFunction out = step_cells(w, f, j % f.q);
  for (int k = 0; k < j / f.q; ++k) out = step_cells(w, out, f.q);
  return out;
}

double semigroup_law_residual(const OperatorWeightSequence& w, double t, double t_prime,
                              const FiberGridFunction& f) {
  const int total = lattice_cells(t, f.q) + lattice_cells(t_prime, f.q);
  const int excluded_units = (total + f.q - 1) / f.q;
  if (excluded_units >= f.horizon) {
    throw DomainError("semigroup_law_residual: t + t' leaves no interior window");
  }
  const FiberGridFunction composed = embed_apply(w, embed_apply(w, f, t_prime), t);
  const FiberGridFunction direct = embed_apply(w, f, t + t_prime);
  const int keep = (f.horizon - excluded_units) * f.q;
  return std::sqrt(f.h() * (composed.values.leftCols(keep) - direct.values.leftCols(keep))
                               .squaredNorm());
}

double verify_t1_matches_shift(const OperatorWeightSequence& w, const Sequence& seq, int q,
                               int horizon) {
  if (static_cast<int>(seq.size()) > horizon - 1) {
    throw DomainError("verify_t1_matches_shift: sequence must be shorter than the horizon");
  }
  Sequence padded = seq;
  padded.resize(static_cast<std::size_t>(horizon), ComplexVector::Zero(w.fiber_dim()));
  const Sequence expected = shift_apply(w, padded);
  const FiberGridFunction image = embed_apply(w, FiberGridFunction::from_sequence(seq, q, horizon),
                                              1.0);
  double total = 0.0;
  for (int i = 0; i < image.cells(); ++i) {
    total += (image.values.col(i) - expected[static_cast<std::size_t>(i / q)]).squaredNorm();
  }
  return std::sqrt(total / q);
}

}  // namespace miso::embedding
