#pragma once

// Operator-valued forward weighted shifts S_W (h_1, h_2, ...) =
// (0, W_1 h_1, W_2 h_2, ...) and their embedding as T(1) of a semigroup on
// vector-valued step functions over R+.
//
// The sequence slot n lives on the unit interval [n-1, n). For 0 <= t <= 1,
//
//   (T(t)F)(s) = 0               s < t
//              = F(s - t)        s in [n-1+t, n)
//              = W_n F(s - t)    s in [n, n+t)
//
// and T(t) = T(1)^[t] T(t - [t]) beyond. Functions are piecewise constant on
// cells of width 1/q, so every case boundary falls on a cell edge and the
// semigroup law holds exactly.

#include <vector>

#include "miso/matrix_core.hpp"

namespace miso::embedding {

class OperatorWeightSequence {
 public:
  /// Throws DomainError on an empty list or blocks of mixed dimension.
  explicit OperatorWeightSequence(std::vector<ComplexMatrix> blocks);
  /// d = 1 blocks from scalars.
  static OperatorWeightSequence scalars(const std::vector<cplx>& values);

  Eigen::Index fiber_dim() const { return blocks_.front().rows(); }
  std::size_t size() const { return blocks_.size(); }
  /// W_n for n >= 1; indices past the list repeat the last block.
  const ComplexMatrix& block(std::size_t n) const;
  double uniform_bound() const { return uniform_bound_; }

 private:
  std::vector<ComplexMatrix> blocks_;
  double uniform_bound_ = 0.0;
};

struct FiberGridFunction {
  int q = 8;        // cells per unit interval
  int horizon = 8;  // unit intervals
  /// fiber_dim x (q * horizon); column i is the value on [i/q, (i+1)/q).
  ComplexMatrix values;

  static FiberGridFunction zeros(Eigen::Index d, int q, int horizon);
  /// Step function equal to seq[n-1] on [n-1, n).
  static FiberGridFunction from_sequence(const std::vector<ComplexVector>& seq, int q,
                                         int horizon);

  int cells() const { return q * horizon; }
  double h() const { return 1.0 / q; }
  double squared_norm() const { return h() * values.squaredNorm(); }
};

using Sequence = std::vector<ComplexVector>;

/// (0, W_1 h_1, ..., W_{L-1} h_{L-1}) for an input of length L.
Sequence shift_apply(const OperatorWeightSequence& w, const Sequence& seq);

/// The truncated S_W as an (L d) x (L d) block matrix.
ComplexMatrix shift_matrix(const OperatorWeightSequence& w, int length);

/// Number of cells in t; throws DomainError unless t >= 0 is a multiple of 1/q.
int lattice_cells(double t, int q);

/// T(t) for 0 <= t <= 1.
FiberGridFunction embed_step(const OperatorWeightSequence& w, const FiberGridFunction& f,
                             double t);

/// T(t) for any lattice t >= 0.
FiberGridFunction embed_apply(const OperatorWeightSequence& w, const FiberGridFunction& f,
                              double t);

/// ||T(t)T(t')F - T(t+t')F|| over all but the last ceil(t+t') unit intervals.
double semigroup_law_residual(const OperatorWeightSequence& w, double t, double t_prime,
                              const FiberGridFunction& f);

/// Embeds seq as a step function, applies T(1), and returns the distance to
/// shift_apply(w, seq) in the sequence norm.
double verify_t1_matches_shift(const OperatorWeightSequence& w, const Sequence& seq, int q,
                               int horizon);

}  // namespace miso::embedding
