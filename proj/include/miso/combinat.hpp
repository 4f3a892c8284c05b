#pragma once

// Exact binomial sums behind the Cayley-transform equivalence for m-isometric
// semigroups. Everything here is arbitrary precision; no floating point.

#include <boost/multiprecision/cpp_int.hpp>

namespace miso::combinat {

using BigInt = boost::multiprecision::cpp_int;

/// C(m, k), with C(m, k) = 0 for k < 0 or k > m. Throws DomainError for m < 0.
BigInt binom(int m, int k);

/// sum_k C(m,k) (-1)^{m-k} a_p(k) a_q(k), where
/// a_p(k) = sum_i C(m-k, i) C(k, p-i) (-1)^i.
/// Vanishes whenever p + q != m. Requires 0 <= p, q <= m.
BigInt lemma_offdiag_sum(int m, int p, int q);

/// sum_k C(m,k) a_q(k)^2 with a_q as above; equals 2^m C(m, q).
BigInt lemma_diag_sum(int m, int q);

}  // namespace miso::combinat
