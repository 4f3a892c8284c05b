#include <gtest/gtest.h>

#include "miso/combinat.hpp"
#include "miso/error.hpp"

using miso::combinat::BigInt;
using miso::combinat::binom;
using miso::combinat::lemma_diag_sum;
using miso::combinat::lemma_offdiag_sum;

namespace {

// Direct triple enumeration over (k, i, j); independent of the library's
// factored a_p(k) evaluation.
BigInt enumerate_sum(int m, int p, int q) {
  BigInt total = 0;
  for (int k = 0; k <= m; ++k) {
    const int sk = ((m - k) % 2 == 0) ? 1 : -1;
    for (int i = 0; i <= p; ++i) {
      for (int j = 0; j <= q; ++j) {
        BigInt term = binom(m, k) * binom(m - k, i) * binom(k, p - i) * binom(m - k, j) *
                      binom(k, q - j);
        if ((i + j) % 2 != 0) term = -term;
        total += sk * term;
      }
    }
  }
  return total;
}

BigInt pow2(int m) { return BigInt(1) << m; }

}  // namespace

TEST(Binom, Examples) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(2, 5), 0);
  EXPECT_EQ(binom(3, -1), 0);
  EXPECT_EQ(binom(0, 0), 1);
}

TEST(Binom, NegativeOrderThrows) { EXPECT_THROW(binom(-1, 0), miso::DomainError); }

TEST(Binom, LargeValuesAreExact) {
  // C(64, 32) = 1832624140942590534
  EXPECT_EQ(binom(64, 32), BigInt("1832624140942590534"));
  EXPECT_EQ(binom(100, 50), BigInt("100891344545564193334812497256"));
}

TEST(Binom, PascalRecurrence) {
  for (int m = 1; m <= 40; ++m)
    for (int k = -2; k <= m + 2; ++k)
      EXPECT_EQ(binom(m, k), binom(m - 1, k - 1) + binom(m - 1, k)) << m << "," << k;
}

TEST(LemmaOffdiag, Examples) {
  EXPECT_EQ(lemma_offdiag_sum(2, 0, 1), 0);
  EXPECT_EQ(lemma_offdiag_sum(3, 1, 1), 0);
  EXPECT_EQ(lemma_offdiag_sum(1, 0, 0), 0);
}

TEST(LemmaOffdiag, RangeChecks) {
  EXPECT_THROW(lemma_offdiag_sum(3, -1, 0), miso::DomainError);
  EXPECT_THROW(lemma_offdiag_sum(3, 0, 4), miso::DomainError);
  EXPECT_THROW(lemma_diag_sum(3, 4), miso::DomainError);
  EXPECT_THROW(lemma_diag_sum(-1, 0), miso::DomainError);
}

TEST(LemmaDiag, Examples) {
  EXPECT_EQ(lemma_diag_sum(0, 0), 1);
  EXPECT_EQ(lemma_diag_sum(2, 1), 8);
  EXPECT_EQ(lemma_diag_sum(3, 1), 24);
}

TEST(LemmaSums, MatchBruteForceEnumeration) {
  for (int m = 0; m <= 8; ++m)
    for (int p = 0; p <= m; ++p)
      for (int q = 0; q <= m; ++q) {
        const BigInt expected = enumerate_sum(m, p, q);
        if (p + q == m) {
          EXPECT_EQ(lemma_diag_sum(m, q), expected) << m << "," << q;
        } else {
          EXPECT_EQ(lemma_offdiag_sum(m, p, q), expected) << m << "," << p << "," << q;
        }
      }
}

TEST(LemmaSums, IdentitiesThroughThirty) {
  for (int m = 0; m <= 30; ++m) {
    for (int q = 0; q <= m; ++q) {
      EXPECT_EQ(lemma_diag_sum(m, q), pow2(m) * binom(m, q));
      EXPECT_EQ(lemma_diag_sum(m, q), lemma_diag_sum(m, m - q));
      for (int p = 0; p <= m; ++p) {
        if (p + q != m) {
          EXPECT_EQ(lemma_offdiag_sum(m, p, q), 0) << m << "," << p << "," << q;
        }
      }
    }
  }
}
