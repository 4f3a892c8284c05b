#include "miso/combinat.hpp"

#include <string>
#include <vector>

#include "miso/error.hpp"

namespace miso::combinat {
namespace {

// Rows 0..m of Pascal's triangle.
class PascalTable {
 public:
  explicit PascalTable(int m) : rows_(static_cast<std::size_t>(m) + 1) {
    for (int n = 0; n <= m; ++n) {
      auto& row = rows_[n];
      row.resize(static_cast<std::size_t>(n) + 1);
      row.front() = 1;
      row.back() = 1;
      for (int k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }

  const BigInt& operator()(int n, int k) const {
    static const BigInt zero = 0;
    if (k < 0 || k > n) return zero;
    return rows_[n][k];
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

// a_p(k) = sum_i C(m-k, i) C(k, p-i) (-1)^i
BigInt inner_sum(const PascalTable& c, int m, int k, int p) {
  BigInt total = 0;
  for (int i = 0; i <= p; ++i) {
    BigInt term = c(m - k, i) * c(k, p - i);
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

void require_range(int m, int v, const char* name) {
  if (m < 0) throw DomainError("combinat: m must be nonnegative, got " + std::to_string(m));
  if (v < 0 || v > m) {
    throw DomainError(std::string("combinat: ") + name + " = " + std::to_string(v) +
                      " outside [0, " + std::to_string(m) + "]");
  }
}

}  // namespace

BigInt binom(int m, int k) {
  if (m < 0) throw DomainError("binom: m must be nonnegative, got " + std::to_string(m));
  if (k < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= m - k + i;
    result /= i;
  }
  return result;
}

BigInt lemma_offdiag_sum(int m, int p, int q) {
  require_range(m, p, "p");
  require_range(m, q, "q");
  const PascalTable c(m);
  BigInt total = 0;
  for (int k = 0; k <= m; ++k) {
    BigInt term = c(m, k) * inner_sum(c, m, k, p) * inner_sum(c, m, k, q);
    if ((m - k) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigInt lemma_diag_sum(int m, int q) {
  require_range(m, q, "q");
  const PascalTable c(m);
  BigInt total = 0;
  for (int k = 0; k <= m; ++k) {
    const BigInt a = inner_sum(c, m, k, q);
    total += c(m, k) * a * a;
  }
  return total;
}

}  // namespace miso::combinat
