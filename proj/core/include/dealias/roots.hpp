#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "dealias/buffer.hpp"

namespace dealias {

// Roots of unity zeta_N^k = exp(2 pi i k / N) for 0 <= k < m, stored as two
// short tables so that each lookup costs a single complex multiply:
//
//   zeta_N^k = high[k / s] * low[k % s],   s = floor(sqrt(m)),
//   high[a] = zeta_N^(a s),  low[b] = zeta_N^b.
//
// Both tables are filled by direct trigonometric evaluation (no recurrence),
// so the table is deterministic for a given (N, m) and immutable afterwards.
// Negative exponents are obtained by the caller with std::conj.
class ZetaTable {
 public:
  ZetaTable() = default;
  // Requires 1 <= m <= n; throws std::invalid_argument otherwise.
  ZetaTable(std::size_t n, std::size_t m);

  // Unchecked lookup, 0 <= k < m.
  Complex operator[](std::size_t k) const noexcept { return high_[k / s_] * low_[k % s_]; }
  // Checked lookup; throws std::out_of_range for k >= m.
  Complex at(std::size_t k) const;

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t block() const noexcept { return s_; }
  const std::vector<Complex>& high() const noexcept { return high_; }
  const std::vector<Complex>& low() const noexcept { return low_; }

  // Calls fn(k, zeta_N^k) for k in [begin, end) walking the tables block by
  // block, so the inner loop needs no integer division.
  template <class Fn>
  void for_each(std::size_t begin, std::size_t end, Fn&& fn) const {
    std::size_t k = begin;
    while (k < end) {
      const std::size_t a = k / s_;
      const Complex h = high_[a];
      const std::size_t stop = std::min(end, (a + 1) * s_);
      for (std::size_t b = k - a * s_; k < stop; ++k, ++b) fn(k, h * low_[b]);
    }
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t s_ = 1;
  std::vector<Complex> high_;
  std::vector<Complex> low_;
};

ZetaTable build_zeta_table(std::size_t n, std::size_t m);
// Checked alias of ZetaTable::at.
Complex zeta(const ZetaTable& table, std::size_t k);

// exp(2 pi i k / n) evaluated directly, with the angle reduced to k mod n.
Complex unit_root(std::size_t n, long long k);

}  // namespace dealias
