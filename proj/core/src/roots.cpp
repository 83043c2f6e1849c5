#include "dealias/roots.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dealias {

Complex unit_root(std::size_t n, long long k) {
  const long long nn = static_cast<long long>(n);
  long long r = k % nn;
  if (r < 0) r += nn;
  // Exact values at the quarter points keep H_0 = L_0 = 1 and zeta_4 = i exact.
  if (r == 0) return {1.0, 0.0};
  if (4 * r == nn) return {0.0, 1.0};
  if (2 * r == nn) return {-1.0, 0.0};
  if (4 * r == 3 * nn) return {0.0, -1.0};
  // Extended-precision angle so each entry is close to correctly rounded.
  const long double theta =
      2.0L * std::numbers::pi_v<long double> * static_cast<long double>(r) / static_cast<long double>(n);
  return {static_cast<double>(std::cos(theta)), static_cast<double>(std::sin(theta))};
}

ZetaTable::ZetaTable(std::size_t n, std::size_t m) : n_(n), m_(m) {
  if (n == 0 || m == 0)
    throw std::invalid_argument("ZetaTable: N and m must be positive");
  if (m > n)
    throw std::invalid_argument("ZetaTable: m=" + std::to_string(m) + " exceeds N=" + std::to_string(n));
  s_ = static_cast<std::size_t>(std::sqrt(static_cast<double>(m)));
  while (s_ * s_ > m) --s_;
  while ((s_ + 1) * (s_ + 1) <= m) ++s_;
  const std::size_t t = (m + s_ - 1) / s_;
  high_.resize(t);
  low_.resize(s_);
  for (std::size_t a = 0; a < t; ++a) high_[a] = unit_root(n, static_cast<long long>(a * s_));
  for (std::size_t b = 0; b < s_; ++b) low_[b] = unit_root(n, static_cast<long long>(b));
}

Complex ZetaTable::at(std::size_t k) const {
  if (k >= m_)
    throw std::out_of_range("ZetaTable: exponent " + std::to_string(k) + " outside [0," +
                            std::to_string(m_) + ")");
  return (*this)[k];
}

ZetaTable build_zeta_table(std::size_t n, std::size_t m) { return ZetaTable(n, m); }

Complex zeta(const ZetaTable& table, std::size_t k) { return table.at(k); }

}  // namespace dealias
