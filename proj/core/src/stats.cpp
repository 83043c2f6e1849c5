#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dealias/bench.hpp"

namespace dealias {

TimingStats one_sided_stats(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 4) throw std::invalid_argument("one_sided_stats: at least 4 samples are required");
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(n);
  double lo = 0.0, hi = 0.0;
  for (double t : samples) {
    const double d = t - mean;
    if (t < mean) lo += d * d;
    else if (t > mean) hi += d * d;
  }
  const double factor = 1.0 / (static_cast<double>(n) / 2.0 - 1.0);
  return {n, mean, std::sqrt(factor * lo), std::sqrt(factor * hi)};
}

double normalized_error(std::span<const Complex> h, std::span<const Complex> H) {
  if (h.size() != H.size()) throw std::invalid_argument("normalized_error: lengths differ");
  long double num = 0.0L, den = 0.0L;
  for (std::size_t k = 0; k < H.size(); ++k) {
    num += std::norm(h[k] - H[k]);
    den += std::norm(H[k]);
  }
  if (den == 0.0L) throw std::invalid_argument("normalized_error: exact solution has zero norm");
  return static_cast<double>(std::sqrt(num / den));
}

}  // namespace dealias
