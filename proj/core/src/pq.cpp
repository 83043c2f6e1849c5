#include <numeric>
#include <stdexcept>
#include <string>

#include "dealias/implicit1d.hpp"

namespace dealias {
namespace {

std::size_t check_pq(std::size_t m, std::size_t p, std::size_t q) {
  if (m == 0 || p == 0 || q == 0) throw std::invalid_argument("PqPad: m, p and q must be positive");
  if (p >= q) throw std::invalid_argument("PqPad: requires p < q");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("PqPad: p=" + std::to_string(p) + " and q=" + std::to_string(q) +
                                " are not coprime");
  return m;
}

}  // namespace

PqPad::PqPad(std::size_t m, std::size_t p, std::size_t q, Backend backend)
    : m_(check_pq(m, p, q)),
      p_(p),
      q_(q),
      zeta_(q * m, q * m),
      backward_(FftGeometry::complex(m, Direction::backward, Placement::in_place, 1, q, m), backend),
      forward_(FftGeometry::complex(m, Direction::forward, Placement::in_place, 1, q, m), backend) {}

void PqPad::backward(std::span<const Complex> input, std::span<Complex> streams) const {
  const std::size_t n = q_ * m_;
  if (input.size() != p_ * m_)
    throw std::invalid_argument("PqPad: input must hold p*m words");
  if (streams.size() != n) throw std::invalid_argument("PqPad: streams must hold q*m words");

  for (std::size_t r = 0; r < q_; ++r) {
    Complex* out = streams.data() + r * m_;
    for (std::size_t s = 0; s < m_; ++s) {
      Complex sum = 0.0;
      for (std::size_t t = 0; t < p_; ++t) {
        const std::size_t k = t * m_ + s;
        sum += zeta_[(r * k) % n] * input[k];
      }
      out[s] = sum;
    }
  }
  backward_.execute(streams.data(), streams.data());
}

void PqPad::forward(std::span<Complex> streams, std::span<Complex> output) const {
  const std::size_t n = q_ * m_;
  if (streams.size() != n) throw std::invalid_argument("PqPad: streams must hold q*m words");
  if (output.size() != p_ * m_) throw std::invalid_argument("PqPad: output must hold p*m words");

  forward_.execute(streams.data(), streams.data());
  const double ninv = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < p_ * m_; ++k) {
    const std::size_t s = k % m_;
    Complex sum = streams[s];
    for (std::size_t r = 1; r < q_; ++r) sum += std::conj(zeta_[(r * k) % n]) * streams[r * m_ + s];
    output[k] = sum * ninv;
  }
}

}  // namespace dealias
