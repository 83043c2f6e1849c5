#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dealias/implicit_nd.hpp"

namespace dealias {

Advection2D::Advection2D(std::size_t mx, std::size_t my, Backend backend)
    : mx_(mx),
      my_(my),
      conv_(mx, my, 2, backend),
      ws_(conv_.make_workspace()),
      f_(2 * conv_.field_size()),
      g_(2 * conv_.field_size()) {}

Field2D Advection2D::operator()(const Field2D& omega) {
  if (omega.kind() != FieldKind::hermitian || omega.mx() != mx_ || omega.my() != my_)
    throw std::invalid_argument("Advection2D: vorticity must be a hermitian field of matching size");
  double scale = 0.0;
  for (const Complex& w : omega.buffer()) scale = std::max(scale, std::abs(w));
  if (symmetry_residual(omega) > 1e-12 * scale)
    throw std::invalid_argument("Advection2D: vorticity is not Hermitian symmetric; call enforce_symmetry");

  const std::size_t A = conv_.field_size();
  const Complex I{0.0, 1.0};
  Complex* fx = f_.data();
  Complex* fy = fx + A;
  Complex* g0 = g_.data();
  Complex* g1 = g0 + A;
  for (std::size_t i = 0; i < omega.rows(); ++i) {
    const double kx = static_cast<double>(i) - static_cast<double>(mx_ - 1);
    for (std::size_t j = 0; j < my_; ++j) {
      const double ky = static_cast<double>(j);
      const double k2 = kx * kx + ky * ky;
      const double inv = k2 == 0.0 ? 0.0 : 1.0 / k2;
      const Complex w = omega(i, j);
      const std::size_t n = i * my_ + j;
      fx[n] = I * kx * w;
      fy[n] = I * ky * w;
      g0[n] = -I * ky * inv * w;
      g1[n] = I * kx * inv * w;
    }
  }
  conv_.convolve(f_.span(), g_.span(), ws_);

  Field2D out = Field2D::hermitian(mx_, my_);
  std::copy(fx, fx + A, out.data());
  return out;
}

Field2D advection2d(const Field2D& omega, Backend backend) {
  Advection2D adv(omega.mx(), omega.my(), backend);
  return adv(omega);
}

}  // namespace dealias
