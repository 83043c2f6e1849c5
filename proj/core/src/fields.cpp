#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dealias/implicit_nd.hpp"

namespace dealias {

std::string_view to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::standard: return "standard";
    case FieldKind::hermitian: return "hermitian";
    case FieldKind::ternary: return "ternary";
  }
  return "unknown";
}

Field2D::Field2D(FieldKind kind, std::size_t mx, std::size_t my) : kind_(kind), mx_(mx), my_(my) {
  if (mx == 0 || my == 0) throw std::invalid_argument("Field2D: dimensions must be positive");
  switch (kind) {
    case FieldKind::standard:
      rows_ = mx;
      cols_ = my;
      break;
    case FieldKind::hermitian:
      rows_ = 2 * mx - 1;
      cols_ = my;
      break;
    case FieldKind::ternary:
      rows_ = 2 * mx;
      cols_ = my + 1;
      break;
  }
  data_ = ComplexBuffer(rows_ * cols_);
}

Field3D::Field3D(FieldKind kind, std::size_t mx, std::size_t my, std::size_t mz)
    : kind_(kind), mx_(mx), my_(my), mz_(mz) {
  if (mx == 0 || my == 0 || mz == 0) throw std::invalid_argument("Field3D: dimensions must be positive");
  switch (kind) {
    case FieldKind::standard:
      nx_ = mx;
      ny_ = my;
      break;
    case FieldKind::hermitian:
      nx_ = 2 * mx - 1;
      ny_ = 2 * my - 1;
      break;
    case FieldKind::ternary:
      throw std::invalid_argument("Field3D: ternary fields are two-dimensional only");
  }
  nz_ = mz;
  data_ = ComplexBuffer(nx_ * ny_ * nz_);
}

namespace {

// Averages the pair (a, b) with b standing for U_{-k}: a = (a + conj b)/2.
void symmetrize(Complex& a, Complex& b) {
  const Complex avg = 0.5 * (a + std::conj(b));
  a = avg;
  b = std::conj(avg);
}

}  // namespace

void enforce_symmetry(Field2D& f) {
  if (f.kind() == FieldKind::standard) return;
  if (f.kind() == FieldKind::hermitian) {
    const std::size_t o = f.mx() - 1;
    for (std::size_t i = 0; i < o; ++i) symmetrize(f(2 * o - i, 0), f(i, 0));
    f(o, 0) = f(o, 0).real();
    return;
  }
  const std::size_t o = f.mx();
  for (std::size_t j = 0; j < f.cols(); ++j) f(0, j) = 0.0;
  for (std::size_t i = 0; i < f.rows(); ++i) f(i, f.my()) = 0.0;
  for (std::size_t i = 1; i < o; ++i) symmetrize(f(2 * o - i, 0), f(i, 0));
  f(o, 0) = f(o, 0).real();
}

void enforce_symmetry(Field3D& f) {
  if (f.kind() != FieldKind::hermitian) return;
  const std::size_t ox = f.mx() - 1, oy = f.my() - 1;
  const std::size_t nx = f.nx(), ny = f.ny();
  // Visit each pair once: (i, j) before its mirror in row-major order.
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      const std::size_t ii = 2 * ox - i, jj = 2 * oy - j;
      if (i * ny + j < ii * ny + jj) symmetrize(f(ii, jj, 0), f(i, j, 0));
    }
  f(ox, oy, 0) = f(ox, oy, 0).real();
}

double symmetry_residual(const Field2D& f) {
  if (f.kind() == FieldKind::standard) return 0.0;
  const std::size_t o = f.kind() == FieldKind::hermitian ? f.mx() - 1 : f.mx();
  const std::size_t first = f.kind() == FieldKind::hermitian ? 0 : 1;
  double r = 0.0;
  for (std::size_t i = first; i <= 2 * o - first; ++i)
    r = std::max(r, std::abs(f(i, 0) - std::conj(f(2 * o - i, 0))));
  return r;
}

double symmetry_residual(const Field3D& f) {
  if (f.kind() != FieldKind::hermitian) return 0.0;
  const std::size_t ox = f.mx() - 1, oy = f.my() - 1;
  double r = 0.0;
  for (std::size_t i = 0; i < f.nx(); ++i)
    for (std::size_t j = 0; j < f.ny(); ++j)
      r = std::max(r, std::abs(f(i, j, 0) - std::conj(f(2 * ox - i, 2 * oy - j, 0))));
  return r;
}

}  // namespace dealias
