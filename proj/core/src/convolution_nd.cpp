#include <stdexcept>
#include <string>

#include "dealias/implicit_nd.hpp"

namespace dealias {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_field(const Field2D& f, FieldKind kind, std::size_t mx, std::size_t my, const char* who) {
  require(f.kind() == kind && f.mx() == mx && f.my() == my,
          std::string(who) + ": field is " + std::string(to_string(f.kind())) + " " + std::to_string(f.mx()) +
              "x" + std::to_string(f.my()) + ", expected " + std::string(to_string(kind)) + " " +
              std::to_string(mx) + "x" + std::to_string(my));
}

void check_field(const Field3D& f, FieldKind kind, std::size_t mx, std::size_t my, std::size_t mz,
                 const char* who) {
  require(f.kind() == kind && f.mx() == mx && f.my() == my && f.mz() == mz,
          std::string(who) + ": field kind or dimensions do not match the convolution");
}

void check_members(std::span<Complex> f, std::span<Complex> g, std::size_t n, const char* who) {
  require(f.size() == n && g.size() == n,
          std::string(who) + ": f and g must hold members*field_size = " + std::to_string(n) + " words");
  require(f.data() != g.data(), std::string(who) + ": f and g must be distinct");
}

void check_buffer(const ComplexBuffer& b, std::size_t n, const char* who) {
  require(b.size() >= n, std::string(who) + ": workspace too small; use make_workspace()");
}

std::size_t at_least(std::size_t m, std::size_t lo, const char* what) {
  require(m >= lo, what);
  return m;
}

}  // namespace

// --------------------------------------------------------------------------
// cconv2

ComplexConvolution2D::ComplexConvolution2D(std::size_t mx, std::size_t my, std::size_t members, Backend backend)
    : mx_(mx),
      my_(my),
      members_(members),
      xpad_(mx, VectorLayout{my, my, 1, 1}, backend),
      inner_(my, members, backend) {}

Workspace2D ComplexConvolution2D::make_workspace() const {
  const std::size_t n = members_ * mx_ * my_;
  return {ComplexBuffer::uninitialized(n), ComplexBuffer::uninitialized(n), ComplexBuffer(),
          inner_.make_workspace()};
}

void ComplexConvolution2D::convolve(Field2D& f, Field2D& g, Workspace2D& ws) const {
  require(members_ == 1, "ComplexConvolution2D: field form requires members == 1");
  check_field(f, FieldKind::standard, mx_, my_, "ComplexConvolution2D");
  check_field(g, FieldKind::standard, mx_, my_, "ComplexConvolution2D");
  convolve(f.span(), g.span(), ws);
}

void ComplexConvolution2D::convolve(std::span<Complex> f, std::span<Complex> g, Workspace2D& ws) const {
  check_members(f, g, members_ * field_size(), "ComplexConvolution2D");
  convolve(f.data(), g.data(), field_size(), ws);
}

void ComplexConvolution2D::convolve(Complex* f, Complex* g, std::size_t dist, Workspace2D& ws) const {
  const std::size_t A = field_size();
  check_buffer(ws.U, members_ * A, "ComplexConvolution2D");
  check_buffer(ws.V, members_ * A, "ComplexConvolution2D");
  Complex* U = ws.U.data();
  Complex* V = ws.V.data();
  for (std::size_t j = 0; j < members_; ++j) {
    xpad_.backward(f + j * dist, U + j * A);
    xpad_.backward(g + j * dist, V + j * A);
  }
  for (std::size_t i = 0; i < mx_; ++i) {
    inner_.convolve(f + i * my_, g + i * my_, dist, ws.inner);
    inner_.convolve(U + i * my_, V + i * my_, A, ws.inner);
  }
  xpad_.forward(f, U);
}

// --------------------------------------------------------------------------
// conv2

HermitianConvolution2D::HermitianConvolution2D(std::size_t mx, std::size_t my, std::size_t members,
                                               Backend backend)
    : mx_(at_least(mx, 2, "HermitianConvolution2D: m_x must be at least 2")),
      my_(my),
      members_(members),
      xpad_(mx, VectorLayout{my, my, 1, 1}, backend),
      inner_(my, members, backend) {}

Workspace2D HermitianConvolution2D::make_workspace() const {
  const std::size_t n = members_ * stream_size();
  return {ComplexBuffer::uninitialized(n), ComplexBuffer::uninitialized(n), ComplexBuffer(),
          inner_.make_workspace()};
}

void HermitianConvolution2D::convolve(Field2D& f, Field2D& g, Workspace2D& ws) const {
  require(members_ == 1, "HermitianConvolution2D: field form requires members == 1");
  check_field(f, FieldKind::hermitian, mx_, my_, "HermitianConvolution2D");
  check_field(g, FieldKind::hermitian, mx_, my_, "HermitianConvolution2D");
  convolve(f.span(), g.span(), ws);
}

void HermitianConvolution2D::convolve(std::span<Complex> f, std::span<Complex> g, Workspace2D& ws) const {
  check_members(f, g, members_ * field_size(), "HermitianConvolution2D");
  convolve(f.data(), g.data(), field_size(), ws);
}

void HermitianConvolution2D::convolve(Complex* f, Complex* g, std::size_t dist, Workspace2D& ws) const {
  check_buffer(ws.U, members_ * stream_size(), "HermitianConvolution2D");
  check_buffer(ws.V, members_ * stream_size(), "HermitianConvolution2D");
  convolve(f, g, dist, ws.U.data(), ws.V.data(), stream_size(), ws.inner);
}

void HermitianConvolution2D::convolve(Complex* f, Complex* g, std::size_t dist, Complex* U, Complex* V,
                                      std::size_t udist, Workspace1D& inner) const {
  for (std::size_t j = 0; j < members_; ++j) {
    xpad_.backward(f + j * dist, U + j * udist);
    xpad_.backward(g + j * dist, V + j * udist);
  }
  for (std::size_t i = 0; i < 2 * mx_ - 1; ++i) inner_.convolve(f + i * my_, g + i * my_, dist, inner);
  for (std::size_t i = 0; i <= mx_; ++i) inner_.convolve(U + i * my_, V + i * my_, udist, inner);
  xpad_.forward(f, U);
}

// --------------------------------------------------------------------------
// cconv3

ComplexConvolution3D::ComplexConvolution3D(std::size_t mx, std::size_t my, std::size_t mz, std::size_t members,
                                           Backend backend)
    : mx_(mx),
      my_(my),
      mz_(mz),
      members_(members),
      xpad_(mx, VectorLayout{my * mz, my * mz, 1, 1}, backend),
      inner_(my, mz, members, backend) {}

Workspace3D ComplexConvolution3D::make_workspace() const {
  const std::size_t n = members_ * field_size();
  return {ComplexBuffer::uninitialized(n), ComplexBuffer::uninitialized(n), inner_.make_workspace()};
}

void ComplexConvolution3D::convolve(Field3D& f, Field3D& g, Workspace3D& ws) const {
  require(members_ == 1, "ComplexConvolution3D: field form requires members == 1");
  check_field(f, FieldKind::standard, mx_, my_, mz_, "ComplexConvolution3D");
  check_field(g, FieldKind::standard, mx_, my_, mz_, "ComplexConvolution3D");
  convolve(f.span(), g.span(), ws);
}

void ComplexConvolution3D::convolve(std::span<Complex> f, std::span<Complex> g, Workspace3D& ws) const {
  check_members(f, g, members_ * field_size(), "ComplexConvolution3D");
  convolve(f.data(), g.data(), field_size(), ws);
}

void ComplexConvolution3D::convolve(Complex* f, Complex* g, std::size_t dist, Workspace3D& ws) const {
  const std::size_t A = field_size(), S = my_ * mz_;
  check_buffer(ws.U, members_ * A, "ComplexConvolution3D");
  check_buffer(ws.V, members_ * A, "ComplexConvolution3D");
  Complex* U = ws.U.data();
  Complex* V = ws.V.data();
  for (std::size_t j = 0; j < members_; ++j) {
    xpad_.backward(f + j * dist, U + j * A);
    xpad_.backward(g + j * dist, V + j * A);
  }
  for (std::size_t i = 0; i < mx_; ++i) {
    inner_.convolve(f + i * S, g + i * S, dist, ws.inner);
    inner_.convolve(U + i * S, V + i * S, A, ws.inner);
  }
  xpad_.forward(f, U);
}

// --------------------------------------------------------------------------
// hconv3

HermitianConvolution3D::HermitianConvolution3D(std::size_t mx, std::size_t my, std::size_t mz,
                                               std::size_t members, Backend backend)
    : mx_(at_least(mx, 2, "HermitianConvolution3D: m_x must be at least 2")),
      my_(my),
      mz_(mz),
      members_(members),
      xpad_(mx, VectorLayout{(2 * my - 1) * mz, (2 * my - 1) * mz, 1, 1}, backend),
      inner_(my, mz, members, backend) {}

Workspace3D HermitianConvolution3D::make_workspace() const {
  const std::size_t n = members_ * (mx_ + 1) * (2 * my_ - 1) * mz_;
  return {ComplexBuffer::uninitialized(n), ComplexBuffer::uninitialized(n), inner_.make_workspace()};
}

void HermitianConvolution3D::convolve(Field3D& f, Field3D& g, Workspace3D& ws) const {
  require(members_ == 1, "HermitianConvolution3D: field form requires members == 1");
  check_field(f, FieldKind::hermitian, mx_, my_, mz_, "HermitianConvolution3D");
  check_field(g, FieldKind::hermitian, mx_, my_, mz_, "HermitianConvolution3D");
  convolve(f.span(), g.span(), ws);
}

void HermitianConvolution3D::convolve(std::span<Complex> f, std::span<Complex> g, Workspace3D& ws) const {
  check_members(f, g, members_ * field_size(), "HermitianConvolution3D");
  convolve(f.data(), g.data(), field_size(), ws);
}

void HermitianConvolution3D::convolve(Complex* f, Complex* g, std::size_t dist, Workspace3D& ws) const {
  const std::size_t S = (2 * my_ - 1) * mz_, A = (mx_ + 1) * S;
  check_buffer(ws.U, members_ * A, "HermitianConvolution3D");
  check_buffer(ws.V, members_ * A, "HermitianConvolution3D");
  Complex* U = ws.U.data();
  Complex* V = ws.V.data();
  for (std::size_t j = 0; j < members_; ++j) {
    xpad_.backward(f + j * dist, U + j * A);
    xpad_.backward(g + j * dist, V + j * A);
  }
  for (std::size_t i = 0; i < 2 * mx_ - 1; ++i) inner_.convolve(f + i * S, g + i * S, dist, ws.inner);
  for (std::size_t i = 0; i <= mx_; ++i) inner_.convolve(U + i * S, V + i * S, A, ws.inner);
  xpad_.forward(f, U);
}

// --------------------------------------------------------------------------
// tconv2

TernaryConvolution2D::TernaryConvolution2D(std::size_t mx, std::size_t my, Backend backend)
    : mx_(mx), my_(my), xpad_(mx, VectorLayout{my + 1, my + 1, 1, 1}, backend), inner_(my, backend) {}

Workspace2D TernaryConvolution2D::make_workspace() const {
  const std::size_t n = field_size();
  return {ComplexBuffer::uninitialized(n), ComplexBuffer::uninitialized(n), ComplexBuffer::uninitialized(n),
          inner_.make_workspace()};
}

void TernaryConvolution2D::convolve(Field2D& f, Field2D& g, Field2D& h, Workspace2D& ws) const {
  check_field(f, FieldKind::ternary, mx_, my_, "TernaryConvolution2D");
  check_field(g, FieldKind::ternary, mx_, my_, "TernaryConvolution2D");
  check_field(h, FieldKind::ternary, mx_, my_, "TernaryConvolution2D");
  require(f.data() != g.data() && g.data() != h.data() && f.data() != h.data(),
          "TernaryConvolution2D: f, g and h must be distinct");
  convolve(f.data(), g.data(), h.data(), ws);
}

void TernaryConvolution2D::convolve(Complex* f, Complex* g, Complex* h, Workspace2D& ws) const {
  const std::size_t A = field_size(), C = my_ + 1;
  check_buffer(ws.U, A, "TernaryConvolution2D");
  check_buffer(ws.V, A, "TernaryConvolution2D");
  check_buffer(ws.W, A, "TernaryConvolution2D");
  Complex* U = ws.U.data();
  Complex* V = ws.V.data();
  Complex* W = ws.W.data();
  xpad_.backward(f, U);
  xpad_.backward(g, V);
  xpad_.backward(h, W);
  for (std::size_t i = 0; i < 2 * mx_; ++i) {
    inner_.convolve(f + i * C, g + i * C, h + i * C, ws.inner);
    inner_.convolve(U + i * C, V + i * C, W + i * C, ws.inner);
  }
  xpad_.forward(f, U);
}

}  // namespace dealias
