#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "dealias/buffer.hpp"
#include "dealias/fft.hpp"
#include "dealias/implicit1d.hpp"

namespace dealias {

enum class FieldKind {
  standard,   // m_x x m_y (x m_z), modes 0..m-1 per axis
  hermitian,  // (2m_x-1) x m_y or (2m_x-1) x (2m_y-1) x m_z, last axis non-negative
  ternary,    // 2m_x x (m_y+1); row 0 and column m_y are padding
};

std::string_view to_string(FieldKind kind);

// Row-major spectral field; the last axis has unit stride.
//
// Hermitian 2D: row i holds k_x = i - (m_x-1), column j holds k_y = j.
// Ternary 2D:   row i holds k_x = i - m_x, column j holds k_y = j < m_y.
// Hermitian 3D: (i, j, l) holds (i - (m_x-1), j - (m_y-1), l).
class Field2D {
 public:
  Field2D() = default;
  Field2D(FieldKind kind, std::size_t mx, std::size_t my);

  static Field2D standard(std::size_t mx, std::size_t my) { return {FieldKind::standard, mx, my}; }
  static Field2D hermitian(std::size_t mx, std::size_t my) { return {FieldKind::hermitian, mx, my}; }
  static Field2D ternary(std::size_t mx, std::size_t my) { return {FieldKind::ternary, mx, my}; }

  FieldKind kind() const noexcept { return kind_; }
  std::size_t mx() const noexcept { return mx_; }
  std::size_t my() const noexcept { return my_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Complex* data() noexcept { return data_.data(); }
  const Complex* data() const noexcept { return data_.data(); }
  std::span<Complex> span() noexcept { return data_.span(); }
  std::span<const Complex> span() const noexcept { return {data_.data(), data_.size()}; }
  ComplexBuffer& buffer() noexcept { return data_; }
  const ComplexBuffer& buffer() const noexcept { return data_; }

 private:
  FieldKind kind_ = FieldKind::standard;
  std::size_t mx_ = 0, my_ = 0, rows_ = 0, cols_ = 0;
  ComplexBuffer data_;
};

class Field3D {
 public:
  Field3D() = default;
  // standard or hermitian
  Field3D(FieldKind kind, std::size_t mx, std::size_t my, std::size_t mz);

  static Field3D standard(std::size_t mx, std::size_t my, std::size_t mz) {
    return {FieldKind::standard, mx, my, mz};
  }
  static Field3D hermitian(std::size_t mx, std::size_t my, std::size_t mz) {
    return {FieldKind::hermitian, mx, my, mz};
  }

  FieldKind kind() const noexcept { return kind_; }
  std::size_t mx() const noexcept { return mx_; }
  std::size_t my() const noexcept { return my_; }
  std::size_t mz() const noexcept { return mz_; }
  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }
  std::size_t nz() const noexcept { return nz_; }
  std::size_t size() const noexcept { return data_.size(); }

  Complex& operator()(std::size_t i, std::size_t j, std::size_t l) noexcept { return data_[(i * ny_ + j) * nz_ + l]; }
  const Complex& operator()(std::size_t i, std::size_t j, std::size_t l) const noexcept {
    return data_[(i * ny_ + j) * nz_ + l];
  }
  Complex* data() noexcept { return data_.data(); }
  const Complex* data() const noexcept { return data_.data(); }
  std::span<Complex> span() noexcept { return data_.span(); }
  std::span<const Complex> span() const noexcept { return {data_.data(), data_.size()}; }
  ComplexBuffer& buffer() noexcept { return data_; }
  const ComplexBuffer& buffer() const noexcept { return data_; }

 private:
  FieldKind kind_ = FieldKind::standard;
  std::size_t mx_ = 0, my_ = 0, mz_ = 0, nx_ = 0, ny_ = 0, nz_ = 0;
  ComplexBuffer data_;
};

// Makes the self-conjugate line (2D, k_y = 0) or plane (3D, k_z = 0) satisfy
// U_{-k} = conj(U_k) by averaging each pair, and makes the origin real. For
// ternary fields the padding row and column are also zeroed. Standard fields
// are left untouched.
void enforce_symmetry(Field2D& f);
void enforce_symmetry(Field3D& f);

// Largest |U_k - conj(U_{-k})| over the self-conjugate line or plane,
// with the origin entering as 2|Im U_0|.
double symmetry_residual(const Field2D& f);
double symmetry_residual(const Field3D& f);

// ---------------------------------------------------------------------------
// Work arrays. U, V (and W) hold the extra residue streams of the x
// transform; the nested workspace is reused by every inner convolution.
// ---------------------------------------------------------------------------

struct Workspace2D {
  ComplexBuffer U, V, W;
  Workspace1D inner;

  std::size_t words() const noexcept { return U.size() + V.size() + W.size() + inner.words(); }
};

struct Workspace3D {
  ComplexBuffer U, V;
  Workspace2D inner;

  std::size_t words() const noexcept { return U.size() + V.size() + inner.words(); }
};

// All ND convolutions are in place on f. With members = M > 1 the spans hold
// M consecutive fields and the result is sum_i f_i * g_i in the first field;
// the others are clobbered. Raw forms take the distance between members.

// m_x x m_y complex convolution over [0, m_x) x [0, m_y).
class ComplexConvolution2D {
 public:
  ComplexConvolution2D(std::size_t mx, std::size_t my, std::size_t members = 1,
                       Backend backend = default_backend());

  Workspace2D make_workspace() const;
  void convolve(Field2D& f, Field2D& g, Workspace2D& ws) const;
  void convolve(std::span<Complex> f, std::span<Complex> g, Workspace2D& ws) const;
  void convolve(Complex* f, Complex* g, std::size_t dist, Workspace2D& ws) const;

  std::size_t mx() const noexcept { return mx_; }
  std::size_t my() const noexcept { return my_; }
  std::size_t members() const noexcept { return members_; }
  std::size_t field_size() const noexcept { return mx_ * my_; }

 private:
  std::size_t mx_, my_, members_;
  FftPad xpad_;
  ComplexConvolution inner_;
};

// (2m_x-1) x m_y centered Hermitian convolution; m_x >= 2, m_y even.
class HermitianConvolution2D {
 public:
  HermitianConvolution2D(std::size_t mx, std::size_t my, std::size_t members = 1,
                         Backend backend = default_backend());

  Workspace2D make_workspace() const;
  void convolve(Field2D& f, Field2D& g, Workspace2D& ws) const;
  void convolve(std::span<Complex> f, std::span<Complex> g, Workspace2D& ws) const;
  void convolve(Complex* f, Complex* g, std::size_t dist, Workspace2D& ws) const;
  // Uses caller-provided stream arrays U, V of members x (m_x+1) x m_y words
  // with member distance udist; only ws.inner is touched.
  void convolve(Complex* f, Complex* g, std::size_t dist, Complex* U, Complex* V, std::size_t udist,
                Workspace1D& inner) const;

  std::size_t mx() const noexcept { return mx_; }
  std::size_t my() const noexcept { return my_; }
  std::size_t members() const noexcept { return members_; }
  std::size_t field_size() const noexcept { return (2 * mx_ - 1) * my_; }
  std::size_t stream_size() const noexcept { return (mx_ + 1) * my_; }

 private:
  std::size_t mx_, my_, members_;
  FftPad0 xpad_;
  HermitianConvolution inner_;
};

// m_x x m_y x m_z complex convolution.
class ComplexConvolution3D {
 public:
  ComplexConvolution3D(std::size_t mx, std::size_t my, std::size_t mz, std::size_t members = 1,
                       Backend backend = default_backend());

  Workspace3D make_workspace() const;
  void convolve(Field3D& f, Field3D& g, Workspace3D& ws) const;
  void convolve(std::span<Complex> f, std::span<Complex> g, Workspace3D& ws) const;
  void convolve(Complex* f, Complex* g, std::size_t dist, Workspace3D& ws) const;

  std::size_t field_size() const noexcept { return mx_ * my_ * mz_; }
  std::size_t members() const noexcept { return members_; }

 private:
  std::size_t mx_, my_, mz_, members_;
  FftPad xpad_;
  ComplexConvolution2D inner_;
};

// (2m_x-1) x (2m_y-1) x m_z centered Hermitian convolution; m_x, m_y >= 2,
// m_z even. The x direction is padded first, then each x slab is handled by
// the 2D centered Hermitian convolution in (y, z).
class HermitianConvolution3D {
 public:
  HermitianConvolution3D(std::size_t mx, std::size_t my, std::size_t mz, std::size_t members = 1,
                         Backend backend = default_backend());

  Workspace3D make_workspace() const;
  void convolve(Field3D& f, Field3D& g, Workspace3D& ws) const;
  void convolve(std::span<Complex> f, std::span<Complex> g, Workspace3D& ws) const;
  void convolve(Complex* f, Complex* g, std::size_t dist, Workspace3D& ws) const;

  std::size_t field_size() const noexcept { return (2 * mx_ - 1) * (2 * my_ - 1) * mz_; }
  std::size_t members() const noexcept { return members_; }

 private:
  std::size_t mx_, my_, mz_, members_;
  FftPad0 xpad_;
  HermitianConvolution2D inner_;
};

// 2m_x x (m_y+1) centered Hermitian ternary convolution; m_y a power of two.
class TernaryConvolution2D {
 public:
  TernaryConvolution2D(std::size_t mx, std::size_t my, Backend backend = default_backend());

  Workspace2D make_workspace() const;
  void convolve(Field2D& f, Field2D& g, Field2D& h, Workspace2D& ws) const;
  void convolve(Complex* f, Complex* g, Complex* h, Workspace2D& ws) const;

  std::size_t field_size() const noexcept { return 2 * mx_ * (my_ + 1); }

 private:
  std::size_t mx_, my_;
  FftPad0t xpad_;
  TernaryConvolution inner_;
};

// Dealiased advective term of the 2D Euler equation for a centered Hermitian
// vorticity field:
//   A_k = sum_p (p_x k_y - p_y k_x) / |k-p|^2  w_p w_{k-p},
// evaluated as one two-member centered Hermitian convolution. 1/|k|^2 is
// taken as 0 at k = 0.
class Advection2D {
 public:
  Advection2D(std::size_t mx, std::size_t my, Backend backend = default_backend());

  // Throws std::invalid_argument if omega is not Hermitian symmetric on its
  // self-conjugate line (call enforce_symmetry first).
  Field2D operator()(const Field2D& omega);

 private:
  std::size_t mx_, my_;
  HermitianConvolution2D conv_;
  Workspace2D ws_;
  ComplexBuffer f_, g_;
};

Field2D advection2d(const Field2D& omega, Backend backend = default_backend());

// ---------------------------------------------------------------------------
// Memory accounting in complex words.
// ---------------------------------------------------------------------------

enum class ConvKind { cconv, hconv, tconv, cconv2, conv2, cconv3, hconv3, tconv2 };

std::string_view to_string(ConvKind kind);
ConvKind parse_conv_kind(std::string_view name);
// Number of axes (1, 2 or 3).
std::size_t rank(ConvKind kind);

struct Dims {
  std::size_t mx = 1, my = 1, mz = 1;
};

struct MemoryReport {
  std::size_t implicit_formula = 0;
  std::size_t implicit_allocated = 0;
  std::size_t explicit_formula = 0;
  std::size_t explicit_allocated = 0;
};

std::size_t implicit_words(ConvKind kind, const Dims& d);
std::size_t explicit_words(ConvKind kind, const Dims& d);

// Evaluates the closed forms and measures the words actually allocated by the
// implicit (user fields plus workspace) and explicit (padded arrays) setups.
MemoryReport memory_report(ConvKind kind, const Dims& d);

}  // namespace dealias
