#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "dealias/buffer.hpp"
#include "dealias/fft.hpp"
#include "dealias/implicit_nd.hpp"

namespace dealias {

// ---------------------------------------------------------------------------
// Direct sums. Accumulation is in long double; the index arithmetic is written
// out per kind and shares nothing with the implicit code.
// ---------------------------------------------------------------------------

struct DirectOptions {
  // Upper bound on multiply-adds; raise it explicitly for larger cases.
  std::size_t max_operations = std::size_t{1} << 20;
};

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// h[k] = sum_{p=0}^{k} f[p] g[k-p], k < m.
std::vector<Complex> direct_cconv(std::span<const Complex> f, std::span<const Complex> g,
                                  const DirectOptions& opt = {});
// Centered Hermitian: h[k] = sum_{p=k-m+1}^{m-1} f[p] g[k-p], f[-p] = conj(f[p]).
std::vector<Complex> direct_hconv(std::span<const Complex> f, std::span<const Complex> g,
                                  const DirectOptions& opt = {});
// Centered Hermitian ternary over |p|, |q|, |r| <= m-1 with m = f.size().
std::vector<Complex> direct_tconv(std::span<const Complex> f, std::span<const Complex> g,
                                  std::span<const Complex> h, const DirectOptions& opt = {});

Field2D direct_cconv2(const Field2D& f, const Field2D& g, const DirectOptions& opt = {});
Field2D direct_conv2(const Field2D& f, const Field2D& g, const DirectOptions& opt = {});
Field3D direct_cconv3(const Field3D& f, const Field3D& g, const DirectOptions& opt = {});
Field3D direct_hconv3(const Field3D& f, const Field3D& g, const DirectOptions& opt = {});
Field2D direct_tconv2(const Field2D& f, const Field2D& g, const Field2D& h, const DirectOptions& opt = {});

// sum_p (p_x k_y - p_y k_x) / |k-p|^2 w_p w_{k-p} over the centered Hermitian
// extension of w, evaluated for every stored k.
Field2D direct_advection2d(const Field2D& omega, const DirectOptions& opt = {});

// ---------------------------------------------------------------------------
// Explicitly zero-padded convolutions. Each object owns its padded arrays,
// allocated once at construction; words() is their total.
//
//   cconv   2 arrays of 2m                 cconv2  2 arrays of 2m_x x 2m_y
//   hconv   2 arrays of 3m/2+1 (N = 3m)    conv2   2 arrays of (3m_x-2) x 3m_y/2
//   tconv   3 arrays of 2m+1   (N = 4m)    tconv2  3 arrays of 4m_x x (2m_y+1)
//   cconv3  2 arrays of 2m_x x 2m_y x 2m_z
//   hconv3  2 arrays of 3m_x x 3m_y x 3m_z/2
//
// Pruning (cconv2, cconv3 only) skips the transforms of lines that are known
// to be zero on input or discarded on output.
// ---------------------------------------------------------------------------

enum class Pruning { none, pruned };

class ExplicitConvolution1D {
 public:
  // kind is cconv, hconv (m even) or tconv.
  ExplicitConvolution1D(ConvKind kind, std::size_t m, Backend backend = default_backend());

  // f, g (and h for tconv) hold at least m words; the result replaces f[0..m).
  void convolve(std::span<Complex> f, std::span<const Complex> g, std::span<const Complex> h = {});

  std::size_t words() const noexcept;

 private:
  ConvKind kind_;
  std::size_t m_, n_, len_;
  ComplexBuffer a_, b_, c_;
  FftPlan backward_, forward_;
};

class ExplicitConvolution2D {
 public:
  // kind is cconv2, conv2 (m_y even) or tconv2.
  ExplicitConvolution2D(ConvKind kind, std::size_t mx, std::size_t my, Pruning pruning = Pruning::none,
                        Backend backend = default_backend());

  void convolve(Field2D& f, const Field2D& g);
  void convolve(Field2D& f, const Field2D& g, const Field2D& h);

  std::size_t words() const noexcept { return a_.size() + b_.size() + c_.size(); }

 private:
  void load(ComplexBuffer& dst, const Field2D& src) const;
  void store(Field2D& dst) const;
  void backward(ComplexBuffer& a) const;
  void forward(ComplexBuffer& a) const;

  ConvKind kind_;
  std::size_t mx_, my_, nx_, ny_, cols_;
  Pruning pruning_;
  ComplexBuffer a_, b_, c_;
  FftPlan xb_, xf_, yb_, yf_;
};

class ExplicitConvolution3D {
 public:
  // kind is cconv3 or hconv3 (m_z even).
  ExplicitConvolution3D(ConvKind kind, std::size_t mx, std::size_t my, std::size_t mz,
                        Pruning pruning = Pruning::none, Backend backend = default_backend());

  void convolve(Field3D& f, const Field3D& g);

  std::size_t words() const noexcept { return a_.size() + b_.size(); }

 private:
  void load(ComplexBuffer& dst, const Field3D& src) const;
  void backward(ComplexBuffer& a) const;
  void forward(ComplexBuffer& a) const;

  ConvKind kind_;
  std::size_t mx_, my_, mz_, nx_, ny_, nz_, cols_;
  Pruning pruning_;
  ComplexBuffer a_, b_;
  FftPlan xb_, xf_, yb_, yf_, zb_, zf_;
};

// One-shot wrappers.
std::vector<Complex> explicit_cconv(std::span<const Complex> f, std::span<const Complex> g,
                                    Backend backend = default_backend());
std::vector<Complex> explicit_hconv(std::span<const Complex> f, std::span<const Complex> g,
                                    Backend backend = default_backend());
std::vector<Complex> explicit_tconv(std::span<const Complex> f, std::span<const Complex> g,
                                    std::span<const Complex> h, Backend backend = default_backend());

}  // namespace dealias
