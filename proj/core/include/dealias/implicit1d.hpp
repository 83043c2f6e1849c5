#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dealias/buffer.hpp"
#include "dealias/fft.hpp"
#include "dealias/roots.hpp"

namespace dealias {

// Placement of a batch of vectors for the strided multivector transforms:
// element k of vector j is at base[j*dist + k*stride]. The work vectors use
// the same stride and `work_dist` between vectors. A zero distance means the
// natural packed length of the respective vector.
//
// With count = columns, stride = row length and dist = 1 the batch is the set
// of columns of a row-major matrix, which is how the x-direction transforms
// of the multidimensional convolutions are issued.
struct VectorLayout {
  std::size_t count = 1;
  std::size_t stride = 1;
  std::size_t dist = 0;
  std::size_t work_dist = 0;
};

// Work vectors for the 1D convolutions. Contents are undefined between calls.
struct Workspace1D {
  ComplexBuffer u;
  ComplexBuffer v;
  ComplexBuffer w;

  std::size_t words() const noexcept { return u.size() + v.size() + w.size(); }
};

// ---------------------------------------------------------------------------
// Implicitly padded transforms. Each backward transform leaves the padded
// transform in a scrambled (residue-stream) layout split between the input
// vector f and an auxiliary vector u; the matching forward transform consumes
// that layout and returns the normalized spectrum in f.
// ---------------------------------------------------------------------------

// Zero padding m modes to N = 2m.
//
// Layout after backward(f, u), for l = 0..m-1:
//   f[l] = u_{2l}      (even outputs)
//   u[l] = u_{2l+1}    (odd outputs)
class FftPad {
 public:
  explicit FftPad(std::size_t m, VectorLayout layout = {}, Backend backend = default_backend());

  void backward(Complex* f, Complex* u) const;
  // Returns f with the 1/(2m) normalization applied; u is destroyed.
  void forward(Complex* f, Complex* u) const;

  // Single-vector checked forms; f and u must each hold m words and not overlap.
  void backward(std::span<Complex> f, std::span<Complex> u) const;
  void forward(std::span<Complex> f, std::span<Complex> u) const;

  std::size_t m() const noexcept { return m_; }
  const VectorLayout& layout() const noexcept { return layout_; }

 private:
  void check(std::span<Complex> f, std::span<Complex> u) const;

  std::size_t m_;
  VectorLayout layout_;
  ZetaTable zeta_;
  FftPlan backward_f_, backward_u_, forward_f_, forward_u_;
};

// Centered data of length 2m-1 (origin at index m-1) padded to N = 3m.
// Requires m >= 2. The three residue streams j = 3l + r, r in {-1, 0, 1}:
//   r =  0: f[l] for l = 0..m-2, and u[m] for l = m-1
//   r =  1: f[m-1+l] for l = 0..m-1
//   r = -1: u[l] for l = 0..m-1
// u holds m+1 words.
class FftPad0 {
 public:
  explicit FftPad0(std::size_t m, VectorLayout layout = {}, Backend backend = default_backend());

  void backward(Complex* f, Complex* u) const;
  void forward(Complex* f, Complex* u) const;

  void backward(std::span<Complex> f, std::span<Complex> u) const;
  void forward(std::span<Complex> f, std::span<Complex> u) const;

  std::size_t m() const noexcept { return m_; }
  const VectorLayout& layout() const noexcept { return layout_; }

 private:
  void check(std::span<Complex> f, std::span<Complex> u) const;

  std::size_t m_;
  VectorLayout layout_;
  ZetaTable zeta_;
  FftPlan backward_f_, backward_u_, forward_f_, forward_u_;
};

// Signed centered data of length 2m (origin at index m; f[0] is the padding
// word and is forced to zero) padded to N = 4m. Both streams are stored
// multiplied by (-1)^l, a sign that cancels in ternary products:
//   f[l] = (-1)^l u_{2l},  u[l] = (-1)^l u_{2l+1},  l = 0..2m-1.
class FftPad0t {
 public:
  explicit FftPad0t(std::size_t m, VectorLayout layout = {}, Backend backend = default_backend());

  void backward(Complex* f, Complex* u) const;
  // f[0] is returned as zero.
  void forward(Complex* f, Complex* u) const;

  void backward(std::span<Complex> f, std::span<Complex> u) const;
  void forward(std::span<Complex> f, std::span<Complex> u) const;

  std::size_t m() const noexcept { return m_; }
  const VectorLayout& layout() const noexcept { return layout_; }

 private:
  void check(std::span<Complex> f, std::span<Complex> u) const;

  std::size_t m_;
  VectorLayout layout_;
  ZetaTable zeta_;
  FftPlan backward_f_, backward_u_, forward_f_, forward_u_;
};

// General p/q padding: p*m modes zero padded to N = q*m, gcd(p, q) = 1, p < q.
// Stream r (r = 0..q-1) occupies streams[r*m .. r*m+m) and holds the padded
// outputs u_{q l + r}.
class PqPad {
 public:
  PqPad(std::size_t m, std::size_t p, std::size_t q, Backend backend = default_backend());

  void backward(std::span<const Complex> input, std::span<Complex> streams) const;
  // Consumes (overwrites) streams; output has p*m words, normalized by 1/(qm).
  void forward(std::span<Complex> streams, std::span<Complex> output) const;

  std::size_t m() const noexcept { return m_; }
  std::size_t p() const noexcept { return p_; }
  std::size_t q() const noexcept { return q_; }

 private:
  std::size_t m_, p_, q_;
  ZetaTable zeta_;
  FftPlan backward_, forward_;
};

// ---------------------------------------------------------------------------
// Implicitly dealiased 1D convolutions. All are in place on f. With
// members = M > 1, f and g each hold M spectra (member i at offset i*dist)
// and the result is the dot product sum_i f_i * g_i, written to member 0;
// the other members are clobbered.
// ---------------------------------------------------------------------------

// f[k] = sum_i sum_{p=0}^{k} f_i[p] g_i[k-p], k = 0..m-1.
class ComplexConvolution {
 public:
  explicit ComplexConvolution(std::size_t m, std::size_t members = 1, Backend backend = default_backend());

  Workspace1D make_workspace() const;
  void convolve(std::span<Complex> f, std::span<Complex> g, Workspace1D& ws) const;
  void convolve(Complex* f, Complex* g, std::size_t dist, Workspace1D& ws) const;

  std::size_t m() const noexcept { return m_; }
  std::size_t members() const noexcept { return members_; }
  // Words per member in each of u and v.
  std::size_t work_length() const noexcept { return m_; }

 private:
  std::size_t m_;
  std::size_t members_;
  ZetaTable zeta_;
  FftPlan backward_, forward_;
};

// The two k = c values that do not fit in the in-place layout produced by
// HermitianConvolution::build: w_{c,0} and conj(w_{c,1}). Both are real.
struct HermitianEdge {
  double r0;
  double r1;
};

// Centered Hermitian convolution of the non-negative modes 0..m-1, m = 2c:
//   f[k] = sum_i sum_{p=k-m+1}^{m-1} f_i[p] g_i[k-p],  f_i[-p] = conj(f_i[p]).
// f[0] and g[0] are taken to be real.
class HermitianConvolution {
 public:
  explicit HermitianConvolution(std::size_t m, std::size_t members = 1, Backend backend = default_backend());

  Workspace1D make_workspace() const;
  void convolve(std::span<Complex> f, std::span<Complex> g, Workspace1D& ws) const;
  void convolve(Complex* f, Complex* g, std::size_t dist, Workspace1D& ws) const;

  // Builds the three complex-to-real input streams of the N = 3m transform,
  // w_{k,r} = zeta_{3m}^{rk} (U_k + zeta_3^{-r} conj(U_{m-k})), w_{0,r} = U_0:
  //   r =  0: f[k]        = w_{k,0},        k = 0..c-1
  //   r =  1: f[2c-1-k]   = conj(w_{k,1}),  k = 0..c-1  (reversed, conjugated)
  //   r = -1: u[k]        = w_{k,-1},       k = 0..c
  // The reversed r = 1 stream transforms to (-1)^j times the true stream. The
  // remaining k = c entries of the r = 0 and r = 1 streams are returned.
  HermitianEdge build(Complex* f, Complex* u) const;
  HermitianEdge build(std::span<Complex> f, std::span<Complex> u) const;

  std::size_t m() const noexcept { return m_; }
  std::size_t members() const noexcept { return members_; }
  std::size_t work_length() const noexcept { return c_ + 1; }

 private:
  std::size_t m_;
  std::size_t c_;
  std::size_t members_;
  ZetaTable zeta_;
  FftPlan cr_in_place_, cr_, rc_;
  mutable std::vector<Complex> saved_;
  mutable std::vector<HermitianEdge> edges_;
};

// Centered Hermitian ternary convolution, m a power of two. f, g and h hold
// m+1 words (modes 0..m-1 plus a slot that is zeroed):
//   f[k] = sum_{p+q+r=k} f[p] g[q] h[r],  |p|,|q|,|r| <= m-1.
class TernaryConvolution {
 public:
  explicit TernaryConvolution(std::size_t m, Backend backend = default_backend());

  Workspace1D make_workspace() const;
  void convolve(std::span<Complex> f, std::span<Complex> g, std::span<Complex> h, Workspace1D& ws) const;
  void convolve(Complex* f, Complex* g, Complex* h, Workspace1D& ws) const;

  std::size_t m() const noexcept { return m_; }
  std::size_t work_length() const noexcept { return m_ + 1; }

 private:
  std::size_t m_;
  ZetaTable zeta_;
  FftPlan cr_in_place_, cr_, rc_;
};

bool is_power_of_two(std::size_t n) noexcept;

}  // namespace dealias
