#include <cmath>
#include <stdexcept>
#include <string>

#include "dealias/implicit1d.hpp"

namespace dealias {
namespace {

constexpr Complex kZeta3{-0.5, 0.86602540378443864676};
constexpr Complex kZeta3Inv{-0.5, -0.86602540378443864676};
constexpr double kSqrt3 = 1.73205080756887729353;

double* real(Complex* p) { return reinterpret_cast<double*>(p); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_workspace(const Workspace1D& ws, std::size_t u, std::size_t v, std::size_t w, const char* who) {
  require(ws.u.size() >= u && ws.v.size() >= v && ws.w.size() >= w,
          std::string(who) + ": workspace too small; use make_workspace()");
}

}  // namespace

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

// --------------------------------------------------------------------------
// Complex convolution

namespace {
std::size_t check_complex(std::size_t m) {
  require(m > 0, "ComplexConvolution: m must be positive");
  return m;
}
}  // namespace

ComplexConvolution::ComplexConvolution(std::size_t m, std::size_t members, Backend backend)
    : m_(check_complex(m)),
      members_(members),
      zeta_(2 * m, m),
      backward_(FftGeometry::complex(m, Direction::backward, Placement::out_of_place), backend),
      forward_(FftGeometry::complex(m, Direction::forward, Placement::out_of_place), backend) {
  require(members > 0, "ComplexConvolution: members must be positive");
}

Workspace1D ComplexConvolution::make_workspace() const {
  return {ComplexBuffer::uninitialized(members_ * m_), ComplexBuffer::uninitialized(members_ * m_),
          ComplexBuffer()};
}

void ComplexConvolution::convolve(std::span<Complex> f, std::span<Complex> g, Workspace1D& ws) const {
  const std::size_t n = members_ * m_;
  require(f.size() == n && g.size() == n,
          "ComplexConvolution: f and g must hold members*m = " + std::to_string(n) + " words");
  require(f.data() != g.data(), "ComplexConvolution: f and g must be distinct");
  convolve(f.data(), g.data(), m_, ws);
}

void ComplexConvolution::convolve(Complex* f, Complex* g, std::size_t dist, Workspace1D& ws) const {
  const std::size_t m = m_, M = members_;
  check_workspace(ws, M * m, M * m, 0, "ComplexConvolution");
  Complex* u = ws.u.data();
  Complex* v = ws.v.data();

  // Even outputs.
  for (std::size_t i = 0; i < M; ++i) {
    backward_.execute(f + i * dist, u + i * m);
    backward_.execute(g + i * dist, v + i * m);
  }
  for (std::size_t k = 0; k < m; ++k) u[k] *= v[k];
  for (std::size_t i = 1; i < M; ++i)
    for (std::size_t k = 0; k < m; ++k) u[k] += u[i * m + k] * v[i * m + k];

  // Odd outputs.
  for (std::size_t i = 0; i < M; ++i) {
    Complex* fi = f + i * dist;
    Complex* gi = g + i * dist;
    zeta_.for_each(0, m, [&](std::size_t k, Complex z) {
      fi[k] *= z;
      gi[k] *= z;
    });
    backward_.execute(fi, v + i * m);
    backward_.execute(gi, fi);
  }
  for (std::size_t k = 0; k < m; ++k) v[k] *= f[k];
  for (std::size_t i = 1; i < M; ++i) {
    const Complex* fi = f + i * dist;
    for (std::size_t k = 0; k < m; ++k) v[k] += v[i * m + k] * fi[k];
  }

  forward_.execute(u, f);
  forward_.execute(v, u);
  const double ninv = 1.0 / static_cast<double>(2 * m);
  zeta_.for_each(0, m, [&](std::size_t k, Complex z) { f[k] = (f[k] + std::conj(z) * u[k]) * ninv; });
}

// --------------------------------------------------------------------------
// Hermitian convolution

namespace {
std::size_t check_hermitian(std::size_t m) {
  require(m >= 2 && m % 2 == 0, "HermitianConvolution: m must be even and at least 2");
  return m;
}
}  // namespace

HermitianConvolution::HermitianConvolution(std::size_t m, std::size_t members, Backend backend)
    : m_(check_hermitian(m)),
      c_(m / 2),
      members_(members),
      zeta_(3 * m, m / 2 + 1),
      cr_in_place_(FftGeometry::crfft(m, Placement::in_place), backend),
      cr_(FftGeometry::crfft(m, Placement::out_of_place), backend),
      rc_(FftGeometry::rcfft(m, Placement::out_of_place), backend),
      saved_(2 * members),
      edges_(2 * members) {
  require(members > 0, "HermitianConvolution: members must be positive");
}

Workspace1D HermitianConvolution::make_workspace() const {
  const std::size_t n = members_ * (c_ + 1);
  return {ComplexBuffer::uninitialized(n), ComplexBuffer::uninitialized(n), ComplexBuffer()};
}

HermitianEdge HermitianConvolution::build(Complex* f, Complex* u) const {
  const std::size_t c = c_;
  const Complex Fc = f[c];
  u[0] = f[0];
  Complex Fk = std::conj(f[2 * c - 1]);
  f[2 * c - 1] = f[0];
  zeta_.for_each(1, c, [&](std::size_t k, Complex z) {
    const Complex zk = std::conj(z);
    const Complex A = zk * (f[k].real() + kZeta3 * Fk.real());
    const Complex B = Complex(0.0, -1.0) * zk * (f[k].imag() + kZeta3 * Fk.imag());
    f[k] += Fk;
    u[k] = A - B;
    Fk = std::conj(f[2 * c - 1 - k]);
    f[2 * c - 1 - k] = A + B;
  });
  u[c] = Fc.real() + kSqrt3 * Fc.imag();
  return {2.0 * Fc.real(), Fc.real() - kSqrt3 * Fc.imag()};
}

HermitianEdge HermitianConvolution::build(std::span<Complex> f, std::span<Complex> u) const {
  require(f.size() == m_, "HermitianConvolution::build: f must hold m words");
  require(u.size() == c_ + 1, "HermitianConvolution::build: u must hold m/2+1 words");
  return build(f.data(), u.data());
}

void HermitianConvolution::convolve(std::span<Complex> f, std::span<Complex> g, Workspace1D& ws) const {
  const std::size_t n = members_ * m_;
  require(f.size() == n && g.size() == n,
          "HermitianConvolution: f and g must hold members*m = " + std::to_string(n) + " words");
  require(f.data() != g.data(), "HermitianConvolution: f and g must be distinct");
  convolve(f.data(), g.data(), m_, ws);
}

void HermitianConvolution::convolve(Complex* f, Complex* g, std::size_t dist, Workspace1D& ws) const {
  const std::size_t m = m_, c = c_, M = members_, w = c + 1;
  check_workspace(ws, M * w, M * w, 0, "HermitianConvolution");
  Complex* u = ws.u.data();
  Complex* v = ws.v.data();
  double* ur = real(u);
  double* vr = real(v);

  for (std::size_t i = 0; i < M; ++i) {
    Complex* fi = f + i * dist;
    Complex* gi = g + i * dist;
    edges_[2 * i] = build(fi, u + i * w);
    saved_[2 * i] = fi[c];
    fi[c] = edges_[2 * i].r0;
    edges_[2 * i + 1] = build(gi, v + i * w);
    saved_[2 * i + 1] = gi[c];
    gi[c] = edges_[2 * i + 1].r0;
  }

  // r = -1
  for (std::size_t i = 0; i < M; ++i) {
    cr_in_place_.execute(u + i * w, u + i * w);
    cr_in_place_.execute(v + i * w, v + i * w);
  }
  for (std::size_t j = 0; j < m; ++j) vr[j] *= ur[j];
  for (std::size_t i = 1; i < M; ++i) {
    const double* a = ur + 2 * i * w;
    const double* b = vr + 2 * i * w;
    for (std::size_t j = 0; j < m; ++j) vr[j] += a[j] * b[j];
  }
  rc_.execute(v, u);

  // r = 0
  for (std::size_t i = 0; i < M; ++i) {
    cr_.execute(f + i * dist, v + i * w);
    cr_.execute(g + i * dist, f + i * dist);
  }
  {
    double* f0 = real(f);
    for (std::size_t j = 0; j < m; ++j) vr[j] *= f0[j];
    for (std::size_t i = 1; i < M; ++i) {
      const double* a = vr + 2 * i * w;
      const double* b = real(f + i * dist);
      for (std::size_t j = 0; j < m; ++j) vr[j] += a[j] * b[j];
    }
  }
  rc_.execute(v, f);
  const Complex S = f[c - 1];
  const Complex T = f[c];

  // r = 1 (stored reversed and conjugated from index c-1)
  for (std::size_t i = 0; i < M; ++i) {
    Complex* fi = f + i * dist;
    Complex* gi = g + i * dist;
    fi[c - 1] = edges_[2 * i].r1;
    fi[c] = saved_[2 * i];
    gi[c - 1] = edges_[2 * i + 1].r1;
    gi[c] = saved_[2 * i + 1];
  }
  for (std::size_t i = 0; i < M; ++i) {
    cr_.execute(g + i * dist + c - 1, v + i * w);
    cr_.execute(f + i * dist + c - 1, g + i * dist + c - 1);
  }
  {
    double* g0 = real(g + c - 1);
    for (std::size_t j = 0; j < m; ++j) g0[j] *= vr[j];
    for (std::size_t i = 1; i < M; ++i) {
      const double* a = real(g + i * dist + c - 1);
      const double* b = vr + 2 * i * w;
      for (std::size_t j = 0; j < m; ++j) g0[j] += a[j] * b[j];
    }
  }
  rc_.execute(g + c - 1, v);

  const double ninv = 1.0 / static_cast<double>(3 * m);
  zeta_.for_each(0, c + 1, [&](std::size_t k, Complex z) {
    const Complex a = k == c ? T : (k == c - 1 ? S : f[k]);
    const Complex zc = std::conj(z);
    if (k >= 1 && k < c)
      f[m - k] = (std::conj(a) + kZeta3Inv * z * std::conj(v[k]) + kZeta3 * zc * std::conj(u[k])) * ninv;
    f[k] = (a + zc * v[k] + z * u[k]) * ninv;
  });
}

// --------------------------------------------------------------------------
// Ternary convolution

namespace {
std::size_t check_ternary(std::size_t m) {
  require(is_power_of_two(m),
          "TernaryConvolution: m must be a power of two, got " + std::to_string(m));
  return m;
}
}  // namespace

TernaryConvolution::TernaryConvolution(std::size_t m, Backend backend)
    : m_(check_ternary(m)),
      zeta_(4 * m, m),
      cr_in_place_(FftGeometry::crfft(2 * m, Placement::in_place), backend),
      cr_(FftGeometry::crfft(2 * m, Placement::out_of_place), backend),
      rc_(FftGeometry::rcfft(2 * m, Placement::out_of_place), backend) {}

Workspace1D TernaryConvolution::make_workspace() const {
  return {ComplexBuffer::uninitialized(m_ + 1), ComplexBuffer::uninitialized(m_ + 1),
          ComplexBuffer::uninitialized(m_ + 1)};
}

void TernaryConvolution::convolve(std::span<Complex> f, std::span<Complex> g, std::span<Complex> h,
                                  Workspace1D& ws) const {
  const std::size_t n = m_ + 1;
  require(f.size() == n && g.size() == n && h.size() == n,
          "TernaryConvolution: f, g and h must hold m+1 = " + std::to_string(n) + " words");
  require(f.data() != g.data() && g.data() != h.data() && f.data() != h.data(),
          "TernaryConvolution: f, g and h must be distinct");
  convolve(f.data(), g.data(), h.data(), ws);
}

void TernaryConvolution::convolve(Complex* f, Complex* g, Complex* h, Workspace1D& ws) const {
  const std::size_t m = m_;
  check_workspace(ws, m + 1, m + 1, m + 1, "TernaryConvolution");
  Complex* u = ws.u.data();
  Complex* v = ws.v.data();
  Complex* w = ws.w.data();

  // Odd outputs.
  zeta_.for_each(0, m, [&](std::size_t k, Complex z) {
    u[k] = z * f[k];
    v[k] = z * g[k];
    w[k] = z * h[k];
  });
  u[m] = v[m] = w[m] = 0.0;
  cr_in_place_.execute(u, u);
  cr_in_place_.execute(v, v);
  cr_in_place_.execute(w, w);
  {
    const double* a = real(u);
    double* b = real(v);
    const double* d = real(w);
    for (std::size_t j = 0; j < 2 * m; ++j) b[j] *= a[j] * d[j];
  }
  rc_.execute(v, u);

  // Even outputs.
  f[m] = g[m] = h[m] = 0.0;
  cr_.execute(f, v);
  cr_.execute(g, w);
  cr_.execute(h, g);
  {
    double* a = real(v);
    const double* b = real(w);
    const double* d = real(g);
    for (std::size_t j = 0; j < 2 * m; ++j) a[j] *= b[j] * d[j];
  }
  rc_.execute(v, f);

  const double ninv = 1.0 / static_cast<double>(4 * m);
  zeta_.for_each(0, m, [&](std::size_t k, Complex z) { f[k] = (f[k] + std::conj(z) * u[k]) * ninv; });
  f[m] = 0.0;
}

}  // namespace dealias
