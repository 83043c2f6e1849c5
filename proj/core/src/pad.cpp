#include <functional>
#include <stdexcept>
#include <string>

#include "dealias/implicit1d.hpp"

namespace dealias {
namespace {

constexpr Complex kZeta3{-0.5, 0.86602540378443864676};      // zeta_3
constexpr Complex kZeta3Inv{-0.5, -0.86602540378443864676};  // zeta_3^{-1}
constexpr Complex kI{0.0, 1.0};

VectorLayout resolve(VectorLayout layout, std::size_t length, std::size_t work_length) {
  if (layout.count == 0 || layout.stride == 0)
    throw std::invalid_argument("VectorLayout: count and stride must be positive");
  if (layout.dist == 0) layout.dist = length;
  if (layout.work_dist == 0) layout.work_dist = work_length;
  return layout;
}

std::size_t extent(std::size_t count, std::size_t dist, std::size_t length, std::size_t stride) {
  return (count - 1) * dist + (length - 1) * stride + 1;
}

bool overlap(std::span<const Complex> a, std::span<const Complex> b) {
  const auto* a0 = a.data();
  const auto* b0 = b.data();
  return std::less<>{}(a0, b0 + b.size()) && std::less<>{}(b0, a0 + a.size());
}

void check_spans(std::span<Complex> f, std::span<Complex> u, const VectorLayout& l, std::size_t f_len,
                 std::size_t u_len, const char* who) {
  const std::size_t fe = extent(l.count, l.dist, f_len, l.stride);
  const std::size_t ue = extent(l.count, l.work_dist, u_len, l.stride);
  if (f.size() < fe)
    throw std::invalid_argument(std::string(who) + ": f has " + std::to_string(f.size()) +
                                " words, needs " + std::to_string(fe));
  if (u.size() < ue)
    throw std::invalid_argument(std::string(who) + ": u has " + std::to_string(u.size()) +
                                " words, needs " + std::to_string(ue));
  if (overlap(f.first(fe), u.first(ue)))
    throw std::invalid_argument(std::string(who) + ": work vector aliases the input");
}

FftPlan inner_plan(std::size_t n, Direction dir, const VectorLayout& l, std::size_t dist, Backend backend) {
  return FftPlan(FftGeometry::complex(n, dir, Placement::in_place, l.stride, l.count, dist), backend);
}

}  // namespace

// --------------------------------------------------------------------------
// FftPad

FftPad::FftPad(std::size_t m, VectorLayout layout, Backend backend)
    : m_(m),
      layout_(resolve(layout, m, m)),
      zeta_(2 * m, m),
      backward_f_(inner_plan(m, Direction::backward, layout_, layout_.dist, backend)),
      backward_u_(inner_plan(m, Direction::backward, layout_, layout_.work_dist, backend)),
      forward_f_(inner_plan(m, Direction::forward, layout_, layout_.dist, backend)),
      forward_u_(inner_plan(m, Direction::forward, layout_, layout_.work_dist, backend)) {}

void FftPad::backward(Complex* f, Complex* u) const {
  const auto [count, stride, dist, wdist] = layout_;
  zeta_.for_each(0, m_, [&](std::size_t k, Complex z) {
    const Complex* fk = f + k * stride;
    Complex* uk = u + k * stride;
    for (std::size_t j = 0; j < count; ++j) uk[j * wdist] = z * fk[j * dist];
  });
  backward_f_.execute(f, f);
  backward_u_.execute(u, u);
}

void FftPad::forward(Complex* f, Complex* u) const {
  const auto [count, stride, dist, wdist] = layout_;
  forward_f_.execute(f, f);
  forward_u_.execute(u, u);
  const double ninv = 1.0 / static_cast<double>(2 * m_);
  zeta_.for_each(0, m_, [&](std::size_t k, Complex z) {
    const Complex zc = std::conj(z) * ninv;
    Complex* fk = f + k * stride;
    const Complex* uk = u + k * stride;
    for (std::size_t j = 0; j < count; ++j) fk[j * dist] = fk[j * dist] * ninv + zc * uk[j * wdist];
  });
}

void FftPad::check(std::span<Complex> f, std::span<Complex> u) const {
  check_spans(f, u, layout_, m_, m_, "FftPad");
}

void FftPad::backward(std::span<Complex> f, std::span<Complex> u) const {
  check(f, u);
  backward(f.data(), u.data());
}

void FftPad::forward(std::span<Complex> f, std::span<Complex> u) const {
  check(f, u);
  forward(f.data(), u.data());
}

// --------------------------------------------------------------------------
// FftPad0

namespace {
std::size_t require_centered(std::size_t m) {
  if (m < 2) throw std::invalid_argument("FftPad0: m must be at least 2 (input length 3)");
  return m;
}
}  // namespace

FftPad0::FftPad0(std::size_t m, VectorLayout layout, Backend backend)
    : m_(require_centered(m)),
      layout_(resolve(layout, 2 * m - 1, m + 1)),
      zeta_(3 * m, m),
      backward_f_(inner_plan(m, Direction::backward, layout_, layout_.dist, backend)),
      backward_u_(inner_plan(m, Direction::backward, layout_, layout_.work_dist, backend)),
      forward_f_(inner_plan(m, Direction::forward, layout_, layout_.dist, backend)),
      forward_u_(inner_plan(m, Direction::forward, layout_, layout_.work_dist, backend)) {}

void FftPad0::backward(Complex* f, Complex* u) const {
  const auto [count, stride, dist, wdist] = layout_;
  const std::size_t m = m_;
  auto F = [&](std::size_t k) { return f + k * stride; };
  auto W = [&](std::size_t k) { return u + k * stride; };

  // u[0] <- U_0 (origin)
  for (std::size_t j = 0; j < count; ++j) W(0)[j * wdist] = F(m - 1)[j * dist];

  // Descending k keeps U_{k-m} = f[k-1] intact until it is consumed, so no
  // rolling temporary is needed.
  for (std::size_t k = m - 1; k >= 1; --k) {
    const Complex z = zeta_[k];
    Complex* pos = F(m - 1 + k);  // U_k
    Complex* neg = F(k - 1);      // U_{k-m}
    Complex* r0 = F(k);
    Complex* rm = W(k);
    for (std::size_t j = 0; j < count; ++j) {
      const Complex a = pos[j * dist];
      const Complex b = neg[j * dist];
      const Complex A = z * (a.real() + kZeta3Inv * b.real());
      const Complex B = kI * z * (a.imag() + kZeta3Inv * b.imag());
      pos[j * dist] = A + B;             // w_{k,1}
      rm[j * wdist] = std::conj(A - B);  // w_{k,-1}
      r0[j * dist] = a + b;              // w_{k,0}
    }
  }
  for (std::size_t j = 0; j < count; ++j) F(0)[j * dist] = W(0)[j * wdist];

  backward_f_.execute(F(0), F(0));
  for (std::size_t j = 0; j < count; ++j) {
    W(m)[j * wdist] = F(m - 1)[j * dist];
    F(m - 1)[j * dist] = W(0)[j * wdist];
  }
  backward_f_.execute(F(m - 1), F(m - 1));
  backward_u_.execute(W(0), W(0));
}

void FftPad0::forward(Complex* f, Complex* u) const {
  const auto [count, stride, dist, wdist] = layout_;
  const std::size_t m = m_;
  auto F = [&](std::size_t k) { return f + k * stride; };
  auto W = [&](std::size_t k) { return u + k * stride; };

  forward_f_.execute(F(m - 1), F(m - 1));
  for (std::size_t j = 0; j < count; ++j) std::swap(W(m)[j * wdist], F(m - 1)[j * dist]);
  forward_f_.execute(F(0), F(0));
  forward_u_.execute(W(0), W(0));

  const double ninv = 1.0 / static_cast<double>(3 * m);
  for (std::size_t j = 0; j < count; ++j)
    W(m)[j * wdist] = (F(0)[j * dist] + W(m)[j * wdist] + W(0)[j * wdist]) * ninv;

  zeta_.for_each(1, m, [&](std::size_t k, Complex z) {
    const Complex zp = z * ninv;
    const Complex zm = std::conj(z) * ninv;
    const Complex zm3 = kZeta3 * zm;
    const Complex zp3 = kZeta3Inv * zp;
    Complex* r0 = F(k);
    Complex* r1 = F(m - 1 + k);
    Complex* neg = F(k - 1);
    const Complex* rm = W(k);
    for (std::size_t j = 0; j < count; ++j) {
      const Complex a = r0[j * dist] * ninv;
      const Complex b = r1[j * dist];
      const Complex c = rm[j * wdist];
      neg[j * dist] = a + zm3 * b + zp3 * c;  // U_{k-m}
      r1[j * dist] = a + zm * b + zp * c;     // U_k
    }
  });
  for (std::size_t j = 0; j < count; ++j) F(m - 1)[j * dist] = W(m)[j * wdist];
}

void FftPad0::check(std::span<Complex> f, std::span<Complex> u) const {
  check_spans(f, u, layout_, 2 * m_ - 1, m_ + 1, "FftPad0");
}

void FftPad0::backward(std::span<Complex> f, std::span<Complex> u) const {
  check(f, u);
  backward(f.data(), u.data());
}

void FftPad0::forward(std::span<Complex> f, std::span<Complex> u) const {
  check(f, u);
  forward(f.data(), u.data());
}

// --------------------------------------------------------------------------
// FftPad0t

FftPad0t::FftPad0t(std::size_t m, VectorLayout layout, Backend backend)
    : m_(m == 0 ? throw std::invalid_argument("FftPad0t: m must be positive") : m),
      layout_(resolve(layout, 2 * m, 2 * m)),
      zeta_(4 * m, 2 * m),
      backward_f_(inner_plan(2 * m, Direction::backward, layout_, layout_.dist, backend)),
      backward_u_(inner_plan(2 * m, Direction::backward, layout_, layout_.work_dist, backend)),
      forward_f_(inner_plan(2 * m, Direction::forward, layout_, layout_.dist, backend)),
      forward_u_(inner_plan(2 * m, Direction::forward, layout_, layout_.work_dist, backend)) {}

void FftPad0t::backward(Complex* f, Complex* u) const {
  const auto [count, stride, dist, wdist] = layout_;
  for (std::size_t j = 0; j < count; ++j) {
    f[j * dist] = 0.0;
    u[j * wdist] = 0.0;
  }
  zeta_.for_each(1, 2 * m_, [&](std::size_t k, Complex z) {
    const Complex t = -kI * z;
    const Complex* fk = f + k * stride;
    Complex* uk = u + k * stride;
    for (std::size_t j = 0; j < count; ++j) uk[j * wdist] = t * fk[j * dist];
  });
  backward_f_.execute(f, f);
  backward_u_.execute(u, u);
}

void FftPad0t::forward(Complex* f, Complex* u) const {
  const auto [count, stride, dist, wdist] = layout_;
  forward_f_.execute(f, f);
  forward_u_.execute(u, u);
  const double ninv = 1.0 / static_cast<double>(4 * m_);
  zeta_.for_each(1, 2 * m_, [&](std::size_t k, Complex z) {
    const Complex t = kI * std::conj(z) * ninv;
    Complex* fk = f + k * stride;
    const Complex* uk = u + k * stride;
    for (std::size_t j = 0; j < count; ++j) fk[j * dist] = fk[j * dist] * ninv + t * uk[j * wdist];
  });
  for (std::size_t j = 0; j < count; ++j) f[j * dist] = 0.0;
}

void FftPad0t::check(std::span<Complex> f, std::span<Complex> u) const {
  check_spans(f, u, layout_, 2 * m_, 2 * m_, "FftPad0t");
}

void FftPad0t::backward(std::span<Complex> f, std::span<Complex> u) const {
  check(f, u);
  backward(f.data(), u.data());
}

void FftPad0t::forward(std::span<Complex> f, std::span<Complex> u) const {
  check(f, u);
  forward(f.data(), u.data());
}

}  // namespace dealias
