#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "dealias/implicit_nd.hpp"
#include "dealias/oracles.hpp"
#include "test_support.hpp"

namespace {

using dealias::Dims;
using dealias::Field2D;
using dealias::Field3D;
using dealias::FieldKind;
using testing_support::Complex;
using testing_support::CVec;
using testing_support::Gen;
using testing_support::LC;
using testing_support::narrow;
using testing_support::rel_l2;
using testing_support::widen;
using testing_support::at2;
using testing_support::brute_advection;

using ll = long long;

// ----- brute-force ND sums over the stored index sets

Field2D brute_cconv2(const Field2D& f, const Field2D& g) {
  Field2D h = Field2D::standard(f.mx(), f.my());
  for (std::size_t i = 0; i < f.mx(); ++i)
    for (std::size_t j = 0; j < f.my(); ++j) {
      LC s = 0;
      for (std::size_t p = 0; p <= i; ++p)
        for (std::size_t q = 0; q <= j; ++q) s += widen(f(p, q)) * widen(g(i - p, j - q));
      h(i, j) = narrow(s);
    }
  return h;
}

Field2D brute_conv2(const Field2D& f, const Field2D& g) {
  Field2D h = Field2D::hermitian(f.mx(), f.my());
  const ll mx = static_cast<ll>(f.mx()), my = static_cast<ll>(f.my());
  for (ll kx = -mx + 1; kx < mx; ++kx)
    for (ll ky = 0; ky < my; ++ky) {
      LC s = 0;
      for (ll px = -mx + 1; px < mx; ++px)
        for (ll py = -my + 1; py < my; ++py) s += at2(f, px, py) * at2(g, kx - px, ky - py);
      h(static_cast<std::size_t>(kx + mx - 1), static_cast<std::size_t>(ky)) = narrow(s);
    }
  return h;
}

Field2D brute_tconv2(const Field2D& f, const Field2D& g, const Field2D& h) {
  Field2D out = Field2D::ternary(f.mx(), f.my());
  const ll mx = static_cast<ll>(f.mx()), my = static_cast<ll>(f.my());
  for (ll kx = -mx + 1; kx < mx; ++kx)
    for (ll ky = 0; ky < my; ++ky) {
      LC s = 0;
      for (ll px = -mx + 1; px < mx; ++px)
        for (ll py = -my + 1; py < my; ++py)
          for (ll qx = -mx + 1; qx < mx; ++qx)
            for (ll qy = -my + 1; qy < my; ++qy)
              s += at2(f, px, py) * at2(g, qx, qy) * at2(h, kx - px - qx, ky - py - qy);
      out(static_cast<std::size_t>(kx + mx), static_cast<std::size_t>(ky)) = narrow(s);
    }
  return out;
}

LC at3(const Field3D& f, ll kx, ll ky, ll kz) {
  const ll mx = static_cast<ll>(f.mx()), my = static_cast<ll>(f.my()), mz = static_cast<ll>(f.mz());
  if (kz < 0) return std::conj(at3(f, -kx, -ky, -kz));
  if (kx <= -mx || kx >= mx || ky <= -my || ky >= my || kz >= mz) return 0;
  return widen(f(static_cast<std::size_t>(kx + mx - 1), static_cast<std::size_t>(ky + my - 1),
                 static_cast<std::size_t>(kz)));
}

Field3D brute_hconv3(const Field3D& f, const Field3D& g) {
  Field3D h = Field3D::hermitian(f.mx(), f.my(), f.mz());
  const ll mx = static_cast<ll>(f.mx()), my = static_cast<ll>(f.my()), mz = static_cast<ll>(f.mz());
  for (ll kx = -mx + 1; kx < mx; ++kx)
    for (ll ky = -my + 1; ky < my; ++ky)
      for (ll kz = 0; kz < mz; ++kz) {
        LC s = 0;
        for (ll px = -mx + 1; px < mx; ++px)
          for (ll py = -my + 1; py < my; ++py)
            for (ll pz = -mz + 1; pz < mz; ++pz) s += at3(f, px, py, pz) * at3(g, kx - px, ky - py, kz - pz);
        h(static_cast<std::size_t>(kx + mx - 1), static_cast<std::size_t>(ky + my - 1), static_cast<std::size_t>(kz)) =
            narrow(s);
      }
  return h;
}

Field3D brute_cconv3(const Field3D& f, const Field3D& g) {
  Field3D h = Field3D::standard(f.mx(), f.my(), f.mz());
  for (std::size_t i = 0; i < f.nx(); ++i)
    for (std::size_t j = 0; j < f.ny(); ++j)
      for (std::size_t l = 0; l < f.nz(); ++l) {
        LC s = 0;
        for (std::size_t p = 0; p <= i; ++p)
          for (std::size_t q = 0; q <= j; ++q)
            for (std::size_t r = 0; r <= l; ++r) s += widen(f(p, q, r)) * widen(g(i - p, j - q, l - r));
        h(i, j, l) = narrow(s);
      }
  return h;
}

// ----- implicit wrappers

Field2D cconv2(Field2D f, Field2D g) {
  dealias::ComplexConvolution2D c(f.mx(), f.my());
  auto ws = c.make_workspace();
  c.convolve(f, g, ws);
  return f;
}

Field2D conv2(Field2D f, Field2D g) {
  dealias::HermitianConvolution2D c(f.mx(), f.my());
  auto ws = c.make_workspace();
  c.convolve(f, g, ws);
  return f;
}

Field2D tconv2(Field2D f, Field2D g, Field2D h) {
  dealias::TernaryConvolution2D c(f.mx(), f.my());
  auto ws = c.make_workspace();
  c.convolve(f, g, h, ws);
  return f;
}

Field3D cconv3(Field3D f, Field3D g) {
  dealias::ComplexConvolution3D c(f.mx(), f.my(), f.mz());
  auto ws = c.make_workspace();
  c.convolve(f, g, ws);
  return f;
}

Field3D hconv3(Field3D f, Field3D g) {
  dealias::HermitianConvolution3D c(f.mx(), f.my(), f.mz());
  auto ws = c.make_workspace();
  c.convolve(f, g, ws);
  return f;
}

double field_norm(std::span<const Complex> x) {
  long double s = 0;
  for (const auto& z : x) s += std::norm(z);
  return std::sqrt(static_cast<double>(s));
}

// ----- cconv2

TEST(ComplexConvolution2D, Scalar) {
  auto f = Field2D::standard(1, 1), g = Field2D::standard(1, 1);
  f(0, 0) = {1, 2}, g(0, 0) = {3, -1};
  EXPECT_LE(std::abs(cconv2(f, g)(0, 0) - Complex(5, 5)), 1e-15);
}

TEST(ComplexConvolution2D, Separable) {
  Gen gen(200);
  const CVec a = gen.vec(5), b = gen.vec(6), c = gen.vec(5), d = gen.vec(6);
  const Field2D h = cconv2(testing_support::outer(a, b), testing_support::outer(c, d));
  const Field2D ref =
      testing_support::outer(testing_support::brute_cconv(a, c), testing_support::brute_cconv(b, d));
  EXPECT_LE(rel_l2(h.span(), ref.span()), 1e-13);
}

TEST(ComplexConvolution2D, MatchesBruteForce) {
  Gen gen(201);
  for (std::size_t mx = 1; mx <= 8; ++mx)
    for (std::size_t my = 1; my <= 8; my += 3) {
      const auto f = gen.field(Field2D::standard(mx, my)), g = gen.field(Field2D::standard(mx, my));
      EXPECT_LE(rel_l2(cconv2(f, g).span(), brute_cconv2(f, g).span()), 1e-12) << mx << "x" << my;
    }
}

TEST(ComplexConvolution2D, DotProductOfMembers) {
  Gen gen(202);
  const std::size_t mx = 4, my = 6, M = 2, n = mx * my;
  CVec f = gen.vec(M * n), g = gen.vec(M * n);
  Field2D expected = Field2D::standard(mx, my);
  for (std::size_t i = 0; i < M; ++i) {
    Field2D a = Field2D::standard(mx, my), b = Field2D::standard(mx, my);
    std::copy_n(f.begin() + i * n, n, a.data());
    std::copy_n(g.begin() + i * n, n, b.data());
    const Field2D part = brute_cconv2(a, b);
    for (std::size_t k = 0; k < n; ++k) expected.data()[k] += part.data()[k];
  }
  dealias::ComplexConvolution2D c(mx, my, M);
  auto ws = c.make_workspace();
  c.convolve(f, g, ws);
  EXPECT_LE(rel_l2(std::span<const Complex>(f).first(n), expected.span()), 1e-13);
}

TEST(ComplexConvolution2D, Rejects) {
  dealias::ComplexConvolution2D c(4, 4);
  auto ws = c.make_workspace();
  auto f = Field2D::standard(4, 4), g = Field2D::standard(4, 3);
  EXPECT_THROW(c.convolve(f, g, ws), std::invalid_argument);
  auto h = Field2D::hermitian(4, 4);
  EXPECT_THROW(c.convolve(f, h, ws), std::invalid_argument);
}

// ----- conv2

TEST(HermitianConvolution2D, DcOnly) {
  auto f = Field2D::hermitian(3, 4), g = Field2D::hermitian(3, 4);
  f(2, 0) = 2, g(2, 0) = -1.5;
  const Field2D h = conv2(f, g);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      EXPECT_LE(std::abs(h(i, j) - (i == 2 && j == 0 ? Complex(-3) : Complex(0))), 1e-15);
}

TEST(HermitianConvolution2D, XModeTimesYFamily) {
  // both fields live on the kx = 0 row and carry the 1D Hermitian family in y
  const std::size_t mx = 4, my = 8;
  auto f = Field2D::hermitian(mx, my), g = Field2D::hermitian(mx, my);
  const std::size_t o = mx - 1;
  for (std::size_t j = 0; j < my; ++j) {
    const Complex e = std::polar(1.0, static_cast<double>(j));
    f(o, j) = std::sqrt(3.0) * e;
    g(o, j) = std::sqrt(5.0) * e;
  }
  const Field2D h = conv2(f, g);
  CVec row(my), exact(my);
  for (std::size_t j = 0; j < my; ++j) {
    row[j] = h(o, j);
    exact[j] = std::sqrt(15.0) * static_cast<double>(2 * my - 1 - j) * std::polar(1.0, static_cast<double>(j));
  }
  EXPECT_LE(rel_l2(row, exact), 1e-13);
  double off = 0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (i != o)
      for (std::size_t j = 0; j < my; ++j) off = std::max(off, std::abs(h(i, j)));
  EXPECT_LE(off, 1e-12);
}

TEST(HermitianConvolution2D, MatchesBruteForce) {
  Gen gen(210);
  for (std::size_t mx = 2; mx <= 8; mx += 2)
    for (std::size_t my = 2; my <= 8; my += 2) {
      const auto f = gen.field(Field2D::hermitian(mx, my)), g = gen.field(Field2D::hermitian(mx, my));
      EXPECT_LE(rel_l2(conv2(f, g).span(), brute_conv2(f, g).span()), 1e-12) << mx << "x" << my;
    }
}

TEST(HermitianConvolution2D, OutputIsSymmetric) {
  Gen gen(211);
  for (std::size_t m : {2u, 4u, 8u, 16u}) {
    const auto f = gen.field(Field2D::hermitian(m, m)), g = gen.field(Field2D::hermitian(m, m));
    const Field2D h = conv2(f, g);
    EXPECT_LE(dealias::symmetry_residual(h), 1e-13 * field_norm(h.span())) << m;
  }
}

TEST(HermitianConvolution2D, Rejects) {
  EXPECT_THROW(dealias::HermitianConvolution2D(4, 3), std::invalid_argument);
  EXPECT_THROW(dealias::HermitianConvolution2D(1, 4), std::invalid_argument);
}

// ----- cconv3

TEST(ComplexConvolution3D, Scalar) {
  auto f = Field3D::standard(1, 1, 1), g = Field3D::standard(1, 1, 1);
  f(0, 0, 0) = 2, g(0, 0, 0) = {0, 3};
  EXPECT_LE(std::abs(cconv3(f, g)(0, 0, 0) - Complex(0, 6)), 1e-15);
}

TEST(ComplexConvolution3D, Separable) {
  Gen gen(220);
  const CVec a = gen.vec(3), b = gen.vec(4), c = gen.vec(5), d = gen.vec(3), e = gen.vec(4), g = gen.vec(5);
  auto F = Field3D::standard(3, 4, 5), G = Field3D::standard(3, 4, 5);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t l = 0; l < 5; ++l) F(i, j, l) = a[i] * b[j] * c[l], G(i, j, l) = d[i] * e[j] * g[l];
  const CVec x = testing_support::brute_cconv(a, d), y = testing_support::brute_cconv(b, e),
             z = testing_support::brute_cconv(c, g);
  auto ref = Field3D::standard(3, 4, 5);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t l = 0; l < 5; ++l) ref(i, j, l) = x[i] * y[j] * z[l];
  EXPECT_LE(rel_l2(cconv3(F, G).span(), ref.span()), 1e-13);
}

TEST(ComplexConvolution3D, MatchesBruteForce) {
  Gen gen(221);
  for (auto [mx, my, mz] : {std::tuple{1u, 1u, 1u}, {2u, 3u, 4u}, {4u, 4u, 4u}, {5u, 2u, 7u}, {8u, 8u, 8u}}) {
    const auto f = gen.field(Field3D::standard(mx, my, mz)), g = gen.field(Field3D::standard(mx, my, mz));
    EXPECT_LE(rel_l2(cconv3(f, g).span(), brute_cconv3(f, g).span()), 1e-12);
  }
}

// ----- hconv3

TEST(HermitianConvolution3D, DcOnly) {
  auto f = Field3D::hermitian(2, 2, 2), g = Field3D::hermitian(2, 2, 2);
  f(1, 1, 0) = 3, g(1, 1, 0) = 0.5;
  const Field3D h = hconv3(f, g);
  for (std::size_t k = 0; k < h.size(); ++k)
    EXPECT_LE(std::abs(h.data()[k] - (&h(1, 1, 0) == h.data() + k ? Complex(1.5) : Complex(0))), 1e-15);
}

TEST(HermitianConvolution3D, MatchesBruteForce) {
  Gen gen(230);
  for (auto [mx, my, mz] : {std::tuple{2u, 2u, 2u}, {3u, 3u, 2u}, {2u, 4u, 4u}, {4u, 2u, 6u}}) {
    const auto f = gen.field(Field3D::hermitian(mx, my, mz)), g = gen.field(Field3D::hermitian(mx, my, mz));
    EXPECT_LE(rel_l2(hconv3(f, g).span(), brute_hconv3(f, g).span()), 1e-12) << mx << my << mz;
  }
}

TEST(HermitianConvolution3D, SeparableCentered) {
  // rank one in (x, y, z) with the z factor on the kz = 0 plane only
  const std::size_t mx = 3, my = 2, mz = 4;
  Gen gen(231);
  CVec a = gen.vec(2 * mx - 1), b = gen.vec(2 * my - 1);
  // conjugate-symmetric x and y profiles so the kz = 0 plane is self-conjugate
  for (std::size_t i = 0; i < mx; ++i) a[2 * mx - 2 - i] = std::conj(a[i]);
  for (std::size_t j = 0; j < my; ++j) b[2 * my - 2 - j] = std::conj(b[j]);
  a[mx - 1] = a[mx - 1].real(), b[my - 1] = b[my - 1].real();
  auto F = Field3D::hermitian(mx, my, mz);
  for (std::size_t i = 0; i < 2 * mx - 1; ++i)
    for (std::size_t j = 0; j < 2 * my - 1; ++j) F(i, j, 0) = a[i] * b[j];
  const Field3D h = hconv3(F, F);
  // x and y centered full convolutions, truncated to the stored box
  auto full = [](const CVec& v, std::size_t m) {
    CVec out(2 * m - 1);
    for (ll k = -static_cast<ll>(m) + 1; k < static_cast<ll>(m); ++k) {
      LC s = 0;
      for (ll p = -static_cast<ll>(m) + 1; p < static_cast<ll>(m); ++p) {
        const ll q = k - p;
        if (q <= -static_cast<ll>(m) || q >= static_cast<ll>(m)) continue;
        s += widen(v[p + m - 1]) * widen(v[q + m - 1]);
      }
      out[k + m - 1] = narrow(s);
    }
    return out;
  };
  const CVec x = full(a, mx), y = full(b, my);
  auto ref = Field3D::hermitian(mx, my, mz);
  for (std::size_t i = 0; i < 2 * mx - 1; ++i)
    for (std::size_t j = 0; j < 2 * my - 1; ++j) ref(i, j, 0) = x[i] * y[j];
  EXPECT_LE(rel_l2(h.span(), ref.span()), 1e-13);
}

TEST(HermitianConvolution3D, OutputIsSymmetric) {
  Gen gen(232);
  for (std::size_t m : {2u, 4u, 6u}) {
    const auto f = gen.field(Field3D::hermitian(m, m, m)), g = gen.field(Field3D::hermitian(m, m, m));
    const Field3D h = hconv3(f, g);
    EXPECT_LE(dealias::symmetry_residual(h), 1e-13 * field_norm(h.span())) << m;
  }
}

TEST(HermitianConvolution3D, LargerAgainstLibraryOracle) {
  Gen gen(233);
  const auto f = gen.field(Field3D::hermitian(6, 6, 8)), g = gen.field(Field3D::hermitian(6, 6, 8));
  dealias::DirectOptions opt{std::size_t{1} << 26};
  EXPECT_LE(rel_l2(hconv3(f, g).span(), dealias::direct_hconv3(f, g, opt).span()), 1e-12);
}

// ----- tconv2

TEST(TernaryConvolution2D, DcOnly) {
  auto f = Field2D::ternary(2, 4), g = Field2D::ternary(2, 4), h = Field2D::ternary(2, 4);
  f(2, 0) = 2, g(2, 0) = 3, h(2, 0) = -1;
  const Field2D out = tconv2(f, g, h);
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      EXPECT_LE(std::abs(out(i, j) - (i == 2 && j == 0 ? Complex(-6) : Complex(0))), 1e-14);
}

TEST(TernaryConvolution2D, SingleRowReducesTo1D) {
  Gen gen(240);
  const std::size_t my = 8;
  auto f = Field2D::ternary(1, my), g = Field2D::ternary(1, my), h = Field2D::ternary(1, my);
  CVec a = gen.hermitian(my), b = gen.hermitian(my), c = gen.hermitian(my);
  for (std::size_t j = 0; j < my; ++j) f(1, j) = a[j], g(1, j) = b[j], h(1, j) = c[j];
  const Field2D out = tconv2(f, g, h);
  CVec row(my);
  for (std::size_t j = 0; j < my; ++j) row[j] = out(1, j);
  EXPECT_LE(rel_l2(row, testing_support::brute_tconv(a, b, c)), 1e-13);
}

TEST(TernaryConvolution2D, MatchesBruteForce) {
  Gen gen(241);
  for (auto [mx, my] : {std::pair{1u, 1u}, {2u, 4u}, {3u, 2u}, {4u, 4u}}) {
    const auto f = gen.field(Field2D::ternary(mx, my)), g = gen.field(Field2D::ternary(mx, my)),
               h = gen.field(Field2D::ternary(mx, my));
    EXPECT_LE(rel_l2(tconv2(f, g, h).span(), brute_tconv2(f, g, h).span()), 1e-11) << mx << "x" << my;
  }
}

TEST(TernaryConvolution2D, Rejects) { EXPECT_THROW(dealias::TernaryConvolution2D(2, 6), std::invalid_argument); }

// ----- workspace reuse

TEST(WorkspaceProperty, ReuseMatchesFresh) {
  Gen gen(250);
  const std::size_t mx = 6, my = 8;
  const auto f1 = gen.field(Field2D::hermitian(mx, my)), g1 = gen.field(Field2D::hermitian(mx, my));
  const auto f2 = gen.field(Field2D::hermitian(mx, my)), g2 = gen.field(Field2D::hermitian(mx, my));
  dealias::HermitianConvolution2D c(mx, my);
  auto ws = c.make_workspace();
  Field2D a = f1, b = g1, x = f2, y = g2;
  c.convolve(a, b, ws);
  c.convolve(x, y, ws);
  EXPECT_LE(rel_l2(a.span(), conv2(f1, g1).span()), 1e-15);
  EXPECT_LE(rel_l2(x.span(), conv2(f2, g2).span()), 1e-15);

  dealias::ComplexConvolution3D c3(3, 4, 5);
  auto ws3 = c3.make_workspace();
  const auto p = gen.field(Field3D::standard(3, 4, 5)), q = gen.field(Field3D::standard(3, 4, 5));
  Field3D r = p, s = q, t = p, u = q;
  c3.convolve(r, s, ws3);
  c3.convolve(t, u, ws3);
  EXPECT_LE(rel_l2(r.span(), t.span()), 1e-15);
}

// ----- symmetry enforcement

TEST(EnforceSymmetry, Examples) {
  Gen gen(260);
  auto f = Field2D::hermitian(4, 3);
  f(3, 0) = {1, 1};
  dealias::enforce_symmetry(f);
  EXPECT_EQ(f(3, 0), Complex(1, 0));

  auto r = gen.field(Field2D::hermitian(5, 4));
  EXPECT_EQ(dealias::symmetry_residual(r), 0.0);
  const Field2D before = r;
  dealias::enforce_symmetry(r);
  EXPECT_EQ(rel_l2(r.span(), before.span()), 0.0);

  auto r3 = gen.field(Field3D::hermitian(3, 4, 2));
  EXPECT_EQ(dealias::symmetry_residual(r3), 0.0);

  auto t = Field2D::ternary(3, 4);
  gen.fill(t.span());
  dealias::enforce_symmetry(t);
  EXPECT_EQ(dealias::symmetry_residual(t), 0.0);
  for (std::size_t j = 0; j < t.cols(); ++j) EXPECT_EQ(t(0, j), Complex(0));
  for (std::size_t i = 0; i < t.rows(); ++i) EXPECT_EQ(t(i, 4), Complex(0));
}

TEST(EnforceSymmetry, ResidualDetectsAsymmetry) {
  auto f = Field2D::hermitian(3, 2);
  f(0, 0) = 1;
  EXPECT_EQ(dealias::symmetry_residual(f), 1.0);
  auto g = Field3D::hermitian(2, 2, 2);
  g(1, 1, 0) = {0, 2};
  EXPECT_EQ(dealias::symmetry_residual(g), 4.0);  // 2 |Im U_0|
}

// ----- advection

TEST(Advection2D, SingleModeVanishes) {
  auto w = Field2D::hermitian(4, 4);
  w(3 + 1, 2) = {0.7, -0.2};
  const Field2D a = dealias::advection2d(w);
  EXPECT_LE(testing_support::max_abs(a.span()), 1e-15);
}

TEST(Advection2D, TwoModes) {
  const std::size_t mx = 4, my = 4;
  auto w = Field2D::hermitian(mx, my);
  w(3 + 1, 1) = {1.0, 0.5};   // k = (1, 1)
  w(3 - 1, 2) = {-0.25, 2.0};  // k = (-1, 2)
  const Field2D a = dealias::advection2d(w);
  const Field2D ref = brute_advection(w);
  EXPECT_LE(rel_l2(a.span(), ref.span()), 1e-12);
  EXPECT_GT(testing_support::max_abs(ref.span()), 0.1);
  // the beat p + q = (0, 3): (p_x k_y - p_y k_x)/|q|^2 w_p w_q, both orderings
  const Complex wp{1.0, 0.5}, wq{-0.25, 2.0};
  const Complex hand = (1.0 * 3 - 1.0 * 0) / 5.0 * wp * wq + (-1.0 * 3 - 2.0 * 0) / 2.0 * wq * wp;
  EXPECT_LE(std::abs(a(3, 3) - hand), 1e-13);
}

TEST(Advection2D, RandomMatchesFormula) {
  Gen gen(270);
  for (std::size_t m : {2u, 4u, 6u}) {
    const auto w = gen.field(Field2D::hermitian(m, m));
    const Field2D a = dealias::advection2d(w);
    EXPECT_LE(rel_l2(a.span(), brute_advection(w).span()), 1e-12) << m;
    EXPECT_LE(rel_l2(a.span(), dealias::direct_advection2d(w).span()), 1e-12) << m;
  }
}

TEST(Advection2D, EnergyTransferIsReal) {
  Gen gen(271);
  const auto w = gen.field(Field2D::hermitian(8, 8));
  const Field2D a = dealias::advection2d(w);
  // sum over the full plane: ky > 0 twice (plus conjugates), ky = 0 once
  LC s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const LC term = std::conj(widen(w(i, j))) * widen(a(i, j));
      s += j == 0 ? term : term + std::conj(term);
    }
  EXPECT_LE(std::abs(static_cast<double>(s.imag())), 1e-12 * std::abs(static_cast<double>(std::abs(s))) + 1e-12);
}

TEST(Advection2D, RejectsAsymmetric) {
  auto w = Field2D::hermitian(4, 4);
  w(0, 0) = 1;
  EXPECT_THROW(dealias::advection2d(w), std::invalid_argument);
}

// ----- memory

TEST(MemoryFormula, PublishedValues) {
  EXPECT_EQ(dealias::implicit_words(dealias::ConvKind::cconv2, {1024, 1024}), 4196352u);
  EXPECT_EQ(dealias::explicit_words(dealias::ConvKind::cconv2, {1024, 1024}), 8388608u);
  EXPECT_EQ(dealias::implicit_words(dealias::ConvKind::conv2, {4, 4}), 102u);
  EXPECT_EQ(dealias::implicit_words(dealias::ConvKind::cconv3, {1, 1, 1}), 8u);
  EXPECT_EQ(dealias::explicit_words(dealias::ConvKind::cconv3, {1, 1, 1}), 16u);
  const std::size_t m = 4096;
  EXPECT_EQ(dealias::implicit_words(dealias::ConvKind::tconv2, {m, m}), 12 * m * m + 12 * m + 3 * m + 3);
  EXPECT_EQ(dealias::explicit_words(dealias::ConvKind::tconv2, {m, m}), 24 * m * m + 12 * m);
}

TEST(MemoryProperty, AllocationsEqualFormulas) {
  using K = dealias::ConvKind;
  const struct {
    K kind;
    std::vector<Dims> dims;
  } cases[] = {
      {K::cconv2, {{1, 1}, {2, 3}, {4, 4}, {8, 16}, {32, 5}, {64, 64}}},
      {K::conv2, {{2, 2}, {3, 4}, {4, 4}, {8, 6}, {16, 16}, {5, 32}}},
      {K::cconv3, {{1, 1, 1}, {2, 3, 4}, {4, 4, 4}, {8, 2, 5}, {16, 16, 16}}},
      {K::tconv2, {{1, 1}, {2, 4}, {3, 8}, {4, 4}, {16, 32}}},
  };
  for (const auto& c : cases)
    for (const auto& d : c.dims) {
      const auto r = dealias::memory_report(c.kind, d);
      EXPECT_EQ(r.implicit_allocated, r.implicit_formula) << dealias::to_string(c.kind) << " " << d.mx << "x" << d.my;
      EXPECT_EQ(r.implicit_formula, dealias::implicit_words(c.kind, d));
    }
  const auto one = dealias::memory_report(K::cconv2, {4, 4});
  EXPECT_EQ(one.implicit_formula, 4u * 16 + 2 * 4);
  EXPECT_EQ(one.explicit_allocated, one.explicit_formula);
}

// The itemized count 6mx(2my-1)mz + 2(my+1)mz + 2(mz/2+1) expands to
// 12mxmymz - 6mxmz + 2mymz + 3mz + 2, which is 2mz above the closed form
// implicit_words() reports for hconv3.
TEST(MemoryProperty, Hconv3ItemizedCount) {
  for (Dims d : {Dims{2, 2, 2}, {3, 3, 2}, {4, 2, 6}, {2, 5, 4}, {8, 8, 8}}) {
    const auto r = dealias::memory_report(dealias::ConvKind::hconv3, d);
    const std::size_t itemized = 6 * d.mx * (2 * d.my - 1) * d.mz + 2 * (d.my + 1) * d.mz + 2 * (d.mz / 2 + 1);
    EXPECT_EQ(r.implicit_allocated, itemized);
    EXPECT_EQ(r.implicit_formula + 2 * d.mz, itemized);
  }
}

TEST(MemoryProperty, WorkspacesAreReused) {
  // the 2D workspace holds only the x streams plus one row of 1D work
  dealias::HermitianConvolution2D c(8, 8);
  const auto ws = c.make_workspace();
  EXPECT_EQ(ws.words(), 2 * (8 + 1) * 8 + 2 * (8 / 2 + 1));
}

}  // namespace
