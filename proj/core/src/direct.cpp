#include <complex>
#include <stdexcept>
#include <string>

#include "dealias/oracles.hpp"

namespace dealias {
namespace {

using LComplex = std::complex<long double>;

LComplex widen(Complex z) { return {z.real(), z.imag()}; }
Complex narrow(LComplex z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

void check_cap(std::size_t ops, const DirectOptions& opt, const char* who) {
  if (ops > opt.max_operations)
    throw OracleCapExceeded(std::string(who) + ": " + std::to_string(ops) + " multiply-adds exceeds the cap of " +
                            std::to_string(opt.max_operations));
}

long long sl(std::size_t n) { return static_cast<long long>(n); }

// Value of a Hermitian half-spectrum vector at any integer wavenumber.
LComplex hermitian_1d(std::span<const Complex> a, long long k) {
  const long long m = sl(a.size());
  if (k <= -m || k >= m) return 0.0L;
  return k >= 0 ? widen(a[static_cast<std::size_t>(k)]) : std::conj(widen(a[static_cast<std::size_t>(-k)]));
}

// Centered Hermitian 2D field (2m_x-1) x m_y at (kx, ky), any integers.
LComplex hermitian_2d(const Field2D& a, long long kx, long long ky) {
  const long long mx = sl(a.mx()), my = sl(a.my());
  if (kx <= -mx || kx >= mx || ky <= -my || ky >= my) return 0.0L;
  if (ky >= 0) return widen(a(static_cast<std::size_t>(kx + mx - 1), static_cast<std::size_t>(ky)));
  return std::conj(widen(a(static_cast<std::size_t>(-kx + mx - 1), static_cast<std::size_t>(-ky))));
}

// Ternary 2D field 2m_x x (m_y+1), row i at kx = i - m_x, |kx|, |ky| <= m-1.
LComplex ternary_2d(const Field2D& a, long long kx, long long ky) {
  const long long mx = sl(a.mx()), my = sl(a.my());
  if (kx <= -mx || kx >= mx || ky <= -my || ky >= my) return 0.0L;
  if (ky >= 0) return widen(a(static_cast<std::size_t>(kx + mx), static_cast<std::size_t>(ky)));
  return std::conj(widen(a(static_cast<std::size_t>(-kx + mx), static_cast<std::size_t>(-ky))));
}

LComplex hermitian_3d(const Field3D& a, long long kx, long long ky, long long kz) {
  const long long mx = sl(a.mx()), my = sl(a.my()), mz = sl(a.mz());
  if (kx <= -mx || kx >= mx || ky <= -my || ky >= my || kz <= -mz || kz >= mz) return 0.0L;
  if (kz >= 0)
    return widen(a(static_cast<std::size_t>(kx + mx - 1), static_cast<std::size_t>(ky + my - 1),
                   static_cast<std::size_t>(kz)));
  return std::conj(widen(a(static_cast<std::size_t>(-kx + mx - 1), static_cast<std::size_t>(-ky + my - 1),
                           static_cast<std::size_t>(-kz))));
}

void require_same(bool ok, const char* who) {
  if (!ok) throw std::invalid_argument(std::string(who) + ": operand shapes differ");
}

}  // namespace

std::vector<Complex> direct_cconv(std::span<const Complex> f, std::span<const Complex> g, const DirectOptions& opt) {
  require_same(f.size() == g.size(), "direct_cconv");
  const std::size_t m = f.size();
  check_cap(m * (m + 1) / 2, opt, "direct_cconv");
  std::vector<Complex> h(m);
  for (std::size_t k = 0; k < m; ++k) {
    LComplex s = 0.0L;
    for (std::size_t p = 0; p <= k; ++p) s += widen(f[p]) * widen(g[k - p]);
    h[k] = narrow(s);
  }
  return h;
}

std::vector<Complex> direct_hconv(std::span<const Complex> f, std::span<const Complex> g, const DirectOptions& opt) {
  require_same(f.size() == g.size(), "direct_hconv");
  const long long m = sl(f.size());
  check_cap(f.size() * (2 * f.size()), opt, "direct_hconv");
  std::vector<Complex> h(f.size());
  for (long long k = 0; k < m; ++k) {
    LComplex s = 0.0L;
    for (long long p = k - m + 1; p <= m - 1; ++p) s += hermitian_1d(f, p) * hermitian_1d(g, k - p);
    h[static_cast<std::size_t>(k)] = narrow(s);
  }
  return h;
}

std::vector<Complex> direct_tconv(std::span<const Complex> f, std::span<const Complex> g, std::span<const Complex> h,
                                  const DirectOptions& opt) {
  require_same(f.size() == g.size() && g.size() == h.size(), "direct_tconv");
  const long long m = sl(f.size());
  const std::size_t box = 2 * f.size() - 1;
  check_cap(f.size() * box * box, opt, "direct_tconv");
  std::vector<Complex> out(f.size());
  for (long long k = 0; k < m; ++k) {
    LComplex s = 0.0L;
    for (long long p = -m + 1; p <= m - 1; ++p) {
      const LComplex fp = hermitian_1d(f, p);
      for (long long q = -m + 1; q <= m - 1; ++q) {
        const long long r = k - p - q;
        if (r <= -m || r >= m) continue;
        s += fp * hermitian_1d(g, q) * hermitian_1d(h, r);
      }
    }
    out[static_cast<std::size_t>(k)] = narrow(s);
  }
  return out;
}

Field2D direct_cconv2(const Field2D& f, const Field2D& g, const DirectOptions& opt) {
  require_same(f.kind() == FieldKind::standard && g.kind() == FieldKind::standard && f.mx() == g.mx() &&
                   f.my() == g.my(),
               "direct_cconv2");
  const std::size_t mx = f.mx(), my = f.my();
  check_cap((mx * (mx + 1) / 2) * (my * (my + 1) / 2), opt, "direct_cconv2");
  Field2D h = Field2D::standard(mx, my);
  for (std::size_t kx = 0; kx < mx; ++kx)
    for (std::size_t ky = 0; ky < my; ++ky) {
      LComplex s = 0.0L;
      for (std::size_t px = 0; px <= kx; ++px)
        for (std::size_t py = 0; py <= ky; ++py) s += widen(f(px, py)) * widen(g(kx - px, ky - py));
      h(kx, ky) = narrow(s);
    }
  return h;
}

Field2D direct_conv2(const Field2D& f, const Field2D& g, const DirectOptions& opt) {
  require_same(f.kind() == FieldKind::hermitian && g.kind() == FieldKind::hermitian && f.mx() == g.mx() &&
                   f.my() == g.my(),
               "direct_conv2");
  const long long mx = sl(f.mx()), my = sl(f.my());
  check_cap(f.size() * f.rows() * (2 * f.my() - 1), opt, "direct_conv2");
  Field2D h = Field2D::hermitian(f.mx(), f.my());
  for (long long kx = -mx + 1; kx < mx; ++kx)
    for (long long ky = 0; ky < my; ++ky) {
      LComplex s = 0.0L;
      for (long long px = -mx + 1; px < mx; ++px)
        for (long long py = -my + 1; py < my; ++py) s += hermitian_2d(f, px, py) * hermitian_2d(g, kx - px, ky - py);
      h(static_cast<std::size_t>(kx + mx - 1), static_cast<std::size_t>(ky)) = narrow(s);
    }
  return h;
}

Field3D direct_cconv3(const Field3D& f, const Field3D& g, const DirectOptions& opt) {
  require_same(f.kind() == FieldKind::standard && g.kind() == FieldKind::standard && f.mx() == g.mx() &&
                   f.my() == g.my() && f.mz() == g.mz(),
               "direct_cconv3");
  const std::size_t mx = f.mx(), my = f.my(), mz = f.mz();
  check_cap((mx * (mx + 1) / 2) * (my * (my + 1) / 2) * (mz * (mz + 1) / 2), opt, "direct_cconv3");
  Field3D h = Field3D::standard(mx, my, mz);
  for (std::size_t kx = 0; kx < mx; ++kx)
    for (std::size_t ky = 0; ky < my; ++ky)
      for (std::size_t kz = 0; kz < mz; ++kz) {
        LComplex s = 0.0L;
        for (std::size_t px = 0; px <= kx; ++px)
          for (std::size_t py = 0; py <= ky; ++py)
            for (std::size_t pz = 0; pz <= kz; ++pz)
              s += widen(f(px, py, pz)) * widen(g(kx - px, ky - py, kz - pz));
        h(kx, ky, kz) = narrow(s);
      }
  return h;
}

Field3D direct_hconv3(const Field3D& f, const Field3D& g, const DirectOptions& opt) {
  require_same(f.kind() == FieldKind::hermitian && g.kind() == FieldKind::hermitian && f.mx() == g.mx() &&
                   f.my() == g.my() && f.mz() == g.mz(),
               "direct_hconv3");
  const long long mx = sl(f.mx()), my = sl(f.my()), mz = sl(f.mz());
  check_cap(f.size() * f.nx() * f.ny() * (2 * f.mz() - 1), opt, "direct_hconv3");
  Field3D h = Field3D::hermitian(f.mx(), f.my(), f.mz());
  for (long long kx = -mx + 1; kx < mx; ++kx)
    for (long long ky = -my + 1; ky < my; ++ky)
      for (long long kz = 0; kz < mz; ++kz) {
        LComplex s = 0.0L;
        for (long long px = -mx + 1; px < mx; ++px)
          for (long long py = -my + 1; py < my; ++py)
            for (long long pz = -mz + 1; pz < mz; ++pz)
              s += hermitian_3d(f, px, py, pz) * hermitian_3d(g, kx - px, ky - py, kz - pz);
        h(static_cast<std::size_t>(kx + mx - 1), static_cast<std::size_t>(ky + my - 1), static_cast<std::size_t>(kz)) =
            narrow(s);
      }
  return h;
}

Field2D direct_tconv2(const Field2D& f, const Field2D& g, const Field2D& h, const DirectOptions& opt) {
  require_same(f.kind() == FieldKind::ternary && g.kind() == FieldKind::ternary && h.kind() == FieldKind::ternary &&
                   f.mx() == g.mx() && g.mx() == h.mx() && f.my() == g.my() && g.my() == h.my(),
               "direct_tconv2");
  const long long mx = sl(f.mx()), my = sl(f.my());
  const std::size_t box = (2 * f.mx() - 1) * (2 * f.my() - 1);
  check_cap((2 * f.mx() - 1) * f.my() * box * box, opt, "direct_tconv2");
  Field2D out = Field2D::ternary(f.mx(), f.my());
  for (long long kx = -mx + 1; kx < mx; ++kx)
    for (long long ky = 0; ky < my; ++ky) {
      LComplex s = 0.0L;
      for (long long px = -mx + 1; px < mx; ++px)
        for (long long py = -my + 1; py < my; ++py) {
          const LComplex fp = ternary_2d(f, px, py);
          for (long long qx = -mx + 1; qx < mx; ++qx) {
            const long long rx = kx - px - qx;
            if (rx <= -mx || rx >= mx) continue;
            for (long long qy = -my + 1; qy < my; ++qy) {
              const long long ry = ky - py - qy;
              if (ry <= -my || ry >= my) continue;
              s += fp * ternary_2d(g, qx, qy) * ternary_2d(h, rx, ry);
            }
          }
        }
      out(static_cast<std::size_t>(kx + mx), static_cast<std::size_t>(ky)) = narrow(s);
    }
  return out;
}

Field2D direct_advection2d(const Field2D& omega, const DirectOptions& opt) {
  require_same(omega.kind() == FieldKind::hermitian, "direct_advection2d");
  const long long mx = sl(omega.mx()), my = sl(omega.my());
  check_cap(omega.size() * omega.rows() * (2 * omega.my() - 1), opt, "direct_advection2d");
  Field2D out = Field2D::hermitian(omega.mx(), omega.my());
  for (long long kx = -mx + 1; kx < mx; ++kx)
    for (long long ky = 0; ky < my; ++ky) {
      LComplex s = 0.0L;
      for (long long px = -mx + 1; px < mx; ++px)
        for (long long py = -my + 1; py < my; ++py) {
          const long long qx = kx - px, qy = ky - py;
          const long long q2 = qx * qx + qy * qy;
          if (q2 == 0) continue;
          const long double weight =
              static_cast<long double>(px * ky - py * kx) / static_cast<long double>(q2);
          s += weight * hermitian_2d(omega, px, py) * hermitian_2d(omega, qx, qy);
        }
      out(static_cast<std::size_t>(kx + mx - 1), static_cast<std::size_t>(ky)) = narrow(s);
    }
  return out;
}

}  // namespace dealias
