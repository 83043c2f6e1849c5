#include <algorithm>
#include <stdexcept>
#include <string>

#include "dealias/oracles.hpp"

namespace dealias {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

double* real(Complex* p) { return reinterpret_cast<double*>(p); }

std::size_t wrap(long long k, std::size_t n) {
  const long long nn = static_cast<long long>(n);
  return static_cast<std::size_t>(((k % nn) + nn) % nn);
}

// ----- 1D shapes

struct Shape1D {
  std::size_t n, len;  // transform size, words per array
};

Shape1D shape1d(ConvKind kind, std::size_t m) {
  require(m > 0, "ExplicitConvolution1D: m must be positive");
  switch (kind) {
    case ConvKind::cconv: return {2 * m, 2 * m};
    case ConvKind::hconv:
      require(m % 2 == 0, "ExplicitConvolution1D: hconv requires even m");
      return {3 * m, 3 * m / 2 + 1};
    case ConvKind::tconv: return {4 * m, 2 * m + 1};
    default: break;
  }
  throw std::invalid_argument("ExplicitConvolution1D: kind must be cconv, hconv or tconv");
}

FftGeometry geometry1d(ConvKind kind, std::size_t m, Direction dir) {
  const Shape1D s = shape1d(kind, m);
  if (kind == ConvKind::cconv) return FftGeometry::complex(s.n, dir, Placement::in_place);
  return dir == Direction::backward ? FftGeometry::crfft(s.n, Placement::in_place)
                                    : FftGeometry::rcfft(s.n, Placement::in_place);
}

// ----- 2D shapes

struct Shape2D {
  std::size_t nx, ny, cols, arrays;
};

Shape2D shape2d(ConvKind kind, std::size_t mx, std::size_t my) {
  require(mx > 0 && my > 0, "ExplicitConvolution2D: dimensions must be positive");
  switch (kind) {
    case ConvKind::cconv2: return {2 * mx, 2 * my, 2 * my, 2};
    case ConvKind::conv2:
      require(my % 2 == 0, "ExplicitConvolution2D: conv2 requires even m_y");
      return {3 * mx - 2, 3 * my - 2, 3 * my / 2, 2};
    case ConvKind::tconv2: return {4 * mx, 4 * my, 2 * my + 1, 3};
    default: break;
  }
  throw std::invalid_argument("ExplicitConvolution2D: kind must be cconv2, conv2 or tconv2");
}

FftGeometry x2d(ConvKind kind, std::size_t mx, std::size_t my, Pruning pruning, Direction dir) {
  const Shape2D s = shape2d(kind, mx, my);
  const std::size_t count = pruning == Pruning::pruned ? my : s.cols;
  return FftGeometry::complex(s.nx, dir, Placement::in_place, s.cols, count, 1);
}

FftGeometry y2d(ConvKind kind, std::size_t mx, std::size_t my, Direction dir) {
  const Shape2D s = shape2d(kind, mx, my);
  if (kind == ConvKind::cconv2) return FftGeometry::complex(s.ny, dir, Placement::in_place, 1, s.nx, s.cols);
  return dir == Direction::backward ? FftGeometry::crfft(s.ny, Placement::in_place, s.nx, s.cols)
                                    : FftGeometry::rcfft(s.ny, Placement::in_place, s.nx, s.cols);
}

Pruning check_pruning(ConvKind kind, Pruning p) {
  require(p == Pruning::none || kind == ConvKind::cconv2 || kind == ConvKind::cconv3,
          "pruned explicit convolution is defined for cconv2 and cconv3 only");
  return p;
}

// ----- 3D shapes

struct Shape3D {
  std::size_t nx, ny, nz, cols;
};

Shape3D shape3d(ConvKind kind, std::size_t mx, std::size_t my, std::size_t mz) {
  require(mx > 0 && my > 0 && mz > 0, "ExplicitConvolution3D: dimensions must be positive");
  switch (kind) {
    case ConvKind::cconv3: return {2 * mx, 2 * my, 2 * mz, 2 * mz};
    case ConvKind::hconv3:
      require(mz % 2 == 0, "ExplicitConvolution3D: hconv3 requires even m_z");
      return {3 * mx, 3 * my, 3 * mz - 2, 3 * mz / 2};
    default: break;
  }
  throw std::invalid_argument("ExplicitConvolution3D: kind must be cconv3 or hconv3");
}

FftGeometry x3d(const Shape3D& s, Direction dir) {
  return FftGeometry::complex(s.nx, dir, Placement::in_place, s.ny * s.cols, s.ny * s.cols, 1);
}

// One x slab.
FftGeometry y3d(const Shape3D& s, Direction dir) {
  return FftGeometry::complex(s.ny, dir, Placement::in_place, s.cols, s.cols, 1);
}

FftGeometry z3d(ConvKind kind, const Shape3D& s, std::size_t my, Pruning pruning, Direction dir) {
  if (kind == ConvKind::cconv3) {
    // Pruned: the first m_y lines of one x slab; otherwise every line at once.
    const std::size_t count = pruning == Pruning::pruned ? my : s.nx * s.ny;
    return FftGeometry::complex(s.nz, dir, Placement::in_place, 1, count, s.cols);
  }
  return dir == Direction::backward ? FftGeometry::crfft(s.nz, Placement::in_place, s.nx * s.ny, s.cols)
                                    : FftGeometry::rcfft(s.nz, Placement::in_place, s.nx * s.ny, s.cols);
}

}  // namespace

// --------------------------------------------------------------------------
// 1D

ExplicitConvolution1D::ExplicitConvolution1D(ConvKind kind, std::size_t m, Backend backend)
    : kind_(kind),
      m_(m),
      n_(shape1d(kind, m).n),
      len_(shape1d(kind, m).len),
      a_(len_),
      b_(len_),
      c_(kind == ConvKind::tconv ? len_ : 0),
      backward_(geometry1d(kind, m, Direction::backward), backend),
      forward_(geometry1d(kind, m, Direction::forward), backend) {}

std::size_t ExplicitConvolution1D::words() const noexcept { return a_.size() + b_.size() + c_.size(); }

void ExplicitConvolution1D::convolve(std::span<Complex> f, std::span<const Complex> g, std::span<const Complex> h) {
  require(f.size() >= m_ && g.size() >= m_, "ExplicitConvolution1D: inputs shorter than m");
  const bool ternary = kind_ == ConvKind::tconv;
  require(!ternary || h.size() >= m_, "ExplicitConvolution1D: tconv needs a third input");

  auto load = [&](ComplexBuffer& dst, std::span<const Complex> src) {
    std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(m_), dst.begin());
    std::fill(dst.begin() + static_cast<std::ptrdiff_t>(m_), dst.end(), Complex{});
  };
  load(a_, f);
  load(b_, g);
  backward_.execute(a_.data(), a_.data());
  backward_.execute(b_.data(), b_.data());
  if (kind_ == ConvKind::cconv) {
    for (std::size_t k = 0; k < n_; ++k) a_[k] *= b_[k];
  } else {
    double* a = real(a_.data());
    const double* b = real(b_.data());
    if (ternary) {
      load(c_, h);
      backward_.execute(c_.data(), c_.data());
      const double* c = real(c_.data());
      for (std::size_t j = 0; j < n_; ++j) a[j] *= b[j] * c[j];
    } else {
      for (std::size_t j = 0; j < n_; ++j) a[j] *= b[j];
    }
  }
  forward_.execute(a_.data(), a_.data());
  const double ninv = 1.0 / static_cast<double>(n_);
  for (std::size_t k = 0; k < m_; ++k) f[k] = a_[k] * ninv;
}

std::vector<Complex> explicit_cconv(std::span<const Complex> f, std::span<const Complex> g, Backend backend) {
  std::vector<Complex> out(f.begin(), f.end());
  ExplicitConvolution1D(ConvKind::cconv, f.size(), backend).convolve(out, g);
  return out;
}

std::vector<Complex> explicit_hconv(std::span<const Complex> f, std::span<const Complex> g, Backend backend) {
  std::vector<Complex> out(f.begin(), f.end());
  ExplicitConvolution1D(ConvKind::hconv, f.size(), backend).convolve(out, g);
  return out;
}

std::vector<Complex> explicit_tconv(std::span<const Complex> f, std::span<const Complex> g,
                                    std::span<const Complex> h, Backend backend) {
  std::vector<Complex> out(f.begin(), f.end());
  ExplicitConvolution1D(ConvKind::tconv, f.size(), backend).convolve(out, g, h);
  return out;
}

// --------------------------------------------------------------------------
// 2D

ExplicitConvolution2D::ExplicitConvolution2D(ConvKind kind, std::size_t mx, std::size_t my, Pruning pruning,
                                             Backend backend)
    : kind_(kind),
      mx_(mx),
      my_(my),
      nx_(shape2d(kind, mx, my).nx),
      ny_(shape2d(kind, mx, my).ny),
      cols_(shape2d(kind, mx, my).cols),
      pruning_(check_pruning(kind, pruning)),
      a_(nx_ * cols_),
      b_(nx_ * cols_),
      c_(shape2d(kind, mx, my).arrays == 3 ? nx_ * cols_ : 0),
      xb_(x2d(kind, mx, my, pruning, Direction::backward), backend),
      xf_(x2d(kind, mx, my, pruning, Direction::forward), backend),
      yb_(y2d(kind, mx, my, Direction::backward), backend),
      yf_(y2d(kind, mx, my, Direction::forward), backend) {}

void ExplicitConvolution2D::load(ComplexBuffer& dst, const Field2D& src) const {
  require(src.mx() == mx_ && src.my() == my_, "ExplicitConvolution2D: field dimensions do not match");
  dst.fill(Complex{});
  switch (kind_) {
    case ConvKind::cconv2:
      require(src.kind() == FieldKind::standard, "ExplicitConvolution2D: cconv2 takes standard fields");
      for (std::size_t i = 0; i < mx_; ++i)
        for (std::size_t j = 0; j < my_; ++j) dst[i * cols_ + j] = src(i, j);
      break;
    case ConvKind::conv2:
      require(src.kind() == FieldKind::hermitian, "ExplicitConvolution2D: conv2 takes hermitian fields");
      for (std::size_t i = 0; i < src.rows(); ++i) {
        const std::size_t r = wrap(static_cast<long long>(i) - static_cast<long long>(mx_ - 1), nx_);
        for (std::size_t j = 0; j < my_; ++j) dst[r * cols_ + j] = src(i, j);
      }
      break;
    default:
      require(src.kind() == FieldKind::ternary, "ExplicitConvolution2D: tconv2 takes ternary fields");
      for (std::size_t i = 1; i < src.rows(); ++i) {
        const std::size_t r = wrap(static_cast<long long>(i) - static_cast<long long>(mx_), nx_);
        for (std::size_t j = 0; j < my_; ++j) dst[r * cols_ + j] = src(i, j);
      }
      break;
  }
}

void ExplicitConvolution2D::store(Field2D& dst) const {
  const double ninv = 1.0 / static_cast<double>(nx_ * ny_);
  switch (kind_) {
    case ConvKind::cconv2:
      for (std::size_t i = 0; i < mx_; ++i)
        for (std::size_t j = 0; j < my_; ++j) dst(i, j) = a_[i * cols_ + j] * ninv;
      break;
    case ConvKind::conv2:
      for (std::size_t i = 0; i < dst.rows(); ++i) {
        const std::size_t r = wrap(static_cast<long long>(i) - static_cast<long long>(mx_ - 1), nx_);
        for (std::size_t j = 0; j < my_; ++j) dst(i, j) = a_[r * cols_ + j] * ninv;
      }
      break;
    default:
      for (std::size_t j = 0; j <= my_; ++j) dst(0, j) = 0.0;
      for (std::size_t i = 1; i < dst.rows(); ++i) {
        const std::size_t r = wrap(static_cast<long long>(i) - static_cast<long long>(mx_), nx_);
        for (std::size_t j = 0; j < my_; ++j) dst(i, j) = a_[r * cols_ + j] * ninv;
        dst(i, my_) = 0.0;
      }
      break;
  }
}

void ExplicitConvolution2D::backward(ComplexBuffer& a) const {
  xb_.execute(a.data(), a.data());
  yb_.execute(a.data(), a.data());
}

void ExplicitConvolution2D::forward(ComplexBuffer& a) const {
  yf_.execute(a.data(), a.data());
  xf_.execute(a.data(), a.data());
}

void ExplicitConvolution2D::convolve(Field2D& f, const Field2D& g) {
  require(kind_ != ConvKind::tconv2, "ExplicitConvolution2D: tconv2 needs three operands");
  load(a_, f);
  load(b_, g);
  backward(a_);
  backward(b_);
  if (kind_ == ConvKind::cconv2) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] *= b_[k];
  } else {
    for (std::size_t r = 0; r < nx_; ++r) {
      double* a = real(a_.data() + r * cols_);
      const double* b = real(b_.data() + r * cols_);
      for (std::size_t j = 0; j < ny_; ++j) a[j] *= b[j];
    }
  }
  forward(a_);
  store(f);
}

void ExplicitConvolution2D::convolve(Field2D& f, const Field2D& g, const Field2D& h) {
  require(kind_ == ConvKind::tconv2, "ExplicitConvolution2D: three operands are for tconv2 only");
  load(a_, f);
  load(b_, g);
  load(c_, h);
  backward(a_);
  backward(b_);
  backward(c_);
  for (std::size_t r = 0; r < nx_; ++r) {
    double* a = real(a_.data() + r * cols_);
    const double* b = real(b_.data() + r * cols_);
    const double* c = real(c_.data() + r * cols_);
    for (std::size_t j = 0; j < ny_; ++j) a[j] *= b[j] * c[j];
  }
  forward(a_);
  store(f);
}

// --------------------------------------------------------------------------
// 3D

ExplicitConvolution3D::ExplicitConvolution3D(ConvKind kind, std::size_t mx, std::size_t my, std::size_t mz,
                                             Pruning pruning, Backend backend)
    : kind_(kind),
      mx_(mx),
      my_(my),
      mz_(mz),
      nx_(shape3d(kind, mx, my, mz).nx),
      ny_(shape3d(kind, mx, my, mz).ny),
      nz_(shape3d(kind, mx, my, mz).nz),
      cols_(shape3d(kind, mx, my, mz).cols),
      pruning_(check_pruning(kind, pruning)),
      a_(nx_ * ny_ * cols_),
      b_(nx_ * ny_ * cols_),
      xb_(x3d(shape3d(kind, mx, my, mz), Direction::backward), backend),
      xf_(x3d(shape3d(kind, mx, my, mz), Direction::forward), backend),
      yb_(y3d(shape3d(kind, mx, my, mz), Direction::backward), backend),
      yf_(y3d(shape3d(kind, mx, my, mz), Direction::forward), backend),
      zb_(z3d(kind, shape3d(kind, mx, my, mz), my, pruning, Direction::backward), backend),
      zf_(z3d(kind, shape3d(kind, mx, my, mz), my, pruning, Direction::forward), backend) {}

void ExplicitConvolution3D::load(ComplexBuffer& dst, const Field3D& src) const {
  require(src.mx() == mx_ && src.my() == my_ && src.mz() == mz_,
          "ExplicitConvolution3D: field dimensions do not match");
  dst.fill(Complex{});
  if (kind_ == ConvKind::cconv3) {
    require(src.kind() == FieldKind::standard, "ExplicitConvolution3D: cconv3 takes standard fields");
    for (std::size_t i = 0; i < mx_; ++i)
      for (std::size_t j = 0; j < my_; ++j)
        for (std::size_t l = 0; l < mz_; ++l) dst[(i * ny_ + j) * cols_ + l] = src(i, j, l);
    return;
  }
  require(src.kind() == FieldKind::hermitian, "ExplicitConvolution3D: hconv3 takes hermitian fields");
  for (std::size_t i = 0; i < src.nx(); ++i) {
    const std::size_t r = wrap(static_cast<long long>(i) - static_cast<long long>(mx_ - 1), nx_);
    for (std::size_t j = 0; j < src.ny(); ++j) {
      const std::size_t s = wrap(static_cast<long long>(j) - static_cast<long long>(my_ - 1), ny_);
      for (std::size_t l = 0; l < mz_; ++l) dst[(r * ny_ + s) * cols_ + l] = src(i, j, l);
    }
  }
}

void ExplicitConvolution3D::backward(ComplexBuffer& a) const {
  const std::size_t slab = ny_ * cols_;
  if (kind_ == ConvKind::cconv3) {
    const bool pruned = pruning_ == Pruning::pruned;
    if (pruned) {
      for (std::size_t i = 0; i < mx_; ++i) zb_.execute(a.data() + i * slab, a.data() + i * slab);
    } else {
      zb_.execute(a.data(), a.data());
    }
    const std::size_t slabs = pruned ? mx_ : nx_;
    for (std::size_t i = 0; i < slabs; ++i) yb_.execute(a.data() + i * slab, a.data() + i * slab);
    xb_.execute(a.data(), a.data());
    return;
  }
  xb_.execute(a.data(), a.data());
  for (std::size_t i = 0; i < nx_; ++i) yb_.execute(a.data() + i * slab, a.data() + i * slab);
  zb_.execute(a.data(), a.data());
}

void ExplicitConvolution3D::forward(ComplexBuffer& a) const {
  const std::size_t slab = ny_ * cols_;
  if (kind_ == ConvKind::cconv3) {
    const bool pruned = pruning_ == Pruning::pruned;
    xf_.execute(a.data(), a.data());
    const std::size_t slabs = pruned ? mx_ : nx_;
    for (std::size_t i = 0; i < slabs; ++i) yf_.execute(a.data() + i * slab, a.data() + i * slab);
    if (pruned) {
      for (std::size_t i = 0; i < mx_; ++i) zf_.execute(a.data() + i * slab, a.data() + i * slab);
    } else {
      zf_.execute(a.data(), a.data());
    }
    return;
  }
  zf_.execute(a.data(), a.data());
  for (std::size_t i = 0; i < nx_; ++i) yf_.execute(a.data() + i * slab, a.data() + i * slab);
  xf_.execute(a.data(), a.data());
}

void ExplicitConvolution3D::convolve(Field3D& f, const Field3D& g) {
  load(a_, f);
  load(b_, g);
  backward(a_);
  backward(b_);
  if (kind_ == ConvKind::cconv3) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] *= b_[k];
  } else {
    for (std::size_t r = 0; r < nx_ * ny_; ++r) {
      double* a = real(a_.data() + r * cols_);
      const double* b = real(b_.data() + r * cols_);
      for (std::size_t j = 0; j < nz_; ++j) a[j] *= b[j];
    }
  }
  forward(a_);

  const double ninv = 1.0 / static_cast<double>(nx_ * ny_ * nz_);
  if (kind_ == ConvKind::cconv3) {
    for (std::size_t i = 0; i < mx_; ++i)
      for (std::size_t j = 0; j < my_; ++j)
        for (std::size_t l = 0; l < mz_; ++l) f(i, j, l) = a_[(i * ny_ + j) * cols_ + l] * ninv;
    return;
  }
  for (std::size_t i = 0; i < f.nx(); ++i) {
    const std::size_t r = wrap(static_cast<long long>(i) - static_cast<long long>(mx_ - 1), nx_);
    for (std::size_t j = 0; j < f.ny(); ++j) {
      const std::size_t s = wrap(static_cast<long long>(j) - static_cast<long long>(my_ - 1), ny_);
      for (std::size_t l = 0; l < mz_; ++l) f(i, j, l) = a_[(r * ny_ + s) * cols_ + l] * ninv;
    }
  }
}

}  // namespace dealias
