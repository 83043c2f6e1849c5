// Direct-summation backend. Accumulates in long double so that it stays a
// trustworthy reference for the optimized path.
#include <cmath>
#include <numbers>
#include <vector>

#include "fft_engine.hpp"

namespace dealias::detail {
namespace {

using LComplex = std::complex<long double>;

class NaiveEngine final : public FftEngine {
 public:
  explicit NaiveEngine(const FftGeometry& g) : g_(g), roots_(g.size) {
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    for (std::size_t k = 0; k < g.size; ++k) {
      const long double theta = two_pi * static_cast<long double>(k) / static_cast<long double>(g.size);
      roots_[k] = {std::cos(theta), std::sin(theta)};
    }
  }

  void run(Complex* in, Complex* out) const override {
    const std::size_t n = g_.size;
    const std::size_t words = output_words();
    static thread_local std::vector<Complex> scratch;
    const bool in_place = g_.placement == Placement::in_place;
    for (std::size_t b = 0; b < g_.count; ++b) {
      Complex* src = in + b * g_.dist;
      Complex* dst = out + b * g_.dist;
      Complex* target = dst;
      if (in_place) {
        if (scratch.size() < words) scratch.resize(words);
        target = scratch.data();
      }
      switch (g_.kind) {
        case TransformKind::complex_to_complex:
          c2c(src, target, in_place ? 1 : g_.stride);
          break;
        case TransformKind::complex_to_real:
          c2r(src, reinterpret_cast<double*>(target));
          break;
        case TransformKind::real_to_complex:
          r2c(reinterpret_cast<const double*>(src), target);
          break;
      }
      if (in_place) {
        if (g_.kind == TransformKind::complex_to_complex) {
          for (std::size_t j = 0; j < n; ++j) dst[j * g_.stride] = scratch[j];
        } else {
          for (std::size_t j = 0; j < words; ++j) dst[j] = scratch[j];
        }
      }
    }
  }

 private:
  std::size_t output_words() const {
    switch (g_.kind) {
      case TransformKind::complex_to_complex: return g_.size;
      case TransformKind::complex_to_real: return (g_.size + 1) / 2;
      case TransformKind::real_to_complex: return g_.size / 2 + 1;
    }
    return g_.size;
  }

  LComplex root(std::size_t jk, int sign) const {
    const LComplex z = roots_[jk % g_.size];
    return sign > 0 ? z : std::conj(z);
  }

  void c2c(const Complex* src, Complex* dst, std::size_t out_stride) const {
    const std::size_t n = g_.size;
    const int sign = static_cast<int>(g_.direction);
    for (std::size_t j = 0; j < n; ++j) {
      LComplex acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const Complex x = src[k * g_.stride];
        acc += root(j * k, sign) * LComplex(x.real(), x.imag());
      }
      dst[j * out_stride] = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    }
  }

  // Hermitian half spectrum -> real; imaginary parts of the self-conjugate
  // entries (k = 0 and, for even n, k = n/2) are ignored.
  void c2r(const Complex* src, double* dst) const {
    const std::size_t n = g_.size;
    const std::size_t last = (n - 1) / 2;
    for (std::size_t j = 0; j < n; ++j) {
      long double acc = src[0].real();
      for (std::size_t k = 1; k <= last; ++k) {
        const LComplex w(src[k].real(), src[k].imag());
        acc += 2.0L * (root(j * k, 1) * w).real();
      }
      if (n % 2 == 0) {
        const long double nyq = src[n / 2].real();
        acc += (j % 2 == 0) ? nyq : -nyq;
      }
      dst[j] = static_cast<double>(acc);
    }
  }

  void r2c(const double* src, Complex* dst) const {
    const std::size_t n = g_.size;
    for (std::size_t k = 0; k <= n / 2; ++k) {
      LComplex acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += root(j * k, -1) * static_cast<long double>(src[j]);
      dst[k] = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    }
  }

  FftGeometry g_;
  std::vector<LComplex> roots_;
};

}  // namespace

std::unique_ptr<FftEngine> make_naive_engine(const FftGeometry& g) {
  return std::make_unique<NaiveEngine>(g);
}

}  // namespace dealias::detail
