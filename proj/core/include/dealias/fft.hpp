#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dealias/buffer.hpp"

namespace dealias {

// Sign of the exponent: backward sums zeta_N^{+jk}, forward zeta_N^{-jk}.
// Neither direction is normalized.
enum class Direction : int { backward = 1, forward = -1 };

enum class TransformKind {
  complex_to_complex,
  complex_to_real,  // "crfft": half spectrum of size/2+1 words -> size reals
  real_to_complex,  // "rcfft": size reals -> half spectrum of size/2+1 words
};

enum class Placement { in_place, out_of_place };

enum class Backend {
  naive,      // direct O(N^2) summation; any size, the correctness oracle
  optimized,  // FFTW
};

// Reads CONV_FFT_BACKEND ("naive" or "optimized"); optimized when unset.
Backend default_backend();
Backend parse_backend(std::string_view name);
std::string_view to_string(Backend backend);

// Geometry of a batch of 1D transforms.
//
// Complex data: element k of transform b lives at base[b*dist + k*stride].
// Real data produced or consumed by the real kinds is stored as doubles inside
// complex buffers: value j of transform b is ((double*)base)[2*b*dist + j].
// Real kinds require stride 1 (the half-spectrum/real pair must share words
// for in-place use). dist == 0 selects the packed default: `size` for
// complex_to_complex and size/2+1 for the real kinds.
struct FftGeometry {
  std::size_t size = 1;
  Direction direction = Direction::backward;
  TransformKind kind = TransformKind::complex_to_complex;
  Placement placement = Placement::out_of_place;
  std::size_t stride = 1;
  std::size_t count = 1;
  std::size_t dist = 0;

  static FftGeometry complex(std::size_t n, Direction dir, Placement place, std::size_t stride = 1,
                             std::size_t count = 1, std::size_t dist = 0) {
    return {n, dir, TransformKind::complex_to_complex, place, stride, count, dist};
  }
  static FftGeometry crfft(std::size_t n, Placement place, std::size_t count = 1, std::size_t dist = 0) {
    return {n, Direction::backward, TransformKind::complex_to_real, place, 1, count, dist};
  }
  static FftGeometry rcfft(std::size_t n, Placement place, std::size_t count = 1, std::size_t dist = 0) {
    return {n, Direction::forward, TransformKind::real_to_complex, place, 1, count, dist};
  }
};

// Complex words spanned by the input and output of one execute().
std::size_t input_extent(const FftGeometry& g);
std::size_t output_extent(const FftGeometry& g);

namespace detail {
class FftEngine;
}

// A prepared batch of unnormalized 1D transforms. Planning may be expensive;
// execute() does not allocate (the naive backend keeps a thread-local scratch
// for in-place use). Plans are immutable after construction and may be shared
// between threads provided each execute() works on its own buffers.
class FftPlan {
 public:
  explicit FftPlan(const FftGeometry& geometry, Backend backend = default_backend());
  FftPlan(FftPlan&&) noexcept;
  FftPlan& operator=(FftPlan&&) noexcept;
  ~FftPlan();

  // Raw execution; buffers must cover input_extent/output_extent words and
  // in-place plans require in == out.
  void execute(Complex* in, Complex* out) const;
  // Checked execution.
  void execute(std::span<Complex> in, std::span<Complex> out) const;
  void execute(std::span<Complex> inout) const { execute(inout, inout); }

  const FftGeometry& geometry() const noexcept { return geometry_; }
  Backend backend() const noexcept { return backend_; }

 private:
  FftGeometry geometry_;
  Backend backend_;
  std::unique_ptr<detail::FftEngine> engine_;
};

// Direct O(N^2) evaluation of sum_k zeta_N^{sign jk} x_k.
std::vector<Complex> naive_dft(std::span<const Complex> input, Direction direction);

// Records every transform executed on this thread while alive. Counters nest:
// an inner counter also reports to the enclosing one.
class TransformCounter {
 public:
  TransformCounter();
  ~TransformCounter();
  TransformCounter(const TransformCounter&) = delete;
  TransformCounter& operator=(const TransformCounter&) = delete;

  std::size_t total() const noexcept { return total_; }
  std::size_t count(std::size_t size) const;
  std::size_t count(std::size_t size, TransformKind kind) const;
  std::size_t in_place() const noexcept { return in_place_; }
  std::size_t out_of_place() const noexcept { return total_ - in_place_; }
  void reset();

  // Called by FftPlan::execute.
  static void record(const FftGeometry& g);

 private:
  void add(const FftGeometry& g);

  TransformCounter* parent_;
  std::size_t total_ = 0;
  std::size_t in_place_ = 0;
  std::map<std::pair<std::size_t, TransformKind>, std::size_t> by_size_;
};

}  // namespace dealias
