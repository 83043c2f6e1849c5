#include <fftw3.h>

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <string>

#include "fft_engine.hpp"

namespace dealias::detail {
namespace {

// The FFTW planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

unsigned planner_flags() {
  const char* env = std::getenv("CONV_FFT_PLANNER");
  if (env != nullptr && std::strcmp(env, "measure") == 0) return FFTW_MEASURE;
  return FFTW_ESTIMATE;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t words)
      : p(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (words == 0 ? 1 : words)))) {
    if (p == nullptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(p); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  fftw_complex* p;
};

class FftwEngine final : public FftEngine {
 public:
  explicit FftwEngine(const FftGeometry& g) : g_(g) {
    const int n = static_cast<int>(g.size);
    const int howmany = static_cast<int>(g.count);
    const int stride = static_cast<int>(g.stride);
    const int dist = static_cast<int>(g.dist);
    const bool in_place = g.placement == Placement::in_place;
    // Plans are made on scratch arrays and executed with the new-array API.
    // Complex words are always 16-byte aligned, which is all FFTW requires
    // of new arrays in this build.
    const unsigned flags = planner_flags();
    std::lock_guard<std::mutex> lock(planner_mutex());
    FftwBuffer in(input_extent(g));
    FftwBuffer out(in_place ? 1 : output_extent(g));
    fftw_complex* out_p = in_place ? in.p : out.p;
    switch (g.kind) {
      case TransformKind::complex_to_complex:
        plan_ = fftw_plan_many_dft(1, &n, howmany, in.p, nullptr, stride, dist, out_p, nullptr, stride,
                                   dist, g.direction == Direction::backward ? FFTW_BACKWARD : FFTW_FORWARD,
                                   flags);
        break;
      case TransformKind::complex_to_real:
        plan_ = fftw_plan_many_dft_c2r(1, &n, howmany, in.p, nullptr, 1, dist,
                                       reinterpret_cast<double*>(out_p), nullptr, 1, 2 * dist, flags);
        break;
      case TransformKind::real_to_complex:
        plan_ = fftw_plan_many_dft_r2c(1, &n, howmany, reinterpret_cast<double*>(in.p), nullptr, 1,
                                       2 * dist, out_p, nullptr, 1, dist, flags);
        break;
    }
    if (plan_ == nullptr)
      throw std::runtime_error("FFTW could not plan a transform of size " + std::to_string(g.size));
  }

  ~FftwEngine() override {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }

  void run(Complex* in, Complex* out) const override {
    auto* i = reinterpret_cast<fftw_complex*>(in);
    auto* o = reinterpret_cast<fftw_complex*>(out);
    switch (g_.kind) {
      case TransformKind::complex_to_complex:
        fftw_execute_dft(plan_, i, o);
        break;
      case TransformKind::complex_to_real:
        fftw_execute_dft_c2r(plan_, i, reinterpret_cast<double*>(o));
        break;
      case TransformKind::real_to_complex:
        fftw_execute_dft_r2c(plan_, reinterpret_cast<double*>(i), o);
        break;
    }
  }

 private:
  FftGeometry g_;
  fftw_plan plan_ = nullptr;
};

}  // namespace

std::unique_ptr<FftEngine> make_fftw_engine(const FftGeometry& g) {
  return std::make_unique<FftwEngine>(g);
}

}  // namespace dealias::detail
