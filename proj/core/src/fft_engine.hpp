#pragma once

#include <memory>

#include "dealias/fft.hpp"

namespace dealias::detail {

class FftEngine {
 public:
  virtual ~FftEngine() = default;
  virtual void run(Complex* in, Complex* out) const = 0;
};

// `g` has dist already resolved.
std::unique_ptr<FftEngine> make_naive_engine(const FftGeometry& g);
std::unique_ptr<FftEngine> make_fftw_engine(const FftGeometry& g);

}  // namespace dealias::detail
