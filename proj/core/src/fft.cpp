#include "dealias/fft.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "fft_engine.hpp"

namespace dealias {
namespace {

thread_local TransformCounter* t_counter = nullptr;

bool is_real(TransformKind kind) { return kind != TransformKind::complex_to_complex; }

std::size_t half_words(std::size_t n) { return n / 2 + 1; }

FftGeometry resolve(FftGeometry g) {
  if (g.size == 0) throw std::invalid_argument("FftPlan: size must be positive");
  if (g.count == 0) throw std::invalid_argument("FftPlan: count must be positive");
  if (g.stride == 0) throw std::invalid_argument("FftPlan: stride must be positive");
  if (g.kind == TransformKind::complex_to_real && g.direction != Direction::backward)
    throw std::invalid_argument("FftPlan: complex-to-real transforms are backward");
  if (g.kind == TransformKind::real_to_complex && g.direction != Direction::forward)
    throw std::invalid_argument("FftPlan: real-to-complex transforms are forward");
  if (is_real(g.kind) && g.stride != 1)
    throw std::invalid_argument("FftPlan: real transforms require unit stride");
  if (g.dist == 0) g.dist = is_real(g.kind) ? half_words(g.size) : g.size;
  if (is_real(g.kind) && g.count > 1 && g.dist < half_words(g.size))
    throw std::invalid_argument("FftPlan: batch distance too small for a real transform");
  return g;
}

}  // namespace

Backend parse_backend(std::string_view name) {
  if (name == "naive") return Backend::naive;
  if (name == "optimized") return Backend::optimized;
  throw std::invalid_argument("unknown FFT backend '" + std::string(name) +
                              "' (expected naive or optimized)");
}

std::string_view to_string(Backend backend) {
  return backend == Backend::naive ? "naive" : "optimized";
}

Backend default_backend() {
  const char* env = std::getenv("CONV_FFT_BACKEND");
  if (env == nullptr || *env == '\0') return Backend::optimized;
  return parse_backend(env);
}

std::size_t input_extent(const FftGeometry& g) {
  const FftGeometry r = resolve(g);
  switch (r.kind) {
    case TransformKind::complex_to_complex:
    case TransformKind::complex_to_real:
      return (r.count - 1) * r.dist + (r.kind == TransformKind::complex_to_real
                                           ? half_words(r.size)
                                           : (r.size - 1) * r.stride + 1);
    case TransformKind::real_to_complex:
      return (r.count - 1) * r.dist + (r.size + 1) / 2;
  }
  return 0;
}

std::size_t output_extent(const FftGeometry& g) {
  const FftGeometry r = resolve(g);
  switch (r.kind) {
    case TransformKind::complex_to_complex:
      return (r.count - 1) * r.dist + (r.size - 1) * r.stride + 1;
    case TransformKind::complex_to_real:
      return (r.count - 1) * r.dist + (r.size + 1) / 2;
    case TransformKind::real_to_complex:
      return (r.count - 1) * r.dist + half_words(r.size);
  }
  return 0;
}

FftPlan::FftPlan(const FftGeometry& geometry, Backend backend)
    : geometry_(resolve(geometry)), backend_(backend) {
  engine_ = backend == Backend::naive ? detail::make_naive_engine(geometry_)
                                      : detail::make_fftw_engine(geometry_);
}

FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;
FftPlan::~FftPlan() = default;

void FftPlan::execute(Complex* in, Complex* out) const {
  TransformCounter::record(geometry_);
  engine_->run(in, out);
}

void FftPlan::execute(std::span<Complex> in, std::span<Complex> out) const {
  const bool same = in.data() == out.data();
  if (geometry_.placement == Placement::in_place && !same)
    throw std::invalid_argument("FftPlan: in-place plan needs identical input and output");
  if (geometry_.placement == Placement::out_of_place && same)
    throw std::invalid_argument("FftPlan: out-of-place plan given aliased buffers");
  if (in.size() < input_extent(geometry_))
    throw std::invalid_argument("FftPlan: input has " + std::to_string(in.size()) +
                                " words, plan needs " + std::to_string(input_extent(geometry_)));
  if (out.size() < output_extent(geometry_))
    throw std::invalid_argument("FftPlan: output has " + std::to_string(out.size()) +
                                " words, plan needs " + std::to_string(output_extent(geometry_)));
  execute(in.data(), out.data());
}

std::vector<Complex> naive_dft(std::span<const Complex> input, Direction direction) {
  std::vector<Complex> out(input.size());
  if (input.empty()) return out;
  std::vector<Complex> work(input.begin(), input.end());
  auto engine = detail::make_naive_engine(resolve(
      FftGeometry::complex(input.size(), direction, Placement::out_of_place)));
  engine->run(work.data(), out.data());
  return out;
}

TransformCounter::TransformCounter() : parent_(t_counter) { t_counter = this; }

TransformCounter::~TransformCounter() { t_counter = parent_; }

void TransformCounter::record(const FftGeometry& g) {
  for (TransformCounter* c = t_counter; c != nullptr; c = c->parent_) c->add(g);
}

void TransformCounter::add(const FftGeometry& g) {
  total_ += g.count;
  if (g.placement == Placement::in_place) in_place_ += g.count;
  by_size_[{g.size, g.kind}] += g.count;
}

std::size_t TransformCounter::count(std::size_t size) const {
  std::size_t n = 0;
  for (const auto& [key, value] : by_size_)
    if (key.first == size) n += value;
  return n;
}

std::size_t TransformCounter::count(std::size_t size, TransformKind kind) const {
  const auto it = by_size_.find({size, kind});
  return it == by_size_.end() ? 0 : it->second;
}

void TransformCounter::reset() {
  total_ = 0;
  in_place_ = 0;
  by_size_.clear();
}

}  // namespace dealias
