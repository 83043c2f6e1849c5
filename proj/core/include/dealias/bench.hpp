#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dealias/buffer.hpp"
#include "dealias/fft.hpp"
#include "dealias/implicit_nd.hpp"

namespace dealias {

// Mean and one-sided standard deviations of timing samples:
//   sigma_lo^2 = 1/(n/2 - 1) * sum_{t_i < T} (t_i - T)^2
//   sigma_hi^2 = 1/(n/2 - 1) * sum_{t_i > T} (t_i - T)^2
// The same n/2 - 1 divides both sides however the samples split.
struct TimingStats {
  std::size_t n = 0;
  double mean = 0.0;
  double sigma_lo = 0.0;
  double sigma_hi = 0.0;
};

// Requires at least four samples.
TimingStats one_sided_stats(std::span<const double> samples);

// sqrt(sum |h_k - H_k|^2) / sqrt(sum |H_k|^2). Throws if H is all zero or the
// lengths differ.
double normalized_error(std::span<const Complex> h, std::span<const Complex> H);

enum class Method { implicit, explicit_padded, pruned };

std::string_view to_string(Method method);
Method parse_method(std::string_view name);
bool method_available(ConvKind kind, Method method);

struct BenchConfig {
  ConvKind kind = ConvKind::cconv;
  Method method = Method::implicit;
  Dims dims;  // 1D kinds use dims.mx as m
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  // Minimum accumulated time per sample; short runs are repeated.
  double min_sample_seconds = 0.01;
  // Largest direct-sum cost used for validation of random inputs.
  std::size_t oracle_cap = std::size_t{1} << 20;
  Backend backend = default_backend();
};

struct ConvReport {
  ConvKind kind = ConvKind::cconv;
  Method method = Method::implicit;
  Dims dims;
  TimingStats stats;
  std::optional<double> error;  // absent when no exact solution or affordable oracle exists
  std::size_t complex_words = 0;
};

// Tolerance applied to ConvReport::error by the CLI and selftest.
inline constexpr double kValidationTolerance = 1e-11;

// cconv and hconv run on the analytic families
//   f_k = F e^{ik}, g_k = G e^{ik}, F = sqrt3 + i sqrt7, G = sqrt5 + i sqrt11   (cconv)
//   f_k = sqrt3 e^{ik}, g_k = sqrt5 e^{ik}                                      (hconv)
// and report the error against the closed-form result. Other kinds use seeded
// normal random inputs (Hermitian-symmetrized where needed) checked against
// the direct sum when it fits under oracle_cap. Timing covers the convolution
// call only: planning, input generation and the per-run input restore are
// excluded.
ConvReport run_bench(const BenchConfig& config);

// Closed-form results of the analytic families.
std::vector<Complex> cconv_family_input(std::size_t m, Complex amplitude);
std::vector<Complex> cconv_family_exact(std::size_t m);
std::vector<Complex> hconv_family_input(std::size_t m, double amplitude);
std::vector<Complex> hconv_family_exact(std::size_t m);

struct AccuracyRow {
  std::size_t m = 0;
  double error_implicit = 0.0;
  double error_explicit = 0.0;
};

// Errors of the implicit and explicit methods for each m (all axes set to m
// for multidimensional kinds). cconv and hconv use the analytic families;
// the other kinds use seeded random input against the direct sum.
std::vector<AccuracyRow> accuracy_sweep(ConvKind kind, std::span<const std::size_t> ms, std::uint64_t seed = 1,
                                        Backend backend = default_backend());

struct MemoryRow {
  ConvKind kind = ConvKind::cconv;
  Dims dims;
  MemoryReport report;
};

std::vector<MemoryRow> memory_table(ConvKind kind, std::span<const Dims> dims);

// ----- text output

std::string report_header(char sep = ',');
std::string format_report(const ConvReport& r, char sep = ',');
std::string accuracy_header(char sep = ',');
std::string format_accuracy(const AccuracyRow& r, char sep = ',');
std::string memory_header(char sep = ',');
std::string format_memory(const MemoryRow& r, char sep = ',');

}  // namespace dealias
