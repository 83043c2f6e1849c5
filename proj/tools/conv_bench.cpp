// conv-bench: timing, accuracy and memory tables for the dealiased convolutions.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dealias/bench.hpp"

namespace {

using namespace dealias;

constexpr int kValidationFailure = 2;

char separator(const std::string& format) { return format == "tsv" ? '\t' : ','; }

bool failed(const ConvReport& r) { return r.error && !(*r.error <= kValidationTolerance); }

// "MX", "MXxMY" or "MXxMYxMZ"; omitted axes are 1.
Dims parse_dims(const std::string& text) {
  Dims d;
  std::size_t* axes[] = {&d.mx, &d.my, &d.mz};
  std::size_t start = 0, axis = 0;
  while (true) {
    if (axis == 3) throw std::invalid_argument("too many axes in '" + text + "'");
    const std::size_t end = text.find('x', start);
    const std::string cell = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::size_t used = 0;
    const unsigned long long v = cell.empty() ? 0 : std::stoull(cell, &used);
    if (cell.empty() || used != cell.size() || v == 0) throw std::invalid_argument("bad dimensions '" + text + "'");
    *axes[axis++] = static_cast<std::size_t>(v);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return d;
}

struct Options {
  std::string kind = "cconv";
  std::string method = "implicit";
  std::size_t m = 0, mx = 0, my = 0, mz = 0;
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::size_t m_min = 2, m_max = 1024;
  std::vector<std::string> dims;
};

Dims bench_dims(const Options& o, ConvKind kind) {
  Dims d;
  d.mx = o.mx ? o.mx : (o.m ? o.m : 64);
  if (rank(kind) >= 2) d.my = o.my ? o.my : d.mx;
  if (rank(kind) == 3) d.mz = o.mz ? o.mz : d.mx;
  return d;
}

int run_bench_command(const Options& o) {
  const ConvKind kind = parse_conv_kind(o.kind);
  const char sep = separator(o.format);
  std::vector<Method> methods;
  if (o.method == "all") {
    for (Method m : {Method::implicit, Method::explicit_padded, Method::pruned})
      if (method_available(kind, m)) methods.push_back(m);
  } else {
    methods.push_back(parse_method(o.method));
  }

  BenchConfig config;
  config.kind = kind;
  config.dims = bench_dims(o, kind);
  config.samples = o.samples;
  config.seed = o.seed;

  std::cout << report_header(sep) << '\n';
  int status = 0;
  std::optional<double> implicit_mean, explicit_mean;
  for (Method method : methods) {
    config.method = method;
    const ConvReport r = run_bench(config);
    std::cout << format_report(r, sep) << std::endl;
    if (method == Method::implicit) implicit_mean = r.stats.mean;
    if (method == Method::explicit_padded) explicit_mean = r.stats.mean;
    if (failed(r)) {
      std::cerr << "validation failed: " << to_string(kind) << ' ' << to_string(method) << " error " << *r.error
                << '\n';
      status = kValidationFailure;
    }
  }
  if (implicit_mean && explicit_mean)
    std::cerr << "speedup explicit/implicit: " << *explicit_mean / *implicit_mean << '\n';
  return status;
}

int run_accuracy_command(const Options& o) {
  const ConvKind kind = parse_conv_kind(o.kind);
  if (o.m_min == 0 || o.m_min > o.m_max) throw std::invalid_argument("need 0 < --m-min <= --m-max");
  std::vector<std::size_t> ms;
  for (std::size_t m = o.m_min; m <= o.m_max; m *= 2) ms.push_back(m);
  const char sep = separator(o.format);
  std::cout << accuracy_header(sep) << '\n';
  int status = 0;
  for (const AccuracyRow& row : accuracy_sweep(kind, ms, o.seed)) {
    std::cout << format_accuracy(row, sep) << '\n';
    if (!(row.error_implicit <= kValidationTolerance) || !(row.error_explicit <= kValidationTolerance))
      status = kValidationFailure;
  }
  return status;
}

int run_memory_command(const Options& o) {
  const ConvKind kind = parse_conv_kind(o.kind);
  std::vector<Dims> dims;
  for (const auto& text : o.dims) dims.push_back(parse_dims(text));
  if (dims.empty()) dims.push_back(bench_dims(o, kind));
  const char sep = separator(o.format);
  std::cout << memory_header(sep) << '\n';
  for (const MemoryRow& row : memory_table(kind, dims)) std::cout << format_memory(row, sep) << '\n';
  return 0;
}

// Small instance of every kind and method, each checked against its oracle.
int run_selftest_command(const Options& o) {
  struct Case {
    ConvKind kind;
    Dims dims;
  };
  const Case cases[] = {
      {ConvKind::cconv, {1}},        {ConvKind::cconv, {256}},      {ConvKind::hconv, {256}},
      {ConvKind::tconv, {32}},       {ConvKind::cconv2, {16, 16}},  {ConvKind::conv2, {8, 8}},
      {ConvKind::tconv2, {4, 8}},    {ConvKind::cconv3, {4, 4, 4}}, {ConvKind::hconv3, {4, 4, 4}},
  };
  const char sep = separator(o.format);
  std::cout << report_header(sep) << '\n';
  int status = 0;
  for (const Case& c : cases)
    for (Method method : {Method::implicit, Method::explicit_padded, Method::pruned}) {
      if (!method_available(c.kind, method)) continue;
      BenchConfig config;
      config.kind = c.kind;
      config.method = method;
      config.dims = c.dims;
      config.samples = 4;
      config.min_sample_seconds = 0;
      config.seed = o.seed;
      const ConvReport r = run_bench(config);
      std::cout << format_report(r, sep) << '\n';
      if (!r.error || failed(r)) status = kValidationFailure;
    }
  std::cerr << (status == 0 ? "selftest passed" : "selftest FAILED") << '\n';
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timing, accuracy and memory tables for implicitly dealiased convolutions"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> kinds = {"cconv", "hconv", "tconv", "cconv2", "conv2", "tconv2", "cconv3", "hconv3"};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Input seed");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "tsv"}));
  };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "Convolution kind")->check(CLI::IsMember(kinds));
  };
  auto add_sizes = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "Modes per axis (1D kinds, default for all axes)");
    sub->add_option("--mx", o.mx, "Modes along x");
    sub->add_option("--my", o.my, "Modes along y");
    sub->add_option("--mz", o.mz, "Modes along z");
  };

  auto* bench = app.add_subcommand("bench", "Time one kind and method");
  add_kind(bench);
  bench->add_option("--method", o.method, "implicit, explicit, pruned or all")
      ->check(CLI::IsMember({"implicit", "explicit", "pruned", "all"}));
  add_sizes(bench);
  bench->add_option("--samples", o.samples, "Timing samples (at least 4)")->check(CLI::Range(4, 1 << 20));
  add_common(bench);

  auto* accuracy = app.add_subcommand("accuracy", "Normalized L2 error of implicit and explicit methods");
  add_kind(accuracy);
  accuracy->add_option("--m-min", o.m_min, "Smallest m");
  accuracy->add_option("--m-max", o.m_max, "Largest m (m doubles from --m-min)");
  add_common(accuracy);

  auto* memory = app.add_subcommand("memory", "Storage in complex words: formula and measured allocation");
  add_kind(memory);
  add_sizes(memory);
  memory->add_option("--dims", o.dims, "Dimension tuples such as 1024x1024 or 8x8x8");
  add_common(memory);

  auto* selftest = app.add_subcommand("selftest", "Validate every kind and method on small inputs");
  add_common(selftest);

  CLI11_PARSE(app, argc, argv);

  try {
    if (bench->parsed()) return run_bench_command(o);
    if (accuracy->parsed()) return run_accuracy_command(o);
    if (memory->parsed()) return run_memory_command(o);
    return run_selftest_command(o);
  } catch (const std::exception& e) {
    std::cerr << "conv-bench: " << e.what() << '\n';
    return 1;
  }
}
