#include "dealias/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>

#include "dealias/implicit1d.hpp"
#include "dealias/oracles.hpp"

namespace dealias {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::implicit: return "implicit";
    case Method::explicit_padded: return "explicit";
    case Method::pruned: return "pruned";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "implicit") return Method::implicit;
  if (name == "explicit") return Method::explicit_padded;
  if (name == "pruned") return Method::pruned;
  throw std::invalid_argument("unknown method '" + std::string(name) + "' (implicit, explicit, pruned)");
}

bool method_available(ConvKind kind, Method method) {
  if (method == Method::pruned) return kind == ConvKind::cconv2 || kind == ConvKind::cconv3;
  return true;
}

// --------------------------------------------------------------------------
// Analytic families

std::vector<Complex> cconv_family_input(std::size_t m, Complex amplitude) {
  std::vector<Complex> f(m);
  for (std::size_t k = 0; k < m; ++k) f[k] = amplitude * std::polar(1.0, static_cast<double>(k));
  return f;
}

std::vector<Complex> cconv_family_exact(std::size_t m) {
  const Complex F{std::sqrt(3.0), std::sqrt(7.0)}, G{std::sqrt(5.0), std::sqrt(11.0)};
  std::vector<Complex> h(m);
  for (std::size_t k = 0; k < m; ++k)
    h[k] = F * G * static_cast<double>(k + 1) * std::polar(1.0, static_cast<double>(k));
  return h;
}

std::vector<Complex> hconv_family_input(std::size_t m, double amplitude) {
  std::vector<Complex> f(m);
  for (std::size_t k = 0; k < m; ++k) f[k] = amplitude * std::polar(1.0, static_cast<double>(k));
  return f;
}

std::vector<Complex> hconv_family_exact(std::size_t m) {
  const double FG = std::sqrt(15.0);
  std::vector<Complex> h(m);
  for (std::size_t k = 0; k < m; ++k)
    h[k] = FG * static_cast<double>(2 * m - 1 - k) * std::polar(1.0, static_cast<double>(k));
  return h;
}

namespace {

// A prepared benchmark case: pristine inputs, the operands the convolution
// overwrites, and the call itself.
struct Case {
  std::vector<std::vector<Complex>> pristine;
  std::vector<ComplexBuffer*> operands;
  std::function<void()> run;
  std::size_t result_words = 0;
  std::vector<Complex> expected;  // empty when unavailable
  std::vector<std::shared_ptr<void>> keep;

  template <class T>
  T& hold(T value) {
    auto p = std::make_shared<T>(std::move(value));
    keep.push_back(p);
    return *p;
  }

  void restore() {
    for (std::size_t i = 0; i < operands.size(); ++i)
      std::copy(pristine[i].begin(), pristine[i].end(), operands[i]->begin());
  }

  std::vector<Complex> result() const {
    return {operands[0]->begin(), operands[0]->begin() + static_cast<std::ptrdiff_t>(result_words)};
  }
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}
  Complex operator()() { return {dist_(rng_), dist_(rng_)}; }
  void fill(std::span<Complex> a) {
    for (auto& z : a) z = (*this)();
  }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> dist_;
};

std::vector<Complex> to_vector(std::span<const Complex> s) { return {s.begin(), s.end()}; }

ComplexBuffer to_buffer(const std::vector<Complex>& v) {
  auto b = ComplexBuffer::uninitialized(v.size());
  std::copy(v.begin(), v.end(), b.begin());
  return b;
}

template <class Fn>
std::vector<Complex> try_oracle(Fn&& fn) {
  try {
    return fn();
  } catch (const OracleCapExceeded&) {
    return {};
  }
}

Pruning pruning_of(Method m) { return m == Method::pruned ? Pruning::pruned : Pruning::none; }

Case make_1d(const BenchConfig& c) {
  Case cs;
  const std::size_t m = c.dims.mx;
  const bool impl = c.method == Method::implicit;
  std::vector<std::vector<Complex>> in;

  if (c.kind == ConvKind::cconv) {
    in = {cconv_family_input(m, {std::sqrt(3.0), std::sqrt(7.0)}),
          cconv_family_input(m, {std::sqrt(5.0), std::sqrt(11.0)})};
    cs.expected = cconv_family_exact(m);
  } else if (c.kind == ConvKind::hconv) {
    in = {hconv_family_input(m, std::sqrt(3.0)), hconv_family_input(m, std::sqrt(5.0))};
    cs.expected = hconv_family_exact(m);
  } else {
    Generator gen(c.seed);
    in.assign(3, std::vector<Complex>(m + 1));
    for (auto& v : in) {
      gen.fill({v.data(), m});
      v[0] = v[0].real();
      v[m] = 0.0;
    }
    DirectOptions opt{c.oracle_cap};
    cs.expected = try_oracle([&] {
      return direct_tconv({in[0].data(), m}, {in[1].data(), m}, {in[2].data(), m}, opt);
    });
  }

  cs.pristine = in;
  for (auto& v : cs.pristine) cs.operands.push_back(&cs.hold(to_buffer(v)));
  cs.result_words = m;
  auto& ops = cs.operands;

  if (!impl) {
    auto& conv = cs.hold(std::make_shared<ExplicitConvolution1D>(c.kind, m, c.backend));
    if (c.kind == ConvKind::tconv)
      cs.run = [&conv, ops] { conv->convolve(ops[0]->span(), ops[1]->span(), ops[2]->span()); };
    else
      cs.run = [&conv, ops] { conv->convolve(ops[0]->span(), ops[1]->span()); };
    return cs;
  }
  switch (c.kind) {
    case ConvKind::cconv: {
      auto& conv = cs.hold(std::make_shared<ComplexConvolution>(m, 1, c.backend));
      auto& ws = cs.hold(conv->make_workspace());
      cs.run = [&conv, &ws, ops] { conv->convolve(ops[0]->span(), ops[1]->span(), ws); };
      break;
    }
    case ConvKind::hconv: {
      auto& conv = cs.hold(std::make_shared<HermitianConvolution>(m, 1, c.backend));
      auto& ws = cs.hold(conv->make_workspace());
      cs.run = [&conv, &ws, ops] { conv->convolve(ops[0]->span(), ops[1]->span(), ws); };
      break;
    }
    default: {
      auto& conv = cs.hold(std::make_shared<TernaryConvolution>(m, c.backend));
      auto& ws = cs.hold(conv->make_workspace());
      cs.run = [&conv, &ws, ops] { conv->convolve(ops[0]->span(), ops[1]->span(), ops[2]->span(), ws); };
      break;
    }
  }
  return cs;
}

Case make_2d(const BenchConfig& c) {
  Case cs;
  const std::size_t mx = c.dims.mx, my = c.dims.my;
  const FieldKind fk = c.kind == ConvKind::cconv2  ? FieldKind::standard
                       : c.kind == ConvKind::conv2 ? FieldKind::hermitian
                                                   : FieldKind::ternary;
  const std::size_t n_ops = c.kind == ConvKind::tconv2 ? 3 : 2;
  Generator gen(c.seed);
  std::vector<Field2D> in;
  for (std::size_t i = 0; i < n_ops; ++i) {
    Field2D f(fk, mx, my);
    gen.fill(f.span());
    enforce_symmetry(f);
    in.push_back(std::move(f));
  }
  DirectOptions opt{c.oracle_cap};
  cs.expected = try_oracle([&] {
    Field2D h = c.kind == ConvKind::cconv2  ? direct_cconv2(in[0], in[1], opt)
                : c.kind == ConvKind::conv2 ? direct_conv2(in[0], in[1], opt)
                                            : direct_tconv2(in[0], in[1], in[2], opt);
    return to_vector(h.span());
  });

  std::vector<Field2D*> fields;
  for (auto& f : in) {
    cs.pristine.push_back(to_vector(f.span()));
    Field2D& w = cs.hold(f);
    fields.push_back(&w);
    cs.operands.push_back(&w.buffer());
  }
  cs.result_words = in[0].size();

  if (c.method != Method::implicit) {
    auto& conv = cs.hold(std::make_shared<ExplicitConvolution2D>(c.kind, mx, my, pruning_of(c.method), c.backend));
    if (n_ops == 3)
      cs.run = [&conv, fields] { conv->convolve(*fields[0], *fields[1], *fields[2]); };
    else
      cs.run = [&conv, fields] { conv->convolve(*fields[0], *fields[1]); };
    return cs;
  }
  switch (c.kind) {
    case ConvKind::cconv2: {
      auto& conv = cs.hold(std::make_shared<ComplexConvolution2D>(mx, my, 1, c.backend));
      auto& ws = cs.hold(conv->make_workspace());
      cs.run = [&conv, &ws, fields] { conv->convolve(*fields[0], *fields[1], ws); };
      break;
    }
    case ConvKind::conv2: {
      auto& conv = cs.hold(std::make_shared<HermitianConvolution2D>(mx, my, 1, c.backend));
      auto& ws = cs.hold(conv->make_workspace());
      cs.run = [&conv, &ws, fields] { conv->convolve(*fields[0], *fields[1], ws); };
      break;
    }
    default: {
      auto& conv = cs.hold(std::make_shared<TernaryConvolution2D>(mx, my, c.backend));
      auto& ws = cs.hold(conv->make_workspace());
      cs.run = [&conv, &ws, fields] { conv->convolve(*fields[0], *fields[1], *fields[2], ws); };
      break;
    }
  }
  return cs;
}

Case make_3d(const BenchConfig& c) {
  Case cs;
  const std::size_t mx = c.dims.mx, my = c.dims.my, mz = c.dims.mz;
  const FieldKind fk = c.kind == ConvKind::cconv3 ? FieldKind::standard : FieldKind::hermitian;
  Generator gen(c.seed);
  std::vector<Field3D> in;
  for (int i = 0; i < 2; ++i) {
    Field3D f(fk, mx, my, mz);
    gen.fill(f.span());
    enforce_symmetry(f);
    in.push_back(std::move(f));
  }
  DirectOptions opt{c.oracle_cap};
  cs.expected = try_oracle([&] {
    Field3D h = c.kind == ConvKind::cconv3 ? direct_cconv3(in[0], in[1], opt) : direct_hconv3(in[0], in[1], opt);
    return to_vector(h.span());
  });

  std::vector<Field3D*> fields;
  for (auto& f : in) {
    cs.pristine.push_back(to_vector(f.span()));
    Field3D& w = cs.hold(f);
    fields.push_back(&w);
    cs.operands.push_back(&w.buffer());
  }
  cs.result_words = in[0].size();

  if (c.method != Method::implicit) {
    auto& conv =
        cs.hold(std::make_shared<ExplicitConvolution3D>(c.kind, mx, my, mz, pruning_of(c.method), c.backend));
    cs.run = [&conv, fields] { conv->convolve(*fields[0], *fields[1]); };
    return cs;
  }
  if (c.kind == ConvKind::cconv3) {
    auto& conv = cs.hold(std::make_shared<ComplexConvolution3D>(mx, my, mz, 1, c.backend));
    auto& ws = cs.hold(conv->make_workspace());
    cs.run = [&conv, &ws, fields] { conv->convolve(*fields[0], *fields[1], ws); };
  } else {
    auto& conv = cs.hold(std::make_shared<HermitianConvolution3D>(mx, my, mz, 1, c.backend));
    auto& ws = cs.hold(conv->make_workspace());
    cs.run = [&conv, &ws, fields] { conv->convolve(*fields[0], *fields[1], ws); };
  }
  return cs;
}

Case make_case(const BenchConfig& c) {
  if (!method_available(c.kind, c.method))
    throw std::invalid_argument("method " + std::string(to_string(c.method)) + " is not available for " +
                                std::string(to_string(c.kind)));
  switch (rank(c.kind)) {
    case 1: return make_1d(c);
    case 2: return make_2d(c);
    default: return make_3d(c);
  }
}

std::optional<double> case_error(const Case& cs) {
  if (cs.expected.empty()) return std::nullopt;
  return normalized_error(cs.result(), cs.expected);
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string join(std::initializer_list<std::string> fields, char sep) {
  std::string out;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out += sep;
    out += f;
    first = false;
  }
  return out;
}

}  // namespace

ConvReport run_bench(const BenchConfig& config) {
  if (config.samples < 4) throw std::invalid_argument("bench: at least 4 samples are required");
  Case cs = make_case(config);
  using clock = std::chrono::steady_clock;

  cs.restore();
  cs.run();  // warm-up

  std::vector<double> samples;
  samples.reserve(config.samples);
  for (std::size_t s = 0; s < config.samples; ++s) {
    double total = 0.0;
    std::size_t reps = 0;
    do {
      cs.restore();
      const auto t0 = clock::now();
      cs.run();
      const auto t1 = clock::now();
      total += std::chrono::duration<double>(t1 - t0).count();
      ++reps;
    } while (total < config.min_sample_seconds);
    samples.push_back(total / static_cast<double>(reps));
  }

  ConvReport r;
  r.kind = config.kind;
  r.method = config.method;
  r.dims = config.dims;
  r.stats = one_sided_stats(samples);
  r.error = case_error(cs);
  r.complex_words = config.method == Method::implicit ? implicit_words(config.kind, config.dims)
                                                      : explicit_words(config.kind, config.dims);
  return r;
}

std::vector<AccuracyRow> accuracy_sweep(ConvKind kind, std::span<const std::size_t> ms, std::uint64_t seed,
                                        Backend backend) {
  std::vector<AccuracyRow> rows;
  for (std::size_t m : ms) {
    BenchConfig c;
    c.kind = kind;
    c.dims = {m, rank(kind) >= 2 ? m : 1, rank(kind) == 3 ? m : 1};
    c.seed = seed;
    c.backend = backend;
    c.oracle_cap = std::size_t{1} << 28;
    AccuracyRow row{m, 0.0, 0.0};
    for (Method method : {Method::implicit, Method::explicit_padded}) {
      c.method = method;
      Case cs = make_case(c);
      cs.restore();
      cs.run();
      const double e = case_error(cs).value_or(std::numeric_limits<double>::quiet_NaN());
      (method == Method::implicit ? row.error_implicit : row.error_explicit) = e;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<MemoryRow> memory_table(ConvKind kind, std::span<const Dims> dims) {
  std::vector<MemoryRow> rows;
  for (const Dims& d : dims) rows.push_back({kind, d, memory_report(kind, d)});
  return rows;
}

std::string report_header(char sep) {
  return join({"kind", "method", "mx", "my", "mz", "samples", "mean_s", "sigma_lo_s", "sigma_hi_s", "error",
               "complex_words"},
              sep);
}

std::string format_report(const ConvReport& r, char sep) {
  return join({std::string(to_string(r.kind)), std::string(to_string(r.method)), std::to_string(r.dims.mx),
               std::to_string(r.dims.my), std::to_string(r.dims.mz), std::to_string(r.stats.n), num(r.stats.mean),
               num(r.stats.sigma_lo), num(r.stats.sigma_hi), r.error ? num(*r.error) : std::string(),
               std::to_string(r.complex_words)},
              sep);
}

std::string accuracy_header(char sep) { return join({"m", "error_implicit", "error_explicit"}, sep); }

std::string format_accuracy(const AccuracyRow& r, char sep) {
  return join({std::to_string(r.m), num(r.error_implicit), num(r.error_explicit)}, sep);
}

std::string memory_header(char sep) {
  return join({"kind", "mx", "my", "mz", "implicit_formula", "implicit_allocated", "explicit_formula",
               "explicit_allocated"},
              sep);
}

std::string format_memory(const MemoryRow& r, char sep) {
  return join({std::string(to_string(r.kind)), std::to_string(r.dims.mx), std::to_string(r.dims.my),
               std::to_string(r.dims.mz), std::to_string(r.report.implicit_formula),
               std::to_string(r.report.implicit_allocated), std::to_string(r.report.explicit_formula),
               std::to_string(r.report.explicit_allocated)},
              sep);
}

}  // namespace dealias
