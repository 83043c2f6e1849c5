#include <stdexcept>
#include <string>
#include <vector>

#include "dealias/implicit_nd.hpp"
#include "dealias/oracles.hpp"

namespace dealias {

std::string_view to_string(ConvKind kind) {
  switch (kind) {
    case ConvKind::cconv: return "cconv";
    case ConvKind::hconv: return "hconv";
    case ConvKind::tconv: return "tconv";
    case ConvKind::cconv2: return "cconv2";
    case ConvKind::conv2: return "conv2";
    case ConvKind::cconv3: return "cconv3";
    case ConvKind::hconv3: return "hconv3";
    case ConvKind::tconv2: return "tconv2";
  }
  return "unknown";
}

ConvKind parse_conv_kind(std::string_view name) {
  for (ConvKind k : {ConvKind::cconv, ConvKind::hconv, ConvKind::tconv, ConvKind::cconv2, ConvKind::conv2,
                     ConvKind::cconv3, ConvKind::hconv3, ConvKind::tconv2})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown convolution kind '" + std::string(name) + "'");
}

std::size_t rank(ConvKind kind) {
  switch (kind) {
    case ConvKind::cconv:
    case ConvKind::hconv:
    case ConvKind::tconv: return 1;
    case ConvKind::cconv2:
    case ConvKind::conv2:
    case ConvKind::tconv2: return 2;
    case ConvKind::cconv3:
    case ConvKind::hconv3: return 3;
  }
  return 0;
}

std::size_t implicit_words(ConvKind kind, const Dims& d) {
  const std::size_t x = d.mx, y = d.my, z = d.mz;
  switch (kind) {
    case ConvKind::cconv: return 4 * x;
    case ConvKind::hconv: return 3 * x + 2;
    case ConvKind::tconv: return 6 * (x + 1);
    case ConvKind::cconv2: return 4 * x * y + 2 * y;
    case ConvKind::conv2: return 6 * x * y + y + 2;
    case ConvKind::cconv3: return 4 * x * y * z + 2 * y * z + 2 * z;
    case ConvKind::hconv3: return 12 * x * y * z - 6 * x * z + 2 * y * z + z + 2;
    case ConvKind::tconv2: return 12 * x * y + 12 * x + 3 * y + 3;
  }
  throw std::invalid_argument("implicit_words: unknown kind");
}

std::size_t explicit_words(ConvKind kind, const Dims& d) {
  const std::size_t x = d.mx, y = d.my, z = d.mz;
  switch (kind) {
    case ConvKind::cconv: return 4 * x;
    case ConvKind::hconv: return 3 * x + 2;
    case ConvKind::tconv: return 3 * (2 * x + 1);
    case ConvKind::cconv2: return 8 * x * y;
    case ConvKind::conv2: return 9 * x * y - 6 * y;
    case ConvKind::cconv3: return 16 * x * y * z;
    case ConvKind::hconv3: return 27 * x * y * z;
    case ConvKind::tconv2: return 24 * x * y + 12 * x;
  }
  throw std::invalid_argument("explicit_words: unknown kind");
}

namespace {

// Words held by the user operands plus the workspace of the implicit method.
template <class Conv>
std::size_t allocated(const Conv& conv, std::size_t operand_words, std::size_t operands) {
  memory::AllocationProbe probe;
  auto ws = conv.make_workspace();
  std::vector<ComplexBuffer> fields;
  for (std::size_t i = 0; i < operands; ++i) fields.push_back(ComplexBuffer::uninitialized(operand_words));
  return probe.words();
}

std::size_t implicit_allocated(ConvKind kind, const Dims& d) {
  const std::size_t x = d.mx, y = d.my, z = d.mz;
  switch (kind) {
    case ConvKind::cconv: return allocated(ComplexConvolution(x), x, 2);
    case ConvKind::hconv: return allocated(HermitianConvolution(x), x, 2);
    case ConvKind::tconv: return allocated(TernaryConvolution(x), x + 1, 3);
    case ConvKind::cconv2: {
      ComplexConvolution2D c(x, y);
      return allocated(c, c.field_size(), 2);
    }
    case ConvKind::conv2: {
      HermitianConvolution2D c(x, y);
      return allocated(c, c.field_size(), 2);
    }
    case ConvKind::cconv3: {
      ComplexConvolution3D c(x, y, z);
      return allocated(c, c.field_size(), 2);
    }
    case ConvKind::hconv3: {
      HermitianConvolution3D c(x, y, z);
      return allocated(c, c.field_size(), 2);
    }
    case ConvKind::tconv2: {
      TernaryConvolution2D c(x, y);
      return allocated(c, c.field_size(), 3);
    }
  }
  throw std::invalid_argument("memory_report: unknown kind");
}

std::size_t explicit_allocated(ConvKind kind, const Dims& d) {
  memory::AllocationProbe probe;
  switch (rank(kind)) {
    case 1: {
      ExplicitConvolution1D c(kind, d.mx);
      return probe.words();
    }
    case 2: {
      ExplicitConvolution2D c(kind, d.mx, d.my);
      return probe.words();
    }
    default: {
      ExplicitConvolution3D c(kind, d.mx, d.my, d.mz);
      return probe.words();
    }
  }
}

}  // namespace

MemoryReport memory_report(ConvKind kind, const Dims& d) {
  if (d.mx == 0 || d.my == 0 || d.mz == 0) throw std::invalid_argument("memory_report: dimensions must be positive");
  MemoryReport r;
  r.implicit_formula = implicit_words(kind, d);
  r.explicit_formula = explicit_words(kind, d);
  r.implicit_allocated = implicit_allocated(kind, d);
  r.explicit_allocated = explicit_allocated(kind, d);
  return r;
}

}  // namespace dealias
