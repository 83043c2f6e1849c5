#include "dealias/buffer.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <new>

namespace dealias {
namespace {

constexpr std::size_t kAlignment = 64;

std::atomic<std::size_t> g_live{0};
std::atomic<std::size_t> g_peak{0};

void note_alloc(std::size_t words) noexcept {
  const std::size_t now = g_live.fetch_add(words) + words;
  std::size_t peak = g_peak.load();
  while (now > peak && !g_peak.compare_exchange_weak(peak, now)) {
  }
}

Complex* allocate(std::size_t n) {
  if (n == 0) return nullptr;
  std::size_t bytes = n * sizeof(Complex);
  bytes = (bytes + kAlignment - 1) / kAlignment * kAlignment;
  void* p = std::aligned_alloc(kAlignment, bytes);
  if (p == nullptr) throw std::bad_alloc();
  note_alloc(n);
  return static_cast<Complex*>(p);
}

}  // namespace

ComplexBuffer::ComplexBuffer(std::size_t n, NoInit) : data_(allocate(n)), size_(n) {}

ComplexBuffer::ComplexBuffer(std::size_t n) : ComplexBuffer(n, NoInit{}) {
  std::fill_n(data_, size_, Complex{});
}

ComplexBuffer ComplexBuffer::uninitialized(std::size_t n) { return ComplexBuffer(n, NoInit{}); }

ComplexBuffer::ComplexBuffer(const ComplexBuffer& other) : ComplexBuffer(other.size_, NoInit{}) {
  std::copy_n(other.data_, size_, data_);
}

ComplexBuffer& ComplexBuffer::operator=(const ComplexBuffer& other) {
  if (this != &other) {
    ComplexBuffer copy(other);
    *this = std::move(copy);
  }
  return *this;
}

ComplexBuffer::ComplexBuffer(ComplexBuffer&& other) noexcept
    : data_(other.data_), size_(other.size_) {
  other.data_ = nullptr;
  other.size_ = 0;
}

ComplexBuffer& ComplexBuffer::operator=(ComplexBuffer&& other) noexcept {
  if (this != &other) {
    release();
    data_ = other.data_;
    size_ = other.size_;
    other.data_ = nullptr;
    other.size_ = 0;
  }
  return *this;
}

ComplexBuffer::~ComplexBuffer() { release(); }

void ComplexBuffer::release() noexcept {
  if (data_ != nullptr) {
    std::free(data_);
    g_live.fetch_sub(size_);
  }
  data_ = nullptr;
  size_ = 0;
}

void ComplexBuffer::fill(Complex value) noexcept { std::fill_n(data_, size_, value); }

namespace memory {

std::size_t live_words() noexcept { return g_live.load(); }
std::size_t peak_words() noexcept { return g_peak.load(); }
void reset_peak() noexcept { g_peak.store(g_live.load()); }

}  // namespace memory
}  // namespace dealias
