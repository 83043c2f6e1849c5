#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace dealias {

using Complex = std::complex<double>;

// Owning, contiguous, 64-byte aligned storage for complex words.
//
// Every ComplexBuffer allocation is reported to the process-wide word counter
// in dealias::memory, which is how memory accounting is verified against the
// closed-form word counts. Root-of-unity tables and backend plan storage are
// deliberately kept out of this type.
class ComplexBuffer {
 public:
  ComplexBuffer() noexcept = default;
  // Zero-filled.
  explicit ComplexBuffer(std::size_t n);
  // Contents undefined until written; used for work arrays.
  static ComplexBuffer uninitialized(std::size_t n);

  ComplexBuffer(const ComplexBuffer& other);
  ComplexBuffer& operator=(const ComplexBuffer& other);
  ComplexBuffer(ComplexBuffer&& other) noexcept;
  ComplexBuffer& operator=(ComplexBuffer&& other) noexcept;
  ~ComplexBuffer();

  Complex* data() noexcept { return data_; }
  const Complex* data() const noexcept { return data_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  Complex& operator[](std::size_t i) noexcept { return data_[i]; }
  const Complex& operator[](std::size_t i) const noexcept { return data_[i]; }

  Complex* begin() noexcept { return data_; }
  Complex* end() noexcept { return data_ + size_; }
  const Complex* begin() const noexcept { return data_; }
  const Complex* end() const noexcept { return data_ + size_; }

  std::span<Complex> span() noexcept { return {data_, size_}; }
  std::span<const Complex> span() const noexcept { return {data_, size_}; }
  operator std::span<Complex>() noexcept { return span(); }
  operator std::span<const Complex>() const noexcept { return span(); }

  void fill(Complex value) noexcept;

 private:
  struct NoInit {};
  ComplexBuffer(std::size_t n, NoInit);
  void release() noexcept;

  Complex* data_ = nullptr;
  std::size_t size_ = 0;
};

namespace memory {

// Complex words currently held by live ComplexBuffer objects.
std::size_t live_words() noexcept;
// High-water mark of live_words() since the last reset_peak().
std::size_t peak_words() noexcept;
void reset_peak() noexcept;

// Measures the words allocated by ComplexBuffers created (and still alive)
// inside the scope.
class AllocationProbe {
 public:
  AllocationProbe() noexcept : start_(live_words()) {}
  std::size_t words() const noexcept { return live_words() - start_; }

 private:
  std::size_t start_;
};

}  // namespace memory

}  // namespace dealias
