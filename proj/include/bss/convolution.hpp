#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace bss {

enum class ConvolutionMethod { Automatic, Direct, Fft };

/// Evaluates a window of the linear convolution
///   (f * x)_c = sum_k f_k x_{c-k},   c = first, ..., first + count - 1,
/// for a fixed filter f and signals x of fixed length. The filter transform
/// is computed once and reused for every signal.
///
/// Direct summation runs k upward from 0, so small problems reproduce a
/// hand-written loop exactly. FFT sizes are powers of two large enough that
/// no circular wrap reaches the requested window.
class WindowedConvolver {
 public:
  WindowedConvolver(std::vector<double> filter, std::size_t signal_length, std::size_t first,
                    std::size_t count, ConvolutionMethod method = ConvolutionMethod::Automatic);
  ~WindowedConvolver();
  WindowedConvolver(WindowedConvolver&&) noexcept;
  WindowedConvolver& operator=(WindowedConvolver&&) noexcept;

  /// out.size() must equal count(); signal.size() must equal signal_length().
  void apply(std::span<const double> signal, std::span<double> out) const;

  std::size_t signal_length() const { return signal_length_; }
  std::size_t count() const { return count_; }
  std::size_t fft_size() const { return fft_size_; }
  bool uses_fft() const { return fft_size_ != 0; }

 private:
  struct FftState;

  std::vector<double> filter_;
  std::size_t signal_length_;
  std::size_t first_;
  std::size_t count_;
  std::size_t fft_size_ = 0;
  std::unique_ptr<FftState> fft_;
};

/// Smallest power of two >= n (n >= 1).
std::size_t next_power_of_two(std::size_t n);

}  // namespace bss
