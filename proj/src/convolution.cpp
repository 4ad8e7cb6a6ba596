#include "bss/convolution.hpp"

#include <algorithm>
#include <complex>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace bss {

namespace {

// FFTW's planner is not re-entrant; execution with the new-array interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

constexpr std::size_t kDirectWorkLimit = 1u << 15;

struct RealBuffer {
  explicit RealBuffer(std::size_t n) : data(fftw_alloc_real(n)) {
    if (!data) throw std::bad_alloc();
  }
  ~RealBuffer() { fftw_free(data); }
  RealBuffer(const RealBuffer&) = delete;
  RealBuffer& operator=(const RealBuffer&) = delete;
  double* data;
};

struct ComplexBuffer {
  explicit ComplexBuffer(std::size_t n) : data(fftw_alloc_complex(n)) {
    if (!data) throw std::bad_alloc();
  }
  ~ComplexBuffer() { fftw_free(data); }
  ComplexBuffer(const ComplexBuffer&) = delete;
  ComplexBuffer& operator=(const ComplexBuffer&) = delete;
  fftw_complex* data;
};

}  // namespace

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

struct WindowedConvolver::FftState {
  std::size_t size = 0;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  std::vector<std::complex<double>> filter_hat;

  ~FftState() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

WindowedConvolver::WindowedConvolver(std::vector<double> filter, std::size_t signal_length,
                                     std::size_t first, std::size_t count, ConvolutionMethod method)
    : filter_(std::move(filter)), signal_length_(signal_length), first_(first), count_(count) {
  if (filter_.empty()) throw std::invalid_argument("WindowedConvolver: empty filter");
  if (signal_length_ == 0) throw std::invalid_argument("WindowedConvolver: empty signal");

  if (method == ConvolutionMethod::Automatic) {
    method = filter_.size() * count_ <= kDirectWorkLimit ? ConvolutionMethod::Direct
                                                         : ConvolutionMethod::Fft;
  }
  if (method == ConvolutionMethod::Direct) return;

  // Wrapped indices c - k + L must land past the signal for every output c.
  const std::size_t reach = signal_length_ + filter_.size() - 1;
  const std::size_t needed = std::max(reach > first_ ? reach - first_ : 1, first_ + count_);
  fft_size_ = next_power_of_two(std::max<std::size_t>(needed, 2));

  fft_ = std::make_unique<FftState>();
  fft_->size = fft_size_;
  const std::size_t bins = fft_size_ / 2 + 1;
  RealBuffer real(fft_size_);
  ComplexBuffer spectrum(bins);
  {
    std::lock_guard lock(planner_mutex());
    fft_->forward = fftw_plan_dft_r2c_1d(static_cast<int>(fft_size_), real.data, spectrum.data,
                                         FFTW_ESTIMATE);
    fft_->backward = fftw_plan_dft_c2r_1d(static_cast<int>(fft_size_), spectrum.data, real.data,
                                          FFTW_ESTIMATE);
  }
  if (!fft_->forward || !fft_->backward) throw std::runtime_error("FFTW planning failed");

  std::fill(real.data, real.data + fft_size_, 0.0);
  std::copy(filter_.begin(), filter_.end(), real.data);
  fftw_execute_dft_r2c(fft_->forward, real.data, spectrum.data);
  fft_->filter_hat.resize(bins);
  for (std::size_t j = 0; j < bins; ++j) {
    fft_->filter_hat[j] = {spectrum.data[j][0], spectrum.data[j][1]};
  }
}

WindowedConvolver::~WindowedConvolver() = default;
WindowedConvolver::WindowedConvolver(WindowedConvolver&&) noexcept = default;
WindowedConvolver& WindowedConvolver::operator=(WindowedConvolver&&) noexcept = default;

void WindowedConvolver::apply(std::span<const double> signal, std::span<double> out) const {
  if (signal.size() != signal_length_) throw std::invalid_argument("convolution: signal length mismatch");
  if (out.size() != count_) throw std::invalid_argument("convolution: output length mismatch");

  if (!fft_) {
    for (std::size_t j = 0; j < count_; ++j) {
      const std::size_t c = first_ + j;
      double acc = 0.0;
      for (std::size_t k = 0; k < filter_.size() && k <= c; ++k) {
        const std::size_t idx = c - k;
        if (idx < signal_length_) acc += filter_[k] * signal[idx];
      }
      out[j] = acc;
    }
    return;
  }

  const std::size_t bins = fft_size_ / 2 + 1;
  RealBuffer real(fft_size_);
  ComplexBuffer spectrum(bins);
  std::copy(signal.begin(), signal.end(), real.data);
  std::fill(real.data + signal_length_, real.data + fft_size_, 0.0);
  fftw_execute_dft_r2c(fft_->forward, real.data, spectrum.data);
  for (std::size_t j = 0; j < bins; ++j) {
    const std::complex<double> v =
        std::complex<double>(spectrum.data[j][0], spectrum.data[j][1]) * fft_->filter_hat[j];
    spectrum.data[j][0] = v.real();
    spectrum.data[j][1] = v.imag();
  }
  fftw_execute_dft_c2r(fft_->backward, spectrum.data, real.data);
  const double scale = 1.0 / static_cast<double>(fft_size_);
  for (std::size_t j = 0; j < count_; ++j) out[j] = real.data[first_ + j] * scale;
}

}  // namespace bss
