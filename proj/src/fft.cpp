#include "flatwitness/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

namespace flatwitness {

namespace {

// FFTW's planner is not thread-safe; execution is.
std::mutex planner_mutex;

std::vector<Complex> transform(std::span<const Complex> in, int sign) {
  const int n = static_cast<int>(in.size());
  std::vector<Complex> out(in.size());
  if (n == 0) return out;
  auto* buf_in = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * in.size()));
  auto* buf_out = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * in.size()));
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex);
    plan = fftw_plan_dft_1d(n, buf_in, buf_out, sign, FFTW_ESTIMATE);
  }
  std::copy(in.begin(), in.end(), reinterpret_cast<Complex*>(buf_in));
  fftw_execute(plan);
  std::copy_n(reinterpret_cast<Complex*>(buf_out), in.size(), out.begin());
  {
    std::lock_guard lock(planner_mutex);
    fftw_destroy_plan(plan);
  }
  fftw_free(buf_in);
  fftw_free(buf_out);
  return out;
}

}  // namespace

std::vector<Complex> fft_forward(std::span<const Complex> samples) {
  auto out = transform(samples, FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(samples.size());
  for (Complex& c : out) c *= scale;
  return out;
}

std::vector<Complex> fft_inverse(std::span<const Complex> coefficients) {
  return transform(coefficients, FFTW_BACKWARD);
}

}  // namespace flatwitness
