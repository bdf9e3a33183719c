#pragma once

#include <complex>
#include <span>
#include <vector>

namespace flatwitness {

using Complex = std::complex<double>;

/// c_m = (1/N) sum_j x_j e^{-2 pi i m j / N}, in FFT index order.
std::vector<Complex> fft_forward(std::span<const Complex> samples);

/// x_j = sum_m c_m e^{2 pi i m j / N}; inverse of fft_forward.
std::vector<Complex> fft_inverse(std::span<const Complex> coefficients);

}  // namespace flatwitness
