#pragma once

#include <complex>
#include <random>
#include <vector>

namespace testutil {

using Complex = std::complex<double>;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(12345);
  return engine;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Complex gaussian() {
  std::normal_distribution<double> n;
  return {n(rng()), n(rng())};
}

inline std::vector<Complex> gaussian_vector(std::size_t n, double scale = 1.0) {
  std::vector<Complex> v(n);
  for (auto& z : v) z = scale * gaussian();
  return v;
}

}  // namespace testutil
