#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flatwitness {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed, non-finite or shape-mismatched input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A window or weight needs a suffix sum that is zero.
class DegenerateTail : public Error {
 public:
  using Error::Error;
};

/// The sampled data does not satisfy sum_i r_i m_i = 0.
class NotARelation : public Error {
 public:
  NotARelation(std::size_t point, double residual);
  std::size_t point() const noexcept { return point_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t point_;
  double residual_;
};

/// An arc shell received no grid sample.
class GridTooCoarse : public Error {
 public:
  explicit GridTooCoarse(std::size_t shell);
  std::size_t shell() const noexcept { return shell_; }

 private:
  std::size_t shell_;
};

/// A weight that must be >= 1 is not.
class InvalidWeight : public Error {
 public:
  using Error::Error;
};

/// exp() of the synthesized log-modulus would overflow.
class ScaleOverflow : public Error {
 public:
  ScaleOverflow(double max_log_modulus, double suggested_rescale);
  double suggested_rescale() const noexcept { return suggested_rescale_; }

 private:
  double suggested_rescale_;
};

/// The function offered as an inner function is not unimodular on the circle.
class NotInner : public Error {
 public:
  explicit NotInner(double boundary_deviation);
  double boundary_deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

}  // namespace flatwitness
