#pragma once

#include <string>
#include <vector>

#include "gett/testkit/oracle.hpp"

namespace gett::testkit {

struct Comparison {
  enum class Mode { Exact, Relative } mode = Mode::Exact;
  double tol = 0.0;

  static Comparison exact() { return {}; }
  static Comparison relative(double tol) { return {Mode::Relative, tol}; }
};

struct CompareResult {
  bool pass = true;
  std::vector<index_t> first_mismatch;  // coordinates of the first failing element
  std::string message;

  explicit operator bool() const noexcept { return pass; }
};

/// Exact: bitwise equality per element. Relative: |x - y| <= tol * max(1, |y|)
/// per element, with |.| the modulus for complex values. Throws
/// std::invalid_argument when extents differ.
template <class T>
CompareResult compare(const DenseTensor<T>& x, const DenseTensor<T>& y,
                      Comparison mode);

}  // namespace gett::testkit
