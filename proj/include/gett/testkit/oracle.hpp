#pragma once

// Brute-force reference for checking the kernel. Shares no code with the
// plan or the kernel: coordinates are decoded with div/mod on packed
// first-dimension-fastest layouts and sums are carried in long double.

#include <complex>
#include <span>
#include <vector>

#include "gett/layout.hpp"
#include "gett/plan.hpp"

namespace gett::testkit {

/// Packed tensor, first dimension fastest.
template <class T>
struct DenseTensor {
  std::vector<index_t> extents;
  std::vector<T> data;

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;
};

/// Copies the elements addressed by `view` into canonical packed order.
template <class T>
DenseTensor<T> pack(const TensorView& view, std::span<const T> buffer);

/// Direct evaluation of the contraction sum for packed operands.
/// Throws std::invalid_argument if the spec does not fit the shapes.
template <class T>
DenseTensor<T> oracle_contract(const DenseTensor<T>& a, const DenseTensor<T>& b,
                               const ContractionSpec& spec);

/// Buffer offsets addressed by a view, in packed coordinate order.
std::vector<index_t> addressed_offsets(const TensorView& view);

}  // namespace gett::testkit
