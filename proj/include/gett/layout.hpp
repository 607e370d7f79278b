#pragma once

/// \file layout.hpp
/// Strided tensor descriptors and mixed-radix coordinate iteration.
///
/// A tensor is addressed inside a flat element buffer. Element at coordinate
/// (c_0, ..., c_{r-1}) lives at `base_offset + sum_i c_i * increments[i]`.
/// Increments may be negative (the dimension is read backward) or zero (a
/// broadcast read). The canonical packed layout is first-dimension-fastest:
/// increments [1, e_0, e_0*e_1, ...].

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace gett {

using index_t = std::int64_t;

/// Thrown when an operation's structural precondition is broken by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct TensorView {
  std::vector<index_t> extents;
  std::vector<index_t> increments;
  index_t base_offset = 0;
  index_t buffer_len = 1;

  int rank() const noexcept { return static_cast<int>(extents.size()); }
};

/// Extremes of the offsets addressed by a view, relative to its base offset.
struct Footprint {
  index_t min_offset = 0;
  index_t max_offset = 0;
  bool empty = false;  // some extent is 0; nothing is addressed
};

/// Mixed-radix counter. Position 0 is the fastest digit.
class CoordCounter {
 public:
  CoordCounter() = default;
  /// All extents must be positive.
  explicit CoordCounter(std::vector<index_t> extents);

  std::span<const index_t> coords() const noexcept { return coords_; }
  std::span<const index_t> extents() const noexcept { return extents_; }
  std::size_t size() const noexcept { return coords_.size(); }
  index_t operator[](std::size_t i) const noexcept { return coords_[i]; }

  bool at_origin() const noexcept;
  void reset() noexcept;

  friend void increment_coords(CoordCounter& counter) noexcept;

 private:
  std::vector<index_t> coords_;
  std::vector<index_t> extents_;
};

/// Advances the counter by one step: digit 0 is bumped modulo its extent and
/// the carry ripples upward only while the digit just bumped wrapped to zero.
/// The last state wraps to all zeros. An empty counter is left untouched.
void increment_coords(CoordCounter& counter) noexcept;

/// Sum of coords[i] * increments[i]. Throws ContractViolation on length mismatch.
index_t linear_offset(std::span<const index_t> coords,
                      std::span<const index_t> increments);

std::vector<index_t> contiguous_increments(std::span<const index_t> extents);

/// Product of extents; 1 for rank 0.
index_t num_elements(std::span<const index_t> extents) noexcept;

Footprint footprint(const TensorView& view);

/// True when every addressed element lies inside [0, buffer_len).
bool footprint_in_bounds(const TensorView& view);

/// A view over a freshly packed buffer of the given extents.
TensorView packed_view(std::vector<index_t> extents);

}  // namespace gett
