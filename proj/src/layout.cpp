#include "gett/layout.hpp"

#include <algorithm>
#include <string>

namespace gett {

CoordCounter::CoordCounter(std::vector<index_t> extents)
    : coords_(extents.size(), 0), extents_(std::move(extents)) {
  for (index_t e : extents_) {
    if (e <= 0) {
      throw ContractViolation("CoordCounter: extents must be positive, got " +
                              std::to_string(e));
    }
  }
}

bool CoordCounter::at_origin() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](index_t c) { return c == 0; });
}

void CoordCounter::reset() noexcept { std::fill(coords_.begin(), coords_.end(), 0); }

void increment_coords(CoordCounter& counter) noexcept {
  auto& coords = counter.coords_;
  const auto& exts = counter.extents_;
  const std::size_t n = coords.size();
  if (n == 0) return;
  std::size_t i = 0;
  do {
    coords[i] = (coords[i] + 1) % exts[i];
    ++i;
  } while (coords[i - 1] == 0 && i < n);
}

index_t linear_offset(std::span<const index_t> coords,
                      std::span<const index_t> increments) {
  if (coords.size() != increments.size()) {
    throw ContractViolation("linear_offset: " + std::to_string(coords.size()) +
                            " coordinates against " +
                            std::to_string(increments.size()) + " increments");
  }
  index_t off = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) off += coords[i] * increments[i];
  return off;
}

std::vector<index_t> contiguous_increments(std::span<const index_t> extents) {
  std::vector<index_t> inc(extents.size());
  index_t stride = 1;
  for (std::size_t i = 0; i < extents.size(); ++i) {
    inc[i] = stride;
    stride *= extents[i];
  }
  return inc;
}

index_t num_elements(std::span<const index_t> extents) noexcept {
  index_t n = 1;
  for (index_t e : extents) n *= e;
  return n;
}

Footprint footprint(const TensorView& view) {
  if (view.extents.size() != view.increments.size()) {
    throw ContractViolation("footprint: extents and increments differ in length");
  }
  Footprint fp;
  for (std::size_t i = 0; i < view.extents.size(); ++i) {
    const index_t ext = view.extents[i];
    const index_t inc = view.increments[i];
    if (ext <= 0) {
      fp.empty = true;
      continue;
    }
    if (inc < 0) {
      fp.min_offset += inc * (ext - 1);
    } else {
      fp.max_offset += inc * (ext - 1);
    }
  }
  return fp;
}

bool footprint_in_bounds(const TensorView& view) {
  const Footprint fp = footprint(view);
  if (fp.empty) return true;
  return view.base_offset + fp.min_offset >= 0 &&
         view.base_offset + fp.max_offset < view.buffer_len;
}

TensorView packed_view(std::vector<index_t> extents) {
  TensorView v;
  v.increments = contiguous_increments(extents);
  v.buffer_len = std::max<index_t>(1, num_elements(extents));
  v.extents = std::move(extents);
  return v;
}

}  // namespace gett
