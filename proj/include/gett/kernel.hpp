#pragma once

/// \file kernel.hpp
/// Reference binary tensor contraction and the typed GETT entry points.
///
/// The kernel accumulates: C[idx_c] += A[idx_a] * B[idx_b]. Callers zero the
/// output first (zero_view) for a plain contraction. Output coordinates are
/// visited in mixed-radix order over the output extents (dimension 0
/// fastest) and contracted coordinates likewise, so the summation order is
/// fixed and results are reproducible bit for bit.

#include <complex>
#include <span>

#include "gett/layout.hpp"
#include "gett/plan.hpp"

namespace gett {

enum class ElementType : char { S = 's', D = 'd', C = 'c', Z = 'z' };

template <class T>
struct element_traits;
template <>
struct element_traits<float> {
  static constexpr ElementType tag = ElementType::S;
  using real_type = float;
};
template <>
struct element_traits<double> {
  static constexpr ElementType tag = ElementType::D;
  using real_type = double;
};
template <>
struct element_traits<std::complex<float>> {
  static constexpr ElementType tag = ElementType::C;
  using real_type = float;
};
template <>
struct element_traits<std::complex<double>> {
  static constexpr ElementType tag = ElementType::Z;
  using real_type = double;
};

template <class T>
concept Element = requires { element_traits<T>::tag; };

/// Element buffer plus the index of the first used element.
template <class T>
struct StridedBuffer {
  std::span<T> data;
  index_t offset = 0;
};

/// Runs the contraction described by a validated plan.
template <Element T>
void contract(const ContractionPlan& plan, StridedBuffer<const T> a,
              StridedBuffer<const T> b, StridedBuffer<T> c);

/// Sets every element addressed by `view` to zero, leaving the rest of the
/// buffer untouched.
template <Element T>
void zero_view(const TensorView& view, std::span<T> data);

/// Generic GETT. Arguments follow the order
/// RANKA, EXTA, INCA, A, RANKB, EXTB, INCB, B, CONTS, CONTA, CONTB, PERM, INCC, C.
/// Returns the validation errors; C is written only when the list is empty.
template <Element T>
ErrorList xgett(int rank_a, std::span<const index_t> ext_a,
                std::span<const index_t> inc_a, StridedBuffer<const T> a,
                int rank_b, std::span<const index_t> ext_b,
                std::span<const index_t> inc_b, StridedBuffer<const T> b,
                int conts, std::span<const index_t> cont_a,
                std::span<const index_t> cont_b, std::span<const index_t> perm,
                std::span<const index_t> inc_c, StridedBuffer<T> c);

ErrorList sgett(int rank_a, std::span<const index_t> ext_a,
                std::span<const index_t> inc_a, StridedBuffer<const float> a,
                int rank_b, std::span<const index_t> ext_b,
                std::span<const index_t> inc_b, StridedBuffer<const float> b,
                int conts, std::span<const index_t> cont_a,
                std::span<const index_t> cont_b, std::span<const index_t> perm,
                std::span<const index_t> inc_c, StridedBuffer<float> c);

ErrorList dgett(int rank_a, std::span<const index_t> ext_a,
                std::span<const index_t> inc_a, StridedBuffer<const double> a,
                int rank_b, std::span<const index_t> ext_b,
                std::span<const index_t> inc_b, StridedBuffer<const double> b,
                int conts, std::span<const index_t> cont_a,
                std::span<const index_t> cont_b, std::span<const index_t> perm,
                std::span<const index_t> inc_c, StridedBuffer<double> c);

ErrorList cgett(int rank_a, std::span<const index_t> ext_a,
                std::span<const index_t> inc_a,
                StridedBuffer<const std::complex<float>> a, int rank_b,
                std::span<const index_t> ext_b, std::span<const index_t> inc_b,
                StridedBuffer<const std::complex<float>> b, int conts,
                std::span<const index_t> cont_a, std::span<const index_t> cont_b,
                std::span<const index_t> perm, std::span<const index_t> inc_c,
                StridedBuffer<std::complex<float>> c);

ErrorList zgett(int rank_a, std::span<const index_t> ext_a,
                std::span<const index_t> inc_a,
                StridedBuffer<const std::complex<double>> a, int rank_b,
                std::span<const index_t> ext_b, std::span<const index_t> inc_b,
                StridedBuffer<const std::complex<double>> b, int conts,
                std::span<const index_t> cont_a, std::span<const index_t> cont_b,
                std::span<const index_t> perm, std::span<const index_t> inc_c,
                StridedBuffer<std::complex<double>> c);

/// Convenience wrapper taking views instead of the flat argument list.
template <Element T>
ErrorList xgett(const TensorView& a_view, std::span<const T> a,
                const TensorView& b_view, std::span<const T> b,
                const ContractionSpec& spec, std::span<const index_t> inc_c,
                index_t c_offset, std::span<T> c) {
  return xgett<T>(a_view.rank(), a_view.extents, a_view.increments,
                  {a, a_view.base_offset}, b_view.rank(), b_view.extents,
                  b_view.increments, {b, b_view.base_offset}, spec.conts,
                  spec.cont_a, spec.cont_b, spec.perm, inc_c, {c, c_offset});
}

}  // namespace gett
