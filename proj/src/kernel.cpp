#include "gett/kernel.hpp"

#include <vector>

namespace gett {
namespace {

template <class T>
inline void multiply_add(T& acc, const T& x, const T& y) {
  acc += x * y;
}

// (a+bi)(c+di) = (ac-bd) + (ad+bc)i, without the NaN/Inf recovery path of
// the library operator.
template <class R>
inline void multiply_add(std::complex<R>& acc, const std::complex<R>& x,
                         const std::complex<R>& y) {
  const R re = x.real() * y.real() - x.imag() * y.imag();
  const R im = x.real() * y.imag() + x.imag() * y.real();
  acc = {acc.real() + re, acc.imag() + im};
}

TensorView make_view(int rank, std::span<const index_t> ext,
                     std::span<const index_t> inc, index_t offset,
                     std::size_t buffer_len, ErrorList& errors, char name) {
  // Extents against increments is checked by validate().
  if (rank < 0 || ext.size() != static_cast<std::size_t>(rank)) {
    errors.push_back({ErrorCode::RankMismatch,
                      std::string("RANK") + name + "=" + std::to_string(rank) +
                          " with " + std::to_string(ext.size()) + " extents and " +
                          std::to_string(inc.size()) + " increments"});
  }
  TensorView v;
  v.extents.assign(ext.begin(), ext.end());
  v.increments.assign(inc.begin(), inc.end());
  v.base_offset = offset;
  v.buffer_len = static_cast<index_t>(buffer_len);
  return v;
}

}  // namespace

template <Element T>
void contract(const ContractionPlan& plan, StridedBuffer<const T> a,
              StridedBuffer<const T> b, StridedBuffer<T> c) {
  if (plan.size_free == 0) return;

  const std::size_t num_free = plan.free_table.size();
  const std::size_t num_cont = plan.cont_table.size();

  std::vector<index_t> inc_c(num_free), inc_free_a(num_free, 0),
      inc_free_b(num_free, 0);
  for (std::size_t j = 0; j < num_free; ++j) {
    const FreeDim& f = plan.free_table[j];
    inc_c[j] = f.out_increment;
    (f.owner == Operand::A ? inc_free_a : inc_free_b)[j] = f.src_increment;
  }
  std::vector<index_t> ext_cont(num_cont), inc_cont_a(num_cont), inc_cont_b(num_cont);
  for (std::size_t k = 0; k < num_cont; ++k) {
    ext_cont[k] = plan.cont_table[k].extent;
    inc_cont_a[k] = plan.cont_table[k].inc_a;
    inc_cont_b[k] = plan.cont_table[k].inc_b;
  }

  CoordCounter free_coords(plan.ext_c);
  // A zero contracted extent leaves every output element unchanged.
  const index_t size_cont = plan.size_cont;
  CoordCounter cont_coords(size_cont > 0 ? ext_cont
                                         : std::vector<index_t>(num_cont, 1));
#ifdef GETT_KERNEL_MUTATION
  const index_t terms = size_cont > 1 ? size_cont - 1 : size_cont;
#else
  const index_t terms = size_cont;
#endif

  for (index_t i = 0; i < plan.size_free; ++i) {
    const auto fc = free_coords.coords();
    const index_t idx_c = c.offset + linear_offset(fc, inc_c);
    const index_t free_idx_a = a.offset + linear_offset(fc, inc_free_a);
    const index_t free_idx_b = b.offset + linear_offset(fc, inc_free_b);

    T& out = c.data[static_cast<std::size_t>(idx_c)];
    for (index_t j = 0; j < terms; ++j) {
      const auto cc = cont_coords.coords();
      const index_t idx_a = free_idx_a + linear_offset(cc, inc_cont_a);
      const index_t idx_b = free_idx_b + linear_offset(cc, inc_cont_b);
      multiply_add(out, a.data[static_cast<std::size_t>(idx_a)],
                   b.data[static_cast<std::size_t>(idx_b)]);
      increment_coords(cont_coords);
    }
    cont_coords.reset();
    increment_coords(free_coords);
  }
}

template <Element T>
void zero_view(const TensorView& view, std::span<T> data) {
  if (num_elements(view.extents) == 0) return;
  CoordCounter coords(view.extents);
  const index_t n = num_elements(view.extents);
  for (index_t i = 0; i < n; ++i) {
    data[static_cast<std::size_t>(view.base_offset +
                                  linear_offset(coords.coords(), view.increments))] = T{};
    increment_coords(coords);
  }
}

template <Element T>
ErrorList xgett(int rank_a, std::span<const index_t> ext_a,
                std::span<const index_t> inc_a, StridedBuffer<const T> a,
                int rank_b, std::span<const index_t> ext_b,
                std::span<const index_t> inc_b, StridedBuffer<const T> b,
                int conts, std::span<const index_t> cont_a,
                std::span<const index_t> cont_b, std::span<const index_t> perm,
                std::span<const index_t> inc_c, StridedBuffer<T> c) {
  ErrorList errors;
  const TensorView va = make_view(rank_a, ext_a, inc_a, a.offset, a.data.size(), errors, 'A');
  const TensorView vb = make_view(rank_b, ext_b, inc_b, b.offset, b.data.size(), errors, 'B');

  ContractionSpec spec;
  spec.conts = conts;
  spec.cont_a.assign(cont_a.begin(), cont_a.end());
  spec.cont_b.assign(cont_b.begin(), cont_b.end());
  spec.perm.assign(perm.begin(), perm.end());

  for (auto& e : validate(va, vb, spec, inc_c, c.offset,
                          static_cast<index_t>(c.data.size()))) {
    errors.push_back(std::move(e));
  }
  if (!errors.empty()) return errors;

  contract<T>(build_plan(va, vb, spec, inc_c), a, b, c);
  return errors;
}

#define GETT_INSTANTIATE(T)                                                    \
  template void contract<T>(const ContractionPlan&, StridedBuffer<const T>,    \
                            StridedBuffer<const T>, StridedBuffer<T>);         \
  template void zero_view<T>(const TensorView&, std::span<T>);                 \
  template ErrorList xgett<T>(                                                 \
      int, std::span<const index_t>, std::span<const index_t>,                 \
      StridedBuffer<const T>, int, std::span<const index_t>,                   \
      std::span<const index_t>, StridedBuffer<const T>, int,                   \
      std::span<const index_t>, std::span<const index_t>,                      \
      std::span<const index_t>, std::span<const index_t>, StridedBuffer<T>);

GETT_INSTANTIATE(float)
GETT_INSTANTIATE(double)
GETT_INSTANTIATE(std::complex<float>)
GETT_INSTANTIATE(std::complex<double>)

#undef GETT_INSTANTIATE

#define GETT_ENTRY(prefix, T)                                                  \
  ErrorList prefix##gett(                                                      \
      int rank_a, std::span<const index_t> ext_a,                              \
      std::span<const index_t> inc_a, StridedBuffer<const T> a, int rank_b,    \
      std::span<const index_t> ext_b, std::span<const index_t> inc_b,          \
      StridedBuffer<const T> b, int conts, std::span<const index_t> cont_a,    \
      std::span<const index_t> cont_b, std::span<const index_t> perm,          \
      std::span<const index_t> inc_c, StridedBuffer<T> c) {                    \
    return xgett<T>(rank_a, ext_a, inc_a, a, rank_b, ext_b, inc_b, b, conts,   \
                    cont_a, cont_b, perm, inc_c, c);                           \
  }

GETT_ENTRY(s, float)
GETT_ENTRY(d, double)
GETT_ENTRY(c, std::complex<float>)
GETT_ENTRY(z, std::complex<double>)

#undef GETT_ENTRY

}  // namespace gett
