#include "gett/testkit/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gett::testkit {
namespace {

template <class T>
struct wide {
  using type = long double;
};
template <class R>
struct wide<std::complex<R>> {
  using type = std::complex<long double>;
};

inline void mul_add(long double& acc, long double x, long double y) { acc += x * y; }
inline void mul_add(std::complex<long double>& acc, std::complex<long double> x,
                    std::complex<long double> y) {
  acc = {acc.real() + (x.real() * y.real() - x.imag() * y.imag()),
         acc.imag() + (x.real() * y.imag() + x.imag() * y.real())};
}

template <class T>
T narrow(long double x) {
  return static_cast<T>(x);
}
template <class T>
T narrow(std::complex<long double> x) {
  using R = typename T::value_type;
  return T(static_cast<R>(x.real()), static_cast<R>(x.imag()));
}

index_t product(const std::vector<index_t>& xs) {
  index_t p = 1;
  for (index_t x : xs) p *= x;
  return p;
}

// Writes the coordinates of packed position `linear` into `out`.
void decode(index_t linear, const std::vector<index_t>& extents,
            std::vector<index_t>& out) {
  out.resize(extents.size());
  for (std::size_t d = 0; d < extents.size(); ++d) {
    out[d] = linear % extents[d];
    linear /= extents[d];
  }
}

index_t encode(const std::vector<index_t>& coords, const std::vector<index_t>& extents) {
  index_t linear = 0;
  for (std::size_t d = extents.size(); d-- > 0;) linear = linear * extents[d] + coords[d];
  return linear;
}

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("oracle_contract: " + what);
}

}  // namespace

std::vector<index_t> addressed_offsets(const TensorView& view) {
  const index_t n = product(view.extents);
  std::vector<index_t> offsets;
  offsets.reserve(static_cast<std::size_t>(std::max<index_t>(n, 0)));
  // Odometer with carries, digit 0 fastest; the offset is updated in place.
  std::vector<index_t> coords(view.extents.size(), 0);
  index_t off = view.base_offset;
  for (index_t i = 0; i < n; ++i) {
    offsets.push_back(off);
    for (std::size_t d = 0; d < coords.size(); ++d) {
      off += view.increments[d];
      if (++coords[d] < view.extents[d]) break;
      off -= coords[d] * view.increments[d];
      coords[d] = 0;
    }
  }
  return offsets;
}

template <class T>
DenseTensor<T> pack(const TensorView& view, std::span<const T> buffer) {
  DenseTensor<T> out;
  out.extents = view.extents;
  for (index_t off : addressed_offsets(view)) {
    out.data.push_back(buffer[static_cast<std::size_t>(off)]);
  }
  return out;
}

template <class T>
DenseTensor<T> oracle_contract(const DenseTensor<T>& a, const DenseTensor<T>& b,
                               const ContractionSpec& spec) {
  using W = typename wide<T>::type;
  const auto rank_a = static_cast<index_t>(a.extents.size());
  const auto rank_b = static_cast<index_t>(b.extents.size());
  const index_t conts = spec.conts;
  if (conts < 0 || conts > rank_a || conts > rank_b ||
      static_cast<index_t>(spec.cont_a.size()) != conts ||
      static_cast<index_t>(spec.cont_b.size()) != conts) {
    bad("contraction count");
  }
  if (static_cast<index_t>(a.data.size()) != product(a.extents) ||
      static_cast<index_t>(b.data.size()) != product(b.extents)) {
    bad("data length does not match extents");
  }

  // role[d] >= 0: contracted pair index; role[d] < 0: free, -1 - free index.
  std::vector<index_t> role_a(static_cast<std::size_t>(rank_a), -1);
  std::vector<index_t> role_b(static_cast<std::size_t>(rank_b), -1);
  std::vector<index_t> ext_k(static_cast<std::size_t>(conts));
  for (index_t k = 0; k < conts; ++k) {
    const index_t da = spec.cont_a[k], db = spec.cont_b[k];
    if (da < 0 || da >= rank_a || db < 0 || db >= rank_b) bad("contracted index out of range");
    if (role_a[da] >= 0 || role_b[db] >= 0) bad("contracted index repeated");
    if (a.extents[da] != b.extents[db]) bad("contracted extents differ");
    role_a[da] = k;
    role_b[db] = k;
    ext_k[k] = a.extents[da];
  }

  const index_t rank_c = rank_a + rank_b - 2 * conts;
  if (static_cast<index_t>(spec.perm.size()) != rank_c) bad("permutation length");
  std::vector<index_t> ext_c(static_cast<std::size_t>(rank_c), -1);
  index_t free_index = 0;
  auto assign_free = [&](std::vector<index_t>& role, const std::vector<index_t>& ext) {
    for (std::size_t d = 0; d < role.size(); ++d) {
      if (role[d] >= 0) continue;
      const index_t pos = spec.perm[static_cast<std::size_t>(free_index)];
      if (pos < 0 || pos >= rank_c || ext_c[pos] != -1) bad("permutation is not a bijection");
      ext_c[pos] = ext[d];
      role[d] = -1 - pos;  // free dims remember their output position
      ++free_index;
    }
  };
  assign_free(role_a, a.extents);
  assign_free(role_b, b.extents);

  DenseTensor<T> c;
  c.extents = ext_c;
  const index_t n_out = product(ext_c);
  const index_t n_cont = product(ext_k);
  c.data.resize(static_cast<std::size_t>(n_out));

  std::vector<index_t> out_coord, cont_coord;
  std::vector<index_t> a_coord(static_cast<std::size_t>(rank_a)),
      b_coord(static_cast<std::size_t>(rank_b));
  for (index_t o = 0; o < n_out; ++o) {
    decode(o, ext_c, out_coord);
    W sum{};
    for (index_t t = 0; t < n_cont; ++t) {
      decode(t, ext_k, cont_coord);
      for (index_t d = 0; d < rank_a; ++d) {
        a_coord[d] = role_a[d] >= 0 ? cont_coord[role_a[d]] : out_coord[-1 - role_a[d]];
      }
      for (index_t d = 0; d < rank_b; ++d) {
        b_coord[d] = role_b[d] >= 0 ? cont_coord[role_b[d]] : out_coord[-1 - role_b[d]];
      }
      mul_add(sum, W(a.data[encode(a_coord, a.extents)]), W(b.data[encode(b_coord, b.extents)]));
    }
    c.data[o] = narrow<T>(sum);
  }
  return c;
}

#define GETT_ORACLE_INSTANTIATE(T)                                                  \
  template DenseTensor<T> pack<T>(const TensorView&, std::span<const T>);         \
  template DenseTensor<T> oracle_contract<T>(const DenseTensor<T>&,               \
                                             const DenseTensor<T>&,               \
                                             const ContractionSpec&);

GETT_ORACLE_INSTANTIATE(float)
GETT_ORACLE_INSTANTIATE(double)
GETT_ORACLE_INSTANTIATE(std::complex<float>)
GETT_ORACLE_INSTANTIATE(std::complex<double>)

#undef GETT_ORACLE_INSTANTIATE

}  // namespace gett::testkit
