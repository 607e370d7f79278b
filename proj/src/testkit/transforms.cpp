#include "gett/testkit/transforms.hpp"

#include <complex>

namespace gett::testkit {

ContractionSpec swap_operands(const ContractionSpec& spec, int rank_a, int rank_b) {
  const auto free_a = static_cast<std::size_t>(rank_a - spec.conts);
  const auto free_b = static_cast<std::size_t>(rank_b - spec.conts);
  ContractionSpec out;
  out.conts = spec.conts;
  out.cont_a = spec.cont_b;
  out.cont_b = spec.cont_a;
  out.perm.resize(free_a + free_b);
  for (std::size_t i = 0; i < free_b; ++i) out.perm[i] = spec.perm[free_a + i];
  for (std::size_t i = 0; i < free_a; ++i) out.perm[free_b + i] = spec.perm[i];
  return out;
}

std::vector<index_t> rotation_map(int rank_c, int shift) {
  std::vector<index_t> sigma(static_cast<std::size_t>(rank_c));
  for (int p = 0; p < rank_c; ++p) {
    sigma[static_cast<std::size_t>(p)] = ((p - shift) % rank_c + rank_c) % rank_c;
  }
  return sigma;
}

ContractionSpec rotate_output(const ContractionSpec& spec, int shift) {
  ContractionSpec out = spec;
  const auto n = static_cast<int>(spec.perm.size());
  if (n == 0) return out;
  const auto sigma = rotation_map(n, shift);
  for (auto& p : out.perm) p = sigma[static_cast<std::size_t>(p)];
  return out;
}

template <class T>
DenseTensor<T> relabel_output(const DenseTensor<T>& c, std::span<const index_t> sigma) {
  const std::size_t rank = c.extents.size();
  DenseTensor<T> r;
  r.extents.resize(rank);
  for (std::size_t p = 0; p < rank; ++p) {
    r.extents[static_cast<std::size_t>(sigma[p])] = c.extents[p];
  }
  r.data.resize(c.data.size());
  std::vector<index_t> coord(rank);
  for (std::size_t i = 0; i < c.data.size(); ++i) {
    auto linear = static_cast<index_t>(i);
    for (std::size_t p = 0; p < rank; ++p) {
      coord[p] = linear % c.extents[p];
      linear /= c.extents[p];
    }
    index_t target = 0;
    for (std::size_t q = rank; q-- > 0;) {
      // output dimension q of r receives the source dimension p with sigma[p] == q
      std::size_t p = 0;
      while (static_cast<std::size_t>(sigma[p]) != q) ++p;
      target = target * r.extents[q] + coord[p];
    }
    r.data[static_cast<std::size_t>(target)] = c.data[i];
  }
  return r;
}

template DenseTensor<float> relabel_output(const DenseTensor<float>&, std::span<const index_t>);
template DenseTensor<double> relabel_output(const DenseTensor<double>&, std::span<const index_t>);
template DenseTensor<std::complex<float>> relabel_output(
    const DenseTensor<std::complex<float>>&, std::span<const index_t>);
template DenseTensor<std::complex<double>> relabel_output(
    const DenseTensor<std::complex<double>>&, std::span<const index_t>);

}  // namespace gett::testkit
