#include "gett/testkit/compare.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace gett::testkit {
namespace {

template <class T>
bool bitwise_equal(const T& x, const T& y) {
  return std::memcmp(&x, &y, sizeof(T)) == 0;
}

template <class T>
double magnitude(const T& x) {
  return static_cast<double>(std::abs(x));
}

template <class T>
std::string show(const T& x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string show_coords(const std::vector<index_t>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

}  // namespace

template <class T>
CompareResult compare(const DenseTensor<T>& x, const DenseTensor<T>& y,
                      Comparison mode) {
  if (x.extents != y.extents || x.data.size() != y.data.size()) {
    throw std::invalid_argument("compare: shape mismatch " + show_coords(x.extents) +
                                " vs " + show_coords(y.extents));
  }
  CompareResult r;
  for (std::size_t i = 0; i < x.data.size(); ++i) {
    bool ok;
    if (mode.mode == Comparison::Mode::Exact) {
      ok = bitwise_equal(x.data[i], y.data[i]);
    } else {
      const double diff = magnitude(T(x.data[i] - y.data[i]));
      ok = diff <= mode.tol * std::max(1.0, magnitude(y.data[i]));
    }
    if (ok) continue;

    r.pass = false;
    index_t linear = static_cast<index_t>(i);
    for (index_t e : x.extents) {
      r.first_mismatch.push_back(linear % e);
      linear /= e;
    }
    r.message = "mismatch at " + show_coords(r.first_mismatch) + ": " +
                show(x.data[i]) + " vs " + show(y.data[i]);
    return r;
  }
  return r;
}

template CompareResult compare<float>(const DenseTensor<float>&,
                                      const DenseTensor<float>&, Comparison);
template CompareResult compare<double>(const DenseTensor<double>&,
                                       const DenseTensor<double>&, Comparison);
template CompareResult compare<std::complex<float>>(
    const DenseTensor<std::complex<float>>&,
    const DenseTensor<std::complex<float>>&, Comparison);
template CompareResult compare<std::complex<double>>(
    const DenseTensor<std::complex<double>>&,
    const DenseTensor<std::complex<double>>&, Comparison);

}  // namespace gett::testkit
