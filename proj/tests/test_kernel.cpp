#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "gett/kernel.hpp"

using namespace gett;

namespace {

using Ints = std::vector<index_t>;
using cfloat = std::complex<float>;
using cdouble = std::complex<double>;

template <class T>
ErrorList run(const TensorView& av, const std::vector<T>& a, const TensorView& bv,
              const std::vector<T>& b, const ContractionSpec& spec, const Ints& inc_c,
              index_t c_offset, std::vector<T>& c) {
  return xgett<T>(av, std::span<const T>(a), bv, std::span<const T>(b), spec, inc_c,
                  c_offset, std::span<T>(c));
}

template <class T>
std::vector<T> values(std::initializer_list<int> xs) {
  std::vector<T> out;
  for (int x : xs) out.push_back(T(static_cast<typename element_traits<T>::real_type>(x)));
  return out;
}

}  // namespace

TEST_CASE_TEMPLATE("dot product", T, float, double, cfloat, cdouble) {
  const auto a = values<T>({1, 2, 3});
  const auto b = values<T>({4, 5, 6});
  T expected{};
  for (std::size_t i = 0; i < 3; ++i) expected += a[i] * b[i];
  CHECK(expected == T(32));

  std::vector<T> c(1, T(0));
  const auto errors = run<T>(packed_view({3}), a, packed_view({3}), b, {1, {0}, {0}, {}},
                             Ints{}, 0, c);
  CHECK(errors.empty());
  CHECK(c[0] == T(32));
}

TEST_CASE("typed entry points follow the GETT argument order") {
  const Ints ext{3}, inc{1}, cont{0}, none{};
  SUBCASE("s") {
    std::vector<float> a{1, 2, 3}, b{4, 5, 6}, c{0};
    CHECK(sgett(1, ext, inc, {a, 0}, 1, ext, inc, {b, 0}, 1, cont, cont, none, none, {c, 0}).empty());
    CHECK(c[0] == 32.0f);
  }
  SUBCASE("d") {
    std::vector<double> a{1, 2, 3}, b{4, 5, 6}, c{0};
    CHECK(dgett(1, ext, inc, {a, 0}, 1, ext, inc, {b, 0}, 1, cont, cont, none, none, {c, 0}).empty());
    CHECK(c[0] == 32.0);
  }
  SUBCASE("c") {
    std::vector<cfloat> a{{1, 1}, {0, 2}}, b{{2, 0}, {0, -1}}, c{{0, 0}};
    const Ints e2{2};
    CHECK(cgett(1, e2, inc, {a, 0}, 1, e2, inc, {b, 0}, 1, cont, cont, none, none, {c, 0}).empty());
    // (1+i)*2 + (2i)(-i) = 2+2i + 2
    CHECK(c[0] == cfloat(4, 2));
  }
  SUBCASE("z") {
    std::vector<cdouble> a{{1, 2}}, b{{3, 4}}, c{{0, 0}};
    const Ints e1{1};
    CHECK(zgett(1, e1, inc, {a, 0}, 1, e1, inc, {b, 0}, 1, cont, cont, none, none, {c, 0}).empty());
    // (1+2i)(3+4i) = (3-8) + (4+6)i
    CHECK(c[0] == cdouble(-5, 10));
  }
  SUBCASE("rank argument must agree with the extents") {
    std::vector<double> a{1, 2, 3}, b{4, 5, 6}, c{7};
    const auto errors =
        dgett(2, ext, inc, {a, 0}, 1, ext, inc, {b, 0}, 1, cont, cont, none, none, {c, 0});
    REQUIRE_FALSE(errors.empty());
    CHECK(errors[0].code == ErrorCode::RankMismatch);
    CHECK(c[0] == 7.0);
  }
}

TEST_CASE("identity times M is M") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<double> eye(9, 0.0), m(9), c(9, 0.0);
  for (int i = 0; i < 3; ++i) eye[static_cast<std::size_t>(i * 4)] = 1.0;
  for (auto& x : m) x = d(rng);
  CHECK(run<double>(packed_view({3, 3}), eye, packed_view({3, 3}), m, {1, {1}, {0}, {0, 1}},
                    Ints{1, 3}, 0, c)
            .empty());
  CHECK(c == m);
}

TEST_CASE("outer product") {
  const std::vector<double> a{1, 2}, b{3, 4};
  std::vector<double> expected(4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) expected[i + 2 * j] = a[i] * b[j];
  }
  CHECK(expected == std::vector<double>{3, 6, 4, 8});  // column of C[.][j] per j

  std::vector<double> c(4, 0.0);
  CHECK(run<double>(packed_view({2}), a, packed_view({2}), b, {0, {}, {}, {0, 1}}, Ints{1, 2},
                    0, c)
            .empty());
  CHECK(c == expected);
}

TEST_CASE("accumulates into C") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<double> a(12), b(20);
  for (auto& x : a) x = d(rng);
  for (auto& x : b) x = d(rng);
  const ContractionSpec spec{1, {1}, {0}, {1, 0}};
  std::vector<double> once(15, 0.0), twice(15, 0.0);
  run<double>(packed_view({3, 4}), a, packed_view({4, 5}), b, spec, Ints{1, 5}, 0, once);
  run<double>(packed_view({3, 4}), a, packed_view({4, 5}), b, spec, Ints{1, 5}, 0, twice);
  run<double>(packed_view({3, 4}), a, packed_view({4, 5}), b, spec, Ints{1, 5}, 0, twice);
  for (std::size_t i = 0; i < once.size(); ++i) CHECK(twice[i] == 2 * once[i]);
}

TEST_CASE("validation failure leaves C untouched") {
  const std::vector<double> a{1, 2, 3}, b{4, 5, 6, 7};
  std::vector<double> c{-1.5};
  const auto errors =
      run<double>(packed_view({3}), a, packed_view({4}), b, {1, {0}, {0}, {}}, Ints{}, 0, c);
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].code == ErrorCode::ExtentMismatch);
  CHECK(c[0] == -1.5);
}

TEST_CASE("rank-0 operand scales the other tensor") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<double> s{-3}, b(6), c(6, 0.0);
  for (auto& x : b) x = d(rng);
  CHECK(run<double>(TensorView{}, s, packed_view({2, 3}), b, {0, {}, {}, {0, 1}}, Ints{1, 2}, 0,
                    c)
            .empty());
  for (std::size_t i = 0; i < 6; ++i) CHECK(c[i] == -3 * b[i]);
}

TEST_CASE("strided and negative views") {
  // A: 2x2 window of a 4x4 parent starting at (1,1); B read backward.
  std::vector<double> parent(16);
  for (std::size_t i = 0; i < 16; ++i) parent[i] = static_cast<double>(i);
  const TensorView a{{2, 2}, {1, 4}, 5, 16};  // [[5,9],[6,10]] as A[i][k] = parent[5+i+4k]
  const std::vector<double> bbuf{1, 2};
  const TensorView b{{2}, {-1}, 1, 2};  // B[k] = {2, 1}
  std::vector<double> c(2, 0.0);
  CHECK(run<double>(a, parent, b, bbuf, {1, {1}, {0}, {0}}, Ints{1}, 0, c).empty());
  CHECK(c[0] == 5 * 2 + 9 * 1);
  CHECK(c[1] == 6 * 2 + 10 * 1);
}

TEST_CASE("degenerate extents") {
  SUBCASE("empty output writes nothing") {
    std::vector<double> a(1, 1.0), b{1, 2}, c{42};
    CHECK(run<double>(TensorView{{0, 2}, {1, 1}, 0, 1}, a, packed_view({2}), b,
                      {1, {1}, {0}, {0}}, Ints{1}, 0, c)
              .empty());
    CHECK(c[0] == 42);
  }
  SUBCASE("empty contraction adds nothing") {
    std::vector<double> a(1, 1.0), b(1, 1.0), c{5, 6};
    CHECK(run<double>(TensorView{{2, 0}, {1, 2}, 0, 1}, a, TensorView{{0}, {1}, 0, 1}, b,
                      {1, {1}, {0}, {0}}, Ints{1}, 0, c)
              .empty());
    CHECK(c == std::vector<double>{5, 6});
  }
  SUBCASE("zero output increment is refused when it would alias") {
    std::vector<double> a{1, 2}, b{1}, c{0};
    const auto errors = run<double>(packed_view({2}), a, packed_view({1}), b,
                                    {0, {}, {}, {0, 1}}, Ints{0, 1}, 0, c);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].code == ErrorCode::OutputWriteAliasing);
  }
}

TEST_CASE_TEMPLATE("zero_view", T, float, cdouble) {
  SUBCASE("rank 0") {
    std::vector<T> buf{T(3), T(4)};
    zero_view<T>(TensorView{{}, {}, 1, 2}, buf);
    CHECK(buf[0] == T(3));
    CHECK(buf[1] == T(0));
  }
  SUBCASE("2x2 window of 4x4") {
    std::vector<T> buf(16, T(1));
    const TensorView v{{2, 2}, {1, 4}, 5, 16};
    std::vector<bool> addressed(16, false);
    for (index_t i = 0; i < 2; ++i) {
      for (index_t j = 0; j < 2; ++j) addressed[static_cast<std::size_t>(5 + i + 4 * j)] = true;
    }
    zero_view<T>(v, buf);
    int zeros = 0;
    for (std::size_t i = 0; i < 16; ++i) {
      CHECK(buf[i] == (addressed[i] ? T(0) : T(1)));
      zeros += buf[i] == T(0);
    }
    CHECK(zeros == 4);
  }
  SUBCASE("zero extent") {
    std::vector<T> buf(3, T(9));
    zero_view<T>(TensorView{{3, 0}, {1, 3}, 0, 3}, buf);
    for (const auto& x : buf) CHECK(x == T(9));
  }
}
