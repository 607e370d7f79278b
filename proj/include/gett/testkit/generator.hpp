#pragma once

/// \file generator.hpp
/// Randomized contraction cases, one family per test category.
///
/// Every generated case is valid by construction. Structure (ranks, extents,
/// pairing, permutation, embedding) is a pure function of (category, seed);
/// element values are drawn afterwards, so the same seed gives the same
/// structure for every element type.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gett/layout.hpp"
#include "gett/plan.hpp"

namespace gett::testkit {

enum class Category {
  Basic,
  Commutativity,
  Nothing,
  Scalar,
  Permutations,
  RankZero,
  RankOne,
  Square0,
  Square1,
  Square2,
  Cube0,
  Cube1,
  Cube2,
  Cube3,
  Hypercube0,
  Hypercube1,
  Hypercube2,
  Hypercube3,
  Hypercube4,
  SubTensorSameRank,
  NegativeIncrement,
  SubTensorNegativeIncrement,
  SubTensorLowerRank,
};

inline constexpr std::size_t kNumCategories = 23;

/// All categories in report order.
const std::array<Category, kNumCategories>& all_categories();

std::string_view category_name(Category c);
std::optional<Category> parse_category(std::string_view name);

enum class Fill {
  SmallIntegers,  // integers in [-4, 4], exact under every element type
  UniformReal,    // reals in [-1, 1]
};

/// How a tensor sits inside its buffer.
enum class Embedding { Packed, Negative, SubSameRank, SubNegative, SubLowerRank };

Embedding category_embedding(Category c);

template <class T>
struct TestCase {
  Category category{};
  std::uint64_t seed = 0;
  TensorView a_view;
  std::vector<T> a;
  TensorView b_view;
  std::vector<T> b;
  ContractionSpec spec;
  TensorView c_view;  // c_view.increments is INCC; addressed elements are zero
  std::vector<T> c;
};

template <class T>
TestCase<T> generate_case(Category category, std::uint64_t seed,
                          Fill fill = Fill::SmallIntegers);

}  // namespace gett::testkit
