#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "gett/layout.hpp"

using gett::CoordCounter;
using gett::index_t;
using gett::TensorView;

namespace {

using Coords = std::vector<index_t>;

Coords to_vec(std::span<const index_t> s) { return {s.begin(), s.end()}; }

// All coordinate tuples of `extents` in lexicographic order, digit 0 fastest,
// produced by plain nested counting rather than increment_coords.
std::vector<Coords> enumerate_lex(const Coords& extents) {
  std::vector<Coords> out;
  index_t n = 1;
  for (index_t e : extents) n *= e;
  for (index_t i = 0; i < n; ++i) {
    Coords c(extents.size());
    index_t rest = i;
    for (std::size_t d = 0; d < extents.size(); ++d) {
      c[d] = rest % extents[d];
      rest /= extents[d];
    }
    out.push_back(c);
  }
  return out;
}

// Every buffer offset (relative to base) addressed by a view, brute force.
std::vector<index_t> all_offsets(const Coords& ext, const Coords& inc) {
  std::vector<index_t> out;
  for (const auto& c : enumerate_lex(ext)) {
    index_t off = 0;
    for (std::size_t d = 0; d < c.size(); ++d) off += c[d] * inc[d];
    out.push_back(off);
  }
  return out;
}

}  // namespace

TEST_CASE("linear_offset") {
  CHECK(gett::linear_offset({}, {}) == 0);

  // Position of (2,1,0) in a packed 3x3x3 tensor, counted element by element.
  index_t position = 0;
  for (const auto& c : enumerate_lex({3, 3, 3})) {
    if (c == Coords{2, 1, 0}) break;
    ++position;
  }
  CHECK(position == 5);
  CHECK(gett::linear_offset(Coords{2, 1, 0}, Coords{1, 3, 9}) == 5);

  // (2,0,1) inside a 5x5x5 parent.
  CHECK(2 * 1 + 0 * 5 + 1 * 25 == 27);
  CHECK(gett::linear_offset(Coords{2, 0, 1}, Coords{1, 5, 25}) == 27);

  CHECK(gett::linear_offset(Coords{1, 2}, Coords{-3, 4}) == 5);
  CHECK_THROWS_AS(gett::linear_offset(Coords{1, 2}, Coords{1}), gett::ContractViolation);
}

TEST_CASE("increment_coords follows the documented sequence") {
  CoordCounter c({3, 3, 3});
  const std::vector<Coords> expected = {
      {0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {1, 1, 0}, {2, 1, 0}};
  for (const auto& e : expected) {
    CHECK(to_vec(c.coords()) == e);
    gett::increment_coords(c);
  }
}

TEST_CASE("increment_coords wraps") {
  SUBCASE("single digit") {
    CoordCounter c({2});
    gett::increment_coords(c);
    CHECK(to_vec(c.coords()) == Coords{1});
    gett::increment_coords(c);
    CHECK(to_vec(c.coords()) == Coords{0});
  }
  SUBCASE("last state of 3x2") {
    const auto states = enumerate_lex({3, 2});
    CHECK(states.size() == 6);
    CHECK(states.back() == Coords{2, 1});
    CoordCounter c({3, 2});
    for (int i = 0; i < 5; ++i) gett::increment_coords(c);
    CHECK(to_vec(c.coords()) == Coords{2, 1});
    gett::increment_coords(c);
    CHECK(to_vec(c.coords()) == Coords{0, 0});
    CHECK(c.at_origin());
  }
  SUBCASE("empty counter is left alone") {
    CoordCounter c;
    gett::increment_coords(c);
    CHECK(c.size() == 0);
    CHECK(c.at_origin());
  }
  SUBCASE("non-positive extents are rejected") {
    CHECK_THROWS_AS(CoordCounter({3, 0}), gett::ContractViolation);
  }
}

TEST_CASE("contiguous_increments and num_elements") {
  CHECK(gett::contiguous_increments(Coords{3, 3, 3}) == Coords{1, 3, 9});
  CHECK(gett::contiguous_increments(Coords{5, 5, 5}) == Coords{1, 5, 25});
  for (index_t n : {0, 1, 7, 100}) CHECK(gett::contiguous_increments(Coords{n}) == Coords{1});
  CHECK(gett::contiguous_increments(Coords{}).empty());

  CHECK(gett::num_elements(Coords{}) == 1);
  CHECK(gett::num_elements(Coords{3, 3, 3}) == 27);
  CHECK(gett::num_elements(Coords{2, 0, 4}) == 0);
}

TEST_CASE("footprint") {
  SUBCASE("rank 0") {
    const auto fp = gett::footprint(TensorView{});
    CHECK(fp.min_offset == 0);
    CHECK(fp.max_offset == 0);
    CHECK_FALSE(fp.empty);
  }
  SUBCASE("negative rank 1") {
    const auto offs = all_offsets({3}, {-1});
    CHECK(*std::min_element(offs.begin(), offs.end()) == -2);
    CHECK(*std::max_element(offs.begin(), offs.end()) == 0);
    const auto fp = gett::footprint(TensorView{{3}, {-1}, 2, 3});
    CHECK(fp.min_offset == -2);
    CHECK(fp.max_offset == 0);
  }
  SUBCASE("mixed signs") {
    const auto offs = all_offsets({2, 3}, {1, -5});
    CHECK(*std::min_element(offs.begin(), offs.end()) == -10);
    CHECK(*std::max_element(offs.begin(), offs.end()) == 1);
    const auto fp = gett::footprint(TensorView{{2, 3}, {1, -5}, 10, 12});
    CHECK(fp.min_offset == -10);
    CHECK(fp.max_offset == 1);
    CHECK(gett::footprint_in_bounds(TensorView{{2, 3}, {1, -5}, 10, 12}));
    CHECK_FALSE(gett::footprint_in_bounds(TensorView{{2, 3}, {1, -5}, 9, 12}));
    CHECK_FALSE(gett::footprint_in_bounds(TensorView{{2, 3}, {1, -5}, 10, 11}));
  }
  SUBCASE("zero extent flags the view empty") {
    const auto fp = gett::footprint(TensorView{{4, 0}, {1, 4}, 0, 1});
    CHECK(fp.empty);
    CHECK(gett::footprint_in_bounds(TensorView{{4, 0}, {1, 4}, 0, 1}));
  }
}

TEST_CASE("property: counter cycles visit every tuple in lexicographic order") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int rank = std::uniform_int_distribution<int>(0, 5)(rng);
    Coords ext(static_cast<std::size_t>(rank));
    for (auto& e : ext) e = std::uniform_int_distribution<index_t>(1, 5)(rng);

    const auto lex = enumerate_lex(ext);
    CHECK(static_cast<index_t>(lex.size()) == gett::num_elements(ext));

    CoordCounter c(ext);
    std::set<Coords> seen;
    for (const auto& expected : lex) {
      REQUIRE(to_vec(c.coords()) == expected);
      seen.insert(expected);
      gett::increment_coords(c);
    }
    CHECK(c.at_origin());
    CHECK(seen.size() == lex.size());
  }
}

TEST_CASE("property: packed offsets over a full cycle count 0..n-1") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int rank = std::uniform_int_distribution<int>(0, 5)(rng);
    Coords ext(static_cast<std::size_t>(rank));
    for (auto& e : ext) e = std::uniform_int_distribution<index_t>(1, 5)(rng);
    const auto inc = gett::contiguous_increments(ext);
    CoordCounter c(ext);
    const index_t n = gett::num_elements(ext);
    for (index_t i = 0; i < n; ++i) {
      REQUIRE(gett::linear_offset(c.coords(), inc) == i);
      gett::increment_coords(c);
    }
  }
}

TEST_CASE("property: footprint bounds are attained") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int rank = std::uniform_int_distribution<int>(0, 4)(rng);
    Coords ext(static_cast<std::size_t>(rank)), inc(ext.size());
    for (auto& e : ext) e = std::uniform_int_distribution<index_t>(1, 5)(rng);
    for (auto& i : inc) i = std::uniform_int_distribution<index_t>(-30, 30)(rng);
    const auto offs = all_offsets(ext, inc);
    const auto fp = gett::footprint(TensorView{ext, inc, 0, 1});
    CHECK(fp.min_offset == *std::min_element(offs.begin(), offs.end()));
    CHECK(fp.max_offset == *std::max_element(offs.begin(), offs.end()));
  }
}
