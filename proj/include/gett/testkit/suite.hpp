#pragma once

/// \file suite.hpp
/// Kernel-versus-oracle verification over generated cases.
///
/// Every case is contracted through the public GETT entry point and compared
/// bitwise with the oracle on packed copies of the operands. Elements of the
/// output buffer outside the C view must be left untouched. Commutativity
/// cases are also run with the operands swapped; Permutations cases are
/// rerun under every cyclic shift of the output positions.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gett/kernel.hpp"
#include "gett/testkit/generator.hpp"

namespace gett::testkit {

struct CaseOutcome {
  bool pass = true;
  std::string message;  // first failure, empty on pass
};

/// Element type used for a given case seed; the suite cycles all four.
ElementType dtype_for_seed(std::uint64_t seed) noexcept;

template <class T>
CaseOutcome check_case(const TestCase<T>& tc);

/// Generates and checks one case using dtype_for_seed(seed).
CaseOutcome run_case(Category category, std::uint64_t seed);

struct CategoryReport {
  Category category{};
  int cases = 0;
  int passed = 0;
  std::vector<std::string> failures;  // "category/seed/dtype: reason", capped
  double seconds = 0.0;
};

/// Case i uses seed `seed + i`.
CategoryReport run_category(Category category, int cases, std::uint64_t seed);

/// Reports come back in the order of `categories` regardless of scheduling.
std::vector<CategoryReport> run_suite(std::span<const Category> categories,
                                      int cases, std::uint64_t seed,
                                      unsigned threads = 0);

}  // namespace gett::testkit
