#include "gett/testkit/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <complex>
#include <cstring>
#include <thread>

#include "gett/testkit/compare.hpp"
#include "gett/testkit/oracle.hpp"
#include "gett/testkit/transforms.hpp"

namespace gett::testkit {
namespace {

constexpr std::size_t kMaxReportedFailures = 5;

template <class T>
ErrorList run_kernel(const TensorView& a_view, std::span<const T> a,
                     const TensorView& b_view, std::span<const T> b,
                     const ContractionSpec& spec, const TensorView& c_view,
                     std::span<T> c) {
  return xgett<T>(a_view, a, b_view, b, spec, c_view.increments,
                  c_view.base_offset, c);
}

// Positions of `buffer` that `view` does not address must match `before`.
template <class T>
bool outside_untouched(const TensorView& view, const std::vector<T>& before,
                       const std::vector<T>& after, std::string& why) {
  std::vector<bool> inside(before.size(), false);
  for (index_t off : addressed_offsets(view)) inside[static_cast<std::size_t>(off)] = true;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (!inside[i] && std::memcmp(&before[i], &after[i], sizeof(T)) != 0) {
      why = "buffer element " + std::to_string(i) + " outside the C view was modified";
      return false;
    }
  }
  return true;
}

template <class T>
CaseOutcome check_commuted(const TestCase<T>& tc, const std::vector<T>& c_first) {
  const ContractionSpec swapped =
      swap_operands(tc.spec, tc.a_view.rank(), tc.b_view.rank());
  std::vector<T> c = tc.c;
  if (auto errors = run_kernel<T>(tc.b_view, tc.b, tc.a_view, tc.a, swapped, tc.c_view, c);
      !errors.empty()) {
    return {false, "swapped operands rejected: " + format_errors(errors)};
  }
  if (std::memcmp(c.data(), c_first.data(), c.size() * sizeof(T)) != 0) {
    const auto r = compare(pack<T>(tc.c_view, c), pack<T>(tc.c_view, c_first),
                           Comparison::exact());
    return {false, "swapped operands differ: " + r.message};
  }
  return {};
}

template <class T>
CaseOutcome check_rotations(const TestCase<T>& tc, const DenseTensor<T>& base,
                            const DenseTensor<T>& a, const DenseTensor<T>& b) {
  const int rank_c = static_cast<int>(tc.spec.perm.size());
  for (int shift = 1; shift < rank_c; ++shift) {
    const ContractionSpec spec = rotate_output(tc.spec, shift);
    const TensorView c_view =
        packed_view(output_extents(tc.a_view, tc.b_view, spec));
    std::vector<T> c(static_cast<std::size_t>(c_view.buffer_len));
    if (auto errors = run_kernel<T>(tc.a_view, tc.a, tc.b_view, tc.b, spec, c_view, c);
        !errors.empty()) {
      return {false, "shift " + std::to_string(shift) + " rejected: " + format_errors(errors)};
    }
    const auto got = pack<T>(c_view, c);
    const auto sigma = rotation_map(rank_c, shift);
    if (auto r = compare(got, relabel_output(base, sigma), Comparison::exact()); !r) {
      return {false, "shift " + std::to_string(shift) + " not a relabeling: " + r.message};
    }
    if (auto r = compare(got, oracle_contract(a, b, spec), Comparison::exact()); !r) {
      return {false, "shift " + std::to_string(shift) + " vs oracle: " + r.message};
    }
  }
  return {};
}

template <class T>
CaseOutcome run_typed(Category category, std::uint64_t seed) {
  return check_case(generate_case<T>(category, seed));
}

}  // namespace

ElementType dtype_for_seed(std::uint64_t seed) noexcept {
  static constexpr ElementType order[] = {ElementType::D, ElementType::S,
                                          ElementType::Z, ElementType::C};
  return order[seed % 4];
}

template <class T>
CaseOutcome check_case(const TestCase<T>& tc) {
  if (auto errors = validate(tc.a_view, tc.b_view, tc.spec, tc.c_view.increments,
                             tc.c_view.base_offset, tc.c_view.buffer_len);
      !errors.empty()) {
    return {false, "generated case is invalid: " + format_errors(errors)};
  }

  std::vector<T> c = tc.c;
  if (auto errors = run_kernel<T>(tc.a_view, tc.a, tc.b_view, tc.b, tc.spec, tc.c_view, c);
      !errors.empty()) {
    return {false, "kernel rejected case: " + format_errors(errors)};
  }

  const auto a = pack<T>(tc.a_view, tc.a);
  const auto b = pack<T>(tc.b_view, tc.b);
  const auto got = pack<T>(tc.c_view, c);
  if (auto r = compare(got, oracle_contract(a, b, tc.spec), Comparison::exact()); !r) {
    return {false, "kernel vs oracle: " + r.message};
  }
  if (std::string why; !outside_untouched(tc.c_view, tc.c, c, why)) return {false, why};

  if (tc.category == Category::Commutativity) {
    if (auto r = check_commuted(tc, c); !r.pass) return r;
  }
  if (tc.category == Category::Permutations) {
    if (auto r = check_rotations(tc, got, a, b); !r.pass) return r;
  }
  return {};
}

CaseOutcome run_case(Category category, std::uint64_t seed) {
  switch (dtype_for_seed(seed)) {
    case ElementType::S: return run_typed<float>(category, seed);
    case ElementType::D: return run_typed<double>(category, seed);
    case ElementType::C: return run_typed<std::complex<float>>(category, seed);
    case ElementType::Z: return run_typed<std::complex<double>>(category, seed);
  }
  return {false, "unknown element type"};
}

CategoryReport run_category(Category category, int cases, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  CategoryReport report;
  report.category = category;
  for (int i = 0; i < cases; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    ++report.cases;
    CaseOutcome outcome;
    try {
      outcome = run_case(category, s);
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (outcome.pass) {
      ++report.passed;
    } else if (report.failures.size() < kMaxReportedFailures) {
      report.failures.push_back("category \"" + std::string(category_name(category)) +
                                "\" seed " + std::to_string(s) + " dtype " +
                                static_cast<char>(dtype_for_seed(s)) + ": " +
                                outcome.message);
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<CategoryReport> run_suite(std::span<const Category> categories,
                                      int cases, std::uint64_t seed,
                                      unsigned threads) {
  std::vector<CategoryReport> reports(categories.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(categories.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < categories.size();) {
      reports[i] = run_category(categories[i], cases, seed);
    }
  };
  if (threads <= 1) {
    worker();
    return reports;
  }
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return reports;
}

template CaseOutcome check_case<float>(const TestCase<float>&);
template CaseOutcome check_case<double>(const TestCase<double>&);
template CaseOutcome check_case<std::complex<float>>(const TestCase<std::complex<float>>&);
template CaseOutcome check_case<std::complex<double>>(const TestCase<std::complex<double>>&);

}  // namespace gett::testkit
