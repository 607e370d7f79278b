#include "gett/testkit/generator.hpp"

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "gett/kernel.hpp"

namespace gett::testkit {
namespace {

constexpr std::array<std::string_view, kNumCategories> kNames = {
    "Basic contraction",
    "Commutativity",
    "Nothing contraction",
    "Scalar contraction",
    "Permutations",
    "Rank zero tensor",
    "Rank one tensor",
    "Square tensors zero contractions",
    "Square tensors one contraction",
    "Square tensors two contractions",
    "Cube tensors zero contractions",
    "Cube tensor one contraction",
    "Cube tensor two contractions",
    "Cube tensor three contractions",
    "Hypercube tensors zero contractions",
    "Hypercube tensor one contraction",
    "Hypercube tensor two contractions",
    "Hypercube tensor three contractions",
    "Hypercube tensor four contractions",
    "Sub-tensor of same rank",
    "Negative increment",
    "Sub-tensor negative increment",
    "Sub-tensor of lower rank",
};

constexpr index_t kMinRank = 1, kMaxRank = 5;
constexpr index_t kMinExtent = 1, kMaxExtent = 5;
constexpr index_t kMaxConts = 4;
// Shapes are redrawn until every buffer and the multiply-add count fit.
constexpr index_t kMaxCaseElements = index_t{1} << 19;
constexpr int kMaxDraws = 10000;

class Rng {
 public:
  Rng(Category c, std::uint64_t seed, std::uint32_t stream) {
    std::seed_seq seq{0x6765'7474u, static_cast<std::uint32_t>(c),
                      static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32), stream};
    eng_.seed(seq);
  }

  index_t uniform(index_t lo, index_t hi) {
    return std::uniform_int_distribution<index_t>(lo, hi)(eng_);
  }
  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  bool coin() { return uniform(0, 1) == 1; }

  std::vector<index_t> shuffled_iota(index_t n) {
    std::vector<index_t> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), index_t{0});
    std::shuffle(v.begin(), v.end(), eng_);
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

struct Shape {
  std::vector<index_t> ext_a, ext_b;
  ContractionSpec spec;
};

// Random extents for both operands, then `conts` random dimension pairs with
// B's paired extents copied from A.
Shape pair_up(Rng& rng, index_t rank_a, index_t rank_b, index_t conts,
              std::optional<index_t> uniform_extent) {
  Shape s;
  auto draw = [&] {
    return uniform_extent ? *uniform_extent : rng.uniform(kMinExtent, kMaxExtent);
  };
  for (index_t i = 0; i < rank_a; ++i) s.ext_a.push_back(draw());
  for (index_t i = 0; i < rank_b; ++i) s.ext_b.push_back(draw());

  const auto dims_a = rng.shuffled_iota(rank_a);
  const auto dims_b = rng.shuffled_iota(rank_b);
  s.spec.conts = static_cast<int>(conts);
  for (index_t k = 0; k < conts; ++k) {
    s.spec.cont_a.push_back(dims_a[k]);
    s.spec.cont_b.push_back(dims_b[k]);
    s.ext_b[dims_b[k]] = s.ext_a[dims_a[k]];
  }
  s.spec.perm = rng.shuffled_iota(rank_a + rank_b - 2 * conts);
  return s;
}

Shape arbitrary(Rng& rng) {
  const index_t ra = rng.uniform(kMinRank, kMaxRank);
  const index_t rb = rng.uniform(kMinRank, kMaxRank);
  const index_t conts = rng.uniform(0, std::min({kMaxConts, ra, rb}));
  return pair_up(rng, ra, rb, conts, std::nullopt);
}

Shape equal_extents(Rng& rng, index_t rank, index_t conts) {
  const index_t e = rng.uniform(kMinExtent, kMaxExtent);
  return pair_up(rng, rank, rank, conts, e);
}

// One operand of rank 1..5, the other of `small_rank`; the side is random.
Shape with_small_operand(Rng& rng, index_t small_rank, index_t conts) {
  const index_t big = rng.uniform(kMinRank, kMaxRank);
  return rng.coin() ? pair_up(rng, small_rank, big, conts, std::nullopt)
                    : pair_up(rng, big, small_rank, conts, std::nullopt);
}

Shape draw_shape(Category c, Rng& rng) {
  switch (c) {
    case Category::Nothing: {
      const index_t ra = rng.uniform(kMinRank, kMaxRank);
      const index_t rb = rng.uniform(kMinRank, kMaxRank);
      return pair_up(rng, ra, rb, 0, std::nullopt);
    }
    case Category::Scalar: {
      const index_t r = rng.uniform(kMinRank, kMaxRank);
      return pair_up(rng, r, r, r, std::nullopt);
    }
    case Category::RankZero: return with_small_operand(rng, 0, 0);
    case Category::RankOne: return with_small_operand(rng, 1, rng.uniform(0, 1));
    case Category::Square0: return equal_extents(rng, 2, 0);
    case Category::Square1: return equal_extents(rng, 2, 1);
    case Category::Square2: return equal_extents(rng, 2, 2);
    case Category::Cube0: return equal_extents(rng, 3, 0);
    case Category::Cube1: return equal_extents(rng, 3, 1);
    case Category::Cube2: return equal_extents(rng, 3, 2);
    case Category::Cube3: return equal_extents(rng, 3, 3);
    case Category::Hypercube0: return equal_extents(rng, 4, 0);
    case Category::Hypercube1: return equal_extents(rng, 4, 1);
    case Category::Hypercube2: return equal_extents(rng, 4, 2);
    case Category::Hypercube3: return equal_extents(rng, 4, 3);
    case Category::Hypercube4: return equal_extents(rng, 4, 4);
    default: return arbitrary(rng);
  }
}

// Places a tensor of the given extents inside a buffer according to `how`.
TensorView embed(const std::vector<index_t>& extents, Embedding how, Rng& rng) {
  const auto rank = static_cast<index_t>(extents.size());
  TensorView v;
  v.extents = extents;

  if (how == Embedding::Packed || how == Embedding::Negative) {
    v.increments = contiguous_increments(extents);
    v.buffer_len = std::max<index_t>(1, num_elements(extents));
  } else {
    const bool lower = how == Embedding::SubLowerRank;
    const index_t parent_rank = lower ? rank + rng.uniform(1, 3) : rank;
    const index_t max_pad = lower ? 3 : 5;
    // parent dimension hosting each view dimension
    std::vector<index_t> host(static_cast<std::size_t>(rank));
    if (lower) {
      const auto order = rng.shuffled_iota(parent_rank);
      std::copy_n(order.begin(), rank, host.begin());
    } else {
      std::iota(host.begin(), host.end(), index_t{0});
    }
    std::vector<index_t> parent_ext(static_cast<std::size_t>(parent_rank), 1);
    std::vector<index_t> hosted(static_cast<std::size_t>(parent_rank), -1);
    for (index_t d = 0; d < rank; ++d) hosted[host[d]] = d;
    for (index_t p = 0; p < parent_rank; ++p) {
      const index_t inner = hosted[p] >= 0 ? extents[hosted[p]] : 1;
      parent_ext[p] = inner + rng.uniform(1, max_pad);
    }
    const auto parent_inc = contiguous_increments(parent_ext);
    index_t base = 0;
    for (index_t p = 0; p < parent_rank; ++p) {
      const index_t inner = hosted[p] >= 0 ? extents[hosted[p]] : 1;
      base += rng.uniform(0, parent_ext[p] - inner) * parent_inc[p];
    }
    for (index_t d = 0; d < rank; ++d) v.increments.push_back(parent_inc[host[d]]);
    v.base_offset = base;
    v.buffer_len = num_elements(parent_ext);
  }

  if (how == Embedding::Negative || how == Embedding::SubNegative) {
    // Coordinate zero moves to the far corner; the footprint is unchanged.
    for (index_t d = 0; d < rank; ++d) {
      v.base_offset += v.increments[d] * (extents[d] - 1);
      v.increments[d] = -v.increments[d];
    }
  }
  return v;
}

template <class T>
T draw_value(Rng& rng, Fill fill) {
  auto one = [&]() -> double {
    return fill == Fill::SmallIntegers ? static_cast<double>(rng.uniform(-4, 4))
                                       : rng.real(-1.0, 1.0);
  };
  if constexpr (std::is_same_v<T, float> || std::is_same_v<T, double>) {
    return static_cast<T>(one());
  } else {
    using R = typename T::value_type;
    const auto re = static_cast<R>(one());
    const auto im = static_cast<R>(one());
    return T(re, im);
  }
}

}  // namespace

const std::array<Category, kNumCategories>& all_categories() {
  static const std::array<Category, kNumCategories> cats = [] {
    std::array<Category, kNumCategories> a{};
    for (std::size_t i = 0; i < kNumCategories; ++i) a[i] = static_cast<Category>(i);
    return a;
  }();
  return cats;
}

std::string_view category_name(Category c) {
  return kNames.at(static_cast<std::size_t>(c));
}

std::optional<Category> parse_category(std::string_view name) {
  for (std::size_t i = 0; i < kNumCategories; ++i) {
    if (kNames[i] == name) return static_cast<Category>(i);
  }
  return std::nullopt;
}

Embedding category_embedding(Category c) {
  switch (c) {
    case Category::SubTensorSameRank: return Embedding::SubSameRank;
    case Category::NegativeIncrement: return Embedding::Negative;
    case Category::SubTensorNegativeIncrement: return Embedding::SubNegative;
    case Category::SubTensorLowerRank: return Embedding::SubLowerRank;
    default: return Embedding::Packed;
  }
}

template <class T>
TestCase<T> generate_case(Category category, std::uint64_t seed, Fill fill) {
  if (static_cast<std::size_t>(category) >= kNumCategories) {
    throw std::invalid_argument("generate_case: unknown category " +
                                std::to_string(static_cast<int>(category)));
  }
  TestCase<T> tc;
  tc.category = category;
  tc.seed = seed;

  Rng shape_rng(category, seed, 0);
  const Embedding how = category_embedding(category);
  for (int draw = 0;; ++draw) {
    if (draw == kMaxDraws) {
      throw std::runtime_error("generate_case: no shape within budget for " +
                               std::string(category_name(category)));
    }
    Shape shape = draw_shape(category, shape_rng);
    const auto ext_c = output_extents(packed_view(shape.ext_a), packed_view(shape.ext_b),
                                      shape.spec);
    index_t work = num_elements(shape.ext_a) * num_elements(shape.ext_b);
    for (int k = 0; k < shape.spec.conts; ++k) work /= shape.ext_a[shape.spec.cont_a[k]];
    if (work > kMaxCaseElements) continue;

    tc.a_view = embed(shape.ext_a, how, shape_rng);
    tc.b_view = embed(shape.ext_b, how, shape_rng);
    tc.c_view = embed(ext_c, how, shape_rng);
    if (tc.a_view.buffer_len > kMaxCaseElements || tc.b_view.buffer_len > kMaxCaseElements ||
        tc.c_view.buffer_len > kMaxCaseElements) {
      continue;
    }
    tc.spec = std::move(shape.spec);
    break;
  }

  Rng value_rng(category, seed, 1);
  auto fill_buffer = [&](std::vector<T>& buf, index_t n) {
    buf.resize(static_cast<std::size_t>(n));
    for (auto& x : buf) x = draw_value<T>(value_rng, fill);
  };
  fill_buffer(tc.a, tc.a_view.buffer_len);
  fill_buffer(tc.b, tc.b_view.buffer_len);
  fill_buffer(tc.c, tc.c_view.buffer_len);
  zero_view<T>(tc.c_view, tc.c);
  return tc;
}

template TestCase<float> generate_case<float>(Category, std::uint64_t, Fill);
template TestCase<double> generate_case<double>(Category, std::uint64_t, Fill);
template TestCase<std::complex<float>> generate_case<std::complex<float>>(
    Category, std::uint64_t, Fill);
template TestCase<std::complex<double>> generate_case<std::complex<double>>(
    Category, std::uint64_t, Fill);

}  // namespace gett::testkit
