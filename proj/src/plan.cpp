#include "gett/plan.hpp"

#include <algorithm>

namespace gett {
namespace {

std::string join(std::span<const index_t> xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + "]";
}

// Returns false when the view's shape itself is unusable.
bool check_view(const TensorView& v, char name, ErrorList& errors) {
  if (v.extents.size() != v.increments.size()) {
    errors.push_back({ErrorCode::RankMismatch,
                      std::string(1, name) + " has " +
                          std::to_string(v.extents.size()) + " extents and " +
                          std::to_string(v.increments.size()) + " increments"});
    return false;
  }
  bool negative = false;
  for (std::size_t i = 0; i < v.extents.size(); ++i) {
    if (v.extents[i] < 0) {
      negative = true;
      errors.push_back({ErrorCode::NegativeExtent,
                        std::string("EXT") + name + "[" + std::to_string(i) +
                            "]=" + std::to_string(v.extents[i])});
    }
  }
  if (negative) return false;
  if (!footprint_in_bounds(v)) {
    const Footprint fp = footprint(v);
    errors.push_back({ErrorCode::FootprintOutOfBounds,
                      std::string(1, name) + " addresses [" +
                          std::to_string(v.base_offset + fp.min_offset) + ", " +
                          std::to_string(v.base_offset + fp.max_offset) +
                          "] of a buffer of " + std::to_string(v.buffer_len)});
  }
  return true;
}

// Range and uniqueness of one contraction index array. Returns true if usable.
bool check_cont_indices(std::span<const index_t> cont, int rank, char name,
                        ErrorList& errors) {
  bool ok = true;
  std::vector<bool> seen(static_cast<std::size_t>(std::max(rank, 0)), false);
  for (std::size_t k = 0; k < cont.size(); ++k) {
    const index_t d = cont[k];
    if (d < 0 || d >= rank) {
      ok = false;
      errors.push_back({ErrorCode::ContIndexOutOfRange,
                        std::string("CONT") + name + "[" + std::to_string(k) +
                            "]=" + std::to_string(d) + " outside rank " +
                            std::to_string(rank)});
      continue;
    }
    if (seen[static_cast<std::size_t>(d)]) {
      ok = false;
      errors.push_back({ErrorCode::ContIndexDuplicate,
                        std::string("CONT") + name + " names dimension " +
                            std::to_string(d) + " twice"});
    }
    seen[static_cast<std::size_t>(d)] = true;
  }
  return ok;
}

std::vector<index_t> free_dims(int rank, std::span<const index_t> cont) {
  std::vector<bool> contracted(static_cast<std::size_t>(rank), false);
  for (index_t d : cont) contracted[static_cast<std::size_t>(d)] = true;
  std::vector<index_t> dims;
  for (int d = 0; d < rank; ++d) {
    if (!contracted[static_cast<std::size_t>(d)]) dims.push_back(d);
  }
  return dims;
}

struct SpecCheck {
  bool usable = false;  // ext_c can be derived
  int rank_c = -1;
};

SpecCheck check_spec(const TensorView& a, const TensorView& b,
                     const ContractionSpec& spec,
                     std::span<const index_t> inc_c, bool views_ok,
                     ErrorList& errors) {
  SpecCheck out;
  const int rank_a = a.rank();
  const int rank_b = b.rank();

  const bool count_ok = spec.conts >= 0 && spec.conts <= rank_a &&
                        spec.conts <= rank_b &&
                        spec.cont_a.size() == static_cast<std::size_t>(spec.conts) &&
                        spec.cont_b.size() == static_cast<std::size_t>(spec.conts);
  if (!count_ok) {
    errors.push_back({ErrorCode::ContCountWrong,
                      "CONTS=" + std::to_string(spec.conts) + " with " +
                          std::to_string(spec.cont_a.size()) + " CONTA and " +
                          std::to_string(spec.cont_b.size()) +
                          " CONTB entries, ranks " + std::to_string(rank_a) +
                          "/" + std::to_string(rank_b)});
  }
  const bool a_ok = check_cont_indices(spec.cont_a, rank_a, 'A', errors);
  const bool b_ok = check_cont_indices(spec.cont_b, rank_b, 'B', errors);

  bool pairs_ok = count_ok && a_ok && b_ok && views_ok;
  if (pairs_ok) {
    for (int k = 0; k < spec.conts; ++k) {
      const index_t ea = a.extents[static_cast<std::size_t>(spec.cont_a[k])];
      const index_t eb = b.extents[static_cast<std::size_t>(spec.cont_b[k])];
      if (ea != eb) {
        pairs_ok = false;
        errors.push_back({ErrorCode::ExtentMismatch,
                          "k=" + std::to_string(k) + ": EXTA[" +
                              std::to_string(spec.cont_a[k]) + "]=" +
                              std::to_string(ea) + " != EXTB[" +
                              std::to_string(spec.cont_b[k]) + "]=" +
                              std::to_string(eb)});
      }
    }
  }

  if (!count_ok) return out;
  out.rank_c = output_rank(rank_a, rank_b, spec.conts);

  bool perm_ok = true;
  if (spec.perm.size() != static_cast<std::size_t>(out.rank_c)) {
    perm_ok = false;
    errors.push_back({ErrorCode::PermLengthWrong,
                      "PERM has " + std::to_string(spec.perm.size()) +
                          " entries, output rank is " +
                          std::to_string(out.rank_c)});
  } else {
    std::vector<bool> hit(static_cast<std::size_t>(out.rank_c), false);
    for (std::size_t i = 0; i < spec.perm.size(); ++i) {
      const index_t p = spec.perm[i];
      if (p < 0 || p >= out.rank_c || hit[static_cast<std::size_t>(p)]) {
        perm_ok = false;
        errors.push_back({ErrorCode::PermNotBijection,
                          "PERM=" + join(spec.perm) + " is not a permutation of 0.." +
                              std::to_string(out.rank_c - 1)});
        break;
      }
      hit[static_cast<std::size_t>(p)] = true;
    }
  }

  bool inc_ok = true;
  if (inc_c.size() != static_cast<std::size_t>(out.rank_c)) {
    inc_ok = false;
    errors.push_back({ErrorCode::IncCLengthWrong,
                      "INCC has " + std::to_string(inc_c.size()) +
                          " entries, output rank is " +
                          std::to_string(out.rank_c)});
  }

  out.usable = pairs_ok && perm_ok && inc_ok;
  if (!out.usable) return out;

  const auto ext_c = output_extents(a, b, spec);
  for (std::size_t d = 0; d < ext_c.size(); ++d) {
    if (inc_c[d] == 0 && ext_c[d] > 1) {
      errors.push_back({ErrorCode::OutputWriteAliasing,
                        "INCC[" + std::to_string(d) + "]=0 on an output extent of " +
                            std::to_string(ext_c[d])});
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NegativeExtent: return "NegativeExtent";
    case ErrorCode::ContCountWrong: return "ContCountWrong";
    case ErrorCode::ContIndexOutOfRange: return "ContIndexOutOfRange";
    case ErrorCode::ContIndexDuplicate: return "ContIndexDuplicate";
    case ErrorCode::ExtentMismatch: return "ExtentMismatch";
    case ErrorCode::PermLengthWrong: return "PermLengthWrong";
    case ErrorCode::PermNotBijection: return "PermNotBijection";
    case ErrorCode::IncCLengthWrong: return "IncCLengthWrong";
    case ErrorCode::OutputWriteAliasing: return "OutputWriteAliasing";
    case ErrorCode::FootprintOutOfBounds: return "FootprintOutOfBounds";
  }
  return "Unknown";
}

std::string format_errors(const ErrorList& errors) {
  std::string s;
  for (const auto& e : errors) {
    if (!s.empty()) s += "; ";
    s += to_string(e.code);
    s += ": ";
    s += e.detail;
  }
  return s;
}

int output_rank(int rank_a, int rank_b, int conts) noexcept {
  if (conts < 0 || conts > rank_a || conts > rank_b) return -1;
  return rank_a + rank_b - 2 * conts;
}

std::vector<index_t> output_extents(const TensorView& a, const TensorView& b,
                                    const ContractionSpec& spec) {
  const auto fa = free_dims(a.rank(), spec.cont_a);
  const auto fb = free_dims(b.rank(), spec.cont_b);
  std::vector<index_t> ext_c(fa.size() + fb.size());
  for (std::size_t i = 0; i < fa.size(); ++i) {
    ext_c[static_cast<std::size_t>(spec.perm[i])] =
        a.extents[static_cast<std::size_t>(fa[i])];
  }
  for (std::size_t i = 0; i < fb.size(); ++i) {
    ext_c[static_cast<std::size_t>(spec.perm[fa.size() + i])] =
        b.extents[static_cast<std::size_t>(fb[i])];
  }
  return ext_c;
}

ErrorList validate_operands(const TensorView& a, const TensorView& b,
                            const ContractionSpec& spec,
                            std::span<const index_t> inc_c) {
  ErrorList errors;
  const bool a_ok = check_view(a, 'A', errors);
  const bool b_ok = check_view(b, 'B', errors);
  const bool views_ok = a_ok && b_ok;
  check_spec(a, b, spec, inc_c, views_ok, errors);
  return errors;
}

ErrorList validate(const TensorView& a, const TensorView& b,
                   const ContractionSpec& spec,
                   std::span<const index_t> inc_c, index_t c_base_offset,
                   index_t c_buffer_len) {
  ErrorList errors;
  const bool a_ok = check_view(a, 'A', errors);
  const bool b_ok = check_view(b, 'B', errors);
  const bool views_ok = a_ok && b_ok;
  const SpecCheck sc = check_spec(a, b, spec, inc_c, views_ok, errors);
  if (sc.usable) {
    TensorView c;
    c.extents = output_extents(a, b, spec);
    c.increments.assign(inc_c.begin(), inc_c.end());
    c.base_offset = c_base_offset;
    c.buffer_len = c_buffer_len;
    check_view(c, 'C', errors);
  }
  return errors;
}

ContractionPlan build_plan(const TensorView& a, const TensorView& b,
                           const ContractionSpec& spec,
                           std::span<const index_t> inc_c) {
  if (auto errors = validate_operands(a, b, spec, inc_c); !errors.empty()) {
    throw PlanError(std::move(errors));
  }

  ContractionPlan plan;
  plan.rank_c = output_rank(a.rank(), b.rank(), spec.conts);
  plan.ext_c = output_extents(a, b, spec);
  plan.free_table.resize(static_cast<std::size_t>(plan.rank_c));

  const auto fa = free_dims(a.rank(), spec.cont_a);
  const auto fb = free_dims(b.rank(), spec.cont_b);
  auto place = [&](std::size_t free_index, Operand owner, index_t dim,
                   const TensorView& src) {
    const auto out = static_cast<std::size_t>(spec.perm[free_index]);
    plan.free_table[out] = FreeDim{
        owner, dim, src.increments[static_cast<std::size_t>(dim)], inc_c[out],
        src.extents[static_cast<std::size_t>(dim)]};
  };
  for (std::size_t i = 0; i < fa.size(); ++i) place(i, Operand::A, fa[i], a);
  for (std::size_t i = 0; i < fb.size(); ++i) place(fa.size() + i, Operand::B, fb[i], b);

  std::vector<index_t> ext_cont;
  for (int k = 0; k < spec.conts; ++k) {
    const auto da = static_cast<std::size_t>(spec.cont_a[k]);
    const auto db = static_cast<std::size_t>(spec.cont_b[k]);
    plan.cont_table.push_back(ContractedDim{spec.cont_a[k], spec.cont_b[k],
                                            a.extents[da], a.increments[da],
                                            b.increments[db]});
    ext_cont.push_back(a.extents[da]);
  }
  plan.size_free = num_elements(plan.ext_c);
  plan.size_cont = num_elements(ext_cont);
  return plan;
}

}  // namespace gett
