#pragma once

/// \file plan.hpp
/// Validation of raw contraction arguments and derivation of the execution
/// tables consumed by the kernel.
///
/// Free indices are numbered A's non-contracted dimensions in ascending order,
/// then B's non-contracted dimensions in ascending order. `perm[i]` is the
/// output dimension receiving free index i (free index -> output position).
/// Contracted pairs are positional: `cont_a[k]` is summed against `cont_b[k]`.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gett/layout.hpp"

namespace gett {

struct ContractionSpec {
  int conts = 0;
  std::vector<index_t> cont_a;
  std::vector<index_t> cont_b;
  std::vector<index_t> perm;
};

enum class ErrorCode {
  RankMismatch,
  NegativeExtent,
  ContCountWrong,
  ContIndexOutOfRange,
  ContIndexDuplicate,
  ExtentMismatch,
  PermLengthWrong,
  PermNotBijection,
  IncCLengthWrong,
  OutputWriteAliasing,
  FootprintOutOfBounds,
};

std::string_view to_string(ErrorCode code) noexcept;

struct ValidationError {
  ErrorCode code;
  std::string detail;
};

using ErrorList = std::vector<ValidationError>;

/// "ExtentMismatch: ...; PermNotBijection: ..." for diagnostics.
std::string format_errors(const ErrorList& errors);

enum class Operand { A, B };

struct FreeDim {
  Operand owner;
  index_t source_dim;     // dimension in the owning tensor
  index_t src_increment;  // owner's increment along source_dim
  index_t out_increment;  // C's increment along this output dimension
  index_t extent;
};

struct ContractedDim {
  index_t dim_a;
  index_t dim_b;
  index_t extent;
  index_t inc_a;
  index_t inc_b;
};

/// Immutable execution metadata. `free_table` is indexed by output dimension.
struct ContractionPlan {
  int rank_c = 0;
  std::vector<index_t> ext_c;
  std::vector<FreeDim> free_table;
  std::vector<ContractedDim> cont_table;
  index_t size_free = 1;
  index_t size_cont = 1;
};

class PlanError : public std::runtime_error {
 public:
  explicit PlanError(ErrorList errors)
      : std::runtime_error(format_errors(errors)), errors_(std::move(errors)) {}
  const ErrorList& errors() const noexcept { return errors_; }

 private:
  ErrorList errors_;
};

/// Output rank implied by the operands, or -1 if `conts` is not usable.
int output_rank(int rank_a, int rank_b, int conts) noexcept;

/// Output extents implied by a structurally valid spec, ordered by output
/// dimension. Requires validate() to have reported no spec errors.
std::vector<index_t> output_extents(const TensorView& a, const TensorView& b,
                                    const ContractionSpec& spec);

/// Collects every violation. The C view is the one implied by the operands:
/// extents from the spec, increments `inc_c`, placed at `c_base_offset`
/// inside a buffer of `c_buffer_len` elements.
ErrorList validate(const TensorView& a, const TensorView& b,
                   const ContractionSpec& spec,
                   std::span<const index_t> inc_c, index_t c_base_offset,
                   index_t c_buffer_len);

/// Same checks, minus the C buffer bounds.
ErrorList validate_operands(const TensorView& a, const TensorView& b,
                            const ContractionSpec& spec,
                            std::span<const index_t> inc_c);

/// Throws PlanError carrying the complete error list when validation fails.
ContractionPlan build_plan(const TensorView& a, const TensorView& b,
                           const ContractionSpec& spec,
                           std::span<const index_t> inc_c);

}  // namespace gett
