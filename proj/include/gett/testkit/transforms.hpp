#pragma once

// Spec rewrites used by the commutativity and permutation checks.

#include <span>
#include <vector>

#include "gett/plan.hpp"
#include "gett/testkit/oracle.hpp"

namespace gett::testkit {

/// Spec for contracting (B, A) that reproduces the output of (A, B):
/// the contraction arrays swap and every free index keeps its output
/// position under the swapped enumeration. Applying it twice is the identity.
ContractionSpec swap_operands(const ContractionSpec& spec, int rank_a, int rank_b);

/// Cyclic left shift of the output positions by `shift`:
/// perm'[i] = (perm[i] - shift) mod rank_c.
ContractionSpec rotate_output(const ContractionSpec& spec, int shift);

/// Moves output dimension p to position sigma[p]; the result R satisfies
/// R[c'] = C[c] whenever c'[sigma[p]] = c[p] for every p.
template <class T>
DenseTensor<T> relabel_output(const DenseTensor<T>& c, std::span<const index_t> sigma);

/// The sigma realised by rotate_output(spec, shift) for output rank n.
std::vector<index_t> rotation_map(int rank_c, int shift);

}  // namespace gett::testkit
