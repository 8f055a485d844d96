#pragma once

#include <optional>
#include <vector>

#include "semiflow/support.hpp"
#include "semiflow/types.hpp"

namespace semiflow {

using RatVec = std::vector<Rat>;

// Indices into `gens` of a maximal linearly independent subset, chosen
// greedily from the front. Every vector in the span of `gens` is spanned by
// the selected ones.
std::vector<int> extract_q_basis_indices(const std::vector<Semiflow>& gens);
std::vector<Semiflow> extract_q_basis(const std::vector<Semiflow>& gens);

int q_rank(const std::vector<Semiflow>& gens);

// Coefficients x with sum x_i * gens[i] == target, any sign allowed.
// Free variables are fixed to zero, so the answer is deterministic.
std::optional<RatVec> solve_q(const Semiflow& target,
                              const std::vector<Semiflow>& gens);

// Coefficients x >= 0 with sum x_i * gens[i] == target, if any exist.
// Phase-1 simplex with Bland's rule; exact arithmetic throughout.
std::optional<RatVec> in_cone(const Semiflow& target,
                              const std::vector<Semiflow>& gens);

// Nonnegative combination of generators whose supports are contained in
// the target's support. Used to express a semiflow over minimal supports.
struct SupportCoverDecomposition {
  std::vector<int> selected;  // indices of usable generators
  RatVec coeffs;              // parallel to `selected`, all >= 0
  bool union_covers = false;  // union of selected supports equals target's
};

std::optional<SupportCoverDecomposition> support_cover_decompose(
    const Semiflow& target, const std::vector<Semiflow>& gens,
    const std::vector<Support>& gen_supports);

}  // namespace semiflow
