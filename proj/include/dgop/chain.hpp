#pragma once

#include "dgop/graded.hpp"

namespace dgop {

/* Chain complex: a graded based module with a square-zero differential of
 * degree -1. */
struct ChainComplex {
  GradedBasedModule mod;
  SparseGradedMap d;  // shift -1, src = tgt = &mod (bound by owner)
  Field field{2};

  /* returns a witness label with d(d(label)) != 0, or nullopt */
  std::optional<std::string> d_squared_witness() const {
    for (auto& [deg, labels] : mod.degs)
      for (auto& l : labels)
        if (!d.apply(d.apply_basis(l), field).is_zero()) return l;
    return std::nullopt;
  }
};

/* Dense row-reduction rank over F_p. Deterministic. */
int64_t matrix_rank(std::vector<std::vector<int64_t>> m, const Field& f);

/* Homology ranks by Gaussian elimination:
 * rank H_k = dim C_k - rank d_k - rank d_{k+1}.
 * Requires d*d = 0 on [lo, hi+1]; throws ShapeError with a witness label
 * otherwise. */
std::vector<std::pair<int, int64_t>> homology_ranks(const ChainComplex& cx, int lo, int hi);

}  // namespace dgop
