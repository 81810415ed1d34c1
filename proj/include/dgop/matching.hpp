#pragma once

#include <functional>

#include "dgop/chain.hpp"
#include "dgop/operad.hpp"

namespace dgop {

/* A Lambda_*-module presented by its components and the operations
 * d_i : M(r) -> M(r-1), i = 1..r (the composites with the unital
 * operation, subject to d_i d_j = d_{j-1} d_i for i < j). */
struct LambdaModule {
  Field field{2};
  int arity_bound = 0;
  std::vector<GradedBasedModule> comp;  // index = arity
  std::function<Sum<std::string>(int r, int i, const std::string&)> del;

  static LambdaModule from_operad(const DgOperad& P, int arity_bound, int degree_bound);
};

/* Matching object Match M(r) = ker(d^0 - d^1) in prod_{1<=i<=r} M(r-1),
 * where d^0(x_i)_i = (d_i x_j)_{i<j} and d^1(x_i)_i = (d_{j-1} x_i)_{i<j};
 * the matching map mu(x) = (d_i x)_i lands in the kernel by the
 * Lambda-relations. */
struct MatchingResult {
  GradedBasedModule module;  // kernel basis labels "k<degree>_<index>"
  /* kernel basis vectors: coordinates on the labels "<i>:<label of M(r-1)>" */
  std::map<std::string, Sum<std::string>> vectors;
  /* mu columns: basis of M(r) -> coordinates in the kernel basis */
  std::map<std::string, Sum<std::string>> mu;
};

MatchingResult lambda_matching(const LambdaModule& M, int r, int degree_lo, int degree_hi);

}  // namespace dgop
