#pragma once

#include <memory>

#include "dgop/barratt_eccles.hpp"
#include "dgop/commutative.hpp"
#include "dgop/free_operad.hpp"
#include "dgop/suspension.hpp"

namespace dgop {

/* Stasheff chain operad K: quasi-free on mu_n (n >= 2, degree n-2) with
 *   d mu_n = sum_{s+t=n+1} sum_{k=1..s} (-1)^{k + t(s+k)} mu_s o_k mu_t
 * restricted to s,t >= 2; the exponent is the convention pinned down by
 * d^2 = 0 (checked symbolically through arity 6 in the tests). */
std::unique_ptr<FreeOperad> build_ainf(Field f, int arity_bound);

inline std::string mu_name(int n) { return "mu" + std::to_string(n); }
Key mu_corolla(int n);  // "mun(1 2 ... n)"

/* Strong deformation retract of the Barratt-Eccles operad onto C:
 * eps kills positive degree, eta(r) is the identity word, and
 * d nu + nu d = id - eta eps with nu the cone contraction. */
struct SDR {
  const BarrattEccles* E = nullptr;
  KSum nu(const Key& k) const { return E->nu(k); }
  int64_t eps(const Key& k) const { return E->eps(k); }
  Key eta(int r) const { return E->eta(r); }
  /* contraction transported to Lambda E */
  KSum nu_lambda(const Key& k) const {
    KSum out = E->nu(k);
    out.scale(E->field.sign(E->key_arity(k) - 1), E->field);
    return out;
  }
};

/* The fixed morphism K -> E: phi(mu_2) = identity word, recursively
 * phi(mu_n) = nu(phi(d mu_n)).  Returns generator images keyed by name. */
std::map<std::string, KSum> build_k_to_e(const FreeOperad& K, const BarrattEccles& E,
                                         int arity_bound);

/* images of mu_n in Lambda E (degree -1 for every n) */
std::map<int, KSum> suspended_mu_images(const std::map<std::string, KSum>& phi, int arity_bound);

}  // namespace dgop
