#pragma once

#include <functional>
#include <memory>

#include "dgop/graded.hpp"
#include "dgop/perm.hpp"

namespace dgop {

using Key = std::string;
using KSum = Sum<Key>;
using PairKey = std::pair<Key, Key>;
using DSum = Sum<PairKey>;  // diagonal values

/* Differential graded operad presented through a basis-key interface.
 *
 * Conventions, fixed across the repo:
 *  - a basis element p of arity n is a multilinear operation reading its
 *    inputs in a definite order; for the permutation-style operads a
 *    w in Sigma_n stands for (z_1..z_n) |-> z_{w(1)} (x) ... (x) z_{w(n)};
 *  - the symmetric group acts on the left, (w.p)(z_1..z_n) =
 *    p(z_{w(1)},...,z_{w(n)}), so that v.(w.p) = (vw).p with
 *    (vw)(k) = v(w(k));
 *  - partial composites satisfy
 *    (w.p) o_{w(i)} q = bloc_permutation(w, sizes).(p o_i q),
 *    sizes_k = (k==i ? t : 1), and
 *    p o_i (v.q) = (1 + v + 1).(p o_i q);
 *  - d is a derivation: d(p o_i q) = dp o_i q + (-1)^{|p|} p o_i dq.
 *
 * Composition and the other structure maps are computed by formula; basis
 * enumeration is gated by the recorded truncation bounds and raises
 * TruncationError beyond them (never a silent zero). */
class DgOperad {
 public:
  Field field{2};
  int arity_bound = 0;
  int degree_bound = 0;

  virtual ~DgOperad() = default;
  virtual std::string name() const = 0;

  virtual std::vector<Key> basis(int r, int d) const = 0;
  virtual void for_basis(int r, int d, const std::function<void(const Key&)>& fn) const {
    for (auto& k : basis(r, d)) fn(k);
  }
  /* negative degrees are vacuously empty for the connective operads here;
   * only queries beyond the recorded truncation raise */
  void check_bounds(int r, int d) const {
    if (r < 0 || r > arity_bound || d > degree_bound)
      throw TruncationError(name() + ": basis query (" + std::to_string(r) + "," +
                            std::to_string(d) + ") out of truncation");
  }

  virtual int key_arity(const Key&) const = 0;
  virtual int key_degree(const Key&) const = 0;

  virtual KSum compose(const Key& p, int i, const Key& q) const = 0;
  virtual KSum diff(const Key& k) const = 0;
  virtual KSum act(const Perm& w, const Key& k) const = 0;
  virtual Key unit_key() const = 0;

  virtual bool is_unital() const { return false; }
  virtual Key star_key() const { throw ShapeError(name() + ": not a unital operad"); }
  /* p o_i * */
  virtual KSum partial_unit(const Key&, int) const {
    throw ShapeError(name() + ": not a unital operad");
  }

  virtual bool is_hopf() const { return false; }
  virtual DSum diagonal(const Key&) const { throw ShapeError(name() + ": no diagonal"); }
  virtual int64_t counit(const Key&) const { throw ShapeError(name() + ": no diagonal"); }

  /* linear extensions */
  KSum compose_sum(const KSum& p, int i, const KSum& q) const {
    KSum out;
    for (auto& [kp, cp] : p.t)
      for (auto& [kq, cq] : q.t)
        out.add_scaled(compose(kp, i, kq), field.mul(cp, cq), field);
    return out;
  }
  KSum diff_sum(const KSum& v) const {
    return v.map([&](const Key& k) { return diff(k); }, field);
  }
  KSum act_sum(const Perm& w, const KSum& v) const {
    return v.map([&](const Key& k) { return act(w, k); }, field);
  }
  KSum partial_unit_sum(const KSum& v, int i) const {
    return v.map([&](const Key& k) { return partial_unit(k, i); }, field);
  }
  DSum diagonal_sum(const KSum& v) const {
    return v.map([&](const Key& k) { return diagonal(k); }, field);
  }
};

struct AxiomReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string summary() const {
    if (ok()) return "all operad axioms hold within bounds";
    std::string s;
    for (auto& f : failures) s += f + "\n";
    return s;
  }
};

/* Exhaustive operad-axiom verification within the given bounds: unit laws,
 * associativity and commutation of partial composites, equivariance, the
 * derivation rule, d^2 = 0, unital partial-composite relations, and the
 * Hopf conditions when present.  Failures carry witnesses. */
AxiomReport check_operad_axioms(const DgOperad& P, int arity_bound, int degree_bound,
                                size_t max_failures = 16);

}  // namespace dgop
