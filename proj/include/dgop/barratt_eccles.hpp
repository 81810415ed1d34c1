#pragma once

#include "dgop/operad.hpp"

namespace dgop {

/* Chain Barratt-Eccles operad.
 *
 * E(r)_d is spanned by nondegenerate words (w_0,...,w_d) of permutations in
 * Sigma_r (w_k != w_{k+1}); keys are "[w0|w1|...]" in one-line image
 * notation.  Differential: alternating sum of vertex deletions (degenerate
 * results dropped).  Diagonal: front/back splitting.  Symmetric groups act
 * by left multiplication.  Partial composites: Eilenberg-Zilber prisms;
 * along each (p,q)-lattice path the k-th vertex is w_{a_k} o_i u_{b_k},
 * the term signed by the shuffle parity.  A strong deformation retract of
 * the augmentation to C is given by nu(w_0..w_d) = (id,w_0,..,w_d),
 * vanishing when w_0 = id. */
using BEWord = std::vector<Perm>;

std::string be_key(const BEWord& w);
BEWord be_parse(const Key& k);
bool be_nondegenerate(const BEWord& w);

/* w o_i u on permutations, reading-order semantics */
Perm perm_partial_compose(const Perm& w, int i, const Perm& u);
/* delete input slot i (and output slot w(i)) of w */
Perm perm_delete_slot(const Perm& w, int i);

class BarrattEccles : public DgOperad {
 public:
  BarrattEccles(Field f, int arity_b, int degree_b) {
    field = f;
    arity_bound = arity_b;
    degree_bound = degree_b;
  }
  std::string name() const override { return "E"; }

  std::vector<Key> basis(int r, int d) const override;
  void for_basis(int r, int d, const std::function<void(const Key&)>& fn) const override;
  int key_arity(const Key& k) const override;
  int key_degree(const Key& k) const override;

  KSum compose(const Key& p, int i, const Key& q) const override;
  KSum diff(const Key& k) const override;
  KSum act(const Perm& w, const Key& k) const override;
  Key unit_key() const override { return be_key({Perm(1)}); }
  bool is_unital() const override { return true; }
  Key star_key() const override { return be_key({Perm(0)}); }
  KSum partial_unit(const Key& k, int i) const override;
  bool is_hopf() const override { return true; }
  DSum diagonal(const Key& k) const override;
  int64_t counit(const Key& k) const override;

  /* word-level operations (allocation-light, used by the hot loops) */
  static void word_diff(const BEWord& w, std::vector<std::pair<BEWord, int>>& out);
  static bool word_nu(const BEWord& w, BEWord& out);  // false when nu(w) = 0
  KSum nu(const Key& k) const;                        // SDR contraction
  int64_t eps(const Key& k) const { return key_degree(k) == 0 ? 1 : 0; }
  Key eta(int r) const { return be_key({Perm(r)}); }
};

}  // namespace dgop
