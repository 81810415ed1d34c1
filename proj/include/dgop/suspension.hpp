#pragma once

#include "dgop/operad.hpp"

namespace dgop {

/* Operadic suspension: Lambda P(r) = Sigma^{1-r} P(r) (x) sgn(r), realized
 * as S (x) P for the endomorphism operad S of the one-dimensional module in
 * degree 1.  Keys coincide with the base keys; degrees shift by 1-r, the
 * symmetric action twists by the signature, and partial composites carry
 * the signs
 *   (e_s (x) p) o_i (e_t (x) q)
 *     = (-1)^{|p|(t-1) + (t-1)(i-1)} e_{s+t-1} (x) (p o_i q).   */
class SuspensionOperad : public DgOperad {
 public:
  explicit SuspensionOperad(const DgOperad* base) : base_(base) {
    field = base->field;
    arity_bound = base->arity_bound;
    degree_bound = base->degree_bound;  // in base degrees
  }
  const DgOperad& base() const { return *base_; }
  std::string name() const override { return "Lambda(" + base_->name() + ")"; }

  std::vector<Key> basis(int r, int d) const override { return base_->basis(r, d + r - 1); }
  void for_basis(int r, int d, const std::function<void(const Key&)>& fn) const override {
    base_->for_basis(r, d + r - 1, fn);
  }
  int key_arity(const Key& k) const override { return base_->key_arity(k); }
  int key_degree(const Key& k) const override {
    return base_->key_degree(k) + 1 - base_->key_arity(k);
  }

  KSum compose(const Key& p, int i, const Key& q) const override {
    const int t = base_->key_arity(q);
    const int dp = base_->key_degree(p);
    KSum out = base_->compose(p, i, q);
    out.scale(field.sign(static_cast<int64_t>(t - 1) * (dp + i - 1)), field);
    return out;
  }
  KSum diff(const Key& k) const override {
    KSum out = base_->diff(k);
    out.scale(field.sign(base_->key_arity(k) - 1), field);
    return out;
  }
  KSum act(const Perm& w, const Key& k) const override {
    KSum out = base_->act(w, k);
    out.scale(field.sign(w.parity()), field);
    return out;
  }
  Key unit_key() const override { return base_->unit_key(); }
  bool is_unital() const override { return base_->is_unital(); }
  Key star_key() const override { return base_->star_key(); }
  KSum partial_unit(const Key& k, int i) const override {
    KSum out = base_->partial_unit(k, i);
    out.scale(field.sign(base_->key_degree(k) + i - 1), field);
    return out;
  }

 private:
  const DgOperad* base_;
};

}  // namespace dgop
