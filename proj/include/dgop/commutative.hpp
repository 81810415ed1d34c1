#pragma once

#include "dgop/operad.hpp"

namespace dgop {

/* The commutative operad: C(r) = F concentrated in degree 0 for all r,
 * trivial action, unital, Hopf with grouplike basis. */
class CommutativeOperad : public DgOperad {
 public:
  CommutativeOperad(Field f, int arity_b) {
    field = f;
    arity_bound = arity_b;
    degree_bound = 0;
  }
  std::string name() const override { return "C"; }

  static Key key(int r) { return "c" + std::to_string(r); }
  static int arity_from(const Key& k) { return std::stoi(k.substr(1)); }

  std::vector<Key> basis(int r, int d) const override {
    check_bounds(r, d);
    if (d != 0) return {};
    return {key(r)};
  }
  int key_arity(const Key& k) const override { return arity_from(k); }
  int key_degree(const Key&) const override { return 0; }

  KSum compose(const Key& p, int i, const Key& q) const override {
    const int s = arity_from(p), t = arity_from(q);
    if (i < 1 || i > s) throw ShapeError("C: slot out of range");
    return KSum::single(key(s + t - 1), 1, field);
  }
  KSum diff(const Key&) const override { return {}; }
  KSum act(const Perm& w, const Key& k) const override {
    if (w.n() != arity_from(k)) throw ShapeError("C: arity mismatch in action");
    return KSum::single(k, 1, field);
  }
  Key unit_key() const override { return key(1); }
  bool is_unital() const override { return true; }
  Key star_key() const override { return key(0); }
  KSum partial_unit(const Key& k, int i) const override {
    const int r = arity_from(k);
    if (i < 1 || i > r) throw ShapeError("C: slot out of range");
    return KSum::single(key(r - 1), 1, field);
  }
  bool is_hopf() const override { return true; }
  DSum diagonal(const Key& k) const override {
    DSum d;
    d.add({k, k}, 1, field);
    return d;
  }
  int64_t counit(const Key&) const override { return 1; }
};

}  // namespace dgop
