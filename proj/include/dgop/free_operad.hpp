#pragma once

#include <map>

#include "dgop/operad.hpp"

namespace dgop {

/* Planar term of a free operad: leaves carry the labels 1..r, vertices a
 * generator name.  Keys: "mu2(1 mu2(2 3))"; the bare leaf "1" is the operad
 * unit. */
struct FTerm {
  int leaf = 0;  // >0: leaf label; 0: vertex
  std::string gen;
  std::vector<FTerm> kids;

  bool is_leaf() const { return leaf > 0; }
  std::string str() const;
  static FTerm parse(const std::string& s);
};

struct FGen {
  std::string name;
  int arity = 2;
  int degree = 0;
  bool trivial_action = false;  // false: free (regular) Sigma-module generator
};

/* Free symmetric operad on generators of arity >= 2, optionally quasi-free
 * (a generator differential makes it a quasi-free operad; d^2 = 0 is the
 * caller's duty and is what the tests pin down).
 *
 * Basis: for a regular generator every planar layout of its entries is a
 * distinct basis element; for a trivial-action generator children are kept
 * sorted by minimal leaf.  Reordering subtrees costs the Koszul sign of the
 * permuted vertex-label blocks. */
class FreeOperad : public DgOperad {
 public:
  FreeOperad(Field f, std::vector<FGen> gens, int arity_b, int degree_b);

  /* differential of a generator, as a sum of terms on the abstract leaves
   * 1..arity in standard position */
  void set_generator_diff(const std::string& gen, const KSum& image);

  std::string name() const override { return name_; }
  void set_name(const std::string& n) { name_ = n; }

  std::vector<Key> basis(int r, int d) const override;
  int key_arity(const Key& k) const override;
  int key_degree(const Key& k) const override;
  KSum compose(const Key& p, int i, const Key& q) const override;
  KSum diff(const Key& k) const override;
  KSum act(const Perm& w, const Key& k) const override;
  Key unit_key() const override { return "1"; }

  const FGen& gen(const std::string& n) const;
  /* canonicalize a raw planar term; returns the canonical key with sign */
  std::pair<Key, int64_t> canon(FTerm t) const;

 private:
  std::vector<FGen> gens_;
  std::map<std::string, size_t> gen_index_;
  std::map<std::string, KSum> gen_diff_;
  std::string name_ = "Free";
  mutable std::map<int, std::map<int, std::vector<Key>>> basis_cache_;

  int64_t sort_rec(FTerm& t, std::vector<int>& degs_out) const;
  void enumerate(int r, std::map<int, std::vector<Key>>& by_degree) const;
};

/* Evaluate a free-operad term in a target operad, substituting images for
 * the generators.  images[name] must have the generator's arity. */
KSum evaluate_free_term(const FTerm& t, const std::map<std::string, KSum>& images,
                        const DgOperad& target);
KSum evaluate_free_key(const Key& k, const std::map<std::string, KSum>& images,
                       const DgOperad& target);
KSum evaluate_free_key_sum(const KSum& v, const std::map<std::string, KSum>& images,
                           const DgOperad& target);

}  // namespace dgop
