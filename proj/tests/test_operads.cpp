#include "dgop/matching.hpp"
#include "dgop/zoo.hpp"
#include "doctest.h"

using namespace dgop;

TEST_CASE("commutative operad") {
  for (int64_t p : {2, 3}) {
    CommutativeOperad C(Field(p), 6);
    auto rep = check_operad_axioms(C, 6, 0);
    CHECK(rep.ok());
    /* 1_s o_i 1_t = 1_{s+t-1} */
    CHECK(C.compose("c2", 2, "c3").coeff("c4") == 1);
  }
}

TEST_CASE("A-infinity operad K") {
  for (int64_t p : {2, 3}) {
    Field f(p);
    auto K = build_ainf(f, 5);
    /* d mu_2 = 0 */
    CHECK(K->diff(mu_corolla(2)).is_zero());
    /* d mu_3 = mu2 o_1 mu2 - mu2 o_2 mu2 (two terms, opposite signs at p=3) */
    KSum d3 = K->diff(mu_corolla(3));
    CHECK(d3.size() == 2);
    int64_t a = d3.coeff("mu2(mu2(1 2) 3)");
    int64_t b = d3.coeff("mu2(1 mu2(2 3))");
    CHECK(a != 0);
    CHECK(f.add(a, b) == 0);
    /* d^2 mu_5 = 0 */
    CHECK(K->diff_sum(K->diff(mu_corolla(5))).is_zero());
    /* axioms within arity 5 */
    auto rep = check_operad_axioms(*K, 5, 3);
    CHECK(rep.ok());
    if (!rep.ok()) MESSAGE(rep.summary());
  }
}

TEST_CASE("free operad examples") {
  Field f2(2);
  /* single binary generator with trivial action: F(M)(3) has 3 basis trees */
  FreeOperad F(f2, {{"x", 2, 0, true}}, 4, 2);
  CHECK(F.basis(3, 0).size() == 3);
  CHECK(F.basis(2, 0).size() == 1);
  CHECK(F.basis(1, 0) == std::vector<Key>{"1"});
  /* (x o_1 x) o_3 x is the left comb */
  KSum lc = F.compose_sum(F.compose("x(1 2)", 1, "x(1 2)"), 3, KSum::single("x(1 2)", 1, f2));
  REQUIRE(lc.size() == 1);
  CHECK(lc.t.begin()->first == "x(x(1 2) x(3 4))");
  /* regular generator: K(3) degree 0 empty, free orbit size */
  auto K = build_ainf(f2, 3);
  CHECK(K->basis(3, 1).size() == 6);   // Sigma_3 . mu_3
  CHECK(K->basis(3, 0).size() == 12);  // two shapes x 6 leaf labelings... (3 shapes x 4)
  /* composition agrees with grafting + canonical form (oracle: trees) */
  CHECK(F.compose("x(1 2)", 2, "x(1 2)").t.begin()->first == "x(1 x(2 3))");
}

TEST_CASE("free operad axioms (trivial and regular generators, odd p)") {
  Field f3(3);
  FreeOperad F(f3, {{"x", 2, 1, true}}, 4, 3);
  auto rep = check_operad_axioms(F, 4, 3);
  CHECK(rep.ok());
  if (!rep.ok()) MESSAGE(rep.summary());
}

TEST_CASE("Barratt-Eccles operad basics") {
  Field f2(2);
  BarrattEccles E(f2, 4, 6);
  /* E(2)_d has exactly two basis elements */
  for (int d = 0; d <= 5; ++d) CHECK(E.basis(2, d).size() == 2);
  /* nu formulas */
  CHECK(E.nu("[21]").coeff("[12|21]") == 1);
  CHECK(E.nu("[12]").is_zero());
  /* composition of identity words */
  CHECK(E.compose("[12]", 1, "[12]").coeff("[123]") == 1);
  /* diagonal of a degree-1 word */
  DSum dg = E.diagonal("[12|21]");
  CHECK(dg.size() == 2);
  CHECK(dg.coeff({"[12]", "[12|21]"}) == 1);
  CHECK(dg.coeff({"[12|21]", "[21]"}) == 1);
}

TEST_CASE("Barratt-Eccles axioms and SDR") {
  for (int64_t p : {2, 3}) {
    Field f(p);
    BarrattEccles E(f, 3, 3);
    auto rep = check_operad_axioms(E, 3, 3);
    CHECK(rep.ok());
    if (!rep.ok()) MESSAGE(rep.summary());
    /* SDR identities: d nu + nu d = id - eta eps; eps eta = id; nu nu = 0;
     * nu eta = 0 */
    SDR sdr{&E};
    for (int r = 1; r <= 3; ++r) {
      for (int d = 0; d <= 3; ++d) {
        for (auto& k : E.basis(r, d)) {
          KSum lhs = E.diff_sum(E.nu(k));
          for (auto& [k2, c] : E.diff(k).t) lhs.add_scaled(E.nu(k2), c, f);
          KSum rhs = KSum::single(k, 1, f);
          if (d == 0) rhs.add(E.eta(r), f.neg(1), f);
          CHECK(lhs == rhs);
          KSum nn;
          for (auto& [k2, c] : E.nu(k).t) nn.add_scaled(E.nu(k2), c, f);
          CHECK(nn.is_zero());
        }
      }
      CHECK(E.nu(E.eta(r)).is_zero());
      CHECK(E.eps(E.eta(r)) == 1);
    }
  }
}

TEST_CASE("operadic suspension") {
  Field f3(3);
  CommutativeOperad C(f3, 5);
  SuspensionOperad LC(&C);
  /* Lambda C(m) is one-dimensional concentrated in degree 1-m */
  for (int m = 1; m <= 4; ++m) {
    CHECK(LC.key_degree(CommutativeOperad::key(m)) == 1 - m);
    CHECK(LC.basis(m, 1 - m).size() == 1);
  }
  CHECK(LC.key_degree(CommutativeOperad::key(1)) == 0);
  /* transposition acts by -1 on Lambda C(2) over F_3 */
  KSum a = LC.act(Perm::parse("21"), "c2");
  CHECK(a.coeff("c2") == f3.neg(1));

  /* the suspension of an operad still satisfies the operad axioms: this
   * pins the composition signs at odd p */
  BarrattEccles E(f3, 3, 2);
  SuspensionOperad LE(&E);
  auto rep = check_operad_axioms(LE, 3, 2);
  CHECK(rep.ok());
  if (!rep.ok()) MESSAGE(rep.summary());

  auto K = build_ainf(f3, 4);
  SuspensionOperad LK(K.get());
  auto rep2 = check_operad_axioms(LK, 4, 2);
  CHECK(rep2.ok());
  if (!rep2.ok()) MESSAGE(rep2.summary());
}

TEST_CASE("morphism K -> E") {
  for (int64_t p : {2, 3}) {
    Field f(p);
    auto K = build_ainf(f, 5);
    BarrattEccles E(f, 5, 5);
    auto phi = build_k_to_e(*K, E, 5);
    CHECK(phi.at("mu2").coeff("[12]") == 1);
    /* chain map on generators: d phi(mu_n) = phi(d mu_n) */
    for (int n = 2; n <= 5; ++n) {
      KSum lhs = E.diff_sum(phi.at(mu_name(n)));
      KSum rhs = evaluate_free_key_sum(K->diff(mu_corolla(n)), phi, E);
      CHECK(lhs == rhs);
    }
    /* eps phi(mu_n) = 0 in positive degree */
    for (int n = 3; n <= 5; ++n) {
      int64_t e = 0;
      for (auto& [k, c] : phi.at(mu_name(n)).t) e = f.add(e, f.mul(c, E.eps(k)));
      CHECK(e == 0);
    }
  }
}

TEST_CASE("negative control: corrupted operad fails the axiom suite") {
  Field f2(2);
  /* commutative operad with a broken composite table */
  class Broken : public CommutativeOperad {
   public:
    using CommutativeOperad::CommutativeOperad;
    KSum compose(const Key& p, int i, const Key& q) const override {
      if (arity_from(p) == 2 && i == 1 && arity_from(q) == 2) return {};
      return CommutativeOperad::compose(p, i, q);
    }
  };
  Broken B(f2, 4);
  auto rep = check_operad_axioms(B, 4, 0);
  CHECK(!rep.ok());
  /* the failure names the offending triple */
  bool named = false;
  for (auto& s : rep.failures) named |= (s.find("c2") != std::string::npos);
  CHECK(named);
}

TEST_CASE("matching objects") {
  Field f2(2);
  /* constant Lambda-module F (underlying C): Match(r) = F, mu = id */
  CommutativeOperad C(f2, 5);
  LambdaModule M = LambdaModule::from_operad(C, 5, 0);
  for (int r = 2; r <= 4; ++r) {
    auto res = lambda_matching(M, r, 0, 0);
    CHECK(res.module.total_dim() == 1);
    CHECK(res.mu.count(CommutativeOperad::key(r)) == 1);
    CHECK(res.mu.at(CommutativeOperad::key(r)).size() == 1);
  }
  /* zero in low arities -> Match = 0 */
  LambdaModule Z;
  Z.field = f2;
  Z.arity_bound = 3;
  Z.comp.resize(4);
  Z.comp[3].add_label(0, "z");
  Z.del = [](int, int, const std::string&) { return Sum<std::string>(); };
  auto rz = lambda_matching(Z, 3, 0, 0);
  CHECK(rz.module.total_dim() == 0);
}
