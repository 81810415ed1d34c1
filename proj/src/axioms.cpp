#include "dgop/operad.hpp"

namespace dgop {

namespace {
/* embed v in Sigma_t into Sigma_{s+t-1} at offset i-1 */
Perm embed_at(const Perm& v, int s, int i) {
  Perm w(s + v.n() - 1);
  for (int k = 0; k < v.n(); ++k) w.img[i - 1 + k] = i - 1 + v.img[k];
  return w;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p(n);
  std::vector<int> idx = p.img;
  std::sort(idx.begin(), idx.end());
  do {
    Perm q;
    q.img = idx;
    out.push_back(q);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}
}  // namespace

AxiomReport check_operad_axioms(const DgOperad& P, int A, int D, size_t max_failures) {
  AxiomReport rep;
  const Field& f = P.field;
  auto fail = [&](const std::string& msg) {
    if (rep.failures.size() < max_failures) rep.failures.push_back(msg);
  };
  auto done = [&]() { return rep.failures.size() >= max_failures; };

  A = std::min(A, P.arity_bound);
  D = std::min(D, P.degree_bound);
  const Key one = P.unit_key();

  /* per-element checks: units, d^2, group action sanity, Hopf counit/coassoc,
   * unital partial composites */
  for (int r = 0; r <= A && !done(); ++r) {
    if (r == 0 && !P.is_unital()) continue;
    for (int d = 0; d <= D && !done(); ++d) {
      P.for_basis(r, d, [&](const Key& p) {
        if (done()) return;
        if (r >= 1) {
          for (int i = 1; i <= r; ++i) {
            KSum pu = P.compose(p, i, one);
            if (!(pu == KSum::single(p, 1, f)))
              fail("unit law p o_" + std::to_string(i) + " 1 != p at " + p);
          }
          KSum up = P.compose(one, 1, p);
          if (!(up == KSum::single(p, 1, f))) fail("unit law 1 o_1 p != p at " + p);
        }
        if (!P.diff_sum(P.diff(p)).is_zero()) fail("d^2 != 0 at " + p);
        if (r >= 2 && r <= 4) {
          for (auto& w : all_perms(r)) {
            for (auto& v : all_perms(r)) {
              KSum lhs = P.act_sum(v, P.act(w, p));
              KSum rhs = P.act(v * w, p);
              if (!(lhs == rhs)) {
                fail("group action law fails at " + p + " with v=" + v.str() + " w=" + w.str());
                return;
              }
            }
            /* d equivariant */
            if (!(P.diff_sum(P.act(w, p)) == P.act_sum(w, P.diff(p))))
              fail("differential not equivariant at " + p + " w=" + w.str());
          }
        }
        if (P.is_unital() && r >= 1) {
          /* partial_unit vs iterated relations: d_i d_j = d_{j-1} d_i, i<j */
          for (int i = 1; i <= r && r >= 2; ++i)
            for (int j = i + 1; j <= r; ++j) {
              KSum lhs = P.partial_unit_sum(P.partial_unit(p, j), i);
              KSum rhs = P.partial_unit_sum(P.partial_unit(p, i), j - 1);
              if (!(lhs == rhs))
                fail("lambda relation d_" + std::to_string(i) + " d_" + std::to_string(j) +
                     " at " + p);
            }
          for (int i = 1; i <= r; ++i)
            if (!(P.diff_sum(P.partial_unit(p, i)) == P.partial_unit_sum(P.diff(p), i)))
              fail("d does not commute with o_i * at " + p);
        }
        if (P.is_hopf()) {
          DSum dg = P.diagonal(p);
          /* counit */
          KSum left, right;
          for (auto& [kk, c] : dg.t) {
            left.add(kk.second, f.mul(c, P.counit(kk.first)), f);
            right.add(kk.first, f.mul(c, P.counit(kk.second)), f);
          }
          if (!(left == KSum::single(p, 1, f)) || !(right == KSum::single(p, 1, f)))
            fail("counit law fails at " + p);
          /* coassociativity */
          Sum<std::pair<Key, PairKey>> lhs3, rhs3;
          for (auto& [kk, c] : dg.t) {
            for (auto& [kk2, c2] : P.diagonal(kk.first).t)
              lhs3.add({kk2.first, {kk2.second, kk.second}}, f.mul(c, c2), f);
            for (auto& [kk2, c2] : P.diagonal(kk.second).t)
              rhs3.add({kk.first, {kk2.first, kk2.second}}, f.mul(c, c2), f);
          }
          if (!(lhs3 == rhs3)) fail("diagonal not coassociative at " + p);
          /* chain map: Delta d = (d (x) 1 + 1 (x) d) Delta */
          DSum lhsd = P.diagonal_sum(P.diff(p));
          DSum rhsd;
          for (auto& [kk, c] : dg.t) {
            for (auto& [k1, c1] : P.diff(kk.first).t) rhsd.add({k1, kk.second}, f.mul(c, c1), f);
            const int64_t sgn = f.sign(P.key_degree(kk.first));
            for (auto& [k2, c2] : P.diff(kk.second).t)
              rhsd.add({kk.first, k2}, f.mul(f.mul(c, c2), sgn), f);
          }
          if (!(lhsd == rhsd)) fail("diagonal is not a chain map at " + p);
        }
      });
    }
  }

  /* pairwise checks: derivation rule, equivariance, Hopf compatibility,
   * unital relations on composites */
  for (int s = 2; s <= A && !done(); ++s) {
    for (int t = 2; t <= A && !done(); ++t) {
      if (s + t - 1 > A) continue;
      for (int ds = 0; ds <= D && !done(); ++ds) {
        for (int dt = 0; dt + ds <= D && !done(); ++dt) {
          P.for_basis(s, ds, [&](const Key& p) {
            if (done()) return;
            P.for_basis(t, dt, [&](const Key& q) {
              if (done()) return;
              for (int i = 1; i <= s; ++i) {
                KSum pq = P.compose(p, i, q);
                /* derivation */
                KSum lhs = P.diff_sum(pq);
                KSum rhs = P.compose_sum(P.diff(p), i, KSum::single(q, 1, f));
                rhs.add_scaled(P.compose_sum(KSum::single(p, 1, f), i, P.diff(q)), f.sign(ds), f);
                if (!(lhs == rhs))
                  fail("derivation rule fails at " + p + " o_" + std::to_string(i) + " " + q);
                /* equivariance */
                for (auto& w : all_perms(s)) {
                  std::vector<int> sizes(s, 1);
                  sizes[i - 1] = t;
                  KSum l2 = P.compose_sum(P.act(w, p), w(i), KSum::single(q, 1, f));
                  KSum r2 = P.act_sum(bloc_permutation(w, sizes), pq);
                  if (!(l2 == r2)) {
                    fail("outer equivariance fails at " + p + ", w=" + w.str());
                    break;
                  }
                }
                for (auto& v : all_perms(t)) {
                  KSum l2 = P.compose_sum(KSum::single(p, 1, f), i, P.act(v, q));
                  KSum r2 = P.act_sum(embed_at(v, s, i), pq);
                  if (!(l2 == r2)) {
                    fail("inner equivariance fails at " + p + ", v=" + v.str());
                    break;
                  }
                }
                /* unital relations on composites */
                if (P.is_unital()) {
                  for (int j = 1; j <= s + t - 1; ++j) {
                    KSum lhs2 = P.partial_unit_sum(pq, j);
                    KSum rhs2;
                    if (j < i)
                      rhs2 = P.compose_sum(P.partial_unit(p, j), i - 1, KSum::single(q, 1, f));
                    else if (j < i + t)
                      rhs2 = P.compose_sum(KSum::single(p, 1, f), i, P.partial_unit(q, j - i + 1));
                    else
                      rhs2 = P.compose_sum(P.partial_unit(p, j - t + 1), i, KSum::single(q, 1, f));
                    if (t == 1) rhs2 = KSum();  // not reached: t >= 2
                    if (!(lhs2 == rhs2))
                      fail("unital composite relation fails at (" + p + ") o_" +
                           std::to_string(i) + " (" + q + "), j=" + std::to_string(j));
                  }
                }
                /* Hopf: Delta(p o q) = Delta(p) o Delta(q), Koszul sign */
                if (P.is_hopf()) {
                  DSum lhs2 = P.diagonal_sum(pq);
                  DSum rhs2;
                  for (auto& [kp, cp] : P.diagonal(p).t)
                    for (auto& [kq, cq] : P.diagonal(q).t) {
                      const int64_t sgn =
                          f.sign(P.key_degree(kp.second) * P.key_degree(kq.first));
                      KSum a = P.compose(kp.first, i, kq.first);
                      KSum b = P.compose(kp.second, i, kq.second);
                      const int64_t c = f.mul(f.mul(cp, cq), sgn);
                      for (auto& [ka, ca] : a.t)
                        for (auto& [kb, cb] : b.t)
                          rhs2.add({ka, kb}, f.mul(c, f.mul(ca, cb)), f);
                    }
                  if (!(lhs2 == rhs2))
                    fail("diagonal not compatible with o_" + std::to_string(i) + " at (" + p +
                         ", " + q + ")");
                }
              }
            });
          });
        }
      }
    }
  }

  /* associativity on triples */
  for (int s = 2; s <= A && !done(); ++s)
    for (int t = 2; t <= A && !done(); ++t)
      for (int u = 2; u <= A && !done(); ++u) {
        if (s + t + u - 2 > A) continue;
        for (int ds = 0; ds <= D; ++ds)
          for (int dt = 0; ds + dt <= D; ++dt)
            for (int du = 0; ds + dt + du <= D; ++du) {
              P.for_basis(s, ds, [&](const Key& p) {
                if (done()) return;
                P.for_basis(t, dt, [&](const Key& q) {
                  if (done()) return;
                  P.for_basis(u, du, [&](const Key& x) {
                    if (done()) return;
                    KSum qk = KSum::single(q, 1, f), xk = KSum::single(x, 1, f),
                         pk = KSum::single(p, 1, f);
                    /* nested: (p o_i q) o_{i-1+j} x = p o_i (q o_j x) */
                    for (int i = 1; i <= s; ++i)
                      for (int j = 1; j <= t; ++j) {
                        KSum lhs = P.compose_sum(P.compose(p, i, q), i - 1 + j, xk);
                        KSum rhs = P.compose_sum(pk, i, P.compose(q, j, x));
                        if (!(lhs == rhs)) {
                          fail("nested associativity fails at (" + p + "," + q + "," + x + ") i=" +
                               std::to_string(i) + " j=" + std::to_string(j));
                          return;
                        }
                      }
                    /* disjoint: (p o_i q) o_{j+t-1} x = (-1)^{|q||x|}(p o_j x) o_i q, i<j */
                    for (int i = 1; i <= s; ++i)
                      for (int j = i + 1; j <= s; ++j) {
                        KSum lhs = P.compose_sum(P.compose(p, i, q), j + t - 1, xk);
                        KSum rhs = P.compose_sum(P.compose(p, j, x), i, qk);
                        rhs.scale(f.sign(dt * du), f);
                        if (!(lhs == rhs)) {
                          fail("disjoint commutation fails at (" + p + "," + q + "," + x + ") i=" +
                               std::to_string(i) + " j=" + std::to_string(j));
                          return;
                        }
                      }
                  });
                });
              });
            }
      }

  return rep;
}

}  // namespace dgop
