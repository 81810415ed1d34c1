#include "dgop/zoo.hpp"

namespace dgop {

Key mu_corolla(int n) {
  FTerm t;
  t.gen = mu_name(n);
  for (int k = 1; k <= n; ++k) {
    FTerm l;
    l.leaf = k;
    t.kids.push_back(l);
  }
  return t.str();
}

namespace {
Key ainf_pattern(int s, int t, int k) {
  /* mu_s(1 .. k-1 mu_t(k .. k+t-1) k+t .. s+t-1) */
  FTerm top;
  top.gen = mu_name(s);
  for (int a = 1; a < k; ++a) {
    FTerm l;
    l.leaf = a;
    top.kids.push_back(l);
  }
  FTerm inner;
  inner.gen = mu_name(t);
  for (int a = 0; a < t; ++a) {
    FTerm l;
    l.leaf = k + a;
    inner.kids.push_back(l);
  }
  top.kids.push_back(inner);
  for (int a = k + t; a <= s + t - 1; ++a) {
    FTerm l;
    l.leaf = a;
    top.kids.push_back(l);
  }
  return top.str();
}

int ainf_sign_exp(int s, int t, int k) { return k + t * (s + k); }
}  // namespace

std::unique_ptr<FreeOperad> build_ainf(Field f, int arity_bound) {
  std::vector<FGen> gens;
  for (int n = 2; n <= arity_bound; ++n) gens.push_back({mu_name(n), n, n - 2, false});
  auto K = std::make_unique<FreeOperad>(f, gens, arity_bound,
                                        std::max(0, arity_bound - 2) + 1);
  K->set_name("K");
  for (int n = 2; n <= arity_bound; ++n) {
    KSum d;
    for (int s = 2; s <= n - 1; ++s) {
      const int t = n + 1 - s;
      if (t < 2) continue;
      for (int k = 1; k <= s; ++k)
        d.add(ainf_pattern(s, t, k), f.sign(ainf_sign_exp(s, t, k)), f);
    }
    K->set_generator_diff(mu_name(n), d);
  }
  return K;
}

std::map<std::string, KSum> build_k_to_e(const FreeOperad& K, const BarrattEccles& E,
                                         int arity_bound) {
  std::map<std::string, KSum> phi;
  phi[mu_name(2)] = KSum::single(E.eta(2), 1, E.field);
  for (int n = 3; n <= arity_bound; ++n) {
    KSum dmu = K.diff(mu_corolla(n));
    KSum img = evaluate_free_key_sum(dmu, phi, E);
    KSum out;
    for (auto& [k, c] : img.t) out.add_scaled(E.nu(k), c, E.field);
    phi[mu_name(n)] = out;
  }
  return phi;
}

std::map<int, KSum> suspended_mu_images(const std::map<std::string, KSum>& phi, int arity_bound) {
  std::map<int, KSum> out;
  for (int n = 2; n <= arity_bound; ++n) {
    auto it = phi.find(mu_name(n));
    if (it != phi.end()) out[n] = it->second;
  }
  return out;
}

}  // namespace dgop
