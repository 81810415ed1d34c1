#include "dgop/barratt_eccles.hpp"

#include <sstream>

namespace dgop {

std::string be_key(const BEWord& w) {
  std::string s = "[";
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += "|";
    s += w[k].str();
  }
  return s + "]";
}

BEWord be_parse(const Key& k) {
  if (k.size() < 2 || k.front() != '[' || k.back() != ']')
    throw ShapeError("not a Barratt-Eccles key: " + k);
  BEWord out;
  std::string body = k.substr(1, k.size() - 2);
  if (body.empty()) return out;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, '|')) out.push_back(Perm::parse(tok));
  return out;
}

bool be_nondegenerate(const BEWord& w) {
  for (size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k] == w[k + 1]) return false;
  return true;
}

Perm perm_partial_compose(const Perm& w, int i, const Perm& u) {
  const int s = w.n(), t = u.n();
  Perm out;
  out.img.reserve(s + t - 1);
  for (int j = 1; j <= s; ++j) {
    const int a = w(j);
    if (a < i) {
      out.img.push_back(a - 1);
    } else if (a == i) {
      for (int l = 1; l <= t; ++l) out.img.push_back(i - 1 + u(l) - 1);
    } else {
      out.img.push_back(a + t - 2);
    }
  }
  return out;
}

Perm perm_delete_slot(const Perm& w, int i) {
  const int a = w(i);
  Perm out;
  out.img.reserve(w.n() - 1);
  for (int j = 1; j <= w.n(); ++j) {
    if (j == i) continue;
    const int b = w(j);
    out.img.push_back((b > a ? b - 1 : b) - 1);
  }
  return out;
}

int BarrattEccles::key_arity(const Key& k) const {
  BEWord w = be_parse(k);
  return w.empty() ? 0 : w[0].n();
}
int BarrattEccles::key_degree(const Key& k) const {
  BEWord w = be_parse(k);
  return w.empty() ? 0 : static_cast<int>(w.size()) - 1;
}

void BarrattEccles::for_basis(int r, int d, const std::function<void(const Key&)>& fn) const {
  check_bounds(r, d);
  if (d < 0) return;
  if (r == 0) {
    if (d == 0) fn(star_key());
    return;
  }
  std::vector<Perm> perms;
  {
    std::vector<int> idx(r);
    for (int k = 0; k < r; ++k) idx[k] = k;
    do {
      Perm p;
      p.img = idx;
      perms.push_back(p);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  BEWord w(d + 1);
  std::function<void(int)> rec = [&](int k) {
    if (k == d + 1) {
      fn(be_key(w));
      return;
    }
    for (auto& p : perms) {
      if (k > 0 && p == w[k - 1]) continue;
      w[k] = p;
      rec(k + 1);
    }
  };
  rec(0);
}

std::vector<Key> BarrattEccles::basis(int r, int d) const {
  std::vector<Key> out;
  for_basis(r, d, [&](const Key& k) { out.push_back(k); });
  std::sort(out.begin(), out.end());
  return out;
}

void BarrattEccles::word_diff(const BEWord& w, std::vector<std::pair<BEWord, int>>& out) {
  out.clear();
  if (w.size() <= 1) return;
  for (size_t k = 0; k < w.size(); ++k) {
    BEWord v;
    v.reserve(w.size() - 1);
    for (size_t j = 0; j < w.size(); ++j)
      if (j != k) v.push_back(w[j]);
    if (be_nondegenerate(v)) out.emplace_back(std::move(v), (k % 2 == 0) ? 1 : -1);
  }
}

KSum BarrattEccles::diff(const Key& k) const {
  BEWord w = be_parse(k);
  std::vector<std::pair<BEWord, int>> terms;
  word_diff(w, terms);
  KSum out;
  for (auto& [v, sgn] : terms) out.add(be_key(v), sgn, field);
  return out;
}

KSum BarrattEccles::act(const Perm& w, const Key& k) const {
  BEWord x = be_parse(k);
  for (auto& p : x) p = w * p;
  return KSum::single(be_key(x), 1, field);
}

KSum BarrattEccles::compose(const Key& pk, int i, const Key& qk) const {
  BEWord x = be_parse(pk), y = be_parse(qk);
  if (x.empty() || y.empty()) {
    /* composites with the unital operation */
    if (y.empty()) return partial_unit(pk, i);
    /* x = *: only possible with arity(x)=0; no slots */
    throw ShapeError("E: cannot compose into the 0-ary operation");
  }
  const int s = x[0].n();
  if (i < 1 || i > s) throw ShapeError("E: slot out of range");
  const int p = static_cast<int>(x.size()) - 1, q = static_cast<int>(y.size()) - 1;
  KSum out;
  for (auto& [sh, sgn] : pq_shuffles(p, q)) {
    /* lattice path: step k ascends in x if position k is in the first block */
    BEWord v;
    v.reserve(p + q + 1);
    int a = 0, b = 0;
    v.push_back(perm_partial_compose(x[0], i, y[0]));
    std::vector<int> step(p + q, 0);  // 0: x-step, 1: y-step
    for (int k = 0; k < p; ++k) step[sh.img[k]] = 0;
    for (int k = 0; k < q; ++k) step[sh.img[p + k]] = 1;
    for (int k = 0; k < p + q; ++k) {
      if (step[k] == 0)
        a++;
      else
        b++;
      v.push_back(perm_partial_compose(x[a], i, y[b]));
    }
    if (be_nondegenerate(v)) out.add(be_key(v), field.sign(sgn), field);
  }
  return out;
}

KSum BarrattEccles::partial_unit(const Key& k, int i) const {
  /* induced by the simplicial slot deletion on normalized chains: the image
   * word is zero whenever two adjacent entries collide */
  BEWord w = be_parse(k);
  if (w.empty()) throw ShapeError("E: o_i * undefined on *");
  BEWord v;
  v.reserve(w.size());
  for (auto& p : w) v.push_back(perm_delete_slot(p, i));
  if (!be_nondegenerate(v)) return {};
  return KSum::single(be_key(v), 1, field);
}

DSum BarrattEccles::diagonal(const Key& k) const {
  BEWord w = be_parse(k);
  DSum out;
  if (w.empty()) {
    out.add({k, k}, 1, field);
    return out;
  }
  for (size_t c = 0; c < w.size(); ++c) {
    BEWord front(w.begin(), w.begin() + c + 1);
    BEWord back(w.begin() + c, w.end());
    out.add({be_key(front), be_key(back)}, 1, field);
  }
  return out;
}

int64_t BarrattEccles::counit(const Key& k) const { return key_degree(k) == 0 ? 1 : 0; }

bool BarrattEccles::word_nu(const BEWord& w, BEWord& out) {
  if (w.empty()) return false;
  if (w[0].is_identity()) return false;
  out.clear();
  out.reserve(w.size() + 1);
  out.push_back(Perm(w[0].n()));
  for (auto& p : w) out.push_back(p);
  return true;
}

KSum BarrattEccles::nu(const Key& k) const {
  BEWord w = be_parse(k), v;
  if (!word_nu(w, v)) return {};
  return KSum::single(be_key(v), 1, field);
}

}  // namespace dgop
