#include "dgop/free_operad.hpp"

#include <algorithm>
#include <functional>

namespace dgop {

std::string FTerm::str() const {
  if (is_leaf()) return std::to_string(leaf);
  std::string s = gen + "(";
  for (size_t k = 0; k < kids.size(); ++k) {
    if (k) s += " ";
    s += kids[k].str();
  }
  return s + ")";
}

FTerm FTerm::parse(const std::string& s) {
  size_t pos = 0;
  std::function<FTerm()> rec = [&]() -> FTerm {
    FTerm t;
    if (isdigit(s[pos])) {
      int v = 0;
      while (pos < s.size() && isdigit(s[pos])) v = v * 10 + (s[pos++] - '0');
      t.leaf = v;
      return t;
    }
    std::string name;
    while (pos < s.size() && s[pos] != '(') name += s[pos++];
    t.gen = name;
    pos++;  // '('
    while (pos < s.size() && s[pos] != ')') {
      if (s[pos] == ' ') {
        pos++;
        continue;
      }
      t.kids.push_back(rec());
    }
    pos++;  // ')'
    return t;
  };
  return rec();
}

namespace {
int term_min_leaf(const FTerm& t) {
  if (t.is_leaf()) return t.leaf;
  int best = 1 << 30;
  for (auto& k : t.kids) best = std::min(best, term_min_leaf(k));
  return best;
}
int term_max_leaf(const FTerm& t) {
  if (t.is_leaf()) return t.leaf;
  int best = 0;
  for (auto& k : t.kids) best = std::max(best, term_max_leaf(k));
  return best;
}
void term_relabel(FTerm& t, const std::function<int(int)>& fn) {
  if (t.is_leaf()) {
    t.leaf = fn(t.leaf);
    return;
  }
  for (auto& k : t.kids) term_relabel(k, fn);
}
}  // namespace

FreeOperad::FreeOperad(Field f, std::vector<FGen> gens, int arity_b, int degree_b)
    : gens_(std::move(gens)) {
  field = f;
  arity_bound = arity_b;
  degree_bound = degree_b;
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].arity < 2)
      throw ShapeError("free operad generators must have arity >= 2");
    gen_index_[gens_[i].name] = i;
  }
}

const FGen& FreeOperad::gen(const std::string& n) const {
  auto it = gen_index_.find(n);
  if (it == gen_index_.end()) throw ShapeError("unknown generator " + n);
  return gens_[it->second];
}

void FreeOperad::set_generator_diff(const std::string& g, const KSum& image) {
  gen(g);
  gen_diff_[g] = image;
}

int FreeOperad::key_arity(const Key& k) const { return term_max_leaf(FTerm::parse(k)); }

int FreeOperad::key_degree(const Key& k) const {
  FTerm t = FTerm::parse(k);
  int d = 0;
  std::function<void(const FTerm&)> rec = [&](const FTerm& x) {
    if (x.is_leaf()) return;
    d += gen(x.gen).degree;
    for (auto& c : x.kids) rec(c);
  };
  rec(t);
  return d;
}

/* sort children of trivial-action vertices by min leaf; Koszul sign over the
 * permuted blocks of vertex labels (preorder). */
int64_t FreeOperad::sort_rec(FTerm& t, std::vector<int>& degs_out) const {
  if (t.is_leaf()) return 1;
  int64_t sign = 1;
  std::vector<std::pair<int, size_t>> order;  // (min leaf, child index)
  std::vector<std::vector<int>> kid_degs(t.kids.size());
  for (size_t c = 0; c < t.kids.size(); ++c) {
    sign = field.mul(sign, sort_rec(t.kids[c], kid_degs[c]));
    order.emplace_back(term_min_leaf(t.kids[c]), c);
  }
  const bool sortit = gen(t.gen).trivial_action;
  if (sortit) {
    auto sorted = order;
    std::stable_sort(sorted.begin(), sorted.end());
    if (sorted != order) {
      /* Koszul sign of the block permutation on the concatenated label
       * sequences of the subtrees */
      std::vector<int> flat_degs;
      std::vector<int> perm;  // target position of each source factor
      std::vector<int> block_target(t.kids.size());
      for (size_t pos = 0; pos < sorted.size(); ++pos) block_target[sorted[pos].second] = pos;
      std::vector<int> block_offset(t.kids.size(), 0);
      {
        std::vector<int> sizes(t.kids.size());
        for (size_t c = 0; c < t.kids.size(); ++c) sizes[c] = kid_degs[c].size();
        int acc = 0;
        for (size_t pos = 0; pos < sorted.size(); ++pos) {
          block_offset[sorted[pos].second] = acc;
          acc += sizes[sorted[pos].second];
        }
      }
      int slot = 0;
      for (size_t c = 0; c < t.kids.size(); ++c) {
        for (size_t j = 0; j < kid_degs[c].size(); ++j) {
          flat_degs.push_back(kid_degs[c][j]);
          perm.push_back(block_offset[c] + static_cast<int>(j));
          (void)slot;
        }
      }
      if (koszul_exponent(flat_degs, perm)) sign = field.mul(sign, field.neg(1));
      std::vector<FTerm> newkids;
      for (auto& [ml, c] : sorted) newkids.push_back(std::move(t.kids[c]));
      t.kids = std::move(newkids);
      std::vector<std::vector<int>> newdegs;
      for (auto& [ml, c] : sorted) newdegs.push_back(std::move(kid_degs[c]));
      kid_degs = std::move(newdegs);
    }
  }
  degs_out.clear();
  degs_out.push_back(gen(t.gen).degree);
  for (auto& kd : kid_degs) degs_out.insert(degs_out.end(), kd.begin(), kd.end());
  return sign;
}

std::pair<Key, int64_t> FreeOperad::canon(FTerm t) const {
  std::vector<int> degs;
  int64_t sign = sort_rec(t, degs);
  return {t.str(), sign};
}

namespace {
int term_degree_rec(const FTerm& t, const std::function<int(const std::string&)>& gdeg) {
  if (t.leaf != 0) return 0;
  int d = gdeg(t.gen);
  for (auto& c : t.kids) d += term_degree_rec(c, gdeg);
  return d;
}
/* total degree of the labels emitted strictly after leaf `leaf` in the
 * preorder walk of t; returns true when the leaf was found below t */
bool degree_after_leaf(const FTerm& t, int leaf, int& acc,
                       const std::function<int(const std::string&)>& gdeg) {
  if (t.leaf != 0) return t.leaf == leaf;
  for (size_t c = 0; c < t.kids.size(); ++c) {
    if (degree_after_leaf(t.kids[c], leaf, acc, gdeg)) {
      for (size_t c2 = c + 1; c2 < t.kids.size(); ++c2)
        acc += term_degree_rec(t.kids[c2], gdeg);
      return true;
    }
  }
  return false;
}
}  // namespace

/* Basis terms are identified with the tensor of their vertex labels in
 * preorder; grafting q below leaf i moves the q-block past the p-labels
 * that follow the leaf in preorder, at the Koszul cost
 * (-1)^{|q| * (degree after the leaf)}. */
KSum FreeOperad::compose(const Key& pk, int i, const Key& qk) const {
  if (pk == "1") {
    if (i != 1) throw ShapeError(name_ + ": slot out of range in compose");
    return KSum::single(qk, 1, field);
  }
  if (qk == "1") return KSum::single(pk, 1, field);
  FTerm p = FTerm::parse(pk), q = FTerm::parse(qk);
  const int s = term_max_leaf(p), t = term_max_leaf(q);
  if (i < 1 || i > s) throw ShapeError(name_ + ": slot out of range in compose");
  auto gdeg = [&](const std::string& g) { return gen(g).degree; };
  int after = 0;
  degree_after_leaf(p, i, after, gdeg);
  const int qdeg = term_degree_rec(q, gdeg);
  int64_t sign = field.sign(qdeg * after);
  term_relabel(p, [&](int l) { return l < i ? l : (l == i ? -1 : l + t - 1); });
  term_relabel(q, [&](int l) { return l + i - 1; });
  std::function<void(FTerm&)> subst = [&](FTerm& x) {
    if (x.leaf != 0) return;
    for (auto& c : x.kids) {
      if (c.leaf == -1)
        c = q;
      else
        subst(c);
    }
  };
  subst(p);
  auto [key, csign] = canon(std::move(p));
  return KSum::single(key, field.mul(sign, csign), field);
}

KSum FreeOperad::act(const Perm& w, const Key& k) const {
  FTerm t = FTerm::parse(k);
  if (w.n() != term_max_leaf(t)) throw ShapeError(name_ + ": arity mismatch in action");
  term_relabel(t, [&](int l) { return w(l); });
  auto [key, sign] = canon(std::move(t));
  return KSum::single(key, sign, field);
}

/* Derivation extending the generator differential, for the preorder-tensor
 * identification of basis terms: d(c_j) carries the prefix sign
 * (-1)^{|g| + |c_1| + ... + |c_{j-1}|}; substituting a pattern P for the top
 * generator costs the Koszul sign of interleaving the P-labels (formally a
 * block in front of all child labels) into the preorder of the substituted
 * term. */
KSum FreeOperad::diff(const Key& k) const {
  FTerm t = FTerm::parse(k);
  if (t.leaf != 0) return {};
  auto gdeg = [&](const std::string& g) { return gen(g).degree; };
  KSum out;
  auto it = gen_diff_.find(t.gen);
  if (it != gen_diff_.end() && !it->second.is_zero()) {
    /* child label-degree block sizes (in label counts and degrees) */
    const int kkids = static_cast<int>(t.kids.size());
    std::vector<int> kid_deg(kkids);
    std::vector<int> kid_labels(kkids);
    std::function<int(const FTerm&)> nlabels = [&](const FTerm& x) -> int {
      if (x.leaf != 0) return 0;
      int n = 1;
      for (auto& c : x.kids) n += nlabels(c);
      return n;
    };
    for (int j = 0; j < kkids; ++j) {
      kid_deg[j] = term_degree_rec(t.kids[j], gdeg);
      kid_labels[j] = nlabels(t.kids[j]);
    }
    for (auto& [patkey, c] : it->second.t) {
      FTerm pat = FTerm::parse(patkey);
      /* interleave sign: formal order = [pattern labels][child blocks 1..k];
       * actual = preorder of pattern with child blocks at its leaves */
      std::vector<int> pat_label_degs;
      std::vector<int> actual;  // formal index of each emitted block/label
      /* single pass: emit markers and collect pattern degrees in preorder */
      std::function<void(const FTerm&)> walk1 = [&](const FTerm& x) {
        if (x.leaf != 0) {
          actual.push_back(-x.leaf);
          return;
        }
        actual.push_back(static_cast<int>(pat_label_degs.size()));
        pat_label_degs.push_back(gdeg(x.gen));
        for (auto& cc : x.kids) walk1(cc);
      };
      walk1(pat);
      const int np = static_cast<int>(pat_label_degs.size());
      /* formal sequence: pattern labels 0..np-1, then child blocks */
      std::vector<int> degs, perm;
      degs.reserve(np + kkids);
      for (int a = 0; a < np; ++a) degs.push_back(pat_label_degs[a]);
      for (int j = 0; j < kkids; ++j) degs.push_back(kid_deg[j]);
      perm.assign(np + kkids, -1);
      int pos = 0;
      for (int a : actual) {
        if (a >= 0)
          perm[a] = pos++;
        else
          perm[np + (-a) - 1] = pos++;
      }
      int64_t sgn = field.sign(koszul_exponent(degs, perm));
      FTerm sub;
      if (pat.leaf != 0) {
        sub = t.kids[pat.leaf - 1];
      } else {
        sub = pat;
        std::function<void(FTerm&)> plug = [&](FTerm& x) {
          if (x.leaf != 0) return;
          for (auto& cc : x.kids) {
            if (cc.leaf != 0)
              cc = t.kids[cc.leaf - 1];
            else
              plug(cc);
          }
        };
        plug(sub);
      }
      auto [key2, s2] = canon(std::move(sub));
      out.add(key2, field.mul(field.mul(c, sgn), s2), field);
    }
  }
  int prefix = gdeg(t.gen);
  for (size_t j = 0; j < t.kids.size(); ++j) {
    if (!t.kids[j].is_leaf()) {
      KSum dj = diff(t.kids[j].str());
      const int64_t sgn = field.sign(prefix);
      for (auto& [ck, cc] : dj.t) {
        FTerm copy = t;
        copy.kids[j] = FTerm::parse(ck);
        auto [key2, s2] = canon(std::move(copy));
        out.add(key2, field.mul(field.mul(cc, sgn), s2), field);
      }
      prefix += term_degree_rec(t.kids[j], gdeg);
    }
  }
  return out;
}

void FreeOperad::enumerate(int r, std::map<int, std::vector<Key>>& by_degree) const {
  /* enumerate canonical planar terms on leaf sets */
  std::function<std::vector<FTerm>(const std::vector<int>&)> on_set =
      [&](const std::vector<int>& leaves) -> std::vector<FTerm> {
    std::vector<FTerm> out;
    if (leaves.size() == 1) {
      FTerm t;
      t.leaf = leaves[0];
      out.push_back(t);
      return out;
    }
    for (auto& g : gens_) {
      const int k = g.arity;
      if (k > static_cast<int>(leaves.size())) continue;
      /* ordered partitions of `leaves` into k nonempty blocks; for
       * trivial-action generators only block sequences sorted by min. */
      std::vector<std::vector<std::vector<int>>> parts;
      std::vector<std::vector<int>> cur(k);
      std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == leaves.size()) {
          for (auto& b : cur)
            if (b.empty()) return;
          if (g.trivial_action) {
            for (size_t b = 1; b < cur.size(); ++b)
              if (cur[b - 1][0] > cur[b][0]) return;
          }
          parts.push_back(cur);
          return;
        }
        for (auto& b : cur) {
          b.push_back(leaves[idx]);
          rec(idx + 1);
          b.pop_back();
        }
      };
      rec(0);
      for (auto& blocks : parts) {
        std::vector<std::vector<FTerm>> choices;
        bool dead = false;
        for (auto& b : blocks) {
          choices.push_back(on_set(b));
          if (choices.back().empty()) dead = true;
        }
        if (dead) continue;
        std::vector<size_t> pick(k, 0);
        while (true) {
          FTerm t;
          t.gen = g.name;
          for (int c = 0; c < k; ++c) t.kids.push_back(choices[c][pick[c]]);
          out.push_back(t);
          int c = k - 1;
          while (c >= 0 && ++pick[c] == choices[c].size()) pick[c--] = 0;
          if (c < 0) break;
        }
      }
    }
    return out;
  };
  std::vector<int> leaves(r);
  for (int k = 0; k < r; ++k) leaves[k] = k + 1;
  by_degree.clear();
  if (r == 1) {
    by_degree[0].push_back("1");
    return;
  }
  for (auto& t : on_set(leaves)) {
    Key key = t.str();
    by_degree[key_degree(key)].push_back(key);
  }
  for (auto& [d, v] : by_degree) std::sort(v.begin(), v.end());
}

std::vector<Key> FreeOperad::basis(int r, int d) const {
  check_bounds(r, d);
  if (d < 0) return {};
  auto it = basis_cache_.find(r);
  if (it == basis_cache_.end()) {
    std::map<int, std::vector<Key>> by_degree;
    enumerate(r, by_degree);
    it = basis_cache_.emplace(r, std::move(by_degree)).first;
  }
  auto it2 = it->second.find(d);
  return it2 == it->second.end() ? std::vector<Key>{} : it2->second;
}

KSum evaluate_free_term(const FTerm& t, const std::map<std::string, KSum>& images,
                        const DgOperad& target) {
  const Field& f = target.field;
  struct Res {
    KSum val;
    std::vector<int> leaves;  // sorted leaf labels
  };
  std::function<Res(const FTerm&)> rec = [&](const FTerm& x) -> Res {
    Res r;
    if (x.is_leaf()) {
      r.val = KSum::single(target.unit_key(), 1, f);
      r.leaves = {x.leaf};
      return r;
    }
    auto it = images.find(x.gen);
    if (it == images.end()) throw ShapeError("no image for generator " + x.gen);
    KSum acc = it->second;
    std::vector<Res> kids;
    for (auto& c : x.kids) kids.push_back(rec(c));
    for (int c = static_cast<int>(kids.size()) - 1; c >= 0; --c)
      acc = target.compose_sum(acc, c + 1, kids[c].val);
    /* concatenated input order: kid leaf lists in child order; reorder to the
     * sorted order by the reading permutation */
    std::vector<int> concat;
    for (auto& kd : kids) concat.insert(concat.end(), kd.leaves.begin(), kd.leaves.end());
    std::vector<int> sorted = concat;
    std::sort(sorted.begin(), sorted.end());
    Perm v;
    v.img.resize(concat.size());
    for (size_t j = 0; j < concat.size(); ++j) {
      auto pos = std::lower_bound(sorted.begin(), sorted.end(), concat[j]) - sorted.begin();
      v.img[j] = static_cast<int>(pos);
    }
    r.val = v.is_identity() ? acc : target.act_sum(v, acc);
    r.leaves = sorted;
    return r;
  };
  return rec(t).val;
}

KSum evaluate_free_key(const Key& k, const std::map<std::string, KSum>& images,
                       const DgOperad& target) {
  return evaluate_free_term(FTerm::parse(k), images, target);
}

KSum evaluate_free_key_sum(const KSum& v, const std::map<std::string, KSum>& images,
                           const DgOperad& target) {
  return v.map([&](const Key& k) { return evaluate_free_key(k, images, target); }, target.field);
}

}  // namespace dgop
