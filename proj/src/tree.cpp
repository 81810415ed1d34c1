#include "dgop/tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace dgop {

int RTree::min_leaf(int v) const {
  int best = 1 << 30;
  std::function<void(int)> rec = [&](int u) {
    for (int k : nodes[u].kids) {
      if (k < 0)
        best = std::min(best, -k);
      else
        rec(k);
    }
  };
  rec(v);
  return best;
}

std::string RTree::str() const {
  if (is_unit()) return "|";
  std::function<std::string(int)> rec = [&](int v) -> std::string {
    std::string s = "(";
    bool first = true;
    for (int k : nodes[v].kids) {
      if (!first) s += " ";
      first = false;
      s += (k < 0) ? std::to_string(-k) : rec(k);
    }
    return s + ")";
  };
  return rec(0);
}

RTree unit_tree() {
  RTree t;
  t.r = 1;
  return t;
}

RTree corolla(int r) {
  RTree t;
  t.r = r;
  RTree::Node n;
  for (int k = 1; k <= r; ++k) n.kids.push_back(-k);
  t.nodes.push_back(n);
  t.parent.push_back(-1);
  return t;
}

namespace {

struct Tmp {
  int old_id = -1;           // original vertex id (or -1)
  int min_leaf = 1 << 30;
  std::vector<int> leaf_kids;                  // placeholder, unused
  std::vector<std::pair<int, Tmp>> vkids;      // unused
  // children in canonical order: pair(kind): leaf -> (-k, null), vertex -> idx into subs
  struct Child {
    int leaf = 0;  // >0 means leaf label, 0 means vertex
    int sub = -1;
  };
  std::vector<Child> children;
  std::vector<Tmp> subs;
  std::vector<int> entry_perm;  // old slot -> new slot
};

Tmp build_tmp(const RawTree& raw, int v) {
  Tmp t;
  t.old_id = v;
  struct Item {
    int min_leaf;
    int leaf;  // >0 leaf label, 0 vertex
    Tmp sub;
    int old_slot;
  };
  std::vector<Item> items;
  int slot = 0;
  for (int k : raw.kids[v]) {
    Item it;
    it.old_slot = slot++;
    if (k < 0) {
      it.leaf = -k;
      it.min_leaf = -k;
    } else {
      it.leaf = 0;
      it.sub = build_tmp(raw, k);
      it.min_leaf = it.sub.min_leaf;
    }
    items.push_back(std::move(it));
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) { return a.min_leaf < b.min_leaf; });
  t.entry_perm.assign(items.size(), 0);
  for (size_t pos = 0; pos < items.size(); ++pos) {
    t.entry_perm[items[pos].old_slot] = static_cast<int>(pos);
    Tmp::Child c;
    if (items[pos].leaf > 0) {
      c.leaf = items[pos].leaf;
    } else {
      c.sub = static_cast<int>(t.subs.size());
      t.subs.push_back(std::move(items[pos].sub));
    }
    t.children.push_back(c);
    t.min_leaf = std::min(t.min_leaf, items[pos].min_leaf);
  }
  return t;
}

void flatten(const Tmp& t, RTree& out, int parent, std::vector<int>* vert_map,
             std::vector<std::vector<int>>* entry_perm_out) {
  const int idx = static_cast<int>(out.nodes.size());
  out.nodes.emplace_back();
  out.parent.push_back(parent);
  if (vert_map && t.old_id >= 0) (*vert_map)[t.old_id] = idx;
  if (entry_perm_out && t.old_id >= 0) (*entry_perm_out)[t.old_id] = t.entry_perm;
  for (auto& c : t.children) {
    if (c.leaf > 0) {
      out.nodes[idx].kids.push_back(-c.leaf);
    } else {
      const int child_idx = static_cast<int>(out.nodes.size());
      out.nodes[idx].kids.push_back(child_idx);
      flatten(t.subs[c.sub], out, idx, vert_map, entry_perm_out);
    }
  }
}

}  // namespace

RTree canonicalize(const RawTree& raw, std::vector<int>* vert_map,
                   std::vector<std::vector<int>>* entry_perm_out) {
  RTree out;
  out.r = raw.r;
  if (raw.root < 0) return out;  // unit tree
  if (vert_map) vert_map->assign(raw.kids.size(), -1);
  if (entry_perm_out) entry_perm_out->assign(raw.kids.size(), {});
  Tmp t = build_tmp(raw, raw.root);
  flatten(t, out, -1, vert_map, entry_perm_out);
  return out;
}

RTree graft(const RTree& s, int i, const RTree& t, std::vector<int>* vert_map_s,
            std::vector<int>* vert_map_t, std::vector<std::vector<int>>* entry_perm_out) {
  if (i < 1 || i > s.r) throw std::invalid_argument("graft: leaf index out of range");
  auto ident = [](const RTree& x) {
    std::vector<int> m(x.n_vertices());
    for (int k = 0; k < x.n_vertices(); ++k) m[k] = k;
    return m;
  };
  if (t.is_unit()) {
    if (vert_map_s) *vert_map_s = ident(s);
    if (vert_map_t) vert_map_t->clear();
    if (entry_perm_out) {
      entry_perm_out->clear();
      for (int v = 0; v < s.n_vertices(); ++v) {
        std::vector<int> p(s.arity_of(v));
        for (size_t a = 0; a < p.size(); ++a) p[a] = static_cast<int>(a);
        entry_perm_out->push_back(p);
      }
    }
    return s;
  }
  if (s.is_unit()) {
    if (vert_map_t) *vert_map_t = ident(t);
    if (vert_map_s) vert_map_s->clear();
    if (entry_perm_out) {
      entry_perm_out->clear();
      for (int v = 0; v < t.n_vertices(); ++v) {
        std::vector<int> p(t.arity_of(v));
        for (size_t a = 0; a < p.size(); ++a) p[a] = static_cast<int>(a);
        entry_perm_out->push_back(p);
      }
    }
    return t;
  }
  RawTree raw;
  raw.r = s.r + t.r - 1;
  const int Vs = s.n_vertices(), Vt = t.n_vertices();
  raw.kids.resize(Vs + Vt);
  for (int v = 0; v < Vs; ++v) {
    for (int k : s.nodes[v].kids) {
      if (k >= 0) {
        raw.kids[v].push_back(k);
      } else {
        int leaf = -k;
        if (leaf == i)
          raw.kids[v].push_back(Vs);  // t's root
        else
          raw.kids[v].push_back(-(leaf < i ? leaf : leaf + t.r - 1));
      }
    }
  }
  for (int v = 0; v < Vt; ++v) {
    for (int k : t.nodes[v].kids) {
      if (k >= 0)
        raw.kids[Vs + v].push_back(Vs + k);
      else
        raw.kids[Vs + v].push_back(-((-k) + i - 1));
    }
  }
  raw.root = 0;
  std::vector<int> vm;
  RTree out = canonicalize(raw, &vm, entry_perm_out);
  if (vert_map_s) vert_map_s->assign(vm.begin(), vm.begin() + Vs);
  if (vert_map_t) vert_map_t->assign(vm.begin() + Vs, vm.end());
  return out;
}

RTree contract_edge(const RTree& t, int e, std::vector<int>* vert_map,
                    std::vector<std::vector<int>>* entry_perm_out, int* merged_slot_out) {
  if (e < 1 || e >= t.n_vertices())
    throw std::invalid_argument("contract_edge: not an internal edge");
  const int p = t.parent[e];
  RawTree raw;
  raw.r = t.r;
  raw.kids.resize(t.n_vertices());
  for (int v = 0; v < t.n_vertices(); ++v) {
    if (v == e) continue;
    if (v == p) {
      for (int k : t.nodes[v].kids) {
        if (k == e) {
          if (merged_slot_out) {
            int slot = 0;
            for (int kk : t.nodes[v].kids) {
              if (kk == e) break;
              slot++;
            }
            *merged_slot_out = slot;
          }
          for (int k2 : t.nodes[e].kids) raw.kids[v].push_back(k2);
        } else {
          raw.kids[v].push_back(k);
        }
      }
    } else {
      raw.kids[v] = t.nodes[v].kids;
    }
  }
  // reattach children of e to p happens above; vertices keep their ids, e unused
  raw.root = 0;
  std::vector<int> vm;
  RTree out = canonicalize(raw, &vm, entry_perm_out);
  if (vert_map) {
    *vert_map = vm;
    (*vert_map)[e] = vm[p];
  }
  return out;
}

RTree relabel_leaves(const RTree& t, const Perm& w, std::vector<int>* vert_map,
                     std::vector<std::vector<int>>* entry_perm_out) {
  if (w.n() != t.r) throw std::invalid_argument("relabel_leaves: arity mismatch");
  if (t.is_unit()) return t;
  RawTree raw;
  raw.r = t.r;
  raw.kids.resize(t.n_vertices());
  for (int v = 0; v < t.n_vertices(); ++v)
    for (int k : t.nodes[v].kids) raw.kids[v].push_back(k >= 0 ? k : -w(-k));
  raw.root = 0;
  return canonicalize(raw, vert_map, entry_perm_out);
}

namespace {
/* all set partitions of `elems` into >= 2 blocks, blocks and block lists in
 * canonical order */
void partitions_rec(const std::vector<int>& elems, size_t idx,
                    std::vector<std::vector<int>>& cur,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (idx == elems.size()) {
    if (cur.size() >= 2) out.push_back(cur);
    return;
  }
  const size_t nblocks = cur.size();
  for (size_t b = 0; b < nblocks; ++b) {
    cur[b].push_back(elems[idx]);
    partitions_rec(elems, idx + 1, cur, out);
    cur[b].pop_back();
  }
  cur.push_back({elems[idx]});
  partitions_rec(elems, idx + 1, cur, out);
  cur.pop_back();
}

/* 1-reduced trees on a given sorted leaf set with <= budget internal edges;
 * returned as Raw-ish recursive structures realized directly in RTree via
 * str-free recursion.  We build RawTrees by a little recursion on leaf sets. */
void subtrees_on(const std::vector<int>& leaves, int budget,
                 const std::function<void(const RawTree&)>& emit);

void attach_blocks(const std::vector<std::vector<int>>& blocks, size_t bi, int budget,
                   RawTree partial, std::vector<int> root_kids,
                   const std::function<void(const RawTree&)>& emit) {
  if (bi == blocks.size()) {
    partial.kids[0] = root_kids;
    emit(partial);
    return;
  }
  const auto& blk = blocks[bi];
  if (blk.size() == 1) {
    root_kids.push_back(-blk[0]);
    attach_blocks(blocks, bi + 1, budget, std::move(partial), std::move(root_kids), emit);
    return;
  }
  // enumerate subtrees on blk with <= budget-1 edges each (1 edge to attach)
  subtrees_on(blk, budget - 1, [&](const RawTree& sub) {
    const int used = static_cast<int>(sub.kids.size()) - 1 + 1;  // sub edges + attach edge
    if (used > budget) return;
    RawTree next = partial;
    std::vector<int> rk = root_kids;
    const int off = static_cast<int>(next.kids.size());
    for (auto& kl : sub.kids) {
      std::vector<int> shifted;
      for (int k : kl) shifted.push_back(k >= 0 ? k + off : k);
      next.kids.push_back(shifted);
    }
    rk.push_back(off + sub.root);
    attach_blocks(blocks, bi + 1, budget - used, std::move(next), std::move(rk), emit);
  });
}

void subtrees_on(const std::vector<int>& leaves, int budget,
                 const std::function<void(const RawTree&)>& emit) {
  // root vertex with a partition of `leaves` into >= 2 blocks
  std::vector<std::vector<std::vector<int>>> parts;
  std::vector<std::vector<int>> cur;
  partitions_rec(leaves, 0, cur, parts);
  for (auto& blocks : parts) {
    RawTree base;
    base.r = 0;  // leaf labels are global here
    base.kids.resize(1);
    base.root = 0;
    attach_blocks(blocks, 0, budget, base, {}, emit);
  }
}
}  // namespace

std::vector<RTree> enumerate_reduced_trees(int r, int max_edges) {
  std::vector<RTree> out;
  if (r < 1) throw std::invalid_argument("enumerate_reduced_trees: r >= 1 required");
  if (r == 1) {
    out.push_back(unit_tree());
    return out;
  }
  std::vector<int> leaves(r);
  for (int k = 0; k < r; ++k) leaves[k] = k + 1;
  std::map<std::string, RTree> seen;
  subtrees_on(leaves, max_edges, [&](const RawTree& raw) {
    RawTree full = raw;
    full.r = r;
    RTree t = canonicalize(full);
    seen.emplace(t.str(), t);
  });
  for (auto& [k, t] : seen) out.push_back(t);
  return out;
}

RTree RTree::parse(const std::string& s) {
  if (s == "|") return unit_tree();
  size_t pos = 0;
  RawTree raw;
  int max_leaf = 0;
  std::function<int()> rec = [&]() -> int {
    if (s[pos] != '(') throw std::invalid_argument("tree parse error");
    pos++;
    const int v = static_cast<int>(raw.kids.size());
    raw.kids.emplace_back();
    while (pos < s.size() && s[pos] != ')') {
      if (s[pos] == ' ') {
        pos++;
        continue;
      }
      if (s[pos] == '(') {
        int c = rec();
        raw.kids[v].push_back(c);
      } else {
        int leaf = 0;
        while (pos < s.size() && isdigit(s[pos])) leaf = leaf * 10 + (s[pos++] - '0');
        max_leaf = std::max(max_leaf, leaf);
        raw.kids[v].push_back(-leaf);
      }
    }
    pos++;  // ')'
    return v;
  };
  raw.root = rec();
  raw.r = max_leaf;
  return canonicalize(raw);
}

std::string tree_dot(const RTree& t, const std::vector<std::string>& vertex_labels,
                     const std::vector<std::string>& edge_decor) {
  std::ostringstream os;
  os << "digraph tree {\n  rankdir=BT;\n  root [shape=point];\n";
  if (t.is_unit()) {
    os << "  l1 [label=\"1\", shape=none];\n  l1 -> root;\n}\n";
    return os.str();
  }
  for (int v = 0; v < t.n_vertices(); ++v) {
    std::string lbl = (v < static_cast<int>(vertex_labels.size()) && !vertex_labels[v].empty())
                          ? vertex_labels[v]
                          : ("v" + std::to_string(v));
    os << "  v" << v << " [label=\"" << lbl << "\"];\n";
  }
  for (int v = 0; v < t.n_vertices(); ++v) {
    for (int k : t.nodes[v].kids) {
      if (k < 0) {
        os << "  l" << -k << " [label=\"" << -k << "\", shape=none];\n";
        os << "  l" << -k << " -> v" << v << ";\n";
      }
    }
  }
  for (int e = 1; e < t.n_vertices(); ++e) {
    os << "  v" << e << " -> v" << t.parent[e];
    if (e - 1 < static_cast<int>(edge_decor.size()) && !edge_decor[e - 1].empty())
      os << " [label=\"" << edge_decor[e - 1] << "\"]";
    os << ";\n";
  }
  os << "  v0 -> root;\n}\n";
  return os.str();
}

}  // namespace dgop
