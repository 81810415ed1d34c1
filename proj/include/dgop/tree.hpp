#pragma once

#include <string>
#include <vector>

#include "dgop/perm.hpp"

namespace dgop {

/* Abstract r-tree in canonical form.
 *
 * Vertices are stored in depth-first preorder from the root; node 0 is the
 * root vertex (when the tree has vertices at all).  Entries of a vertex are
 * its children in canonical order: children sorted by their minimal leaf
 * label, leaves encoded as negative values -(k) for leaf k (1-based),
 * children vertices by node index.  The unit 1-tree has r = 1 and no
 * vertices.  Internal edge k (k = 1..V-1) is the outgoing edge of vertex k;
 * depth-first vertex order doubles as the edge orientation order for cube
 * cells.
 *
 * Canonical form is unique per isomorphism class: reduced trees have no
 * automorphisms, so sorting children by min-leaf pins everything. */
struct RTree {
  int r = 1;
  struct Node {
    std::vector<int> kids;  // <0: leaf -(k); >=0: vertex index
  };
  std::vector<Node> nodes;
  std::vector<int> parent;  // parent vertex of node k (-1 for root)

  bool is_unit() const { return nodes.empty(); }
  int n_vertices() const { return static_cast<int>(nodes.size()); }
  int n_internal_edges() const { return nodes.empty() ? 0 : n_vertices() - 1; }
  int arity_of(int v) const { return static_cast<int>(nodes[v].kids.size()); }
  int min_leaf(int v) const;  // minimal leaf label below vertex v (1-based)

  bool one_reduced() const {
    for (auto& nd : nodes)
      if (nd.kids.size() < 2) return false;
    return true;
  }

  std::string str() const;
  static RTree parse(const std::string& s);

  bool operator==(const RTree& o) const { return r == o.r && str() == o.str(); }
  bool operator<(const RTree& o) const { return str() < o.str(); }
};

RTree unit_tree();
RTree corolla(int r);

/* Canonicalize an arbitrary parent/children description.  `perm_out`, when
 * given, receives for each old vertex id its new index, and
 * `entry_perm_out[old vertex]` the permutation applied to its entry list
 * (new position of old entry slot i at index i, 0-based). */
struct RawTree {
  int r = 1;
  std::vector<std::vector<int>> kids;  // per vertex; <0 leaf -(k), >=0 vertex id
  int root = -1;                       // vertex id of the root (-1 = unit tree)
};
RTree canonicalize(const RawTree& raw, std::vector<int>* vert_map = nullptr,
                   std::vector<std::vector<int>>* entry_perm_out = nullptr);

/* Grafting: identify the root of t with leaf i of s, reindex leaves by the
 * standard o_i convention.  vert_map_s / vert_map_t give the new index of
 * each old vertex; entry perms as in canonicalize. */
RTree graft(const RTree& s, int i, const RTree& t, std::vector<int>* vert_map_s = nullptr,
            std::vector<int>* vert_map_t = nullptr,
            std::vector<std::vector<int>>* entry_perm_out = nullptr);

/* Contract internal edge e (= vertex index e >= 1, its outgoing edge).
 * Entries of the merged vertex: parent entries with the slot of e replaced
 * by e's entry list.  Returns canonical tree; vert_map[old] = new index
 * with the merged vertex reported for both endpoints. */
RTree contract_edge(const RTree& t, int e, std::vector<int>* vert_map = nullptr,
                    std::vector<std::vector<int>>* entry_perm_out = nullptr,
                    int* merged_slot_out = nullptr);

/* Relabel leaves by w (leaf k becomes leaf w(k)) and recanonicalize. */
RTree relabel_leaves(const RTree& t, const Perm& w, std::vector<int>* vert_map = nullptr,
                     std::vector<std::vector<int>>* entry_perm_out = nullptr);

/* One representative per isomorphism class of 1-reduced r-trees with at
 * most max_edges internal edges, sorted by serialization. */
std::vector<RTree> enumerate_reduced_trees(int r, int max_edges);

/* DOT export; edge_decor[k] (when given) decorates internal edge k. */
std::string tree_dot(const RTree& t, const std::vector<std::string>& vertex_labels = {},
                     const std::vector<std::string>& edge_decor = {});

}  // namespace dgop
