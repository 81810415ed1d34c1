#include "dgop/tree.hpp"
#include "doctest.h"

using namespace dgop;

TEST_CASE("tree construction and printing") {
  RTree u = unit_tree();
  CHECK(u.is_unit());
  CHECK(u.str() == "|");
  RTree c3 = corolla(3);
  CHECK(c3.str() == "(1 2 3)");
  CHECK(c3.n_internal_edges() == 0);
  CHECK(RTree::parse("((2 3) 1)").str() == "(1 (2 3))");
}

TEST_CASE("grafting") {
  RTree c2 = corolla(2);
  /* graft(tau_2, 1, tau_2): top vertex entries {1,2}, bottom {v, 3} */
  RTree g = graft(c2, 1, c2);
  CHECK(g.r == 3);
  CHECK(g.str() == "((1 2) 3)");
  CHECK(g.n_internal_edges() == 1);
  /* grafting at leaf 2 */
  CHECK(graft(c2, 2, c2).str() == "(1 (2 3))");
  /* unit laws */
  CHECK(graft(unit_tree(), 1, c2) == c2);
  CHECK(graft(c2, 2, unit_tree()) == c2);
}

TEST_CASE("tree operadic associativity") {
  auto trees2 = enumerate_reduced_trees(2, 1);
  auto trees3 = enumerate_reduced_trees(3, 2);
  std::vector<RTree> all;
  all.insert(all.end(), trees2.begin(), trees2.end());
  all.insert(all.end(), trees3.begin(), trees3.end());
  for (auto& s : all)
    for (auto& t : all)
      for (auto& u : all) {
        if (s.n_internal_edges() + t.n_internal_edges() + u.n_internal_edges() > 3) continue;
        for (int i = 1; i <= s.r; ++i) {
          for (int j = 1; j <= t.r; ++j)
            CHECK(graft(graft(s, i, t), i - 1 + j, u) == graft(s, i, graft(t, j, u)));
          for (int j = i + 1; j <= s.r; ++j)
            CHECK(graft(graft(s, i, t), j + t.r - 1, u) == graft(graft(s, j, u), i, t));
        }
      }
}

TEST_CASE("edge contraction") {
  RTree g = graft(corolla(2), 1, corolla(2));  // ((1 2) 3)
  REQUIRE(g.n_internal_edges() == 1);
  std::vector<int> vm;
  int slot = -1;
  RTree c = contract_edge(g, 1, &vm, nullptr, &slot);
  CHECK(c == corolla(3));
  CHECK(vm[0] == vm[1]);  // endpoints merge
  CHECK(slot == 0);       // the contracted child sat in entry slot 0 of the root

  CHECK_THROWS(contract_edge(corolla(3), 1));

  /* commutation of disjoint contractions */
  RTree t = RTree::parse("((1 2) (3 4))");
  REQUIRE(t.n_internal_edges() == 2);
  RTree a = contract_edge(contract_edge(t, 1), 1);
  RTree b = contract_edge(contract_edge(t, 2), 1);
  CHECK(a == b);
  CHECK(a == corolla(4));
}

TEST_CASE("contract merges entry sets per the union rule") {
  /* tree (1 (3 (2 6)) (4 5)) on 6 leaves: root v1 {1, v3, v2},
   * v3 = (3 (2 6)) with v4 = (2 6), v2 = (4 5) */
  RTree t = RTree::parse("(1 ((2 6) 3) (4 5))");
  CHECK(t.r == 6);
  /* contract the edge from the vertex containing {v4, 3} into the root:
   * result has root entries {1, v4, 3-as... } i.e. shape (1 (2 6) 3 (4 5)) */
  /* locate the edge: vertex whose subtree prints ((2 6) 3) */
  int target = -1;
  for (int e = 1; e < t.n_vertices(); ++e) {
    std::vector<int> vm;
    RTree c = contract_edge(t, e, &vm);
    if (c.str() == "(1 (2 6) 3 (4 5))") target = e;
  }
  CHECK(target != -1);
}

TEST_CASE("reduced tree enumeration") {
  CHECK(enumerate_reduced_trees(1, 5).size() == 1);
  auto t2 = enumerate_reduced_trees(2, 0);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0] == corolla(2));
  /* r=3, <=1 edge: corolla + 3 grafts */
  CHECK(enumerate_reduced_trees(3, 1).size() == 4);
  /* full count r=4: 1 corolla + shapes with 1 edge (binary-in-ternary 6 +
   * ternary-in-binary... ) known count: 1-reduced 4-trees: <=2 edges */
  auto t4 = enumerate_reduced_trees(4, 2);
  /* 1 (corolla) + 10 (one edge: choose entries of the upper vertex: subsets
   * of size 2 or 3 = 6+4) + 15 (two edges) = 26 */
  CHECK(t4.size() == 26);
  /* canonical forms are unique: enumeration is duplicate-free by map */
  for (size_t a = 0; a + 1 < t4.size(); ++a) CHECK(t4[a].str() < t4[a + 1].str());
}

TEST_CASE("relabel leaves") {
  RTree g = RTree::parse("((1 2) 3)");
  RTree h = relabel_leaves(g, Perm::parse("312"));
  /* leaf 1 -> 3, 2 -> 1, 3 -> 2: ((3 1) 2) canonically (2 (1 3))
   * wait: ((3 1) 2) sorts to ((1 3) 2) -> (2 (1 3))? min-leaf of (1 3) is 1,
   * so children order: (1 3) then 2 */
  CHECK(h.str() == "((1 3) 2)");
}

TEST_CASE("tree DOT export") {
  std::string dot = tree_dot(RTree::parse("((1 2) 3)"), {"q", "p"}, {"x01"});
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("x01") != std::string::npos);
  CHECK(dot.find("l3 -> v0") != std::string::npos);
}
