#include <functional>
#include <random>

#include "dgop/perm.hpp"
#include "doctest.h"

using namespace dgop;

TEST_CASE("permutation basics") {
  Perm id(3);
  CHECK(id.is_identity());
  Perm t = Perm::parse("213");
  CHECK(t(1) == 2);
  CHECK((t * t).is_identity());
  CHECK(t.parity() == 1);
  CHECK(Perm::parse("231").parity() == 0);
  CHECK(t.cycle_str() == "(1 2)");
  CHECK(Perm::parse("231").cycle_str() == "(1 2 3)");
}

TEST_CASE("bloc permutations") {
  Perm id2(2), tau = Perm::parse("21");
  /* identity on any sizes */
  CHECK(bloc_permutation(id2, {1, 2}).is_identity());
  /* tau on sizes (1,2): (1,2,3) -> (3,1,2) */
  Perm b = bloc_permutation(tau, {1, 2});
  CHECK(b(1) == 3);
  CHECK(b(2) == 1);
  CHECK(b(3) == 2);
  /* empty block */
  CHECK(bloc_permutation(tau, {0, 3}).is_identity());
  Perm b2 = bloc_permutation(tau, {0, 2});
  CHECK(b2.is_identity());

  /* compatibility: bloc(v*w, s) = bloc(v, s permuted by w) * bloc(w, s) */
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 3);
    std::vector<int> imgs(r);
    std::iota(imgs.begin(), imgs.end(), 0);
    std::shuffle(imgs.begin(), imgs.end(), rng);
    Perm w;
    w.img = imgs;
    std::shuffle(imgs.begin(), imgs.end(), rng);
    Perm v;
    v.img = imgs;
    std::vector<int> sizes(r);
    for (auto& s : sizes) s = static_cast<int>(rng() % 3);
    /* sizes seen by v: block at position j has size sizes[w^{-1}(j)] */
    Perm wi = w.inverse();
    std::vector<int> sizes_w(r);
    for (int j = 0; j < r; ++j) sizes_w[j] = sizes[wi.img[j]];
    CHECK(bloc_permutation(v * w, sizes) ==
          bloc_permutation(v, sizes_w) * bloc_permutation(w, sizes));
  }
}

TEST_CASE("shuffle_perm") {
  /* r=1 or n=1: identity */
  CHECK(shuffle_perm(1, 3, {{2}, {1}, {4}}).is_identity());
  CHECK(shuffle_perm(3, 1, {{1, 2, 3}}).is_identity());
  /* r=2, n=2, all groupings of size 1: (1,2,3,4) -> (1,3,2,4) */
  Perm s = shuffle_perm(2, 2, {{1, 1}, {1, 1}});
  CHECK(s(1) == 1);
  CHECK(s(2) == 3);
  CHECK(s(3) == 2);
  CHECK(s(4) == 4);
  /* a size-0 grouping deletes its block: m^1 = (1,1), m^2 = (0,1) */
  Perm s2 = shuffle_perm(2, 2, {{1, 1}, {0, 1}});
  /* groupings in source order: (i=1,j=1) size 1, (i=1,j=2) size 0,
   * (i=2,j=1) size 1, (i=2,j=2) size 1; source (a,b,c), targets:
   * j=1 block: (i=1),(i=2) -> a,b ; j=2 block: (i=2) -> c */
  CHECK(s2(1) == 1);
  CHECK(s2(2) == 2);
  CHECK(s2(3) == 3);
  /* with all groupings of size 1 it equals the bare index permutation */
  Perm s3 = shuffle_perm(2, 3, {{1, 1}, {1, 1}, {1, 1}});
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(s3((i - 1) * 3 + j) == (j - 1) * 2 + i);
}

TEST_CASE("lambda decomposition") {
  /* monotone input */
  InjectiveMap mono(4, {1, 3, 4});
  auto [a0, s0] = lambda_decompose(mono);
  CHECK(a0.img == mono.img);
  CHECK(s0.is_identity());
  /* the worked example: 1 -> 3, 2 -> 1 */
  InjectiveMap u(3, {3, 1});
  auto [a, s] = lambda_decompose(u);
  CHECK(a.img == std::vector<int>{0, 2});
  CHECK(s(1) == 2);
  CHECK(s(2) == 1);
  /* a permutation decomposes as (id, u) */
  InjectiveMap p(3, {2, 3, 1});
  auto [a2, s2] = lambda_decompose(p);
  CHECK(a2.monotone());
  CHECK(a2.img == std::vector<int>{0, 1, 2});
  CHECK(s2 == Perm::parse("231"));

  /* round trip for all u with s <= 5 */
  for (int s5 = 1; s5 <= 5; ++s5) {
    for (int r = 1; r <= s5; ++r) {
      /* enumerate injective maps r -> s5 */
      std::vector<int> img(r, 0);
      std::function<void(int)> rec = [&](int k) {
        if (k == r) {
          std::vector<int> one;
          for (int v : img) one.push_back(v + 1);
          InjectiveMap um(s5, one);
          auto [al, si] = lambda_decompose(um);
          CHECK(al.monotone());
          for (int j = 1; j <= r; ++j) CHECK(al.img[si(j) - 1] == um.img[j - 1]);
          return;
        }
        for (int v = 0; v < s5; ++v) {
          bool used = false;
          for (int j = 0; j < k; ++j) used |= (img[j] == v);
          if (used) continue;
          img[k] = v;
          rec(k + 1);
        }
      };
      rec(0);
    }
  }
}

TEST_CASE("pq shuffles") {
  auto s01 = pq_shuffles(0, 4);
  REQUIRE(s01.size() == 1);
  CHECK(s01[0].first.is_identity());
  CHECK(s01[0].second == 0);

  auto s11 = pq_shuffles(1, 1);
  REQUIRE(s11.size() == 2);
  CHECK(s11[0].second != s11[1].second);

  /* (2,1): 3 shuffles, parity signs 0,1,0 in lexicographic order */
  auto s21 = pq_shuffles(2, 1);
  REQUIRE(s21.size() == 3);
  Field f3(3);
  int64_t total = 0;
  for (auto& [w, e] : s21) total = f3.add(total, f3.sign(e));
  CHECK(total == 1);  // 1 + 2 + 1 = 1 mod 3
}
