#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "dgop/formal.hpp"

namespace dgop {

/* Permutation of {1..n}, stored 0-based: img[i] = w(i+1) - 1.
 *
 * Composition order is fixed once and for all: (v * w)(k) = v(w(k)), i.e.
 * apply the right factor first.  Permutations act on tensor positions on
 * the left: w moves the factor in slot k to slot w(k). */
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(int n) : img(n) { std::iota(img.begin(), img.end(), 0); }
  explicit Perm(std::vector<int> images_1based) {
    img.reserve(images_1based.size());
    for (int v : images_1based) img.push_back(v - 1);
    validate();
  }

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int k_1based) const { return img[k_1based - 1] + 1; }
  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (img[i] != i) return false;
    return true;
  }
  Perm inverse() const {
    Perm r;
    r.img.resize(n());
    for (int i = 0; i < n(); ++i) r.img[img[i]] = i;
    return r;
  }
  friend Perm operator*(const Perm& v, const Perm& w) {  // apply w first
    Perm r;
    r.img.resize(w.n());
    for (int i = 0; i < w.n(); ++i) r.img[i] = v.img[w.img[i]];
    return r;
  }
  int parity() const {  // number of inversions mod 2
    int e = 0;
    for (int a = 0; a < n(); ++a)
      for (int b = a + 1; b < n(); ++b)
        if (img[a] > img[b]) e ^= 1;
    return e;
  }
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }

  /* one-line image notation: "213" for n<=9, "(2,1,3)" otherwise */
  std::string str() const {
    std::string s;
    if (n() <= 9) {
      for (int i : img) s += static_cast<char>('1' + i);
    } else {
      s += "(";
      for (int i = 0; i < n(); ++i) {
        if (i) s += ",";
        s += std::to_string(img[i] + 1);
      }
      s += ")";
    }
    return s;
  }
  static Perm parse(const std::string& s, int arity_hint = -1);

  std::string cycle_str() const;

  /* apply on the left to a sequence: out[w(k)] = in[k] */
  template <class T>
  std::vector<T> apply(const std::vector<T>& in) const {
    std::vector<T> out(in.size());
    for (size_t i = 0; i < in.size(); ++i) out[img[i]] = in[i];
    return out;
  }

 private:
  void validate() const {
    std::vector<char> seen(img.size(), 0);
    for (int v : img) {
      if (v < 0 || v >= n() || seen[v]) throw std::invalid_argument("not a bijection");
      seen[v] = 1;
    }
  }
};

/* Strictly injective map {1..r} -> {1..s}. */
struct InjectiveMap {
  int s = 0;
  std::vector<int> img;  // 0-based images, size r

  InjectiveMap() = default;
  InjectiveMap(int target, std::vector<int> images_1based) : s(target) {
    for (int v : images_1based) img.push_back(v - 1);
    validate();
  }
  int r() const { return static_cast<int>(img.size()); }
  bool monotone() const {
    for (int i = 1; i < r(); ++i)
      if (img[i] <= img[i - 1]) return false;
    return true;
  }

 private:
  void validate() const {
    std::vector<char> seen(s, 0);
    for (int v : img) {
      if (v < 0 || v >= s || seen[v]) throw std::invalid_argument("not injective");
      seen[v] = 1;
    }
  }
};

/* Bloc permutation: expand w on r letters to sizes (s_1..s_r); source block
 * k (contiguous, size s_k) lands as the w(k)-th block of the output.  With
 * all sizes 1 this returns w itself. */
Perm bloc_permutation(const Perm& w, const std::vector<int>& sizes);

/* The tensor-grouping shuffle of the rn groupings of sizes m[j][i]
 * (j = 1..n outer, i = 1..r inner; m[j-1][i-1] in C++ indexing).
 *
 * Source order is slot-major: for slot i = 1..r the block of size
 * m_i = m^1_i + ... + m^n_i subdivided in j-order; target order is
 * j-major.  Returned as the bloc expansion of the index permutation
 * sending source grouping position (i-1)n+j to target position (j-1)r+i;
 * with all sizes 1 this is the inverse of the index rule
 * shuffle((j-1)r+i) = (i-1)n+j, which coincides with it whenever the rule
 * is an involution (in particular for r = n). */
Perm shuffle_perm(int r, int n, const std::vector<std::vector<int>>& m);

/* Variant for composition products: groupings n[k][j] (k = 1..m outer,
 * j = 1..t inner), source j-major, target k-major.  Same index rule with
 * (r,n) replaced by (t,m). */
Perm shuffle_perm_i(int t, int m, const std::vector<std::vector<int>>& nkj);

/* Unique factorization u = monotone . sigma of an injective map. */
std::pair<InjectiveMap, Perm> lambda_decompose(const InjectiveMap& u);

/* All (p,q)-riffle shuffles with their Koszul sign (= parity), in
 * deterministic (lexicographic) order. */
std::vector<std::pair<Perm, int>> pq_shuffles(int p, int q);

}  // namespace dgop
