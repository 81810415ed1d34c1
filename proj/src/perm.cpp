#include "dgop/perm.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dgop {

Perm Perm::parse(const std::string& s, int arity_hint) {
  std::vector<int> images;
  if (!s.empty() && s[0] == '(') {
    std::string body = s.substr(1, s.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) images.push_back(std::stoi(tok));
  } else {
    for (char c : s) images.push_back(c - '0');
  }
  (void)arity_hint;
  return Perm(images);
}

std::string Perm::cycle_str() const {
  std::vector<char> seen(n(), 0);
  std::string out;
  for (int i = 0; i < n(); ++i) {
    if (seen[i] || img[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      first = false;
      out += std::to_string(j + 1);
      j = img[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm bloc_permutation(const Perm& w, const std::vector<int>& sizes) {
  const int r = w.n();
  if (static_cast<int>(sizes.size()) != r)
    throw std::invalid_argument("bloc_permutation: size list does not match arity");
  // offsets of source blocks
  std::vector<int> src_off(r, 0);
  for (int k = 1; k < r; ++k) src_off[k] = src_off[k - 1] + sizes[k - 1];
  const int total = src_off.empty() ? 0 : src_off[r - 1] + sizes[r - 1];
  // output block j has size sizes[w^{-1}(j)]
  Perm wi = w.inverse();
  std::vector<int> tgt_off(r, 0);
  {
    int acc = 0;
    for (int j = 0; j < r; ++j) {
      tgt_off[j] = acc;
      acc += sizes[wi.img[j]];
    }
  }
  Perm out;
  out.img.resize(total);
  for (int k = 0; k < r; ++k)
    for (int a = 0; a < sizes[k]; ++a) out.img[src_off[k] + a] = tgt_off[w.img[k]] + a;
  return out;
}

Perm shuffle_perm(int r, int n, const std::vector<std::vector<int>>& m) {
  // index permutation on rn symbols: source position (i-1)n+j (grouping (i,j))
  // -> target position (j-1)r+i
  Perm idx;
  idx.img.resize(static_cast<size_t>(r) * n);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= n; ++j) idx.img[(i - 1) * n + (j - 1)] = (j - 1) * r + (i - 1);
  std::vector<int> sizes;  // source order: (i,j) with i major
  sizes.reserve(static_cast<size_t>(r) * n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) sizes.push_back(m.at(j).at(i));
  return bloc_permutation(idx, sizes);
}

Perm shuffle_perm_i(int t, int m, const std::vector<std::vector<int>>& nkj) {
  // groupings (j,k): source position (j-1)m+k -> target (k-1)t+j
  Perm idx;
  idx.img.resize(static_cast<size_t>(t) * m);
  for (int j = 1; j <= t; ++j)
    for (int k = 1; k <= m; ++k) idx.img[(j - 1) * m + (k - 1)] = (k - 1) * t + (j - 1);
  std::vector<int> sizes;
  sizes.reserve(static_cast<size_t>(t) * m);
  for (int j = 0; j < t; ++j)
    for (int k = 0; k < m; ++k) sizes.push_back(nkj.at(k).at(j));
  return bloc_permutation(idx, sizes);
}

std::pair<InjectiveMap, Perm> lambda_decompose(const InjectiveMap& u) {
  const int r = u.r();
  std::vector<int> sorted = u.img;
  std::sort(sorted.begin(), sorted.end());
  InjectiveMap alpha;
  alpha.s = u.s;
  alpha.img = sorted;
  // sigma(k) = rank of u(k) among the images
  Perm sigma;
  sigma.img.resize(r);
  for (int k = 0; k < r; ++k) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), u.img[k]);
    sigma.img[k] = static_cast<int>(it - sorted.begin());
  }
  return {alpha, sigma};
}

std::vector<std::pair<Perm, int>> pq_shuffles(int p, int q) {
  // choose the target positions of the first block, lexicographically
  std::vector<std::pair<Perm, int>> out;
  std::vector<int> pos(p);
  std::function<void(int, int)> rec = [&](int k, int start) {
    if (k == p) {
      Perm w;
      w.img.resize(p + q);
      std::vector<char> used(p + q, 0);
      for (int a = 0; a < p; ++a) {
        w.img[a] = pos[a];
        used[pos[a]] = 1;
      }
      int b = 0;
      for (int a = 0; a < p + q; ++a)
        if (!used[a]) w.img[p + b++] = a;
      out.emplace_back(w, w.parity());
      return;
    }
    for (int v = start; v <= p + q - (p - k); ++v) {
      pos[k] = v;
      rec(k + 1, v + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace dgop
