#pragma once

#include <map>
#include <sstream>
#include <vector>

#include "dgop/field.hpp"

namespace dgop {

/* Formal F_p-linear combination of basis keys.  Keys are kept in their
 * natural (ordered-map) order so that iteration, serialization and hence
 * every downstream computation is deterministic. */
template <class K>
class Sum {
 public:
  std::map<K, int64_t> t;

  Sum() = default;
  static Sum zero() { return Sum(); }
  static Sum single(const K& k, int64_t c, const Field& f) {
    Sum s;
    s.add(k, c, f);
    return s;
  }

  bool is_zero() const { return t.empty(); }
  size_t size() const { return t.size(); }

  void add(const K& k, int64_t c, const Field& f) {
    c = f.norm(c);
    if (c == 0) return;
    auto it = t.find(k);
    if (it == t.end()) {
      t.emplace(k, c);
    } else {
      it->second = f.add(it->second, c);
      if (it->second == 0) t.erase(it);
    }
  }
  void add(const Sum& o, const Field& f) {
    for (auto& [k, c] : o.t) add(k, c, f);
  }
  void add_scaled(const Sum& o, int64_t s, const Field& f) {
    for (auto& [k, c] : o.t) add(k, f.mul(c, s), f);
  }
  void scale(int64_t s, const Field& f) {
    s = f.norm(s);
    if (s == 0) { t.clear(); return; }
    if (s == 1) return;
    for (auto& [k, c] : t) c = f.mul(c, s);
  }
  int64_t coeff(const K& k) const {
    auto it = t.find(k);
    return it == t.end() ? 0 : it->second;
  }

  bool operator==(const Sum& o) const { return t == o.t; }

  /* map each basis key through fn (which returns a Sum) and collect */
  template <class Fn>
  auto map(Fn&& fn, const Field& f) const {
    using R = decltype(fn(std::declval<const K&>()));
    R out;
    for (auto& [k, c] : t) out.add_scaled(fn(k), c, f);
    return out;
  }
};

inline std::string coeff_str(int64_t c) { return std::to_string(c); }

template <class K>
std::string sum_to_string(const Sum<K>& s, const std::string& (*key_str)(const K&)) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : s.t) {
    if (!first) os << " + ";
    first = false;
    os << c << "*" << key_str(k);
  }
  return os.str();
}

inline std::string sum_to_string(const Sum<std::string>& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : s.t) {
    if (!first) os << " + ";
    first = false;
    os << c << "*" << k;
  }
  return os.str();
}

/* Koszul sign (-1)^e of permuting a sequence of graded factors.
 * perm[i] = target position of source factor i; deg[i] = degree of source
 * factor i.  The exponent counts inversions among odd-degree factors. */
inline int koszul_exponent(const std::vector<int>& deg, const std::vector<int>& perm) {
  int e = 0;
  const int n = static_cast<int>(perm.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (perm[a] > perm[b] && (deg[a] % 2) && (deg[b] % 2)) e++;
  return e & 1;
}

}  // namespace dgop
