#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgop/formal.hpp"

namespace dgop {

struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& m) : std::runtime_error(m) {}
};
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& m) : std::runtime_error(m) {}
};

/* Finite graded module with a chosen ordered basis per degree.  Labels are
 * opaque tokens; each label lives in exactly one degree. */
class GradedBasedModule {
 public:
  std::map<int, std::vector<std::string>> degs;

  void add_label(int d, const std::string& l) {
    degs[d].push_back(l);
    index_.emplace(l, d);
  }
  void sort_canonical() {
    for (auto& [d, v] : degs) std::sort(v.begin(), v.end());
  }
  bool has_label(const std::string& l) const { return index_.count(l) > 0; }
  int degree_of(const std::string& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw ShapeError("unknown basis label: " + l);
    return it->second;
  }
  const std::vector<std::string>& basis(int d) const {
    static const std::vector<std::string> empty;
    auto it = degs.find(d);
    return it == degs.end() ? empty : it->second;
  }
  size_t dim(int d) const { return basis(d).size(); }
  size_t total_dim() const {
    size_t n = 0;
    for (auto& [d, v] : degs) n += v.size();
    return n;
  }

  /* one basis element per line: degree<TAB>label, sorted */
  std::string serialize() const {
    std::ostringstream os;
    for (auto& [d, v] : degs) {
      auto sorted = v;
      std::sort(sorted.begin(), sorted.end());
      for (auto& l : sorted) os << d << "\t" << l << "\n";
    }
    return os.str();
  }

 private:
  std::map<std::string, int> index_;
};

/* Basis-indexed linear map of homogeneous degree `shift` between graded
 * based modules.  Missing columns are zero. */
class SparseGradedMap {
 public:
  const GradedBasedModule* src = nullptr;
  const GradedBasedModule* tgt = nullptr;
  int shift = 0;
  std::map<std::string, Sum<std::string>> cols;

  SparseGradedMap() = default;
  SparseGradedMap(const GradedBasedModule* s, const GradedBasedModule* t, int sh)
      : src(s), tgt(t), shift(sh) {}

  void set(const std::string& from, const Sum<std::string>& to) {
    check_column(from, to);
    if (!to.is_zero()) cols[from] = to;
  }
  void add_entry(const std::string& from, const std::string& to, int64_t c, const Field& f) {
    Sum<std::string> s = Sum<std::string>::single(to, c, f);
    check_column(from, s);
    cols[from].add(to, c, f);
    if (cols[from].is_zero()) cols.erase(from);
  }
  Sum<std::string> apply_basis(const std::string& from) const {
    auto it = cols.find(from);
    return it == cols.end() ? Sum<std::string>() : it->second;
  }
  Sum<std::string> apply(const Sum<std::string>& v, const Field& f) const {
    Sum<std::string> out;
    for (auto& [k, c] : v.t) out.add_scaled(apply_basis(k), c, f);
    return out;
  }

  std::string serialize() const {
    std::ostringstream os;
    for (auto& [from, to] : cols) os << from << " -> " << column_str(to) << "\n";
    return os.str();
  }

 private:
  static std::string column_str(const Sum<std::string>& s) {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : s.t) {
      if (!first) os << " + ";
      first = false;
      os << c << "*" << k;
    }
    return os.str();
  }
  void check_column(const std::string& from, const Sum<std::string>& to) const {
    if (!src || !tgt) return;
    const int d = src->degree_of(from);
    for (auto& [k, c] : to.t) {
      if (tgt->degree_of(k) != d + shift)
        throw ShapeError("map entry " + from + " -> " + k + " violates degree shift " +
                         std::to_string(shift) + " at source degree " + std::to_string(d));
    }
  }
};

/* f after g (apply g first) */
SparseGradedMap map_compose(const SparseGradedMap& f, const SparseGradedMap& g, const Field& fl);
SparseGradedMap map_add(const SparseGradedMap& f, const SparseGradedMap& g, const Field& fl);
SparseGradedMap map_scale(const SparseGradedMap& f, int64_t c, const Field& fl);

/* Tensor product of modules: labels "a(x)b", degree additive. */
GradedBasedModule module_tensor(const GradedBasedModule& a, const GradedBasedModule& b);
/* Tensor of maps with the Koszul rule (f(x)g)(x(x)y) = (-1)^{|g||x|} f(x)(x)g(y). */
SparseGradedMap map_tensor(const SparseGradedMap& f, const SparseGradedMap& g,
                           const GradedBasedModule& srcT, const GradedBasedModule& tgtT,
                           const Field& fl);

std::string tensor_label(const std::string& a, const std::string& b);
std::pair<std::string, std::string> split_tensor_label(const std::string& l);

}  // namespace dgop
