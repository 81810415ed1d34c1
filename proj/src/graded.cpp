#include "dgop/graded.hpp"

#include "dgop/chain.hpp"

namespace dgop {

SparseGradedMap map_compose(const SparseGradedMap& f, const SparseGradedMap& g, const Field& fl) {
  if (f.src && g.tgt && f.src != g.tgt)
    throw ShapeError("compose: inner modules differ");
  SparseGradedMap out(g.src, f.tgt, f.shift + g.shift);
  for (auto& [from, mid] : g.cols) {
    Sum<std::string> acc;
    for (auto& [k, c] : mid.t) acc.add_scaled(f.apply_basis(k), c, fl);
    if (!acc.is_zero()) out.set(from, acc);
  }
  return out;
}

SparseGradedMap map_add(const SparseGradedMap& f, const SparseGradedMap& g, const Field& fl) {
  if (f.shift != g.shift) throw ShapeError("add: degree shifts differ");
  if (f.src != g.src || f.tgt != g.tgt) throw ShapeError("add: shapes differ");
  SparseGradedMap out(f.src, f.tgt, f.shift);
  out.cols = f.cols;
  for (auto& [from, v] : g.cols) {
    out.cols[from].add(v, fl);
    if (out.cols[from].is_zero()) out.cols.erase(from);
  }
  return out;
}

SparseGradedMap map_scale(const SparseGradedMap& f, int64_t c, const Field& fl) {
  SparseGradedMap out(f.src, f.tgt, f.shift);
  if (fl.norm(c) == 0) return out;
  out.cols = f.cols;
  for (auto& [from, v] : out.cols) v.scale(c, fl);
  return out;
}

std::string tensor_label(const std::string& a, const std::string& b) {
  return a + "(x)" + b;
}

std::pair<std::string, std::string> split_tensor_label(const std::string& l) {
  auto pos = l.find("(x)");
  if (pos == std::string::npos) throw ShapeError("not a tensor label: " + l);
  return {l.substr(0, pos), l.substr(pos + 3)};
}

GradedBasedModule module_tensor(const GradedBasedModule& a, const GradedBasedModule& b) {
  GradedBasedModule t;
  for (auto& [da, va] : a.degs)
    for (auto& la : va)
      for (auto& [db, vb] : b.degs)
        for (auto& lb : vb) t.add_label(da + db, tensor_label(la, lb));
  return t;
}

SparseGradedMap map_tensor(const SparseGradedMap& f, const SparseGradedMap& g,
                           const GradedBasedModule& srcT, const GradedBasedModule& tgtT,
                           const Field& fl) {
  SparseGradedMap out(&srcT, &tgtT, f.shift + g.shift);
  for (auto& [deg, labels] : srcT.degs) {
    for (auto& l : labels) {
      auto [la, lb] = split_tensor_label(l);
      const int dx = f.src ? f.src->degree_of(la) : 0;
      Sum<std::string> fa = f.apply_basis(la);
      Sum<std::string> gb = g.apply_basis(lb);
      if (fa.is_zero() || gb.is_zero()) continue;
      // (f(x)g)(x(x)y) = (-1)^{|g||x|} f(x) (x) g(y)
      const int64_t sgn = fl.sign(static_cast<int64_t>(g.shift) * dx);
      Sum<std::string> acc;
      for (auto& [ka, ca] : fa.t)
        for (auto& [kb, cb] : gb.t)
          acc.add(tensor_label(ka, kb), fl.mul(fl.mul(ca, cb), sgn), fl);
      if (!acc.is_zero()) out.set(l, acc);
    }
  }
  return out;
}

int64_t matrix_rank(std::vector<std::vector<int64_t>> m, const Field& f) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pivot = rank;
    while (pivot < rows && f.norm(m[pivot][c]) == 0) pivot++;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const int64_t inv = f.inv(m[rank][c]);
    for (size_t j = c; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], inv);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const int64_t v = f.norm(m[r][c]);
      if (v == 0) continue;
      for (size_t j = c; j < cols; ++j) m[r][j] = f.sub(m[r][j], f.mul(v, m[rank][j]));
    }
    rank++;
  }
  return static_cast<int64_t>(rank);
}

namespace {
/* matrix of d restricted to degree k (columns = basis in degree k) */
std::vector<std::vector<int64_t>> d_matrix(const ChainComplex& cx, int k) {
  const auto& from = cx.mod.basis(k);
  const auto& to = cx.mod.basis(k - 1);
  std::map<std::string, size_t> row;
  for (size_t i = 0; i < to.size(); ++i) row[to[i]] = i;
  std::vector<std::vector<int64_t>> m(to.size(), std::vector<int64_t>(from.size(), 0));
  for (size_t j = 0; j < from.size(); ++j) {
    for (auto& [k2, c] : cx.d.apply_basis(from[j]).t) {
      auto it = row.find(k2);
      if (it == row.end()) throw ShapeError("differential leaves the module at " + from[j]);
      m[it->second][j] = c;
    }
  }
  return m;
}
}  // namespace

std::vector<std::pair<int, int64_t>> homology_ranks(const ChainComplex& cx, int lo, int hi) {
  for (int k = lo; k <= hi + 1; ++k)
    for (auto& l : cx.mod.basis(k))
      if (!cx.d.apply(cx.d.apply_basis(l), cx.field).is_zero())
        throw ShapeError("d*d != 0 at basis element " + l);
  std::vector<std::pair<int, int64_t>> out;
  for (int k = lo; k <= hi; ++k) {
    const int64_t dim = static_cast<int64_t>(cx.mod.dim(k));
    const int64_t rk = matrix_rank(d_matrix(cx, k), cx.field);
    const int64_t rk1 = matrix_rank(d_matrix(cx, k + 1), cx.field);
    out.emplace_back(k, dim - rk - rk1);
  }
  return out;
}

}  // namespace dgop
