#include "dgop/matching.hpp"

namespace dgop {

LambdaModule LambdaModule::from_operad(const DgOperad& P, int arity_bound, int degree_bound) {
  LambdaModule M;
  M.field = P.field;
  M.arity_bound = arity_bound;
  M.comp.resize(arity_bound + 1);
  for (int r = 0; r <= arity_bound; ++r)
    for (int d = 0; d <= degree_bound; ++d)
      for (auto& k : P.basis(r, d)) M.comp[r].add_label(d, k);
  M.del = [&P](int, int i, const std::string& k) { return P.partial_unit(k, i); };
  return M;
}

namespace {
std::string slot_label(int i, const std::string& l) { return std::to_string(i) + ":" + l; }
}  // namespace

MatchingResult lambda_matching(const LambdaModule& M, int r, int degree_lo, int degree_hi) {
  if (r < 1 || r > M.arity_bound) throw TruncationError("lambda_matching: arity out of bounds");
  const Field& f = M.field;
  MatchingResult res;
  const GradedBasedModule& low = M.comp[r - 1];
  const bool have_low2 = (r >= 2);

  for (int d = degree_lo; d <= degree_hi; ++d) {
    std::vector<std::string> unknowns;
    for (int i = 1; i <= r; ++i)
      for (auto& l : low.basis(d)) unknowns.push_back(slot_label(i, l));
    if (unknowns.empty()) continue;
    std::map<std::string, size_t> uidx;
    for (size_t a = 0; a < unknowns.size(); ++a) uidx[unknowns[a]] = a;

    /* constraints: for i<j and each target label: d_i x_j - d_{j-1} x_i = 0 */
    std::vector<std::vector<int64_t>> rows;
    if (have_low2) {
      for (int i = 1; i <= r; ++i) {
        for (int j = i + 1; j <= r; ++j) {
          std::map<std::string, std::vector<std::pair<size_t, int64_t>>> by_target;
          for (auto& l : low.basis(d)) {
            for (auto& [tk, c] : M.del(r - 1, i, l).t)
              by_target[tk].emplace_back(uidx[slot_label(j, l)], c);
            for (auto& [tk, c] : M.del(r - 1, j - 1, l).t)
              by_target[tk].emplace_back(uidx[slot_label(i, l)], f.neg(c));
          }
          for (auto& [tk, entries] : by_target) {
            std::vector<int64_t> row(unknowns.size(), 0);
            for (auto& [a, c] : entries) row[a] = f.add(row[a], c);
            bool nz = false;
            for (auto v : row) nz |= (v != 0);
            if (nz) rows.push_back(std::move(row));
          }
        }
      }
    }

    /* kernel by reduced row echelon form */
    const size_t n = unknowns.size();
    std::vector<std::vector<int64_t>> m = rows;
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < m.size(); ++c) {
      size_t p = rank;
      while (p < m.size() && f.norm(m[p][c]) == 0) p++;
      if (p == m.size()) continue;
      std::swap(m[rank], m[p]);
      const int64_t inv = f.inv(m[rank][c]);
      for (size_t x = 0; x < n; ++x) m[rank][x] = f.mul(m[rank][x], inv);
      for (size_t rr = 0; rr < m.size(); ++rr) {
        if (rr == rank) continue;
        const int64_t v = f.norm(m[rr][c]);
        if (!v) continue;
        for (size_t x = 0; x < n; ++x) m[rr][x] = f.sub(m[rr][x], f.mul(v, m[rank][x]));
      }
      pivot_col.push_back(static_cast<int>(c));
      rank++;
    }
    std::vector<char> is_pivot(n, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    int count = 0;
    std::vector<std::pair<std::string, std::vector<int64_t>>> kernel;
    std::vector<size_t> free_col_of;
    for (size_t free_c = 0; free_c < n; ++free_c) {
      if (is_pivot[free_c]) continue;
      std::vector<int64_t> v(n, 0);
      v[free_c] = 1;
      for (size_t rr = 0; rr < rank; ++rr) v[pivot_col[rr]] = f.neg(m[rr][free_c]);
      std::string nm = "k" + std::to_string(d) + "_" + std::to_string(count++);
      kernel.emplace_back(nm, std::move(v));
      free_col_of.push_back(free_c);
    }
    for (auto& [nm, v] : kernel) {
      res.module.add_label(d, nm);
      Sum<std::string> vec;
      for (size_t a = 0; a < n; ++a)
        if (v[a]) vec.add(unknowns[a], v[a], f);
      res.vectors[nm] = vec;
    }

    /* mu(x) = (d_i x)_i in kernel coordinates; the free coordinates read the
     * coefficients off directly */
    for (auto& l : M.comp[r].basis(d)) {
      std::vector<int64_t> img(n, 0);
      for (int i = 1; i <= r; ++i)
        for (auto& [tk, c] : M.del(r, i, l).t) img[uidx[slot_label(i, tk)]] = f.norm(c);
      Sum<std::string> coords;
      std::vector<int64_t> rec(n, 0);
      for (size_t kk = 0; kk < kernel.size(); ++kk) {
        const int64_t c = img[free_col_of[kk]];
        if (!c) continue;
        coords.add(kernel[kk].first, c, f);
        for (size_t a = 0; a < n; ++a) rec[a] = f.add(rec[a], f.mul(c, kernel[kk].second[a]));
      }
      for (size_t a = 0; a < n; ++a)
        if (f.norm(rec[a]) != img[a])
          throw ShapeError("matching map image not in the matching module at " + l);
      if (!coords.is_zero()) res.mu[l] = coords;
    }
  }
  res.module.sort_canonical();
  return res;
}

}  // namespace dgop
