#include <algorithm>
#include <numeric>

#include "engine.hpp"

namespace kfh {

// Persistence over the Alexander filtration of the complex whose rectangles may cross X
// markers. Its total homology has rank 2^(n-1) with exactly one class in Maslov grading 0;
// tau is the filtration level where that class is born.
int tau(const GridDiagram& knot, const HfkOptions& opt) {
  if (grid_component_count(knot) != 1) throw LinkError("tau is defined for knots only");
  HfkOptions o = opt;
  o.a2_window.reset();
  SparseComplexGF2 c = filtered_complex(knot, o);
  const size_t N = c.size();

  // position of each generator inside its Maslov group, ordered by (A2, index)
  std::map<int, std::vector<std::uint32_t>> byM;
  for (size_t i = 0; i < N; ++i) byM[c.M[i]].push_back(std::uint32_t(i));
  std::vector<std::uint32_t> pos(N);
  for (auto& [M, v] : byM) {
    std::stable_sort(v.begin(), v.end(), [&](std::uint32_t a, std::uint32_t b) { return c.A2[a] < c.A2[b]; });
    for (size_t k = 0; k < v.size(); ++k) pos[v[k]] = std::uint32_t(k);
  }

  std::map<int, std::vector<char>> pivot_rows;  // rows of group M killed by the differential from M+1
  std::map<int, std::vector<char>> dead_cols;   // columns of group M that reduce to zero
  for (auto it = byM.rbegin(); it != byM.rend(); ++it) {
    int M = it->first;
    const auto& src = it->second;
    auto tgt = byM.find(M - 1);
    std::vector<char>& dead = dead_cols[M];
    dead.assign(src.size(), 1);
    if (tgt == byM.end()) {
      for (size_t k = 0; k < src.size(); ++k)
        if (!c.column(src[k]).empty()) throw InternalError("tau: differential leaves the complex");
      continue;
    }
    std::vector<std::vector<std::uint32_t>> cols(src.size());
    auto clr = pivot_rows.find(M);
    for (size_t k = 0; k < src.size(); ++k) {
      if (clr != pivot_rows.end() && clr->second[k]) continue;  // clearing: already a boundary
      for (auto e : c.column(src[k])) {
        if (c.M[e] != M - 1 || c.A2[e] > c.A2[src[k]]) throw InternalError("tau: differential is not filtered");
        cols[k].push_back(pos[e]);
      }
      std::sort(cols[k].begin(), cols[k].end());
    }
    std::vector<char> piv;
    detail::reduce_columns(cols, tgt->second.size(), piv);
    for (size_t k = 0; k < src.size(); ++k) dead[k] = cols[k].empty() ? 1 : 0;
    pivot_rows[M - 1] = std::move(piv);
  }

  // essential classes: zero columns that are not pivots of the differential from above
  std::map<int, std::int64_t> ess_by_M;
  std::vector<int> top_births;
  for (auto& [M, src] : byM) {
    auto& dead = dead_cols[M];
    auto pr = pivot_rows.find(M);
    for (size_t k = 0; k < src.size(); ++k) {
      if (!dead[k]) continue;
      if (pr != pivot_rows.end() && pr->second[k]) continue;
      ++ess_by_M[M];
      if (M == 0) top_births.push_back(c.A2[src[k]]);
    }
  }
  const int m = knot.n - 1;
  std::int64_t binom = 1;
  for (int k = 0; k <= m; ++k) {
    if (ess_by_M[-k] != binom) throw InternalError("tau: total homology has the wrong shape");
    binom = binom * (m - k) / (k + 1);
  }
  std::int64_t total = 0;
  for (auto& kv : ess_by_M) total += kv.second;
  if (total != (std::int64_t(1) << m)) throw InternalError("tau: total homology has the wrong rank");
  if (top_births.size() != 1 || top_births[0] % 2 != 0) throw InternalError("tau: bad top class");
  return top_births[0] / 2;
}

}  // namespace kfh
