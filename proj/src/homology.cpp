#include <algorithm>
#include <iterator>

#include "engine.hpp"

namespace kfh::detail {

static void xor_into(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                     std::vector<std::uint32_t>& tmp) {
  tmp.clear();
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(tmp));
  a.swap(tmp);
}

std::int64_t reduce_columns(std::vector<std::vector<std::uint32_t>>& cols, size_t nrows,
                            std::vector<char>& pivot_rows) {
  std::vector<std::int64_t> owner(nrows, -1);
  pivot_rows.assign(nrows, 0);
  std::vector<std::uint32_t> tmp;
  std::int64_t rank = 0;
  for (size_t j = 0; j < cols.size(); ++j) {
    auto& col = cols[j];
    while (!col.empty()) {
      std::int64_t o = owner[col.back()];
      if (o < 0) break;
      xor_into(col, cols[size_t(o)], tmp);
    }
    if (col.empty()) {
      std::vector<std::uint32_t>().swap(col);
      continue;
    }
    owner[col.back()] = std::int64_t(j);
    pivot_rows[col.back()] = 1;
    ++rank;
  }
  return rank;
}

// drop entries that occur an even number of times
static void mod2_normalize(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  size_t w = 0;
  for (size_t i = 0; i < v.size();) {
    size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) v[w++] = v[i];
    i = j;
  }
  v.resize(w);
}

std::map<int, std::int64_t> block_homology(const Gradings& gr, const StateBlock& block) {
  const int n = gr.n();
  const GridDiagram& g = gr.grid();
  std::map<int, std::vector<StateCode>> byM;
  for (size_t i = 0; i < block.codes.size(); ++i) byM[block.M[i]].push_back(block.codes[i]);
  std::map<int, std::int64_t> rank_of;  // rank of the differential leaving grading M
  std::vector<char> cleared;            // pivot rows of the previous (higher) differential
  int prevM = 0;
  bool have_prev = false;
  int x[kMaxGridSize];
  for (auto it = byM.rbegin(); it != byM.rend(); ++it) {
    int M = it->first;
    const auto& src = it->second;
    auto tgt_it = byM.find(M - 1);
    if (!have_prev || prevM != M + 1) cleared.assign(src.size(), 0);
    if (tgt_it == byM.end()) {
      rank_of[M] = 0;
      cleared.clear();
      prevM = M;
      have_prev = true;
      continue;
    }
    const auto& tgt = tgt_it->second;
    std::vector<std::vector<std::uint32_t>> cols(src.size());
    for (size_t i = 0; i < src.size(); ++i) {
      if (!cleared.empty() && cleared[i]) continue;
      StateCode code = src[i];
      for (int k = n - 1; k >= 0; --k) {
        x[k] = int(code & 15);
        code >>= 4;
      }
      auto& col = cols[i];
      for_each_rectangle(x, g, false, [&](int a, int b, int) {
        StateCode y = swap_columns(src[i], n, a, b, x[a], x[b]);
        auto pos = std::lower_bound(tgt.begin(), tgt.end(), y);
        if (pos == tgt.end() || *pos != y) throw InternalError("rectangle target outside its grading block");
        col.push_back(std::uint32_t(pos - tgt.begin()));
      });
      mod2_normalize(col);
    }
    std::vector<char> piv;
    rank_of[M] = reduce_columns(cols, tgt.size(), piv);
    cleared.swap(piv);
    prevM = M;
    have_prev = true;
  }
  std::map<int, std::int64_t> out;
  for (auto& [M, gens] : byM) {
    std::int64_t h = std::int64_t(gens.size()) - rank_of[M];
    auto up = rank_of.find(M + 1);
    if (up != rank_of.end()) h -= up->second;
    if (h < 0) throw InternalError("negative homology rank");
    if (h > 0) out[M] = h;
  }
  return out;
}

}  // namespace kfh::detail

namespace kfh {

BigradedRanks homology_ranks(const SparseComplexGF2& c, int) {
  // group generators by (A2, M), keeping the complex order inside each group
  std::map<std::pair<int, int>, std::vector<std::uint32_t>> groups;
  for (size_t i = 0; i < c.size(); ++i) groups[{c.A2[i], c.M[i]}].push_back(std::uint32_t(i));
  std::vector<std::uint32_t> local(c.size());
  for (auto& [key, idx] : groups)
    for (size_t k = 0; k < idx.size(); ++k) local[idx[k]] = std::uint32_t(k);
  std::map<std::pair<int, int>, std::int64_t> rank_of;
  for (auto& [key, idx] : groups) {
    auto tgt = groups.find({key.first, key.second - 1});
    size_t nrows = tgt == groups.end() ? 0 : tgt->second.size();
    std::vector<std::vector<std::uint32_t>> cols(idx.size());
    for (size_t k = 0; k < idx.size(); ++k) {
      for (auto e : c.column(idx[k])) {
        if (c.A2[e] != key.first || c.M[e] != key.second - 1)
          throw InternalError("homology_ranks: differential is not graded");
        cols[k].push_back(local[e]);
      }
      std::sort(cols[k].begin(), cols[k].end());
    }
    std::vector<char> piv;
    rank_of[key] = nrows ? detail::reduce_columns(cols, nrows, piv) : 0;
  }
  BigradedRanks r;
  r.n = c.n;
  r.l = c.l;
  for (auto& [key, idx] : groups) {
    std::int64_t h = std::int64_t(idx.size()) - rank_of[key];
    auto up = rank_of.find({key.first, key.second + 1});
    if (up != rank_of.end()) h -= up->second;
    if (h > 0) r.add(key.second, key.first, h);
  }
  return r;
}

}  // namespace kfh
