#include <algorithm>
#include <bitset>
#include <functional>

#include "kfh/hfk.hpp"

namespace kfh {

StateCode encode_state(const std::vector<int>& match) {
  StateCode c = 0;
  for (int r : match) c = (c << 4) | StateCode(r);
  return c;
}

std::vector<int> decode_state(StateCode code, int n) {
  std::vector<int> m(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    m[size_t(i)] = int(code & 15);
    code >>= 4;
  }
  return m;
}

// number of markers (cells) comparable with lattice point (i, j): strictly lower-left or weakly upper-right
static int comparable(const std::vector<int>& P, int i, int j) {
  int c = 0;
  for (int col = 0; col < int(P.size()); ++col) {
    int r = P[size_t(col)];
    if ((col < i && r < j) || (col >= i && r >= j)) ++c;
  }
  return c;
}

static int noninversions(const std::vector<int>& P) {
  int c = 0;
  for (size_t a = 0; a < P.size(); ++a)
    for (size_t b = a + 1; b < P.size(); ++b)
      if (P[a] < P[b]) ++c;
  return c;
}

Gradings::Gradings(const GridDiagram& g) : g_(g) {
  g.validate();
  if (g.n > kMaxGridSize) throw ResourceLimit("grid size " + std::to_string(g.n) + " exceeds 16");
  n_ = g.n;
  l_ = grid_component_count(g);
  a2_term_.resize(size_t(n_ * n_));
  o_term_.resize(size_t(n_ * n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int co = comparable(g.O, i, j), cx = comparable(g.X, i, j);
      o_term_[size_t(i * n_ + j)] = co;
      a2_term_[size_t(i * n_ + j)] = cx - co;
    }
  int ioo = noninversions(g.O), ixx = noninversions(g.X);
  a2_const_ = ioo - ixx - (n_ - l_);
  m_const_ = ioo + 1;
}

int Gradings::M(const std::vector<int>& match) const {
  int m = noninversions(match) + m_const_;
  for (int i = 0; i < n_; ++i) m -= o_term(i, match[size_t(i)]);
  return m;
}

int Gradings::A2(const std::vector<int>& match) const {
  int a = a2_const_;
  for (int i = 0; i < n_; ++i) a += a2_term(i, match[size_t(i)]);
  return a;
}

namespace {

constexpr int kSumBits = 2 * kMaxGridSize * kMaxGridSize + 8;
using SumSet = std::bitset<size_t(kSumBits)>;

struct TermRange {
  int lo = 0, hi = 0;
};

TermRange term_range(const Gradings& gr) {
  TermRange r{1 << 20, -(1 << 20)};
  for (int i = 0; i < gr.n(); ++i)
    for (int j = 0; j < gr.n(); ++j) {
      r.lo = std::min(r.lo, gr.a2_term(i, j));
      r.hi = std::max(r.hi, gr.a2_term(i, j));
    }
  return r;
}

}  // namespace

std::map<int, std::int64_t> state_counts_by_a2(const Gradings& gr) {
  int n = gr.n();
  TermRange tr = term_range(gr);
  int off = -n * tr.lo;
  size_t width = size_t(n * (tr.hi - tr.lo) + 1);
  size_t full = size_t(1) << n;
  // prefix-sum histograms, two popcount layers alive at a time
  std::vector<std::vector<std::int64_t>> dp(full);
  dp[0].assign(width, 0);
  dp[0][size_t(off)] = 1;
  for (int k = 0; k < n; ++k) {
    for (size_t mask = 0; mask < full; ++mask) {
      if (__builtin_popcountll(mask) != k || dp[mask].empty()) continue;
      for (int j = 0; j < n; ++j) {
        if (mask >> j & 1) continue;
        auto& nx = dp[mask | (size_t(1) << j)];
        if (nx.empty()) nx.assign(width, 0);
        int t = gr.a2_term(k, j);
        auto& cur = dp[mask];
        for (size_t s = 0; s < width; ++s)
          if (cur[s]) nx[size_t(int(s) + t)] += cur[s];
      }
      std::vector<std::int64_t>().swap(dp[mask]);
    }
  }
  std::map<int, std::int64_t> out;
  auto& last = dp[full - 1];
  for (size_t s = 0; s < last.size(); ++s)
    if (last[s]) out[int(s) - off + gr.a2_const()] = last[s];
  return out;
}

std::vector<StateBlock> enumerate_states(const Gradings& gr, std::optional<Window> window,
                                         std::int64_t max_states) {
  int n = gr.n();
  auto counts = state_counts_by_a2(gr);
  std::int64_t want = 0;
  for (auto& [a2, c] : counts)
    if (!window || (a2 >= window->lo && a2 <= window->hi)) want += c;
  if (want > max_states)
    throw ResourceLimit("state count " + std::to_string(want) + " exceeds --max-states " +
                        std::to_string(max_states));

  std::map<int, StateBlock> blocks;
  for (auto& [a2, c] : counts)
    if (!window || (a2 >= window->lo && a2 <= window->hi)) {
      auto& b = blocks[a2];
      b.A2 = a2;
      b.codes.reserve(size_t(c));
      b.M.reserve(size_t(c));
    }

  // reachable suffix sums per used-row mask, for pruning against the window
  TermRange tr = term_range(gr);
  int off = -n * tr.lo;
  size_t full = size_t(1) << n;
  std::vector<SumSet> reach;
  if (window) {
    reach.assign(full, SumSet());
    reach[full - 1].set(size_t(off));
    for (size_t mask = full - 1; mask-- > 0;) {
      int k = __builtin_popcountll(mask);
      SumSet acc;
      for (int j = 0; j < n; ++j) {
        if (mask >> j & 1) continue;
        int t = gr.a2_term(k, j);
        const SumSet& nx = reach[mask | (size_t(1) << j)];
        acc |= t >= 0 ? (nx << size_t(t)) : (nx >> size_t(-t));
      }
      reach[mask] = acc;
    }
  }
  auto feasible = [&](size_t mask, int prefix) {
    if (!window) return true;
    int lo = window->lo - gr.a2_const() - prefix + off;
    int hi = window->hi - gr.a2_const() - prefix + off;
    lo = std::max(lo, 0);
    hi = std::min(hi, kSumBits - 1);
    if (lo > hi) return false;
    SumSet s = reach[mask] >> size_t(lo);
    s <<= size_t(kSumBits - 1 - (hi - lo));
    return s.any();
  };

  std::vector<int> match(static_cast<size_t>(n));
  std::function<void(int, size_t, int, int, int, StateCode)> dfs =
      [&](int k, size_t mask, int prefix, int nonin, int osum, StateCode code) {
        if (k == n) {
          int a2 = prefix + gr.a2_const();
          auto& b = blocks[a2];
          b.codes.push_back(code);
          b.M.push_back(nonin - osum + gr.m_const());
          return;
        }
        for (int j = 0; j < n; ++j) {
          if (mask >> j & 1) continue;
          size_t nm = mask | (size_t(1) << j);
          int np = prefix + gr.a2_term(k, j);
          if (!feasible(nm, np)) continue;
          int below = __builtin_popcountll(mask & ((size_t(1) << j) - 1));
          dfs(k + 1, nm, np, nonin + below, osum + gr.o_term(k, j), (code << 4) | StateCode(j));
        }
      };
  dfs(0, 0, 0, 0, 0, 0);

  std::vector<StateBlock> out;
  for (auto& [a2, b] : blocks) out.push_back(std::move(b));
  return out;
}

}  // namespace kfh
