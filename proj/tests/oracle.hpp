#pragma once
// Naive dense reference computations for small grids. Kept free of engine code on purpose:
// gradings use the symmetric J-form, rectangles are tested cell by cell, ranks come from
// plain Gaussian elimination on bit rows.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

struct Grid {
  int n = 0;
  std::vector<int> X, O;  // column -> row
};

using Table = std::map<std::pair<int, int>, long long>;  // (M, A2) -> rank

inline int components(const Grid& g) {
  std::vector<int> col_of_o_row(size_t(g.n));
  for (int c = 0; c < g.n; ++c) col_of_o_row[size_t(g.O[size_t(c)])] = c;
  std::vector<bool> seen(size_t(g.n));
  int cycles = 0;
  for (int s = 0; s < g.n; ++s) {
    if (seen[size_t(s)]) continue;
    ++cycles;
    for (int c = s; !seen[size_t(c)]; c = col_of_o_row[size_t(g.X[size_t(c)])]) seen[size_t(c)] = true;
  }
  return cycles;
}

// doubled coordinates: lattice points (2i, 2j), marker centres (2i+1, 2j+1)
using Pts = std::vector<std::pair<int, int>>;

inline long long I(const Pts& a, const Pts& b) {
  long long c = 0;
  for (auto& p : a)
    for (auto& q : b)
      if (p.first < q.first && p.second < q.second) ++c;
  return c;
}

// 2 J(a, b)
inline long long J2(const Pts& a, const Pts& b) { return I(a, b) + I(b, a); }

inline Pts state_pts(const std::vector<int>& x) {
  Pts p;
  for (int i = 0; i < int(x.size()); ++i) p.push_back({2 * i, 2 * x[size_t(i)]});
  return p;
}
inline Pts marker_pts(const std::vector<int>& m) {
  Pts p;
  for (int i = 0; i < int(m.size()); ++i) p.push_back({2 * i + 1, 2 * m[size_t(i)] + 1});
  return p;
}

// M_P(x) = J(x - P, x - P) + 1
inline long long maslov(const Pts& x, const Pts& P) {
  long long two = J2(x, x) - 2 * J2(x, P) + J2(P, P);
  return two / 2 + 1;
}

struct Gen {
  std::vector<int> x;
  int M = 0, A2 = 0;
};

inline std::vector<Gen> generators(const Grid& g) {
  std::vector<Gen> out;
  std::vector<int> x(size_t(g.n));
  std::iota(x.begin(), x.end(), 0);
  Pts O = marker_pts(g.O), X = marker_pts(g.X);
  int l = components(g);
  do {
    Pts s = state_pts(x);
    long long mo = maslov(s, O), mx = maslov(s, X);
    out.push_back({x, int(mo), int(mo - mx - (g.n - l))});
  } while (std::next_permutation(x.begin(), x.end()));
  return out;
}

inline bool in_cyc(int v, int a, int b, int n) {  // v in the half-open cyclic interval [a, b)
  return ((v - a) % n + n) % n < ((b - a) % n + n) % n;
}

// number of rectangles from x to y; count_X decides whether X markers may lie inside
inline int rectangles(const Grid& g, const std::vector<int>& x, const std::vector<int>& y, bool allow_X) {
  int n = g.n;
  std::vector<int> diff;
  for (int i = 0; i < n; ++i)
    if (x[size_t(i)] != y[size_t(i)]) diff.push_back(i);
  if (diff.size() != 2) return 0;
  int cnt = 0;
  for (int t = 0; t < 2; ++t) {
    int left = diff[size_t(t)], right = diff[size_t(1 - t)];
    // lower-left and upper-right corners belong to x
    int bottom = x[size_t(left)], top = x[size_t(right)];
    if (y[size_t(left)] != top || y[size_t(right)] != bottom) continue;
    bool ok = true;
    for (int c = 0; c < n && ok; ++c) {
      if (!in_cyc(c, left, right, n)) continue;
      if (in_cyc(g.O[size_t(c)], bottom, top, n)) ok = false;
      if (!allow_X && in_cyc(g.X[size_t(c)], bottom, top, n)) ok = false;
      // state points strictly inside
      if (c != left && in_cyc(x[size_t(c)], bottom, top, n) && x[size_t(c)] != bottom) ok = false;
    }
    if (ok) ++cnt;
  }
  return cnt;
}

struct Dense {
  std::vector<Gen> gens;
  // d[i] = set of targets j with odd rectangle count
  std::vector<std::vector<int>> d;
};

inline Dense complex(const Grid& g, bool allow_X) {
  Dense c;
  c.gens = generators(g);
  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < int(c.gens.size()); ++i) idx[c.gens[size_t(i)].x] = i;
  c.d.resize(c.gens.size());
  for (int i = 0; i < int(c.gens.size()); ++i) {
    const auto& x = c.gens[size_t(i)].x;
    for (int a = 0; a < g.n; ++a)
      for (int b = a + 1; b < g.n; ++b) {
        auto y = x;
        std::swap(y[size_t(a)], y[size_t(b)]);
        if (rectangles(g, x, y, allow_X) % 2) c.d[size_t(i)].push_back(idx[y]);
      }
    std::sort(c.d[size_t(i)].begin(), c.d[size_t(i)].end());
  }
  return c;
}

using Row = std::vector<std::uint64_t>;

inline void flip(Row& r, int j) { r[size_t(j) / 64] ^= std::uint64_t(1) << (j % 64); }
inline bool bit(const Row& r, int j) { return (r[size_t(j) / 64] >> (j % 64)) & 1; }

// rank over GF(2); rows are destroyed
inline int rank(std::vector<Row> rows, int width) {
  int r = 0;
  for (int col = 0; col < width && r < int(rows.size()); ++col) {
    int piv = -1;
    for (int i = r; i < int(rows.size()); ++i)
      if (bit(rows[size_t(i)], col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[size_t(piv)], rows[size_t(r)]);
    for (int i = 0; i < int(rows.size()); ++i)
      if (i != r && bit(rows[size_t(i)], col))
        for (size_t w = 0; w < rows[size_t(i)].size(); ++w) rows[size_t(i)][w] ^= rows[size_t(r)][w];
    ++r;
  }
  return r;
}

inline bool d_squared_zero(const Dense& c) {
  for (size_t i = 0; i < c.d.size(); ++i) {
    std::map<int, int> acc;
    for (int j : c.d[i])
      for (int k : c.d[size_t(j)]) acc[k] ^= 1;
    for (auto& [k, v] : acc)
      if (v) return false;
  }
  return true;
}

// homology of the tilde complex (differential preserves A2, lowers M by one)
inline Table tilde_homology(const Grid& g) {
  Dense c = complex(g, false);
  int N = int(c.gens.size());
  std::map<std::pair<int, int>, std::vector<int>> by;
  for (int i = 0; i < N; ++i) by[{c.gens[size_t(i)].M, c.gens[size_t(i)].A2}].push_back(i);
  std::map<std::pair<int, int>, int> drank;  // rank of d out of bigrading
  for (auto& [k, v] : by) {
    std::vector<Row> rows;
    for (int i : v) {
      Row r(size_t(N + 63) / 64);
      for (int j : c.d[size_t(i)]) flip(r, j);
      rows.push_back(r);
    }
    drank[k] = rank(rows, N);
  }
  Table t;
  for (auto& [k, v] : by) {
    long long h = (long long)v.size() - drank[k];
    auto up = drank.find({k.first + 1, k.second});
    if (up != drank.end()) h -= up->second;
    if (h) t[k] = h;
  }
  return t;
}

// divides the generating function by (1 + q^-1 a^-2) once; nullopt if inexact
inline std::optional<Table> divide_W(const Table& p) {
  Table q, rest = p;
  while (!rest.empty()) {
    auto top = *rest.rbegin();  // largest (M, A2) is a leading term of the quotient
    if (top.second < 0) return std::nullopt;
    auto k = top.first;
    q[k] += top.second;
    for (auto kk : {k, std::make_pair(k.first - 1, k.second - 2)}) {
      rest[kk] -= top.second;
      if (rest[kk] == 0) rest.erase(kk);
    }
  }
  for (auto& [k, v] : q)
    if (v < 0) return std::nullopt;
  return q;
}

inline std::optional<Table> hfk_hat(const Grid& g) {
  Table t = tilde_homology(g);
  for (int i = 0; i < g.n - components(g); ++i) {
    auto d = divide_W(t);
    if (!d) return std::nullopt;
    t = *d;
  }
  return t;
}

// tau from the filtered complex: least a such that H_0(A <= a) -> H_0(total) is nonzero
inline std::optional<int> tau(const Grid& g) {
  if (components(g) != 1) return std::nullopt;
  Dense c = complex(g, true);
  int N = int(c.gens.size());
  std::vector<int> m0, m1;
  for (int i = 0; i < N; ++i) {
    if (c.gens[size_t(i)].M == 0) m0.push_back(i);
    if (c.gens[size_t(i)].M == 1) m1.push_back(i);
  }
  auto row_of = [&](const std::vector<int>& ids, int i) {
    Row r(ids.size() / 64 + 1);
    for (int j : c.d[size_t(i)]) {
      auto it = std::lower_bound(ids.begin(), ids.end(), j);
      if (it != ids.end() && *it == j) flip(r, int(it - ids.begin()));
    }
    return r;
  };
  std::vector<Row> bnd;
  for (int i : m1) bnd.push_back(row_of(m0, i));
  int w = int(m0.size());
  int rb = rank(bnd, w);
  std::vector<int> a2s;
  for (int i : m0) a2s.push_back(c.gens[size_t(i)].A2);
  std::sort(a2s.begin(), a2s.end());
  a2s.erase(std::unique(a2s.begin(), a2s.end()), a2s.end());
  for (int a2 : a2s) {
    // cycles among M = 0 generators with A2 <= a2: kernel of d restricted to them
    std::vector<int> sub;
    for (int i : m0)
      if (c.gens[size_t(i)].A2 <= a2) sub.push_back(i);
    std::vector<int> m_1;
    for (int i = 0; i < N; ++i)
      if (c.gens[size_t(i)].M == -1) m_1.push_back(i);
    // kernel basis by elimination on [d | identity]
    int k1 = int(m_1.size()), s = int(sub.size());
    std::vector<Row> aug;
    for (int t = 0; t < s; ++t) {
      Row r(size_t(k1 + s) / 64 + 1);
      for (int j : c.d[size_t(sub[size_t(t)])]) {
        auto it = std::lower_bound(m_1.begin(), m_1.end(), j);
        if (it != m_1.end() && *it == j) flip(r, int(it - m_1.begin()));
      }
      flip(r, k1 + t);
      aug.push_back(r);
    }
    int r = 0;
    for (int col = 0; col < k1 && r < s; ++col) {
      int piv = -1;
      for (int i = r; i < s; ++i)
        if (bit(aug[size_t(i)], col)) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(aug[size_t(piv)], aug[size_t(r)]);
      for (int i = 0; i < s; ++i)
        if (i != r && bit(aug[size_t(i)], col))
          for (size_t x = 0; x < aug[size_t(i)].size(); ++x) aug[size_t(i)][x] ^= aug[size_t(r)][x];
      ++r;
    }
    std::vector<Row> span = bnd;
    for (int i = r; i < s; ++i) {
      Row z(size_t(w) / 64 + 1);
      for (int t = 0; t < s; ++t)
        if (bit(aug[size_t(i)], k1 + t)) {
          int pos = int(std::lower_bound(m0.begin(), m0.end(), sub[size_t(t)]) - m0.begin());
          flip(z, pos);
        }
      span.push_back(z);
    }
    if (rank(span, w) > rb) return a2 / 2;
  }
  return std::nullopt;
}

}  // namespace oracle
