#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "engine.hpp"

namespace kfh {

std::int64_t BigradedRanks::at(int M, int A2) const {
  auto it = ranks.find({M, A2});
  return it == ranks.end() ? 0 : it->second;
}

void BigradedRanks::add(int M, int A2, std::int64_t r) {
  if (r == 0) return;
  auto& v = ranks[{M, A2}];
  v += r;
  if (v == 0) ranks.erase({M, A2});
}

std::int64_t BigradedRanks::total() const {
  std::int64_t t = 0;
  for (auto& kv : ranks) t += kv.second;
  return t;
}

HalfLaurent euler_characteristic(const BigradedRanks& r) {
  HalfLaurent e;
  for (auto& [key, rk] : r.ranks) {
    Int c = rk;
    e += HalfLaurent::monomial(key.first % 2 == 0 ? c : Int(-c), key.second);
  }
  return e;
}

BigradedRanks tensor(const BigradedRanks& a, const BigradedRanks& b) {
  BigradedRanks r;
  r.l = a.l;
  r.n = a.n;
  for (auto& [ka, ra] : a.ranks)
    for (auto& [kb, rb] : b.ranks) r.add(ka.first + kb.first, ka.second + kb.second, ra * rb);
  return r;
}

BigradedRanks shifted(const BigradedRanks& r, int dM, int dA2) {
  BigradedRanks s;
  s.l = r.l;
  s.n = r.n;
  for (auto& [k, v] : r.ranks) s.add(k.first + dM, k.second + dA2, v);
  return s;
}

BigradedRanks direct_sum(const BigradedRanks& a, const BigradedRanks& b) {
  BigradedRanks s = a;
  for (auto& [k, v] : b.ranks) s.add(k.first, k.second, v);
  return s;
}

// Q with P = Q (x) W, computed from the top Alexander grading down. With check_bottom the
// recursion is continued one level below P's support and must end at zero.
static std::optional<BigradedRanks> divide_W_impl(const BigradedRanks& p, bool check_bottom) {
  BigradedRanks q;
  q.l = p.l;
  q.n = p.n;
  q.name = p.name;
  if (p.ranks.empty()) return q;
  int top = std::numeric_limits<int>::min(), bottom = std::numeric_limits<int>::max();
  int mlo = std::numeric_limits<int>::max(), mhi = std::numeric_limits<int>::min();
  for (auto& [k, v] : p.ranks) {
    top = std::max(top, k.second);
    bottom = std::min(bottom, k.second);
    mlo = std::min(mlo, k.first);
    mhi = std::max(mhi, k.first);
  }
  int last = check_bottom ? bottom - 2 : bottom;
  for (int a2 = top; a2 >= last; a2 -= 2) {
    for (int M = mhi + 1; M >= mlo - 2; --M) {
      std::int64_t v = p.at(M, a2) - q.at(M + 1, a2 + 2);
      if (v < 0) return std::nullopt;
      if (v > 0) {
        if (a2 < bottom) return std::nullopt;
        q.add(M, a2, v);
      }
    }
  }
  return q;
}

std::optional<BigradedRanks> divide_by_W(const BigradedRanks& r) { return divide_W_impl(r, true); }

BigradedRanks StandardSpaces::V() {
  BigradedRanks v;
  v.add(-1, 0, 2);
  v.add(0, 2, 1);
  v.add(-2, -2, 1);
  return v;
}

BigradedRanks StandardSpaces::W() {
  BigradedRanks w;
  w.add(0, 0, 1);
  w.add(-1, -2, 1);
  return w;
}

bool is_symmetric(const BigradedRanks& r) {
  for (auto& [k, v] : r.ranks)
    if (r.at(k.first - k.second, -k.second) != v) return false;
  return true;
}

BigradedRanks complete_by_symmetry(const BigradedRanks& upper) {
  BigradedRanks r;
  r.l = upper.l;
  r.n = upper.n;
  r.name = upper.name;
  for (auto& [k, v] : upper.ranks) {
    if (k.second < 0) continue;
    r.add(k.first, k.second, v);
    if (k.second > 0) r.add(k.first - k.second, -k.second, v);
  }
  r.completed_by_symmetry = true;
  return r;
}

namespace {

// tilde homology for the listed A2 blocks, one block per task
BigradedRanks tilde_blocks(const Gradings& gr, const std::vector<int>& a2s, int threads,
                           std::int64_t max_states) {
  BigradedRanks out;
  out.n = gr.n();
  out.l = gr.components();
  std::vector<std::map<int, std::int64_t>> res(a2s.size());
  std::atomic<size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto work = [&]() {
    for (;;) {
      size_t i = next++;
      if (i >= a2s.size()) return;
      try {
        auto blocks = enumerate_states(gr, Window{a2s[i], a2s[i]}, max_states);
        for (auto& b : blocks) res[i] = detail::block_homology(gr, b);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  int nt = std::max(1, std::min<int>(threads, int(a2s.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  for (size_t i = 0; i < a2s.size(); ++i)
    for (auto& [M, r] : res[i]) out.add(M, a2s[i], r);
  return out;
}

BigradedRanks divide_all(const BigradedRanks& tilde, int times, bool check_bottom) {
  BigradedRanks h = tilde;
  for (int i = 0; i < times; ++i) {
    auto q = divide_W_impl(h, check_bottom);
    if (!q) throw InternalError("tilde homology is not divisible by W");
    h = *q;
  }
  return h;
}

}  // namespace

HfkResult hfk_hat(const GridDiagram& g, const HfkOptions& opt) {
  Gradings gr(g);
  auto counts = state_counts_by_a2(gr);
  int top = counts.rbegin()->first;
  int lo = opt.a2_window ? opt.a2_window->lo : counts.begin()->first;
  std::vector<int> a2s;
  std::int64_t total = 0;
  for (auto& [a2, c] : counts)
    if (a2 >= lo) {
      a2s.push_back(a2);
      total += c;
    }
  if (total > opt.max_states)
    throw ResourceLimit("state count " + std::to_string(total) + " exceeds --max-states " +
                        std::to_string(opt.max_states));
  std::reverse(a2s.begin(), a2s.end());
  HfkResult res;
  res.states = total;
  res.windowed = bool(opt.a2_window);
  res.tilde = tilde_blocks(gr, a2s, opt.threads, opt.max_states);
  res.hfk = divide_all(res.tilde, g.n - gr.components(), !opt.a2_window);
  res.hfk.n = g.n;
  res.hfk.l = gr.components();
  if (opt.a2_window) {
    if (lo <= 0) {
      res.hfk = complete_by_symmetry(res.hfk);
      res.hfk.n = g.n;
      res.hfk.l = gr.components();
    }
    (void)top;
  } else if (!is_symmetric(res.hfk)) {
    throw InternalError("HFK ranks violate the Alexander symmetry");
  }
  return res;
}

GenusResult top_alexander_grading(const GridDiagram& g, const HfkOptions& opt) {
  Gradings gr(g);
  auto counts = state_counts_by_a2(gr);
  BigradedRanks tilde;
  tilde.n = g.n;
  tilde.l = gr.components();
  std::int64_t used = 0;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    int a2 = it->first;
    used += it->second;
    if (used > opt.max_states)
      throw ResourceLimit("state count " + std::to_string(used) + " exceeds --max-states " +
                          std::to_string(opt.max_states));
    auto blk = tilde_blocks(gr, {a2}, 1, opt.max_states);
    for (auto& [k, v] : blk.ranks) tilde.add(k.first, k.second, v);
    BigradedRanks h = divide_all(tilde, g.n - gr.components(), false);
    bool hit = false;
    for (auto& [k, v] : h.ranks)
      if (k.second == a2) hit = true;
    if (hit) {
      GenusResult r;
      r.genus = a2 / 2;
      r.top = h;
      r.top.n = g.n;
      r.top.l = gr.components();
      return r;
    }
  }
  throw InternalError("no nonzero HFK-hat found");
}

DerivedInvariants derived_invariants(const BigradedRanks& r) {
  DerivedInvariants d;
  bool first = true;
  for (auto& [k, v] : r.ranks) {
    int a = k.second >= 0 ? k.second / 2 : -((-k.second + 1) / 2);
    if (first || a > d.genus) d.genus = a;
    first = false;
    d.delta2[2 * k.first - k.second] += v;
  }
  d.thin = d.delta2.size() <= 1;
  return d;
}

}  // namespace kfh
