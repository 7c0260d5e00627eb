#include "kfh/alexander.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>

#include "kfh/morse.hpp"

namespace kfh {

HalfLaurent torus_alexander(int k) {
  const HalfLaurent z = HalfLaurent::z();
  HalfLaurent a(0), b(1);  // Delta_0, Delta_1
  if (k >= 0) {
    if (k == 0) return a;
    for (int i = 1; i < k; ++i) {
      HalfLaurent c = z * b + a;
      a = b;
      b = c;
    }
    return b;
  }
  // walk down: Delta_{j-1} = Delta_{j+1} - z Delta_j
  HalfLaurent hi = b, lo = a;  // Delta_1, Delta_0
  for (int j = 0; j > k; --j) {
    HalfLaurent next = hi - z * lo;
    hi = lo;
    lo = next;
  }
  return lo;
}

HalfLaurent determinant(std::vector<std::vector<HalfLaurent>> m) {
  size_t n = m.size();
  if (n == 0) return HalfLaurent(1);
  HalfLaurent prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return HalfLaurent{};
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        HalfLaurent v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = divide_exact(v, prev);
        if (!q) throw PolyError("determinant: inexact fraction-free step");
        m[i][j] = std::move(*q);
      }
      m[i][k] = HalfLaurent{};
    }
    prev = m[k][k];
  }
  HalfLaurent d = m[n - 1][n - 1];
  return sign > 0 ? d : -d;
}

static std::vector<std::vector<HalfLaurent>> identity(size_t r) {
  std::vector<std::vector<HalfLaurent>> m(r, std::vector<HalfLaurent>(r));
  for (size_t i = 0; i < r; ++i) m[i][i] = HalfLaurent(1);
  return m;
}

// reduced Burau image of sigma_i^{+-1}, r = strands - 1
static std::vector<std::vector<HalfLaurent>> burau_generator(int g, size_t r) {
  auto m = identity(r);
  const HalfLaurent t = HalfLaurent::monomial(1, 2), ti = HalfLaurent::monomial(1, -2);
  size_t i = size_t(std::abs(g));  // 1-based generator index
  bool inv = g < 0;
  if (r == 1) {
    m[0][0] = inv ? -ti : -t;
    return m;
  }
  size_t c = i - 1;  // diagonal entry of the generator
  m[c][c] = inv ? -ti : -t;
  if (inv) {
    if (i > 1) m[c][c - 1] = HalfLaurent(1);
    if (c + 1 < r) m[c][c + 1] = ti;
  } else {
    if (i > 1) m[c][c - 1] = t;
    if (c + 1 < r) m[c][c + 1] = HalfLaurent(1);
  }
  return m;
}

static std::vector<std::vector<HalfLaurent>> matmul(const std::vector<std::vector<HalfLaurent>>& a,
                                                    const std::vector<std::vector<HalfLaurent>>& b) {
  size_t r = a.size();
  std::vector<std::vector<HalfLaurent>> c(r, std::vector<HalfLaurent>(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < r; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < r; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

HalfLaurent alexander_burau(const BraidWord& b) {
  b.validate();
  int s = b.strands;
  size_t r = size_t(s - 1);
  auto m = identity(r);
  for (int g : b.word) m = matmul(m, burau_generator(g, r));
  auto im = identity(r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) im[i][j] -= m[i][j];
  HalfLaurent det = determinant(im);
  HalfLaurent den;
  for (int i = 0; i < s; ++i) den += HalfLaurent::monomial(1, 2 * i);
  auto q = divide_exact(det, den);
  if (!q) throw BackendMismatch("burau: determinant not divisible by 1 + t + ... + t^(s-1)");
  int e = b.exponent_sum() - s + 1;
  HalfLaurent out = q->shifted(-e);
  if (e % 2 != 0) out = -out;
  int l = braid_component_count(b);
  HalfLaurent c = conjugate(out);
  if (c != ((l - 1) % 2 == 0 ? out : -out))
    throw BackendMismatch("burau: result not symmetric: " + out.str());
  return out;
}

HalfLaurent alexander_grid(const GridDiagram& g) {
  g.validate();
  int n = g.n;
  std::vector<std::vector<HalfLaurent>> m(static_cast<size_t>(n), std::vector<HalfLaurent>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int w = 0;
      for (int c = i; c < n; ++c) {
        int x = g.X[size_t(c)], o = g.O[size_t(c)];
        if (std::min(x, o) < j && j <= std::max(x, o)) w += o > x ? 1 : -1;
      }
      m[size_t(i)][size_t(j)] = HalfLaurent::monomial(1, -2 * w);
    }
  HalfLaurent det = determinant(m);
  HalfLaurent f = power(HalfLaurent(1) - HalfLaurent::monomial(1, 2), unsigned(n - 1));
  auto q = divide_exact(det, f);
  if (!q) throw BackendMismatch("grid determinant not divisible by (1-t)^(n-1)");
  return normalize_symmetric(*q, grid_component_count(g));
}

int component_count(const LinkInput& link) {
  if (auto b = std::get_if<BraidWord>(&link)) return braid_component_count(*b);
  return grid_component_count(std::get<GridDiagram>(link));
}

HalfLaurent alexander(const LinkInput& link) {
  if (auto g = std::get_if<GridDiagram>(&link)) return alexander_grid(*g);
  const BraidWord& b = std::get<BraidWord>(link);
  HalfLaurent a = alexander_burau(b);
  HalfLaurent c = alexander_grid(braid_to_grid(b));
  bool ok = braid_component_count(b) == 1 ? a == c : equal_up_to_sign(a, c);
  if (!ok)
    throw BackendMismatch("alexander backends disagree on " + b.str() + ": burau " + a.str() +
                          ", grid " + c.str());
  return a;
}

RecursionReport verify_twist_recursion(const TwistFamilySpec& spec, Interval range) {
  spec.validate();
  RecursionReport rep;
  rep.delta_L0 = alexander(insert_twists(spec, 0));
  rep.delta_Lm1 = alexander(insert_twists(spec, -1));
  for (int n = range.lo; n <= range.hi; ++n) {
    RecursionEntry e;
    e.n = n;
    e.lhs = alexander(insert_twists(spec, n));
    e.rhs = torus_alexander(n + 1) * rep.delta_L0 + torus_alexander(n) * rep.delta_Lm1;
    e.pass = e.lhs == e.rhs;
    rep.all_pass = rep.all_pass && e.pass;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

namespace {

HalfLaurent positive_part(const HalfLaurent& a) {
  std::map<int, Int> m;
  for (auto& [e, c] : a.terms())
    if (e > 0) m.emplace(e, c);
  return HalfLaurent::from_terms(m);
}

Int max_abs_coeff(const HalfLaurent& a) {
  Int m = 0;
  for (auto& kv : a.terms()) m = std::max(m, Int(abs(kv.second)));
  return m;
}

struct Candidate {
  int k = 0;
  int d = 0;
  HalfLaurent f;
};

const HalfLaurent& torus_cached(int s) {
  static thread_local std::map<int, HalfLaurent> cache;
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, torus_alexander(s)).first;
  return it->second;
}

HalfLaurent stabilized(const Candidate& c, int n) {
  int s = n - c.k;  // shift in halves
  return c.f.shifted(s) + HalfLaurent(c.d) * torus_cached(s) + conjugate(c.f).shifted(-s);
}

// try to fit all (n, Delta) pairs with one (k, d, f); returns the best candidate
std::optional<Candidate> fit_on(const std::vector<int>& ns, const std::vector<HalfLaurent>& ds,
                                Int* worst) {
  int nmax = *std::max_element(ns.begin(), ns.end());
  size_t top = size_t(std::max_element(ns.begin(), ns.end()) - ns.begin());
  std::optional<Candidate> best;
  Int best_miss = -1;
  for (int k = nmax - 1; k >= -(2 * std::abs(nmax) + 40); --k) {
    int s = nmax - k;
    const HalfLaurent& tor = torus_cached(s);
    if (tor.is_zero()) continue;
    // central coefficient: smallest nonnegative exponent of the torus polynomial
    int e0 = s % 2 == 0 ? 1 : 0;
    Int tc = tor.coeff(e0), lc = ds[top].coeff(e0);
    if (tc == 0) continue;
    Int q, rmd;
    divide_qr(lc, tc, q, rmd);
    if (rmd != 0 || abs(q) > 1000000) continue;
    Candidate c;
    c.k = k;
    c.d = int(q);
    c.f = positive_part(ds[top] - HalfLaurent(c.d) * tor).shifted(-s);
    // cheap pass first; the full mismatch is only needed for the error message
    bool exact = true;
    for (size_t i = 0; i < ns.size() && exact; ++i) exact = ds[i] == stabilized(c, ns[i]);
    Int miss = 0;
    if (!exact && worst)
      for (size_t i = 0; i < ns.size(); ++i) miss = std::max(miss, max_abs_coeff(ds[i] - stabilized(c, ns[i])));
    if (exact) {
      bool better = !best || c.f.terms().size() < best->f.terms().size() ||
                    (c.f.terms().size() == best->f.terms().size() && std::abs(c.k) < std::abs(best->k));
      if (better) best = c;
    } else if (best_miss < 0 || miss < best_miss) {
      best_miss = miss;
    }
  }
  if (!best && worst) *worst = best_miss;
  return best;
}

}  // namespace

StabilizationFit fit_stabilization(const TwistFamilySpec& spec, Interval range) {
  spec.validate();
  std::vector<int> ns;
  for (int n = range.lo; n <= range.hi; ++n)
    if (std::abs(n) % 2 == 1) ns.push_back(n);
  if (ns.size() < 4) throw FitError("fit: need at least 4 odd n in the range");
  std::vector<HalfLaurent> ds;
  for (int n : ns) ds.push_back(alexander(insert_twists(spec, n)));
  Int worst = -1;
  for (size_t start = 0; start + 4 <= ns.size(); ++start) {
    std::vector<int> sn(ns.begin() + long(start), ns.end());
    std::vector<HalfLaurent> sd(ds.begin() + long(start), ds.end());
    auto c = fit_on(sn, sd, nullptr);
    if (!c) continue;
    StabilizationFit fit;
    fit.k = c->k;
    fit.d = c->d;
    fit.f = c->f;
    fit.first_stable_n = sn.front();
    fit.sampled_n = sn;
    fit.knot_family = braid_component_count(insert_twists(spec, 1)) == 1;
    for (size_t i = 0; i < sn.size(); ++i) {
      int b = sd[i].is_zero() ? -1 : (sd[i].high() - sd[i].low()) / 2;
      fit.breadth.push_back(b);
      if (fit.knot_family && b < sn[i] - fit.k - 1) fit.degree_bound = false;
    }
    return fit;
  }
  fit_on(ns, ds, &worst);
  std::ostringstream os;
  os << "fit: no (k, d, f) matches on " << range.lo << ".." << range.hi
     << "; largest coefficient mismatch of the closest candidate " << worst;
  throw FitError(os.str());
}

SkeinReport skein_verify(const LinkInput& plus, const LinkInput& minus, const LinkInput& zero) {
  SkeinReport rep;
  rep.plus = alexander(plus);
  rep.minus = alexander(minus);
  rep.zero = alexander(zero);
  auto signs = [](const LinkInput& l) {
    return std::holds_alternative<BraidWord>(l) ? std::vector<int>{1} : std::vector<int>{1, -1};
  };
  bool plus_free = !std::holds_alternative<BraidWord>(plus);
  const HalfLaurent z = HalfLaurent::z();
  for (int sm : signs(minus))
    for (int sz : signs(zero)) {
      HalfLaurent lhs = rep.plus - HalfLaurent(sm) * rep.minus;
      HalfLaurent rhs = HalfLaurent(sz) * z * rep.zero;
      if (lhs == rhs || (plus_free && rep.plus + HalfLaurent(sm) * rep.minus == -rhs)) rep.pass = true;
    }
  return rep;
}

}  // namespace kfh
