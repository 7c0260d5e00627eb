// Acceptance run: one line per criterion, then the determinism check over all of them.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "kfh/alexander.hpp"
#include "kfh/catalog.hpp"
#include "kfh/experiments.hpp"
#include "kfh/morse.hpp"
#include "oracle.hpp"

using namespace kfh;

namespace {

struct Outcome {
  bool pass = true;
  Json json = Json::object();
  std::string detail;
};

void need(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    if (o.pass) o.detail = what;
    o.pass = false;
  }
}

TwistFamilySpec fam(const char* n) { return std::get<TwistFamilySpec>(catalog(n).value); }

std::vector<TwistFamilySpec> random_families() {
  std::mt19937 rng(2024);
  std::vector<TwistFamilySpec> out;
  while (out.size() < 10) {
    BraidWord b{3, {}};
    // even length: an odd word on 3 strands always closes to a link
    for (int i = 0; i < 6; ++i) {
      int g = 1 + int(rng() % 2);
      b.word.push_back(rng() % 2 ? g : -g);
    }
    int site = int(rng() % 6);
    b.word[size_t(site)] = std::abs(b.word[size_t(site)]);
    if (braid_component_count(b) != 1) continue;
    out.push_back({b, site});
  }
  return out;
}

std::vector<std::pair<std::string, TwistFamilySpec>> criterion_families() {
  std::vector<std::pair<std::string, TwistFamilySpec>> v = {
      {"unknot-clasp", fam("unknot-clasp")}, {"trefoil-twist", fam("trefoil-twist")}, {"figure8-site", fam("figure8-site")}};
  int i = 0;
  for (auto& f : random_families()) v.push_back({"random-" + std::to_string(i++), f});
  return v;
}

Outcome c1(int) {
  Outcome o;
  for (int k = -9; k <= 9; ++k) {
    BraidWord b{2, std::vector<int>(size_t(std::abs(k)), k > 0 ? 1 : -1)};
    HalfLaurent a = torus_alexander(k), b2 = alexander(b);
    o.json[std::to_string(k)] = to_json(a);
    need(o, a == b2, "k = " + std::to_string(k) + ": " + a.str() + " vs " + b2.str());
  }
  return o;
}

Outcome c2(int) {
  Outcome o;
  for (auto& [name, f] : criterion_families()) {
    auto r = verify_twist_recursion(f, {-6, 6});
    o.json[name] = r.all_pass;
    need(o, r.all_pass, name + " fails the recursion");
  }
  return o;
}

Outcome c3(int) {
  Outcome o;
  for (auto& [name, f] : criterion_families()) {
    StabilizationFit fit;
    try {
      fit = fit_stabilization(f, {1, 31});
    } catch (const std::exception& e) {
      need(o, false, name + ": " + e.what());
      continue;
    }
    o.json[name] = to_json(fit);
    for (int n = fit.first_stable_n; n <= fit.first_stable_n + 8; ++n) {
      if (n % 2 == 0) continue;
      int m = n - fit.k;
      HalfLaurent pred = fit.f.shifted(m) + HalfLaurent(fit.d) * torus_alexander(m) + conjugate(fit.f).shifted(-m);
      HalfLaurent got = alexander(insert_twists(f, n));
      need(o, equal_up_to_sign(pred, got), name + ": fitted form misses n = " + std::to_string(n));
    }
    need(o, fit.degree_bound, name + ": degree bound not reported");
  }
  return o;
}

bool symmetric_table(const BigradedRanks& r) {
  for (auto& [k, v] : r.ranks)
    if (r.at(k.first - k.second, -k.second) != v) return false;
  return true;
}

Outcome c4(int threads) {
  Outcome o;
  std::vector<GridDiagram> grids;
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> x(static_cast<size_t>(n)), p(static_cast<size_t>(n));
    std::iota(x.begin(), x.end(), 0);
    do {
      std::iota(p.begin(), p.end(), 0);
      do {
        bool ok = true;
        for (int i = 0; i < n; ++i) ok = ok && x[size_t(i)] != p[size_t(i)];
        if (ok) grids.push_back({n, x, p});
      } while (std::next_permutation(p.begin(), p.end()));
    } while (std::next_permutation(x.begin(), x.end()));
  }
  size_t exhaustive = grids.size();
  std::mt19937 rng(606);
  while (grids.size() < exhaustive + 25) {
    std::vector<int> x(6), p(6);
    std::iota(x.begin(), x.end(), 0);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(x.begin(), x.end(), rng);
    std::shuffle(p.begin(), p.end(), rng);
    bool ok = true;
    for (int i = 0; i < 6; ++i) ok = ok && x[size_t(i)] != p[size_t(i)];
    if (ok) grids.push_back({6, x, p});
  }
  HfkOptions opt;
  opt.threads = threads;
  std::int64_t mismatches = 0, euler_bad = 0, sym_bad = 0;
  std::string digest;
  for (auto& g : grids) {
    HfkResult r = hfk_hat(g, opt);
    oracle::Grid og{g.n, g.X, g.O};
    oracle::Table t = oracle::tilde_homology(og);
    auto h = oracle::hfk_hat(og);
    oracle::Table et(r.tilde.ranks.begin(), r.tilde.ranks.end()), eh(r.hfk.ranks.begin(), r.hfk.ranks.end());
    if (!h || et != t || eh != *h) {
      if (mismatches == 0) need(o, false, "mismatch on grid " + canonical(to_json(g)));
      ++mismatches;
    }
    HalfLaurent chi = euler_characteristic(r.hfk);
    HalfLaurent expect = power(HalfLaurent::z(), unsigned(r.hfk.l - 1)) * alexander_grid(g);
    if (!equal_up_to_sign(chi, expect)) ++euler_bad;
    if (!symmetric_table(r.hfk)) ++sym_bad;
    digest += std::to_string(r.hfk.total()) + ",";
  }
  need(o, euler_bad == 0, std::to_string(euler_bad) + " Euler failures");
  need(o, sym_bad == 0, std::to_string(sym_bad) + " symmetry failures");
  o.json = Json{{"grids", grids.size()}, {"exhaustive", exhaustive}, {"mismatches", mismatches}, {"totals", digest}};
  if (o.pass) o.detail = std::to_string(exhaustive) + " exhaustive + 25 random grids";
  return o;
}

Outcome c5(int threads) {
  Outcome o;
  HfkOptions opt;
  opt.threads = threads;
  using T = std::map<std::pair<int, int>, std::int64_t>;
  // HFK-hat in (M, 2A)
  std::vector<std::tuple<const char*, T, int>> want = {
      {"unknot", T{{{0, 0}, 1}}, 0},
      {"trefoil_rh", T{{{0, 2}, 1}, {{-1, 0}, 1}, {{-2, -2}, 1}}, 1},
      {"trefoil_lh", T{{{2, 2}, 1}, {{1, 0}, 1}, {{0, -2}, 1}}, -1},
      {"figure8", T{{{1, 2}, 1}, {{0, 0}, 3}, {{-1, -2}, 1}}, 0},
  };
  for (auto& [name, table, t] : want) {
    GridDiagram g = braid_to_grid(std::get<BraidWord>(catalog(name).value));
    BigradedRanks h = hfk_hat(g, opt).hfk;
    int tv = tau(g, opt), tm = tau(grid_mirror(g), opt);
    o.json[name] = Json{{"hfk", to_json(h)}, {"tau", tv}, {"tau_mirror", tm}};
    need(o, h.ranks == table, std::string(name) + " HFK table differs");
    need(o, tv == t, std::string(name) + " tau = " + std::to_string(tv));
    need(o, tm == -tv, std::string(name) + " mirror tau = " + std::to_string(tm));
  }
  return o;
}

Outcome c6(int threads) {
  Outcome o;
  ExperimentOptions eo;
  eo.hfk.threads = threads;
  struct Run {
    const char* name;
    Interval range;
  };
  std::string lines;
  for (Run run : {Run{"unknot-clasp", {3, 13}}, Run{"trefoil-twist", {1, 9}}}) {
    auto spec = fam(run.name);
    int max_grid = 0;
    for (int n = run.range.lo; n <= run.range.hi; ++n) max_grid = std::max(max_grid, braid_to_grid(insert_twists(spec, n)).n);
    auto r = verify_stabilization(spec, run.range, eo);
    Json j = to_json(r);
    j.erase("hfk");
    j["max_grid"] = max_grid;
    o.json[run.name] = j;
    std::ostringstream s;
    s << run.name << " [" << run.range.lo << "," << run.range.hi << "]: stable=" << r.stable << " k_observed=" << r.k_observed
      << " first_stable_n=" << r.first_stable_n;
    bool part2 = r.decomposition.has_value();
    for (auto& c : r.per_n)
      if (c.part2_checked && !c.part2_pass) part2 = false;
    if (!r.unavailable.empty()) {
      s << " unavailable n =";
      for (auto& [n, why] : r.unavailable) s << ' ' << n;
      s << " (" << r.unavailable.begin()->second << ")";
      // how far the checks got before the first missing member
      int last = run.range.lo - 1;
      for (auto& c : r.per_n)
        if (!r.unavailable.count(c.n) && (!c.part1_checked || c.part1_pass) && (!c.part3_checked || c.part3_pass) &&
            (!c.part2_checked || c.part2_pass) && c.n == last + 1)
          last = c.n;
      s << "; all computed checks pass through n = " << last;
    }
    if (max_grid > 15) s << " grid size " << max_grid;
    need(o, max_grid <= 15, "");
    bool ok = r.all_pass && part2 && r.k_observed >= 1;
    need(o, ok, "");
    lines += (lines.empty() ? "" : "; ") + s.str() + (ok ? " pass" : " FAIL");
  }
  o.detail = lines;
  return o;
}

Outcome c7(int threads) {
  Outcome o;
  ExperimentOptions eo;
  eo.hfk.threads = threads;
  auto spec = fam("unknot-clasp");
  for (int n = 1; n <= 9; ++n) {
    auto r = verify_skein_split(spec, n, eo);
    o.json["torus"][std::to_string(n)] = Json{{"inequality", r.inequality}, {"equality", r.equality}};
    need(o, r.error.empty(), "n = " + std::to_string(n) + ": " + r.error);
    need(o, r.inequality, "rank inequality fails at n = " + std::to_string(n));
    if (n >= 5) need(o, r.equality, "equality fails at n = " + std::to_string(n));
  }
  auto f8 = fam("figure8-site");
  for (int n = 1; n <= 5; ++n) {
    auto r = verify_skein_split(f8, n, eo);
    o.json["figure8"][std::to_string(n)] = Json{{"inequality", r.inequality}, {"equality", r.equality}};
    need(o, r.inequality, "figure8-site rank inequality fails at n = " + std::to_string(n));
  }
  if (o.pass) o.detail = "torus n in [1,9], figure8-site n in [1,5]";
  return o;
}

Outcome c8(int threads) {
  Outcome o;
  ExperimentOptions eo;
  eo.hfk.threads = threads;
  std::ostringstream s;
  for (auto name : {"mutant-small-1", "mutant-small-2", "mutant-small-3"}) {
    auto spec = std::get<MutantPairSpec>(catalog(name).value);
    need(o, spec.inner.word.size() <= 6, std::string(name) + " inner tangle too long");
    auto r = compare_mutants(spec, {-4, 4}, all_mutant_checks(), eo);
    o.json[name] = to_json(r);
    need(o, r.unavailable.empty(), std::string(name) + " has unavailable members");
    need(o, r.alexander_all_equal, std::string(name) + " Alexander polynomials differ");
    need(o, r.flype_all_equal, std::string(name) + " flype check fails, mutation choice wrong");
    need(o, r.hfk_threshold <= 4, std::string(name) + " HFK threshold outside the range");
    for (auto& e : r.entries) {
      need(o, e.grid_size_first <= 9 && e.grid_size_second <= 9, std::string(name) + " grid larger than 9");
      if (std::abs(e.n) >= r.hfk_threshold) need(o, e.equal.count(MutantCheck::Hfk) && e.equal.at(MutantCheck::Hfk), std::string(name) + " HFK differs");
    }
    s << name << " threshold " << r.hfk_threshold << "; ";
  }
  if (o.pass) o.detail = s.str() + "mutation " + mutation_name(kDefaultMutation);
  return o;
}

Outcome c9(int threads) {
  Outcome o;
  HfkOptions opt;
  opt.threads = threads;
  auto t0 = std::chrono::steady_clock::now();
  GridDiagram kt = std::get<GridDiagram>(catalog("KT").value), c = std::get<GridDiagram>(catalog("C").value);
  HalfLaurent dk = alexander_grid(kt), dc = alexander_grid(c);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  need(o, dk == HalfLaurent(1) && dc == HalfLaurent(1), "Alexander polynomial not 1");
  need(o, secs < 1.0, "Alexander polynomials took " + std::to_string(secs) + " s");
  int gk = top_alexander_grading(kt, opt).genus, gc = top_alexander_grading(c, opt).genus;
  need(o, gk == 2, "genus(KT) = " + std::to_string(gk));
  need(o, gc == 3, "genus(C) = " + std::to_string(gc));
  // the same contrast inside the two-tangle family
  auto pair = std::get<MutantPairSpec>(catalog("KT_family").value);
  auto m = build_mutant_pair(pair);
  int fk = top_alexander_grading(m.first.grid, opt).genus, fc = top_alexander_grading(m.second.grid, opt).genus;
  need(o, fk == 2 && fc == 3, "family genera " + std::to_string(fk) + ", " + std::to_string(fc));
  o.json = Json{{"alexander_KT", to_json(dk)}, {"alexander_C", to_json(dc)}, {"genus_KT", gk}, {"genus_C", gc},
                {"family_genus", {fk, fc}}, {"grid_sizes", {kt.n, c.n, m.first.grid.n, m.second.grid.n}}};
  if (o.pass) o.detail = "genus 2 vs 3 on grids of size " + std::to_string(kt.n) + ", " + std::to_string(c.n);
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome(int)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> cs = {
      {1, "torus closed forms", c1},       {2, "twist recursion", c2},
      {3, "stabilized Alexander form", c3}, {4, "engine against dense oracle", c4},
      {5, "catalog HFK and tau", c5},       {6, "HFK stabilization", c6},
      {7, "split skein sequence", c7},      {8, "small mutant pairs", c8},
      {9, "KT and C", c9},
  };
  std::vector<std::string> first;
  bool all = true;
  for (auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(1);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    first.push_back(canonical(o.json));
    all = all && o.pass;
    std::cout << "criterion " << c.id << " (" << c.title << "): " << (o.pass ? "PASS" : "FAIL") << " [" << std::fixed
              << std::setprecision(2) << secs << " s] " << o.detail << std::endl;
  }

  // same JSON with 8 threads and on a repeated single-thread run
  std::vector<int> differ;
  auto t0 = std::chrono::steady_clock::now();
  for (int threads : {8, 1})
    for (size_t i = 0; i < cs.size(); ++i) {
      std::string j;
      try {
        j = canonical(cs[i].run(threads).json);
      } catch (const std::exception& e) {
        j = e.what();
      }
      if (j != first[i] && std::find(differ.begin(), differ.end(), cs[i].id) == differ.end()) differ.push_back(cs[i].id);
    }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  for (int id : differ) d << ' ' << id;
  std::cout << "criterion 10 (determinism): " << (differ.empty() ? "PASS" : "FAIL") << " [" << std::fixed << std::setprecision(2)
            << secs << " s] " << (differ.empty() ? "JSON identical for 1 and 8 threads and on a repeat run" : "differs for criteria" + d.str())
            << std::endl;
  all = all && differ.empty();
  return all ? 0 : 1;
}
