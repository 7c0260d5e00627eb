#include "kfh/experiments.hpp"

#include <algorithm>
#include <climits>

#include "kfh/morse.hpp"

namespace kfh {

BigradedRanks link_hfk(const GridDiagram& g, const ExperimentOptions& opt) {
  HfkOptions o = opt.hfk;
  if (opt.use_symmetry) o.a2_window = Window{0, INT_MAX};
  return hfk_hat(g, o).hfk;
}

BigradedRanks slice(const BigradedRanks& r, int j) {
  BigradedRanks s;
  s.l = r.l;
  s.n = r.n;
  for (auto& [k, v] : r.ranks)
    if (k.second == 2 * j) s.add(k.first, k.second, v);
  return s;
}

namespace {

struct Support {
  int lo = INT_MAX, hi = INT_MIN;  // A2
  int mlo = INT_MAX, mhi = INT_MIN;
};

Support support(std::initializer_list<const BigradedRanks*> rs) {
  Support s;
  for (auto* r : rs)
    for (auto& [k, v] : r->ranks) {
      s.lo = std::min(s.lo, k.second);
      s.hi = std::max(s.hi, k.second);
      s.mlo = std::min(s.mlo, k.first);
      s.mhi = std::max(s.mhi, k.first);
    }
  if (s.lo > s.hi) s = Support{0, 0, 0, 0};
  return s;
}

// largest k with HFK(a, j) = HFK(b, j+1) for j >= -k and HFK(a, j) = HFK(b, j-1)[M-2] for j <= k
int part1_k(const BigradedRanks& a, const BigradedRanks& b) {
  Support s = support({&a, &b});
  int par = ((s.lo % 2) + 2) % 2;
  auto up = [&](int a2) {
    for (int M = s.mlo - 3; M <= s.mhi + 3; ++M)
      if (a.at(M, a2) != b.at(M, a2 + 2)) return false;
    return true;
  };
  auto down = [&](int a2) {
    for (int M = s.mlo - 3; M <= s.mhi + 3; ++M)
      if (a.at(M, a2) != b.at(M - 2, a2 - 2)) return false;
    return true;
  };
  int bound = std::max(std::abs(s.lo), std::abs(s.hi)) / 2 + 2;
  int best = -1;
  for (int k = 0; k <= bound; ++k) {
    bool ok = true;
    for (int a2 = s.lo - 4 - par; a2 <= s.hi + 4 && ok; ++a2) {
      if (((a2 % 2) + 2) % 2 != par) continue;
      if (a2 >= -2 * k && !up(a2)) ok = false;
      if (a2 <= 2 * k && !down(a2)) ok = false;
    }
    if (!ok) break;
    best = k;
  }
  return best;
}

Decomposition decompose(const BigradedRanks& h, int n0) {
  Decomposition d;
  d.n0 = n0;
  d.k = n0 + 1;
  for (auto* r : {&d.F_circ, &d.F_bullet, &d.A_hat, &d.B_hat}) {
    r->l = h.l;
    r->n = h.n;
  }
  for (auto& [k, v] : h.ranks) {
    if (k.second >= 2) d.F_bullet.add(k.first, k.second, v);
    if (k.second <= -2) d.F_circ.add(k.first, k.second, v);
    if (k.second == 0) d.A_hat.add(k.first, 0, v);
    if (k.second == -2) d.B_hat.add(k.first, 0, v);
  }
  return d;
}

bool is_odd(int n) { return n % 2 != 0; }

}  // namespace

BigradedRanks decomposition_prediction(const Decomposition& d, int n) {
  int m = (n - d.n0) / 2;
  BigradedRanks r = shifted(d.F_bullet, 0, 2 * m);
  r = direct_sum(r, shifted(d.F_circ, -2 * m, -2 * m));
  for (int i = 0; i <= m; ++i) r = direct_sum(r, shifted(d.A_hat, -2 * i, 2 * (m - 2 * i)));
  for (int i = 0; i < m; ++i) r = direct_sum(r, shifted(d.B_hat, -2 * i, 2 * (m - 1 - 2 * i)));
  r.l = d.A_hat.l;
  return r;
}

StabilizationReport verify_stabilization(const TwistFamilySpec& spec, Interval range, const ExperimentOptions& opt) {
  spec.validate();
  StabilizationReport rep;
  for (int n = range.lo; n <= range.hi; ++n) {
    try {
      rep.hfk[n] = link_hfk(braid_to_grid(insert_twists(spec, n)), opt);
    } catch (const ResourceLimit& e) {
      rep.unavailable[n] = e.what();
    }
  }
  auto have = [&](int n) { return rep.hfk.count(n) > 0; };

  for (int n = range.lo; n <= range.hi; ++n) {
    StabilizationCheck c;
    c.n = n;
    if (have(n) && have(n + 2)) {
      c.part1_checked = true;
      c.part1_k = part1_k(rep.hfk[n], rep.hfk[n + 2]);
      c.part1_pass = c.part1_k >= 1;
    }
    if (!is_odd(n) && have(n) && have(n - 1) && have(n + 1)) {
      c.part3_checked = true;
      c.part3_pass = rep.hfk[n] == direct_sum(rep.hfk[n + 1], shifted(rep.hfk[n - 1], -1, 0));
    }
    rep.per_n.push_back(c);
  }

  // the first odd n0 from which every later check passes and the decomposition of L_{n0}
  // reproduces every later odd member
  for (int n0 = range.lo; n0 <= range.hi; ++n0) {
    if (!is_odd(n0) || !have(n0)) continue;
    Decomposition d = decompose(rep.hfk[n0], n0);
    bool ok = true, compared = false;
    for (auto& c : rep.per_n) {
      if (c.n < n0) continue;
      if (c.part1_checked && !c.part1_pass && is_odd(c.n)) ok = false;
      if (c.part3_checked && !c.part3_pass && c.n > n0) ok = false;
      if (is_odd(c.n) && c.n > n0 && have(c.n)) {
        compared = true;
        if (!(decomposition_prediction(d, c.n) == rep.hfk[c.n])) ok = false;
      }
    }
    if (ok && compared) {
      rep.stable = true;
      rep.first_stable_n = n0;
      rep.decomposition = d;
      break;
    }
  }
  if (rep.stable) {
    rep.k_observed = INT_MAX;
    for (auto& c : rep.per_n) {
      if (c.n < rep.first_stable_n) continue;
      if (c.part1_checked && is_odd(c.n)) rep.k_observed = std::min(rep.k_observed, c.part1_k);
      if (is_odd(c.n) && c.n > rep.first_stable_n && have(c.n)) {
        c.part2_checked = true;
        c.part2_pass = decomposition_prediction(*rep.decomposition, c.n) == rep.hfk[c.n];
      }
    }
    if (rep.k_observed == INT_MAX) rep.k_observed = 0;
  }
  rep.all_pass = rep.stable && rep.unavailable.empty() && rep.k_observed >= 1;
  return rep;
}

SkeinSplitReport verify_skein_split(const TwistFamilySpec& spec, int n, const ExperimentOptions& opt) {
  spec.validate();
  SkeinSplitReport rep;
  rep.n = n;
  BigradedRanks h[3];
  try {
    for (int d = -1; d <= 1; ++d) h[d + 1] = link_hfk(braid_to_grid(insert_twists(spec, n + d)), opt);
  } catch (const ResourceLimit& e) {
    rep.error = e.what();
    return rep;
  }
  int site = -1;
  BraidWord plus = insert_twists(spec, n + 1, &site);
  if (site < 0) plus = insert_twists(spec, n - 1, &site);
  rep.same_component = component_data(plus, {site}).twist_site_same_component.at(0);
  rep.v_on_middle = !rep.same_component;
  rep.lhs = rep.v_on_middle ? tensor(h[1], StandardSpaces::V()) : h[1];
  rep.rhs = direct_sum(shifted(h[0], -1, 0), h[2]);
  rep.lhs.l = h[1].l;
  rep.lhs.n = h[1].n;
  rep.inequality = true;
  for (auto& [k, v] : rep.lhs.ranks)
    if (v > rep.rhs.at(k.first, k.second)) rep.inequality = false;
  rep.equality = rep.lhs == rep.rhs;
  return rep;
}

const char* mutant_check_name(MutantCheck c) {
  switch (c) {
    case MutantCheck::Alexander: return "alexander";
    case MutantCheck::Hfk: return "hfk";
    case MutantCheck::Genus: return "genus";
    case MutantCheck::Tau: return "tau";
    case MutantCheck::Delta: return "delta";
    case MutantCheck::Flype: return "flype";
  }
  return "?";
}

std::set<MutantCheck> all_mutant_checks() {
  return {MutantCheck::Alexander, MutantCheck::Hfk, MutantCheck::Genus,
          MutantCheck::Tau, MutantCheck::Delta, MutantCheck::Flype};
}

MutantReport compare_mutants(const MutantPairSpec& spec, Interval range, const std::set<MutantCheck>& checks,
                             const ExperimentOptions& opt, Mutation mut) {
  spec.validate();
  MutantReport rep;
  rep.mutation = mut;
  BraidWord rho = mutate_tangle(spec.inner, mut);
  auto want = [&](MutantCheck c) { return checks.count(c) > 0; };
  for (int n = range.lo; n <= range.hi; ++n) {
    MutantEntry e;
    e.n = n;
    MutantMember a = build_two_tangle(spec.outer, spec.inner, spec.k + n, spec.l);
    MutantMember b = build_two_tangle(spec.outer, rho, spec.k + n, spec.l);
    e.components = a.components;
    e.grid_size_first = a.grid.n;
    e.grid_size_second = b.grid.n;
    bool knot = a.components == 1 && b.components == 1;
    if (want(MutantCheck::Alexander) || want(MutantCheck::Flype)) {
      e.alexander_first = alexander_grid(a.grid);
      e.alexander_second = alexander_grid(b.grid);
    }
    if (want(MutantCheck::Alexander)) {
      bool eq = knot ? e.alexander_first == e.alexander_second
                     : equal_up_to_sign(e.alexander_first, e.alexander_second);
      e.equal[MutantCheck::Alexander] = eq;
      rep.alexander_all_equal = rep.alexander_all_equal && eq;
    }
    bool need_hfk = want(MutantCheck::Hfk) || want(MutantCheck::Genus) || want(MutantCheck::Delta);
    try {
      if (need_hfk) {
        e.hfk_first = link_hfk(a.grid, opt);
        e.hfk_second = link_hfk(b.grid, opt);
        if (want(MutantCheck::Hfk)) e.equal[MutantCheck::Hfk] = e.hfk_first == e.hfk_second;
        auto da = derived_invariants(e.hfk_first), db = derived_invariants(e.hfk_second);
        if (want(MutantCheck::Genus)) e.equal[MutantCheck::Genus] = da.genus == db.genus;
        if (want(MutantCheck::Delta)) e.equal[MutantCheck::Delta] = da.delta2 == db.delta2;
      }
    } catch (const ResourceLimit& ex) {
      rep.unavailable[n] = ex.what();
    }
    if (want(MutantCheck::Tau)) {
      if (!knot) {
        e.skipped[MutantCheck::Tau] = "link members";
      } else {
        try {
          e.equal[MutantCheck::Tau] = tau(a.grid, opt.hfk) == tau(b.grid, opt.hfk);
        } catch (const ResourceLimit& ex) {
          e.skipped[MutantCheck::Tau] = ex.what();
        }
      }
    }
    if (want(MutantCheck::Flype)) {
      // the mutant of L_{k,l} should be L_{k+1,l-1} with the original tangle
      MutantMember c = build_two_tangle(spec.outer, spec.inner, spec.k + n + 1, spec.l - 1);
      HalfLaurent ac = alexander_grid(c.grid);
      bool eq = c.components == b.components &&
                (knot ? ac == e.alexander_second : equal_up_to_sign(ac, e.alexander_second));
      try {
        if (eq) {
          BigradedRanks hb = need_hfk ? e.hfk_second : link_hfk(b.grid, opt);
          eq = link_hfk(c.grid, opt) == hb;
        }
        e.equal[MutantCheck::Flype] = eq;
        rep.flype_all_equal = rep.flype_all_equal && eq;
      } catch (const ResourceLimit& ex) {
        e.skipped[MutantCheck::Flype] = ex.what();
      }
    }
    rep.entries.push_back(std::move(e));
  }
  int maxabs = 0;
  for (auto& e : rep.entries) maxabs = std::max(maxabs, std::abs(e.n));
  rep.hfk_threshold = 0;
  for (auto& e : rep.entries) {
    auto it = e.equal.find(MutantCheck::Hfk);
    bool ok = it != e.equal.end() && it->second;
    if (want(MutantCheck::Hfk) && !ok) rep.hfk_threshold = std::max(rep.hfk_threshold, std::abs(e.n) + 1);
  }
  return rep;
}

Json to_json(const StabilizationReport& r) {
  Json per = Json::array();
  for (auto& c : r.per_n) {
    Json j{{"n", c.n}};
    if (c.part1_checked) {
      j["part1_pass"] = c.part1_pass;
      j["part1_k"] = c.part1_k;
    }
    if (c.part2_checked) j["part2_pass"] = c.part2_pass;
    if (c.part3_checked) j["part3_pass"] = c.part3_pass;
    per.push_back(j);
  }
  Json hfk = Json::object();
  for (auto& [n, h] : r.hfk) hfk[std::to_string(n)] = to_json(h);
  Json una = Json::object();
  for (auto& [n, s] : r.unavailable) una[std::to_string(n)] = s;
  Json j{{"stable", r.stable}, {"all_pass", r.all_pass}, {"per_n", per}, {"hfk", hfk}, {"unavailable", una}};
  if (r.stable) {
    j["k_observed"] = r.k_observed;
    j["first_stable_n"] = r.first_stable_n;
  }
  if (r.decomposition) {
    auto& d = *r.decomposition;
    j["decomposition"] = Json{{"n0", d.n0},
                              {"k", d.k},
                              {"F_circ", to_json(d.F_circ)},
                              {"F_bullet", to_json(d.F_bullet)},
                              {"A_hat", to_json(d.A_hat)},
                              {"B_hat", to_json(d.B_hat)}};
  }
  return j;
}

Json to_json(const SkeinSplitReport& r) {
  Json j{{"n", r.n},
         {"inequality", r.inequality},
         {"equality", r.equality},
         {"same_component", r.same_component},
         {"v_on_middle", r.v_on_middle},
         {"lhs", to_json(r.lhs)},
         {"rhs", to_json(r.rhs)}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

Json to_json(const MutantReport& r) {
  Json entries = Json::array();
  for (auto& e : r.entries) {
    Json eq = Json::object(), sk = Json::object();
    for (auto& [c, v] : e.equal) eq[mutant_check_name(c)] = v;
    for (auto& [c, v] : e.skipped) sk[mutant_check_name(c)] = v;
    Json j{{"n", e.n},
           {"components", e.components},
           {"grid_sizes", {e.grid_size_first, e.grid_size_second}},
           {"equal", eq},
           {"skipped", sk}};
    if (!e.alexander_first.is_zero() || !e.alexander_second.is_zero())
      j["alexander"] = {to_json(e.alexander_first), to_json(e.alexander_second)};
    if (!e.hfk_first.ranks.empty()) j["hfk"] = {to_json(e.hfk_first), to_json(e.hfk_second)};
    entries.push_back(j);
  }
  Json una = Json::object();
  for (auto& [n, s] : r.unavailable) una[std::to_string(n)] = s;
  return Json{{"mutation", mutation_name(r.mutation)},
              {"entries", entries},
              {"hfk_threshold", r.hfk_threshold},
              {"alexander_all_equal", r.alexander_all_equal},
              {"flype_all_equal", r.flype_all_equal},
              {"unavailable", una}};
}

}  // namespace kfh
