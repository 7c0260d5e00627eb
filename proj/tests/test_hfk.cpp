#include <random>

#include "doctest.h"
#include "kfh/alexander.hpp"
#include "kfh/catalog.hpp"
#include "kfh/hfk.hpp"
#include "kfh/morse.hpp"
#include "oracle.hpp"

using namespace kfh;

namespace {

oracle::Table table(const BigradedRanks& r) {
  oracle::Table t;
  for (auto& [k, v] : r.ranks) t[k] = v;
  return t;
}

oracle::Grid og(const GridDiagram& g) { return {g.n, g.X, g.O}; }

GridDiagram random_grid(std::mt19937& rng, int n) {
  std::vector<int> x(static_cast<size_t>(n)), o(static_cast<size_t>(n));
  std::iota(x.begin(), x.end(), 0);
  std::iota(o.begin(), o.end(), 0);
  for (;;) {
    std::shuffle(x.begin(), x.end(), rng);
    std::shuffle(o.begin(), o.end(), rng);
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && x[size_t(i)] != o[size_t(i)];
    if (ok) return {n, x, o};
  }
}

bool symmetric(const oracle::Table& t) {
  for (auto& [k, v] : t) {
    auto it = t.find({k.first - k.second, -k.second});
    if (it == t.end() || it->second != v) return false;
  }
  return true;
}

BigradedRanks hfk_of(const char* name) {
  return hfk_hat(braid_to_grid(std::get<BraidWord>(catalog(name).value))).hfk;
}

}  // namespace

TEST_CASE("gradings match the oracle on every state") {
  std::mt19937 rng(1);
  for (int t = 0; t < 10; ++t) {
    GridDiagram g = random_grid(rng, 5);
    Gradings gr(g);
    for (auto& gen : oracle::generators(og(g))) {
      CHECK(gr.M(gen.x) == gen.M);
      CHECK(gr.A2(gen.x) == gen.A2);
    }
  }
}

TEST_CASE("the oracle itself: d^2 = 0 and the tilde dimension") {
  GridDiagram g = braid_to_grid({2, {1, 1, 1}});
  REQUIRE(g.n == 5);
  CHECK(oracle::d_squared_zero(oracle::complex(og(g), false)));
  CHECK(oracle::d_squared_zero(oracle::complex(og(g), true)));
  long long total = 0;
  for (auto& [k, v] : oracle::tilde_homology(og(g))) total += v;
  CHECK(total == 3 * 16);
}

TEST_CASE("engine complexes square to zero") {
  std::mt19937 rng(2);
  for (int t = 0; t < 6; ++t) {
    GridDiagram g = random_grid(rng, 6);
    for (auto c : {tilde_complex(g), filtered_complex(g)}) {
      bool zero = true;
      for (size_t i = 0; i < c.size() && zero; ++i) {
        std::map<std::uint32_t, int> acc;
        for (auto j : c.column(i))
          for (auto k : c.column(j)) acc[k] ^= 1;
        for (auto& [k, v] : acc) zero = zero && v == 0;
      }
      CHECK(zero);
    }
  }
}

TEST_CASE("engine agrees with the dense oracle on small grids") {
  std::mt19937 rng(4);
  for (int t = 0; t < 40; ++t) {
    GridDiagram g = random_grid(rng, 3 + t % 3);
    HfkResult r = hfk_hat(g);
    CHECK(table(r.tilde) == oracle::tilde_homology(og(g)));
    auto h = oracle::hfk_hat(og(g));
    REQUIRE(h);
    CHECK(table(r.hfk) == *h);
    CHECK(symmetric(*h));
  }
}

TEST_CASE("Euler characteristic is the Alexander polynomial") {
  std::mt19937 rng(8);
  for (int t = 0; t < 20; ++t) {
    GridDiagram g = random_grid(rng, 6);
    HfkResult r = hfk_hat(g);
    HalfLaurent chi = euler_characteristic(r.hfk);
    HalfLaurent expect = power(HalfLaurent::z(), unsigned(r.hfk.l - 1)) * alexander_grid(g);
    CHECK(equal_up_to_sign(chi, expect));
  }
}

TEST_CASE("catalog HFK tables") {
  using T = std::map<std::pair<int, int>, std::int64_t>;
  CHECK(hfk_of("unknot").ranks == T{{{0, 0}, 1}});
  CHECK(hfk_of("trefoil_rh").ranks == T{{{0, 2}, 1}, {{-1, 0}, 1}, {{-2, -2}, 1}});
  CHECK(hfk_of("trefoil_lh").ranks == T{{{2, 2}, 1}, {{1, 0}, 1}, {{0, -2}, 1}});
  CHECK(hfk_of("figure8").ranks == T{{{1, 2}, 1}, {{0, 0}, 3}, {{-1, -2}, 1}});
  // Hopf link: V as a bigraded space, from a 2-strand braid
  BigradedRanks hopf = hfk_hat(braid_to_grid({2, {1, 1}})).hfk;
  CHECK(hopf.ranks == T{{{0, 2}, 1}, {{-1, 0}, 2}, {{-2, -2}, 1}});
}

TEST_CASE("tau on catalog knots") {
  auto g = [](const char* n) { return braid_to_grid(std::get<BraidWord>(catalog(n).value)); };
  CHECK(tau(g("unknot")) == 0);
  CHECK(tau(g("trefoil_rh")) == 1);
  CHECK(tau(g("trefoil_lh")) == -1);
  CHECK(tau(g("figure8")) == 0);
  CHECK(tau(g("5_2")) == 1);
  CHECK(tau(braid_to_grid({2, {1, 1, 1, 1, 1}})) == 2);
  CHECK(tau(grid_mirror(g("5_2"))) == -1);
  CHECK_THROWS_AS(tau(braid_to_grid({2, {1, 1}})), LinkError);
}

TEST_CASE("tau against the filtered oracle") {
  std::mt19937 rng(9);
  int knots = 0;
  for (int t = 0; t < 60 && knots < 12; ++t) {
    GridDiagram g = random_grid(rng, 5 + t % 2);
    if (grid_component_count(g) != 1) continue;
    ++knots;
    auto o = oracle::tau(og(g));
    REQUIRE(o);
    CHECK(tau(g) == *o);
    CHECK(tau(grid_mirror(g)) == -*o);
  }
  CHECK(knots > 5);
}

TEST_CASE("windowed computation agrees with the full one") {
  for (BraidWord b : {BraidWord{2, {1, 1, 1, 1, 1, 1, 1}}, BraidWord{3, {1, 1, 1, 2, -1, 2}}, BraidWord{2, {1, 1, 1, 1, 1, 1}}}) {
    GridDiagram g = braid_to_grid(b);
    BigradedRanks full = hfk_hat(g).hfk;
    HfkOptions o;
    o.a2_window = Window{0, 1 << 20};
    HfkResult w = hfk_hat(g, o);
    CHECK(w.windowed);
    CHECK(w.hfk.completed_by_symmetry);
    CHECK(w.hfk == full);
    CHECK(is_symmetric(full));
    CHECK(top_alexander_grading(g).genus == derived_invariants(full).genus);
  }
}

TEST_CASE("thread count does not change results") {
  GridDiagram g = braid_to_grid({3, {1, 1, 1, 2, -1, 2}});
  HfkOptions a, b;
  b.threads = 4;
  CHECK(hfk_hat(g, a).hfk == hfk_hat(g, b).hfk);
  CHECK(hfk_hat(g, a).tilde == hfk_hat(g, b).tilde);
}

TEST_CASE("resource limit names the state count") {
  HfkOptions o;
  o.max_states = 100;
  try {
    hfk_hat(braid_to_grid({2, {1, 1, 1, 1, 1}}), o);
    FAIL("expected ResourceLimit");
  } catch (const ResourceLimit& e) {
    CHECK(std::string(e.what()).find("states") != std::string::npos);
  }
}

TEST_CASE("rank table algebra") {
  BigradedRanks v = StandardSpaces::V(), w = StandardSpaces::W();
  CHECK(v.total() == 4);
  CHECK(tensor(w, w).total() == 4);
  auto q = divide_by_W(tensor(v, w));
  REQUIRE(q);
  CHECK(*q == v);
  BigradedRanks one;
  one.add(0, 0, 1);
  CHECK_FALSE(divide_by_W(one));
  // V is W with a shifted copy of itself
  CHECK(divide_by_W(v)->total() == 2);
  CHECK(shifted(v, 1, 2).at(1, 4) == 1);
  CHECK(direct_sum(v, v).at(-1, 0) == 4);
  auto d = derived_invariants(hfk_of("figure8"));
  CHECK(d.genus == 1);
  CHECK(d.thin);
}
