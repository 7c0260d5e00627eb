#include "kfh/catalog.hpp"

#include <regex>

#include "kfh/alexander.hpp"
#include "kfh/mutant.hpp"

namespace kfh {

namespace {

HalfLaurent poly(std::initializer_list<std::pair<int, int>> halves) {
  std::map<int, Int> m;
  for (auto& [e, c] : halves) m[e] = c;
  return HalfLaurent::from_terms(m);
}

// 11-crossing grids, X and O by column
const GridDiagram kKT{11, {5, 10, 9, 4, 8, 0, 1, 6, 7, 2, 3}, {0, 6, 1, 7, 10, 2, 5, 9, 3, 4, 8}};
const GridDiagram kC{11, {10, 9, 3, 4, 5, 8, 6, 7, 1, 2, 0}, {6, 1, 7, 0, 3, 10, 9, 2, 4, 8, 5}};

// two-tangle word: member k = 0 has genus 2 and trivial Alexander polynomial, its flip-h mutant genus 3
const BraidWord kKTOuter{4, {-1, -1, -1, -3, -3}};
const BraidWord kKTInner{4, {1, 1, 3, -2, 1, 3}};
constexpr int kKTTwist = 0;
constexpr int kKTBelow = 0;

// Conway polynomial of L_{k,0} at k = 0 and k = 1 (a 2-component link); the twists are parallel,
// so nabla_{k+1} = nabla_{k-1} + z nabla_k gives every other member
HalfLaurent kt_family_alexander(int k) {
  HalfLaurent z = HalfLaurent::z();
  HalfLaurent a = HalfLaurent(1);
  HalfLaurent b = poly({{7, 1}, {5, -4}, {3, 9}, {1, -13}, {-1, 13}, {-3, -9}, {-5, 4}, {-7, -1}});
  if (k == 0) return a;
  if (k > 0) {
    for (int i = 1; i < k; ++i) {
      HalfLaurent c = a + z * b;
      a = b;
      b = c;
    }
    return b;
  }
  // run backwards: nabla_{k-1} = nabla_{k+1} - z nabla_k
  HalfLaurent hi = b, lo = a;
  for (int i = 0; i > k; --i) {
    HalfLaurent c = hi - z * lo;
    hi = lo;
    lo = c;
  }
  return lo;
}

BraidWord torus_word(int k) {
  BraidWord b{2, {}};
  for (int i = 0; i < std::abs(k); ++i) b.word.push_back(k > 0 ? 1 : -1);
  return b;
}

const BraidWord kFigure8{3, {1, -2, 1, -2}};
const BraidWord kFiveTwo{3, {1, 1, 1, 2, -1, 2}};

struct Fixed {
  const char* name;
  CatalogValue value;
  HalfLaurent alex;
  const char* note;
};

std::vector<Fixed> fixed_entries() {
  HalfLaurent one(1);
  HalfLaurent tref = poly({{2, 1}, {0, -1}, {-2, 1}});
  HalfLaurent fig8 = poly({{2, -1}, {0, 3}, {-2, -1}});
  HalfLaurent five2 = poly({{2, 2}, {0, -3}, {-2, 2}});
  return {
      {"unknot", BraidWord{2, {1}}, one, "closure of sigma_1"},
      {"trefoil", torus_word(3), tref, "right-handed trefoil"},
      {"trefoil_rh", torus_word(3), tref, "right-handed trefoil"},
      {"trefoil_lh", torus_word(-3), tref, "left-handed trefoil"},
      {"figure8", kFigure8, fig8, "figure-eight knot"},
      {"5_2", kFiveTwo, five2, "knot 5_2"},
      {"KT", kKT, one, "Kinoshita-Terasaka knot 11n42, grid of size 11"},
      {"C", kC, one, "Conway knot 11n34, grid of size 11"},
      {"unknot-clasp", TwistFamilySpec{BraidWord{2, {1}}, 0}, one, "L_n = T(2,n)"},
      {"trefoil-twist", TwistFamilySpec{torus_word(3), 0}, tref, "L_n = T(2,n+2)"},
      {"figure8-site", TwistFamilySpec{kFigure8, 0}, fig8, "figure-eight, twisting its first crossing"},
      {"twist-family", TwistFamilySpec{kFiveTwo, 0}, five2, "5_2, twisting its first crossing"},
      {"mutant-small-1", MutantPairSpec{BraidWord{4, {1}}, BraidWord{4, {1, -3, 1}}, 0, -1}, tref, "small two-tangle knot"},
      {"mutant-small-2", MutantPairSpec{BraidWord{4, {1}}, BraidWord{4, {2, 1, 3}}, 0, 1}, tref, "small two-tangle knot"},
      {"mutant-small-3", MutantPairSpec{BraidWord{4, {1}}, BraidWord{4, {1, -2, 3}}, 0, -1}, poly({{1, 1}, {-1, -1}}),
       "small two-tangle link, 2 components"},
  };
}

std::string keys_text() {
  std::string s;
  for (auto& k : catalog_names()) s += (s.empty() ? "" : ", ") + k;
  return s;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> v;
  for (auto& f : fixed_entries()) v.push_back(f.name);
  v.push_back("torus(2,k)");
  v.push_back("KT_family(n)");
  v.push_back("C_family(n)");
  v.push_back("KT_family");
  v.push_back("C_family");
  return v;
}

CatalogEntry catalog(const std::string& name) {
  for (auto& f : fixed_entries())
    if (name == f.name) {
      return CatalogEntry{f.name, f.value, f.alex, f.note};
    }
  static const std::regex torus_re(R"(torus\(2,\s*(-?\d+)\))");
  static const std::regex fam_re(R"((KT|C)_family(?:\((-?\d+)\))?)");
  std::smatch m;
  if (std::regex_match(name, m, torus_re)) {
    int k = std::stoi(m[1].str());
    return {name, torus_word(k), torus_alexander(k), "torus link T(2,k)"};
  }
  if (std::regex_match(name, m, fam_re)) {
    int n = m[2].matched ? std::stoi(m[2].str()) : 0;
    bool kt = m[1].str() == "KT";
    MutantPairSpec s{kKTOuter, kKTInner, kKTTwist + 2 * n, kKTBelow};
    if (!kt) s.inner = mutate_tangle(kKTInner, kDefaultMutation);
    return {name, s, kt_family_alexander(s.k),
            kt ? "KT with 2n extra half-twists next to the mutation sphere"
               : "C with 2n extra half-twists next to the mutation sphere"};
  }
  throw CatalogError("unknown catalog name '" + name + "'; available: " + keys_text());
}

bool catalog_self_test(const CatalogEntry& e, std::string* detail) {
  HalfLaurent got;
  bool ok = true;
  if (auto* b = std::get_if<BraidWord>(&e.value)) {
    got = alexander(*b);
    ok = braid_component_count(*b) == 1 ? got == e.expected_alexander : equal_up_to_sign(got, e.expected_alexander);
  } else if (auto* g = std::get_if<GridDiagram>(&e.value)) {
    got = alexander_grid(*g);
    ok = got == e.expected_alexander;
  } else if (auto* t = std::get_if<TwistFamilySpec>(&e.value)) {
    got = alexander(insert_twists(*t, 1));
    ok = got == e.expected_alexander;
  } else {
    auto& s = std::get<MutantPairSpec>(e.value);
    MutantPair p = build_mutant_pair(s);
    got = alexander_grid(p.first.grid);
    HalfLaurent other = alexander_grid(p.second.grid);
    ok = equal_up_to_sign(got, e.expected_alexander) && equal_up_to_sign(other, e.expected_alexander);
  }
  if (detail) *detail = got.str();
  return ok;
}

}  // namespace kfh
