#pragma once
// Alexander polynomial backends and the twist-family identities.

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kfh/braid.hpp"
#include "kfh/grid.hpp"
#include "kfh/poly.hpp"

namespace kfh {

using LinkInput = std::variant<BraidWord, GridDiagram>;

struct BackendMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Interval {
  int lo = 0;
  int hi = 0;
};

// Delta_1 = 1, Delta_0 = 0, Delta_{k+2} = z Delta_{k+1} + Delta_k
HalfLaurent torus_alexander(int k);

// exact determinant over Z[t^(+-1/2)] (fraction-free elimination)
HalfLaurent determinant(std::vector<std::vector<HalfLaurent>> m);

// Conway-normalized: sign and centering fixed by the braid itself
HalfLaurent alexander_burau(const BraidWord& b);
// normalize_symmetric convention (sign of links by leading coefficient)
HalfLaurent alexander_grid(const GridDiagram& g);

// braid input: Burau value, cross-checked against the grid determinant of braid_to_grid
// grid input: grid determinant
HalfLaurent alexander(const LinkInput& link);

struct RecursionEntry {
  int n = 0;
  bool pass = false;
  HalfLaurent lhs, rhs;
};
struct RecursionReport {
  HalfLaurent delta_L0, delta_Lm1;
  std::vector<RecursionEntry> entries;
  bool all_pass = true;
};
RecursionReport verify_twist_recursion(const TwistFamilySpec& spec, Interval range);

struct StabilizationFit {
  int k = 0;
  int d = 0;
  HalfLaurent f;
  int first_stable_n = 0;
  std::vector<int> sampled_n;
  bool knot_family = false;
  // breadth (top minus bottom exponent) of each sampled Delta_{L_n}, and whether
  // breadth >= n - k - 1 holds for all of them (knot families only)
  std::vector<int> breadth;
  bool degree_bound = true;
};
StabilizationFit fit_stabilization(const TwistFamilySpec& spec, Interval range);

struct SkeinReport {
  bool pass = false;
  HalfLaurent plus, minus, zero;
};
// Delta_+ - Delta_- = z Delta_0; grid inputs carry no sign information and are
// accepted if some choice of signs works
SkeinReport skein_verify(const LinkInput& plus, const LinkInput& minus, const LinkInput& zero);

int component_count(const LinkInput& link);

}  // namespace kfh
