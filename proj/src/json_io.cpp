#include "kfh/json_io.hpp"

#include <sstream>

namespace kfh {

std::string canonical(const Json& j) { return j.dump(); }

static Json int_json(const Int& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(c));
  return Json(c.str());
}

static Int int_from(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<std::int64_t>());
}

Json to_json(const HalfLaurent& p) {
  Json arr = Json::array();
  const auto& t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) arr.push_back(Json::array({it->first, int_json(it->second)}));
  return Json{{"halves", arr}};
}

HalfLaurent poly_from_json(const Json& j) {
  std::map<int, Int> m;
  for (auto& e : j.at("halves")) m[e.at(0).get<int>()] += int_from(e.at(1));
  return HalfLaurent::from_terms(m);
}

Json to_json(const BraidWord& b) { return Json{{"strands", b.strands}, {"word", b.word}}; }

BraidWord braid_from_json(const Json& j) {
  BraidWord b{j.at("strands").get<int>(), j.at("word").get<std::vector<int>>()};
  b.validate();
  return b;
}

Json to_json(const GridDiagram& g) { return Json{{"size", g.n}, {"X", g.X}, {"O", g.O}}; }

GridDiagram grid_from_json(const Json& j) {
  GridDiagram g{j.at("size").get<int>(), j.at("X").get<std::vector<int>>(), j.at("O").get<std::vector<int>>()};
  g.validate();
  return g;
}

Json to_json(const TwistFamilySpec& s) { return Json{{"base", to_json(s.base)}, {"site", s.site}}; }

Json to_json(const MutantPairSpec& s) {
  return Json{{"outer", to_json(s.outer)}, {"inner", to_json(s.inner)}, {"k", s.k}, {"l", s.l}};
}

Json to_json(const BigradedRanks& r) {
  Json arr = Json::array();
  for (auto& [k, v] : r.ranks) arr.push_back(Json::array({k.first, k.second, v}));
  Json j{{"l", r.l}, {"n", r.n}, {"ranks", arr}};
  if (r.completed_by_symmetry) j["completed_by_symmetry"] = true;
  return j;
}

BigradedRanks ranks_from_json(const Json& j) {
  BigradedRanks r;
  r.l = j.at("l").get<int>();
  r.n = j.at("n").get<int>();
  for (auto& e : j.at("ranks")) r.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::int64_t>());
  r.completed_by_symmetry = j.value("completed_by_symmetry", false);
  return r;
}

std::string ranks_csv(const BigradedRanks& r) {
  std::ostringstream os;
  os << "M,A,rank\n";
  for (auto& [k, v] : r.ranks) {
    int a2 = k.second;
    os << k.first << ',';
    if (a2 % 2 == 0)
      os << a2 / 2;
    else
      os << (a2 < 0 ? "-" : "") << std::abs(a2) / 2 << ".5";
    os << ',' << v << '\n';
  }
  return os.str();
}

Json to_json(const RecursionReport& r) {
  Json entries = Json::array();
  for (auto& e : r.entries)
    entries.push_back(Json{{"n", e.n}, {"pass", e.pass}, {"lhs", to_json(e.lhs)}, {"rhs", to_json(e.rhs)}});
  return Json{{"all_pass", r.all_pass},
              {"delta_L0", to_json(r.delta_L0)},
              {"delta_Lm1", to_json(r.delta_Lm1)},
              {"entries", entries}};
}

Json to_json(const StabilizationFit& f) {
  return Json{{"k", f.k},
              {"d", f.d},
              {"f", to_json(f.f)},
              {"first_stable_n", f.first_stable_n},
              {"sampled_n", f.sampled_n},
              {"knot_family", f.knot_family},
              {"breadth", f.breadth},
              {"degree_bound", f.degree_bound}};
}

Json to_json(const SkeinReport& r) {
  return Json{{"pass", r.pass}, {"plus", to_json(r.plus)}, {"minus", to_json(r.minus)}, {"zero", to_json(r.zero)}};
}

}  // namespace kfh
