// kfh: command-line front end.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "kfh/alexander.hpp"
#include "kfh/catalog.hpp"
#include "kfh/experiments.hpp"
#include "kfh/json_io.hpp"
#include "kfh/morse.hpp"

using namespace kfh;
namespace fs = std::filesystem;

namespace {

constexpr const char* kEngineVersion = "kfh-engine-1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::string csv;
  std::string cache_dir;
  int threads = 1;
  std::int64_t max_states = 50000000;
  std::string window;
  unsigned seed = 1;
};

Interval parse_range(const std::string& s) {
  auto p = s.find("..");
  if (p == std::string::npos) throw UsageError("range must look like LO..HI: " + s);
  try {
    Interval r{std::stoi(s.substr(0, p)), std::stoi(s.substr(p + 2))};
    if (r.lo > r.hi) throw UsageError("empty range " + s);
    return r;
  } catch (const std::logic_error&) {
    throw UsageError("bad range " + s);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_arg(const std::string& s) {
  std::string text = !s.empty() && s[0] == '@' ? read_file(s.substr(1)) : s;
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("bad JSON: ") + e.what());
  }
}

// braid:S:g1,g2,...  or  braid:{json}
BraidWord parse_braid(const std::string& body) {
  if (!body.empty() && (body[0] == '{' || body[0] == '@')) return braid_from_json(parse_json_arg(body));
  auto c = body.find(':');
  if (c == std::string::npos) throw UsageError("braid must look like S:g1,g2,...");
  BraidWord b;
  try {
    b.strands = std::stoi(body.substr(0, c));
    std::stringstream ss(body.substr(c + 1));
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) b.word.push_back(std::stoi(tok));
  } catch (const std::logic_error&) {
    throw UsageError("bad braid " + body);
  }
  b.validate();
  return b;
}

std::pair<std::string, std::string> split_kind(const std::string& s) {
  auto c = s.find(':');
  if (c == std::string::npos) throw UsageError("expected KIND:VALUE, got " + s);
  return {s.substr(0, c), s.substr(c + 1)};
}

LinkInput parse_link(const std::string& s) {
  auto [kind, body] = split_kind(s);
  if (kind == "braid") return parse_braid(body);
  if (kind == "grid") return grid_from_json(parse_json_arg(body));
  if (kind == "catalog") {
    CatalogEntry e = catalog(body);
    if (auto* b = std::get_if<BraidWord>(&e.value)) return *b;
    if (auto* g = std::get_if<GridDiagram>(&e.value)) return *g;
    // a mutant pair stands for its first member
    if (auto* p = std::get_if<MutantPairSpec>(&e.value)) return build_two_tangle(p->outer, p->inner, p->k, p->l).grid;
    throw UsageError(body + " is a family, not a link");
  }
  throw UsageError("unknown link kind " + kind);
}

TwistFamilySpec parse_family(const std::string& s, int site) {
  auto [kind, body] = split_kind(s);
  if (kind == "catalog") {
    CatalogEntry e = catalog(body);
    if (auto* t = std::get_if<TwistFamilySpec>(&e.value)) return *t;
    if (auto* b = std::get_if<BraidWord>(&e.value)) return TwistFamilySpec{*b, std::max(site, 0)};
    throw UsageError(body + " is not a twist family");
  }
  if (kind == "braid") return TwistFamilySpec{parse_braid(body), std::max(site, 0)};
  throw UsageError("unknown family kind " + kind);
}

MutantPairSpec parse_pair(const std::string& s) {
  auto [kind, body] = split_kind(s);
  if (kind == "catalog") {
    CatalogEntry e = catalog(body);
    if (auto* p = std::get_if<MutantPairSpec>(&e.value)) return *p;
    throw UsageError(body + " is not a mutant pair");
  }
  if (kind == "pair") {
    Json j = parse_json_arg(body);
    return MutantPairSpec{braid_from_json(j.at("outer")), braid_from_json(j.at("inner")), j.value("k", 0),
                          j.value("l", 0)};
  }
  throw UsageError("unknown pair kind " + kind);
}

GridDiagram to_grid(const LinkInput& l) {
  if (auto* g = std::get_if<GridDiagram>(&l)) return *g;
  return braid_to_grid(std::get<BraidWord>(l));
}

Json link_json(const LinkInput& l) {
  if (auto* g = std::get_if<GridDiagram>(&l)) return Json{{"grid", to_json(*g)}};
  return Json{{"braid", to_json(std::get<BraidWord>(l))}};
}

// 128-bit FNV-1a over the canonical key, as hex
std::string content_hash(const std::string& s) {
  std::uint64_t h1 = 0xcbf29ce484222325ULL, h2 = 0x84222325cbf29ce4ULL;
  for (unsigned char c : s) {
    h1 = (h1 ^ c) * 0x100000001b3ULL;
    h2 = (h2 ^ c) * 0x100000001b3ULL;
    h2 ^= h2 >> 29;
  }
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << h1 << std::setw(16) << h2;
  return os.str();
}

class Cache {
 public:
  explicit Cache(std::string dir) : dir_(std::move(dir)) {}
  std::optional<std::string> get(const std::string& key) const {
    if (dir_.empty()) return std::nullopt;
    fs::path p = fs::path(dir_) / (content_hash(key) + ".json");
    std::ifstream in(p);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    Json j = Json::parse(ss.str(), nullptr, false);
    if (j.is_discarded() || j.value("key", "") != key) return std::nullopt;
    return j.at("value").get<std::string>();
  }
  void put(const std::string& key, const std::string& value) const {
    if (dir_.empty()) return;
    fs::create_directories(dir_);
    std::string name = content_hash(key);
    fs::path tmp = fs::path(dir_) / (name + ".tmp." + std::to_string(::getpid()));
    fs::path dst = fs::path(dir_) / (name + ".json");
    {
      std::ofstream out(tmp);
      out << canonical(Json{{"key", key}, {"value", value}, {"created", std::time(nullptr)}});
    }
    fs::rename(tmp, dst);
  }

 private:
  std::string dir_;
};

struct Context {
  Globals g;
  HfkOptions hfk_options() const {
    HfkOptions o;
    o.max_states = g.max_states;
    o.threads = g.threads;
    return o;
  }
  std::optional<Interval> window() const {
    if (g.window.empty()) return std::nullopt;
    return parse_range(g.window);
  }
};

// runs f unless the cache already holds the answer for (op, input, options)
Json cached(const Context& ctx, const std::string& op, const Json& input, const Json& options,
            const std::function<Json()>& f) {
  Cache cache(ctx.g.cache_dir);
  std::string key = canonical(Json{{"op", op}, {"input", input}, {"options", options}, {"engine", kEngineVersion}});
  if (auto v = cache.get(key)) return Json::parse(*v);
  Json r = f();
  cache.put(key, canonical(r));
  return r;
}

void write_csv(const Context& ctx, const std::string& text) {
  if (ctx.g.csv.empty()) return;
  std::ofstream out(ctx.g.csv);
  if (!out) throw UsageError("cannot write " + ctx.g.csv);
  out << text;
}

std::string ranks_table(const Json& r) {
  std::ostringstream os;
  os << std::setw(6) << "M" << std::setw(8) << "A" << std::setw(8) << "rank" << '\n';
  for (auto& e : r.at("ranks")) {
    int a2 = e.at(1).get<int>();
    std::string a = a2 % 2 == 0 ? std::to_string(a2 / 2) : (a2 < 0 ? "-" : "") + std::to_string(std::abs(a2) / 2) + ".5";
    os << std::setw(6) << e.at(0).get<int>() << std::setw(8) << a << std::setw(8) << e.at(2).get<std::int64_t>() << '\n';
  }
  return os.str();
}

int emit(const Context& ctx, const Json& result, const std::string& human, bool pass) {
  if (ctx.g.json)
    std::cout << canonical(result) << '\n';
  else
    std::cout << human;
  return pass ? 0 : 1;
}

std::string poly_text(const Json& j) { return poly_from_json(j).str(); }

// ---- subcommands ----

int cmd_alexander(const Context& ctx, const std::string& link_s) {
  LinkInput link = parse_link(link_s);
  Json r = cached(ctx, "alexander", link_json(link), Json::object(), [&] {
    return Json{{"alexander", to_json(alexander(link))}, {"components", component_count(link)}};
  });
  write_csv(ctx, "halves,coefficient\n" + [&] {
    std::string s;
    for (auto& t : r.at("alexander").at("halves")) s += t.at(0).dump() + "," + t.at(1).dump() + "\n";
    return s;
  }());
  return emit(ctx, r, poly_text(r.at("alexander")) + "\n", true);
}

int cmd_hfk(const Context& ctx, const std::string& link_s) {
  LinkInput link = parse_link(link_s);
  GridDiagram g = to_grid(link);
  auto win = ctx.window();
  Json opts = Json::object();
  if (win) opts["window"] = {win->lo, win->hi};
  Json r = cached(ctx, "hfk", to_json(g), opts, [&] {
    HfkOptions o = ctx.hfk_options();
    if (win) o.a2_window = Window{2 * win->lo, 2 * win->hi};
    HfkResult res = hfk_hat(g, o);
    BigradedRanks h = res.hfk;
    if (win) {
      BigradedRanks f;
      f.l = h.l;
      f.n = h.n;
      f.completed_by_symmetry = h.completed_by_symmetry;
      for (auto& [k, v] : h.ranks)
        if (k.second >= 2 * win->lo && k.second <= 2 * win->hi) f.add(k.first, k.second, v);
      h = f;
    }
    Json j = to_json(h);
    if (!win) j["euler_matches"] = [&] {
      HalfLaurent chi = euler_characteristic(h);
      HalfLaurent expect = power(HalfLaurent::z(), unsigned(h.l - 1)) * alexander_grid(g);
      return equal_up_to_sign(chi, expect);
    }();
    return j;
  });
  write_csv(ctx, ranks_csv(ranks_from_json(r)));
  return emit(ctx, r, ranks_table(r), r.value("euler_matches", true));
}

int cmd_tau(const Context& ctx, const std::string& link_s) {
  GridDiagram g = to_grid(parse_link(link_s));
  Json r = cached(ctx, "tau", to_json(g), Json::object(), [&] { return Json{{"tau", tau(g, ctx.hfk_options())}}; });
  write_csv(ctx, "tau\n" + r.at("tau").dump() + "\n");
  return emit(ctx, r, r.at("tau").dump() + "\n", true);
}

ExperimentOptions exp_options(const Context& ctx) {
  ExperimentOptions o;
  o.hfk = ctx.hfk_options();
  return o;
}

int cmd_recursion(const Context& ctx, const std::string& fam, int site, const std::string& range, int random_families) {
  Interval iv = parse_range(range);
  std::vector<TwistFamilySpec> specs;
  if (!fam.empty()) specs.push_back(parse_family(fam, site));
  std::mt19937 rng(ctx.g.seed);
  for (int i = 0; i < random_families; ++i) {
    int s = 2 + int(rng() % 3);
    BraidWord b{s, {}};
    int len = 2 + int(rng() % 6);
    for (int j = 0; j < len; ++j) {
      int gen = 1 + int(rng() % unsigned(s - 1));
      b.word.push_back(rng() % 2 ? gen : -gen);
    }
    int pos = int(rng() % unsigned(len));
    b.word[size_t(pos)] = std::abs(b.word[size_t(pos)]);
    specs.push_back({b, pos});
  }
  if (specs.empty()) throw UsageError("verify recursion needs --family or --random-families");
  Json out = Json::array();
  bool all = true;
  std::ostringstream human;
  for (auto& sp : specs) {
    Json r = cached(ctx, "recursion", to_json(sp), Json{{"range", {iv.lo, iv.hi}}},
                    [&] { return to_json(verify_twist_recursion(sp, iv)); });
    all = all && r.at("all_pass").get<bool>();
    human << sp.base.str() << " @" << sp.site << ": " << (r.at("all_pass").get<bool>() ? "pass" : "FAIL") << '\n';
    for (auto& e : r.at("entries"))
      human << "  n=" << std::setw(3) << e.at("n").get<int>() << "  " << (e.at("pass").get<bool>() ? "ok  " : "FAIL")
            << "  " << poly_text(e.at("lhs")) << '\n';
    out.push_back(Json{{"family", to_json(sp)}, {"report", r}});
  }
  Json result{{"all_pass", all}, {"families", out}};
  std::string csv = "family,n,pass\n";
  for (auto& f : out)
    for (auto& e : f.at("report").at("entries"))
      csv += f.at("family").at("base").dump() + "," + e.at("n").dump() + "," + e.at("pass").dump() + "\n";
  write_csv(ctx, csv);
  return emit(ctx, result, human.str(), all);
}

int cmd_fit(const Context& ctx, const std::string& fam, int site, const std::string& range) {
  TwistFamilySpec sp = parse_family(fam, site);
  Interval iv = parse_range(range);
  Json r = cached(ctx, "fit", to_json(sp), Json{{"range", {iv.lo, iv.hi}}}, [&] {
    try {
      Json j = to_json(fit_stabilization(sp, iv));
      j["pass"] = true;
      return j;
    } catch (const FitError& e) {
      return Json{{"pass", false}, {"error", e.what()}};
    }
  });
  write_csv(ctx, "k,d,first_stable_n,pass\n" + (r.at("pass").get<bool>()
                                                    ? r.at("k").dump() + "," + r.at("d").dump() + "," +
                                                          r.at("first_stable_n").dump() + ",true\n"
                                                    : std::string(",,,false\n")));
  std::ostringstream human;
  if (r.at("pass").get<bool>())
    human << "k = " << r.at("k") << "\nd = " << r.at("d") << "\nf = " << poly_text(r.at("f"))
          << "\nfirst stable n = " << r.at("first_stable_n") << "\ndegree bound: "
          << (r.at("degree_bound").get<bool>() ? "holds" : "fails") << '\n';
  else
    human << "fit failed: " << r.at("error").get<std::string>() << '\n';
  return emit(ctx, r, human.str(), r.at("pass").get<bool>() && r.value("degree_bound", true));
}

int cmd_stabilization(const Context& ctx, const std::string& fam, int site, const std::string& range) {
  TwistFamilySpec sp = parse_family(fam, site);
  Interval iv = parse_range(range);
  ExperimentOptions eo = exp_options(ctx);
  Json r = cached(ctx, "stabilization", to_json(sp), Json{{"range", {iv.lo, iv.hi}}, {"max_states", eo.hfk.max_states}},
                  [&] { return to_json(verify_stabilization(sp, iv, eo)); });
  std::ostringstream human;
  std::string csv = "n,check,pass\n";
  human << std::setw(5) << "n" << std::setw(8) << "part1" << std::setw(4) << "k" << std::setw(8) << "part2"
        << std::setw(8) << "part3" << '\n';
  auto cell = [](const Json& e, const char* key) {
    return e.contains(key) ? (e.at(key).get<bool>() ? "pass" : "FAIL") : "-";
  };
  for (auto& e : r.at("per_n")) {
    human << std::setw(5) << e.at("n").get<int>() << std::setw(8) << cell(e, "part1_pass") << std::setw(4)
          << (e.contains("part1_k") ? e.at("part1_k").dump() : "-") << std::setw(8) << cell(e, "part2_pass")
          << std::setw(8) << cell(e, "part3_pass") << '\n';
    for (const char* k : {"part1_pass", "part2_pass", "part3_pass"})
      if (e.contains(k)) csv += e.at("n").dump() + "," + std::string(k, 5) + "," + e.at(k).dump() + "\n";
  }
  if (r.at("stable").get<bool>())
    human << "first stable n = " << r.at("first_stable_n") << ", k_observed = " << r.at("k_observed") << '\n';
  else
    human << "not yet stable on this range\n";
  for (auto& [n, why] : r.at("unavailable").items()) human << "n = " << n << " unavailable: " << why.get<std::string>() << '\n';
  write_csv(ctx, csv);
  return emit(ctx, r, human.str(), r.at("all_pass").get<bool>());
}

int cmd_skein(const Context& ctx, const std::string& fam, int site, const std::string& range) {
  TwistFamilySpec sp = parse_family(fam, site);
  Interval iv = parse_range(range);
  ExperimentOptions eo = exp_options(ctx);
  Json entries = Json::array();
  bool all = true;
  std::ostringstream human;
  std::string csv = "n,check,pass\n";
  for (int n = iv.lo; n <= iv.hi; ++n) {
    Json r = cached(ctx, "skein", to_json(sp), Json{{"n", n}, {"max_states", eo.hfk.max_states}}, [&] {
      Json j = to_json(verify_skein_split(sp, n, eo));
      j["alexander_skein"] =
          skein_verify(insert_twists(sp, n + 1), insert_twists(sp, n - 1), insert_twists(sp, n)).pass;
      return j;
    });
    bool ok = r.at("inequality").get<bool>() && r.at("alexander_skein").get<bool>() && !r.contains("error");
    all = all && ok;
    human << "n=" << std::setw(3) << n << "  inequality " << (r.at("inequality").get<bool>() ? "pass" : "FAIL")
          << "  equality " << (r.at("equality").get<bool>() ? "holds" : "fails") << "  alexander "
          << (r.at("alexander_skein").get<bool>() ? "pass" : "FAIL") << '\n';
    csv += std::to_string(n) + ",inequality," + r.at("inequality").dump() + "\n";
    csv += std::to_string(n) + ",equality," + r.at("equality").dump() + "\n";
    entries.push_back(r);
  }
  write_csv(ctx, csv);
  return emit(ctx, Json{{"all_pass", all}, {"entries", entries}}, human.str(), all);
}

std::set<MutantCheck> parse_checks(const std::string& s) {
  if (s.empty() || s == "all") return all_mutant_checks();
  std::set<MutantCheck> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    bool found = false;
    for (auto c : all_mutant_checks())
      if (tok == mutant_check_name(c)) {
        out.insert(c);
        found = true;
      }
    if (!found) throw UsageError("unknown check " + tok);
  }
  return out;
}

Mutation parse_mutation(const std::string& s) {
  for (Mutation m : {Mutation::RotateZ, Mutation::FlipH, Mutation::ReverseV})
    if (s == mutation_name(m)) return m;
  throw UsageError("unknown mutation " + s);
}

int cmd_mutants(const Context& ctx, const std::string& pair, const std::string& range, const std::string& checks_s,
                const std::string& mut_s) {
  MutantPairSpec sp = parse_pair(pair);
  Interval iv = parse_range(range);
  auto checks = parse_checks(checks_s);
  Mutation mut = mut_s.empty() ? kDefaultMutation : parse_mutation(mut_s);
  ExperimentOptions eo = exp_options(ctx);
  Json names = Json::array();
  for (auto c : checks) names.push_back(mutant_check_name(c));
  Json r = cached(ctx, "mutants", to_json(sp),
                  Json{{"range", {iv.lo, iv.hi}}, {"checks", names}, {"mutation", mutation_name(mut)},
                       {"max_states", eo.hfk.max_states}},
                  [&] { return to_json(compare_mutants(sp, iv, checks, eo, mut)); });
  std::ostringstream human;
  std::string csv = "n,check,pass\n";
  for (auto& e : r.at("entries")) {
    human << "n=" << std::setw(3) << e.at("n").get<int>() << "  grids " << e.at("grid_sizes").at(0) << "/"
          << e.at("grid_sizes").at(1);
    for (auto& [k, v] : e.at("equal").items()) {
      human << "  " << k << (v.get<bool>() ? " =" : " !=");
      csv += e.at("n").dump() + "," + k + "," + v.dump() + "\n";
    }
    human << '\n';
  }
  human << "HFK equal for |n| >= " << r.at("hfk_threshold") << '\n';
  write_csv(ctx, csv);
  bool ok = r.at("alexander_all_equal").get<bool>() && r.at("flype_all_equal").get<bool>() &&
            r.at("unavailable").empty();
  return emit(ctx, r, human.str(), ok);
}

int cmd_catalog_list(const Context& ctx) {
  Json arr = Json::array();
  std::ostringstream human;
  for (auto& n : catalog_names()) {
    arr.push_back(n);
    human << n << '\n';
  }
  write_csv(ctx, "name\n" + human.str());
  return emit(ctx, Json{{"names", arr}}, human.str(), true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot Floer homology and Alexander polynomial toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  auto& g = ctx.g;
  app.add_flag("--json", g.json, "print canonical JSON");
  app.add_option("--csv", g.csv, "also write a CSV file");
  app.add_option("--cache-dir", g.cache_dir, "directory for cached results");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-states", g.max_states, "refuse grids with more states than this")->check(CLI::PositiveNumber);
  app.add_option("--alexander-window", g.window, "only Alexander gradings LO..HI");
  app.add_option("--seed", g.seed, "seed for randomized commands");

  std::string link, family, range, pair, checks, mutation;
  int site = 0, random_families = 0;

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial");
  alex->add_option("--link", link, "braid:S:g,g,..  grid:@file.json  catalog:NAME")->required();
  auto* hfk = app.add_subcommand("hfk", "HFK-hat ranks");
  hfk->add_option("--link", link)->required();
  auto* tau_c = app.add_subcommand("tau", "tau invariant of a knot");
  tau_c->add_option("--link", link)->required();

  auto* verify = app.add_subcommand("verify", "family checks");
  verify->require_subcommand(1);
  auto* rec = verify->add_subcommand("recursion", "twist recursion of Alexander polynomials");
  rec->add_option("--family", family);
  rec->add_option("--site", site);
  rec->add_option("--range", range)->required();
  rec->add_option("--random-families", random_families);
  auto* stab = verify->add_subcommand("stabilization", "HFK stabilization under twisting");
  stab->add_option("--family", family)->required();
  stab->add_option("--site", site);
  stab->add_option("--range", range)->required();
  auto* skein = verify->add_subcommand("skein", "split skein sequence");
  skein->add_option("--family", family)->required();
  skein->add_option("--site", site);
  skein->add_option("--range", range)->required();

  auto* fit = app.add_subcommand("fit", "fit the stabilized Alexander polynomial");
  fit->add_option("--family", family)->required();
  fit->add_option("--site", site);
  fit->add_option("--range", range)->required();

  auto* mut = app.add_subcommand("mutants", "compare a link with its mutant");
  mut->add_option("--pair", pair, "catalog:NAME or pair:{json}")->required();
  mut->add_option("--range", range)->required();
  mut->add_option("--checks", checks, "comma list of alexander,hfk,genus,tau,delta,flype");
  mut->add_option("--mutation", mutation, "flip-h, rotate-z or reverse-v");

  auto* cat = app.add_subcommand("catalog", "catalog of named links");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "list catalog names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*alex) return cmd_alexander(ctx, link);
    if (*hfk) return cmd_hfk(ctx, link);
    if (*tau_c) return cmd_tau(ctx, link);
    if (*rec) return cmd_recursion(ctx, family, site, range, random_families);
    if (*stab) return cmd_stabilization(ctx, family, site, range);
    if (*skein) return cmd_skein(ctx, family, site, range);
    if (*fit) return cmd_fit(ctx, family, site, range);
    if (*mut) return cmd_mutants(ctx, pair, range, checks, mutation);
    if (*list) return cmd_catalog_list(ctx);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const CatalogError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const LinkError& e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
