// Acceptance gate: one PASS/FAIL line per criterion on stdout, details on
// stderr. The exit status is nonzero when a check fails that is not in the
// pinned list of known discrepancies below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cutpoly/adm.hpp"
#include "cutpoly/cutmodel.hpp"
#include "cutpoly/dualdesc.hpp"
#include "cutpoly/graphs.hpp"
#include "tables.hpp"

using namespace cutpoly;

namespace {

// Counts are compared exactly; there is no floating point tolerance anywhere.
constexpr double kTimeBudgetSeconds = 3600;

// Checks known to disagree with the published numbers. Each one has a written
// analysis; the line still prints FAIL.
const std::set<std::string> kKnownDiscrepancies = {
    "METP_6 vertices",        // 544 found, every vertex certified
    "K7-K2 facets",           // 32680(17), three methods agree
    "Dodecahedron total",     // chordless 11- and 12-cycles omitted in the table
    "Moebius14 total",        // has a K5 minor, generation does not apply
    "Heawood total",          // has a K5 minor, generation does not apply
    "K8-K3 table A(G)",       // 5!3! = 720 against a printed 360
};

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
  }
};

std::string fmt(const BigInt& count, std::size_t orbits) { return count.get_str() + "(" + std::to_string(orbits) + ")"; }

BigInt binom(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt pow2(unsigned k) {
  BigInt r = 1;
  r <<= k;
  return r;
}

// |Aut| of the complete multipartite graph with the given part sizes:
// product over distinct sizes a with multiplicity t of t! (a!)^t.
BigInt multipartite_aut(std::vector<int> parts) {
  std::map<int, unsigned> mult;
  for (int a : parts) ++mult[a];
  BigInt r = 1;
  for (const auto& [a, t] : mult) {
    r *= factorial(t);
    for (unsigned i = 0; i < t; ++i) r *= factorial(static_cast<unsigned>(a));
  }
  return r;
}

AdmResult run_adm(const std::string& spec, Mode mode, unsigned workers = 1,
                  Termination term = Termination::kExhaustive, bool neighbors = false) {
  AdmConfig cfg;
  cfg.workers = workers;
  cfg.termination = term;
  cfg.record_neighbors = neighbors;
  return adjacency_decomposition(CutPolytope(parse_graph_spec(spec), mode), cfg);
}

std::vector<AffineInequality> dd_set(const CutPolytope& c) {
  std::vector<AffineInequality> out;
  for (const auto& f : dual_description(VPolytope::from_cut_polytope(c))) {
    auto q = c.to_inequality(f.functional);
    q.normalize();
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_records(const std::vector<OrbitRecord>& a, const std::vector<OrbitRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].canonical_key != b[i].canonical_key || a[i].orbit_size != b[i].orbit_size ||
        a[i].incidence_count != b[i].incidence_count || a[i].representative != b[i].representative)
      return false;
  }
  return true;
}

std::string report_text(const CutPolytope& c, const AdmResult& r) {
  std::ostringstream ss;
  write_orbit_report(ss, c, r);
  return ss.str();
}

void count_check(Criterion& cr, const std::string& name, const BigInt& got, std::size_t got_orbits,
                 const BigInt& want, std::optional<std::size_t> want_orbits) {
  const bool ok = got == want && (!want_orbits || got_orbits == *want_orbits);
  cr.add(name, ok, fmt(got, got_orbits) + " want " + want.get_str() +
                       (want_orbits ? "(" + std::to_string(*want_orbits) + ")" : std::string()));
}

// Shared results reused by several criteria.
struct Cache {
  std::map<std::string, AdmResult> adm;
  const AdmResult& get(const std::string& spec, Mode mode = Mode::kPolytope) {
    const std::string key = spec + (mode == Mode::kCone ? "/cone" : "");
    auto it = adm.find(key);
    if (it == adm.end()) it = adm.emplace(key, run_adm(spec, mode, 1, Termination::kExhaustive, true)).first;
    return it->second;
  }
};

void criterion1(Criterion& cr, Cache& cache) {
  const std::vector<std::pair<int, std::pair<long, std::size_t>>> want = {
      {3, {4, 1}}, {4, {16, 1}}, {5, {56, 2}}, {6, {368, 3}}};
  for (const auto& [n, w] : want) {
    const std::string spec = "K" + std::to_string(n);
    const auto& r = cache.get(spec);
    count_check(cr, "CUTP_" + std::to_string(n) + " adm", r.total_facets, r.records.size(), w.first, w.second);
    const CutPolytope c(parse_graph_spec(spec), Mode::kPolytope);
    const auto d = group_into_orbits(c, restricted_group(c), dd_set(c));
    count_check(cr, "CUTP_" + std::to_string(n) + " dd", d.total_facets, d.records.size(), w.first, w.second);
  }
}

void criterion2(Criterion& cr, Cache& cache) {
  const auto& r = cache.get("K7");
  count_check(cr, "CUTP_7 adm", r.total_facets, r.records.size(), 116764, 11);
  const BigInt want_order = pow2(6) * factorial(7);
  cr.add("CUTP_7 group order", r.group_order == want_order, r.group_order.get_str());
}

void criterion3(Criterion& cr, Cache& cache) {
  const std::vector<std::pair<int, std::pair<long, std::size_t>>> want = {
      {3, {3, 1}}, {4, {12, 1}}, {5, {40, 2}}, {6, {210, 4}}, {7, {38780, 36}}};
  for (const auto& [n, w] : want) {
    const auto& r = cache.get("K" + std::to_string(n), Mode::kCone);
    count_check(cr, "CUT_" + std::to_string(n), r.total_facets, r.records.size(), w.first, w.second);
  }
}

void criterion4(Criterion& cr) {
  const std::map<int, std::pair<long, long>> printed = {{5, {30, 40}}, {6, {60, 80}}, {7, {105, 140}}, {8, {168, 224}}};
  for (const auto& [n, w] : printed) {
    const auto met = metric_generators(n, Mode::kCone).size();
    const auto metp = metric_generators(n, Mode::kPolytope).size();
    const BigInt c3 = binom(static_cast<unsigned>(n), 3);
    cr.add("MET_" + std::to_string(n), BigInt(static_cast<unsigned long>(met)) == 3 * c3 && static_cast<long>(met) == w.first,
           std::to_string(met));
    cr.add("METP_" + std::to_string(n),
           BigInt(static_cast<unsigned long>(metp)) == 4 * c3 && static_cast<long>(metp) == w.second,
           std::to_string(metp));
  }
}

void criterion5(Criterion& cr) {
  auto verts = [](int n, Mode mode) {
    const Graph g = parse_graph_spec("K" + std::to_string(n));
    return enumerate_vertices(metric_generators(n, mode), g.num_edges(), mode).size();
  };
  const auto v5 = verts(5, Mode::kPolytope);
  cr.add("METP_5 vertices", v5 == 32, std::to_string(v5));
  const auto v6 = verts(6, Mode::kPolytope);
  cr.add("METP_6 vertices", v6 == 554, std::to_string(v6) + " want 554");
  const auto r6 = verts(6, Mode::kCone);
  cr.add("MET_6 rays", r6 == 296, std::to_string(r6));
}

void criterion6(Criterion& cr, Cache& cache) {
  struct Row {
    const char* name;
    const char* spec;
    long facets;
    std::size_t orbits;
  };
  const std::vector<Row> rows = {{"K1,3,3 facets", "K1,3,3", 684, 3},
                                 {"K4,4 facets", "K4,4", 27968, 4},
                                 {"Petersen facets", "Petersen", 3614, 4},
                                 {"Cube facets", "Cube", 200, 3},
                                 {"K7-K2 facets", "K7-K2", 31400, 17}};
  for (const auto& row : rows) {
    const auto& r = cache.get(row.spec);
    count_check(cr, row.name, r.total_facets, r.records.size(), row.facets, row.orbits);
  }
}

void criterion7(Criterion& cr) {
  auto total = [](const std::string& spec) { return k5free_count(parse_graph_spec(spec)); };
  for (int m = 3; m <= 6; ++m)
    cr.add("K2," + std::to_string(m) + " total", total("K2," + std::to_string(m)) == 4 * m * m);
  for (int m = 3; m <= 5; ++m) {
    const BigInt want = 6 * m + 24 * binom(static_cast<unsigned>(m), 2);
    cr.add("K3," + std::to_string(m) + " total", total("K3," + std::to_string(m)) == want);
  }
  for (int m = 2; m <= 6; ++m) {
    const std::string ms = std::to_string(m);
    cr.add("Km+2-Km m=" + ms + " total", total("Km+2-Km:m=" + ms) == 4 * m);
    cr.add("Km+3-Km m=" + ms + " total", total("Km+3-Km:m=" + ms) == 4 + 12 * m);
  }
  const std::vector<std::pair<std::string, long>> fixed = {
      {"Cube", 200},   {"TruncatedTetrahedron", 540}, {"Prism7", 7394},
      {"APrism6", 2032}, {"Icosahedron", 1552},        {"Dodecahedron", 23804}};
  for (const auto& [spec, want] : fixed) {
    const auto got = total(spec);
    cr.add(spec + " total", got == want, got.get_str() + " want " + std::to_string(want));
  }
  for (const auto& [spec, want] : std::vector<std::pair<std::string, std::string>>{{"Moebius14", "369506"},
                                                                                  {"Heawood", "5361194"}}) {
    const Graph g = parse_graph_spec(spec);
    if (has_k5_minor(g)) {
      cr.add(spec + " total", false,
             "K5 minor present; override total " + k5free_count(g, true).get_str() + " want " + want);
    } else {
      const auto got = k5free_count(g);
      cr.add(spec + " total", got == BigInt(want), got.get_str() + " want " + want);
    }
  }
}

void criterion8(Criterion& cr, Cache& cache) {
  for (const std::string spec : {"Cube", "K2,3"}) {
    const CutPolytope c(parse_graph_spec(spec), Mode::kPolytope);
    const auto a = expand_orbits(c, restricted_group(c), cache.get(spec).records);
    const auto k = k5free_facets(c.graph());
    cr.add(spec + " k5free = adm", a == k, std::to_string(k.size()) + " vs " + std::to_string(a.size()));
  }
  for (const std::string spec : {"K5", "K6", "K1,3,3"}) {
    const CutPolytope c(parse_graph_spec(spec), Mode::kPolytope);
    const auto a = expand_orbits(c, restricted_group(c), cache.get(spec).records);
    const auto d = dd_set(c);
    cr.add(spec + " dd = adm", a == d, std::to_string(d.size()) + " vs " + std::to_string(a.size()));
  }
}

void criterion9(Criterion& cr, Cache& cache) {
  for (const std::string spec : {"K5", "K6", "K7"}) {
    const CutPolytope c(parse_graph_spec(spec), Mode::kPolytope);
    const auto& r = cache.get(spec);
    const auto t = check_triangle_adjacency(c, r.records);
    std::size_t missing = 0;
    for (const auto& w : t.witnesses) missing += !w.triangle_key;
    cr.add("CUTP_" + spec.substr(1) + " triangle adjacency", t.holds && t.witnesses.size() == r.records.size(),
           std::to_string(r.records.size()) + " orbits, " + std::to_string(missing) + " without witness");
  }
}

void criterion10(Criterion& cr) {
  const std::vector<std::string> graphs = {"K4",     "K1,4",   "K2,3",        "K2,5",   "K3,3",
                                           "K3,4",   "Cube",   "Km+2-Km:m=4", "Km+3-Km:m=3",
                                           "Prism7", "APrism6", "TruncatedTetrahedron", "Icosahedron",
                                           "Cuboctahedron", "Dodecahedron", "C6", "P5"};
  for (const auto& spec : graphs) {
    const Graph g = parse_graph_spec(spec);
    const auto rep = facet_incidence_formulas_check(g);
    cr.add(spec + " formulas", rep.ok() && rep.checked > 0,
           std::to_string(rep.checked) + " checked, " + std::to_string(rep.mismatches.size()) + " mismatches");
  }
  // Brute force over every cut on the small ones.
  for (const std::string spec : {"K2,3", "K3,3", "Cube", "Prism7", "Km+3-Km:m=3"}) {
    const Graph g = parse_graph_spec(spec);
    const CutPolytope c(g, Mode::kPolytope);
    const int nv = g.num_vertices();
    bool ok = true;
    for (const auto& q : k5free_facets(g)) {
      const auto s = static_cast<unsigned>(std::count_if(q.a.begin(), q.a.end(), [](auto v) { return v != 0; }));
      const BigInt want = s == 1 ? pow2(static_cast<unsigned>(nv - 2)) : s * pow2(static_cast<unsigned>(nv) - s);
      ok = ok && BigInt(static_cast<unsigned long>(c.incidence(q).size())) == want;
    }
    cr.add(spec + " brute force", ok);
  }
}

void criterion11(Criterion& cr, Cache& cache) {
  const CovarianceMap cov(2, 2);
  const CutPolytope c(cov.graph(), Mode::kPolytope);
  const auto& r = cache.get("K1,2,2");
  count_check(cr, "CUTP(K1,2,2) facets", r.total_facets, r.records.size(), 24, 2);

  std::set<std::vector<Rational>> images;
  bool points_ok = c.num_points() == 16;
  for (std::size_t i = 0; i < c.num_points(); ++i) {
    const auto corr = cov.point_to_corr(c.points().row(i));
    points_ok = points_ok && std::all_of(corr.begin(), corr.end(), [](const Rational& x) { return x == 0 || x == 1; });
    images.insert(std::vector<Rational>(corr.begin(), corr.end()));
    const auto back = cov.point_to_cut(corr);
    for (std::size_t k = 0; k < back.size(); ++k) points_ok = points_ok && back[k] == c.points()(i, k);
  }
  cr.add("vertex bijection", points_ok && images.size() == 16, std::to_string(images.size()) + " distinct images");

  const auto facets = expand_orbits(c, restricted_group(c), r.records);
  bool facets_ok = facets.size() == 24;
  for (const auto& q : facets) {
    const auto corr_q = cov.ineq_to_corr(q);
    facets_ok = facets_ok && cov.ineq_to_cut(corr_q) == q;
    for (std::size_t i = 0; i < c.num_points(); ++i) {
      const auto x = cov.point_to_corr(c.points().row(i));
      Rational v = corr_q.a0;
      for (std::size_t k = 0; k < x.size(); ++k) v += x[k] * static_cast<long>(corr_q.a[k]);
      const auto orig = q.evaluate(c.points().row(i));
      facets_ok = facets_ok && sgn(v) == (orig > 0) - (orig < 0);
    }
  }
  cr.add("facet round trip", facets_ok, std::to_string(facets.size()) + " facets");
}

void criterion12(Criterion& cr) {
  struct Row {
    std::string spec;
    std::vector<int> parts;  // empty when not complete multipartite
    std::optional<BigInt> table;  // A(G) column, non-starred rows only
  };
  const auto f = [](unsigned n) { return factorial(n); };
  std::vector<Row> rows = {
      {"K8", {1, 1, 1, 1, 1, 1, 1, 1}, f(8)},
      {"K3,3,3", {3, 3, 3}, f(3) * f(3) * f(3) * f(3)},
      {"K1,4,4", {1, 4, 4}, 2 * f(4) * f(4)},
      {"K1,3,5", {1, 3, 5}, f(3) * f(5)},
      {"K1,3,4", {1, 3, 4}, f(3) * f(4)},
      {"K1,3,3", {1, 3, 3}, 2 * f(3) * f(3)},
      {"K1,1,3,3", {1, 1, 3, 3}, 4 * f(3) * f(3)},
      {"K5,5", {5, 5}, 2 * f(5) * f(5)},
      {"K4,7", {4, 7}, f(4) * f(7)},
      {"K4,6", {4, 6}, f(4) * f(6)},
      {"K4,5", {4, 5}, f(4) * f(5)},
      {"K4,4", {4, 4}, 2 * f(4) * f(4)},
      {"K8-K3", {1, 1, 1, 1, 1, 3}, BigInt(360)},
      {"K7-K2", {1, 1, 1, 1, 1, 2}, BigInt(240)},
      {"Dodecahedron", {}, BigInt(120)},
      {"Icosahedron", {}, BigInt(120)},
      {"Cube", {}, BigInt(48)},
      {"Cuboctahedron", {}, BigInt(48)},
      {"TruncatedTetrahedron", {}, BigInt(24)},
      {"APrism6", {}, BigInt(24)},
      {"Prism7", {}, BigInt(28)},
      {"Pyr(Prism5)", {}, BigInt(20)},
      {"Pyr(APrism4)", {}, BigInt(16)},
      {"Moebius14", {}, BigInt(28)},
      {"Heawood", {}, BigInt(336)},
      {"Petersen", {}, BigInt(120)},
  };
  for (int n = 3; n <= 7; ++n) rows.push_back({"K" + std::to_string(n), std::vector<int>(n, 1), f(n)});
  for (int m = 2; m <= 4; ++m) rows.push_back({"K1,2," + std::to_string(m), {1, 2, m}, std::nullopt});
  for (int m = 3; m <= 5; ++m) rows.push_back({"K3," + std::to_string(m), {3, m}, std::nullopt});
  for (int m = 3; m <= 6; ++m) rows.push_back({"K2," + std::to_string(m), {2, m}, std::nullopt});
  for (int m = 2; m <= 5; ++m) rows.push_back({"K1," + std::to_string(m), {1, m}, f(m)});
  for (int m = 2; m <= 4; ++m) {
    const std::string ms = std::to_string(m);
    rows.push_back({"Km+2-Km:m=" + ms, {1, 1, m}, std::nullopt});
    rows.push_back({"Km+3-Km:m=" + ms, {1, 1, 1, m}, f(3) * f(m)});
    rows.push_back({"Km+4-Km:m=" + ms, {1, 1, 1, 1, m}, f(4) * f(m)});
  }

  for (const auto& row : rows) {
    const Graph g = parse_graph_spec(row.spec);
    const auto action = restricted_group(g);
    const BigInt order = action.point_action.order();
    const BigInt want = pow2(static_cast<unsigned>(g.num_vertices() - 1)) * action.aut_order;
    cr.add(row.spec + " restricted order", order == want, order.get_str() + " vs " + want.get_str());
    if (!row.parts.empty()) {
      const BigInt formula = multipartite_aut(row.parts);
      cr.add(row.spec + " multipartite |Aut|", action.aut_order == formula,
             action.aut_order.get_str() + " vs " + formula.get_str());
    }
    if (row.table)
      cr.add(row.spec + " table A(G)", action.aut_order == *row.table,
             action.aut_order.get_str() + " vs " + row.table->get_str());
  }
}

void criterion13(Criterion& cr, Cache& cache) {
  // Switching is an involution.
  {
    bool ok = true;
    for (const std::string spec : {"K5", "K2,3"}) {
      const Graph g = parse_graph_spec(spec);
      for (const auto& q : triangle_inequalities(g))
        for (const auto& u : enumerate_cuts(g)) ok = ok && switch_inequality(switch_inequality(q, u), u) == q;
    }
    cr.add("switching involution", ok);
  }
  // Validity closure, orbit sizes, facet certificates.
  for (const std::string spec : {"K5", "K6", "K1,3,3", "Cube", "Petersen"}) {
    const CutPolytope c(parse_graph_spec(spec), Mode::kPolytope);
    const auto action = restricted_group(c);
    const auto& r = cache.get(spec);
    const auto all = expand_orbits(c, action, r.records);
    const std::set<AffineInequality> set(all.begin(), all.end());
    bool closed = true;
    for (const auto& q : all)
      for (const auto& m : action.coord_action) {
        auto img = apply(m, q);
        img.normalize();
        closed = closed && set.count(img) && c.is_valid(img);
      }
    cr.add(spec + " validity closure", closed);
    bool divides = true;
    for (const auto& rec : r.records) divides = divides && rec.orbit_size > 0 && r.group_order % rec.orbit_size == 0;
    cr.add(spec + " orbit sizes divide", divides);
    const auto vp = VPolytope::from_cut_polytope(c);
    bool facets = BigInt(static_cast<unsigned long>(all.size())) == r.total_facets;
    for (const auto& q : all) facets = facets && is_facet(vp, c.to_functional(q)).ok();
    cr.add(spec + " is_facet", facets, std::to_string(all.size()) + " inequalities");
  }
  // Balinski termination agrees with the exhaustive run.
  for (const std::string spec : {"K5", "K6"}) {
    const auto b = run_adm(spec, Mode::kPolytope, 1, Termination::kBalinski);
    const auto& e = cache.get(spec);
    cr.add(spec + " balinski = exhaustive", b.complete && b.total_facets == e.total_facets && same_records(b.records, e.records),
           b.criterion);
  }
  // Worker count and checkpoint/resume do not change the result.
  for (const std::string spec : {"K6", "K4,4"}) {
    const CutPolytope c(parse_graph_spec(spec), Mode::kPolytope);
    AdmConfig base;
    const auto one = adjacency_decomposition(c, base);
    AdmConfig three = base;
    three.workers = 3;
    const auto par = adjacency_decomposition(c, three);
    cr.add(spec + " workers 1 = 3", same_records(one.records, par.records) && report_text(c, one) == report_text(c, par));

    const auto dir = std::filesystem::temp_directory_path() /
                     ("cutpoly-acceptance-" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    std::filesystem::create_directories(dir);
    const auto cp = (dir / "run.ckpt").string();
    AdmConfig first = base;
    first.stop_after = 1;
    first.checkpoint_path = cp;
    const auto partial = adjacency_decomposition(c, first);
    AdmConfig second = base;
    second.resume_path = cp;
    const auto resumed = adjacency_decomposition(c, second);
    cr.add(spec + " checkpoint/resume", !partial.complete && resumed.complete && same_records(one.records, resumed.records) &&
                                           report_text(c, one) == report_text(c, resumed));
    std::filesystem::remove_all(dir);
  }
}

}  // namespace

int main() {
  Cache cache;
  std::vector<Criterion> criteria = {
      {1, "CUTP_n facets via dd and adm, n=3..6", {}},
      {2, "CUTP_7 via adm", {}},
      {3, "CUT_n cone facets, n=3..7", {}},
      {4, "MET_n and METP_n facet counts", {}},
      {5, "METP_5, METP_6 vertices and MET_6 rays", {}},
      {6, "small Table 2 graphs via adm", {}},
      {7, "K5-minor-free generator totals", {}},
      {8, "cross-method set equality", {}},
      {9, "triangle adjacency on CUTP_5..7", {}},
      {10, "edge and cycle facet incidence formulas", {}},
      {11, "covariance map on K1,2,2", {}},
      {12, "restricted group orders", {}},
      {13, "property suites", {}},
  };
  const auto t0 = std::chrono::steady_clock::now();
  int unexpected = 0;
  for (auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    try {
      switch (cr.id) {
        case 1: criterion1(cr, cache); break;
        case 2: criterion2(cr, cache); break;
        case 3: criterion3(cr, cache); break;
        case 4: criterion4(cr); break;
        case 5: criterion5(cr); break;
        case 6: criterion6(cr, cache); break;
        case 7: criterion7(cr); break;
        case 8: criterion8(cr, cache); break;
        case 9: criterion9(cr, cache); break;
        case 10: criterion10(cr); break;
        case 11: criterion11(cr, cache); break;
        case 12: criterion12(cr); break;
        case 13: criterion13(cr, cache); break;
      }
    } catch (const std::exception& e) {
      cr.add("exception", false, e.what());
    }
    cr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::vector<std::string> failed;
    for (const auto& c : cr.checks) {
      std::cerr << "  [" << cr.id << "] " << (c.ok ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) std::cerr << ": " << c.detail;
      std::cerr << '\n';
      if (c.ok) continue;
      const bool known = kKnownDiscrepancies.count(c.name) > 0;
      failed.push_back(c.name + (known ? " (known)" : ""));
      unexpected += !known;
    }
    std::ostringstream line;
    line << "criterion " << cr.id << ": " << (cr.passed() ? "PASS" : "FAIL") << "  " << cr.title << "  ("
         << cr.checks.size() << " checks, " << static_cast<long>(cr.seconds * 1000) << " ms)";
    if (!failed.empty()) {
      line << "  failed:";
      for (const auto& f : failed) line << ' ' << f << ';';
    }
    std::cout << line.str() << std::endl;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (total > kTimeBudgetSeconds) {
    std::cout << "time budget exceeded: " << total << " s\n";
    ++unexpected;
  }
  std::cout << "unexpected failures: " << unexpected << '\n';
  return unexpected == 0 ? 0 : 1;
}
