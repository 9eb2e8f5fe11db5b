// cutpoly command-line tool.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cutpoly/adm.hpp"
#include "tables.hpp"

using namespace cutpoly;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct RunConfig {
  std::string graph;
  std::string mode = "polytope";
  std::string method = "adm";
  std::string termination = "exhaustive";
  std::size_t recursion_threshold = 0;
  int max_depth = 2;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string checkpoint;
  std::string resume;
  std::string out;
  std::size_t caps_orbits = 0;
  std::size_t caps_incidence = 0;
  std::size_t steps = 1000;
  bool override_minor = false;
  bool verbose = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Mode parse_mode(const std::string& s) {
  if (s == "polytope") return Mode::kPolytope;
  if (s == "cone") return Mode::kCone;
  throw UsageError("--mode must be polytope or cone");
}

Graph load_graph(const RunConfig& cfg) {
  if (cfg.graph.empty()) throw UsageError("--graph is required");
  try {
    return parse_graph_spec(cfg.graph);
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
}

AdmConfig adm_config(const RunConfig& rc, const Graph& g) {
  AdmConfig cfg;
  cfg.termination = parse_termination(rc.termination);
  cfg.recursion_threshold = rc.recursion_threshold;
  cfg.max_depth = rc.max_depth;
  cfg.workers = rc.workers;
  cfg.checkpoint_path = rc.checkpoint;
  cfg.resume_path = rc.resume;
  cfg.max_orbits = rc.caps_orbits;
  cfg.max_incidence = rc.caps_incidence;
  cfg.seed = rc.seed;
  std::ostringstream ctx;
  ctx << "graph " << rc.graph << " mode " << rc.mode << " n " << g.num_vertices() << " edges";
  for (const auto& e : g.edges()) ctx << ' ' << e.u << '-' << e.v;
  cfg.context = ctx.str();
  if (rc.verbose) cfg.log = [](const std::string& s) { std::cerr << s << '\n'; };
  return cfg;
}

std::vector<AffineInequality> dd_inequalities(const CutPolytope& c) {
  std::vector<AffineInequality> out;
  for (const auto& f : dual_description(VPolytope::from_cut_polytope(c))) {
    auto q = c.to_inequality(f.functional);
    q.normalize();
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AdmResult run_method(const RunConfig& rc, const CutPolytope& c, const SymmetryAction& action) {
  if (rc.method == "adm") return adjacency_decomposition(c, adm_config(rc, c.graph()));
  if (rc.method == "dd") {
    auto r = group_into_orbits(c, action, dd_inequalities(c));
    r.criterion = "dd";
    return r;
  }
  if (rc.method == "k5free") {
    if (c.mode() != Mode::kPolytope) throw UsageError("--method k5free needs --mode polytope");
    auto r = group_into_orbits(c, action, k5free_facets(c.graph(), rc.override_minor));
    r.criterion = "k5free";
    return r;
  }
  throw UsageError("unknown method " + rc.method);
}

void emit_report(const RunConfig& rc, const CutPolytope& c, const AdmResult& r) {
  if (rc.out.empty()) return;
  std::ofstream out(rc.out);
  if (!out) throw std::runtime_error("cannot write " + rc.out);
  write_orbit_report(out, c, r);
}

int cmd_enum(const RunConfig& rc) {
  const Graph g = load_graph(rc);
  const CutPolytope c(g, parse_mode(rc.mode));
  const SymmetryAction action = restricted_group(c);
  if (rc.method == "sample") {
    SampleConfig sc;
    sc.steps = rc.steps;
    sc.seed = rc.seed;
    const auto s = sample_facets(c, sc);
    for (const auto& [inc, n] : s.histogram) {
      std::cout << "incidence=" << inc << " visits=" << n << " representative="
                << to_string(c.to_inequality(s.representatives.at(inc).functional)) << '\n';
    }
    std::cout << "classes=" << s.histogram.size() << " orbits_seen=" << s.distinct_keys << " steps=" << rc.steps
              << " seed=" << rc.seed << " method=sample\n";
    return kOk;
  }
  const AdmResult r = run_method(rc, c, action);
  emit_report(rc, c, r);
  if (rc.out.empty()) write_orbit_report(std::cout, c, r);
  std::cout << "facets=" << r.total_facets.get_str() << " orbits=" << r.records.size()
            << " group_order=" << r.group_order.get_str() << " method=" << rc.method;
  if (rc.method == "adm") std::cout << " termination=" << r.criterion;
  std::cout << '\n';
  if (!r.complete) {
    std::cerr << "run stopped before completion; state is in the checkpoint\n";
    return kResource;
  }
  return kOk;
}

std::set<AffineInequality> expanded(const CutPolytope& c, const SymmetryAction& a, const AdmResult& r) {
  const auto v = expand_orbits(c, a, r.records);
  return {v.begin(), v.end()};
}

int cmd_check(const RunConfig& rc, const std::string& conjecture, const std::string& cross) {
  const Graph g = load_graph(rc);
  const CutPolytope c(g, parse_mode(rc.mode));
  const SymmetryAction action = restricted_group(c);
  if (conjecture.empty() == cross.empty()) throw UsageError("give exactly one of --conjecture or --cross");
  if (!conjecture.empty()) {
    if (conjecture != "triangle-adjacency") throw UsageError("unknown conjecture " + conjecture);
    AdmConfig cfg = adm_config(rc, g);
    cfg.record_neighbors = true;
    const auto r = adjacency_decomposition(c, cfg);
    const auto t = check_triangle_adjacency(c, r.records);
    for (std::size_t i = 0; i < t.witnesses.size(); ++i) {
      const auto& w = t.witnesses[i];
      const auto& rec = r.records[i];
      std::cout << "orbit incidence=" << rec.incidence_count << " size=" << rec.orbit_size.get_str() << ' ';
      if (w.triangle_key) {
        std::cout << "witness=" << to_string(c.to_inequality(facet_from_incidence(VPolytope::from_cut_polytope(c),
                                                                                  *w.triangle_key)
                                                                 .functional))
                  << '\n';
      } else {
        std::cout << "counterexample=" << to_string(c.to_inequality(rec.representative.functional)) << '\n';
      }
    }
    std::cout << (t.holds ? "PASS" : "FAIL") << " triangle-adjacency orbits=" << r.records.size() << '\n';
    return t.holds ? kOk : kVerificationFailure;
  }
  RunConfig left = rc, right = rc;
  if (cross == "dd-vs-adm") {
    left.method = "dd";
  } else if (cross == "k5free-vs-adm") {
    left.method = "k5free";
  } else {
    throw UsageError("unknown cross check " + cross);
  }
  right.method = "adm";
  const auto a = run_method(left, c, action);
  const auto b = run_method(right, c, action);
  std::set<AffineInequality> sa, sb;
  if (left.method == "dd") {
    const auto v = dd_inequalities(c);
    sa.insert(v.begin(), v.end());
  } else {
    const auto v = k5free_facets(g, rc.override_minor);
    sa.insert(v.begin(), v.end());
  }
  sb = expanded(c, action, b);
  const bool same = sa == sb;
  std::cout << (same ? "PASS" : "FAIL") << ' ' << cross << " (" << sa.size() << (same ? " = " : " != ") << sb.size()
            << ") orbits " << a.records.size() << " / " << b.records.size() << '\n';
  if (!same) {
    for (const auto& q : sa)
      if (!sb.count(q)) {
        std::cout << "only in " << left.method << ": " << to_string(q) << '\n';
        break;
      }
    for (const auto& q : sb)
      if (!sa.count(q)) {
        std::cout << "only in adm: " << to_string(q) << '\n';
        break;
      }
  }
  return same ? kOk : kVerificationFailure;
}

int cmd_info(const RunConfig& rc) {
  const Graph g = load_graph(rc);
  const Mode mode = parse_mode(rc.mode);
  const SymmetryAction a = restricted_group(g, mode);
  BigInt cuts;
  mpz_ui_pow_ui(cuts.get_mpz_t(), 2, static_cast<unsigned long>(g.num_vertices() - 1));
  std::cout << "graph=" << rc.graph << '\n'
            << "vertices=" << g.num_vertices() << '\n'
            << "edges=" << g.num_edges() << '\n'
            << "cuts=" << cuts.get_str() << '\n'
            << "aut_order=" << a.aut_order.get_str() << '\n'
            << "restricted_order=" << a.point_action.order().get_str() << '\n'
            << "dimension=" << g.num_edges() << '\n'
            << "k5_minor=" << (has_k5_minor(g) ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_convert(const RunConfig& rc, const std::string& what, const std::string& input) {
  std::ofstream file;
  if (!rc.out.empty()) {
    file.open(rc.out);
    if (!file) throw std::runtime_error("cannot write " + rc.out);
  }
  std::ostream& out = rc.out.empty() ? std::cout : file;
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw UsageError("cannot read " + input);
    if (what == "h") {
      auto rows = read_h(in);
      for (auto& q : rows) q.normalize();
      std::sort(rows.begin(), rows.end());
      write_h(out, rows, rows.empty() ? 0 : rows.front().a.size());
    } else if (what == "v") {
      write_v(out, read_v(in));
    } else {
      throw UsageError("--in needs --what h or v");
    }
    return kOk;
  }
  const Graph g = load_graph(rc);
  if (what == "graph") {
    write_graph(out, g);
    return kOk;
  }
  const CutPolytope c(g, parse_mode(rc.mode));
  if (what == "cuts" || what == "v") {
    write_v(out, c.points(), c.mode() == Mode::kCone);
  } else if (what == "facets" || what == "h") {
    const SymmetryAction action = restricted_group(c);
    const auto r = run_method(rc, c, action);
    write_h(out, expand_orbits(c, action, r.records), g.num_edges());
  } else {
    throw UsageError("--what must be graph, cuts or facets");
  }
  return kOk;
}

int cmd_table(const RunConfig& rc, int which, const std::string& format, const TableCaps& caps) {
  std::vector<TableRow> rows;
  if (which == 1) {
    rows = table1_rows();
  } else if (which == 2) {
    rows = table2_rows();
  } else {
    throw UsageError("--table must be 1 or 2");
  }
  bool all_ok = true;
  print_table_header(std::cout, format);
  for (auto& row : rows) {
    const auto t0 = std::chrono::steady_clock::now();
    evaluate_row(row, caps, rc.workers);
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    print_table_row(std::cout, format, row);
    std::cout.flush();
    all_ok = all_ok && row.status != RowStatus::kFail;
  }
  return all_ok ? kOk : kVerificationFailure;
}

void add_common(CLI::App* sub, RunConfig& rc) {
  sub->add_option("--graph", rc.graph, "graph spec: K6, K3,3,3, Km+2-Km:m=3, Prism7, file:PATH, ...");
  sub->add_option("--mode", rc.mode, "polytope or cone")->check(CLI::IsMember({"polytope", "cone"}));
  sub->add_option("--method", rc.method, "dd, adm, k5free or sample")
      ->check(CLI::IsMember({"dd", "adm", "k5free", "sample"}));
  sub->add_option("--termination", rc.termination, "exhaustive or balinski")
      ->check(CLI::IsMember({"exhaustive", "balinski"}));
  sub->add_option("--recursion-threshold", rc.recursion_threshold, "incidence above which to recurse (0: 4*dim)");
  sub->add_option("--max-depth", rc.max_depth, "recursion depth bound");
  sub->add_option("--seed", rc.seed, "random seed");
  sub->add_option("--workers", rc.workers, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--checkpoint", rc.checkpoint, "checkpoint file written after every batch");
  sub->add_option("--resume", rc.resume, "checkpoint to resume from");
  sub->add_option("--out", rc.out, "output file");
  sub->add_option("--caps-orbits", rc.caps_orbits, "maximum number of orbits (0: none)");
  sub->add_option("--caps-incidence", rc.caps_incidence, "maximum incidence of a treated orbit (0: none)");
  sub->add_option("--steps", rc.steps, "random walk steps for --method sample");
  sub->add_flag("--override-minor-check", rc.override_minor, "run k5free on graphs with a K5 minor");
  sub->add_flag("-v,--verbose", rc.verbose, "progress on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facet enumeration for cut polytopes"};
  app.require_subcommand(1);
  RunConfig rc;

  auto* en = app.add_subcommand("enum", "enumerate facet orbits");
  add_common(en, rc);

  auto* check = app.add_subcommand("check", "conjecture and cross-method checks");
  add_common(check, rc);
  std::string conjecture, cross;
  check->add_option("--conjecture", conjecture, "triangle-adjacency");
  check->add_option("--cross", cross, "dd-vs-adm or k5free-vs-adm");

  auto* info = app.add_subcommand("info", "graph and group data");
  add_common(info, rc);

  auto* table = app.add_subcommand("table", "reproduce the facet count tables");
  int which = 1;
  std::string format = "markdown";
  TableCaps caps;
  table->add_option("--table", which, "1 or 2");
  table->add_option("--format", format, "markdown or csv")->check(CLI::IsMember({"markdown", "csv"}));
  table->add_option("--max-facets", caps.max_facets, "skip rows expecting more facets");
  table->add_option("--max-points", caps.max_points, "skip rows with more cuts");
  table->add_option("--max-edges", caps.max_edges, "skip decomposition on graphs with more edges");
  table->add_option("--workers", rc.workers, "worker threads");

  auto* sample = app.add_subcommand("sample", "random walk on the ridge graph");
  add_common(sample, rc);

  auto* convert = app.add_subcommand("convert", "write graphs, cuts or facets in text formats");
  add_common(convert, rc);
  std::string what = "cuts", input;
  convert->add_option("--what", what, "graph, cuts, facets; with --in: h or v");
  convert->add_option("--in", input, "normalize an H- or V-representation file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*en) return cmd_enum(rc);
    if (*check) return cmd_check(rc, conjecture, cross);
    if (*info) return cmd_info(rc);
    if (*table) return cmd_table(rc, which, format, caps);
    if (*sample) {
      rc.method = "sample";
      return cmd_enum(rc);
    }
    if (*convert) return cmd_convert(rc, what, input);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    if (!rc.checkpoint.empty()) std::cerr << "state saved to " << rc.checkpoint << '\n';
    return kResource;
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsage;
}
