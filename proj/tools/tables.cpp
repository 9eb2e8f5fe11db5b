#include "tables.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

namespace cutpoly {

namespace {

BigInt big(const char* s) { return BigInt(s); }
BigInt big(long v) { return BigInt(v); }

TableRow cut_row(std::string family, std::string label, std::string graph, Mode mode, BigInt expected,
                 std::optional<std::size_t> orbits) {
  TableRow r;
  r.family = std::move(family);
  r.label = std::move(label);
  r.graph = std::move(graph);
  r.mode = mode;
  r.kind = RowKind::kCutFacets;
  r.expected = std::move(expected);
  r.expected_orbits = orbits;
  return r;
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt pow2(int e) {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return v;
}

QVector apply_rational(const SignedEdgeMap& m, const QVector& x, bool cone) {
  QVector y(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) y[m.perm[e]] = (!cone && m.flip[e]) ? Rational(1) - x[e] : x[e];
  return y;
}

}  // namespace

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::kPass: return "PASS";
    case RowStatus::kFail: return "FAIL";
    case RowStatus::kSkipped: return "SKIPPED";
    case RowStatus::kPending: break;
  }
  return "PENDING";
}

std::vector<TableRow> table1_rows() {
  std::vector<TableRow> rows;
  const long cutp_e[] = {4, 8, 16, 32, 64, 128};
  const long cut_e[] = {3, 7, 15, 31, 63, 127};
  const std::size_t cut_e_orbits[] = {1, 2, 2, 3, 3, 4};
  const char* cutp_f[] = {"4", "16", "56", "368", "116764", "217093472"};
  const std::size_t cutp_f_orbits[] = {1, 1, 2, 3, 11, 147};
  const char* cut_f[] = {"3", "12", "40", "210", "38780", "49604520"};
  const std::size_t cut_f_orbits[] = {1, 1, 2, 4, 36, 2169};
  const char* met_e[] = {"3", "7", "25", "296", "55226", "119269588"};
  const std::size_t met_e_orbits[] = {1, 2, 3, 7, 46, 3918};
  const char* metp_e[] = {"4", "8", "32", "554", "275840", "1550825600"};
  const std::size_t metp_e_orbits[] = {1, 1, 2, 3, 13, 533};
  for (int n = 3; n <= 8; ++n) {
    const int i = n - 3;
    const std::string label = "n=" + std::to_string(n);
    const std::string kn = "K" + std::to_string(n);
    auto points = [&](const char* fam, Mode mode, long count, std::size_t orbits) {
      TableRow r = cut_row(fam, label, kn, mode, big(count), orbits);
      r.kind = RowKind::kCutPoints;
      r.n = n;
      rows.push_back(std::move(r));
    };
    auto metric = [&](const char* fam, Mode mode, RowKind kind, BigInt count, std::size_t orbits) {
      TableRow r = cut_row(fam, label, kn, mode, std::move(count), orbits);
      r.kind = kind;
      r.n = n;
      rows.push_back(std::move(r));
    };
    points("CUTP_n,e", Mode::kPolytope, cutp_e[i], 1);
    rows.push_back(cut_row("CUTP_n,f", label, kn, Mode::kPolytope, big(cutp_f[i]), cutp_f_orbits[i]));
    points("CUT_n,e", Mode::kCone, cut_e[i], cut_e_orbits[i]);
    rows.push_back(cut_row("CUT_n,f", label, kn, Mode::kCone, big(cut_f[i]), cut_f_orbits[i]));
    metric("MET_n,e", Mode::kCone, RowKind::kMetricVertices, big(met_e[i]), met_e_orbits[i]);
    metric("MET_n,f", Mode::kCone, RowKind::kMetricFacets, big(3 * binom(n, 3)), 1);
    metric("METP_n,e", Mode::kPolytope, RowKind::kMetricVertices, big(metp_e[i]), metp_e_orbits[i]);
    metric("METP_n,f", Mode::kPolytope, RowKind::kMetricFacets, big(4 * binom(n, 3)), 1);
  }
  return rows;
}

std::vector<TableRow> table2_rows() {
  const Mode P = Mode::kPolytope;
  const char* T = "Table 2";
  std::vector<TableRow> rows = {
      cut_row(T, "K_8", "K8", P, big("217093472"), 147),
      cut_row(T, "K_{3,3,3}", "K3,3,3", P, big("624406788"), 2015),
      cut_row(T, "K_{1,4,4}", "K1,4,4", P, big("36391264"), 175),
      cut_row(T, "K_{1,3,5}", "K1,3,5", P, big("71340"), 7),
      cut_row(T, "K_{1,3,4}", "K1,3,4", P, big("12480"), 6),
      cut_row(T, "K_{1,3,3}", "K1,3,3", P, big("684"), 3),
      cut_row(T, "K_{1,1,3,3}", "K1,1,3,3", P, big("432552"), 50),
  };
  for (long m = 2; m <= 4; ++m)
    rows.push_back(cut_row(T, "K_{1,2," + std::to_string(m) + "}", "K1,2," + std::to_string(m), P,
                           big(8 * m + 8 * binom(m, 2)), 2));
  rows.push_back(cut_row(T, "K_{5,5}", "K5,5", P, big("16482678610"), 1282));
  rows.push_back(cut_row(T, "K_{4,7}", "K4,7", P, big("271596584"), 15));
  rows.push_back(cut_row(T, "K_{4,6}", "K4,6", P, big("23179008"), 12));
  rows.push_back(cut_row(T, "K_{4,5}", "K4,5", P, big("983560"), 8));
  rows.push_back(cut_row(T, "K_{4,4}", "K4,4", P, big("27968"), 4));
  for (long m = 3; m <= 5; ++m)
    rows.push_back(cut_row(T, "K_{3," + std::to_string(m) + "}", "K3," + std::to_string(m), P,
                           big(6 * m + 24 * binom(m, 2)), 2));
  for (long m = 3; m <= 6; ++m)
    rows.push_back(cut_row(T, "K_{2," + std::to_string(m) + "}", "K2," + std::to_string(m), P, big(4 * m * m),
                           std::nullopt));
  for (long m = 2; m <= 5; ++m)
    rows.push_back(cut_row(T, "K_{1," + std::to_string(m) + "}", "K1," + std::to_string(m), P, big(2 * m), 1));
  for (long m = 2; m <= 4; ++m) {
    const std::string ms = std::to_string(m);
    rows.push_back(cut_row(T, "K_{m+2}-K_m m=" + ms, "Km+2-Km:m=" + ms, P, big(4 * m), std::nullopt));
  }
  for (long m = 2; m <= 4; ++m) {
    const std::string ms = std::to_string(m);
    rows.push_back(cut_row(T, "K_{m+3}-K_m m=" + ms, "Km+3-Km:m=" + ms, P, big(4 + 12 * m), 2));
  }
  for (long m = 2; m <= 3; ++m) {
    const std::string ms = std::to_string(m);
    rows.push_back(cut_row(T, "K_{m+4}-K_m m=" + ms, "Km+4-Km:m=" + ms, P, big(8 * (8 * m * m - 3 * m + 2)), 4));
  }
  const std::vector<TableRow> tail = {
      cut_row(T, "K_8-K_3", "K8-K3", P, big("2685152"), 82),
      cut_row(T, "K_7-K_2", "K7-K2", P, big("31400"), 17),
      cut_row(T, "Dodecahedron", "Dodecahedron", P, big("23804"), 5),
      cut_row(T, "Icosahedron", "Icosahedron", P, big("1552"), 4),
      cut_row(T, "Cube", "Cube", P, big("200"), 3),
      cut_row(T, "Cuboctahedron", "Cuboctahedron", P, big("1360"), 5),
      cut_row(T, "Tr. Tetrahedron", "TruncatedTetrahedron", P, big("540"), 4),
      cut_row(T, "APrism_6", "APrism6", P, big("2032"), 5),
      cut_row(T, "Prism_7", "Prism7", P, big("7394"), 6),
      cut_row(T, "Pyr(Prism_5)", "Pyr(Prism5)", P, big("208132"), 22),
      cut_row(T, "Pyr(APrism_4)", "Pyr(APrism4)", P, big("389104"), 17),
      cut_row(T, "M_14", "Moebius14", P, big("369506"), 9),
      cut_row(T, "Heawood", "Heawood", P, big("5361194"), 9),
      cut_row(T, "Petersen", "Petersen", P, big("3614"), 4),
  };
  rows.insert(rows.end(), tail.begin(), tail.end());
  return rows;
}

std::size_t count_orbits(const SymmetryAction& action, const std::vector<AffineInequality>& rows) {
  std::set<AffineInequality> todo(rows.begin(), rows.end());
  std::size_t orbits = 0;
  while (!todo.empty()) {
    ++orbits;
    std::vector<AffineInequality> frontier{*todo.begin()};
    todo.erase(todo.begin());
    while (!frontier.empty()) {
      std::vector<AffineInequality> next;
      for (const auto& q : frontier)
        for (const auto& m : action.coord_action) {
          AffineInequality y = apply(m, q);
          y.normalize();
          auto it = todo.find(y);
          if (it != todo.end()) {
            todo.erase(it);
            next.push_back(std::move(y));
          }
        }
      frontier = std::move(next);
    }
  }
  return orbits;
}

std::size_t count_vertex_orbits(const SymmetryAction& action, const std::vector<QVector>& vertices) {
  const bool cone = action.coord_action.empty() ||
                    std::all_of(action.coord_action.begin(), action.coord_action.end(), [](const SignedEdgeMap& m) {
                      return std::none_of(m.flip.begin(), m.flip.end(), [](auto f) { return f != 0; });
                    });
  std::set<QVector> todo(vertices.begin(), vertices.end());
  std::size_t orbits = 0;
  while (!todo.empty()) {
    ++orbits;
    std::vector<QVector> frontier{*todo.begin()};
    todo.erase(todo.begin());
    while (!frontier.empty()) {
      std::vector<QVector> next;
      for (const auto& v : frontier)
        for (const auto& m : action.coord_action) {
          QVector y = apply_rational(m, v, cone);
          auto it = todo.find(y);
          if (it != todo.end()) {
            todo.erase(it);
            next.push_back(std::move(y));
          }
        }
      frontier = std::move(next);
    }
  }
  return orbits;
}

void evaluate_row(TableRow& row, const TableCaps& caps, unsigned workers) {
  const Graph g = parse_graph_spec(row.graph);
  const BigInt points = pow2(g.num_vertices() - 1);
  auto finish = [&]() {
    const bool count_ok = row.count == row.expected;
    const bool orbit_ok = !row.expected_orbits || (row.orbits && *row.orbits == *row.expected_orbits);
    row.status = count_ok && orbit_ok ? RowStatus::kPass : RowStatus::kFail;
  };

  switch (row.kind) {
    case RowKind::kCutPoints: {
      row.method = "count";
      row.count = row.mode == Mode::kPolytope ? points : BigInt(points - 1);
      row.orbits = restricted_group(g, row.mode).point_action.point_orbits().size();
      finish();
      return;
    }
    case RowKind::kMetricFacets: {
      row.method = "formula";
      const auto rows = metric_generators(row.n, row.mode);
      row.count = static_cast<unsigned long>(rows.size());
      row.orbits = count_orbits(restricted_group(g, row.mode), rows);
      finish();
      return;
    }
    case RowKind::kMetricVertices: {
      if (row.expected > BigInt(static_cast<unsigned long>(caps.max_vertices))) {
        row.status = RowStatus::kSkipped;
        row.note = "above vertex cap";
        return;
      }
      row.method = "dd";
      const auto verts = enumerate_vertices(metric_generators(row.n, row.mode), g.num_edges(), row.mode);
      row.count = static_cast<unsigned long>(verts.size());
      row.orbits = count_vertex_orbits(restricted_group(g, row.mode), verts);
      finish();
      return;
    }
    case RowKind::kCutFacets:
      break;
  }

  if (row.mode == Mode::kPolytope && g.num_vertices() <= 22 && !has_k5_minor(g)) {
    row.method = "k5free";
    row.count = k5free_count(g);
    if (row.count <= BigInt(static_cast<unsigned long>(4 * caps.max_facets)))
      row.orbits = count_orbits(restricted_group(g, row.mode), k5free_facets(g));
    finish();
    return;
  }
  const bool within = row.expected <= BigInt(static_cast<unsigned long>(caps.max_facets)) &&
                      points <= BigInt(static_cast<unsigned long>(caps.max_points)) &&
                      g.num_edges() <= caps.max_edges;
  if (within) {
    row.method = "adm";
    AdmConfig cfg;
    cfg.workers = workers;
    const auto r = adjacency_decomposition(CutPolytope(g, row.mode), cfg);
    row.count = r.total_facets;
    row.orbits = r.records.size();
    finish();
    return;
  }
  row.status = RowStatus::kSkipped;
  row.note = "above caps";
}

void print_table_header(std::ostream& out, const std::string& format) {
  if (format == "csv") {
    out << "family,row,method,expected,expected_orbits,computed,computed_orbits,status,seconds,note\n";
  } else {
    out << "| family | row | method | expected | computed | status | seconds | note |\n"
        << "|---|---|---|---|---|---|---|---|\n";
  }
}

void print_table_row(std::ostream& out, const std::string& format, const TableRow& row) {
  auto orbits = [](const std::optional<std::size_t>& o) { return o ? std::to_string(*o) : std::string(); };
  const bool done = row.status == RowStatus::kPass || row.status == RowStatus::kFail;
  std::ostringstream secs;
  secs << std::fixed << std::setprecision(2) << row.seconds;
  if (format == "csv") {
    out << row.family << ',' << '"' << row.label << '"' << ',' << row.method << ',' << row.expected.get_str() << ','
        << orbits(row.expected_orbits) << ',' << (done ? row.count.get_str() : "") << ',' << orbits(row.orbits) << ','
        << to_string(row.status) << ',' << secs.str() << ',' << row.note << '\n';
    return;
  }
  std::string expected = row.expected.get_str();
  if (row.expected_orbits) expected += "(" + std::to_string(*row.expected_orbits) + ")";
  std::string computed;
  if (done) {
    computed = row.count.get_str();
    if (row.orbits) computed += "(" + std::to_string(*row.orbits) + ")";
  }
  out << "| " << row.family << " | " << row.label << " | " << row.method << " | " << expected << " | " << computed
      << " | " << to_string(row.status) << " | " << secs.str() << " | " << row.note << " |\n";
}

}  // namespace cutpoly
