#include "cutpoly/cutmodel.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cutpoly {

namespace {

constexpr int kMaxCutVertices = 22;

std::uint64_t all_vertices(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::uint64_t canonical_side(std::uint64_t mask, int n) { return (mask & 1U) ? (~mask & all_vertices(n)) : mask; }

void check_cut_graph(const Graph& g) {
  if (!g.connected()) throw ModelError("cut polytope needs a connected graph");
  if (g.num_vertices() > kMaxCutVertices) throw ModelError("cut enumeration limited to 22 vertices");
}

}  // namespace

CutVector make_cut(const Graph& g, std::uint64_t subset_mask) {
  CutVector c;
  c.subset = canonical_side(subset_mask, g.num_vertices());
  c.coords.resize(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edges()[e];
    c.coords[e] = static_cast<std::uint8_t>(((c.subset >> u) ^ (c.subset >> v)) & 1U);
  }
  return c;
}

AffineInequality& AffineInequality::normalize() {
  std::int64_t g = std::gcd(a0, std::int64_t{0});
  for (auto x : a) g = std::gcd(g, x);
  if (g > 1) {
    a0 /= g;
    for (auto& x : a) x /= g;
  }
  return *this;
}

std::int64_t AffineInequality::evaluate(std::span<const std::uint8_t> x) const {
  std::int64_t s = a0;
  for (std::size_t e = 0; e < a.size(); ++e)
    if (x[e]) s += a[e];
  return s;
}

std::int64_t AffineInequality::evaluate(std::span<const std::int64_t> x) const {
  __int128 s = a0;
  for (std::size_t e = 0; e < a.size(); ++e) s += static_cast<__int128>(a[e]) * x[e];
  if (s > std::numeric_limits<std::int64_t>::max() || s < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("inequality evaluation exceeds 64 bits");
  return static_cast<std::int64_t>(s);
}

bool AffineInequality::is_zero() const {
  return a0 == 0 && std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

std::string to_string(const AffineInequality& q) {
  std::ostringstream os;
  os << q.a0;
  for (auto x : q.a) os << ' ' << x;
  return os.str();
}

// ---------------------------------------------------------------------------

CutPolytope::CutPolytope(Graph g, Mode mode) : graph_(std::move(g)), mode_(mode) {
  check_cut_graph(graph_);
  const std::size_t ncuts = std::size_t{1} << (graph_.num_vertices() - 1);
  const std::size_t m = graph_.num_edges();
  const std::size_t first = mode_ == Mode::kCone ? 1 : 0;
  points_ = IntMatrix(ncuts - first, m);
  const std::size_t hcols = mode_ == Mode::kCone ? m : m + 1;
  homogeneous_ = IntMatrix(ncuts - first, hcols);
  for (std::size_t i = first; i < ncuts; ++i) {
    const std::uint64_t mask = static_cast<std::uint64_t>(i) << 1;
    auto row = points_.row(i - first);
    auto hrow = homogeneous_.row(i - first);
    const std::size_t off = hcols - m;
    if (off) hrow[0] = 1;
    for (std::size_t e = 0; e < m; ++e) {
      const auto [u, v] = graph_.edges()[e];
      row[e] = static_cast<std::int64_t>(((mask >> u) ^ (mask >> v)) & 1U);
      hrow[off + e] = row[e];
    }
  }
}

AffineInequality CutPolytope::to_inequality(std::span<const std::int64_t> f) const {
  AffineInequality q;
  if (mode_ == Mode::kCone) {
    q.a.assign(f.begin(), f.end());
  } else {
    q.a0 = f[0];
    q.a.assign(f.begin() + 1, f.end());
  }
  return q;
}

std::vector<std::int64_t> CutPolytope::to_functional(const AffineInequality& q) const {
  if (mode_ == Mode::kCone) {
    if (q.a0 != 0) throw ModelError("cone inequalities are homogeneous");
    return q.a;
  }
  std::vector<std::int64_t> f{q.a0};
  f.insert(f.end(), q.a.begin(), q.a.end());
  return f;
}

IndexSet CutPolytope::incidence(const AffineInequality& q) const {
  IndexSet s;
  for (std::size_t i = 0; i < points_.rows(); ++i)
    if (q.evaluate(points_.row(i)) == 0) s.push_back(static_cast<std::uint32_t>(i));
  return s;
}

bool CutPolytope::is_valid(const AffineInequality& q) const {
  for (std::size_t i = 0; i < points_.rows(); ++i)
    if (q.evaluate(points_.row(i)) < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Symmetries

AffineInequality apply(const SignedEdgeMap& m, const AffineInequality& q) {
  AffineInequality r;
  r.a0 = q.a0;
  r.a.assign(q.a.size(), 0);
  for (std::size_t e = 0; e < q.a.size(); ++e) {
    if (m.flip[e]) {
      r.a0 += q.a[e];
      r.a[m.perm[e]] = -q.a[e];
    } else {
      r.a[m.perm[e]] = q.a[e];
    }
  }
  return r;
}

std::vector<std::int64_t> apply(const SignedEdgeMap& m, std::span<const std::int64_t> x) {
  std::vector<std::int64_t> r(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) r[m.perm[e]] = m.flip[e] ? 1 - x[e] : x[e];
  return r;
}

SymmetryAction restricted_group(const Graph& g, Mode mode) {
  check_cut_graph(g);
  const int n = g.num_vertices();
  const std::size_t m = g.num_edges();
  const std::size_t ncuts = std::size_t{1} << (n - 1);
  const std::size_t first = mode == Mode::kCone ? 1 : 0;
  const std::size_t degree = ncuts - first;

  SymmetryAction act;
  std::vector<Perm> gens;
  const auto autos = automorphism_group(g);
  {
    std::vector<Perm> vgens;
    for (const auto& a : autos) vgens.emplace_back(a.images.begin(), a.images.end());
    act.aut_order = PermGroup(static_cast<std::size_t>(n), vgens).order();
  }
  for (const auto& a : autos) {
    Perm p(degree);
    for (std::size_t i = first; i < ncuts; ++i) {
      const std::uint64_t mask = static_cast<std::uint64_t>(i) << 1;
      std::uint64_t img = 0;
      for (std::uint64_t b = mask; b; b &= b - 1) img |= std::uint64_t{1} << a.images[std::countr_zero(b)];
      p[i - first] = static_cast<std::uint32_t>((canonical_side(img, n) >> 1) - first);
    }
    SignedEdgeMap sm;
    sm.perm.resize(m);
    sm.flip.assign(m, 0);
    for (std::size_t e = 0; e < m; ++e) {
      const auto [u, v] = g.edges()[e];
      sm.perm[e] = static_cast<std::uint32_t>(*g.edge_index(a.images[u], a.images[v]));
    }
    gens.push_back(std::move(p));
    act.coord_action.push_back(std::move(sm));
  }
  if (mode == Mode::kPolytope) {
    for (int v = 1; v < n; ++v) {
      Perm p(degree);
      const std::uint64_t bit = std::uint64_t{1} << (v - 1);
      for (std::size_t i = 0; i < ncuts; ++i) p[i] = static_cast<std::uint32_t>(i ^ bit);
      SignedEdgeMap sm;
      sm.perm.resize(m);
      std::iota(sm.perm.begin(), sm.perm.end(), 0U);
      sm.flip.assign(m, 0);
      for (std::size_t e = 0; e < m; ++e) {
        const auto [a, b] = g.edges()[e];
        sm.flip[e] = (a == v || b == v) ? 1 : 0;
      }
      gens.push_back(std::move(p));
      act.coord_action.push_back(std::move(sm));
    }
  }
  // PermGroup drops identity generators; keep the coordinate list parallel.
  std::vector<Perm> kept;
  std::vector<SignedEdgeMap> kept_coords;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (is_identity(gens[i])) continue;
    kept.push_back(std::move(gens[i]));
    kept_coords.push_back(std::move(act.coord_action[i]));
  }
  act.point_action = PermGroup(degree, std::move(kept));
  act.coord_action = std::move(kept_coords);
  return act;
}

std::vector<CutVector> enumerate_cuts(const Graph& g) {
  check_cut_graph(g);
  const std::size_t ncuts = std::size_t{1} << (g.num_vertices() - 1);
  std::vector<CutVector> out;
  out.reserve(ncuts);
  for (std::size_t i = 0; i < ncuts; ++i) out.push_back(make_cut(g, static_cast<std::uint64_t>(i) << 1));
  return out;
}

AffineInequality switch_inequality(const AffineInequality& q, const CutVector& u) {
  AffineInequality r = q;
  for (std::size_t e = 0; e < r.a.size(); ++e) {
    if (!u.coords[e]) continue;
    r.a0 += r.a[e];
    r.a[e] = -r.a[e];
  }
  return r.normalize();
}

// ---------------------------------------------------------------------------
// Inequality families

std::vector<AffineInequality> triangle_inequalities(const Graph& g, bool with_perimeter) {
  std::vector<AffineInequality> out;
  const int n = g.num_vertices();
  const std::size_t m = g.num_edges();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!g.adjacent(i, k) || !g.adjacent(j, k)) continue;
        const std::size_t e[3] = {*g.edge_index(i, j), *g.edge_index(i, k), *g.edge_index(j, k)};
        for (int neg = 0; neg < 3; ++neg) {
          AffineInequality q;
          q.a.assign(m, 0);
          for (int t = 0; t < 3; ++t) q.a[e[t]] = t == neg ? -1 : 1;
          out.push_back(std::move(q));
        }
        if (with_perimeter) {
          AffineInequality q;
          q.a0 = 2;
          q.a.assign(m, 0);
          for (auto x : e) q.a[x] = -1;
          out.push_back(std::move(q));
        }
      }
    }
  return out;
}

AffineInequality hypermetric_inequality(std::span<const int> b) {
  if (std::accumulate(b.begin(), b.end(), 0) != 1) throw ModelError("hypermetric weights must sum to 1");
  const int n = static_cast<int>(b.size());
  const Graph kn = catalog("K", std::vector<int>{n});
  AffineInequality q;
  q.a.assign(kn.num_edges(), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) q.a[*kn.edge_index(i, j)] = -static_cast<std::int64_t>(b[i]) * b[j];
  return q.normalize();
}

namespace {

void require_k5free(const Graph& g, bool override_minor_check) {
  if (!override_minor_check && has_k5_minor(g))
    throw ModelError("graph has a K5 minor; edge and cycle inequalities do not describe its cut polytope");
}

std::vector<std::size_t> cycle_edges(const Graph& g, const std::vector<int>& cyc) {
  std::vector<std::size_t> es;
  for (std::size_t i = 0; i < cyc.size(); ++i) es.push_back(*g.edge_index(cyc[i], cyc[(i + 1) % cyc.size()]));
  return es;
}

// x(C \ F) - x(F) + |F| - 1 >= 0 for the odd subset F of cycle edges given by `odd`.
AffineInequality cycle_form(std::size_t m, const std::vector<std::size_t>& es, std::uint64_t odd) {
  AffineInequality q;
  q.a.assign(m, 0);
  q.a0 = std::popcount(odd) - 1;
  for (std::size_t i = 0; i < es.size(); ++i) q.a[es[i]] = ((odd >> i) & 1U) ? -1 : 1;
  return q;
}

std::vector<std::size_t> edges_outside_triangles(const Graph& g) {
  const auto tri = edges_in_triangles(g);
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!std::binary_search(tri.begin(), tri.end(), e)) out.push_back(e);
  return out;
}

}  // namespace

std::vector<AffineInequality> k5free_facets(const Graph& g, bool override_minor_check) {
  require_k5free(g, override_minor_check);
  const std::size_t m = g.num_edges();
  std::vector<AffineInequality> out;
  for (auto e : edges_outside_triangles(g)) {
    AffineInequality lo, hi;
    lo.a.assign(m, 0);
    lo.a[e] = 1;
    hi.a.assign(m, 0);
    hi.a0 = 1;
    hi.a[e] = -1;
    out.push_back(std::move(lo));
    out.push_back(std::move(hi));
  }
  for (const auto& cyc : chordless_cycles(g, g.num_vertices())) {
    const auto es = cycle_edges(g, cyc);
    const std::uint64_t full = std::uint64_t{1} << es.size();
    for (std::uint64_t odd = 1; odd < full; ++odd)
      if (std::popcount(odd) % 2 == 1) out.push_back(cycle_form(m, es, odd));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt k5free_count(const Graph& g, bool override_minor_check) {
  require_k5free(g, override_minor_check);
  BigInt total = static_cast<unsigned long>(2 * edges_outside_triangles(g).size());
  for (const auto& cyc : chordless_cycles(g, g.num_vertices())) {
    BigInt forms;
    mpz_ui_pow_ui(forms.get_mpz_t(), 2, cyc.size() - 1);
    total += forms;
  }
  return total;
}

BigInt count_tight_cuts(const Graph& g, const AffineInequality& q) {
  const int n = g.num_vertices();
  std::vector<std::size_t> support;
  std::uint64_t verts = 0;
  std::vector<int> deg(n, 0);
  for (std::size_t e = 0; e < q.a.size(); ++e) {
    if (q.a[e] == 0) continue;
    support.push_back(e);
    const auto [u, v] = g.edges()[e];
    verts |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    ++deg[u];
    ++deg[v];
  }
  const int k = std::popcount(verts);
  BigInt scale;
  bool is_cycle = support.size() >= 3 && static_cast<std::size_t>(k) == support.size();
  for (int v = 0; v < n && is_cycle; ++v)
    if ((verts >> v) & 1U) is_cycle = deg[v] == 2;
  if (is_cycle) {
    // 2-regular with as many edges as vertices: a single cycle iff connected.
    std::uint64_t seen = verts & (~verts + 1), frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) {
        const int v = std::countr_zero(f);
        for (auto e : support) {
          const auto [a, b] = g.edges()[e];
          if (a == v) next |= std::uint64_t{1} << b;
          if (b == v) next |= std::uint64_t{1} << a;
        }
      }
      frontier = next & ~seen;
      seen |= next;
    }
    is_cycle = seen == verts;
  }
  if (is_cycle) {
    // Cut patterns on a cycle are the edge subsets of even size; each pattern
    // comes from 2^{n-s} cuts.
    std::map<std::pair<int, std::int64_t>, BigInt> dp{{{0, q.a0}, BigInt(1)}};
    for (auto e : support) {
      std::map<std::pair<int, std::int64_t>, BigInt> next;
      for (const auto& [key, cnt] : dp) {
        next[key] += cnt;
        next[{key.first ^ 1, key.second + q.a[e]}] += cnt;
      }
      dp = std::move(next);
    }
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(n - k));
    auto it = dp.find({0, 0});
    return it == dp.end() ? BigInt(0) : it->second * scale;
  }
  if (k > 26) throw ModelError("count_tight_cuts: support too large");
  if (k == 0) {
    if (q.a0 != 0) return 0;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    return scale;
  }
  std::vector<int> vlist;
  for (int v = 0; v < n; ++v)
    if ((verts >> v) & 1U) vlist.push_back(v);
  std::uint64_t tight = 0;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << k); ++t) {
    std::uint64_t mask = 0;
    for (int i = 0; i < k; ++i)
      if ((t >> i) & 1U) mask |= std::uint64_t{1} << vlist[i];
    std::int64_t s = q.a0;
    for (auto e : support) {
      const auto [u, v] = g.edges()[e];
      if (((mask >> u) ^ (mask >> v)) & 1U) s += q.a[e];
    }
    if (s == 0) ++tight;
  }
  // subsets T of the support, times free vertices, halved for complements
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(n - k));
  BigInt r = BigInt(static_cast<unsigned long>(tight)) * scale;
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 2);
  return r;
}

IncidenceReport facet_incidence_formulas_check(const Graph& g) {
  IncidenceReport rep;
  const int n = g.num_vertices();
  const std::size_t m = g.num_edges();
  auto record = [&](const char* kind, std::size_t s, AffineInequality q, const BigInt& expected) {
    ++rep.checked;
    BigInt got = count_tight_cuts(g, q);
    if (got != expected) rep.mismatches.push_back({kind, s, std::move(q), got, expected});
  };
  BigInt edge_expected;
  mpz_ui_pow_ui(edge_expected.get_mpz_t(), 2, static_cast<unsigned long>(n - 2));
  for (auto e : edges_outside_triangles(g)) {
    AffineInequality lo, hi;
    lo.a.assign(m, 0);
    lo.a[e] = 1;
    hi.a.assign(m, 0);
    hi.a0 = 1;
    hi.a[e] = -1;
    record("edge", 0, lo, edge_expected);
    record("edge", 0, hi, edge_expected);
  }
  for (const auto& cyc : chordless_cycles(g, n)) {
    const auto es = cycle_edges(g, cyc);
    const std::size_t s = es.size();
    BigInt expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(n - static_cast<int>(s)));
    expected *= static_cast<unsigned long>(s);
    for (std::uint64_t odd = 1; odd < (std::uint64_t{1} << s); ++odd)
      if (std::popcount(odd) % 2 == 1) record("cycle", s, cycle_form(m, es, odd), expected);
  }
  return rep;
}

std::vector<AffineInequality> metric_generators(int n, Mode mode) {
  if (n < 3 || n > 8) throw ModelError("metric generators are provided for 3 <= n <= 8");
  return triangle_inequalities(catalog("K", std::vector<int>{n}), mode == Mode::kPolytope);
}

// ---------------------------------------------------------------------------
// Covariance map

CovarianceMap::CovarianceMap(int n, int m)
    : n_(n), m_(m), graph_(catalog("multipartite", std::vector<int>{1, n, m})) {
  if (n < 1 || m < 1) throw ModelError("covariance map needs nonempty parts");
  marginal_.assign(n + m + 1, -1);
  for (int i = 1; i <= n + m; ++i) marginal_[i] = static_cast<int>(*graph_.edge_index(0, i));
  pair_.assign(graph_.num_edges(), {-1, -1});
  for (int i = 1; i <= n; ++i)
    for (int j = n + 1; j <= n + m; ++j) pair_[*graph_.edge_index(i, j)] = {marginal_[i], marginal_[j]};
}

QVector CovarianceMap::point_to_corr(std::span<const std::int64_t> x) const {
  if (x.size() != dimension()) throw ModelError("covariance map: dimension mismatch");
  QVector p(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const auto [a, b] = pair_[k];
    if (a < 0) {
      p[k] = static_cast<long>(x[k]);
    } else {
      p[k] = Rational(static_cast<long>(x[a] + x[b] - x[k]), 2);
      p[k].canonicalize();
    }
  }
  return p;
}

QVector CovarianceMap::point_to_cut(const QVector& p) const {
  if (p.size() != dimension()) throw ModelError("covariance map: dimension mismatch");
  QVector x(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto [a, b] = pair_[k];
    x[k] = a < 0 ? p[k] : Rational(p[a] + p[b] - 2 * p[k]);
  }
  return x;
}

AffineInequality CovarianceMap::ineq_to_corr(const AffineInequality& q) const {
  if (q.a.size() != dimension()) throw ModelError("covariance map: dimension mismatch");
  AffineInequality r;
  r.a0 = q.a0;
  r.a.assign(q.a.size(), 0);
  for (std::size_t k = 0; k < q.a.size(); ++k) {
    const auto [a, b] = pair_[k];
    if (a < 0) {
      r.a[k] += q.a[k];
    } else {
      r.a[a] += q.a[k];
      r.a[b] += q.a[k];
      r.a[k] = -2 * q.a[k];
    }
  }
  return r.normalize();
}

AffineInequality CovarianceMap::ineq_to_cut(const AffineInequality& q) const {
  if (q.a.size() != dimension()) throw ModelError("covariance map: dimension mismatch");
  // scaled by 2 so that the product coefficients halve exactly
  AffineInequality r;
  r.a0 = 2 * q.a0;
  r.a.assign(q.a.size(), 0);
  for (std::size_t k = 0; k < q.a.size(); ++k) {
    const auto [a, b] = pair_[k];
    if (a < 0) {
      r.a[k] += 2 * q.a[k];
    } else {
      r.a[k] = -q.a[k];
      r.a[a] += q.a[k];
      r.a[b] += q.a[k];
    }
  }
  return r.normalize();
}

// ---------------------------------------------------------------------------
// cdd-style files

namespace {

std::vector<std::vector<Rational>> read_cdd_block(std::istream& in, const std::string& header) {
  std::string line;
  bool seen_header = false;
  while (std::getline(in, line)) {
    if (line.rfind(header, 0) == 0) seen_header = true;
    if (line.rfind("begin", 0) == 0) break;
  }
  if (!seen_header || !in) throw ModelError("missing '" + header + "' / 'begin'");
  std::size_t rows = 0, cols = 0;
  std::string kind;
  if (!std::getline(in, line)) throw ModelError("missing size line");
  std::istringstream sz(line);
  if (!(sz >> rows >> cols >> kind)) throw ModelError("malformed size line: " + line);
  if (kind != "rational" && kind != "integer") throw ModelError("unsupported number type: " + kind);
  std::vector<std::vector<Rational>> out;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!std::getline(in, line)) throw ModelError("truncated file");
    std::istringstream ls(line);
    std::vector<Rational> row;
    std::string tok;
    while (ls >> tok) {
      Rational v;
      if (v.set_str(tok, 10) != 0) throw ModelError("bad number: " + tok);
      v.canonicalize();
      row.push_back(v);
    }
    if (row.size() != cols) throw ModelError("row has wrong length");
    out.push_back(std::move(row));
  }
  if (!std::getline(in, line) || line.rfind("end", 0) != 0) throw ModelError("missing 'end'");
  return out;
}

}  // namespace

void write_h(std::ostream& out, const std::vector<AffineInequality>& rows, std::size_t dim) {
  out << "H-representation\nbegin\n" << rows.size() << ' ' << dim + 1 << " rational\n";
  for (const auto& q : rows) out << to_string(q) << '\n';
  out << "end\n";
}

std::vector<AffineInequality> read_h(std::istream& in) {
  std::vector<AffineInequality> out;
  for (const auto& row : read_cdd_block(in, "H-representation")) {
    const auto ints = primitive_integer_vector(row);
    AffineInequality q;
    q.a0 = ints[0];
    q.a.assign(ints.begin() + 1, ints.end());
    out.push_back(std::move(q));
  }
  return out;
}

void write_v(std::ostream& out, const IntMatrix& points, bool rays) {
  out << "V-representation\nbegin\n" << points.rows() << ' ' << points.cols() + 1 << " rational\n";
  for (std::size_t i = 0; i < points.rows(); ++i) {
    out << (rays ? 0 : 1);
    for (auto x : points.row(i)) out << ' ' << x;
    out << '\n';
  }
  out << "end\n";
}

IntMatrix read_v(std::istream& in) {
  IntMatrix out;
  for (const auto& row : read_cdd_block(in, "V-representation")) {
    std::vector<std::int64_t> r;
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (row[j].get_den() != 1 || !row[j].get_num().fits_slong_p()) throw ModelError("V-file entries must be 64-bit integers");
      r.push_back(row[j].get_num().get_si());
    }
    out.append_row(r);
  }
  return out;
}

}  // namespace cutpoly
