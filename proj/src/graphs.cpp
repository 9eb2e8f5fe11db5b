#include "cutpoly/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace cutpoly {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw GraphError("graph must have between 0 and 64 vertices");
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw GraphError("edge endpoint out of range");
    if (e.u == e.v) throw GraphError("loops are not allowed");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw GraphError("duplicate edge");
  edges_ = std::move(edges);
  adj_.assign(n, 0);
  edge_id_.assign(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
    edge_id_[u * n + v] = edge_id_[v * n + u] = static_cast<int>(i);
  }
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::optional<std::size_t> Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  const int id = edge_id_[u * n_ + v];
  if (id < 0) return std::nullopt;
  return static_cast<std::size_t>(id);
}

bool Graph::connected() const {
  if (n_ == 0) return false;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n_;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

Graph require_connected(Graph g, std::string_view what) {
  if (g.num_edges() == 0 || !g.connected())
    throw GraphError(std::string(what) + " is empty or disconnected");
  return g;
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, std::move(e));
}

Graph complete_multipartite(std::span<const int> parts) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw GraphError("multipartite part sizes must be positive");
    part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  if (n > Graph::kMaxVertices) throw GraphError("too many vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) e.push_back({i, j});
  return Graph(n, std::move(e));
}

Graph cycle_graph(int m) {
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i) e.push_back({i, (i + 1) % m});
  return Graph(m, std::move(e));
}

Graph path_graph(int m) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < m; ++i) e.push_back({i, i + 1});
  return Graph(m, std::move(e));
}

Graph prism(int m) {
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i) {
    e.push_back({i, (i + 1) % m});
    e.push_back({m + i, m + (i + 1) % m});
    e.push_back({i, m + i});
  }
  return Graph(2 * m, std::move(e));
}

Graph antiprism(int m) {
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i) {
    e.push_back({i, (i + 1) % m});
    e.push_back({m + i, m + (i + 1) % m});
    e.push_back({i, m + i});
    e.push_back({i, m + (i + 1) % m});
  }
  return Graph(2 * m, std::move(e));
}

Graph moebius_ladder(int n_vertices) {
  if (n_vertices % 2 != 0) throw GraphError("Moebius ladder needs an even vertex count");
  const int m = n_vertices / 2;
  std::vector<Edge> e;
  for (int i = 0; i < n_vertices; ++i) e.push_back({i, (i + 1) % n_vertices});
  for (int i = 0; i < m; ++i) e.push_back({i, i + m});
  return Graph(n_vertices, std::move(e));
}

Graph generalized_petersen(int n, int k) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.push_back({i, (i + 1) % n});
    e.push_back({i, n + i});
    e.push_back({n + i, n + (i + k) % n});
  }
  return Graph(2 * n, std::move(e));
}

Graph cube_graph() {
  std::vector<Edge> e;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (v < (v ^ (1 << b))) e.push_back({v, v ^ (1 << b)});
  return Graph(8, std::move(e));
}

Graph icosahedron() {
  // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    const int up = 1 + i, up_next = 1 + (i + 1) % 5;
    const int lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    e.push_back({0, up});
    e.push_back({up, up_next});
    e.push_back({up, lo});
    e.push_back({up_next, lo});
    e.push_back({lo, lo_next});
    e.push_back({lo, 11});
  }
  return Graph(12, std::move(e));
}

Graph line_graph(const Graph& g) {
  std::vector<Edge> e;
  const auto& ge = g.edges();
  for (std::size_t i = 0; i < ge.size(); ++i)
    for (std::size_t j = i + 1; j < ge.size(); ++j)
      if (ge[i].u == ge[j].u || ge[i].u == ge[j].v || ge[i].v == ge[j].u || ge[i].v == ge[j].v)
        e.push_back({static_cast<int>(i), static_cast<int>(j)});
  return Graph(static_cast<int>(ge.size()), std::move(e));
}

Graph truncated_tetrahedron() {
  // vertex (v, w), v != w: the corner of the truncated vertex v pointing at w
  std::map<std::pair<int, int>, int> id;
  for (int v = 0; v < 4; ++v)
    for (int w = 0; w < 4; ++w)
      if (v != w) id.emplace(std::pair{v, w}, static_cast<int>(id.size()));
  std::vector<Edge> e;
  for (const auto& [vw, i] : id) {
    const auto [v, w] = vw;
    if (v < w) e.push_back({i, id.at({w, v})});
    for (int w2 = w + 1; w2 < 4; ++w2)
      if (w2 != v) e.push_back({i, id.at({v, w2})});
  }
  return Graph(12, std::move(e));
}

Graph heawood() {
  std::vector<Edge> e;
  for (int i = 0; i < 14; ++i) e.push_back({i, (i + 1) % 14});
  for (int i = 0; i < 14; i += 2) e.push_back({i, (i + 5) % 14});
  return Graph(14, std::move(e));
}

int param(std::span<const int> params, std::size_t i, std::string_view name) {
  if (params.size() <= i) throw GraphError(std::string(name) + ": missing parameter");
  return params[i];
}

}  // namespace

Graph pyramid(const Graph& h) {
  const int n = h.num_vertices();
  if (n + 1 > Graph::kMaxVertices) throw GraphError("too many vertices");
  std::vector<Edge> e = h.edges();
  for (int v = 0; v < n; ++v) e.push_back({v, n});
  return Graph(n + 1, std::move(e));
}

Graph catalog(std::string_view name, std::span<const int> params) {
  Graph g;
  if (name == "K") {
    const int n = param(params, 0, name);
    if (n < 2) throw GraphError("K_n needs n >= 2");
    g = complete_graph(n);
  } else if (name == "multipartite") {
    if (params.size() < 2) throw GraphError("multipartite graph needs at least two parts");
    g = complete_multipartite(params);
  } else if (name == "Km+i-Km") {
    // K_{m+i} minus a K_m: i universal vertices joined to an independent set of size m
    const int m = param(params, 0, name), i = param(params, 1, name);
    if (m < 1 || i < 1) throw GraphError("Km+i-Km needs m, i >= 1");
    std::vector<int> parts(i, 1);
    parts.push_back(m);
    g = complete_multipartite(parts);
  } else if (name == "Prism") {
    const int m = param(params, 0, name);
    if (m < 3) throw GraphError("Prism_m needs m >= 3");
    g = prism(m);
  } else if (name == "APrism") {
    const int m = param(params, 0, name);
    if (m < 3) throw GraphError("APrism_m needs m >= 3");
    g = antiprism(m);
  } else if (name == "Moebius") {
    const int n = param(params, 0, name);
    if (n < 6) throw GraphError("Moebius ladder needs at least 6 vertices");
    g = moebius_ladder(n);
  } else if (name == "Cube") {
    g = cube_graph();
  } else if (name == "Dodecahedron") {
    g = generalized_petersen(10, 2);
  } else if (name == "Icosahedron") {
    g = icosahedron();
  } else if (name == "Cuboctahedron") {
    g = line_graph(cube_graph());
  } else if (name == "TruncatedTetrahedron") {
    g = truncated_tetrahedron();
  } else if (name == "Petersen") {
    g = generalized_petersen(5, 2);
  } else if (name == "Heawood") {
    g = heawood();
  } else if (name == "P") {
    const int m = param(params, 0, name);
    if (m < 2) throw GraphError("P_m needs m >= 2");
    g = path_graph(m);
  } else if (name == "C") {
    const int m = param(params, 0, name);
    if (m < 3) throw GraphError("C_m needs m >= 3");
    g = cycle_graph(m);
  } else {
    throw GraphError("unknown graph name: " + std::string(name));
  }
  return require_connected(std::move(g), name);
}

namespace {

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const auto tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw GraphError("bad integer list: " + std::string(s));
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(s[i])) != std::tolower(static_cast<unsigned char>(prefix[i])))
      return false;
  return true;
}

bool equals_ci(std::string_view a, std::string_view b) {
  return a.size() == b.size() && starts_with_ci(a, b);
}

}  // namespace

Graph parse_graph_spec(std::string_view spec) {
  if (spec.starts_with("file:")) {
    const std::string path(spec.substr(5));
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open graph file " + path);
    return read_graph(in);
  }
  if (starts_with_ci(spec, "Pyr(") && spec.ends_with(")"))
    return pyramid(parse_graph_spec(spec.substr(4, spec.size() - 5)));

  static const std::pair<std::string_view, std::string_view> kNamed[] = {
      {"Cube", "Cube"},
      {"Dodecahedron", "Dodecahedron"},
      {"Icosahedron", "Icosahedron"},
      {"Cuboctahedron", "Cuboctahedron"},
      {"TruncatedTetrahedron", "TruncatedTetrahedron"},
      {"TrTetrahedron", "TruncatedTetrahedron"},
      {"Petersen", "Petersen"},
      {"Heawood", "Heawood"},
  };
  for (const auto& [alias, name] : kNamed)
    if (equals_ci(spec, alias)) return catalog(name);

  static const std::pair<std::string_view, std::string_view> kParam[] = {
      {"APrism", "APrism"}, {"Prism", "Prism"}, {"Moebius", "Moebius"}, {"M", "Moebius"},
      {"P", "P"},           {"C", "C"},
  };
  if (spec.starts_with("Km+")) {
    // Km+I-Km:m=M
    const auto dash = spec.find("-Km:m=");
    if (dash == std::string_view::npos) throw GraphError("expected Km+I-Km:m=M, got " + std::string(spec));
    const auto i = parse_int_list(spec.substr(3, dash - 3));
    const auto m = parse_int_list(spec.substr(dash + 6));
    if (i.size() != 1 || m.size() != 1) throw GraphError("bad spec " + std::string(spec));
    const int params[] = {m[0], i[0]};
    return catalog("Km+i-Km", params);
  }
  if (spec.size() >= 2 && spec[0] == 'K' && std::isdigit(static_cast<unsigned char>(spec[1]))) {
    const auto dash = spec.find("-K");
    if (dash != std::string_view::npos) {
      const auto big = parse_int_list(spec.substr(1, dash - 1));
      const auto small = parse_int_list(spec.substr(dash + 2));
      if (big.size() != 1 || small.size() != 1 || big[0] <= small[0])
        throw GraphError("expected KA-KB with A > B, got " + std::string(spec));
      const int params[] = {small[0], big[0] - small[0]};
      return catalog("Km+i-Km", params);
    }
    const auto nums = parse_int_list(spec.substr(1));
    if (nums.size() == 1) return catalog("K", nums);
    return catalog("multipartite", nums);
  }
  for (const auto& [prefix, name] : kParam) {
    if (spec.size() > prefix.size() && starts_with_ci(spec, prefix) &&
        std::isdigit(static_cast<unsigned char>(spec[prefix.size()]))) {
      const auto nums = parse_int_list(spec.substr(prefix.size()));
      return catalog(name, nums);
    }
  }
  throw GraphError("unrecognized graph spec: " + std::string(spec));
}

// ---------------------------------------------------------------------------
// Automorphisms: individualization + joint colour refinement

namespace {

// Colour refinement run on two copies of the same graph at once so that colour
// ids are comparable between the copies. Returns false if the copies' colour
// class sizes disagree.
bool refine_jointly(const Graph& g, std::vector<int>& ca, std::vector<int>& cb) {
  const int n = g.num_vertices();
  std::size_t ncolors = 0;
  {
    std::set<int> s(ca.begin(), ca.end());
    s.insert(cb.begin(), cb.end());
    ncolors = s.size();
  }
  while (true) {
    std::map<std::vector<int>, int> sig_id;
    std::vector<std::vector<int>> sa(n), sb(n);
    auto signature = [&](const std::vector<int>& c, int v) {
      std::vector<int> s{c[v]};
      std::vector<int> nb;
      for (std::uint64_t m = g.neighbors(v); m; m &= m - 1) nb.push_back(c[std::countr_zero(m)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      return s;
    };
    for (int v = 0; v < n; ++v) {
      sa[v] = signature(ca, v);
      sb[v] = signature(cb, v);
      sig_id.emplace(sa[v], 0);
      sig_id.emplace(sb[v], 0);
    }
    int next = 0;
    for (auto& [s, id] : sig_id) id = next++;
    for (int v = 0; v < n; ++v) {
      ca[v] = sig_id[sa[v]];
      cb[v] = sig_id[sb[v]];
    }
    std::vector<int> count(next, 0);
    for (int v = 0; v < n; ++v) {
      ++count[ca[v]];
      --count[cb[v]];
    }
    if (std::any_of(count.begin(), count.end(), [](int c) { return c != 0; })) return false;
    if (static_cast<std::size_t>(next) == ncolors) return true;
    ncolors = next;
  }
}

std::optional<VertexPermutation> search_isomorphism(const Graph& g, std::vector<int> ca, std::vector<int> cb) {
  if (!refine_jointly(g, ca, cb)) return std::nullopt;
  const int n = g.num_vertices();
  std::vector<int> size(n, 0);
  for (int v = 0; v < n; ++v) ++size[ca[v]];
  int target = -1;
  for (int v = 0; v < n && target < 0; ++v)
    if (size[ca[v]] > 1) target = v;
  if (target < 0) {
    VertexPermutation p;
    p.images.assign(n, -1);
    std::vector<int> where(n, -1);
    for (int v = 0; v < n; ++v) where[cb[v]] = v;
    for (int v = 0; v < n; ++v) p.images[v] = where[ca[v]];
    if (is_automorphism(g, p)) return p;
    return std::nullopt;
  }
  const int fresh = n;
  for (int w = 0; w < n; ++w) {
    if (cb[w] != ca[target]) continue;
    auto na = ca, nb = cb;
    na[target] = fresh;
    nb[w] = fresh;
    if (auto p = search_isomorphism(g, std::move(na), std::move(nb))) return p;
  }
  return std::nullopt;
}

std::vector<int> orbit_of(int point, const std::vector<VertexPermutation>& gens, int n) {
  std::vector<bool> seen(n, false);
  std::vector<int> orbit{point};
  seen[point] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : gens) {
      const int q = g.images[orbit[i]];
      if (!seen[q]) {
        seen[q] = true;
        orbit.push_back(q);
      }
    }
  return orbit;
}

}  // namespace

bool is_automorphism(const Graph& g, const VertexPermutation& p) {
  const int n = g.num_vertices();
  if (static_cast<int>(p.images.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : p.images) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (const auto& e : g.edges())
    if (!g.adjacent(p.images[e.u], p.images[e.v])) return false;
  return true;
}

Graph relabel(const Graph& g, const VertexPermutation& p) {
  std::vector<Edge> e;
  for (const auto& x : g.edges()) e.push_back({p.images[x.u], p.images[x.v]});
  return Graph(g.num_vertices(), std::move(e));
}

std::vector<VertexPermutation> automorphism_group(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 24) throw GraphError("automorphism_group: more than 24 vertices");
  std::vector<VertexPermutation> gens;
  // Strong generators relative to the base 0, 1, ..., n-1, found deepest level first.
  for (int k = n - 1; k >= 0; --k) {
    std::vector<int> base_a(n, 0), base_b(n, 0);
    for (int i = 0; i < k; ++i) base_a[i] = base_b[i] = i + 1;
    std::vector<VertexPermutation> level_gens;
    for (const auto& x : gens) {
      bool fixes = true;
      for (int i = 0; i < k && fixes; ++i) fixes = x.images[i] == i;
      if (fixes) level_gens.push_back(x);
    }
    auto orbit = orbit_of(k, level_gens, n);
    for (int w = k + 1; w < n; ++w) {
      if (std::find(orbit.begin(), orbit.end(), w) != orbit.end()) continue;
      auto ca = base_a, cb = base_b;
      ca[k] = k + 1;
      cb[w] = k + 1;
      if (auto p = search_isomorphism(g, std::move(ca), std::move(cb))) {
        gens.push_back(*p);
        level_gens.push_back(*p);
        orbit = orbit_of(k, level_gens, n);
      }
    }
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Chordless cycles

std::vector<std::vector<int>> chordless_cycles(const Graph& g, int max_len) {
  std::vector<std::vector<int>> out;
  const int n = g.num_vertices();
  std::vector<int> path;
  // path[0] = start s, path[1..k]; `blocked` = union of neighbourhoods of path[1..k-1]
  auto extend = [&](auto&& self, std::uint64_t forbidden_nbrs, std::uint64_t on_path) -> void {
    const int s = path.front();
    const int last = path.back();
    const int len = static_cast<int>(path.size());
    for (std::uint64_t m = g.neighbors(last); m; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (w <= s || ((on_path >> w) & 1U)) continue;
      if ((forbidden_nbrs >> w) & 1U) continue;  // chord to an interior vertex
      if (g.adjacent(w, s)) {
        if (len >= 2 && len + 1 <= max_len && path[1] < w) {
          auto c = path;
          c.push_back(w);
          out.push_back(std::move(c));
        }
        continue;
      }
      if (len + 1 >= max_len) continue;
      path.push_back(w);
      const std::uint64_t nf = len >= 2 ? forbidden_nbrs | g.neighbors(path[len - 1]) : forbidden_nbrs;
      self(self, nf, on_path | (std::uint64_t{1} << w));
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    for (std::uint64_t m = g.neighbors(s); m; m &= m - 1) {
      const int v1 = std::countr_zero(m);
      if (v1 <= s) continue;
      path = {s, v1};
      extend(extend, 0, (std::uint64_t{1} << s) | (std::uint64_t{1} << v1));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::size_t> edges_in_triangles(const Graph& g) {
  std::vector<std::size_t> out;
  const auto& e = g.edges();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (g.neighbors(e[i].u) & g.neighbors(e[i].v)) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// K5 minor test

namespace {

struct MinorState {
  std::vector<std::uint64_t> adj;
  std::uint64_t alive = 0;

  void remove(int v) {
    for (std::uint64_t m = adj[v]; m; m &= m - 1) adj[std::countr_zero(m)] &= ~(std::uint64_t{1} << v);
    adj[v] = 0;
    alive &= ~(std::uint64_t{1} << v);
  }
  // merges u into v
  void contract(int v, int u) {
    const std::uint64_t nu = adj[u] & ~(std::uint64_t{1} << v);
    remove(u);
    for (std::uint64_t m = nu; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      adj[w] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << w;
    }
  }
  int deg(int v) const { return std::popcount(adj[v]); }
};

void reduce(MinorState& s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t m = s.alive; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int d = s.deg(v);
      if (d <= 1) {
        s.remove(v);
        changed = true;
      } else if (d == 2) {
        s.contract(std::countr_zero(s.adj[v]), v);
        changed = true;
      }
    }
  }
}

bool has_k5_subgraph(const MinorState& s) {
  std::vector<int> cand;
  for (std::uint64_t m = s.alive; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    if (s.deg(v) >= 4) cand.push_back(v);
  }
  auto rec = [&](auto&& self, std::uint64_t common, int depth, std::size_t from) -> bool {
    if (depth == 5) return true;
    for (std::size_t i = from; i < cand.size(); ++i) {
      const int v = cand[i];
      if (!((common >> v) & 1U)) continue;
      if (self(self, common & s.adj[v], depth + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, s.alive, 0, 0);
}

bool is_planar(const MinorState& s) {
  std::vector<int> id(64, -1);
  int k = 0;
  for (std::uint64_t m = s.alive; m; m &= m - 1) id[std::countr_zero(m)] = k++;
  boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(k);
  for (std::uint64_t m = s.alive; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    for (std::uint64_t n = s.adj[v]; n; n &= n - 1) {
      const int w = std::countr_zero(n);
      if (v < w) boost::add_edge(id[v], id[w], bg);
    }
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

std::vector<std::uint64_t> compact_key(const MinorState& s) {
  std::vector<int> id(64, -1);
  int k = 0;
  for (std::uint64_t m = s.alive; m; m &= m - 1) id[std::countr_zero(m)] = k++;
  std::vector<std::uint64_t> key;
  for (std::uint64_t m = s.alive; m; m &= m - 1) {
    std::uint64_t row = 0;
    for (std::uint64_t n = s.adj[std::countr_zero(m)]; n; n &= n - 1) row |= std::uint64_t{1} << id[std::countr_zero(n)];
    key.push_back(row);
  }
  return key;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : k) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

bool k5_search(MinorState s, std::unordered_set<std::vector<std::uint64_t>, KeyHash>& refuted) {
  reduce(s);
  const int nv = std::popcount(s.alive);
  int ne = 0;
  for (std::uint64_t m = s.alive; m; m &= m - 1) ne += s.deg(std::countr_zero(m));
  ne /= 2;
  if (nv < 5 || ne < 10) return false;
  if (ne > 3 * nv - 6) return true;  // Mader: K5-minor-free graphs have at most 3n-6 edges
  if (has_k5_subgraph(s)) return true;
  if (is_planar(s)) return false;
  auto key = compact_key(s);
  if (refuted.contains(key)) return false;

  int v = -1;
  for (std::uint64_t m = s.alive; m; m &= m - 1) {
    const int x = std::countr_zero(m);
    if (v < 0 || s.deg(x) < s.deg(v)) v = x;
  }
  bool found = false;
  if (s.deg(v) == 3) {
    // v's branch set either is unused or contains a neighbour of v
    MinorState d = s;
    d.remove(v);
    found = k5_search(std::move(d), refuted);
    for (std::uint64_t m = s.adj[v]; m && !found; m &= m - 1) {
      MinorState c = s;
      c.contract(std::countr_zero(m), v);
      found = k5_search(std::move(c), refuted);
    }
  } else {
    const int u = std::countr_zero(s.adj[v]);
    MinorState c = s;
    c.contract(v, u);
    found = k5_search(std::move(c), refuted);
    if (!found) {
      MinorState d = s;
      d.adj[v] &= ~(std::uint64_t{1} << u);
      d.adj[u] &= ~(std::uint64_t{1} << v);
      found = k5_search(std::move(d), refuted);
    }
  }
  if (!found) refuted.insert(std::move(key));
  return found;
}

}  // namespace

bool has_k5_minor(const Graph& g) {
  if (g.num_vertices() > 20) throw GraphError("has_k5_minor: more than 20 vertices");
  MinorState s;
  s.adj.assign(64, 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    s.adj[v] = g.neighbors(v);
    s.alive |= std::uint64_t{1} << v;
  }
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> refuted;
  return k5_search(std::move(s), refuted);
}

// ---------------------------------------------------------------------------
// IO

Graph read_graph(std::istream& in) {
  int n = 0;
  long m = 0;
  if (!(in >> n >> m) || n <= 0 || m < 0) throw GraphError("graph file: bad header");
  std::vector<Edge> e;
  for (long i = 0; i < m; ++i) {
    Edge x;
    if (!(in >> x.u >> x.v)) throw GraphError("graph file: truncated edge list");
    e.push_back(x);
  }
  Graph g(n, std::move(e));
  if (!g.connected()) throw GraphError("graph file: graph is disconnected");
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace cutpoly
