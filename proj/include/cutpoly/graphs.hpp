#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cutpoly {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Undirected simple graph on at most 64 vertices. The edge list is kept sorted
// lexicographically with u < v; an edge's position in that list is its
// coordinate in the edge space.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  std::optional<std::size_t> edge_index(int u, int v) const;
  bool connected() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> edge_id_;
};

struct VertexPermutation {
  std::vector<int> images;
  bool operator==(const VertexPermutation&) const = default;
};

/// Named graphs with frozen vertex numberings; see README for the conventions.
Graph catalog(std::string_view name, std::span<const int> params = {});

/// Adds an apex adjacent to every vertex of h; the apex gets the last index.
Graph pyramid(const Graph& h);

/// Graph spec mini-language: "K6", "K3,3,3", "Km+2-Km:m=3", "K7-K2", "Prism7",
/// "APrism6", "Moebius14", "Cube", "Pyr(Prism5)", "P5", "C6", "file:PATH", ...
Graph parse_graph_spec(std::string_view spec);

/// Generators of Aut(g) (identity excluded).
std::vector<VertexPermutation> automorphism_group(const Graph& g);

/// True if the vertex map sends edges to edges bijectively.
bool is_automorphism(const Graph& g, const VertexPermutation& p);

Graph relabel(const Graph& g, const VertexPermutation& p);

/// Chordless cycles of length 3..max_len, each once up to rotation and
/// reflection. A cycle starts at its smallest vertex and its second vertex is
/// smaller than its last.
std::vector<std::vector<int>> chordless_cycles(const Graph& g, int max_len);

bool has_k5_minor(const Graph& g);

std::vector<std::size_t> edges_in_triangles(const Graph& g);

/// Plain text: "n m" then m lines "u v". Disconnected graphs are rejected.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace cutpoly
