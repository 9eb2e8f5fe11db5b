#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutpoly/exactlin.hpp"
#include "cutpoly/graphs.hpp"
#include "cutpoly/groups.hpp"

namespace cutpoly {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// δ_S for the side S not containing vertex 0. Vertex v >= 1 is bit v-1 of
/// the cut index; the mask has vertex v at bit v.
struct CutVector {
  std::uint64_t subset = 0;
  std::vector<std::uint8_t> coords;

  std::uint64_t index() const { return subset >> 1; }
  bool operator==(const CutVector&) const = default;
};

CutVector make_cut(const Graph& g, std::uint64_t subset_mask);

/// a_0 + a·x >= 0 over edge coordinates.
struct AffineInequality {
  std::int64_t a0 = 0;
  std::vector<std::int64_t> a;

  /// Divides by the gcd of (a_0, a). Orientation is never changed.
  AffineInequality& normalize();
  std::int64_t evaluate(std::span<const std::uint8_t> x) const;
  std::int64_t evaluate(std::span<const std::int64_t> x) const;
  bool is_zero() const;

  auto operator<=>(const AffineInequality&) const = default;
  bool operator==(const AffineInequality&) const = default;
};

std::string to_string(const AffineInequality& q);

enum class Mode { kPolytope, kCone };

/// CUTP(G) or CUT(G). Points are indexed in cut-index order; in cone mode δ_∅
/// is dropped so point p is cut p+1.
class CutPolytope {
 public:
  CutPolytope(Graph g, Mode mode);

  const Graph& graph() const { return graph_; }
  Mode mode() const { return mode_; }
  std::size_t num_points() const { return points_.rows(); }
  std::size_t dimension() const { return graph_.num_edges(); }
  /// 0/1 coordinates, one row per point.
  const IntMatrix& points() const { return points_; }
  /// Rows (1, x) for the polytope and x for the cone; every facet is a
  /// linear functional nonnegative on all rows.
  const IntMatrix& homogeneous() const { return homogeneous_; }
  std::uint64_t cut_index(std::size_t point) const { return mode_ == Mode::kCone ? point + 1 : point; }
  std::uint64_t subset_mask(std::size_t point) const { return cut_index(point) << 1; }

  /// Functional over homogeneous coordinates <-> inequality.
  AffineInequality to_inequality(std::span<const std::int64_t> functional) const;
  std::vector<std::int64_t> to_functional(const AffineInequality& q) const;

  IndexSet incidence(const AffineInequality& q) const;
  bool is_valid(const AffineInequality& q) const;

 private:
  Graph graph_;
  Mode mode_;
  IntMatrix points_;
  IntMatrix homogeneous_;
};

/// x'_{perm[e]} = flip[e] ? 1 - x_e : x_e
struct SignedEdgeMap {
  std::vector<std::uint32_t> perm;
  std::vector<std::uint8_t> flip;
};

AffineInequality apply(const SignedEdgeMap& m, const AffineInequality& q);
std::vector<std::int64_t> apply(const SignedEdgeMap& m, std::span<const std::int64_t> x);

struct SymmetryAction {
  PermGroup point_action;  // on point indices of the CutPolytope
  std::vector<SignedEdgeMap> coord_action;  // parallel to point_action generators
  BigInt aut_order;
};

/// Aut(G) together with all switchings for the polytope; Aut(G) alone for the
/// cone, where switching does not fix the apex.
SymmetryAction restricted_group(const Graph& g, Mode mode = Mode::kPolytope);
inline SymmetryAction restricted_group(const CutPolytope& p) { return restricted_group(p.graph(), p.mode()); }

std::vector<CutVector> enumerate_cuts(const Graph& g);

AffineInequality switch_inequality(const AffineInequality& q, const CutVector& u);

/// Per triangle {i,j,k}: the three homogeneous triangle inequalities, then the
/// perimeter inequality.
std::vector<AffineInequality> triangle_inequalities(const Graph& g, bool with_perimeter = true);

/// -Σ_{i<j} b_i b_j x_ij >= 0 over K_n, n = |b|; requires Σ b_i = 1.
AffineInequality hypermetric_inequality(std::span<const int> b);

/// Edge inequalities of edges in no triangle and all 2^{s-1} forms of every
/// chordless-cycle inequality; sorted, deduplicated. Throws ModelError on a
/// graph with a K5 minor unless `override_minor_check`.
std::vector<AffineInequality> k5free_facets(const Graph& g, bool override_minor_check = false);

/// Size of the k5free_facets output without materializing it.
BigInt k5free_count(const Graph& g, bool override_minor_check = false);

struct IncidenceCheck {
  std::string kind;  // "edge" or "cycle"
  std::size_t cycle_length = 0;
  AffineInequality ineq;
  BigInt incidence;
  BigInt expected;
};

struct IncidenceReport {
  std::size_t checked = 0;
  std::vector<IncidenceCheck> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Counts cuts tight on each edge/cycle facet by enumerating cut patterns on
/// the facet's support and compares with 2^{|V|-2} and s·2^{|V|-s}.
IncidenceReport facet_incidence_formulas_check(const Graph& g);

/// Number of cuts of g on which q is tight, from its support only.
BigInt count_tight_cuts(const Graph& g, const AffineInequality& q);

/// MET_n (cone) or METP_n (polytope) facets over K_n.
std::vector<AffineInequality> metric_generators(int n, Mode mode);

/// CUTP(K_{1,n,m}) with apex 0 <-> CORP(K_{n,m}). Coordinates on both sides
/// follow the edge order of K_{1,n,m}: apex edges (marginals) first, then the
/// (i,j) products in lexicographic order.
class CovarianceMap {
 public:
  CovarianceMap(int n, int m);
  const Graph& graph() const { return graph_; }
  std::size_t dimension() const { return graph_.num_edges(); }

  QVector point_to_corr(std::span<const std::int64_t> x) const;
  QVector point_to_cut(const QVector& p) const;
  AffineInequality ineq_to_corr(const AffineInequality& q) const;
  AffineInequality ineq_to_cut(const AffineInequality& q) const;

 private:
  int n_, m_;
  Graph graph_;
  std::vector<int> marginal_;             // per vertex 1..n+m, coordinate of x_{0i}
  std::vector<std::pair<int, int>> pair_;  // per product coordinate, its marginal coordinates
};

void write_h(std::ostream& out, const std::vector<AffineInequality>& rows, std::size_t dim);
std::vector<AffineInequality> read_h(std::istream& in);
/// cdd-style rows "1 x_1 ... x_m" for points or "0 x_1 ... x_m" for rays.
void write_v(std::ostream& out, const IntMatrix& points, bool rays = false);
IntMatrix read_v(std::istream& in);

}  // namespace cutpoly
