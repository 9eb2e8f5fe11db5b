#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutpoly/cutmodel.hpp"
#include "cutpoly/exactlin.hpp"
#include "cutpoly/groups.hpp"

namespace cutpoly {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear functional f with f·r >= 0 on every homogeneous row r.
using Functional = std::vector<std::int64_t>;

/// A full-dimensional polytope or pointed cone given by homogeneous rows:
/// (1, x) per point for a polytope, the ray itself for a cone.
class VPolytope {
 public:
  VPolytope() = default;
  static VPolytope from_points(const IntMatrix& points);
  static VPolytope from_rays(const IntMatrix& rays);
  static VPolytope from_homogeneous(IntMatrix rows, bool cone);
  static VPolytope from_cut_polytope(const CutPolytope& p);

  const IntMatrix& rows() const { return rows_; }
  std::size_t num_rows() const { return rows_.rows(); }
  /// Length of a functional.
  std::size_t width() const { return rows_.cols(); }
  bool cone() const { return cone_; }
  /// Dimension of the polytope (width - 1), or of a cross-section of the cone.
  std::size_t dimension() const { return width() - 1; }

 private:
  IntMatrix rows_;
  bool cone_ = false;
};

struct FacetCertificate {
  Functional functional;
  IndexSet incidence;
  bool operator==(const FacetCertificate&) const = default;
};

enum class FacetFailure { kNone, kNotValid, kNotSupporting, kLowRank };
std::string to_string(FacetFailure f);

struct FacetCheck {
  FacetFailure failure = FacetFailure::kNone;
  FacetCertificate certificate;
  bool ok() const { return failure == FacetFailure::kNone; }
};

struct DDLimits {
  std::size_t max_rays = 4'000'000;
  std::size_t max_rows = 20'000;
};

/// Extreme rays of the pointed cone {x : A x >= 0}, as primitive integer
/// vectors in lexicographic order, with the rows of A tight on each ray.
struct ExtremeRays {
  std::vector<Functional> rays;
  std::vector<IndexSet> tight;
};
ExtremeRays extreme_rays(const IntMatrix& constraints, const DDLimits& limits = {});

/// All facets, sorted by functional.
std::vector<FacetCertificate> dual_description(const VPolytope& p, const DDLimits& limits = {});

FacetCheck is_facet(const VPolytope& p, std::span<const std::int64_t> functional);
IndexSet incidence(const VPolytope& p, std::span<const std::int64_t> functional);

/// Rotation of `ridge` (nonnegative on the rows of f, tight on a ridge of f)
/// around that ridge away from f: h = f(v)·g - g(v)·f for the point v minimizing
/// g(v)/f(v) over f(v) > 0.
FacetCertificate adjacent_facet(const VPolytope& p, const FacetCertificate& f, std::span<const std::int64_t> ridge);

/// Same rotation without checking that g cuts out a ridge of f.
FacetCertificate rotate_facet(const VPolytope& p, const FacetCertificate& f, std::span<const std::int64_t> g);

/// Rotates a valid supporting functional until its incidence spans a facet.
FacetCertificate promote_to_facet(const VPolytope& p, std::span<const std::int64_t> valid);

/// Some facet of p, reached by rotation from a strictly positive functional.
FacetCertificate initial_facet(const VPolytope& p);

/// The facet as a full-dimensional polytope of its own: the incident rows
/// restricted to a set of independent columns (column 0 first when possible).
struct FaceProjection {
  VPolytope face;
  std::vector<std::size_t> columns;
  IndexSet incidence;
};
FaceProjection project_face(const VPolytope& p, const FacetCertificate& f);
Functional lift_functional(const FaceProjection& proj, std::span<const std::int64_t> g, std::size_t width);

/// Facets adjacent to f, one per ridge, by direct dual description of the face.
std::vector<FacetCertificate> adjacent_facets(const VPolytope& p, const FacetCertificate& f, const DDLimits& limits = {});

struct RidgeGraph {
  std::vector<std::vector<std::uint32_t>> adjacency;
  bool connected = false;
  std::size_t diameter = 0;
};
/// Nodes are the given facets (or the subset `nodes`), edges join facets whose
/// common incidence has rank width - 2.
RidgeGraph ridge_graph(const VPolytope& p, const std::vector<FacetCertificate>& facets,
                       std::optional<std::vector<std::uint32_t>> nodes = std::nullopt);

/// Vertices (polytope) or extreme rays (cone) of {x : a_0 + a·x >= 0}.
std::vector<QVector> enumerate_vertices(const std::vector<AffineInequality>& rows, std::size_t dim, Mode mode,
                                        const DDLimits& limits = {});

}  // namespace cutpoly
