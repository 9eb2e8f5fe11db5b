#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cutpoly/cutmodel.hpp"
#include "cutpoly/dualdesc.hpp"
#include "cutpoly/groups.hpp"

namespace cutpoly {

enum class Termination { kExhaustive, kBalinski };
std::string to_string(Termination t);
Termination parse_termination(const std::string& s);

struct AdmConfig {
  Termination termination = Termination::kExhaustive;
  /// 0 means 4 * dimension of the polytope at hand.
  std::size_t recursion_threshold = 0;
  int max_depth = 2;
  unsigned workers = 1;
  /// Resource guards; 0 disables.
  std::size_t max_orbits = 0;
  std::size_t max_incidence = 0;
  std::string checkpoint_path;
  std::string resume_path;
  /// Stop after this many orbits were treated in this run and leave a
  /// checkpoint; 0 disables. Used to split long runs.
  std::size_t stop_after = 0;
  std::uint64_t seed = 0;
  /// Keep the canonical keys of the neighbours of every treated orbit.
  bool record_neighbors = false;
  /// Free-form description stored in the checkpoint (graph, mode).
  std::string context;
  DDLimits dd;
  GroupLimits group;
  std::function<void(const std::string&)> log;
};

enum class OrbitStatus { kUntreated, kTreated };

struct OrbitRecord {
  FacetCertificate representative;
  IndexSet canonical_key;
  BigInt orbit_size;
  std::size_t incidence_count = 0;
  OrbitStatus status = OrbitStatus::kUntreated;
  std::vector<IndexSet> neighbor_keys;
};

struct AdmResult {
  /// Ordered by (incidence_count, canonical_key).
  std::vector<OrbitRecord> records;
  BigInt total_facets;
  BigInt group_order;
  /// "exhaustive", "balinski-i", "balinski-ii", or "stopped" for a run cut
  /// short by stop_after.
  std::string criterion;
  bool complete = false;
  std::size_t treated = 0;
};

enum class Policy { kDirect, kRecurse };

/// Recurse iff the incidence exceeds the threshold, the stabilizer is
/// nontrivial and depth < max_depth.
Policy recursive_policy(std::size_t incidence_count, bool stabilizer_nontrivial, int depth, std::size_t dimension,
                        const AdmConfig& cfg);

struct BalinskiVerdict {
  bool complete = false;
  std::string criterion;  // "", "empty", "balinski-i" or "balinski-ii"
};

/// Some orbit is treated and the untreated orbits either number at most
/// dimension - 1 facets, or all contain some common point orbit of `group`.
BalinskiVerdict balinski_complete(const std::vector<OrbitRecord>& records, const PermGroup& group,
                                  std::size_t dimension);

/// Facet orbits of p under a group acting on its rows.
AdmResult adjacency_decomposition(const VPolytope& p, const PermGroup& group, const AdmConfig& cfg,
                                  std::optional<FacetCertificate> start = std::nullopt, int depth = 0);

/// A facet of the cut polytope from an edge or a chordless-cycle inequality.
FacetCertificate initial_cut_facet(const CutPolytope& c, const VPolytope& p);

/// Runs the decomposition under the restricted group of the cut polytope.
AdmResult adjacency_decomposition(const CutPolytope& c, const AdmConfig& cfg);

/// The facet with the given incidence set.
FacetCertificate facet_from_incidence(const VPolytope& p, const IndexSet& incidence);

/// Orbit records of a group-closed inequality list (from direct DD or a
/// generator), canonicalized as in the decomposition.
AdmResult group_into_orbits(const CutPolytope& c, const SymmetryAction& action,
                            const std::vector<AffineInequality>& inequalities, const GroupLimits& limits = {});

/// All inequalities in the orbits of the records, sorted.
std::vector<AffineInequality> expand_orbits(const CutPolytope& c, const SymmetryAction& action,
                                            const std::vector<OrbitRecord>& records);

struct SampleConfig {
  std::size_t steps = 1000;
  std::uint64_t seed = 1;
  DDLimits dd;
};

struct SampleResult {
  /// Visits per incidence count.
  std::map<std::size_t, std::size_t> histogram;
  /// First facet seen per incidence count.
  std::map<std::size_t, FacetCertificate> representatives;
  std::size_t distinct_keys = 0;
};

/// Random walk on the ridge graph modulo the group.
SampleResult sample_facets(const VPolytope& p, const PermGroup& group, const FacetCertificate& start,
                           const SampleConfig& cfg);
SampleResult sample_facets(const CutPolytope& c, const SampleConfig& cfg);

struct TriangleWitness {
  IndexSet orbit_key;
  std::optional<IndexSet> triangle_key;
};

struct TriangleAdjacency {
  bool holds = false;
  std::vector<TriangleWitness> witnesses;
};

/// For every orbit, searches its neighbours for a switched triangle facet.
/// Neighbours missing from the records are recomputed.
TriangleAdjacency check_triangle_adjacency(const CutPolytope& c, const std::vector<OrbitRecord>& records,
                                           const DDLimits& limits = {});

/// "hash orbit_size incidence a_0 a_1 ... a_m" per record.
void write_orbit_report(std::ostream& out, const CutPolytope& c, const AdmResult& result);

struct Checkpoint {
  std::uint64_t fingerprint = 0;
  std::size_t width = 0;
  std::size_t num_rows = 0;
  BigInt group_order;
  Termination termination = Termination::kExhaustive;
  std::size_t recursion_threshold = 0;
  int max_depth = 2;
  std::uint64_t seed = 0;
  std::string context;
  std::vector<OrbitRecord> records;  // sorted by canonical key
};

std::uint64_t fingerprint(const VPolytope& p, const PermGroup& group);
void write_checkpoint(std::ostream& out, const Checkpoint& cp);
/// Throws std::runtime_error naming the problem for empty, truncated or
/// version-mismatched input.
Checkpoint read_checkpoint(std::istream& in);

}  // namespace cutpoly
