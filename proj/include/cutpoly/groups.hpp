#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "cutpoly/exactlin.hpp"

namespace cutpoly {

/// Permutation of {0..n-1} stored as its image array.
using Perm = std::vector<std::uint32_t>;

/// Strictly increasing list of indices.
using IndexSet = std::vector<std::uint32_t>;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Perm identity_perm(std::size_t n);
/// x -> then[first[x]]
Perm compose(const Perm& first, const Perm& then);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);
bool is_permutation(const Perm& p);

/// Sorted image of s under p.
IndexSet apply(const Perm& p, const IndexSet& s);

/// Polynomial hash of the sorted index sequence. Hashes are a prefilter only;
/// equal hashes are always confirmed by full comparison.
std::uint64_t hash_index_set(std::span<const std::uint32_t> s);

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const { return hash_index_set(s); }
};

struct OrbitInfo {
  BigInt size;
  IndexSet canonical;
};

struct GroupLimits {
  /// Maximum number of partial images kept by the minimal-image backtrack
  /// before falling back to explicit orbit enumeration.
  std::size_t max_candidates = std::size_t{1} << 16;
  /// Maximum orbit size enumerated explicitly.
  std::size_t max_orbit = std::size_t{1} << 20;
};

class PermGroup {
 public:
  PermGroup() = default;
  /// Identity generators are dropped; non-bijections are rejected.
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  bool is_trivial() const { return gens_.empty(); }

  /// Exact for degree <= 1024 (deterministic Schreier-Sims); above that a
  /// randomized Schreier-Sims is used.
  BigInt order() const;
  bool contains(const Perm& p) const;

  /// Lexicographically least set in the orbit of s.
  IndexSet minimal_image(const IndexSet& s, const GroupLimits& limits = {}) const;
  OrbitInfo orbit_of_set(const IndexSet& s, const GroupLimits& limits = {}) const;
  /// Breadth-first enumeration of the orbit of s; throws GroupError above `cap`.
  std::vector<IndexSet> enumerate_orbit(const IndexSet& s, std::size_t cap) const;

  PermGroup set_stabilizer(const IndexSet& s) const;
  std::vector<std::vector<std::uint32_t>> point_orbits() const;

  /// Action on an invariant subset, relabelled to 0..|subset|-1 in sorted order.
  PermGroup action_on(const IndexSet& invariant_subset) const;

  struct Chain;

 private:
  const Chain& natural_chain() const;

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  struct Lazy;
  std::shared_ptr<Lazy> lazy_;
};

/// SplitMix64: counter-based generator with explicit 64-bit seed; identical
/// streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace cutpoly
