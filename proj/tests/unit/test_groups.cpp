#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cutpoly/groups.hpp"

using namespace cutpoly;

namespace {

Perm cycle_perm(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>((i + 1) % n);
  return p;
}

Perm transposition(std::size_t n, std::uint32_t a, std::uint32_t b) {
  Perm p = identity_perm(n);
  std::swap(p[a], p[b]);
  return p;
}

PermGroup symmetric(std::size_t n) { return PermGroup(n, {cycle_perm(n), transposition(n, 0, 1)}); }

// Closure of the generators by BFS; the oracle for small groups.
std::set<Perm> all_elements(const PermGroup& g) {
  std::set<Perm> seen{identity_perm(g.degree())};
  std::vector<Perm> todo{identity_perm(g.degree())};
  while (!todo.empty()) {
    Perm p = todo.back();
    todo.pop_back();
    for (const auto& s : g.generators()) {
      Perm q = compose(p, s);
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return seen;
}

// Rubik-like test group: product of wreath structures on 12 points.
PermGroup sample_group() {
  const std::size_t n = 12;
  Perm a = identity_perm(n), b = identity_perm(n), c = identity_perm(n);
  a = {1, 2, 3, 0, 4, 5, 6, 7, 8, 9, 10, 11};
  b = {0, 1, 2, 3, 5, 6, 7, 4, 8, 9, 10, 11};
  c = {4, 5, 6, 7, 0, 1, 2, 3, 9, 8, 10, 11};
  return PermGroup(n, {a, b, c});
}

}  // namespace

TEST_CASE("permutation basics") {
  const Perm p{2, 0, 1}, q{1, 0, 2};
  CHECK(compose(p, inverse(p)) == identity_perm(3));
  CHECK(compose(p, q) == Perm{2, 1, 0});
  CHECK(cutpoly::apply(p, IndexSet{0, 1}) == IndexSet{0, 2});
  CHECK_THROWS_AS(PermGroup(3, {Perm{0, 0, 1}}), GroupError);
}

TEST_CASE("orders of known groups") {
  CHECK(symmetric(5).order() == 120);
  CHECK(symmetric(8).order() == 40320);
  CHECK(PermGroup(7, {cycle_perm(7)}).order() == 7);
  CHECK(PermGroup(4, {}).order() == 1);
  CHECK(symmetric(12).order() == 479001600);
}

TEST_CASE("order and membership against the element closure") {
  const PermGroup g = sample_group();
  const auto elems = all_elements(g);
  CHECK(g.order() == static_cast<unsigned long>(elems.size()));
  std::mt19937_64 rng(3);
  int outside = 0;
  for (int t = 0; t < 300; ++t) {
    Perm p = identity_perm(12);
    std::shuffle(p.begin(), p.end(), rng);
    const bool in = elems.count(p) > 0;
    CHECK(g.contains(p) == in);
    outside += !in;
  }
  CHECK(outside > 0);
  for (const auto& e : elems) CHECK(g.contains(e));
}

TEST_CASE("randomized chain on a large degree gives the exact order") {
  // direct product of two cyclic groups acting on 1100 + 7 points
  const std::size_t n = 1107;
  Perm a = identity_perm(n), b = identity_perm(n);
  for (std::uint32_t i = 0; i < 1100; ++i) a[i] = (i + 1) % 1100;
  for (std::uint32_t i = 0; i < 7; ++i) b[1100 + i] = 1100 + (i + 1) % 7;
  CHECK(PermGroup(n, {a, b}).order() == 7700);
}

TEST_CASE("minimal image equals the minimum over the enumerated orbit") {
  const PermGroup g = sample_group();
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    IndexSet s;
    for (std::uint32_t i = 0; i < 12; ++i)
      if (rng() % 2) s.push_back(i);
    if (s.empty()) s.push_back(static_cast<std::uint32_t>(rng() % 12));
    const auto orbit = g.enumerate_orbit(s, 1 << 20);
    CHECK(g.minimal_image(s) == *std::min_element(orbit.begin(), orbit.end()));
    const auto info = g.orbit_of_set(s);
    CHECK(info.size == static_cast<unsigned long>(orbit.size()));
    // Lagrange: |orbit| * |stabilizer| = |G|
    CHECK(info.size * g.set_stabilizer(s).order() == g.order());
  }
}

TEST_CASE("candidate cap falls back to orbit enumeration") {
  const PermGroup g = symmetric(10);
  GroupLimits tight;
  tight.max_candidates = 2;
  const IndexSet s{3, 5, 9};
  CHECK(g.minimal_image(s, tight) == IndexSet{0, 1, 2});
  CHECK(g.minimal_image(s) == IndexSet{0, 1, 2});
}

TEST_CASE("set stabilizer elements fix the set") {
  const PermGroup g = symmetric(7);
  const IndexSet s{1, 4, 6};
  const PermGroup h = g.set_stabilizer(s);
  CHECK(h.order() == 144);
  for (const auto& p : h.generators()) CHECK(cutpoly::apply(p, s) == s);
}

TEST_CASE("point orbits and restricted actions") {
  const PermGroup g = sample_group();
  const auto orbits = g.point_orbits();
  CHECK(orbits.size() == 4);
  const PermGroup r = g.action_on(IndexSet{8, 9});
  CHECK(r.order() == 2);
  CHECK_THROWS_AS(g.action_on(IndexSet{0, 8}), GroupError);
}

TEST_CASE("SplitMix64 reference stream") {
  SplitMix64 rng(1234567);
  // published reference values for seed 1234567
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
}
