#include "cutpoly/groups.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace cutpoly {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

Perm compose(const Perm& first, const Perm& then) {
  Perm r(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) r[x] = then[first[x]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<std::uint32_t>(x);
  return r;
}

bool is_identity(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != x) return false;
  return true;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> hit(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

IndexSet apply(const Perm& p, const IndexSet& s) {
  IndexSet r;
  r.reserve(s.size());
  for (auto x : s) r.push_back(p[x]);
  std::sort(r.begin(), r.end());
  return r;
}

std::uint64_t hash_index_set(std::span<const std::uint32_t> s) {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ s.size();
  for (auto x : s) h = h * 0x100000001B3ULL + (x + 1);
  h ^= h >> 29;
  h *= 0xBF58476D1CE4E5B9ULL;
  return h ^ (h >> 32);
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

// ---------------------------------------------------------------------------
// Stabilizer chains

namespace {

using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits& b, std::uint32_t i) { return (b[i >> 6] >> (i & 63)) & 1U; }
void set_bit(Bits& b, std::uint32_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

Bits to_bits(const IndexSet& s, std::size_t degree) {
  Bits b((degree + 63) / 64, 0);
  for (auto x : s) set_bit(b, x);
  return b;
}

IndexSet from_bits(const Bits& b) {
  IndexSet s;
  for (std::size_t w = 0; w < b.size(); ++w)
    for (std::uint64_t m = b[w]; m; m &= m - 1) s.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(m)));
  return s;
}

// Sets of equal size: the one containing the smallest point of the symmetric
// difference is lexicographically smaller as a sorted sequence.
bool bits_less(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] == b[w]) continue;
    const std::uint64_t d = a[w] ^ b[w];
    const std::uint64_t low = d & (~d + 1);
    return (a[w] & low) != 0;
  }
  return false;
}

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (auto w : b) {
      h ^= w;
      h *= 0x100000001B3ULL;
      h ^= h >> 31;
    }
    return h;
  }
};

enum class BaseRule { kNatural, kGreedy };

}  // namespace

struct PermGroup::Chain {
  struct Level {
    std::uint32_t base = 0;
    std::vector<std::uint32_t> gens;  // indices into Chain::gens
    std::vector<std::int32_t> label;  // -1 outside orbit, -2 base point, else generator index
    std::vector<std::uint32_t> orbit;
    std::size_t progress_point = 0;   // Schreier-Sims bookkeeping
    std::size_t progress_gen = 0;
    std::vector<Perm> inverse_transversal;  // parallel to orbit, filled for the natural chain
    Bits orbit_bits;
  };

  std::size_t degree = 0;
  std::vector<Perm> gens;
  std::vector<Perm> inv;
  std::vector<Level> levels;
  std::vector<std::size_t> original_moves;  // greedy base rule: generators moving each point

  void add_level(std::uint32_t base_point) {
    Level l;
    l.base = base_point;
    levels.push_back(std::move(l));
  }

  void init_orbit(Level& l) {
    l.label.assign(degree, -1);
    l.label[l.base] = -2;
    l.orbit = {l.base};
    extend_orbit(l, 0);
  }

  // BFS over the level generators starting from orbit positions >= `from`;
  // earlier orbit points are re-examined only under the generators added last.
  void extend_orbit(Level& l, std::size_t from) {
    for (std::size_t i = from; i < l.orbit.size(); ++i) {
      const auto p = l.orbit[i];
      for (auto gi : l.gens) {
        const auto q = gens[gi][p];
        if (l.label[q] == -1) {
          l.label[q] = static_cast<std::int32_t>(gi);
          l.orbit.push_back(q);
        }
      }
    }
  }

  void add_generator_to_level(std::size_t li, std::uint32_t gi) {
    Level& l = levels[li];
    l.gens.push_back(gi);
    l.progress_point = 0;
    l.progress_gen = 0;
    if (l.label.empty()) {
      init_orbit(l);
      return;
    }
    const std::size_t old = l.orbit.size();
    for (std::size_t i = 0; i < old; ++i) {
      const auto q = gens[gi][l.orbit[i]];
      if (l.label[q] == -1) {
        l.label[q] = static_cast<std::int32_t>(gi);
        l.orbit.push_back(q);
      }
    }
    extend_orbit(l, old);
  }

  std::size_t orbit_size(std::size_t li) const {
    return levels[li].label.empty() ? 1 : levels[li].orbit.size();
  }

  bool in_orbit(std::size_t li, std::uint32_t p) const {
    const Level& l = levels[li];
    if (l.label.empty()) return p == l.base;
    return l.label[p] != -1;
  }

  // u with base^u = p
  Perm transversal(std::size_t li, std::uint32_t p) const {
    const Level& l = levels[li];
    Perm u = identity_perm(degree);
    while (l.label.size() && l.label[p] != -2) {
      const auto gi = static_cast<std::size_t>(l.label[p]);
      u = compose(gens[gi], u);
      p = inv[gi][p];
    }
    return u;
  }

  // h := h * u_p^{-1}
  void divide_by_transversal(Perm& h, std::size_t li, std::uint32_t p) const {
    const Level& l = levels[li];
    if (!l.inverse_transversal.empty()) {
      const auto pos = static_cast<std::size_t>(
          std::find(l.orbit.begin(), l.orbit.end(), p) - l.orbit.begin());
      const Perm& ui = l.inverse_transversal[pos];
      for (auto& x : h) x = ui[x];
      return;
    }
    while (l.label[p] != -2) {
      const auto gi = static_cast<std::size_t>(l.label[p]);
      for (auto& x : h) x = inv[gi][x];
      p = inv[gi][p];
    }
  }

  std::pair<Perm, std::size_t> strip(Perm h, std::size_t from) const {
    for (std::size_t li = from; li < levels.size(); ++li) {
      const auto b = levels[li].base;
      const auto beta = h[b];
      if (beta == b) continue;
      if (!in_orbit(li, beta)) return {std::move(h), li};
      divide_by_transversal(h, li, beta);
    }
    return {std::move(h), levels.size()};
  }

  std::uint32_t pick_base_point(const Perm& y, BaseRule rule) const {
    std::uint32_t best = static_cast<std::uint32_t>(degree);
    std::size_t best_score = 0;
    for (std::uint32_t x = 0; x < degree; ++x) {
      if (y[x] == x) continue;
      if (rule == BaseRule::kNatural) return x;
      const std::size_t score = original_moves[x];
      if (best == degree || score > best_score) {
        best = x;
        best_score = score;
      }
    }
    return best;
  }

  std::uint32_t add_strong_generator(Perm y) {
    inv.push_back(inverse(y));
    gens.push_back(std::move(y));
    return static_cast<std::uint32_t>(gens.size() - 1);
  }

  // Inserts y (which fixes the bases of levels < j) into levels 0..j or from..j.
  void insert(Perm y, std::size_t from, std::size_t j, BaseRule rule) {
    if (j == levels.size()) add_level(pick_base_point(y, rule));
    const auto gi = add_strong_generator(std::move(y));
    for (std::size_t l = from; l <= j; ++l) add_generator_to_level(l, gi);
  }

  BigInt order() const {
    BigInt o = 1;
    for (std::size_t li = 0; li < levels.size(); ++li) o *= static_cast<unsigned long>(orbit_size(li));
    return o;
  }

  void build_deterministic(const std::vector<Perm>& input, BaseRule rule) {
    if (rule == BaseRule::kNatural) {
      for (std::uint32_t b = 0; b < degree; ++b) add_level(b);
    }
    for (const auto& g : input) {
      auto [y, j] = strip(g, 0);
      if (is_identity(y)) continue;
      insert(std::move(y), 0, j, rule);
    }
    // Verify Schreier generators level by level from the bottom up.
    std::size_t i = levels.size();
    while (i-- > 0) {
      bool restarted = false;
      Level* l = &levels[i];
      if (l->label.empty()) continue;
      for (; l->progress_point < l->orbit.size(); ++l->progress_point, l->progress_gen = 0) {
        const auto beta = l->orbit[l->progress_point];
        for (; l->progress_gen < l->gens.size(); ++l->progress_gen) {
          const auto gi = l->gens[l->progress_gen];
          const auto img = gens[gi][beta];
          if (l->label[img] == static_cast<std::int32_t>(gi) && inv[gi][img] == beta) continue;
          Perm h = compose(transversal(i, beta), gens[gi]);
          divide_by_transversal(h, i, img);
          auto [y, j] = strip(std::move(h), i + 1);
          if (is_identity(y)) continue;
          insert(std::move(y), i + 1, j, rule);
          i = j + 1;  // resume at level j
          restarted = true;
          break;
        }
        if (restarted) break;
      }
    }
  }

  void build_random(const std::vector<Perm>& input, std::uint64_t seed) {
    for (const auto& g : input) {
      auto [y, j] = strip(g, 0);
      if (is_identity(y)) continue;
      insert(std::move(y), 0, j, BaseRule::kGreedy);
    }
    if (input.empty()) return;
    SplitMix64 rng(seed);
    std::vector<Perm> slots = input;
    while (slots.size() < 10) slots.push_back(input[slots.size() % input.size()]);
    Perm acc = identity_perm(degree);
    auto step = [&]() {
      const std::size_t a = rng.below(slots.size());
      std::size_t b = rng.below(slots.size() - 1);
      if (b >= a) ++b;
      slots[a] = rng.below(2) ? compose(slots[a], slots[b]) : compose(slots[a], inverse(slots[b]));
      acc = compose(acc, slots[a]);
    };
    for (int w = 0; w < 50; ++w) step();
    int quiet = 0;
    while (quiet < 48) {
      step();
      auto [y, j] = strip(acc, 0);
      if (is_identity(y)) {
        ++quiet;
        continue;
      }
      quiet = 0;
      insert(std::move(y), 0, j, BaseRule::kGreedy);
    }
  }

  void cache_inverse_transversals() {
    for (std::size_t li = 0; li < levels.size(); ++li) {
      Level& l = levels[li];
      l.orbit_bits.assign((degree + 63) / 64, 0);
      if (l.label.empty()) {
        set_bit(l.orbit_bits, l.base);
        continue;
      }
      for (auto p : l.orbit) set_bit(l.orbit_bits, p);
      l.inverse_transversal.clear();
      for (auto p : l.orbit) l.inverse_transversal.push_back(inverse(transversal(li, p)));
    }
  }

  std::size_t last_nontrivial_level() const {
    std::size_t last = 0;
    bool any = false;
    for (std::size_t li = 0; li < levels.size(); ++li)
      if (orbit_size(li) > 1) {
        last = li;
        any = true;
      }
    return any ? last + 1 : 0;
  }
};

struct PermGroup::Lazy {
  std::once_flag natural_once;
  std::unique_ptr<Chain> natural;
  std::once_flag order_once;
  BigInt order;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), lazy_(std::make_shared<Lazy>()) {
  for (auto& g : generators) {
    if (g.size() != degree || !is_permutation(g)) throw GroupError("generator is not a permutation of the index set");
    if (!is_identity(g)) gens_.push_back(std::move(g));
  }
}

const PermGroup::Chain& PermGroup::natural_chain() const {
  std::call_once(lazy_->natural_once, [this] {
    auto c = std::make_unique<Chain>();
    c->degree = degree_;
    c->build_deterministic(gens_, BaseRule::kNatural);
    // trailing trivial levels carry no information
    c->levels.resize(c->last_nontrivial_level());
    c->cache_inverse_transversals();
    lazy_->natural = std::move(c);
  });
  return *lazy_->natural;
}

BigInt PermGroup::order() const {
  if (!lazy_) return 1;
  std::call_once(lazy_->order_once, [this] {
    Chain c;
    c.degree = degree_;
    c.original_moves.assign(degree_, 0);
    for (const auto& g : gens_)
      for (std::uint32_t x = 0; x < degree_; ++x)
        if (g[x] != x) ++c.original_moves[x];
    if (degree_ <= 1024) {
      c.build_deterministic(gens_, BaseRule::kGreedy);
    } else {
      c.build_random(gens_, 0x5EED5EEDULL ^ degree_);
    }
    lazy_->order = c.order();
  });
  return lazy_->order;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.size() != degree_) return false;
  if (gens_.empty()) return is_identity(p);
  const Chain& c = natural_chain();
  auto [y, j] = c.strip(p, 0);
  return is_identity(y);
}

IndexSet PermGroup::minimal_image(const IndexSet& s, const GroupLimits& limits) const {
  if (gens_.empty()) return s;
  const Chain& c = natural_chain();
  std::vector<Bits> cands{to_bits(s, degree_)};
  std::unordered_set<Bits, BitsHash> seen;
  bool overflow = false;
  for (std::size_t li = 0; li < c.levels.size() && !overflow; ++li) {
    const auto& l = c.levels[li];
    if (l.label.empty()) {
      bool any = false;
      for (const auto& t : cands) any = any || test_bit(t, l.base);
      if (any) std::erase_if(cands, [&](const Bits& t) { return !test_bit(t, l.base); });
      continue;
    }
    bool has = false;
    for (const auto& t : cands) {
      for (std::size_t w = 0; w < t.size() && !has; ++w) has = (t[w] & l.orbit_bits[w]) != 0;
      if (has) break;
    }
    std::vector<Bits> next;
    seen.clear();
    for (const auto& t : cands) {
      for (std::size_t k = 0; k < l.orbit.size(); ++k) {
        if (test_bit(t, l.orbit[k]) != has) continue;
        const Perm& ui = l.inverse_transversal[k];
        Bits img(t.size(), 0);
        for (std::size_t w = 0; w < t.size(); ++w)
          for (std::uint64_t m = t[w]; m; m &= m - 1) set_bit(img, ui[w * 64 + std::countr_zero(m)]);
        if (seen.insert(img).second) next.push_back(std::move(img));
      }
      if (next.size() > limits.max_candidates) {
        overflow = true;
        break;
      }
    }
    cands = std::move(next);
  }
  if (overflow) {
    const auto orbit = enumerate_orbit(s, limits.max_orbit);
    return *std::min_element(orbit.begin(), orbit.end());
  }
  const Bits* best = &cands.front();
  for (const auto& t : cands)
    if (bits_less(t, *best)) best = &t;
  return from_bits(*best);
}

std::vector<IndexSet> PermGroup::enumerate_orbit(const IndexSet& s, std::size_t cap) const {
  std::vector<IndexSet> orbit{s};
  std::unordered_set<IndexSet, IndexSetHash> seen{s};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : gens_) {
      auto img = cutpoly::apply(g, orbit[i]);
      if (seen.insert(img).second) {
        orbit.push_back(std::move(img));
        if (orbit.size() > cap) throw GroupError("orbit enumeration exceeded its cap");
      }
    }
  }
  return orbit;
}

OrbitInfo PermGroup::orbit_of_set(const IndexSet& s, const GroupLimits& limits) const {
  if (s.empty()) throw GroupError("orbit_of_set: empty set");
  OrbitInfo info;
  info.canonical = minimal_image(s, limits);
  // Small orbits are cheapest to enumerate; large orbits mean small stabilizers.
  const std::size_t cap = std::min<std::size_t>(limits.max_orbit, 4096);
  try {
    info.size = static_cast<unsigned long>(enumerate_orbit(s, cap).size());
  } catch (const GroupError&) {
    info.size = order() / set_stabilizer(s).order();
  }
  return info;
}

PermGroup PermGroup::set_stabilizer(const IndexSet& s) const {
  if (gens_.empty()) return PermGroup(degree_, {});
  const Chain& c = natural_chain();
  const Bits target = to_bits(s, degree_);
  std::vector<Perm> found;
  PermGroup sub(degree_, {});

  // prefix mask [0, b] for the prune
  auto prefix_equal = [&](const Bits& t, std::uint32_t b) {
    const std::size_t full = (b + 1) / 64;
    for (std::size_t w = 0; w < full; ++w)
      if (t[w] != target[w]) return false;
    const std::size_t rem = (b + 1) % 64;
    if (rem == 0) return true;
    const std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
    return (t[full] & mask) == (target[full] & mask);
  };

  auto dfs = [&](auto&& self, std::size_t li, const Bits& t, const Perm& g) -> void {
    if (li == c.levels.size()) {
      if (t == target && !is_identity(g) && !sub.contains(g)) {
        found.push_back(g);
        sub = PermGroup(degree_, found);
      }
      return;
    }
    const auto& l = c.levels[li];
    if (l.label.empty()) {
      if (test_bit(t, l.base) != test_bit(target, l.base)) return;
      self(self, li + 1, t, g);
      return;
    }
    const bool want = test_bit(target, l.base);
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      if (test_bit(t, l.orbit[k]) != want) continue;
      const Perm& ui = l.inverse_transversal[k];
      Bits img(t.size(), 0);
      for (std::size_t w = 0; w < t.size(); ++w)
        for (std::uint64_t m = t[w]; m; m &= m - 1) set_bit(img, ui[w * 64 + std::countr_zero(m)]);
      if (!prefix_equal(img, l.base)) continue;
      self(self, li + 1, img, compose(g, ui));
    }
  };
  dfs(dfs, 0, target, identity_perm(degree_));
  return PermGroup(degree_, std::move(found));
}

std::vector<std::vector<std::uint32_t>> PermGroup::point_orbits() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(degree_, false);
  for (std::uint32_t p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    std::vector<std::uint32_t> orb{p};
    seen[p] = true;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const auto& g : gens_)
        if (!seen[g[orb[i]]]) {
          seen[g[orb[i]]] = true;
          orb.push_back(g[orb[i]]);
        }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

PermGroup PermGroup::action_on(const IndexSet& subset) const {
  std::vector<std::int64_t> pos(degree_, -1);
  for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<std::int64_t>(i);
  std::vector<Perm> gens;
  for (const auto& g : gens_) {
    Perm r(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const auto q = pos[g[subset[i]]];
      if (q < 0) throw GroupError("action_on: subset is not invariant");
      r[i] = static_cast<std::uint32_t>(q);
    }
    gens.push_back(std::move(r));
  }
  return PermGroup(subset.size(), std::move(gens));
}

}  // namespace cutpoly
