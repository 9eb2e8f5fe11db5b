#include "cutpoly/adm.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace cutpoly {

namespace {

constexpr const char* kCheckpointMagic = "cutpoly-adm-checkpoint";
constexpr int kCheckpointVersion = 1;

std::size_t effective_threshold(const AdmConfig& cfg, std::size_t dim) {
  return cfg.recursion_threshold != 0 ? cfg.recursion_threshold : 4 * dim;
}

void say(const AdmConfig& cfg, const std::string& msg) {
  if (cfg.log) cfg.log(msg);
}

struct Neighbor {
  IndexSet key;
  std::size_t incidence = 0;
};

// Neighbour orbits of one facet, sorted by key.
std::vector<Neighbor> treat(const VPolytope& p, const PermGroup& group, const FacetCertificate& f,
                            const AdmConfig& cfg, int depth) {
  std::vector<FacetCertificate> found;
  bool recursed = false;
  const std::size_t dim = p.dimension();
  if (depth < cfg.max_depth && f.incidence.size() > effective_threshold(cfg, dim)) {
    PermGroup stab = group.set_stabilizer(f.incidence);
    if (recursive_policy(f.incidence.size(), !stab.is_trivial(), depth, dim, cfg) == Policy::kRecurse) {
      const auto proj = project_face(p, f);
      AdmConfig sub = cfg;
      sub.workers = 1;
      sub.max_orbits = sub.max_incidence = sub.stop_after = 0;
      sub.checkpoint_path.clear();
      sub.resume_path.clear();
      sub.record_neighbors = false;
      sub.log = nullptr;
      const auto ridges = adjacency_decomposition(proj.face, stab.action_on(f.incidence), sub, std::nullopt, depth + 1);
      for (const auto& r : ridges.records) {
        const Functional g = lift_functional(proj, r.representative.functional, p.width());
        found.push_back(rotate_facet(p, f, g));
      }
      recursed = true;
    }
  }
  if (!recursed) found = adjacent_facets(p, f, cfg.dd);

  std::vector<Neighbor> out;
  out.reserve(found.size());
  for (const auto& h : found) out.push_back({group.minimal_image(h.incidence, cfg.group), h.incidence.size()});
  std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) { return a.key < b.key; });
  out.erase(std::unique(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) { return a.key == b.key; }),
            out.end());
  return out;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::vector<OrbitRecord> ordered(const std::map<IndexSet, OrbitRecord>& db) {
  std::vector<OrbitRecord> out;
  out.reserve(db.size());
  for (const auto& [k, r] : db) out.push_back(r);
  std::stable_sort(out.begin(), out.end(),
                   [](const OrbitRecord& a, const OrbitRecord& b) { return a.incidence_count < b.incidence_count; });
  return out;
}

std::runtime_error bad_checkpoint(const std::string& what) { return std::runtime_error("checkpoint: " + what); }

}  // namespace

std::string to_string(Termination t) { return t == Termination::kBalinski ? "balinski" : "exhaustive"; }

Termination parse_termination(const std::string& s) {
  if (s == "exhaustive") return Termination::kExhaustive;
  if (s == "balinski") return Termination::kBalinski;
  throw std::invalid_argument("unknown termination mode: " + s);
}

Policy recursive_policy(std::size_t incidence_count, bool stabilizer_nontrivial, int depth, std::size_t dimension,
                        const AdmConfig& cfg) {
  if (depth >= cfg.max_depth || !stabilizer_nontrivial) return Policy::kDirect;
  return incidence_count > effective_threshold(cfg, dimension) ? Policy::kRecurse : Policy::kDirect;
}

BalinskiVerdict balinski_complete(const std::vector<OrbitRecord>& records, const PermGroup& group,
                                  std::size_t dimension) {
  BigInt untreated = 0;
  std::optional<IndexSet> common;
  bool any_treated = false;
  for (const auto& r : records) {
    if (r.status == OrbitStatus::kTreated) {
      any_treated = true;
      continue;
    }
    untreated += r.orbit_size;
    if (!common) {
      common = r.canonical_key;
    } else {
      IndexSet next;
      std::set_intersection(common->begin(), common->end(), r.canonical_key.begin(), r.canonical_key.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
  }
  if (!common) return {true, "empty"};
  // Both rules extend a nonempty treated part; with nothing treated they prove nothing.
  if (!any_treated) return {false, ""};
  if (dimension >= 1 && untreated <= BigInt(static_cast<unsigned long>(dimension - 1))) return {true, "balinski-i"};
  if (!common->empty()) {
    for (const auto& orbit : group.point_orbits())
      if (std::includes(common->begin(), common->end(), orbit.begin(), orbit.end())) return {true, "balinski-ii"};
  }
  return {false, ""};
}

FacetCertificate facet_from_incidence(const VPolytope& p, const IndexSet& inc) {
  RowBasis basis(p.width());
  IndexSet chosen;
  for (auto i : inc) {
    if (basis.add(p.rows().row(i))) chosen.push_back(i);
    if (basis.rank() == p.width() - 1) break;
  }
  if (basis.rank() != p.width() - 1) throw std::invalid_argument("facet_from_incidence: rank too low");
  const auto ns = integer_nullspace(p.rows().select_rows(chosen));
  if (ns.size() != 1) throw std::logic_error("facet_from_incidence: nullspace is not a line");
  Functional f = ns.front();
  const auto inc_f = incidence(p, f);
  if (inc_f != inc) throw std::invalid_argument("facet_from_incidence: not the incidence of a facet");
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    const std::int64_t v = dot(p.rows().row(i), f);
    if (v == 0) continue;
    if (v < 0)
      for (auto& x : f) x = -x;
    break;
  }
  const auto check = is_facet(p, f);
  if (!check.ok()) throw std::invalid_argument("facet_from_incidence: " + to_string(check.failure));
  return {std::move(f), inc};
}

std::uint64_t fingerprint(const VPolytope& p, const PermGroup& group) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(p.num_rows());
  mix(p.width());
  mix(p.cone() ? 1 : 0);
  for (std::size_t i = 0; i < p.num_rows(); ++i)
    for (auto x : p.rows().row(i)) mix(static_cast<std::uint64_t>(x));
  mix(group.degree());
  mix(group.generators().size());
  for (const auto& g : group.generators())
    for (auto x : g) mix(x);
  return h;
}

void write_checkpoint(std::ostream& out, const Checkpoint& cp) {
  std::string ctx = cp.context;
  std::replace(ctx.begin(), ctx.end(), '\n', ' ');
  out << kCheckpointMagic << ' ' << kCheckpointVersion << '\n';
  out << "fingerprint " << hex64(cp.fingerprint) << '\n';
  out << "width " << cp.width << '\n';
  out << "rows " << cp.num_rows << '\n';
  out << "group_order " << cp.group_order.get_str() << '\n';
  out << "termination " << to_string(cp.termination) << '\n';
  out << "recursion_threshold " << cp.recursion_threshold << '\n';
  out << "max_depth " << cp.max_depth << '\n';
  out << "seed " << cp.seed << '\n';
  out << "context " << ctx << '\n';
  std::vector<const OrbitRecord*> recs;
  for (const auto& r : cp.records) recs.push_back(&r);
  std::sort(recs.begin(), recs.end(), [](auto* a, auto* b) { return a->canonical_key < b->canonical_key; });
  out << "records " << recs.size() << '\n';
  for (const auto* r : recs) {
    out << "orbit " << (r->status == OrbitStatus::kTreated ? 'T' : 'U') << ' ' << r->incidence_count << ' '
        << r->orbit_size.get_str() << " key " << r->canonical_key.size();
    for (auto i : r->canonical_key) out << ' ' << i;
    out << " functional " << r->representative.functional.size();
    for (auto x : r->representative.functional) out << ' ' << x;
    out << '\n';
  }
  out << "end\n";
}

Checkpoint read_checkpoint(std::istream& in) {
  std::string line;
  auto next_line = [&](const char* expect) -> std::istringstream {
    if (!std::getline(in, line)) throw bad_checkpoint(std::string("truncated before '") + expect + "'");
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag != expect) throw bad_checkpoint(std::string("expected '") + expect + "', found '" + tag + "'");
    return ls;
  };
  if (!std::getline(in, line) || line.empty()) throw bad_checkpoint("file is empty");
  {
    std::istringstream ls(line);
    std::string magic;
    int version = 0;
    ls >> magic >> version;
    if (magic != kCheckpointMagic) throw bad_checkpoint("not a checkpoint file");
    if (version != kCheckpointVersion)
      throw bad_checkpoint("version " + std::to_string(version) + " is not supported (expected " +
                           std::to_string(kCheckpointVersion) + ")");
  }
  Checkpoint cp;
  auto fail_if = [](std::istringstream& ls, const char* what) {
    if (ls.fail()) throw bad_checkpoint(std::string("malformed ") + what);
  };
  {
    auto ls = next_line("fingerprint");
    std::string hex;
    ls >> hex;
    fail_if(ls, "fingerprint");
    cp.fingerprint = std::stoull(hex, nullptr, 16);
  }
  {
    auto ls = next_line("width");
    ls >> cp.width;
    fail_if(ls, "width");
  }
  {
    auto ls = next_line("rows");
    ls >> cp.num_rows;
    fail_if(ls, "rows");
  }
  {
    auto ls = next_line("group_order");
    std::string s;
    ls >> s;
    fail_if(ls, "group_order");
    cp.group_order = BigInt(s);
  }
  {
    auto ls = next_line("termination");
    std::string s;
    ls >> s;
    cp.termination = parse_termination(s);
  }
  {
    auto ls = next_line("recursion_threshold");
    ls >> cp.recursion_threshold;
    fail_if(ls, "recursion_threshold");
  }
  {
    auto ls = next_line("max_depth");
    ls >> cp.max_depth;
    fail_if(ls, "max_depth");
  }
  {
    auto ls = next_line("seed");
    ls >> cp.seed;
    fail_if(ls, "seed");
  }
  {
    auto ls = next_line("context");
    std::getline(ls >> std::ws, cp.context);
  }
  std::size_t count = 0;
  {
    auto ls = next_line("records");
    ls >> count;
    fail_if(ls, "records");
  }
  for (std::size_t k = 0; k < count; ++k) {
    auto ls = next_line("orbit");
    OrbitRecord r;
    char status = 0;
    std::string size, tag;
    std::size_t n = 0;
    ls >> status >> r.incidence_count >> size >> tag >> n;
    fail_if(ls, "orbit record");
    if ((status != 'T' && status != 'U') || tag != "key") throw bad_checkpoint("malformed orbit record");
    r.status = status == 'T' ? OrbitStatus::kTreated : OrbitStatus::kUntreated;
    r.orbit_size = BigInt(size);
    r.canonical_key.resize(n);
    for (auto& i : r.canonical_key) ls >> i;
    ls >> tag >> n;
    fail_if(ls, "orbit record");
    if (tag != "functional") throw bad_checkpoint("malformed orbit record");
    r.representative.functional.resize(n);
    for (auto& x : r.representative.functional) ls >> x;
    fail_if(ls, "orbit record");
    if (r.canonical_key.size() != r.incidence_count || !std::is_sorted(r.canonical_key.begin(), r.canonical_key.end()))
      throw bad_checkpoint("inconsistent orbit key");
    r.representative.incidence = r.canonical_key;
    if (!cp.records.empty() && !(cp.records.back().canonical_key < r.canonical_key))
      throw bad_checkpoint("records are not in canonical order");
    cp.records.push_back(std::move(r));
  }
  next_line("end");
  return cp;
}

AdmResult adjacency_decomposition(const VPolytope& p, const PermGroup& group, const AdmConfig& cfg,
                                  std::optional<FacetCertificate> start, int depth) {
  if (group.degree() != p.num_rows()) throw std::invalid_argument("adjacency_decomposition: group degree mismatch");
  const std::size_t dim = p.dimension();
  const bool persist = depth == 0 && (!cfg.checkpoint_path.empty() || !cfg.resume_path.empty());
  const std::uint64_t fp = persist ? fingerprint(p, group) : 0;
  const BigInt order = group.order();

  std::map<IndexSet, OrbitRecord> db;
  std::set<std::pair<std::size_t, IndexSet>> queue;

  auto snapshot = [&]() {
    Checkpoint cp;
    cp.fingerprint = fp;
    cp.width = p.width();
    cp.num_rows = p.num_rows();
    cp.group_order = order;
    cp.termination = cfg.termination;
    cp.recursion_threshold = cfg.recursion_threshold;
    cp.max_depth = cfg.max_depth;
    cp.seed = cfg.seed;
    cp.context = cfg.context;
    for (const auto& [k, r] : db) cp.records.push_back(r);
    return cp;
  };
  auto save = [&]() {
    if (depth != 0 || cfg.checkpoint_path.empty()) return;
    const std::string tmp = cfg.checkpoint_path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp);
      write_checkpoint(out, snapshot());
    }
    if (std::rename(tmp.c_str(), cfg.checkpoint_path.c_str()) != 0)
      throw std::runtime_error("checkpoint: cannot replace " + cfg.checkpoint_path);
  };
  auto insert = [&](const IndexSet& key) {
    if (db.count(key)) return;
    OrbitRecord r;
    r.representative = facet_from_incidence(p, key);
    r.canonical_key = key;
    r.incidence_count = key.size();
    r.orbit_size = group.orbit_of_set(key, cfg.group).size;
    queue.emplace(r.incidence_count, key);
    db.emplace(key, std::move(r));
  };

  if (depth == 0 && !cfg.resume_path.empty()) {
    std::ifstream in(cfg.resume_path, std::ios::binary);
    if (!in) throw std::runtime_error("checkpoint: cannot open " + cfg.resume_path);
    Checkpoint cp = read_checkpoint(in);
    if (cp.fingerprint != fp || cp.width != p.width() || cp.num_rows != p.num_rows())
      throw std::runtime_error("checkpoint: written for a different polytope or group");
    if (cp.group_order != order) throw std::runtime_error("checkpoint: group order mismatch");
    for (auto& r : cp.records) {
      if (incidence(p, r.representative.functional) != r.canonical_key)
        throw std::runtime_error("checkpoint: representative does not match its key");
      if (r.status == OrbitStatus::kUntreated) queue.emplace(r.incidence_count, r.canonical_key);
      IndexSet key = r.canonical_key;
      db.emplace(std::move(key), std::move(r));
    }
    if (db.empty()) throw std::runtime_error("checkpoint: no orbit records");
    say(cfg, "resumed " + std::to_string(db.size()) + " orbits, " + std::to_string(queue.size()) + " untreated");
  } else {
    const FacetCertificate f = start ? *start : initial_facet(p);
    insert(group.minimal_image(f.incidence, cfg.group));
  }

  AdmResult result;
  result.group_order = order;
  const unsigned workers = std::max(1U, cfg.workers);
  std::size_t treated_now = 0;

  for (;;) {
    if (queue.empty()) {
      result.complete = true;
      result.criterion = "exhaustive";
      break;
    }
    if (cfg.termination == Termination::kBalinski) {
      const auto verdict = balinski_complete(ordered(db), group, dim);
      if (verdict.complete) {
        result.complete = true;
        result.criterion = verdict.criterion;
        break;
      }
    }
    if (cfg.stop_after != 0 && treated_now >= cfg.stop_after) {
      result.criterion = "stopped";
      break;
    }

    std::vector<IndexSet> batch;
    for (auto it = queue.begin(); it != queue.end() && batch.size() < workers; ++it) batch.push_back(it->second);
    if (cfg.max_incidence != 0) {
      for (const auto& key : batch)
        if (key.size() > cfg.max_incidence) {
          save();
          throw ResourceError("orbit with incidence " + std::to_string(key.size()) + " exceeds the cap " +
                              std::to_string(cfg.max_incidence));
        }
    }

    std::vector<std::vector<Neighbor>> found(batch.size());
    if (batch.size() == 1) {
      found[0] = treat(p, group, db.at(batch[0]).representative, cfg, depth);
    } else {
      std::vector<std::exception_ptr> errors(batch.size());
      std::vector<std::thread> pool;
      for (std::size_t k = 0; k < batch.size(); ++k)
        pool.emplace_back([&, k] {
          try {
            found[k] = treat(p, group, db.at(batch[k]).representative, cfg, depth);
          } catch (...) {
            errors[k] = std::current_exception();
          }
        });
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }

    for (std::size_t k = 0; k < batch.size(); ++k) {
      OrbitRecord& r = db.at(batch[k]);
      r.status = OrbitStatus::kTreated;
      queue.erase({r.incidence_count, batch[k]});
      if (cfg.record_neighbors) {
        r.neighbor_keys.clear();
        for (const auto& nb : found[k]) r.neighbor_keys.push_back(nb.key);
      }
      for (const auto& nb : found[k]) insert(nb.key);
      ++treated_now;
      if (depth == 0)
        say(cfg, "treated orbit incidence=" + std::to_string(r.incidence_count) +
                     " neighbours=" + std::to_string(found[k].size()) + " orbits=" + std::to_string(db.size()) +
                     " untreated=" + std::to_string(queue.size()));
    }
    if (cfg.max_orbits != 0 && db.size() > cfg.max_orbits) {
      save();
      throw ResourceError("number of orbits " + std::to_string(db.size()) + " exceeds the cap " +
                          std::to_string(cfg.max_orbits));
    }
    save();
  }
  save();

  result.records = ordered(db);
  result.total_facets = 0;
  for (const auto& r : result.records) {
    result.total_facets += r.orbit_size;
    if (r.status == OrbitStatus::kTreated) ++result.treated;
  }
  return result;
}

FacetCertificate initial_cut_facet(const CutPolytope& c, const VPolytope& p) {
  const Graph& g = c.graph();
  const std::size_t m = g.num_edges();
  AffineInequality q;
  q.a.assign(m, 0);
  std::vector<std::vector<int>> cycles;
  for (int len = 3; len <= g.num_vertices() && cycles.empty(); ++len) cycles = chordless_cycles(g, len);
  if (!cycles.empty()) {
    // x(C - e) - x_e >= 0 on a shortest chordless cycle
    const auto& cyc = cycles.front();
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const auto e = g.edge_index(cyc[i], cyc[(i + 1) % cyc.size()]);
      q.a[*e] = i == 0 ? -1 : 1;
    }
  } else {
    q.a[0] = 1;
  }
  try {
    return promote_to_facet(p, c.to_functional(q));
  } catch (const std::invalid_argument&) {
    return initial_facet(p);
  }
}

AdmResult adjacency_decomposition(const CutPolytope& c, const AdmConfig& cfg) {
  const VPolytope p = VPolytope::from_cut_polytope(c);
  const SymmetryAction action = restricted_group(c);
  return adjacency_decomposition(p, action.point_action, cfg, initial_cut_facet(c, p));
}

std::vector<AffineInequality> expand_orbits(const CutPolytope& c, const SymmetryAction& action,
                                            const std::vector<OrbitRecord>& records) {
  std::set<AffineInequality> all;
  for (const auto& r : records) {
    AffineInequality q = c.to_inequality(r.representative.functional);
    q.normalize();
    std::vector<AffineInequality> frontier{q};
    all.insert(q);
    while (!frontier.empty()) {
      std::vector<AffineInequality> next;
      for (const auto& x : frontier)
        for (const auto& m : action.coord_action) {
          AffineInequality y = apply(m, x);
          y.normalize();
          if (all.insert(y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
  }
  return {all.begin(), all.end()};
}

AdmResult group_into_orbits(const CutPolytope& c, const SymmetryAction& action,
                            const std::vector<AffineInequality>& inequalities, const GroupLimits& limits) {
  const VPolytope p = VPolytope::from_cut_polytope(c);
  std::map<IndexSet, OrbitRecord> db;
  for (const auto& q : inequalities) {
    const IndexSet key = action.point_action.minimal_image(c.incidence(q), limits);
    if (db.count(key)) continue;
    OrbitRecord r;
    r.canonical_key = key;
    r.incidence_count = key.size();
    r.orbit_size = action.point_action.orbit_of_set(key, limits).size;
    r.status = OrbitStatus::kTreated;
    try {
      r.representative = facet_from_incidence(p, key);
    } catch (const std::invalid_argument&) {
      // not a facet: keep the inequality itself
      r.representative = {c.to_functional(q), c.incidence(q)};
    }
    db.emplace(key, std::move(r));
  }
  AdmResult out;
  out.records = ordered(db);
  out.group_order = action.point_action.order();
  out.complete = true;
  out.criterion = "list";
  out.total_facets = 0;
  for (const auto& r : out.records) out.total_facets += r.orbit_size;
  out.treated = out.records.size();
  return out;
}

SampleResult sample_facets(const VPolytope& p, const PermGroup& group, const FacetCertificate& start,
                           const SampleConfig& cfg) {
  SampleResult out;
  SplitMix64 rng(cfg.seed);
  std::map<IndexSet, std::vector<IndexSet>> ridges;
  auto visit = [&](const IndexSet& key) {
    const std::size_t inc = key.size();
    ++out.histogram[inc];
    if (!out.representatives.count(inc)) out.representatives.emplace(inc, facet_from_incidence(p, key));
  };
  IndexSet key = group.minimal_image(start.incidence);
  visit(key);
  for (std::size_t step = 0; step < cfg.steps; ++step) {
    auto it = ridges.find(key);
    if (it == ridges.end()) {
      std::vector<IndexSet> keys;
      for (const auto& h : adjacent_facets(p, facet_from_incidence(p, key), cfg.dd))
        keys.push_back(group.minimal_image(h.incidence));
      it = ridges.emplace(key, std::move(keys)).first;
    }
    if (it->second.empty()) break;
    key = it->second[rng.below(it->second.size())];
    visit(key);
  }
  out.distinct_keys = ridges.size();
  return out;
}

SampleResult sample_facets(const CutPolytope& c, const SampleConfig& cfg) {
  const VPolytope p = VPolytope::from_cut_polytope(c);
  const SymmetryAction action = restricted_group(c);
  return sample_facets(p, action.point_action, initial_cut_facet(c, p), cfg);
}

TriangleAdjacency check_triangle_adjacency(const CutPolytope& c, const std::vector<OrbitRecord>& records,
                                           const DDLimits& limits) {
  const VPolytope p = VPolytope::from_cut_polytope(c);
  const SymmetryAction action = restricted_group(c);
  const PermGroup& group = action.point_action;
  std::set<IndexSet> triangle_keys;
  for (const auto& t : triangle_inequalities(c.graph(), c.mode() == Mode::kPolytope))
    if (c.is_valid(t)) triangle_keys.insert(group.minimal_image(c.incidence(t)));

  TriangleAdjacency out;
  out.holds = true;
  for (const auto& r : records) {
    std::vector<IndexSet> nbrs = r.neighbor_keys;
    if (nbrs.empty())
      for (const auto& h : adjacent_facets(p, r.representative, limits)) nbrs.push_back(group.minimal_image(h.incidence));
    std::sort(nbrs.begin(), nbrs.end());
    TriangleWitness w{r.canonical_key, std::nullopt};
    for (const auto& k : nbrs)
      if (triangle_keys.count(k)) {
        w.triangle_key = k;
        break;
      }
    out.holds = out.holds && w.triangle_key.has_value();
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

void write_orbit_report(std::ostream& out, const CutPolytope& c, const AdmResult& result) {
  for (const auto& r : result.records) {
    out << hex64(hash_index_set(r.canonical_key)) << ' ' << r.orbit_size.get_str() << ' ' << r.incidence_count << ' '
        << to_string(c.to_inequality(r.representative.functional)) << '\n';
  }
}

}  // namespace cutpoly
