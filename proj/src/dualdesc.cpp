#include "cutpoly/dualdesc.hpp"


#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

namespace cutpoly {

namespace {

constexpr __int128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin64 = std::numeric_limits<std::int64_t>::min();

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v > kMax64 || v < kMin64) throw OverflowError("value exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

// Primitive form of an int128 vector, narrowed to 64 bits.
Functional primitive64(const std::vector<__int128>& v) {
  __int128 g = 0;
  for (auto x : v) g = gcd128(g, x);
  Functional out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = narrow(g > 1 ? v[i] / g : v[i]);
  return out;
}

__int128 dot128(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// Number kernels for the double description

struct Int64Kernel {
  using T = std::int64_t;
  static T dot(std::span<const std::int64_t> a, const T* r) {
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * r[i];
    return narrow(s);
  }
  static int sign(const T& x) { return (x > 0) - (x < 0); }
  static void combine(const T* rp, const T& sp, const T* rn, const T& sn, T* out, std::size_t d) {
    std::vector<__int128> tmp(d);
    __int128 g = 0;
    for (std::size_t i = 0; i < d; ++i) {
      tmp[i] = static_cast<__int128>(sp) * rn[i] - static_cast<__int128>(sn) * rp[i];
      g = gcd128(g, tmp[i]);
    }
    for (std::size_t i = 0; i < d; ++i) out[i] = narrow(g > 1 ? tmp[i] / g : tmp[i]);
  }
  static void assign(T* out, const std::vector<BigInt>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].fits_slong_p()) throw OverflowError("initial ray exceeds 64 bits");
      out[i] = v[i].get_si();
    }
  }
  static std::int64_t to64(const T& x) { return x; }
};

struct BigKernel {
  using T = BigInt;
  static T dot(std::span<const std::int64_t> a, const T* r) {
    T s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) s += r[i] * static_cast<long>(a[i]);
    return s;
  }
  static int sign(const T& x) { return sgn(x); }
  static void combine(const T* rp, const T& sp, const T* rn, const T& sn, T* out, std::size_t d) {
    T g = 0;
    for (std::size_t i = 0; i < d; ++i) {
      out[i] = sp * rn[i] - sn * rp[i];
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g > 1)
      for (std::size_t i = 0; i < d; ++i) mpz_divexact(out[i].get_mpz_t(), out[i].get_mpz_t(), g.get_mpz_t());
  }
  static void assign(T* out, const std::vector<BigInt>& v) { std::copy(v.begin(), v.end(), out); }
  static std::int64_t to64(const T& x) {
    if (!x.fits_slong_p()) throw OverflowError("extreme ray exceeds 64 bits");
    return x.get_si();
  }
};

template <class K>
ExtremeRays run_dd(const IntMatrix& a, const DDLimits& limits) {
  using T = typename K::T;
  const std::size_t n = a.rows(), d = a.cols();
  if (n > limits.max_rows) throw ResourceError("double description: too many constraints");

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::vector<std::int64_t> weight(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (auto x : a.row(i)) weight[i] += x < 0 ? -x : x;
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    if (weight[x] != weight[y]) return weight[x] < weight[y];
    const auto rx = a.row(x), ry = a.row(y);
    if (!std::equal(rx.begin(), rx.end(), ry.begin())) return std::lexicographical_compare(rx.begin(), rx.end(), ry.begin(), ry.end());
    return x < y;
  });

  RowBasis basis(d);
  std::vector<std::uint32_t> seq;
  std::vector<bool> chosen(n, false);
  for (auto i : order) {
    if (basis.add(a.row(i))) {
      seq.push_back(i);
      chosen[i] = true;
      if (seq.size() == d) break;
    }
  }
  if (seq.size() < d) throw std::invalid_argument("extreme_rays: the cone is not pointed");
  for (auto i : order)
    if (!chosen[i]) seq.push_back(i);

  const std::size_t words = (n + 63) / 64;
  std::vector<T> coords;
  std::vector<std::uint64_t> zeros;

  for (std::size_t i = 0; i < d; ++i) {
    QMatrix m;
    m.cols = d;
    for (std::size_t j = 0; j < d; ++j)
      if (j != i) {
        QVector r(d);
        for (std::size_t c = 0; c < d; ++c) r[c] = static_cast<long>(a(seq[j], c));
        m.rows.push_back(std::move(r));
      }
    std::vector<BigInt> v = primitive_big_vector(nullspace(m).rows.at(0));
    BigInt s = 0;
    for (std::size_t c = 0; c < d; ++c) s += v[c] * static_cast<long>(a(seq[i], c));
    if (s < 0)
      for (auto& x : v) x = -x;
    coords.resize(coords.size() + d);
    K::assign(coords.data() + coords.size() - d, v);
    zeros.resize(zeros.size() + words, 0);
    std::uint64_t* z = zeros.data() + zeros.size() - words;
    for (std::size_t j = 0; j < d; ++j)
      if (j != i) z[j >> 6] |= std::uint64_t{1} << (j & 63);
  }

  std::vector<T> sval;
  std::vector<std::uint32_t> pos, zer, neg;
  std::vector<std::vector<std::uint32_t>> cols;
  std::vector<std::uint64_t> inter(words);
  for (std::size_t t = d; t < n; ++t) {
    const auto row = a.row(seq[t]);
    const std::size_t nr = coords.size() / d;
    sval.resize(nr);
    pos.clear();
    zer.clear();
    neg.clear();
    for (std::size_t r = 0; r < nr; ++r) {
      sval[r] = K::dot(row, coords.data() + r * d);
      const int s = K::sign(sval[r]);
      (s > 0 ? pos : s == 0 ? zer : neg).push_back(static_cast<std::uint32_t>(r));
    }
    const std::uint64_t tbit = std::uint64_t{1} << (t & 63);
    if (neg.empty()) {
      for (auto r : zer) zeros[r * words + (t >> 6)] |= tbit;
      continue;
    }
    cols.assign(t, {});
    for (std::size_t r = 0; r < nr; ++r) {
      const std::uint64_t* z = zeros.data() + r * words;
      for (std::size_t w = 0; w < words; ++w)
        for (std::uint64_t b = z[w]; b; b &= b - 1) cols[w * 64 + std::countr_zero(b)].push_back(static_cast<std::uint32_t>(r));
    }

    std::vector<T> next_coords;
    std::vector<std::uint64_t> next_zeros;
    auto keep = [&](std::uint32_t r, bool tight) {
      next_coords.insert(next_coords.end(), coords.begin() + r * d, coords.begin() + (r + 1) * d);
      next_zeros.insert(next_zeros.end(), zeros.begin() + r * words, zeros.begin() + (r + 1) * words);
      if (tight) next_zeros[next_zeros.size() - words + (t >> 6)] |= tbit;
    };
    for (auto r : pos) keep(r, false);
    for (auto r : zer) keep(r, true);

    std::vector<T> fresh(d);
    for (auto p : pos) {
      const std::uint64_t* zp = zeros.data() + p * words;
      for (auto q : neg) {
        const std::uint64_t* zq = zeros.data() + q * words;
        std::size_t cnt = 0;
        for (std::size_t w = 0; w < words; ++w) {
          inter[w] = zp[w] & zq[w];
          cnt += std::popcount(inter[w]);
        }
        if (cnt + 2 < d) continue;
        // Adjacent iff no third ray is tight on every common constraint.
        std::size_t best = SIZE_MAX, best_len = SIZE_MAX;
        for (std::size_t w = 0; w < words; ++w)
          for (std::uint64_t b = inter[w]; b; b &= b - 1) {
            const std::size_t j = w * 64 + std::countr_zero(b);
            if (cols[j].size() < best_len) {
              best = j;
              best_len = cols[j].size();
            }
          }
        bool adjacent = true;
        if (best != SIZE_MAX) {
          for (auto c : cols[best]) {
            if (c == p || c == q) continue;
            const std::uint64_t* zc = zeros.data() + c * words;
            bool contains = true;
            for (std::size_t w = 0; w < words && contains; ++w) contains = (inter[w] & ~zc[w]) == 0;
            if (contains) {
              adjacent = false;
              break;
            }
          }
        } else if (nr > 2) {
          adjacent = false;
        }
        if (!adjacent) continue;
        K::combine(coords.data() + p * d, sval[p], coords.data() + q * d, sval[q], fresh.data(), d);
        next_coords.insert(next_coords.end(), fresh.begin(), fresh.end());
        next_zeros.insert(next_zeros.end(), inter.begin(), inter.end());
        next_zeros[next_zeros.size() - words + (t >> 6)] |= tbit;
      }
      if (next_coords.size() / d > limits.max_rays) throw ResourceError("double description: ray limit exceeded");
    }
    coords = std::move(next_coords);
    zeros = std::move(next_zeros);
  }

  const std::size_t nr = coords.size() / d;
  std::vector<std::pair<Functional, IndexSet>> out(nr);
  for (std::size_t r = 0; r < nr; ++r) {
    out[r].first.resize(d);
    for (std::size_t j = 0; j < d; ++j) out[r].first[j] = K::to64(coords[r * d + j]);
    const std::uint64_t* z = zeros.data() + r * words;
    for (std::size_t w = 0; w < words; ++w)
      for (std::uint64_t b = z[w]; b; b &= b - 1) out[r].second.push_back(seq[w * 64 + std::countr_zero(b)]);
    std::sort(out[r].second.begin(), out[r].second.end());
  }
  std::sort(out.begin(), out.end());
  ExtremeRays er;
  for (auto& [ray, tight] : out) {
    er.rays.push_back(std::move(ray));
    er.tight.push_back(std::move(tight));
  }
  return er;
}

std::vector<__int128> values(const VPolytope& p, std::span<const std::int64_t> f) {
  std::vector<__int128> v(p.num_rows());
  for (std::size_t i = 0; i < p.num_rows(); ++i) v[i] = dot128(p.rows().row(i), f);
  return v;
}

IndexSet zero_set(const std::vector<__int128>& v) {
  IndexSet s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == 0) s.push_back(static_cast<std::uint32_t>(i));
  return s;
}

// h = f(v)·g - g(v)·f at the minimizer v of g/f over f > 0.
Functional rotate(const std::vector<__int128>& fv, const std::vector<__int128>& gv, std::span<const std::int64_t> f,
                  std::span<const std::int64_t> g) {
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < fv.size(); ++i) {
    if (fv[i] <= 0) continue;
    // g_i / f_i < g_b / f_b with positive denominators
    if (best == SIZE_MAX || gv[i] * fv[best] < gv[best] * fv[i]) best = i;
  }
  if (best == SIZE_MAX) throw std::invalid_argument("rotation: facet functional is zero on every row");
  std::vector<__int128> h(f.size());
  bool nonzero = false;
  for (std::size_t j = 0; j < f.size(); ++j) {
    h[j] = fv[best] * g[j] - gv[best] * f[j];
    nonzero = nonzero || h[j] != 0;
  }
  if (!nonzero) throw std::invalid_argument("rotation: functional is parallel to the facet");
  return primitive64(h);
}

FacetCertificate rotate_to_facet(const VPolytope& p, const FacetCertificate& f, std::span<const std::int64_t> g) {
  const auto fv = values(p, f.functional);
  const auto gv = values(p, g);
  FacetCertificate h;
  h.functional = rotate(fv, gv, f.functional, g);
  h.incidence = incidence(p, h.functional);
  return h;
}

bool parallel(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (static_cast<__int128>(a[i]) * b[j] != static_cast<__int128>(a[j]) * b[i]) return false;
  return true;
}

FacetCertificate promote_loop(const VPolytope& p, Functional g) {
  const std::size_t d = p.width();
  for (;;) {
    const auto gv = values(p, g);
    const IndexSet inc = zero_set(gv);
    IntMatrix rows = p.rows().select_rows(inc);
    if (inc.empty()) rows = IntMatrix(0, d);
    if (rank_of_rows(p.rows(), inc) == d - 1) return {std::move(g), inc};
    const auto basis = integer_nullspace(rows);
    const Functional* c = nullptr;
    for (const auto& v : basis)
      if (!parallel(v, g)) {
        c = &v;
        break;
      }
    if (c == nullptr) throw std::logic_error("promote_to_facet: no rotation direction");
    Functional dir = *c;
    auto cv = values(p, dir);
    if (std::none_of(cv.begin(), cv.end(), [](__int128 x) { return x > 0; })) {
      for (auto& x : dir) x = -x;
      for (auto& x : cv) x = -x;
    }
    g = rotate(cv, gv, dir, g);
  }
}

}  // namespace

// ---------------------------------------------------------------------------

VPolytope VPolytope::from_points(const IntMatrix& points) {
  IntMatrix rows(points.rows(), points.cols() + 1);
  for (std::size_t i = 0; i < points.rows(); ++i) {
    rows(i, 0) = 1;
    for (std::size_t j = 0; j < points.cols(); ++j) rows(i, j + 1) = points(i, j);
  }
  return from_homogeneous(std::move(rows), false);
}

VPolytope VPolytope::from_rays(const IntMatrix& rays) { return from_homogeneous(rays, true); }

VPolytope VPolytope::from_homogeneous(IntMatrix rows, bool cone) {
  VPolytope p;
  p.rows_ = std::move(rows);
  p.cone_ = cone;
  return p;
}

VPolytope VPolytope::from_cut_polytope(const CutPolytope& c) {
  return from_homogeneous(c.homogeneous(), c.mode() == Mode::kCone);
}

std::string to_string(FacetFailure f) {
  switch (f) {
    case FacetFailure::kNone: return "facet";
    case FacetFailure::kNotValid: return "not-valid";
    case FacetFailure::kNotSupporting: return "not-supporting";
    case FacetFailure::kLowRank: return "low-rank";
  }
  return "?";
}

ExtremeRays extreme_rays(const IntMatrix& constraints, const DDLimits& limits) {
  if (constraints.cols() == 0) throw std::invalid_argument("extreme_rays: zero-dimensional space");
  try {
    return run_dd<Int64Kernel>(constraints, limits);
  } catch (const OverflowError&) {
    return run_dd<BigKernel>(constraints, limits);
  }
}

std::vector<FacetCertificate> dual_description(const VPolytope& p, const DDLimits& limits) {
  auto er = extreme_rays(p.rows(), limits);
  std::vector<FacetCertificate> out;
  out.reserve(er.rays.size());
  for (std::size_t i = 0; i < er.rays.size(); ++i) out.push_back({std::move(er.rays[i]), std::move(er.tight[i])});
  return out;
}

IndexSet incidence(const VPolytope& p, std::span<const std::int64_t> f) { return zero_set(values(p, f)); }

FacetCheck is_facet(const VPolytope& p, std::span<const std::int64_t> f) {
  FacetCheck c;
  if (f.size() != p.width()) throw std::invalid_argument("is_facet: functional has the wrong length");
  c.certificate.functional.assign(f.begin(), f.end());
  const auto v = values(p, f);
  const bool zero = std::all_of(f.begin(), f.end(), [](std::int64_t x) { return x == 0; });
  if (zero || std::any_of(v.begin(), v.end(), [](__int128 x) { return x < 0; })) {
    c.failure = FacetFailure::kNotValid;
    return c;
  }
  c.certificate.incidence = zero_set(v);
  if (c.certificate.incidence.empty()) {
    c.failure = FacetFailure::kNotSupporting;
    return c;
  }
  if (rank_of_rows(p.rows(), c.certificate.incidence) != p.width() - 1) c.failure = FacetFailure::kLowRank;
  return c;
}

FacetCertificate adjacent_facet(const VPolytope& p, const FacetCertificate& f, std::span<const std::int64_t> g) {
  const auto gv = values(p, g);
  IndexSet ridge;
  for (auto i : f.incidence) {
    if (gv[i] < 0) throw std::invalid_argument("adjacent_facet: functional is negative on the facet");
    if (gv[i] == 0) ridge.push_back(i);
  }
  if (rank_of_rows(p.rows(), ridge) != p.width() - 2) throw std::invalid_argument("adjacent_facet: not a ridge");
  return rotate_to_facet(p, f, g);
}

FacetCertificate rotate_facet(const VPolytope& p, const FacetCertificate& f, std::span<const std::int64_t> g) {
  return rotate_to_facet(p, f, g);
}

FacetCertificate promote_to_facet(const VPolytope& p, std::span<const std::int64_t> valid) {
  const auto check = is_facet(p, valid);
  if (check.failure == FacetFailure::kNotValid) throw std::invalid_argument("promote_to_facet: input is not valid");
  if (check.failure == FacetFailure::kNotSupporting) throw std::invalid_argument("promote_to_facet: input is not supporting");
  if (check.ok()) return check.certificate;
  return promote_loop(p, Functional(valid.begin(), valid.end()));
}

FacetCertificate initial_facet(const VPolytope& p) {
  const std::size_t d = p.width();
  auto strictly_positive = [&](const Functional& f) {
    const auto v = values(p, f);
    return std::all_of(v.begin(), v.end(), [](__int128 x) { return x > 0; });
  };
  std::vector<Functional> tries;
  for (std::size_t j = 0; j < d; ++j) {
    Functional e(d, 0);
    e[j] = 1;
    tries.push_back(std::move(e));
  }
  tries.emplace_back(d, 1);
  for (auto& f : tries)
    if (strictly_positive(f)) return promote_loop(p, std::move(f));
  throw std::invalid_argument("initial_facet: no strictly positive start functional");
}

FaceProjection project_face(const VPolytope& p, const FacetCertificate& f) {
  RowBasis basis(p.width());
  for (auto i : f.incidence) {
    basis.add(p.rows().row(i));
    if (basis.rank() == p.width() - 1) break;
  }
  if (basis.rank() != p.width() - 1) throw std::invalid_argument("project_face: not a facet");
  FaceProjection proj;
  proj.columns = basis.pivot_columns();
  proj.incidence = f.incidence;
  proj.face = VPolytope::from_homogeneous(p.rows().select_rows(f.incidence).select_cols(proj.columns), p.cone());
  return proj;
}

Functional lift_functional(const FaceProjection& proj, std::span<const std::int64_t> g, std::size_t width) {
  Functional h(width, 0);
  for (std::size_t k = 0; k < proj.columns.size(); ++k) h[proj.columns[k]] = g[k];
  return h;
}

std::vector<FacetCertificate> adjacent_facets(const VPolytope& p, const FacetCertificate& f, const DDLimits& limits) {
  const auto proj = project_face(p, f);
  std::vector<FacetCertificate> out;
  const auto fv = values(p, f.functional);
  for (const auto& r : dual_description(proj.face, limits)) {
    const Functional g = lift_functional(proj, r.functional, p.width());
    FacetCertificate h;
    h.functional = rotate(fv, values(p, g), f.functional, g);
    h.incidence = incidence(p, h.functional);
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.functional < y.functional; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RidgeGraph ridge_graph(const VPolytope& p, const std::vector<FacetCertificate>& facets,
                       std::optional<std::vector<std::uint32_t>> nodes) {
  std::vector<std::uint32_t> ids;
  if (nodes) {
    ids = *nodes;
  } else {
    ids.resize(facets.size());
    std::iota(ids.begin(), ids.end(), 0U);
  }
  const std::size_t k = ids.size();
  const std::size_t d = p.width();
  RidgeGraph g;
  g.adjacency.assign(k, {});
  IndexSet common;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto& a = facets[ids[i]].incidence;
      const auto& b = facets[ids[j]].incidence;
      common.clear();
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (common.size() + 2 < d) continue;
      if (rank_of_rows(p.rows(), common, d - 1) != d - 2) continue;
      g.adjacency[i].push_back(static_cast<std::uint32_t>(j));
      g.adjacency[j].push_back(static_cast<std::uint32_t>(i));
    }
  g.connected = true;
  for (std::size_t s = 0; s < k; ++s) {
    std::vector<int> dist(k, -1);
    std::deque<std::size_t> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop_front();
      for (auto v : g.adjacency[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push_back(v);
        }
    }
    for (auto x : dist) {
      if (x < 0) g.connected = false;
      g.diameter = std::max<std::size_t>(g.diameter, static_cast<std::size_t>(std::max(x, 0)));
    }
  }
  return g;
}

std::vector<QVector> enumerate_vertices(const std::vector<AffineInequality>& ineqs, std::size_t dim, Mode mode,
                                        const DDLimits& limits) {
  IntMatrix a;
  if (mode == Mode::kPolytope) {
    for (const auto& q : ineqs) {
      Functional r{q.a0};
      r.insert(r.end(), q.a.begin(), q.a.end());
      a.append_row(r);
    }
    Functional t(dim + 1, 0);
    t[0] = 1;
    a.append_row(t);
  } else {
    for (const auto& q : ineqs) {
      if (q.a0 != 0) throw std::invalid_argument("enumerate_vertices: cone inequalities must be homogeneous");
      a.append_row(q.a);
    }
  }
  const auto er = extreme_rays(a, limits);
  std::vector<QVector> out;
  for (const auto& r : er.rays) {
    QVector v;
    if (mode == Mode::kPolytope) {
      if (r[0] <= 0) throw std::invalid_argument("enumerate_vertices: polyhedron is unbounded");
      for (std::size_t j = 1; j < r.size(); ++j) {
        Rational x(static_cast<long>(r[j]), static_cast<long>(r[0]));
        x.canonicalize();
        v.push_back(x);
      }
    } else {
      for (auto x : r) v.emplace_back(static_cast<long>(x));
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cutpoly
