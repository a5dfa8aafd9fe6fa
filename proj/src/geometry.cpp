/*
 *  Copyright 2026 the mcw developers
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#include "mcw/geometry.hpp"

#include <algorithm>
#include <set>

#include "mcw/error.hpp"

namespace mcw {

PointSet PointSet::make(std::size_t dim, std::vector<Point> pts) {
  for (const Point& p : pts)
    if (p.size() != dim) raise(Errc::ShapeError, "point dimension mismatch");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  PointSet s;
  s.dimension = dim;
  s.points = std::move(pts);
  return s;
}

ShadowMatrix ShadowMatrix::zero(std::size_t n) {
  ShadowMatrix m;
  m.rows[0].assign(n, 0);
  m.rows[1].assign(n, 0);
  return m;
}

Point2 ShadowMatrix::apply(const Point& e) const {
  if (e.size() != columns()) raise(Errc::ShapeError, "matrix/point dimension mismatch");
  Point2 out{0, 0};
  for (std::size_t i = 0; i < e.size(); ++i) {
    out[0] += rows[0][i] * e[i];
    out[1] += rows[1][i] * e[i];
  }
  return out;
}

namespace {

// exact orientation test; coordinates stay well below the 128-bit range
__int128 cross(const Point2& o, const Point2& a, const Point2& b) {
  return static_cast<__int128>(a[0] - o[0]) * (b[1] - o[1]) -
         static_cast<__int128>(a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

std::vector<Point2> hull_vertices_2d(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  // Andrew monotone chain; strict turns only, so collinear interior points
  // are excluded.
  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Point2> hull_vertices_2d(const PointSet& pts) {
  if (pts.dimension != 2) raise(Errc::ShapeError, "hull_vertices_2d needs dimension 2");
  std::vector<Point2> flat;
  flat.reserve(pts.points.size());
  for (const Point& p : pts.points) flat.push_back({p[0], p[1]});
  return hull_vertices_2d(std::move(flat));
}

// --- exact rational simplex (phase 1, Bland's rule) --------------------------

namespace {

/// Feasibility of { lambda >= 0 : A lambda = b } for a small dense system.
bool lp_feasible(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t k = a.size();       // constraints
  const std::size_t m = a[0].size();    // structural variables
  for (std::size_t i = 0; i < k; ++i) {
    if (b[i].sign() < 0) {
      b[i] = -b[i];
      for (auto& v : a[i]) v = -v;
    }
  }
  const std::size_t total = m + k;  // structural + artificial
  std::vector<std::vector<Rational>> t(k, std::vector<Rational>(total + 1));
  std::vector<std::size_t> basis(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[i][j] = a[i][j];
    t[i][m + i] = Rational(1);
    t[i][total] = b[i];
    basis[i] = m + i;
  }
  // reduced costs for minimizing the sum of artificials
  std::vector<Rational> cost(total + 1);
  for (std::size_t j = 0; j <= total; ++j) {
    Rational s(0);
    for (std::size_t i = 0; i < k; ++i) s += t[i][j];
    cost[j] = (j < m ? Rational(0) : (j < total ? Rational(1) : Rational(0))) - s;
  }
  // cost[j] for artificial j is 1 - sum = nonneg only when basis column; fix:
  // artificial columns start as basis columns with reduced cost 0.
  for (std::size_t i = 0; i < k; ++i) cost[m + i] = Rational(0);

  while (true) {
    // Bland: smallest column index with negative reduced cost
    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j) {
      if (cost[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == total) break;  // optimal
    // ratio test; ties by smallest basis variable index (Bland)
    std::size_t leave = k;
    Rational best_ratio(0);
    for (std::size_t i = 0; i < k; ++i) {
      if (t[i][enter].sign() > 0) {
        Rational ratio = t[i][total] / t[i][enter];
        if (leave == k || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave == k) break;  // unbounded; cannot happen in phase 1 but stay safe
    // pivot
    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
    }
    Rational f = cost[enter];
    for (std::size_t j = 0; j <= total; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  Rational objective(0);
  for (std::size_t i = 0; i < k; ++i)
    if (basis[i] >= m) objective += t[i][total];
  return objective.is_zero();
}

}  // namespace

bool point_in_convex_hull(const Point& p, const std::vector<Point>& others) {
  if (others.empty()) return false;
  const std::size_t dim = p.size();
  for (const Point& q : others)
    if (q.size() != dim) raise(Errc::ShapeError, "point dimension mismatch");
  // sum_j lambda_j q_j = p, sum_j lambda_j = 1, lambda >= 0
  std::vector<std::vector<Rational>> a(dim + 1, std::vector<Rational>(others.size()));
  std::vector<Rational> b(dim + 1);
  for (std::size_t d = 0; d < dim; ++d) {
    for (std::size_t j = 0; j < others.size(); ++j)
      a[d][j] = Rational(static_cast<long>(others[j][d]));
    b[d] = Rational(static_cast<long>(p[d]));
  }
  for (std::size_t j = 0; j < others.size(); ++j) a[dim][j] = Rational(1);
  b[dim] = Rational(1);
  return lp_feasible(std::move(a), std::move(b));
}

bool convexly_independent(const PointSet& pts, std::size_t cap) {
  if (pts.points.size() > cap)
    raise(Errc::SearchTooLarge, "convexly_independent: more than " + std::to_string(cap) +
                                    " points (exact-LP desk scale)");
  for (std::size_t i = 0; i < pts.points.size(); ++i) {
    std::vector<Point> others;
    others.reserve(pts.points.size() - 1);
    for (std::size_t j = 0; j < pts.points.size(); ++j)
      if (j != i) others.push_back(pts.points[j]);
    if (point_in_convex_hull(pts.points[i], others)) return false;
  }
  return true;
}

// --- shadows ------------------------------------------------------------------

namespace {

PointSet true_support(const Polynomial& p) {
  const auto& u = *p.universe();
  std::set<VarId> true_vars;
  for (VarId v : u.true_ids()) true_vars.insert(v);
  std::vector<Point> pts;
  for (const auto& [m, c] : p.terms()) {
    Point e(u.n_true(), 0);
    for (const auto& [var, exp] : m.entries()) {
      if (!u.is_true_var(var))
        raise(Errc::PreconditionViolation,
              "shadow operations need an aux-free polynomial (found '" + u.name(var) + "')");
      e[var] = exp;
    }
    pts.push_back(std::move(e));
  }
  return PointSet::make(u.n_true(), std::move(pts));
}

PointSet project(const PointSet& supp, const ShadowMatrix& m) {
  std::vector<Point> img;
  img.reserve(supp.points.size());
  for (const Point& e : supp.points) {
    Point2 q = m.apply(e);
    img.push_back({q[0], q[1]});
  }
  return PointSet::make(2, std::move(img));
}

long count_vertices(const PointSet& planar) {
  if (planar.points.empty()) return 0;
  return static_cast<long>(hull_vertices_2d(planar).size());
}

std::optional<Point> find_dependency(const PointSet& supp, std::size_t lp_cap) {
  if (supp.points.size() < 3 || supp.points.size() > lp_cap) return std::nullopt;
  for (std::size_t i = 0; i < supp.points.size(); ++i) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < supp.points.size(); ++j)
      if (j != i) others.push_back(supp.points[j]);
    if (point_in_convex_hull(supp.points[i], others)) return supp.points[i];
  }
  return std::nullopt;
}

bool matrix_less(const ShadowMatrix& a, const ShadowMatrix& b) {
  if (a.rows[0] != b.rows[0]) return a.rows[0] < b.rows[0];
  return a.rows[1] < b.rows[1];
}

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

const char* verdict_name(TransparencyVerdict v) {
  switch (v) {
    case TransparencyVerdict::TransparentWitnessed: return "TRANSPARENT_WITNESSED";
    case TransparencyVerdict::NotTransparentExhaustive: return "NOT_TRANSPARENT_EXHAUSTIVE";
    case TransparencyVerdict::InconclusiveBoundedSearch: return "INCONCLUSIVE_BOUNDED_SEARCH";
  }
  return "?";
}

long shadow_vertex_count(const Polynomial& p, const ShadowMatrix& m) {
  PointSet supp = true_support(p);
  if (m.columns() != supp.dimension)
    raise(Errc::ShapeError, "shadow matrix has wrong number of columns");
  return count_vertices(project(supp, m));
}

ShadowReport shadow_complexity_search(const Polynomial& p, const ShadowSearchOptions& opt) {
  PointSet supp = true_support(p);
  const std::size_t n = supp.dimension;
  ShadowReport rep;
  rep.support_size = static_cast<long>(supp.points.size());
  rep.witness = ShadowMatrix::zero(n);
  rep.projected = project(supp, rep.witness);
  rep.vertex_count = count_vertices(rep.projected);

  if (supp.points.size() <= 1) {
    // zero or one monomial: trivially transparent
    rep.verdict = TransparencyVerdict::TransparentWitnessed;
    rep.exhaustive = true;
    return rep;
  }

  auto dependency = find_dependency(supp, opt.lp_cap);
  rep.dependency_certificate = dependency;

  auto consider = [&](const ShadowMatrix& m) {
    PointSet img = project(supp, m);
    long count = count_vertices(img);
    ++rep.matrices_tried;
    if (count > rep.vertex_count ||
        (count == rep.vertex_count && matrix_less(m, rep.witness))) {
      rep.vertex_count = count;
      rep.witness = m;
      rep.projected = std::move(img);
    }
    return count == rep.support_size;
  };

  const long k = opt.entry_bound;
  if (opt.samples > 0) {
    SplitMix64 rng{opt.seed ^ 0xabcdef1234567890ull};
    for (long trial = 0; trial < opt.samples; ++trial) {
      ShadowMatrix m = ShadowMatrix::zero(n);
      for (std::size_t i = 0; i < n; ++i) {
        m.rows[0][i] = rng.range(-k, k);
        m.rows[1][i] = rng.range(-k, k);
      }
      if (consider(m)) break;
    }
    rep.exhaustive = false;
  } else {
    // budget check: (2K+1)^(2n) matrices
    long double space = 1;
    for (std::size_t i = 0; i < 2 * n; ++i) {
      space *= static_cast<long double>(2 * k + 1);
      if (space > static_cast<long double>(opt.budget))
        raise(Errc::SearchTooLarge,
              "exhaustive shadow search over (2K+1)^(2n) matrices exceeds the budget; "
              "use sampled mode or lower K");
    }
    std::vector<std::int64_t> flat(2 * n, -k);
    bool done = false;
    while (!done) {
      ShadowMatrix m = ShadowMatrix::zero(n);
      for (std::size_t i = 0; i < n; ++i) m.rows[0][i] = flat[i];
      for (std::size_t i = 0; i < n; ++i) m.rows[1][i] = flat[n + i];
      if (consider(m)) break;
      // odometer: last position increments fastest => lexicographic order
      std::size_t pos = flat.size();
      while (pos > 0) {
        --pos;
        if (flat[pos] < k) {
          ++flat[pos];
          std::fill(flat.begin() + static_cast<long>(pos) + 1, flat.end(), -k);
          break;
        }
        if (pos == 0) done = true;
      }
    }
    rep.exhaustive = true;
  }

  if (rep.vertex_count == rep.support_size) {
    rep.verdict = TransparencyVerdict::TransparentWitnessed;
  } else if (dependency) {
    // linear maps preserve convex combinations, so a dependent support can
    // never project to |supp| many vertices
    rep.verdict = TransparencyVerdict::NotTransparentExhaustive;
  } else {
    rep.verdict = TransparencyVerdict::InconclusiveBoundedSearch;
  }
  return rep;
}

ShadowReport is_transparent(const Polynomial& p, const std::optional<ShadowMatrix>& witness,
                            const ShadowSearchOptions& opt) {
  PointSet supp = true_support(p);
  if (!witness) {
    if (supp.points.size() > 1) {
      if (auto dep = find_dependency(supp, opt.lp_cap)) {
        // sound early exit, no search needed
        ShadowReport rep;
        rep.support_size = static_cast<long>(supp.points.size());
        rep.witness = ShadowMatrix::zero(supp.dimension);
        rep.projected = project(supp, rep.witness);
        rep.vertex_count = count_vertices(rep.projected);
        rep.dependency_certificate = dep;
        rep.verdict = TransparencyVerdict::NotTransparentExhaustive;
        return rep;
      }
    }
    return shadow_complexity_search(p, opt);
  }
  ShadowReport rep;
  rep.support_size = static_cast<long>(supp.points.size());
  rep.witness = *witness;
  rep.projected = project(supp, *witness);
  rep.vertex_count = count_vertices(rep.projected);
  rep.matrices_tried = 1;
  if (rep.vertex_count == rep.support_size) {
    rep.verdict = TransparencyVerdict::TransparentWitnessed;
    return rep;
  }
  rep.dependency_certificate = find_dependency(supp, opt.lp_cap);
  rep.verdict = rep.dependency_certificate ? TransparencyVerdict::NotTransparentExhaustive
                                           : TransparencyVerdict::InconclusiveBoundedSearch;
  return rep;
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b, std::size_t cap) {
  if (a.dimension != 2 || b.dimension != 2)
    raise(Errc::ShapeError, "minkowski_sum is defined for planar point sets");
  if (a.points.size() * b.points.size() > cap)
    raise(Errc::SearchTooLarge, "minkowski_sum: |A| * |B| exceeds the cap");
  std::vector<Point> pts;
  pts.reserve(a.points.size() * b.points.size());
  for (const Point& p : a.points)
    for (const Point& q : b.points) pts.push_back({p[0] + q[0], p[1] + q[1]});
  return PointSet::make(2, std::move(pts));
}

MinkowskiLemmaReport check_minkowski_lemma(const PointSet& a, const PointSet& b,
                                           std::size_t cap) {
  PointSet sum = minkowski_sum(a, b, cap);
  MinkowskiLemmaReport rep;
  rep.size_a = a.points.size();
  rep.size_b = b.points.size();
  rep.size_sum = sum.points.size();
  // 2D convex independence: every point a hull vertex (hull route; the
  // exact-LP route caps at 64 points, sums here may be larger)
  rep.sum_convexly_independent =
      hull_vertices_2d(sum).size() == sum.points.size();
  if (rep.sum_convexly_independent) {
    std::size_t big = std::max(rep.size_a, rep.size_b);
    std::size_t small = std::min(rep.size_a, rep.size_b);
    rep.lemma_consistent = (big <= 2) || (small == 1);
  }
  return rep;
}

}  // namespace mcw
