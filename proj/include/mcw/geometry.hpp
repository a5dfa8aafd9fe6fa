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

#ifndef MCW_GEOMETRY_HPP
#define MCW_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcw/polynomial.hpp"

namespace mcw {

using Point = std::vector<std::int64_t>;
using Point2 = std::array<std::int64_t, 2>;

/// Finite set of distinct integer points of one dimension (exponent
/// vectors; negatives allowed for Laurent supports).
struct PointSet {
  std::size_t dimension = 0;
  std::vector<Point> points;  // kept sorted and deduplicated

  static PointSet make(std::size_t dim, std::vector<Point> pts);
  std::size_t size() const { return points.size(); }
};

/// 2 x n integer matrix defining the linear map e |-> M e into the plane.
struct ShadowMatrix {
  std::array<std::vector<std::int64_t>, 2> rows;

  std::size_t columns() const { return rows[0].size(); }
  static ShadowMatrix zero(std::size_t n);
  Point2 apply(const Point& e) const;
};

/// Convex-hull vertices of a planar point set in counterclockwise order,
/// starting from the lexicographically smallest vertex. Collinear interior
/// points are not vertices. Exact integer arithmetic throughout.
std::vector<Point2> hull_vertices_2d(const PointSet& pts);
std::vector<Point2> hull_vertices_2d(std::vector<Point2> pts);

/// Exact rational LP feasibility test: is `p` a convex combination of
/// `others`? (simplex phase 1 with Bland's pivot rule).
bool point_in_convex_hull(const Point& p, const std::vector<Point>& others);

/// True iff no point of the set lies in the convex hull of the others.
/// Works in any dimension; |pts| <= cap or Errc::SearchTooLarge.
bool convexly_independent(const PointSet& pts, std::size_t cap = 64);

/// Support of p projected by M (collisions merged), then hull vertex count.
long shadow_vertex_count(const Polynomial& p, const ShadowMatrix& m);

enum class TransparencyVerdict {
  TransparentWitnessed,
  NotTransparentExhaustive,
  InconclusiveBoundedSearch,
};

const char* verdict_name(TransparencyVerdict v);

struct ShadowReport {
  ShadowMatrix witness;       // best matrix found
  PointSet projected;         // its 2D image of the support
  long vertex_count = 0;      // certified lower bound on the shadow complexity
  long support_size = 0;
  TransparencyVerdict verdict = TransparencyVerdict::InconclusiveBoundedSearch;
  std::optional<Point> dependency_certificate;  // support point inside the hull of the rest
  long matrices_tried = 0;
  bool exhaustive = false;
};

struct ShadowSearchOptions {
  long entry_bound = 2;          // K: matrix entries range over [-K, K]
  long budget = 5'000'000;       // max matrices in exhaustive mode
  long samples = 0;              // > 0 switches to sampled mode
  std::uint64_t seed = 0;        // sampled mode only
  std::size_t lp_cap = 64;       // cap for the dependency-certificate LP
};

/// Best vertex count over integral 2 x n matrices with entries in [-K, K],
/// exhaustive (lexicographic enumeration, first best kept) or sampled.
ShadowReport shadow_complexity_search(const Polynomial& p, const ShadowSearchOptions& opt = {});

/// Verdict for a user-supplied witness matrix, or a delegated search.
ShadowReport is_transparent(const Polynomial& p, const std::optional<ShadowMatrix>& witness,
                            const ShadowSearchOptions& opt = {});

PointSet minkowski_sum(const PointSet& a, const PointSet& b, std::size_t cap = 10000);

struct MinkowskiLemmaReport {
  bool sum_convexly_independent = false;
  std::size_t size_a = 0, size_b = 0, size_sum = 0;
  bool lemma_consistent = true;  // counterexample would signal a bug upstream
};

/// If A+B is convexly independent and |A| >= |B|, then |A|,|B| <= 2 or
/// |B| = 1. (2D convex independence via the hull route.)
MinkowskiLemmaReport check_minkowski_lemma(const PointSet& a, const PointSet& b,
                                           std::size_t cap = 10000);

}  // namespace mcw

#endif
