#pragma once
// Dual-representation polytopes with exact rational vertices: hulls, facet
// presentations, lattice point enumeration, Minkowski sums, dilation, volume,
// faces dual to normal directions, lattice isomorphism testing.
#include <map>

#include "lpk/lattice.hpp"

namespace lpk {

// inequality <x, normal> >= level, normal a primitive integer covector
struct HalfSpace {
  V3 normal;
  Q level;
  bool operator==(const HalfSpace& o) const = default;
};

struct Polytope {
  int dim = -1;                      // -1 = empty, else 0..3
  std::vector<QV3> verts;            // extreme points, lex sorted
  std::vector<HalfSpace> facets;     // irredundant relative facets, inward
  std::vector<HalfSpace> equations;  // affine-hull equalities (dim < 3)

  bool empty() const { return dim < 0; }
  bool is_lattice() const;
  bool contains(const QV3& x) const;
  bool contains_strict(const QV3& x) const;  // in the relative interior
};

// 2D machinery (used for facet geometry and plane-lattice computations)
struct HalfPlane {
  V2 normal;
  Q level;  // <x, normal> >= level
};
struct Polygon2 {
  int dim = -1;
  std::vector<QV2> verts;  // CCW cycle for dim 2
  std::vector<HalfPlane> edges;
  bool contains(const QV2& x) const;
  bool contains_strict(const QV2& x) const;
};
Polygon2 hull2(std::vector<QV2> pts);
std::vector<V2> lattice_points2(const Polygon2& P);
std::vector<V2> interior_lattice_points2(const Polygon2& P);

// affine chart of a rational plane in 3-space; maps the plane's lattice
// (when the plane contains lattice points) onto Z^2
struct PlaneChart {
  QV3 origin;
  V3 b1, b2;  // direction-lattice basis
  V3 w;       // primitive plane normal
  Q level;
  bool lattice_affine = false;  // origin is a lattice point
  QV2 to2d(const QV3& x) const;
  QV3 to3d(const QV2& t) const;
};
PlaneChart plane_chart_of(const V3& w, const Q& level);
PlaneChart plane_chart(const Polytope& P);  // requires dim(P) == 2
Polygon2 project_to_chart(const Polytope& P, const PlaneChart& c);

// ---- construction ----
Polytope convex_hull(std::vector<QV3> pts);
Polytope hull_of(const std::vector<V3>& pts);
// intersection of halfspaces (plus optional equalities); input must describe a
// bounded set, which is verified; empty intersection gives the empty polytope
Polytope halfspace_intersection(const std::vector<HalfSpace>& cuts,
                                const std::vector<HalfSpace>& eqs = {});

// ---- queries ----
std::vector<V3> lattice_points(const Polytope& P);
Z lattice_count(const Polytope& P);
std::vector<V3> interior_lattice_points(const Polytope& P);  // relative interior
Z interior_count(const Polytope& P);
Q ord_of(const Polytope& P, const V3& nu);  // min <x, nu> over P

Polytope minkowski_sum(const Polytope& P, const Polytope& Q);
Polytope dilate(const Polytope& P, const Z& n);
Polytope qdilate(const Polytope& P, const Q& n);
Polytope translate(const Polytope& P, const QV3& t);
Z denominator_index(const Polytope& P);
Polytope minimizing_face(const Polytope& P, const std::vector<V3>& normals);
Z edge_lattice_length(const QV3& s, const QV3& t);
Q volume(const Polytope& P);  // requires dim 3

struct AffMap {
  M33 U;  // unimodular, acts as x -> U x + t (rows)
  V3 t;
};
QV3 apply_map(const AffMap& m, const QV3& x);
std::optional<AffMap> lattice_isomorphic(const Polytope& P, const Polytope& Q);
// pure lattice translation with P + t = Q, if one exists
std::optional<V3> lattice_translate_of(const Polytope& P, const Polytope& Q);

bool is_reflexive(const Polytope& P);       // dim 3 or dim 2 (in its plane lattice)
bool is_canonical_fano(const Polytope& P);  // dim 3

// ---- JSON ----
std::string polytope_to_json(const Polytope& P, bool with_facets = true);
Polytope polytope_from_json(const std::string& text);

}  // namespace lpk
