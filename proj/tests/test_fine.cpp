#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "lpk/fine.hpp"

using namespace lpk;

namespace {

Polytope max_a() {
  return hull_of({{-4, -2, 1}, {2, 1, -2}, {2, 0, 1}, {2, 2, 1}});
}
Polytope max_b() {
  return hull_of({{-4, 3, -2}, {2, -3, 1}, {2, -1, 2}, {2, 0, 1}, {2, -1, 0}});
}
Polytope octahedron() {
  return hull_of({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

bool same_verts(const Polytope& A, const Polytope& B) { return A.verts == B.verts; }

}  // namespace

TEST_CASE("Fine interior of the two maximal simplices") {
  Polytope FA = fine_interior(max_a());
  Polytope want_a = convex_hull({QV3{Q(0), Q(0), Q(0)}, QV3{Q(1), Q(1, 3), Q(0)},
                                 QV3{Q(1), Q(2, 3), Q(0)}, QV3{Q(1), Q(1, 2), Q(-1, 2)}});
  CHECK(same_verts(FA, want_a));
  CHECK(denominator_index(FA) == 6);

  Polytope FB = fine_interior(max_b());
  Polytope want_b = convex_hull({QV3{Q(0), Q(0), Q(0)}, QV3{Q(1), Q(-1), Q(1, 2)},
                                 QV3{Q(1), Q(-2, 3), Q(1, 3)}, QV3{Q(1), Q(-1, 2), Q(1, 2)},
                                 QV3{Q(1), Q(-2, 3), Q(2, 3)}});
  CHECK(same_verts(FB, want_b));
  CHECK(denominator_index(FB) == 6);
}

TEST_CASE("reflexive polytopes: Fine interior is the origin, closure is identity") {
  for (const Polytope& P : {octahedron(), hull_of({{1, 1, 1},
                                                   {1, 1, -1},
                                                   {1, -1, 1},
                                                   {1, -1, -1},
                                                   {-1, 1, 1},
                                                   {-1, 1, -1},
                                                   {-1, -1, 1},
                                                   {-1, -1, -1}})}) {
    FineData d = fine_interior_data(P);
    REQUIRE(d.interior.dim == 0);
    CHECK(d.interior.verts[0] == QV3{Q(0), Q(0), Q(0)});
    // the support of a reflexive polytope holds every facet normal
    std::set<V3> sup(d.support.begin(), d.support.end());
    for (const auto& f : P.facets) CHECK(sup.count(f.normal));
    CHECK(is_canonically_closed(P));
    CHECK(same_verts(canonical_closure(P), P));
  }
}

TEST_CASE("support set matches its defining property, with a box sweep") {
  Polytope P = max_a();
  FineData d = fine_interior_data(P);
  std::set<V3> sup(d.support.begin(), d.support.end());
  for (const auto& nu : sup) {
    CHECK(primitive(nu) == nu);
    CHECK(ord_of(d.interior, nu) == ord_of(P, nu) + 1);
  }
  // no member below |nu|_inf <= 4 is missed
  V3 nu;
  for (nu[0] = -4; nu[0] <= 4; ++nu[0])
    for (nu[1] = -4; nu[1] <= 4; ++nu[1])
      for (nu[2] = -4; nu[2] <= 4; ++nu[2]) {
        if (is_zero(nu) || primitive(nu) != nu) continue;
        bool tight = ord_of(d.interior, nu) == ord_of(P, nu) + 1;
        CHECK(tight == (sup.count(nu) > 0));
      }
}

TEST_CASE("canonical closure walks an inclusion chain upward") {
  // adding the two extra generators recovers the closure of the smaller body
  Polytope small = hull_of({{2, 1, -2}, {2, 0, 1}, {2, 2, 1}, {-2, -1, 0}, {-2, -1, 1}});
  Polytope big = hull_of(
      {{2, 1, -2}, {2, 0, 1}, {2, 2, 1}, {-2, -1, 0}, {-2, -1, 1}, {-1, 0, 1}, {-1, -1, 1}});
  Polytope C = canonical_closure(small);
  CHECK(same_verts(C, big));
  CHECK(!is_canonically_closed(small));
  CHECK(is_canonically_closed(big));
  // closure laws
  CHECK(same_verts(fine_interior(C), fine_interior(small)));
  CHECK(same_verts(canonical_closure(C), C));
  CHECK(is_canonically_closed(max_a()));
  CHECK(is_canonically_closed(max_b()));
}

TEST_CASE("two-dimensional Fine interior in the polygon's own plane") {
  Polytope T = hull_of({{0, 0, 0}, {4, 0, 0}, {0, 4, 0}});
  Polytope F = fine_interior(T);
  CHECK(same_verts(F, hull_of({{1, 1, 0}, {2, 1, 0}, {1, 2, 0}})));
  // a tilted plane as well
  Polytope S = hull_of({{0, 0, 0}, {4, 0, 4}, {0, 4, 4}});
  Polytope FS = fine_interior(S);
  CHECK(same_verts(FS, hull_of({{1, 1, 2}, {2, 1, 3}, {1, 2, 3}})));
}

TEST_CASE("random polygons: Fine interior equals hull of interior lattice points") {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<int> coord(-6, 6), npts(3, 6);
  int done = 0;
  while (done < 50) {
    std::vector<V3> pts;
    int n = npts(rng);
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng), 0});
    Polytope P = hull_of(pts);
    if (P.dim != 2) continue;
    ++done;
    Polytope F = fine_interior(P);
    std::vector<V3> inner = interior_lattice_points(P);
    if (inner.empty()) {
      CHECK(F.empty());
    } else {
      REQUIRE(!F.empty());
      CHECK(same_verts(F, hull_of(inner)));
    }
  }
}

TEST_CASE("a slab with no interior has empty Fine interior") {
  Polytope P = hull_of({{0, 0, 0}, {5, 0, 0}, {0, 5, 0}, {5, 5, 0}, {0, 0, 1}, {5, 0, 1},
                        {0, 5, 1}, {5, 5, 1}});
  CHECK(fine_interior(P).empty());
}
