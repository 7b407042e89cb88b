#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "lpk/analyze.hpp"

using namespace lpk;

namespace {

// class-a bodies: the adjoint-facet triangle plus assorted generators
Polytope abd(const std::vector<V3>& extra) {
  std::vector<V3> pts{{2, 1, -2}, {2, 0, 1}, {2, 2, 1}};
  for (const auto& p : extra) pts.push_back(p);
  return hull_of(pts);
}
// class-b bodies
Polytope abcd(const std::vector<V3>& extra) {
  std::vector<V3> pts{{2, -3, 1}, {2, -1, 2}, {2, 0, 1}, {2, -1, 0}};
  for (const auto& p : extra) pts.push_back(p);
  return hull_of(pts);
}

Polytope octahedron() {
  return hull_of({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

}  // namespace

TEST_CASE("invariants of the flagship bodies") {
  Invariants ia = invariants(abd({{-4, -2, 1}}));  // the class-a maximal body
  CHECK(ia.pg == 1);
  CHECK(ia.q == 0);
  CHECK(ia.kappa == 2);
  REQUIRE(ia.K2.has_value());
  CHECK(*ia.K2 == 1);
  CHECK(ia.index_m == 6);
  CHECK(ia.sections == std::array<Z, 3>{1, 3, 5});
  CHECK(ia.chi() == 2);

  Invariants ic = invariants(hull_of({{2, 1, 5}, {-2, -1, -3}, {2, 0, 1}, {2, 2, 1}}));
  CHECK(ic.pg == 1);
  CHECK(ic.q == 0);
  CHECK(ic.kappa == 2);
  REQUIRE(ic.K2.has_value());
  CHECK(*ic.K2 == 2);
  CHECK(ic.index_m == 4);

  Invariants io = invariants(octahedron());
  CHECK(io.pg == 1);
  CHECK(io.kappa == 0);  // the K3 case
  CHECK(!io.K2.has_value());
}

TEST_CASE("ambient transversal points") {
  std::map<Z, Z> m547444 = ambient_singularities(abd({{-4, -2, 1}}));
  CHECK(m547444 == std::map<Z, Z>{{2, 3}});  // 3 x A_2

  std::map<Z, Z> m545317 = ambient_singularities(abcd({{-4, 3, -2}}));
  CHECK(m545317 == std::map<Z, Z>{{1, 3}});  // 3 x A_1

  std::map<Z, Z> m534866 = ambient_singularities(abd({{-1, -1, 1}, {0, 0, -1}, {-1, 0, 1}}));
  CHECK(m534866 == std::map<Z, Z>{{2, 3}, {1, 1}});  // 3A_2 + A_1
}

TEST_CASE("fixed-point Dynkin graphs") {
  DynkinGraph g0 = fixed_point_dynkin(abd({{-4, -2, 1}}));
  CHECK(g0.nodes.empty());
  CHECK(g0.components().empty());

  DynkinGraph g1 = fixed_point_dynkin(abd({{-1, -1, 1}, {0, 0, -1}, {-1, 0, 1}}));
  auto c1 = g1.components();
  REQUIRE(c1.size() == 1);
  CHECK(ade_label(c1[0]) == "E6");
  CHECK(!g1.long_dual_edge);

  // an arrow row routes through its closure and inherits its graph
  DynkinGraph g2 = fixed_point_dynkin(abd({{-2, -1, 1}}));
  auto c2 = g2.components();
  REQUIRE(c2.size() == 1);
  CHECK(ade_label(c2[0]) == "A8");
}

TEST_CASE("canonical model singularities and Picard numbers") {
  Polytope p534866 = abd({{-1, -1, 1}, {0, 0, -1}, {-1, 0, 1}});
  CHECK(canonical_model_singularities(p534866) == std::vector<std::string>{"A2", "E6"});
  CHECK(generic_picard(p534866) == 9);

  Polytope p499291 = abcd({{0, 1, 0}, {-1, 1, 0}, {-1, 1, -1}});
  CHECK(canonical_model_singularities(p499291) == std::vector<std::string>{"D7"});
  CHECK(generic_picard(p499291) == 8);

  Polytope pc = hull_of({{2, 1, 5}, {-2, -1, -3}, {2, 0, 1}, {2, 2, 1}});
  CHECK(canonical_model_singularities(pc) == std::vector<std::string>{"A3", "A3"});
  CHECK(generic_picard(pc) == 7);

  CHECK(generic_picard(abd({{-4, -2, 1}})) == 7);
  CHECK(generic_picard(abd({{-2, -1, 1}, {-1, 0, 1}, {-1, -1, 1}})) == 9);  // A_8
  CHECK(generic_picard(abcd({{-4, 3, -2}})) == 4);
}

TEST_CASE("whether the crepant morphism is an isomorphism") {
  CHECK(rho_is_isomorphism(abd({{-4, -2, 1}})));
  CHECK(rho_is_isomorphism(abd({{-1, -1, 1}, {0, 0, -1}, {-1, 0, 1}})));
  // closed but not in the isomorphism list
  CHECK(!rho_is_isomorphism(abd({{1, 0, 0}, {1, 1, 0}, {-2, -1, 1}})));
  // non-closed input is rejected
  CHECK_THROWS(rho_is_isomorphism(abd({{-2, -1, 1}})));
}

TEST_CASE("orbit intersection counts") {
  Polytope A = abd({{-4, -2, 1}});
  CHECK(orbit_intersection_count(A, {-1, 3, 1}, {2, -3, 1}) == 3);
  Polytope p534866 = abd({{-1, -1, 1}, {0, 0, -1}, {-1, 0, 1}});
  CHECK(orbit_intersection_count(p534866, {-1, 3, 1}, {2, -3, 1}) == 1);
  // a pair whose dual face is a vertex (both minimized at p alone)
  CHECK(orbit_intersection_count(A, {1, 0, 0}, {1, 1, 1}) == 0);
}

TEST_CASE("report serialization") {
  std::string js = report_json(abd({{-1, -1, 1}, {0, 0, -1}, {-1, 0, 1}}));
  CHECK(js.find("\"picard_generic\":9") != std::string::npos);
  CHECK(js.find("\"fixed_point\":\"E6\"") != std::string::npos);
  std::string jo = report_json(octahedron());
  CHECK(jo.find("\"reflexive\":true") != std::string::npos);
  CHECK(jo.find("\"kappa\":0") != std::string::npos);
}
