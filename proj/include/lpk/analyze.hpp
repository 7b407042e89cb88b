#pragma once
// Invariants of the nondegenerate hypersurface attached to a lattice
// polytope: geometric genus, Kodaira dimension, K^2 from the adjoint facet,
// section counts of the Fine interior, the ambient A_k point multiset, the
// fixed-point Dynkin graph, the canonical model's rational-double-point
// multiset, and the generic Picard number.
#include <map>

#include "lpk/fan.hpp"
#include "lpk/fine.hpp"

namespace lpk {

struct Invariants {
  Z pg{0}, q{0};
  int kappa{-1};                // min(dim F, 2); -1 when F is empty
  std::optional<Z> K2;          // l*(adjoint facet) - 1; absent without one
  Z index_m{0};                 // denominator index of F; 0 when F is empty
  std::array<Z, 3> sections{};  // |nF cap M| for n = 1, 2, 3
  Z chi() const { return Z(1 - q + pg); }
};

struct DynkinComponent {
  char type;  // 'A', 'D', or 'E'
  int rank;
};
std::string ade_label(const DynkinComponent& c);
int ade_rank(const std::string& label);

struct DynkinGraph {
  std::vector<V3> nodes;
  std::vector<std::pair<int, int>> edges;
  bool long_dual_edge = false;  // some dual edge has lattice length > 1
  // connected components classified as ADE diagrams; throws when one is not
  std::vector<DynkinComponent> components() const;
};

// everything at once (the fan and Fine-interior work is shared)
struct Report {
  Invariants inv;
  std::map<Z, Z> ambient;               // k -> number of A_k points on the ambient model
  DynkinGraph dynkin;                   // fixed-point graph (empty unless dim F = 3)
  std::vector<std::string> canonical_rdp;  // sorted ADE labels of the canonical model
  Z picard{0};                          // 1 + total RDP rank
};
Report analyze(const Polytope& P);

Invariants invariants(const Polytope& P);
std::map<Z, Z> ambient_singularities(const Polytope& P);
DynkinGraph fixed_point_dynkin(const Polytope& P);
std::vector<std::string> canonical_model_singularities(const Polytope& P);
Z generic_picard(const Polytope& P);
// whether the crepant morphism to the coarse model is an isomorphism:
// the adjoint-facet divisor is Q-Cartier on the polytope's own fan
bool rho_is_isomorphism(const Polytope& P);
// lattice length of the dual face of the 2-cone spanned by u, v when that
// face is an edge; 0 otherwise
Z orbit_intersection_count(const Polytope& P, const V3& u, const V3& v);

std::string report_json(const Polytope& P);

}  // namespace lpk
