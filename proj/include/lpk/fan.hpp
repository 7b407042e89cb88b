#pragma once
// Complete fans in N: normal fans, common refinements, crepant simplicial
// refinements with a prescribed ray set, Reid's canonical/terminal cone
// tests, and (Q-)Cartier / basepoint-free divisor machinery.
#include "lpk/polytope.hpp"

namespace lpk {

struct Fan {
  std::vector<V3> rays;                     // primitive, deduplicated
  std::vector<std::vector<int>> max_cones;  // indices into rays, sorted
  std::vector<V3> cone_rays(size_t c) const;
};

Fan normal_fan(const Polytope& P);  // requires dim 3
Fan common_refinement(const Fan& A, const Fan& B);
// all 2-dimensional cones of the fan, as sorted primitive ray pairs
std::vector<std::array<V3, 2>> two_cones(const Fan& F);

// simplicial refinement with ray set exactly `rays` (which must contain every
// ray of F); cones over a lexicographic placing triangulation of each maximal
// cone's height-1 slice, so the result is deterministic and conforming
Fan crepant_simplicial_refinement(const Fan& F, const std::vector<V3>& rays);

// Reid: a cone is canonical when some functional equal to j > 0 on the
// primitive generators is >= j on every other nonzero lattice point of the
// cone, terminal when the inequality away from the generators is strict
bool cone_is_canonical(const std::vector<V3>& rays);
bool cone_is_terminal(const std::vector<V3>& rays);

// torus divisor sum a_i D_i as one coefficient per fan ray
using TorusDivisor = std::vector<Q>;
// the divisor with a_i = -ord_P(nu_i) (linearly equivalent to the hypersurface
// class the polytope defines)
TorusDivisor divisor_from_ord(const Polytope& P, const Fan& F);

// per-maximal-cone solutions of <m_sigma, nu_i> = -a_i; nullopt when some
// cone's system is inconsistent (divisor not Q-Cartier)
std::optional<std::vector<QV3>> cartier_data(const TorusDivisor& D, const Fan& F);
// least k with kD Cartier: lcm of all m_sigma denominators (capped at 10^6)
std::optional<Z> is_q_cartier(const TorusDivisor& D, const Fan& F);
bool is_basepointfree(const TorusDivisor& D, const Fan& F);  // D must be Cartier

// verifies the adjoint support function: ord_F - ord_P is exactly 1 on the
// whole support set (hence on all rays of the refined fan) and at least 1
// everywhere else, using the certificate the Fine-interior computation ran on
bool crepancy_check(const Polytope& P);

Q self_intersection_top(const Polytope& P_D);  // D^3 = 6 vol for ample D

std::string fan_to_json(const Fan& F);
std::string fan_to_dot(const Fan& F);  // maximal-cone adjacency, for debugging

}  // namespace lpk
