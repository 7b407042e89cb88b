#pragma once
// Fine interior F(P) = intersection over all nonzero integer covectors nu of
// { x : <x,nu> >= ord_P(nu) + 1 }, together with its support set (the normals
// that are tight for F) and the canonical closure cut out by that support.
#include "lpk/polytope.hpp"

namespace lpk {

struct FineData {
  Polytope interior;        // F(P); the empty polytope when the cuts clash
  std::vector<V3> support;  // primitive nu with ord_F(nu) = ord_P(nu) + 1
};                          // (support is only populated for dim-3 input)

// accepts a lattice polytope of dim 3, or of dim 2 (computed inside the
// lattice of its own affine plane)
FineData fine_interior_data(const Polytope& P);
Polytope fine_interior(const Polytope& P);
std::vector<V3> support_set(const Polytope& P);  // dim 3 only

// intersection over the support set of { <x,nu> >= ord_P(nu) }: the smallest
// polytope containing P with the same Fine interior (dim 3 only)
Polytope canonical_closure(const Polytope& P);
bool is_canonically_closed(const Polytope& P);

}  // namespace lpk
