#pragma once
// Exact integer/rational linear algebra over the rank-3 lattices M and N:
// primitive parts, determinants, normal forms, plane-lattice bases, cone
// multiplicities and Hilbert bases. Everything is GMP-exact; no floating
// point anywhere.
#include <gmpxx.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lpk {

using Z = mpz_class;
using Q = mpq_class;
using V3 = std::array<Z, 3>;   // integer vector (M or N; callers keep them apart)
using QV3 = std::array<Q, 3>;  // rational vector
using V2 = std::array<Z, 2>;
using QV2 = std::array<Q, 2>;
using M33 = std::array<V3, 3>;  // rows

// ---- small vector arithmetic ----
V3 add(const V3& a, const V3& b);
V3 sub(const V3& a, const V3& b);
V3 neg(const V3& a);
V3 mul(const Z& k, const V3& a);
Z dot(const V3& a, const V3& b);
V3 cross(const V3& a, const V3& b);
Z det3(const V3& r0, const V3& r1, const V3& r2);
bool is_zero(const V3& a);

QV3 qadd(const QV3& a, const QV3& b);
QV3 qsub(const QV3& a, const QV3& b);
QV3 qmul(const Q& k, const QV3& a);
Q qdot(const QV3& a, const V3& b);   // point-against-normal pairing
Q qqdot(const QV3& a, const QV3& b);
QV3 to_q(const V3& a);
bool is_integral(const QV3& a);
V3 to_z(const QV3& a);  // requires integral
bool qis_zero(const QV3& a);

Z cross2(const V2& a, const V2& b);
Q qcross2(const QV2& a, const QV2& b);
V2 sub2(const V2& a, const V2& b);
Z dot2(const V2& a, const V2& b);
Q qdot2(const QV2& a, const V2& b);

Z qfloor(const Q& x);
Z qceil(const Q& x);
Z zlcm(const Z& a, const Z& b);

std::string qstr(const Q& x);           // "p" or "p/q"
Q qparse(const std::string& s);

// ---- primitive parts ----
// v = factor * primitive with gcd(primitive) = 1, factor >= 1. Throws on 0.
std::pair<V3, Z> primitive_part(const V3& v);
V3 primitive(const V3& v);
// primitive integer vector pointing in the direction of a rational vector
V3 primitive_dir(const QV3& v);
std::pair<V2, Z> primitive_part2(const V2& v);

// rank of a list of integer (resp. rational) vectors
int rank_of(const std::vector<V3>& vs);
int rank_of_q(const std::vector<QV3>& vs);

// solve the 3x3 system <rows[i], x> = rhs[i]; nullopt if singular
std::optional<QV3> solve3(const std::array<QV3, 3>& rows, const QV3& rhs);
std::optional<QV3> solve3z(const std::array<V3, 3>& rows, const QV3& rhs);
// least-squares-free overdetermined solve: use 3 independent rows, verify rest
std::optional<QV3> solve_linear(const std::vector<V3>& rows, const std::vector<Q>& rhs);

// ---- Smith normal form ----
// A = U * S * V with U, V unimodular and S diagonal, s1 | s2 | s3 (up to sign).
struct Snf {
  M33 U, S, V;
};
Snf smith_normal_form(const M33& A);

// basis (as rows) of the lattice generated by integer row vectors; result has
// `rank` rows (row-style Hermite reduction)
std::vector<V3> lattice_row_basis(std::vector<V3> rows);

// lattice basis of { x in Z^3 : <x, w> = 0 } for primitive w
std::pair<V3, V3> kernel_basis(const V3& w);
// some p with <p, w> = 1 (w primitive)
V3 dual_partner(const V3& w);

// basis of the saturated plane lattice N ∩ span(u, v); throws on parallel input
std::pair<V3, V3> plane_lattice_basis(const V3& u, const V3& v);
// coordinates of x in the basis (b1, b2); nullopt if x not in the (rational) span
std::optional<QV2> in_plane_coords(const V3& b1, const V3& b2, const QV3& x);

// index of Zu + Zv inside the saturated plane lattice; = intrinsic multiplicity
// of the 2-cone spanned by u, v (A_{m-1} transversal type). Throws on parallel.
Z cone2_multiplicity(const V3& u, const V3& v);

// ---- Hilbert bases ----
// Minimal generating set of cone ∩ Z^2 for the pointed 2D cone spanned by u, v.
std::vector<V2> hilbert_basis_2d(const V2& u, const V2& v);
// Minimal generating set of cone ∩ Z^3 for a pointed rational cone of dim <= 3
// given by (not necessarily extreme) generators. Throws "cone contains a line"
// if not pointed, "zero has no primitive part" style errors propagate.
std::vector<V3> hilbert_basis(const std::vector<V3>& rays);

// extreme rays (primitive, sorted) of the pointed cone generated by `rays`
std::vector<V3> extreme_rays(const std::vector<V3>& rays);
// inward facet normals of a full-dimensional pointed cone from its rays
std::vector<V3> cone_facet_normals(const std::vector<V3>& rays);
// generators of the pointed cone { x : <a,x> >= 0 } (complete for cones of
// full dimension; lower-dimensional results come back with deficient rank)
std::vector<V3> cone_from_inequalities(const std::vector<V3>& normals);

}  // namespace lpk
