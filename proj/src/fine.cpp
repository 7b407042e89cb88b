#include "lpk/fine.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lpk {

namespace {

// a certified piece of the normal space: a full-dimensional cone on which
// ord_P(nu) = <u,nu> and ord_F(nu) = <v,nu>, so the gap is <witness,nu>
struct Cell {
  std::vector<V3> ineqs;
  std::vector<V3> rays;
  QV3 witness;  // v - u
};

Z int_level(const Q& q) {
  if (q.get_den() != 1) throw std::runtime_error("expected integral level");
  return q.get_num();
}

FineData fine_interior_3d(const Polytope& P) {
  std::map<V3, Z> cuts;  // primitive normal -> ord_P + 1
  for (const auto& f : P.facets) cuts[f.normal] = Z(int_level(f.level) + 1);

  std::vector<Cell> cells;
  Polytope F;
  for (int round = 0;; ++round) {
    if (round > 200) throw std::runtime_error("fine interior did not stabilize");
    std::vector<HalfSpace> hs;
    for (const auto& [n, l] : cuts) hs.push_back({n, Q(l)});
    F = halfspace_intersection(hs);
    if (F.empty()) return {F, {}};

    cells.clear();
    bool added = false;
    for (const auto& uq : P.verts) {
      V3 u = to_z(uq);
      for (const auto& v : F.verts) {
        Cell c;
        for (const auto& wq : P.verts) {
          QV3 d = qsub(wq, uq);
          if (!qis_zero(d)) c.ineqs.push_back(primitive_dir(d));
        }
        for (const auto& wq : F.verts) {
          QV3 d = qsub(wq, v);
          if (!qis_zero(d)) c.ineqs.push_back(primitive_dir(d));
        }
        std::sort(c.ineqs.begin(), c.ineqs.end());
        c.ineqs.erase(std::unique(c.ineqs.begin(), c.ineqs.end()), c.ineqs.end());
        c.rays = cone_from_inequalities(c.ineqs);
        if (rank_of(c.rays) < 3) continue;
        c.witness = qsub(v, uq);
        for (const auto& h : hilbert_basis(c.rays)) {
          Q gap = qqdot(c.witness, to_q(h));
          if (gap < 1) {
            Z lvl = Z(dot(u, h) + 1);  // u minimizes <.,h> over P on this cell
            if (cuts.emplace(h, lvl).second) added = true;
          }
        }
        cells.push_back(std::move(c));
      }
    }
    if (!added) break;  // every lattice direction is certified: gap >= 1
  }

  // support set: per certified cell, the lattice points of the compact slice
  // { nu in cell : <witness,nu> = 1 }
  std::set<V3> sup;
  for (const auto& c : cells) {
    std::vector<QV3> sv;
    for (const auto& r : c.rays) {
      Q g = qqdot(c.witness, to_q(r));
      // g > 0 on every ray of a certified cell (g >= 1 on its lattice points)
      sv.push_back(qmul(Q(1) / g, to_q(r)));
    }
    V3 lo, hi;
    for (int i = 0; i < 3; ++i) {
      Q mn = sv[0][(size_t)i], mx = sv[0][(size_t)i];
      for (const auto& p : sv) {
        mn = std::min(mn, p[(size_t)i]);
        mx = std::max(mx, p[(size_t)i]);
      }
      lo[(size_t)i] = qceil(mn);
      hi[(size_t)i] = qfloor(mx);
    }
    V3 nu;
    for (nu[0] = lo[0]; nu[0] <= hi[0]; ++nu[0])
      for (nu[1] = lo[1]; nu[1] <= hi[1]; ++nu[1])
        for (nu[2] = lo[2]; nu[2] <= hi[2]; ++nu[2]) {
          if (qqdot(c.witness, to_q(nu)) != 1) continue;
          bool in = true;
          for (const auto& a : c.ineqs)
            if (dot(a, nu) < 0) {
              in = false;
              break;
            }
          if (in) sup.insert(nu);
        }
  }
  return {F, {sup.begin(), sup.end()}};
}

// ---- the same machinery one dimension down, in the plane chart ----

V2 qdir2(const QV2& d) {
  Z l = zlcm(d[0].get_den(), d[1].get_den());
  V2 v{Z(d[0].get_num() * (l / d[0].get_den())), Z(d[1].get_num() * (l / d[1].get_den()))};
  return primitive_part2(v).first;
}

Q qqdot2(const QV2& a, const QV2& b) { return a[0] * b[0] + a[1] * b[1]; }

// vertices of { x : <x,n> >= level } as feasible pairwise line intersections
std::vector<QV2> halfplane_vertices(const std::vector<std::pair<V2, Z>>& cuts) {
  std::vector<QV2> pts;
  for (size_t i = 0; i < cuts.size(); ++i)
    for (size_t j = i + 1; j < cuts.size(); ++j) {
      Z d = cross2(cuts[i].first, cuts[j].first);
      if (d == 0) continue;
      QV2 x{Q(Z(cuts[i].second * cuts[j].first[1] - cuts[j].second * cuts[i].first[1]), d),
            Q(Z(cuts[i].first[0] * cuts[j].second - cuts[j].first[0] * cuts[i].second), d)};
      x[0].canonicalize();
      x[1].canonicalize();
      bool feas = true;
      for (const auto& [n, l] : cuts)
        if (qdot2(x, n) < l) {
          feas = false;
          break;
        }
      if (feas) pts.push_back(x);
    }
  return pts;
}

FineData fine_interior_2d(const Polytope& P) {
  PlaneChart ch = plane_chart(P);
  Polygon2 P2 = project_to_chart(P, ch);
  std::vector<QV2> pverts = P2.verts;

  std::map<V2, Z> cuts;
  for (const auto& e : P2.edges) cuts[e.normal] = Z(int_level(e.level) + 1);

  std::vector<QV2> fverts;
  for (int round = 0;; ++round) {
    if (round > 200) throw std::runtime_error("fine interior did not stabilize");
    std::vector<std::pair<V2, Z>> hs(cuts.begin(), cuts.end());
    fverts = halfplane_vertices(hs);
    if (fverts.empty()) return {Polytope{}, {}};
    Polygon2 F2 = hull2(fverts);
    fverts = F2.verts;

    bool added = false;
    for (const auto& uq : pverts)
      for (const auto& v : fverts) {
        std::set<V2> ineqs;
        for (const auto& w : pverts) {
          QV2 d{w[0] - uq[0], w[1] - uq[1]};
          if (d[0] != 0 || d[1] != 0) ineqs.insert(qdir2(d));
        }
        for (const auto& w : fverts) {
          QV2 d{w[0] - v[0], w[1] - v[1]};
          if (d[0] != 0 || d[1] != 0) ineqs.insert(qdir2(d));
        }
        // candidate rays: rotated inequality normals that satisfy everything
        std::set<V2> cand;
        for (const auto& a : ineqs)
          for (const V2& s : {V2{Z(-a[1]), a[0]}, V2{a[1], Z(-a[0])}}) {
            bool in = true;
            for (const auto& b : ineqs)
              if (dot2(b, s) < 0) {
                in = false;
                break;
              }
            if (in) cand.insert(s);
          }
        std::vector<V2> rays(cand.begin(), cand.end());
        // the cell is full-dimensional iff two candidates are independent
        V2 r1, r2;
        bool found = false;
        for (size_t i = 0; i < rays.size() && !found; ++i)
          for (size_t j = 0; j < rays.size() && !found; ++j) {
            if (i == j || cross2(rays[i], rays[j]) <= 0) continue;
            bool extreme = true;
            for (const auto& c : rays)
              if (cross2(rays[i], c) < 0 || cross2(c, rays[j]) < 0) {
                extreme = false;
                break;
              }
            if (extreme) {
              r1 = rays[i];
              r2 = rays[j];
              found = true;
            }
          }
        if (!found) continue;
        QV2 wc{v[0] - uq[0], v[1] - uq[1]};
        for (const auto& h : hilbert_basis_2d(r1, r2)) {
          if (qqdot2(wc, {Q(h[0]), Q(h[1])}) >= 1) continue;
          Q ord = qdot2(pverts[0], h);
          for (const auto& w : pverts) ord = std::min(ord, qdot2(w, h));
          if (cuts.emplace(h, Z(int_level(ord) + 1)).second) added = true;
        }
      }
    if (!added) break;
  }

  std::vector<QV3> back;
  for (const auto& t : fverts) back.push_back(ch.to3d(t));
  return {convex_hull(back), {}};
}

}  // namespace

FineData fine_interior_data(const Polytope& P) {
  if (!P.is_lattice()) throw std::runtime_error("fine interior needs a lattice polytope");
  if (P.dim == 3) return fine_interior_3d(P);
  if (P.dim == 2) {
    FineData d = fine_interior_2d(P);
    return d;
  }
  throw std::runtime_error("fine interior needs dim 2 or 3");
}

Polytope fine_interior(const Polytope& P) { return fine_interior_data(P).interior; }

std::vector<V3> support_set(const Polytope& P) {
  if (P.dim != 3) throw std::runtime_error("support set needs a dim-3 polytope");
  FineData d = fine_interior_data(P);
  if (d.interior.empty()) throw std::runtime_error("support set needs a nonempty Fine interior");
  return d.support;
}

Polytope canonical_closure(const Polytope& P) {
  std::vector<HalfSpace> hs;
  for (const auto& nu : support_set(P)) hs.push_back({nu, ord_of(P, nu)});
  return halfspace_intersection(hs);
}

bool is_canonically_closed(const Polytope& P) {
  return canonical_closure(P).verts == P.verts;
}

}  // namespace lpk
