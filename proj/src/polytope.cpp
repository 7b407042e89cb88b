#include "lpk/polytope.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>

namespace lpk {

static Q qdet3(const QV3& a, const QV3& b, const QV3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

static V2 primitive_dir2(const QV2& v) {
  Z l = zlcm(v[0].get_den(), v[1].get_den());
  V2 w{Z(v[0] * l), Z(v[1] * l)};
  return primitive_part2(w).first;
}

// ---- Polygon2 ----

bool Polygon2::contains(const QV2& x) const {
  if (dim < 0) return false;
  if (dim == 0) return x == verts[0];
  for (auto& e : edges)
    if (qdot2(x, e.normal) < e.level) return false;
  if (dim == 1) {
    // stay on the carrier line
    QV2 d{verts[1][0] - verts[0][0], verts[1][1] - verts[0][1]};
    QV2 r{x[0] - verts[0][0], x[1] - verts[0][1]};
    if (qcross2(d, r) != 0) return false;
  }
  return true;
}
bool Polygon2::contains_strict(const QV2& x) const {
  if (dim < 0) return false;
  if (dim == 0) return x == verts[0];
  for (auto& e : edges)
    if (qdot2(x, e.normal) <= e.level) return false;
  if (dim == 1) {
    QV2 d{verts[1][0] - verts[0][0], verts[1][1] - verts[0][1]};
    QV2 r{x[0] - verts[0][0], x[1] - verts[0][1]};
    if (qcross2(d, r) != 0) return false;
  }
  return true;
}

Polygon2 hull2(std::vector<QV2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Polygon2 out;
  if (pts.empty()) return out;
  if (pts.size() == 1) {
    out.dim = 0;
    out.verts = pts;
    return out;
  }
  // collinear?
  bool collinear = true;
  for (size_t i = 2; i < pts.size() && collinear; ++i) {
    QV2 d{pts[1][0] - pts[0][0], pts[1][1] - pts[0][1]};
    QV2 r{pts[i][0] - pts[0][0], pts[i][1] - pts[0][1]};
    collinear = (qcross2(d, r) == 0);
  }
  if (collinear) {
    out.dim = 1;
    out.verts = {pts.front(), pts.back()};  // lex order = order along the line
    V2 d = primitive_dir2({pts.back()[0] - pts.front()[0], pts.back()[1] - pts.front()[1]});
    out.edges.push_back({d, qdot2(pts.front(), d)});
    out.edges.push_back({{-d[0], -d[1]}, qdot2(pts.back(), {-d[0], -d[1]})});
    return out;
  }
  // monotone chain, CCW
  auto cr = [](const QV2& o, const QV2& a, const QV2& b) -> Q {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<QV2> h;
  for (auto& p : pts) {  // lower
    while (h.size() >= 2 && cr(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
    h.push_back(p);
  }
  size_t lower = h.size() + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {  // upper
    while (h.size() >= lower && cr(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
    h.push_back(*it);
  }
  h.pop_back();
  out.dim = 2;
  out.verts = h;
  for (size_t i = 0; i < h.size(); ++i) {
    const QV2& a = h[i];
    const QV2& b = h[(i + 1) % h.size()];
    V2 n = primitive_dir2({a[1] - b[1], b[0] - a[0]});  // inward for CCW
    out.edges.push_back({n, qdot2(a, n)});
  }
  return out;
}

std::vector<V2> lattice_points2(const Polygon2& P) {
  std::vector<V2> out;
  if (P.dim < 0) return out;
  Q x0 = P.verts[0][0], x1 = x0, y0 = P.verts[0][1], y1 = y0;
  for (auto& v : P.verts) {
    x0 = std::min(x0, v[0]);
    x1 = std::max(x1, v[0]);
    y0 = std::min(y0, v[1]);
    y1 = std::max(y1, v[1]);
  }
  for (Z x = qceil(x0); x <= qfloor(x1); ++x)
    for (Z y = qceil(y0); y <= qfloor(y1); ++y)
      if (P.contains({Q(x), Q(y)})) out.push_back({x, y});
  return out;
}
std::vector<V2> interior_lattice_points2(const Polygon2& P) {
  std::vector<V2> out;
  for (auto& p : lattice_points2(P))
    if (P.contains_strict({Q(p[0]), Q(p[1])})) out.push_back(p);
  return out;
}

// ---- PlaneChart ----

QV2 PlaneChart::to2d(const QV3& x) const {
  auto c = in_plane_coords(b1, b2, qsub(x, origin));
  if (!c) throw std::runtime_error("point not on chart plane");
  return *c;
}
QV3 PlaneChart::to3d(const QV2& t) const {
  return {origin[0] + t[0] * b1[0] + t[1] * b2[0], origin[1] + t[0] * b1[1] + t[1] * b2[1],
          origin[2] + t[0] * b1[2] + t[1] * b2[2]};
}

PlaneChart plane_chart_of(const V3& w, const Q& level) {
  PlaneChart c;
  c.w = w;
  c.level = level;
  auto [b1, b2] = kernel_basis(w);
  c.b1 = b1;
  c.b2 = b2;
  V3 p = dual_partner(w);
  c.origin = qmul(level, to_q(p));
  c.lattice_affine = (level.get_den() == 1);
  return c;
}

PlaneChart plane_chart(const Polytope& P) {
  if (P.dim != 2) throw std::runtime_error("plane_chart: polytope is not 2-dimensional");
  // the affine-hull equation is the first stored equation
  for (auto& e : P.equations) {
    // pick the equation whose normal is not constant on the plane... all are;
    // the plane itself is the one with rank-1 of the vertex differences: the
    // first equation always works for dim-2 polytopes built by convex_hull.
    return plane_chart_of(e.normal, e.level);
  }
  throw std::runtime_error("plane_chart: missing affine-hull equation");
}

Polygon2 project_to_chart(const Polytope& P, const PlaneChart& c) {
  std::vector<QV2> pts;
  for (auto& v : P.verts) pts.push_back(c.to2d(v));
  return hull2(pts);
}

// ---- Polytope basics ----

bool Polytope::is_lattice() const {
  for (auto& v : verts)
    if (!is_integral(v)) return false;
  return true;
}
bool Polytope::contains(const QV3& x) const {
  if (dim < 0) return false;
  for (auto& e : equations)
    if (qdot(x, e.normal) != e.level) return false;
  for (auto& f : facets)
    if (qdot(x, f.normal) < f.level) return false;
  if (dim == 0) return x == verts[0];
  return true;
}
bool Polytope::contains_strict(const QV3& x) const {
  if (dim < 0) return false;
  for (auto& e : equations)
    if (qdot(x, e.normal) != e.level) return false;
  for (auto& f : facets)
    if (qdot(x, f.normal) <= f.level) return false;
  if (dim == 0) return x == verts[0];
  return true;
}

// ---- convex hull ----

static Polytope hull_dim0(const QV3& p) {
  Polytope P;
  P.dim = 0;
  P.verts = {p};
  for (int i = 0; i < 3; ++i) {
    V3 e{0, 0, 0};
    e[i] = 1;
    P.equations.push_back({e, p[(size_t)i]});
  }
  return P;
}

static Polytope hull_dim1(const std::vector<QV3>& pts) {
  V3 d = primitive_dir(qsub(pts.back(), pts.front()));
  QV3 lo = pts.front(), hi = pts.front();
  for (auto& p : pts) {
    if (qdot(p, d) < qdot(lo, d)) lo = p;
    if (qdot(p, d) > qdot(hi, d)) hi = p;
  }
  Polytope P;
  P.dim = 1;
  P.verts = {lo, hi};
  std::sort(P.verts.begin(), P.verts.end());
  auto [n1, n2] = kernel_basis(d);
  P.equations.push_back({n1, qdot(lo, n1)});
  P.equations.push_back({n2, qdot(lo, n2)});
  P.facets.push_back({d, qdot(lo, d)});
  P.facets.push_back({neg(d), qdot(hi, neg(d))});
  return P;
}

static Polytope hull_dim2(const std::vector<QV3>& pts) {
  // plane normal from two independent differences
  V3 w{0, 0, 0};
  for (size_t i = 1; i < pts.size() && is_zero(w); ++i)
    for (size_t j = i + 1; j < pts.size() && is_zero(w); ++j) {
      QV3 a = qsub(pts[i], pts[0]), b = qsub(pts[j], pts[0]);
      QV3 c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
      if (!qis_zero(c)) w = primitive_dir(c);
    }
  Q level = qdot(pts[0], w);
  // 2D hull in an axis-drop projection (injective on the plane)
  int drop = 0;
  for (int i = 1; i < 3; ++i)
    if (abs(w[i]) > abs(w[drop])) drop = i;
  int a1 = (drop + 1) % 3, a2 = (drop + 2) % 3;
  std::vector<QV2> proj;
  for (auto& p : pts) proj.push_back({p[(size_t)a1], p[(size_t)a2]});
  Polygon2 pg = hull2(proj);
  auto lift = [&](const QV2& t) -> QV3 {
    for (auto& p : pts)
      if (p[(size_t)a1] == t[0] && p[(size_t)a2] == t[1]) return p;
    throw std::runtime_error("projection lift failed");
  };
  Polytope P;
  P.dim = 2;
  for (auto& t : pg.verts) P.verts.push_back(lift(t));
  P.equations.push_back({w, level});
  size_t n = P.verts.size();
  for (size_t i = 0; i < n; ++i) {
    const QV3& a = P.verts[i];
    const QV3& b = P.verts[(i + 1) % n];
    QV3 d = qsub(b, a);
    QV3 cn{d[1] * w[2] - d[2] * w[1], d[2] * w[0] - d[0] * w[2], d[0] * w[1] - d[1] * w[0]};
    V3 nrm = primitive_dir(cn);
    Q lvl = qdot(a, nrm);
    // orient inward
    bool ok = false;
    for (auto& p : P.verts)
      if (qdot(p, nrm) > lvl) {
        ok = true;
        break;
      }
    if (!ok) {
      nrm = neg(nrm);
      lvl = qdot(a, nrm);
    }
    P.facets.push_back({nrm, lvl});
  }
  std::sort(P.verts.begin(), P.verts.end());
  return P;
}

static Polytope hull_dim3(const std::vector<QV3>& pts) {
  std::map<V3, Q> facetmap;
  size_t n = pts.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        QV3 a = qsub(pts[j], pts[i]), b = qsub(pts[k], pts[i]);
        QV3 c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
        if (qis_zero(c)) continue;
        V3 nrm = primitive_dir(c);
        Q lvl = qdot(pts[i], nrm);
        bool lowall = true, highall = true;
        for (auto& p : pts) {
          Q s = qdot(p, nrm);
          if (s < lvl) lowall = false;
          if (s > lvl) highall = false;
        }
        if (lowall) facetmap.emplace(nrm, lvl);
        if (highall) facetmap.emplace(neg(nrm), -lvl);
      }
  Polytope P;
  P.dim = 3;
  for (auto& [nrm, lvl] : facetmap) P.facets.push_back({nrm, lvl});
  for (auto& p : pts) {
    std::vector<V3> act;
    for (auto& f : P.facets)
      if (qdot(p, f.normal) == f.level) act.push_back(f.normal);
    if (act.size() >= 3 && rank_of(act) == 3) P.verts.push_back(p);
  }
  std::sort(P.verts.begin(), P.verts.end());
  P.verts.erase(std::unique(P.verts.begin(), P.verts.end()), P.verts.end());
  return P;
}

Polytope convex_hull(std::vector<QV3> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return {};
  std::vector<QV3> diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(qsub(pts[i], pts[0]));
  int d = rank_of_q(diffs);
  if (d == 0) return hull_dim0(pts[0]);
  if (d == 1) return hull_dim1(pts);
  if (d == 2) return hull_dim2(pts);
  return hull_dim3(pts);
}

Polytope hull_of(const std::vector<V3>& pts) {
  std::vector<QV3> q;
  q.reserve(pts.size());
  for (auto& p : pts) q.push_back(to_q(p));
  return convex_hull(q);
}

Polytope halfspace_intersection(const std::vector<HalfSpace>& cuts,
                                const std::vector<HalfSpace>& eqs) {
  std::vector<HalfSpace> all = cuts;
  for (auto& e : eqs) {
    all.push_back(e);
    all.push_back({neg(e.normal), -e.level});
  }
  std::vector<V3> normals;
  for (auto& h : all) normals.push_back(h.normal);
  if (rank_of(normals) < 3) throw std::runtime_error("halfspace intersection is unbounded");
  // recession cone must be {0}
  for (size_t i = 0; i < normals.size(); ++i)
    for (size_t j = i + 1; j < normals.size(); ++j) {
      V3 r = cross(normals[i], normals[j]);
      if (is_zero(r)) continue;
      for (V3 y : {primitive(r), primitive(neg(r))}) {
        bool rec = true;
        for (auto& h : all)
          if (dot(y, h.normal) < 0) {
            rec = false;
            break;
          }
        if (rec) throw std::runtime_error("halfspace intersection is unbounded");
      }
    }
  auto feasible = [&](const QV3& x) {
    for (auto& h : all)
      if (qdot(x, h.normal) < h.level) return false;
    return true;
  };
  std::vector<QV3> pts;
  size_t n = all.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        auto x = solve3z({all[i].normal, all[j].normal, all[k].normal},
                         {all[i].level, all[j].level, all[k].level});
        if (x && feasible(*x)) pts.push_back(*x);
      }
  return convex_hull(pts);
}

// ---- enumeration ----

std::vector<V3> lattice_points(const Polytope& P) {
  std::vector<V3> out;
  if (P.empty()) return out;
  QV3 lo = P.verts[0], hi = P.verts[0];
  for (auto& v : P.verts)
    for (int i = 0; i < 3; ++i) {
      lo[(size_t)i] = std::min(lo[(size_t)i], v[(size_t)i]);
      hi[(size_t)i] = std::max(hi[(size_t)i], v[(size_t)i]);
    }
  for (Z x = qceil(lo[0]); x <= qfloor(hi[0]); ++x)
    for (Z y = qceil(lo[1]); y <= qfloor(hi[1]); ++y)
      for (Z z = qceil(lo[2]); z <= qfloor(hi[2]); ++z) {
        QV3 p{Q(x), Q(y), Q(z)};
        if (P.contains(p)) out.push_back({x, y, z});
      }
  return out;
}
Z lattice_count(const Polytope& P) { return Z((long)lattice_points(P).size()); }

std::vector<V3> interior_lattice_points(const Polytope& P) {
  std::vector<V3> out;
  for (auto& p : lattice_points(P))
    if (P.contains_strict(to_q(p))) out.push_back(p);
  return out;
}
Z interior_count(const Polytope& P) { return Z((long)interior_lattice_points(P).size()); }

Q ord_of(const Polytope& P, const V3& nu) {
  if (P.empty()) throw std::runtime_error("ord of empty polytope");
  Q m = qdot(P.verts[0], nu);
  for (auto& v : P.verts) m = std::min(m, qdot(v, nu));
  return m;
}

// ---- algebra ----

Polytope minkowski_sum(const Polytope& P, const Polytope& Q) {
  if (P.empty() || Q.empty()) return {};
  std::vector<QV3> pts;
  for (auto& a : P.verts)
    for (auto& b : Q.verts) pts.push_back(qadd(a, b));
  return convex_hull(pts);
}

Polytope qdilate(const Polytope& P, const Q& n) {
  if (n <= 0) throw std::runtime_error("dilation factor must be positive");
  if (P.empty()) return P;
  std::vector<QV3> pts;
  for (auto& v : P.verts) pts.push_back(qmul(n, v));
  return convex_hull(pts);
}
Polytope dilate(const Polytope& P, const Z& n) { return qdilate(P, Q(n)); }

Polytope translate(const Polytope& P, const QV3& t) {
  if (P.empty()) return P;
  std::vector<QV3> pts;
  for (auto& v : P.verts) pts.push_back(qadd(v, t));
  return convex_hull(pts);
}

Z denominator_index(const Polytope& P) {
  Z m = 1;
  for (auto& v : P.verts)
    for (auto& c : v) m = zlcm(m, c.get_den());
  return m;
}

Polytope minimizing_face(const Polytope& P, const std::vector<V3>& normals) {
  if (P.empty() || normals.empty()) throw std::runtime_error("minimizing_face: bad input");
  std::vector<QV3> keep = P.verts;
  for (auto& nu : normals) {
    Q m = ord_of(P, nu);
    std::vector<QV3> next;
    for (auto& v : keep)
      if (qdot(v, nu) == m) next.push_back(v);
    keep = next;
    if (keep.empty()) {
      // minima of the individual normals are attained on disjoint faces; the
      // joint minimizing face is the face of the cone spanned by them, which
      // for polytope normal fans always exists -- recompute jointly below
      break;
    }
  }
  if (keep.empty()) {
    // minimize the sum functional, then filter (works when the normals span a
    // cone of the normal fan; callers only use it in that situation)
    V3 s{0, 0, 0};
    for (auto& nu : normals) s = add(s, nu);
    Q m = ord_of(P, s);
    for (auto& v : P.verts)
      if (qdot(v, s) == m) keep.push_back(v);
  }
  return convex_hull(keep);
}

Z edge_lattice_length(const QV3& s, const QV3& t) {
  if (!is_integral(s) || !is_integral(t)) throw std::runtime_error("lattice length undefined");
  if (s == t) return 0;
  return primitive_part(sub(to_z(t), to_z(s))).second;
}

Q volume(const Polytope& P) {
  if (P.dim != 3) throw std::runtime_error("not full-dimensional");
  const QV3& v0 = P.verts[0];
  Q vol = 0;
  for (auto& f : P.facets) {
    if (qdot(v0, f.normal) == f.level) continue;
    std::vector<QV3> fv;
    for (auto& v : P.verts)
      if (qdot(v, f.normal) == f.level) fv.push_back(v);
    // cyclic order via axis-drop projection
    int drop = 0;
    for (int i = 1; i < 3; ++i)
      if (abs(f.normal[i]) > abs(f.normal[drop])) drop = i;
    int a1 = (drop + 1) % 3, a2 = (drop + 2) % 3;
    std::vector<QV2> proj;
    for (auto& p : fv) proj.push_back({p[(size_t)a1], p[(size_t)a2]});
    Polygon2 pg = hull2(proj);
    auto lift = [&](const QV2& t) -> QV3 {
      for (auto& p : fv)
        if (p[(size_t)a1] == t[0] && p[(size_t)a2] == t[1]) return p;
      throw std::runtime_error("projection lift failed");
    };
    for (size_t i = 1; i + 1 < pg.verts.size(); ++i) {
      Q d = qdet3(qsub(lift(pg.verts[0]), v0), qsub(lift(pg.verts[i]), v0),
                  qsub(lift(pg.verts[i + 1]), v0));
      vol += abs(d);
    }
  }
  return vol / 6;
}

// ---- isomorphism ----

QV3 apply_map(const AffMap& m, const QV3& x) {
  QV3 y;
  for (int i = 0; i < 3; ++i)
    y[(size_t)i] = x[0] * m.U[(size_t)i][0] + x[1] * m.U[(size_t)i][1] + x[2] * m.U[(size_t)i][2] +
                   m.t[(size_t)i];
  return y;
}

std::optional<V3> lattice_translate_of(const Polytope& P, const Polytope& Q) {
  if (P.dim != Q.dim || P.verts.size() != Q.verts.size() || P.empty()) return std::nullopt;
  QV3 t = qsub(Q.verts[0], P.verts[0]);
  if (!is_integral(t)) return std::nullopt;
  for (size_t i = 0; i < P.verts.size(); ++i)
    if (qadd(P.verts[i], t) != Q.verts[i]) return std::nullopt;
  return to_z(t);
}

std::optional<AffMap> lattice_isomorphic(const Polytope& P, const Polytope& Q) {
  if (P.dim != Q.dim || P.empty()) return std::nullopt;
  if (P.verts.size() != Q.verts.size()) return std::nullopt;
  if (denominator_index(P) != denominator_index(Q)) return std::nullopt;
  // affine basis of P
  std::vector<QV3> base{P.verts[0]};
  std::vector<QV3> dirs;
  for (auto& v : P.verts) {
    if (base.size() == 4) break;
    std::vector<QV3> trial = dirs;
    trial.push_back(qsub(v, P.verts[0]));
    if (rank_of_q(trial) > (int)dirs.size()) {
      dirs = trial;
      base.push_back(v);
    }
  }
  if (base.size() != 4) {
    // lower-dimensional P: extend with synthetic lattice directions off the
    // affine hull so that U is still determined; sufficient for our uses,
    // where isomorphism tests are on full-dimensional bodies
    return std::nullopt;
  }
  std::set<QV3> qset(Q.verts.begin(), Q.verts.end());
  size_t n = Q.verts.size();
  for (size_t i0 = 0; i0 < n; ++i0)
    for (size_t i1 = 0; i1 < n; ++i1)
      for (size_t i2 = 0; i2 < n; ++i2)
        for (size_t i3 = 0; i3 < n; ++i3) {
          if (i1 == i0 || i2 == i0 || i2 == i1 || i3 == i0 || i3 == i1 || i3 == i2) continue;
          const QV3 &w0 = Q.verts[i0], &w1 = Q.verts[i1], &w2 = Q.verts[i2], &w3 = Q.verts[i3];
          // solve U * (base[k]-base[0]) = w_k - w0 for k = 1..3, row by row
          std::array<QV3, 3> D{qsub(base[1], base[0]), qsub(base[2], base[0]),
                               qsub(base[3], base[0])};
          std::array<QV3, 3> W{qsub(w1, w0), qsub(w2, w0), qsub(w3, w0)};
          M33 U;
          bool ok = true;
          for (int r = 0; r < 3 && ok; ++r) {
            auto row = solve3(D, {W[0][(size_t)r], W[1][(size_t)r], W[2][(size_t)r]});
            if (!row) {
              ok = false;
              break;
            }
            for (int c = 0; c < 3; ++c) {
              if ((*row)[(size_t)c].get_den() != 1) {
                ok = false;
                break;
              }
              U[(size_t)r][(size_t)c] = (*row)[(size_t)c].get_num();
            }
          }
          if (!ok) continue;
          if (abs(det3(U[0], U[1], U[2])) != 1) continue;
          QV3 Ub{base[0][0] * U[0][0] + base[0][1] * U[0][1] + base[0][2] * U[0][2],
                 base[0][0] * U[1][0] + base[0][1] * U[1][1] + base[0][2] * U[1][2],
                 base[0][0] * U[2][0] + base[0][1] * U[2][1] + base[0][2] * U[2][2]};
          QV3 tq = qsub(w0, Ub);
          if (!is_integral(tq)) continue;
          AffMap m{U, to_z(tq)};
          bool match = true;
          for (auto& v : P.verts)
            if (!qset.count(apply_map(m, v))) {
              match = false;
              break;
            }
          if (match) return m;
        }
  return std::nullopt;
}

// ---- predicates ----

bool is_reflexive(const Polytope& P) {
  if (P.dim == 3) {
    if (!P.is_lattice()) return false;
    auto ip = interior_lattice_points(P);
    if (ip.size() != 1) return false;
    QV3 c = to_q(ip[0]);
    for (auto& f : P.facets)
      if (qdot(c, f.normal) - f.level != 1) return false;
    return true;
  }
  if (P.dim == 2) {
    PlaneChart ch = plane_chart(P);
    if (!ch.lattice_affine) return false;
    Polygon2 pg = project_to_chart(P, ch);
    auto ip = interior_lattice_points2(pg);
    if (ip.size() != 1) return false;
    QV2 c{Q(ip[0][0]), Q(ip[0][1])};
    for (auto& e : pg.edges)
      if (qdot2(c, e.normal) - e.level != 1) return false;
    return true;
  }
  return false;
}

bool is_canonical_fano(const Polytope& P) {
  if (P.dim != 3 || !P.is_lattice()) return false;
  auto ip = interior_lattice_points(P);
  if (ip.size() != 1) return false;
  for (auto& v : P.verts) {
    V3 d = sub(to_z(v), ip[0]);
    if (primitive_part(d).second != 1) return false;
  }
  return true;
}

// ---- JSON ----

using nlohmann::json;

static json qv3_to_json(const QV3& v) {
  json a = json::array();
  for (auto& c : v) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p())
      a.push_back(c.get_num().get_si());
    else
      a.push_back(qstr(c));
  }
  return a;
}
static Q coord_from_json(const json& j) {
  if (j.is_number_integer()) return Q((long)j.get<long long>());
  if (j.is_string()) return qparse(j.get<std::string>());
  throw std::runtime_error("bad coordinate in polytope JSON");
}

std::string polytope_to_json(const Polytope& P, bool with_facets) {
  json j;
  j["dim"] = P.dim;
  j["vertices"] = json::array();
  for (auto& v : P.verts) j["vertices"].push_back(qv3_to_json(v));
  if (with_facets) {
    j["facets"] = json::array();
    for (auto& f : P.facets) {
      json jf;
      jf["normal"] = {f.normal[0].get_si(), f.normal[1].get_si(), f.normal[2].get_si()};
      jf["level"] = qstr(f.level);
      j["facets"].push_back(jf);
    }
    for (auto& e : P.equations) {
      json je;
      je["normal"] = {e.normal[0].get_si(), e.normal[1].get_si(), e.normal[2].get_si()};
      je["level"] = qstr(e.level);
      j["equations"].push_back(je);
    }
  }
  return j.dump();
}

Polytope polytope_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw std::runtime_error("polytope JSON must contain a \"vertices\" array");
  std::vector<QV3> pts;
  for (auto& jv : j["vertices"]) {
    if (!jv.is_array() || jv.size() != 3)
      throw std::runtime_error("each vertex must be a 3-element array");
    pts.push_back({coord_from_json(jv[0]), coord_from_json(jv[1]), coord_from_json(jv[2])});
  }
  return convex_hull(pts);
}

}  // namespace lpk
