#include "lpk/fan.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lpk/fine.hpp"

namespace lpk {

std::vector<V3> Fan::cone_rays(size_t c) const {
  std::vector<V3> out;
  for (int i : max_cones[c]) out.push_back(rays[(size_t)i]);
  return out;
}

namespace {

Fan make_fan(const std::vector<std::vector<V3>>& cones_in) {
  std::set<std::vector<V3>> cones;
  for (auto c : cones_in) {
    std::sort(c.begin(), c.end());
    cones.insert(c);
  }
  std::map<V3, int> idx;
  Fan F;
  for (const auto& c : cones)
    for (const auto& r : c)
      if (idx.emplace(r, 0).second) F.rays.push_back(r);
  std::sort(F.rays.begin(), F.rays.end());
  for (size_t i = 0; i < F.rays.size(); ++i) idx[F.rays[i]] = (int)i;
  for (const auto& c : cones) {
    std::vector<int> ix;
    for (const auto& r : c) ix.push_back(idx[r]);
    std::sort(ix.begin(), ix.end());
    F.max_cones.push_back(ix);
  }
  std::sort(F.max_cones.begin(), F.max_cones.end());
  return F;
}

// lexicographic placing triangulation; every input point becomes a vertex,
// boundary edges get split at every point lying on them, so triangulations of
// neighbouring cones agree along shared faces
std::vector<std::array<int, 3>> placing_triangulation(const std::vector<V2>& pts) {
  size_t n = pts.size();
  std::vector<int> ord(n);
  std::iota(ord.begin(), ord.end(), 0);
  std::sort(ord.begin(), ord.end(), [&](int a, int b) { return pts[(size_t)a] < pts[(size_t)b]; });

  std::vector<std::array<int, 3>> tris;
  std::vector<int> hull;  // CCW cycle, keeps collinear boundary points
  std::vector<int> chain{ord[0]};
  size_t k = 1;
  while (k < n && hull.empty()) {
    int p = ord[k++];
    if (chain.size() < 2) {
      chain.push_back(p);
      continue;
    }
    auto at = [&](int i) { return pts[(size_t)i]; };
    Z c = cross2(sub2(at(chain[1]), at(chain[0])), sub2(at(p), at(chain[0])));
    if (c == 0) {  // still one line; lex order walks along it
      chain.push_back(p);
      continue;
    }
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      if (c > 0)
        tris.push_back({chain[i], chain[i + 1], p});
      else
        tris.push_back({chain[i + 1], chain[i], p});
    }
    if (c > 0)
      hull = chain;
    else
      hull.assign(chain.rbegin(), chain.rend());
    hull.push_back(p);
  }
  if (hull.empty()) throw std::runtime_error("triangulation input is collinear");

  for (; k < n; ++k) {
    int p = ord[k];  // lex order: p is strictly outside the current hull
    size_t m = hull.size();
    std::vector<bool> vis(m);
    for (size_t i = 0; i < m; ++i) {
      const V2& a = pts[(size_t)hull[i]];
      const V2& b = pts[(size_t)hull[(i + 1) % m]];
      vis[i] = cross2(sub2(b, a), sub2(pts[(size_t)p], a)) < 0;
    }
    for (size_t i = 0; i < m; ++i)
      if (vis[i]) tris.push_back({hull[(i + 1) % m], hull[i], p});
    size_t s = 0;
    while (s < m && !(vis[s] && !vis[(s + m - 1) % m])) ++s;
    if (s == m) throw std::runtime_error("triangulation insertion saw no hull edge");
    size_t e = s;
    while (vis[(e + 1) % m]) e = (e + 1) % m;
    std::vector<int> nh;
    for (size_t i = (e + 1) % m;; i = (i + 1) % m) {
      nh.push_back(hull[i]);
      if (i == s) break;
    }
    nh.push_back(p);
    hull = nh;
  }
  return tris;
}

struct ReidWitness {
  V3 m;
  Z j;
};

std::optional<ReidWitness> reid_witness(const std::vector<V3>& ext) {
  std::vector<Q> ones(ext.size(), Q(1));
  auto m = solve_linear(ext, ones);
  if (!m) return std::nullopt;
  Z l = 1;
  for (const auto& c : *m) l = zlcm(l, c.get_den());
  V3 mi;
  for (int i = 0; i < 3; ++i)
    mi[(size_t)i] = Z((*m)[(size_t)i].get_num() * (l / (*m)[(size_t)i].get_den()));
  auto [prim, fac] = primitive_part(mi);
  return ReidWitness{prim, Z(l / fac)};
}

}  // namespace

Fan normal_fan(const Polytope& P) {
  if (P.dim != 3) throw std::runtime_error("normal fan needs a full-dimensional polytope");
  std::vector<std::vector<V3>> cones;
  for (const auto& v : P.verts) {
    std::vector<V3> rs;
    for (const auto& f : P.facets)
      if (qdot(v, f.normal) == f.level) rs.push_back(f.normal);
    cones.push_back(rs);
  }
  return make_fan(cones);
}

Fan common_refinement(const Fan& A, const Fan& B) {
  std::vector<std::vector<V3>> cones;
  for (size_t a = 0; a < A.max_cones.size(); ++a) {
    std::vector<V3> ineqA = cone_facet_normals(A.cone_rays(a));
    for (size_t b = 0; b < B.max_cones.size(); ++b) {
      std::vector<V3> ineq = ineqA;
      for (const auto& nb : cone_facet_normals(B.cone_rays(b))) ineq.push_back(nb);
      std::vector<V3> gens = cone_from_inequalities(ineq);
      if (rank_of(gens) == 3) cones.push_back(extreme_rays(gens));
    }
  }
  return make_fan(cones);
}

std::vector<std::array<V3, 2>> two_cones(const Fan& F) {
  std::set<std::array<V3, 2>> out;
  for (size_t c = 0; c < F.max_cones.size(); ++c) {
    std::vector<V3> R = F.cone_rays(c);
    for (size_t i = 0; i < R.size(); ++i)
      for (size_t j = i + 1; j < R.size(); ++j) {
        V3 n = cross(R[i], R[j]);
        if (is_zero(n)) continue;
        bool pos = true, neg = true, alone = true;
        for (size_t k = 0; k < R.size(); ++k) {
          Z d = dot(n, R[k]);
          if (d > 0) neg = false;
          if (d < 0) pos = false;
          if (d == 0 && k != i && k != j) alone = false;
        }
        if ((pos || neg) && alone)
          out.insert({std::min(R[i], R[j]), std::max(R[i], R[j])});
      }
  }
  return {out.begin(), out.end()};
}

Fan crepant_simplicial_refinement(const Fan& F, const std::vector<V3>& rays) {
  std::set<V3> sup(rays.begin(), rays.end());
  for (const auto& r : F.rays)
    if (!sup.count(r)) throw std::runtime_error("support incomplete");
  std::vector<std::vector<V3>> cones;
  for (size_t c = 0; c < F.max_cones.size(); ++c) {
    std::vector<V3> R = F.cone_rays(c);
    std::vector<Q> ones(R.size(), Q(1));
    auto w = solve_linear(R, ones);
    if (!w) throw std::runtime_error("cone rays span no common height-1 plane");
    std::vector<V3> facets = cone_facet_normals(R);
    std::vector<V3> pts;
    for (const auto& s : sup) {
      bool in = true;
      for (const auto& n : facets)
        if (dot(n, s) < 0) {
          in = false;
          break;
        }
      if (!in) continue;
      if (qdot(*w, s) != 1) throw std::runtime_error("support point off the height-1 slice");
      pts.push_back(s);
    }
    size_t k = 0;
    while ((*w)[k] == 0) ++k;  // drop a coordinate the slice plane is graphed over
    std::vector<V2> p2;
    for (const auto& s : pts) p2.push_back({s[(k + 1) % 3], s[(k + 2) % 3]});
    for (const auto& t : placing_triangulation(p2))
      cones.push_back({pts[(size_t)t[0]], pts[(size_t)t[1]], pts[(size_t)t[2]]});
  }
  return make_fan(cones);
}

bool cone_is_canonical(const std::vector<V3>& rays) {
  std::vector<V3> ext = extreme_rays(rays);
  int r = rank_of(ext);
  if (r <= 1) return true;
  if (r == 2) return true;  // transversal A_{m-1}: a rational double point
  auto w = reid_witness(ext);
  if (!w) return false;
  for (const auto& h : hilbert_basis(ext))
    if (dot(w->m, h) < w->j) return false;
  return true;
}

bool cone_is_terminal(const std::vector<V3>& rays) {
  std::vector<V3> ext = extreme_rays(rays);
  int r = rank_of(ext);
  if (r <= 1) return true;
  if (r == 2) return cone2_multiplicity(ext[0], ext[1]) == 1;
  auto w = reid_witness(ext);
  if (!w) return false;
  std::set<V3> gens(ext.begin(), ext.end());
  for (const auto& h : hilbert_basis(ext))
    if (!gens.count(h) && dot(w->m, h) <= w->j) return false;
  return true;
}

TorusDivisor divisor_from_ord(const Polytope& P, const Fan& F) {
  TorusDivisor D;
  for (const auto& r : F.rays) D.push_back(-ord_of(P, r));
  return D;
}

std::optional<std::vector<QV3>> cartier_data(const TorusDivisor& D, const Fan& F) {
  if (D.size() != F.rays.size()) throw std::runtime_error("divisor/fan ray count mismatch");
  std::vector<QV3> out;
  for (const auto& cone : F.max_cones) {
    std::vector<V3> rows;
    std::vector<Q> rhs;
    for (int i : cone) {
      rows.push_back(F.rays[(size_t)i]);
      rhs.push_back(-D[(size_t)i]);
    }
    auto m = solve_linear(rows, rhs);
    if (!m) return std::nullopt;
    out.push_back(*m);
  }
  return out;
}

std::optional<Z> is_q_cartier(const TorusDivisor& D, const Fan& F) {
  auto data = cartier_data(D, F);
  if (!data) return std::nullopt;
  Z index = 1;
  for (const auto& m : *data)
    for (const auto& c : m) {
      index = zlcm(index, c.get_den());
      if (index > 1000000) throw std::runtime_error("Q-Cartier index overflow");
    }
  return index;
}

bool is_basepointfree(const TorusDivisor& D, const Fan& F) {
  auto data = cartier_data(D, F);
  if (!data) throw std::runtime_error("divisor is not Cartier");
  for (const auto& m : *data)
    if (!is_integral(m)) throw std::runtime_error("divisor is not Cartier");
  for (const auto& m : *data)
    for (size_t i = 0; i < F.rays.size(); ++i)
      if (qdot(m, F.rays[i]) < -D[i]) return false;
  return true;
}

bool crepancy_check(const Polytope& P) {
  if (P.dim != 3) throw std::runtime_error("crepancy check needs a full-dimensional polytope");
  FineData d = fine_interior_data(P);
  if (d.interior.empty()) throw std::runtime_error("crepancy check needs a nonempty Fine interior");
  std::vector<HalfSpace> hs;
  for (const auto& nu : d.support) hs.push_back({nu, ord_of(P, nu)});
  if (halfspace_intersection(hs).verts != P.verts)
    throw std::runtime_error("polytope is not canonically closed");
  // every ray of the refined fan must sit in the support set (level exactly 1)
  Fan S = normal_fan(minkowski_sum(P, d.interior));
  std::set<V3> sup(d.support.begin(), d.support.end());
  for (const auto& r : S.rays)
    if (!sup.count(r)) return false;
  for (const auto& nu : d.support)
    if (ord_of(d.interior, nu) != ord_of(P, nu) + 1) return false;
  // the level >= 1 bound away from the support set is the fixed-point
  // certificate the Fine-interior computation just terminated on
  return true;
}

Q self_intersection_top(const Polytope& P_D) {
  if (P_D.dim != 3) throw std::runtime_error("top self-intersection needs a full-dimensional polytope");
  return Q(6) * volume(P_D);
}

std::string fan_to_json(const Fan& F) {
  nlohmann::json j;
  j["rays"] = nlohmann::json::array();
  for (const auto& r : F.rays) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : r) row.push_back((long)c.get_si());
    j["rays"].push_back(row);
  }
  j["max_cones"] = F.max_cones;
  return j.dump();
}

std::string fan_to_dot(const Fan& F) {
  std::ostringstream os;
  os << "graph fan {\n";
  for (size_t c = 0; c < F.max_cones.size(); ++c) {
    os << "  c" << c << " [label=\"";
    for (size_t i = 0; i < F.max_cones[c].size(); ++i)
      os << (i ? " " : "") << F.max_cones[c][i];
    os << "\"];\n";
  }
  for (size_t a = 0; a < F.max_cones.size(); ++a)
    for (size_t b = a + 1; b < F.max_cones.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(F.max_cones[a].begin(), F.max_cones[a].end(),
                            F.max_cones[b].begin(), F.max_cones[b].end(),
                            std::back_inserter(common));
      if (common.size() >= 2) os << "  c" << a << " -- c" << b << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace lpk
