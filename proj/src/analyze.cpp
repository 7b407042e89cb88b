#include "lpk/analyze.hpp"

#include <algorithm>
#include <json.hpp>
#include <queue>
#include <set>
#include <sstream>

namespace lpk {

std::string ade_label(const DynkinComponent& c) {
  std::ostringstream os;
  os << c.type << c.rank;
  return os.str();
}

int ade_rank(const std::string& label) { return std::stoi(label.substr(1)); }

std::vector<DynkinComponent> DynkinGraph::components() const {
  size_t n = nodes.size();
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[(size_t)a].push_back(b);
    adj[(size_t)b].push_back(a);
  }
  std::vector<int> comp(n, -1);
  std::vector<DynkinComponent> out;
  for (size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members;
    std::queue<int> bfs;
    bfs.push((int)s);
    comp[s] = (int)s;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      members.push_back(v);
      for (int w : adj[(size_t)v])
        if (comp[(size_t)w] < 0) {
          comp[(size_t)w] = (int)s;
          bfs.push(w);
        }
    }
    size_t ne = 0;
    for (int v : members) ne += adj[(size_t)v].size();
    ne /= 2;
    if (ne + 1 != members.size()) throw std::runtime_error("Dynkin component is not a tree");
    int deg3 = 0, center = -1;
    for (int v : members) {
      if (adj[(size_t)v].size() > 3) throw std::runtime_error("Dynkin node of degree > 3");
      if (adj[(size_t)v].size() == 3) {
        ++deg3;
        center = v;
      }
    }
    if (deg3 > 1) throw std::runtime_error("Dynkin component with two branch nodes");
    if (deg3 == 0) {  // a path
      out.push_back({'A', (int)members.size()});
      continue;
    }
    std::array<int, 3> branch{};
    int bi = 0;
    for (int w0 : adj[(size_t)center]) {
      int len = 1, prev = center, cur = w0;
      for (;;) {
        int next = -1;
        for (int x : adj[(size_t)cur])
          if (x != prev) next = x;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      branch[(size_t)bi++] = len;
    }
    std::sort(branch.begin(), branch.end());
    int rank = (int)members.size();
    if (branch[0] == 1 && branch[1] == 1)
      out.push_back({'D', rank});
    else if (branch[0] == 1 && branch[1] == 2 && branch[2] >= 2 && branch[2] <= 4)
      out.push_back({'E', rank});
    else
      throw std::runtime_error("Dynkin component is not of ADE shape");
  }
  return out;
}

namespace {

// the unique interior lattice point, if there is exactly one
std::optional<V3> single_interior_point(const Polytope& P) {
  auto pts = interior_lattice_points(P);
  if (pts.size() != 1) return std::nullopt;
  return pts[0];
}

// the facet at lattice distance 2 from the interior point, when all other
// facets sit at distance 1
std::optional<HalfSpace> adjoint_facet(const Polytope& P) {
  auto p = single_interior_point(P);
  if (!p) return std::nullopt;
  std::optional<HalfSpace> can;
  for (const auto& f : P.facets) {
    Q dist = qdot(to_q(*p), f.normal) - f.level;
    if (dist == 2) {
      if (can) return std::nullopt;
      can = f;
    } else if (dist != 1) {
      return std::nullopt;
    }
  }
  return can;
}

// A_{m-1} point counts contributed by the 2-cones of a fan: a 2-cone of
// multiplicity m > 1 whose dual face on Delta is an edge of lattice length l
// meets the hypersurface in l points of transversal type A_{m-1}
std::map<Z, Z> cone2_singularities(const Polytope& Delta,
                                   const std::vector<std::array<V3, 2>>& tcs) {
  std::map<Z, Z> out;
  for (const auto& [u, v] : tcs) {
    Z m = cone2_multiplicity(u, v);
    if (m == 1) continue;
    Polytope face = minimizing_face(Delta, {u, v});
    if (face.dim != 1) continue;
    out[Z(m - 1)] += edge_lattice_length(face.verts[0], face.verts[1]);
  }
  return out;
}

Invariants invariants_from(const Polytope& P, const Polytope& F,
                           const Polytope* closure = nullptr) {
  Invariants inv;
  inv.pg = interior_count(P);
  inv.q = 0;
  if (F.empty()) return inv;
  inv.kappa = std::min(F.dim, 2);
  inv.index_m = denominator_index(F);
  for (int n = 1; n <= 3; ++n) inv.sections[(size_t)n - 1] = lattice_count(dilate(F, n));
  if (auto can = adjoint_facet(P)) {
    Polytope facet = minimizing_face(P, {can->normal});
    inv.K2 = Z(interior_count(facet) - 1);
  } else if (closure) {
    // without canonical closedness the distance-2 facet need not be unique;
    // the closure has the same minimal model, so read K^2 off its facet
    if (auto cc = adjoint_facet(*closure)) {
      Polytope facet = minimizing_face(*closure, {cc->normal});
      inv.K2 = Z(interior_count(facet) - 1);
    }
  }
  return inv;
}

}  // namespace

Report analyze(const Polytope& P) {
  FineData d = fine_interior_data(P);
  Report r;
  if (d.interior.empty()) {
    r.inv = invariants_from(P, d.interior);
    return r;
  }

  // route singular-locus work through the canonical closure: the closure has
  // the same Fine interior and support, and the same hypersurface models
  std::vector<HalfSpace> hs;
  for (const auto& nu : d.support) hs.push_back({nu, ord_of(P, nu)});
  Polytope C = halfspace_intersection(hs);
  r.inv = invariants_from(P, d.interior, &C);

  Fan tilde = normal_fan(minkowski_sum(C, d.interior));
  r.ambient = cone2_singularities(C, two_cones(tilde));

  if (d.interior.dim != 3) return r;  // the canonical-model story needs kappa = 2

  // fixed-point graph inside the cone dual to the origin vertex of F
  bool origin_vertex = false;
  for (const auto& v : d.interior.verts) origin_vertex |= qis_zero(v);
  if (origin_vertex) {
    for (const auto& s : d.support) {
      bool strict = true;
      for (const auto& w : d.interior.verts)
        if (!qis_zero(w) && qdot(w, s) <= 0) {
          strict = false;
          break;
        }
      // a ray whose dual face is a vertex misses the hypersurface (the
      // restricted equation is a monomial), so it carries no exceptional curve
      if (strict && minimizing_face(C, {s}).dim >= 1) r.dynkin.nodes.push_back(s);
    }
    Fan S = crepant_simplicial_refinement(tilde, d.support);
    std::set<std::array<V3, 2>> tc;
    for (const auto& t : two_cones(S)) tc.insert(t);
    for (size_t i = 0; i < r.dynkin.nodes.size(); ++i)
      for (size_t j = i + 1; j < r.dynkin.nodes.size(); ++j) {
        std::array<V3, 2> key{std::min(r.dynkin.nodes[i], r.dynkin.nodes[j]),
                              std::max(r.dynkin.nodes[i], r.dynkin.nodes[j])};
        if (!tc.count(key)) continue;
        Polytope face = minimizing_face(C, {key[0], key[1]});
        if (face.dim != 1) continue;
        r.dynkin.edges.push_back({(int)i, (int)j});
        if (edge_lattice_length(face.verts[0], face.verts[1]) > 1) r.dynkin.long_dual_edge = true;
      }
  }

  // canonical model: residual transversal points from the coarse fan, plus
  // the fixed-point components
  std::map<Z, Z> residual = cone2_singularities(C, two_cones(normal_fan(d.interior)));
  for (const auto& [k, cnt] : residual)
    for (Z i = 0; i < cnt; ++i) {
      std::ostringstream os;
      os << 'A' << k;
      r.canonical_rdp.push_back(os.str());
    }
  for (const auto& c : r.dynkin.components()) r.canonical_rdp.push_back(ade_label(c));
  std::sort(r.canonical_rdp.begin(), r.canonical_rdp.end());

  r.picard = 1;
  for (const auto& lab : r.canonical_rdp) r.picard += ade_rank(lab);
  return r;
}

Invariants invariants(const Polytope& P) { return invariants_from(P, fine_interior(P)); }

std::map<Z, Z> ambient_singularities(const Polytope& P) { return analyze(P).ambient; }

DynkinGraph fixed_point_dynkin(const Polytope& P) { return analyze(P).dynkin; }

std::vector<std::string> canonical_model_singularities(const Polytope& P) {
  return analyze(P).canonical_rdp;
}

Z generic_picard(const Polytope& P) { return analyze(P).picard; }

bool rho_is_isomorphism(const Polytope& P) {
  if (!is_canonically_closed(P)) throw std::runtime_error("polytope is not canonically closed");
  auto can = adjoint_facet(P);
  if (!can) throw std::runtime_error("polytope has no adjoint facet");
  Fan F = normal_fan(P);
  TorusDivisor D(F.rays.size(), Q(0));
  for (size_t i = 0; i < F.rays.size(); ++i)
    if (F.rays[i] == can->normal) D[i] = 1;
  return is_q_cartier(D, F).has_value();
}

Z orbit_intersection_count(const Polytope& P, const V3& u, const V3& v) {
  Polytope face = minimizing_face(P, {u, v});
  if (face.dim != 1) return 0;
  return edge_lattice_length(face.verts[0], face.verts[1]);
}

std::string report_json(const Polytope& P) {
  Report r = analyze(P);
  nlohmann::json j;
  nlohmann::json inv;
  inv["pg"] = r.inv.pg.get_si();
  inv["q"] = r.inv.q.get_si();
  inv["kappa"] = r.inv.kappa;
  if (r.inv.K2)
    inv["K2"] = r.inv.K2->get_si();
  else
    inv["K2"] = nullptr;
  inv["index_m"] = r.inv.index_m.get_si();
  inv["sections"] = {r.inv.sections[0].get_si(), r.inv.sections[1].get_si(),
                     r.inv.sections[2].get_si()};
  inv["chi"] = r.inv.chi().get_si();
  inv["reflexive"] = is_reflexive(P);
  j["invariants"] = inv;
  j["ambient"] = nlohmann::json::array();
  for (const auto& [k, cnt] : r.ambient) {
    std::ostringstream os;
    os << 'A' << k;
    j["ambient"].push_back({os.str(), cnt.get_si()});
  }
  std::ostringstream fp;
  {
    auto comps = r.dynkin.components();
    for (size_t i = 0; i < comps.size(); ++i) fp << (i ? "+" : "") << ade_label(comps[i]);
  }
  j["fixed_point"] = fp.str();
  j["canonical_rdp"] = r.canonical_rdp;
  j["picard_generic"] = r.picard.get_si();
  return j.dump();
}

}  // namespace lpk
