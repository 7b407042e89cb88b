// Acceptance suite: ten end-to-end criteria over the curated 49-entry
// family and randomized property checks.  Prints one pass/fail line per
// criterion and exits nonzero if any of them fails.
#include "lpk/atlas.hpp"
#include "lpk/fan.hpp"
#include "lpk/fine.hpp"

#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace lpk;

namespace {

std::ostringstream why;

void note(const std::string& msg) { why << "    " << msg << "\n"; }

const std::map<std::string, char> kMaximal = {
    {"547444", 'a'}, {"545317", 'b'}, {"c", 'c'}, {"d", 'd'}, {"e", 'e'}};

// ---- 1. exact Fine interiors of the maximal entries ------------------------
bool criterion_fine_exact() {
    bool ok = true;
    for (const auto& [id, cls] : kMaximal) {
        Polytope F = fine_interior(atlas_get(id).polytope());
        if (F.verts != class_interior(cls).verts) {
            note("Fine interior of entry " + id + " differs from the reference");
            ok = false;
        }
    }
    return ok;
}

// ---- 2. exactly five isomorphism classes, sized 20/26/1/1/1 ----------------
bool criterion_five_types() {
    std::vector<Polytope> reps;
    std::map<size_t, int> sizes;
    for (const auto& e : load_atlas()) {
        Polytope F = fine_interior(e.polytope());
        size_t cls = reps.size();
        for (size_t i = 0; i < reps.size(); ++i)
            if (lattice_isomorphic(F, reps[i])) {
                cls = i;
                break;
            }
        if (cls == reps.size()) reps.push_back(F);
        sizes[cls]++;
    }
    std::multiset<int> got;
    for (const auto& [_, n] : sizes) got.insert(n);
    if (got != std::multiset<int>{1, 1, 1, 20, 26}) {
        std::ostringstream s;
        s << "class sizes:";
        for (int n : got) s << " " << n;
        note(s.str());
        return false;
    }
    return true;
}

// ---- 3. table reproduction for the 46 class-a/b entries --------------------
bool criterion_tables() {
    bool ok = true;
    for (const auto& e : load_atlas()) {
        if (e.cls != 'a' && e.cls != 'b') continue;
        Polytope P = e.polytope();
        Report r = analyze(P);
        if (lattice_count(P) != e.lattice_total || r.ambient != e.ambient ||
            r.canonical_rdp != e.canonical_rdp || r.picard != e.picard) {
            note("entry " + e.id + " does not reproduce its table row");
            ok = false;
        }
    }
    return ok;
}

// ---- 4. numerical invariants of the two deformation families ---------------
bool criterion_invariants() {
    bool ok = true;
    const std::map<std::string, std::pair<std::vector<std::string>, long>> cde = {
        {"c", {{"A3", "A3"}, 7}}, {"d", {{"A1", "A1", "A1", "A1"}, 5}}, {"e", {{"A2", "A2"}, 5}}};
    for (const auto& e : load_atlas()) {
        Report r = analyze(e.polytope());
        const Invariants& v = r.inv;
        if (e.cls == 'a' || e.cls == 'b') {
            if (!(v.pg == 1 && v.K2 && *v.K2 == 1 && v.index_m == 6 && v.sections[0] == 1 &&
                  v.sections[1] == 3 && v.sections[2] == 5)) {
                note("entry " + e.id + ": wrong (pg, K2, m, sections)");
                ok = false;
            }
        } else {
            const auto& [rdp, rho] = cde.at(e.id);
            if (!(v.pg == 1 && v.q == 0 && v.K2 && *v.K2 == 2 && v.index_m == 4 &&
                  r.canonical_rdp == rdp && r.picard == rho)) {
                note("entry " + e.id + ": wrong sporadic invariants");
                ok = false;
            }
        }
    }
    return ok;
}

// random canonical Fano 3-topes: hulls of a few points in [-5,5]^3 with the
// origin as their only interior lattice point
std::vector<Polytope> sample_canonical_fanos(size_t count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-5, 5), npts(4, 6);
    std::vector<Polytope> out;
    while (out.size() < count) {
        std::vector<QV3> pts;
        int n = npts(rng);
        for (int i = 0; i < n; ++i)
            pts.push_back({Q(coord(rng)), Q(coord(rng)), Q(coord(rng))});
        Polytope P = convex_hull(pts);
        if (P.dim == 3 && is_canonical_fano(P)) out.push_back(P);
    }
    return out;
}

// ---- 5. closure laws F(C(D)) = F(D), C(C(D)) = C(D) ------------------------
bool criterion_closure_laws() {
    bool ok = true;
    std::vector<std::pair<std::string, Polytope>> pool;
    for (const auto& e : load_atlas()) pool.emplace_back("entry " + e.id, e.polytope());
    size_t i = 0;
    for (const auto& P : sample_canonical_fanos(100, 0))
        pool.emplace_back("random polytope #" + std::to_string(i++), P);

    for (const auto& [name, P] : pool) {
        Polytope F = fine_interior(P);
        Polytope C = canonical_closure(P);
        if (fine_interior(C).verts != F.verts) {
            note(name + ": F(C(D)) != F(D)");
            ok = false;
        }
        if (canonical_closure(C).verts != C.verts) {
            note(name + ": C(C(D)) != C(D)");
            ok = false;
        }
    }

    // the recorded closure arrows hold vertex-for-vertex
    for (const auto& e : load_atlas()) {
        if (e.closed()) continue;
        if (canonical_closure(e.polytope()).verts != atlas_get(e.closure_id).polytope().verts) {
            note("entry " + e.id + ": closure is not entry " + e.closure_id);
            ok = false;
        }
    }
    return ok;
}

// ---- 6. extremal structure of the family ------------------------------------
bool criterion_extremal() {
    try {
        return verify_extremal_structure().size() == 4;
    } catch (const std::exception& err) {
        note(err.what());
        return false;
    }
}

// ---- 7. support sets, crepant refinements and Q-Cartier classes -------------
bool criterion_support_and_fans() {
    bool ok = true;

    for (const auto& [id, cls] : kMaximal) {
        Polytope P = atlas_get(id).polytope();
        FineData d = fine_interior_data(P);
        std::set<V3> support(d.support.begin(), d.support.end());

        Fan tilde = normal_fan(minkowski_sum(P, d.interior));
        for (const auto& r : tilde.rays)
            if (!support.count(r)) {
                note("entry " + id + ": a ray of the combined fan is outside the support");
                ok = false;
            }

        Fan refined = crepant_simplicial_refinement(tilde, d.support);
        for (size_t c = 0; c < refined.max_cones.size(); ++c)
            if (!cone_is_terminal(refined.cone_rays(c))) {
                note("entry " + id + ": non-terminal cone in the crepant refinement");
                ok = false;
            }

        // the gap ord_F - ord_D is exactly 1 on the support and >= 1 elsewhere
        for (const auto& nu : d.support)
            if (ord_of(d.interior, nu) != ord_of(P, nu) + 1) {
                note("entry " + id + ": support direction with gap != 1");
                ok = false;
            }
        for (int x = -3; x <= 3; ++x)
            for (int y = -3; y <= 3; ++y)
                for (int z = -3; z <= 3; ++z) {
                    V3 nu = {x, y, z};
                    if ((x | y | z) == 0) continue;
                    if (ord_of(d.interior, nu) < ord_of(P, nu) + 1) {
                        note("entry " + id + ": direction with gap < 1");
                        ok = false;
                    }
                }
    }

    // canonically closed entries already carry all support rays of the
    // combined fan on their own normal fan
    for (const auto& e : load_atlas()) {
        if (!e.closed()) continue;
        Polytope P = e.polytope();
        FineData d = fine_interior_data(P);
        Fan sigma = normal_fan(P);
        std::set<V3> own(sigma.rays.begin(), sigma.rays.end());
        Fan tilde = normal_fan(minkowski_sum(P, d.interior));
        if (std::set<V3>(tilde.rays.begin(), tilde.rays.end()) != own) {
            note("entry " + e.id + ": combined fan adds rays despite closedness");
            ok = false;
        }
    }

    // Q-Cartier locus of the adjoint divisor among the closed a/b entries
    const std::set<std::string> expected_qc = {"547444", "474457", "483109", "534866",
                                               "545317", "354912", "372528", "372973",
                                               "388701"};
    for (const auto& e : load_atlas()) {
        if ((e.cls != 'a' && e.cls != 'b') || !e.closed()) continue;
        Polytope P = e.polytope();
        Fan sigma = normal_fan(P);
        TorusDivisor D(sigma.rays.size(), Q(0));
        for (size_t i = 0; i < sigma.rays.size(); ++i) {
            // unit coefficient on the distance-2 facet normal
            for (const auto& h : P.facets)
                if (h.normal == sigma.rays[i] && h.level == -2) D[i] = 1;
        }
        bool qc = is_q_cartier(D, sigma).has_value();
        if (qc != (expected_qc.count(e.id) > 0)) {
            note("entry " + e.id + ": unexpected Q-Cartier status");
            ok = false;
        }
    }
    return ok;
}

// ---- 8. degeneration splits --------------------------------------------------
bool criterion_splits() {
    bool ok = true;
    for (const auto& [id, cls] : kMaximal) {
        try {
            DegenerationSplit s = degeneration_split(atlas_get(id));
            bool sporadic = cls == 'c' || cls == 'd' || cls == 'e';
            Q want_k2 = sporadic ? 1 : 2;
            Z want_cnt = sporadic ? 4 : 3;
            if (!s.shared_reflexive) {
                note("entry " + id + ": shared facet is not reflexive");
                ok = false;
            }
            for (int i : {0, 1})
                if (s.k2[i] != want_k2 || s.sing_rank[i] != 1 || s.sing_count[i] != want_cnt) {
                    note("entry " + id + ": component invariants differ");
                    ok = false;
                }
            if (cls == 'a' && Q(6) * volume(s.d1) != 18) {
                note("entry " + id + ": 6 vol of the first half is not 18");
                ok = false;
            }
        } catch (const std::exception& err) {
            note("entry " + id + ": " + err.what());
            ok = false;
        }
    }
    return ok;
}

// ---- 9. index-2 coarsenings and covers ---------------------------------------
bool criterion_lattice_passes() {
    bool ok = true;
    for (const auto& [id, cls] : kMaximal) {
        Polytope P = atlas_get(id).polytope();
        std::vector<V3> drop;
        for (const auto& v : lattice_points(P))
            if (v[0] % 2 != 0) drop.push_back(v);
        size_t want_drop = (cls == 'a' || cls == 'b') ? 6 : 4;
        Polytope C;
        try {
            C = lattice_coarsen(P, drop, 0);
        } catch (const std::exception& err) {
            note("entry " + id + ": " + err.what());
            ok = false;
            continue;
        }
        if (drop.size() != want_drop || !is_reflexive(C)) {
            note("entry " + id + ": coarsening is not the expected reflexive polytope");
            ok = false;
        }
        if (cls != 'a' && cls != 'b' && lattice_count(C) != 11) {
            note("entry " + id + ": coarse polytope has the wrong lattice count");
            ok = false;
        }
    }
    for (const char* id : {"c", "d", "e"}) {
        CoverReport r = lattice_refine_cover(atlas_get(id));
        if (!(r.lstar == 3 && r.lstar_can == 5 && r.k2 == 4 && r.quadric)) {
            note(std::string("entry ") + id + ": cover invariants differ");
            ok = false;
        }
    }
    return ok;
}

// ---- 10. randomized property suites -------------------------------------------
bool criterion_properties() {
    bool ok = true;
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> coord(-4, 4);
    auto rand_v3 = [&] { return V3{coord(rng), coord(rng), coord(rng)}; };

    // hull round-trips: the hull of a hull's vertices is the hull itself, and
    // intersecting its own facet half-spaces recovers it
    for (int t = 0; t < 40; ++t) {
        std::vector<QV3> pts;
        for (int i = 0; i < 8; ++i) {
            V3 v = rand_v3();
            pts.push_back({Q(v[0]), Q(v[1]), Q(v[2])});
        }
        Polytope P = convex_hull(pts);
        if (P.dim != 3) continue;
        if (convex_hull(P.verts).verts != P.verts) {
            note("hull round-trip failed");
            ok = false;
        }
        std::vector<HalfSpace> hs(P.facets);
        if (halfspace_intersection(hs).verts != P.verts) {
            note("facet round-trip failed");
            ok = false;
        }
    }

    // Minkowski additivity of the support function
    for (int t = 0; t < 40; ++t) {
        std::vector<V3> a, b;
        for (int i = 0; i < 5; ++i) a.push_back(rand_v3());
        for (int i = 0; i < 5; ++i) b.push_back(rand_v3());
        Polytope P = hull_of(a), S = hull_of(b);
        Polytope M = minkowski_sum(P, S);
        for (int s = 0; s < 10; ++s) {
            V3 nu = rand_v3();
            if (nu[0] == 0 && nu[1] == 0 && nu[2] == 0) continue;
            if (ord_of(M, nu) != ord_of(P, nu) + ord_of(S, nu)) {
                note("Minkowski support additivity failed");
                ok = false;
            }
        }
    }

    // Ehrhart: counts of dilates fit a cubic with constant term 1; the fit
    // from n = 1..3 predicts n = 4 and n = 5
    for (int t = 0; t < 10; ++t) {
        std::vector<V3> pts;
        for (int i = 0; i < 6; ++i) {
            V3 v = rand_v3();
            pts.push_back({v[0] % 3, v[1] % 3, v[2] % 3});
        }
        Polytope P = hull_of(pts);
        if (P.dim != 3) continue;
        Q l1 = Q(lattice_count(dilate(P, 1)));
        Q l2 = Q(lattice_count(dilate(P, 2)));
        Q l3 = Q(lattice_count(dilate(P, 3)));
        // L(n) = c3 n^3 + c2 n^2 + c1 n + 1
        Q c3 = (l3 - Q(3) * l2 + Q(3) * l1 - Q(1)) / Q(6);
        Q c2 = (l2 - Q(2) * l1 + Q(1)) / Q(2) - Q(3) * c3;
        Q c1 = l1 - Q(1) - c2 - c3;
        for (long n : {4L, 5L}) {
            Q qn(n);
            Q want = c3 * qn * qn * qn + c2 * qn * qn + c1 * qn + Q(1);
            if (Q(lattice_count(dilate(P, Z(n)))) != want) {
                note("Ehrhart cubic fit failed at n = " + std::to_string(n));
                ok = false;
            }
        }
        if (c3 != volume(P)) {
            note("Ehrhart leading coefficient is not the volume");
            ok = false;
        }
    }

    // Hilbert bases generate: small cone points decompose over the basis
    for (int t = 0; t < 20; ++t) {
        V3 u = rand_v3(), v = rand_v3(), w = rand_v3();
        if (det3(u, v, w) == 0) continue;
        if (det3(u, v, w) < 0) std::swap(v, w);
        std::vector<V3> gens = {u, v, w};
        std::vector<V3> hb;
        try {
            hb = hilbert_basis(gens);
        } catch (const std::exception&) {
            continue;  // not pointed
        }
        auto normals = cone_facet_normals(gens);
        auto inside = [&](const V3& x) {
            for (const auto& n : normals)
                if (dot(x, n) < 0) return false;
            return true;
        };
        // greedy decomposition terminates because every subtraction strictly
        // lowers a positive linear functional
        std::function<bool(V3)> decompose = [&](V3 x) {
            if (x[0] == 0 && x[1] == 0 && x[2] == 0) return true;
            for (const auto& h : hb) {
                V3 y = sub(x, h);
                if (inside(y) && decompose(y)) return true;
            }
            return false;
        };
        for (int s = 0; s < 20; ++s) {
            V3 x = rand_v3();
            if (!inside(x)) continue;
            if (!decompose(x)) {
                note("Hilbert basis does not generate a sampled cone point");
                ok = false;
            }
        }
    }

    // 2-cone multiplicity equals the content of the cross product
    int pairs = 0;
    while (pairs < 200) {
        V3 u = rand_v3(), v = rand_v3();
        V3 c = cross(u, v);
        if ((c[0] == 0 && c[1] == 0 && c[2] == 0)) continue;
        u = primitive(u);
        v = primitive(v);
        pairs++;
        if (cone2_multiplicity(u, v) != primitive_part(cross(u, v)).second) {
            note("2-cone multiplicity does not match the cross-product content");
            ok = false;
        }
    }

    return ok;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
        {"1. exact Fine interiors of the maximal entries", criterion_fine_exact},
        {"2. five interior types with sizes 20/26/1/1/1", criterion_five_types},
        {"3. table reproduction for the 46 class-a/b entries", criterion_tables},
        {"4. invariants of the two deformation families", criterion_invariants},
        {"5. closure laws on the family and 100 random Fano 3-topes", criterion_closure_laws},
        {"6. extremal structure (maximal/minimal entries, inscribed 2F_can)", criterion_extremal},
        {"7. support sets, crepant refinements, Q-Cartier locus", criterion_support_and_fans},
        {"8. degeneration splits into reflexive-glued halves", criterion_splits},
        {"9. index-2 coarsenings and covers", criterion_lattice_passes},
        {"10. randomized property suites", criterion_properties},
    };

    int failures = 0;
    for (const auto& [name, run] : criteria) {
        why.str("");
        bool ok = false;
        try {
            ok = run();
        } catch (const std::exception& err) {
            note(std::string("exception: ") + err.what());
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!ok) {
            std::cout << why.str();
            failures++;
        }
    }
    if (failures) std::cout << failures << " criteria failed\n";
    return failures ? 1 : 0;
}
