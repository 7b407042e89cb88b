#include "lpk/atlas.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lpk {
namespace {

using Pts = std::map<std::string, V3>;

// Shared point dictionary for class a.  Every entry of the class is the
// hull of {a, b, d} (the distance-2 facet) plus a few of these points.
const Pts& points_a() {
    static const Pts m = {
        {"p", {-4, -2, 1}}, {"a2", {-2, -1, 0}}, {"c2", {-2, -1, 1}},
        {"b1", {-1, -1, 1}}, {"d1", {-1, 0, 1}}, {"a1", {0, 0, -1}},
        {"c1", {0, 0, 1}},  {"ab", {1, 0, 0}},  {"bc", {1, 0, 1}},
        {"ad", {1, 1, 0}},  {"cd", {1, 1, 1}},  {"b", {2, 0, 1}},
        {"a", {2, 1, -2}},  {"c", {2, 1, 1}},   {"d", {2, 2, 1}},
    };
    return m;
}

const Pts& points_b() {
    static const Pts m = {
        {"p", {-4, 3, -2}}, {"c2", {-2, 2, -1}}, {"a2", {-2, 1, -1}},
        {"b1", {-1, 1, 0}}, {"d1", {-1, 1, -1}}, {"a1", {0, -1, 0}},
        {"c1", {0, 1, 0}},  {"cd", {1, 0, 0}},   {"ad", {1, -1, 0}},
        {"ab", {1, -1, 1}}, {"bc", {1, 0, 1}},   {"a", {2, -3, 1}},
        {"b", {2, -1, 2}},  {"c", {2, 0, 1}},    {"d", {2, -1, 0}},
    };
    return m;
}

struct Row {
    const char* id;
    const char* extras;   // space-separated labels from the dictionary
    long l;
    std::map<Z, Z> amb;
    std::vector<std::string> rdp;
    long rho;
    const char* closure;  // "" if canonically closed
};

AtlasEntry make_entry(char cls, const Pts& dict, const std::vector<std::string>& base,
                      const Row& r) {
    AtlasEntry e;
    e.id = r.id;
    e.cls = cls;
    for (const auto& lbl : base) e.span.push_back(dict.at(lbl));
    std::istringstream in(r.extras);
    for (std::string lbl; in >> lbl;) e.span.push_back(dict.at(lbl));
    e.lattice_total = r.l;
    e.ambient = r.amb;
    e.canonical_rdp = r.rdp;
    std::sort(e.canonical_rdp.begin(), e.canonical_rdp.end());
    e.picard = r.rho;
    e.closure_id = r.closure;
    return e;
}

std::vector<AtlasEntry> build_atlas() {
    std::vector<AtlasEntry> out;

    const std::vector<Row> rows_a = {
        {"547444", "p", 18, {{2, 3}}, {"A2", "A2", "A2"}, 7, ""},
        {"474457", "a2 c2 d1 b1", 17, {{2, 2}}, {"A2", "A2", "A2"}, 7, ""},
        {"545932", "a2 c2", 15, {{2, 2}}, {"A2", "A2", "A2"}, 7, "474457"},
        {"532384", "a2 c2 d1", 16, {{2, 2}}, {"A2", "A2", "A2"}, 7, "474457"},
        {"532606", "a2 d1 b1", 16, {{2, 2}}, {"A2", "A2", "A2"}, 7, "474457"},
        {"483109", "d1 b1 c2 a1", 16, {{2, 1}, {1, 3}}, {"A5", "A2"}, 8, ""},
        {"534669", "c2 d1 a1", 15, {{2, 2}, {1, 1}}, {"A5", "A2"}, 8, ""},
        {"534866", "b1 a1 d1", 15, {{2, 3}, {1, 1}}, {"E6", "A2"}, 9, ""},
        {"534667", "c2 d1 b1", 15, {{2, 3}}, {"A8"}, 9, ""},
        {"546062", "b1 a2", 15, {{2, 2}, {1, 1}}, {"A2", "A2", "A2"}, 7, ""},
        {"546205", "a1 c2", 14, {{3, 1}, {2, 1}}, {"A5", "A2"}, 8, ""},
        {"546219", "c1 a2", 14, {{2, 2}}, {"A2", "A2", "A2"}, 7, ""},
        {"547524", "a2", 11, {{2, 2}}, {"A2", "A2", "A2"}, 7, "546219"},
        {"546863", "a2 bc", 12, {{2, 2}}, {"A2", "A2", "A2"}, 7, "546219"},
        {"539063", "a2 bc cd", 13, {{2, 2}}, {"A2", "A2", "A2"}, 7, "546219"},
        {"536498", "b1 ad c2", 14, {{3, 1}, {2, 1}}, {"A8"}, 9, ""},
        {"537834", "ab ad c2", 13, {{4, 1}}, {"A8"}, 9, ""},
        {"547525", "c2", 11, {{4, 1}}, {"A8"}, 9, "537834"},
        {"546862", "ab c2", 12, {{4, 1}}, {"A8"}, 9, "537834"},
        {"546663", "ad c2", 12, {{4, 1}}, {"A8"}, 9, "537834"},
    };
    for (const auto& r : rows_a)
        out.push_back(make_entry('a', points_a(), {"a", "b", "d"}, r));

    const std::vector<Row> rows_b = {
        {"545317", "p", 18, {{1, 3}}, {"A1", "A1", "A1"}, 4, ""},
        {"354912", "c2 a2 d1 b1", 17, {{1, 2}}, {"A2", "A1", "A1"}, 5, ""},
        {"533513", "c2 a2", 15, {{1, 2}}, {"A2", "A1", "A1"}, 5, "354912"},
        {"481575", "c2 a2 d1", 16, {{1, 2}}, {"A2", "A1", "A1"}, 5, "354912"},
        {"372528", "d1 b1 c2 a1", 16, {{1, 3}}, {"A4", "A1"}, 6, ""},
        {"372973", "b1 d1 a2 c1", 16, {{1, 4}}, {"A3", "A1", "A1"}, 6, ""},
        {"490511", "b1 d1 a2", 15, {{1, 4}}, {"A3", "A1", "A1"}, 6, "372973"},
        {"388701", "a1 d1 b1 c1", 15, {{1, 4}}, {"D5", "A1"}, 7, ""},
        {"499287", "a1 d1 b1", 14, {{1, 4}}, {"D5", "A1"}, 7, "388701"},
        {"490485", "c1 a2 d1", 15, {{1, 3}}, {"A3", "A1", "A1"}, 6, ""},
        {"490481", "c2 b1 d1", 15, {{2, 2}}, {"A6"}, 7, ""},
        {"490478", "d1 c2 a1", 15, {{1, 3}}, {"A4", "A1"}, 6, ""},
        {"535952", "a2 c1", 14, {{1, 3}}, {"A3", "A1", "A1"}, 6, ""},
        {"536013", "a1 c2", 14, {{2, 1}, {1, 1}}, {"A4", "A1"}, 6, ""},
        {"495687", "d1 c2 ab", 14, {{2, 1}, {1, 1}}, {"A6"}, 7, ""},
        {"539313", "d1 c2", 13, {{2, 1}, {1, 1}}, {"A6"}, 7, "495687"},
        {"499291", "c1 b1 d1", 14, {{3, 1}, {1, 2}}, {"D7"}, 8, ""},
        {"538356", "b1 d1", 13, {{3, 1}, {1, 2}}, {"D7"}, 8, "499291"},
        {"499470", "a2 bc d1", 14, {{2, 1}, {1, 2}}, {"A4", "A1", "A1"}, 7, ""},
        {"539304", "a2 d1", 13, {{2, 1}, {1, 2}}, {"A4", "A1", "A1"}, 7, "499470"},
        {"501298", "c2 ab ad", 13, {{2, 1}}, {"A6"}, 7, ""},
        {"547246", "c2", 11, {{2, 1}}, {"A6"}, 7, "501298"},
        {"540602", "c2 ab", 12, {{2, 1}}, {"A6"}, 7, "501298"},
        {"501330", "a2 bc cd", 13, {{1, 2}}, {"A4", "A1", "A1"}, 7, ""},
        {"547240", "a2", 11, {{1, 2}}, {"A4", "A1", "A1"}, 7, "501330"},
        {"540663", "a2 bc", 12, {{1, 2}}, {"A4", "A1", "A1"}, 7, "501330"},
    };
    for (const auto& r : rows_b)
        out.push_back(make_entry('b', points_b(), {"a", "b", "c", "d"}, r));

    // The three sporadic entries with K^2 = 2 and Gorenstein index 4.  They
    // are canonically closed and are both maximal and minimal in their class.
    AtlasEntry c;
    c.id = "c";
    c.cls = 'c';
    c.span = {{2, 1, 5}, {-2, -1, -3}, {2, 0, 1}, {2, 2, 1}};
    c.lattice_total = 15;
    c.canonical_rdp = {"A3", "A3"};
    c.picard = 7;
    out.push_back(c);

    AtlasEntry d;
    d.id = "d";
    d.cls = 'd';
    d.span = {{2, -1, 3}, {2, 0, 1}, {2, -1, -1}, {2, -2, 1}, {-2, 1, -1}};
    d.lattice_total = 15;
    d.canonical_rdp = {"A1", "A1", "A1", "A1"};
    d.picard = 5;
    out.push_back(d);

    AtlasEntry e;
    e.id = "e";
    e.cls = 'e';
    e.span = {{2, 0, 1}, {2, 1, -1}, {2, 4, -3}, {2, 1, 1}, {-2, -2, 1}};
    e.lattice_total = 15;
    e.canonical_rdp = {"A2", "A2"};
    e.picard = 5;
    out.push_back(e);

    for (auto& ent : out) std::sort(ent.canonical_rdp.begin(), ent.canonical_rdp.end());
    if (out.size() != 49) throw std::logic_error("atlas must have 49 entries");
    return out;
}

// Inward normal and level of the unique distance-2 facet of an entry's
// hull (all entries have the origin as their only interior lattice point).
HalfSpace adjoint_plane(const Polytope& P) {
    const HalfSpace* found = nullptr;
    for (const auto& h : P.facets)
        if (h.level == -2) {
            if (found) throw std::runtime_error("several distance-2 facets");
            found = &h;
        }
    if (!found) throw std::runtime_error("no distance-2 facet");
    return *found;
}

// Exact Gaussian elimination for a small square system.
std::optional<std::vector<Q>> solve_square(std::vector<std::vector<Q>> A,
                                           std::vector<Q> b) {
    const size_t n = A.size();
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Q f = A[r][col] / A[col][col];
            for (size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Q> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return x;
}

} // namespace

const std::vector<AtlasEntry>& load_atlas() {
    static const std::vector<AtlasEntry> atlas = build_atlas();
    return atlas;
}

const AtlasEntry& atlas_get(const std::string& id) {
    for (const auto& e : load_atlas())
        if (e.id == id) return e;
    throw std::runtime_error("no atlas entry with id " + id);
}

Polytope class_interior(char cls) {
    auto q = [](long n, long d) { return Q(Z(n), Z(d)); };
    switch (cls) {
    case 'a':
        return convex_hull({{Q(0), Q(0), Q(0)},
                            {Q(1), q(1, 3), Q(0)},
                            {Q(1), q(2, 3), Q(0)},
                            {Q(1), q(1, 2), q(-1, 2)}});
    case 'b':
        return convex_hull({{Q(0), Q(0), Q(0)},
                            {Q(1), Q(-1), q(1, 2)},
                            {Q(1), q(-2, 3), q(1, 3)},
                            {Q(1), q(-1, 2), q(1, 2)},
                            {Q(1), q(-2, 3), q(2, 3)}});
    case 'c':
        return convex_hull({{Q(0), Q(0), Q(0)},
                            {Q(1), q(1, 2), Q(2)},
                            {Q(1), q(1, 4), Q(1)},
                            {Q(1), q(3, 4), Q(1)}});
    case 'd':
        return convex_hull({{Q(0), Q(0), Q(0)},
                            {Q(1), q(-1, 2), Q(1)},
                            {Q(1), q(-1, 2), Q(0)},
                            {Q(1), q(-3, 4), q(1, 2)},
                            {Q(1), q(-1, 4), q(1, 2)}});
    case 'e':
        return convex_hull({{Q(0), Q(0), Q(0)},
                            {Q(1), q(3, 2), Q(-1)},
                            {Q(1), q(3, 4), Q(0)},
                            {Q(1), q(1, 2), Q(0)},
                            {Q(1), q(3, 4), q(-1, 2)}});
    default:
        throw std::runtime_error("unknown class label");
    }
}

char classify(const Polytope& P) {
    Polytope F = fine_interior(P);
    for (char cls : {'a', 'b', 'c', 'd', 'e'})
        if (lattice_isomorphic(F, class_interior(cls)))
            return cls;
    throw std::runtime_error("unknown Fine-interior type");
}

std::vector<std::string> verify_extremal_structure() {
    std::vector<std::string> passed;
    auto fail = [](const std::string& what) {
        throw std::runtime_error("extremal structure check failed: " + what);
    };
    const auto& atlas = load_atlas();

    // Group entries per class, with cached hulls.
    std::map<char, std::vector<const AtlasEntry*>> by_class;
    std::map<std::string, Polytope> hulls;
    for (const auto& e : atlas) {
        by_class[e.cls].push_back(&e);
        hulls.emplace(e.id, e.polytope());
    }
    auto contains_all = [&](const AtlasEntry* big, const AtlasEntry* small) {
        const Polytope& B = hulls.at(big->id);
        for (const auto& v : hulls.at(small->id).verts)
            if (!B.contains(v)) return false;
        return true;
    };

    // One maximal entry per class containing every other entry of the class;
    // the atlas coordinates are aligned, so containment is literal.
    const std::map<char, std::string> expected_max = {
        {'a', "547444"}, {'b', "545317"}, {'c', "c"}, {'d', "d"}, {'e', "e"}};
    for (const auto& [cls, group] : by_class) {
        std::vector<const AtlasEntry*> maxima;
        for (const auto* e : group) {
            bool top = true;
            for (const auto* f : group)
                if (f != e && !contains_all(e, f)) { top = false; break; }
            if (top) maxima.push_back(e);
        }
        if (maxima.size() != 1 || maxima[0]->id != expected_max.at(cls))
            fail(std::string("unique maximal entry of class ") + cls);
    }
    passed.push_back("one maximal entry per class");

    // Minimal entries (not containing any other entry) and their sizes.
    const std::map<char, std::map<std::string, long>> expected_min = {
        {'a', {{"547524", 11}, {"534866", 15}, {"547525", 11}}},
        {'b', {{"538356", 13}, {"547246", 11}, {"547240", 11}}},
        {'c', {{"c", 15}}}, {'d', {{"d", 15}}}, {'e', {{"e", 15}}}};
    for (const auto& [cls, group] : by_class) {
        std::map<std::string, long> minima;
        for (const auto* e : group) {
            bool bottom = true;
            for (const auto* f : group)
                if (f != e && contains_all(e, f)) { bottom = false; break; }
            if (bottom) minima[e->id] = lattice_count(hulls.at(e->id)).get_si();
        }
        if (minima != expected_min.at(cls))
            fail(std::string("minimal entries of class ") + cls);
    }
    passed.push_back("minimal entries and their lattice counts");

    // The maximal entry is a translate of 6F (classes a, b) or 4F (c, d, e).
    for (const auto& [cls, id] : expected_max) {
        Z k = (cls == 'a' || cls == 'b') ? 6 : 4;
        Polytope kF = dilate(class_interior(cls), k);
        if (!lattice_translate_of(kF, hulls.at(id)))
            fail(std::string("maximal entry of class ") + cls + " is a translate of the dilated interior");
    }
    passed.push_back("maximal entry is a dilated Fine interior up to translation");

    // 2 F_can sits inside Delta_can and the two polygons have the same
    // primitive edge normals in the facet plane.
    for (const auto& [cls, id] : expected_max) {
        const Polytope& P = hulls.at(id);
        HalfSpace adj = adjoint_plane(P);
        Polytope dcan = minimizing_face(P, {adj.normal});
        Polytope fcan = qdilate(minimizing_face(class_interior(cls), {adj.normal}), Q(2));
        for (const auto& v : fcan.verts)
            if (!P.contains(v) || qdot(v, adj.normal) != adj.level)
                fail(std::string("2F_can inside Delta_can, class ") + cls);
        PlaneChart ch = plane_chart(dcan);
        Polygon2 gd = project_to_chart(dcan, ch);
        Polygon2 gf = project_to_chart(fcan, ch);
        auto normals = [](const Polygon2& G) {
            std::set<V2> out;
            const size_t n = G.verts.size();
            for (size_t i = 0; i < n; ++i) {
                Q e0 = G.verts[(i + 1) % n][0] - G.verts[i][0];
                Q e1 = G.verts[(i + 1) % n][1] - G.verts[i][1];
                Z l = zlcm(e0.get_den(), e1.get_den());
                Q d0 = e0 * l, d1 = e1 * l;
                out.insert(primitive_part2({-d1.get_num(), d0.get_num()}).first);  // inward for CCW order
            }
            return out;
        };
        if (normals(gd) != normals(gf))
            fail(std::string("facet-plane normal fans of 2F_can and Delta_can, class ") + cls);
    }
    passed.push_back("2F_can inscribed in Delta_can with matching edge normals");

    return passed;
}

DegenerationSplit degeneration_split(const AtlasEntry& e) {
    // End points of the splitting diagonal inside the distance-2 facet.
    static const std::map<std::string, std::pair<V3, V3>> diag = {
        {"547444", {{2, 1, -2}, {2, 1, 1}}}, {"545317", {{2, -3, 1}, {2, 0, 1}}},
        {"c", {{2, 1, 5}, {2, 1, 1}}},       {"d", {{2, -1, 3}, {2, -1, -1}}},
        {"e", {{2, 0, 1}, {2, 4, -3}}}};
    auto it = diag.find(e.id);
    if (it == diag.end())
        throw std::runtime_error("degeneration split is only defined for the maximal entries");
    const auto& [va, vc] = it->second;

    Polytope P = e.polytope();
    HalfSpace adj = adjoint_plane(P);
    // Apex: the unique vertex off the distance-2 facet.
    std::optional<V3> apex;
    for (const auto& v : P.verts)
        if (qdot(v, adj.normal) != adj.level) {
            if (apex) throw std::runtime_error("entry has more than one apex vertex");
            apex = V3{v[0].get_num(), v[1].get_num(), v[2].get_num()};
        }
    if (!apex) throw std::runtime_error("entry has no apex vertex");
    const V3 p = *apex;

    V3 n = primitive(cross(sub(va, p), sub(vc, p)));
    std::vector<QV3> side1 = {{Q(p[0]), Q(p[1]), Q(p[2])},
                              {Q(va[0]), Q(va[1]), Q(va[2])},
                              {Q(vc[0]), Q(vc[1]), Q(vc[2])}};
    std::vector<QV3> side2 = side1;
    bool got1 = false, got2 = false;
    for (const auto& v : P.verts) {
        Q s = qdot(v, n) - Q(dot(p, n));
        if (s > 0) { side1.push_back(v); got1 = true; }
        if (s < 0) { side2.push_back(v); got2 = true; }
    }
    if (!got1 || !got2)
        throw std::runtime_error("splitting plane does not separate the entry");

    DegenerationSplit out;
    out.d1 = convex_hull(side1);
    out.d2 = convex_hull(side2);
    out.shared = convex_hull({side1[0], side1[1], side1[2]});
    out.shared_reflexive = is_reflexive(out.shared);

    const Polytope* half[2] = {&out.d1, &out.d2};
    for (int i = 0; i < 2; ++i) {
        const Polytope& D = *half[i];
        // Linear equivalences K + Z ~ alpha * D_can and Z ~ k * D_can on the
        // normal fan of the half; the unknowns are (m, coefficient).
        size_t nf = D.facets.size();
        std::vector<std::vector<Q>> A(nf, std::vector<Q>(4, Q(0)));
        std::vector<Q> b1(nf), b2(nf);
        for (size_t r = 0; r < nf; ++r) {
            const auto& h = D.facets[r];
            for (int c = 0; c < 3; ++c) A[r][c] = Q(h.normal[c]);
            A[r][3] = (h.normal == adj.normal) ? Q(1) : Q(0);
            b1[r] = -(h.level + 1);
            b2[r] = -h.level;
        }
        if (nf != 4) throw std::runtime_error("degeneration half is not a tetrahedron");
        auto s1 = solve_square(A, b1);
        auto s2 = solve_square(A, b2);
        if (!s1 || !s2)
            throw std::runtime_error("adjoint divisor does not generate the class group of a half");
        Q alpha = (*s1)[3], k = (*s2)[3];
        if (k == 0) throw std::runtime_error("degenerate half has trivial anticanonical class");
        out.k2[i] = alpha * alpha * volume(D) * Q(Z(6)) / (k * k);

        // Transversal singularities along the splitting diagonal: the two
        // facets of the half through both end points span a 2-cone.
        std::vector<V3> pair_normals;
        QV3 qa = {Q(va[0]), Q(va[1]), Q(va[2])}, qc = {Q(vc[0]), Q(vc[1]), Q(vc[2])};
        for (const auto& h : D.facets)
            if (qdot(qa, h.normal) == h.level && qdot(qc, h.normal) == h.level)
                pair_normals.push_back(h.normal);
        if (pair_normals.size() != 2)
            throw std::runtime_error("splitting diagonal is not an edge of the half");
        out.sing_rank[i] = cone2_multiplicity(pair_normals[0], pair_normals[1]) - 1;
        out.sing_count[i] = edge_lattice_length(qa, qc);
    }
    return out;
}

Polytope lattice_coarsen(const Polytope& P, const std::vector<V3>& dropped, int axis) {
    if (axis < 0 || axis > 2) throw std::runtime_error("axis must be 0, 1 or 2");
    std::set<V3> drop(dropped.begin(), dropped.end());
    std::vector<V3> kept;
    std::set<V3> seen;
    for (const auto& v : lattice_points(P)) {
        seen.insert(v);
        if (!drop.count(v)) kept.push_back(v);
    }
    for (const auto& v : dropped)
        if (!seen.count(v))
            throw std::runtime_error("dropped point is not a lattice point of the polytope");

    std::string offenders;
    for (const auto& v : kept)
        if (v[axis] % 2 != 0) {
            if (!offenders.empty()) offenders += ", ";
            offenders += "(" + v[0].get_str() + "," + v[1].get_str() + "," + v[2].get_str() + ")";
        }
    if (!offenders.empty())
        throw std::runtime_error("points outside the index-2 sublattice: " + offenders);

    std::vector<V3> image;
    for (auto v : kept) {
        v[axis] /= 2;
        image.push_back(v);
    }
    return hull_of(image);
}

CoverReport lattice_refine_cover(const AtlasEntry& e, int axis) {
    if (e.cls != 'c' && e.cls != 'd' && e.cls != 'e')
        throw std::runtime_error("refinement cover is only defined for the classes c, d, e");
    Polytope P = e.polytope();
    HalfSpace adj = adjoint_plane(P);
    if (adj.normal[axis] != 0)
        throw std::runtime_error("refinement axis must be parallel to the adjoint facet");

    CoverReport out;
    std::vector<V3> image;
    for (const auto& v : P.verts) {
        V3 w = {v[0].get_num(), v[1].get_num(), v[2].get_num()};
        w[axis] *= 2;
        image.push_back(w);
    }
    out.refined = hull_of(image);
    out.lstar = interior_count(out.refined);

    Polytope dcan = minimizing_face(out.refined, {adj.normal});
    out.lstar_can = interior_count(dcan);
    out.k2 = out.lstar_can - 1;

    // Quadric relation: the 3 lattice points of 2 F_can are collinear and
    // equally spaced (in the original lattice).
    Polytope F = fine_interior(P);
    Polytope fcan2 = qdilate(minimizing_face(F, {adj.normal}), Q(2));
    std::vector<V3> pts = lattice_points(fcan2);
    std::sort(pts.begin(), pts.end());
    out.quadric = pts.size() == 3 && sub(pts[1], pts[0]) == sub(pts[2], pts[1]);
    return out;
}

namespace {

std::string ambient_str(const std::map<Z, Z>& amb) {
    if (amb.empty()) return "-";
    std::string s;
    for (auto it = amb.rbegin(); it != amb.rend(); ++it) {
        if (!s.empty()) s += "+";
        if (it->second != 1) s += it->second.get_str();
        s += "A" + it->first.get_str();
    }
    return s;
}

std::string rdp_str(const std::vector<std::string>& rdp) {
    std::string s;
    for (const auto& r : rdp) {
        if (!s.empty()) s += "+";
        s += r;
    }
    return s.empty() ? "-" : s;
}

} // namespace

std::string atlas_table_markdown() {
    std::ostringstream os;
    os << "| id | class | l | ambient | RDPs | Picard | closure |\n";
    os << "|----|-------|---|---------|------|--------|---------|\n";
    for (const auto& e : load_atlas())
        os << "| " << e.id << " | " << e.cls << " | " << e.lattice_total.get_str()
           << " | " << ambient_str(e.ambient) << " | " << rdp_str(e.canonical_rdp)
           << " | " << e.picard.get_str() << " | "
           << (e.closed() ? std::string("-") : e.closure_id) << " |\n";
    return os.str();
}

std::string atlas_table_json() {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : load_atlas()) {
        nlohmann::json amb = nlohmann::json::array();
        for (auto it = e.ambient.rbegin(); it != e.ambient.rend(); ++it)
            amb.push_back({"A" + it->first.get_str(), it->second.get_si()});
        rows.push_back({{"id", e.id},
                        {"class", std::string(1, e.cls)},
                        {"lattice_points", e.lattice_total.get_si()},
                        {"ambient", amb},
                        {"canonical_rdp", e.canonical_rdp},
                        {"picard_generic", e.picard.get_si()},
                        {"closure", e.closed() ? nlohmann::json() : nlohmann::json(e.closure_id)}});
    }
    return rows.dump(2);
}

} // namespace lpk
