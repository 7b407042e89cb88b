#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "lpk/atlas.hpp"
#include "lpk/fine.hpp"

using namespace lpk;

TEST_CASE("atlas loads 49 well-formed entries") {
    const auto& atlas = load_atlas();
    REQUIRE(atlas.size() == 49);

    std::map<char, int> per_class;
    for (const auto& e : atlas) per_class[e.cls]++;
    CHECK(per_class['a'] == 20);
    CHECK(per_class['b'] == 26);
    CHECK(per_class['c'] == 1);
    CHECK(per_class['d'] == 1);
    CHECK(per_class['e'] == 1);

    for (const auto& e : atlas) {
        INFO("entry ", e.id);
        Polytope P = e.polytope();
        CHECK(P.dim == 3);
        CHECK(lattice_count(P) == e.lattice_total);
        CHECK(is_canonical_fano(P));
        // every entry keeps the distance-2 facet; canonically closed entries
        // have exactly one, with all other facets at distance 1
        int dist2 = 0;
        for (const auto& h : P.facets) {
            if (e.closed()) CHECK((h.level == -1 || h.level == -2));
            if (h.level == -2) dist2++;
        }
        if (e.closed())
            CHECK(dist2 == 1);
        else
            CHECK(dist2 >= 1);
        // closure references resolve and point into the same class
        if (!e.closed()) CHECK(atlas_get(e.closure_id).cls == e.cls);
    }
}

TEST_CASE("fine interiors of the maximal entries match the references") {
    for (const auto& [id, cls] : std::map<std::string, char>{
             {"547444", 'a'}, {"545317", 'b'}, {"c", 'c'}, {"d", 'd'}, {"e", 'e'}}) {
        INFO("entry ", id);
        Polytope F = fine_interior(atlas_get(id).polytope());
        CHECK(F.verts == class_interior(cls).verts);
    }
}

TEST_CASE("classification by Fine interior type") {
    CHECK(classify(atlas_get("547444").polytope()) == 'a');
    CHECK(classify(atlas_get("547524").polytope()) == 'a');
    CHECK(classify(atlas_get("545317").polytope()) == 'b');
    CHECK(classify(atlas_get("538356").polytope()) == 'b');
    CHECK(classify(atlas_get("c").polytope()) == 'c');
    CHECK(classify(atlas_get("d").polytope()) == 'd');
    CHECK(classify(atlas_get("e").polytope()) == 'e');

    // the cube is reflexive, so its Fine interior is the origin alone
    Polytope cube = hull_of({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
                             {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
    CHECK_THROWS_WITH(classify(cube), "unknown Fine-interior type");
}

TEST_CASE("canonical closures land on the recorded entries") {
    for (const char* id : {"545932", "547524", "538356", "499287"}) {
        const AtlasEntry& e = atlas_get(id);
        Polytope C = canonical_closure(e.polytope());
        CHECK(C.verts == atlas_get(e.closure_id).polytope().verts);
    }
}

TEST_CASE("extremal structure of the family") {
    auto passed = verify_extremal_structure();
    CHECK(passed.size() == 4);
}

TEST_CASE("recorded invariants agree with the analyzer on sample entries") {
    for (const char* id : {"534866", "499291", "537834", "546205", "c", "d", "e"}) {
        const AtlasEntry& e = atlas_get(id);
        INFO("entry ", id);
        Report r = analyze(e.polytope());
        if (!e.ambient.empty()) CHECK(r.ambient == e.ambient);
        CHECK(r.canonical_rdp == e.canonical_rdp);
        CHECK(r.picard == e.picard);
    }
}

TEST_CASE("degeneration splits") {
    DegenerationSplit sa = degeneration_split(atlas_get("547444"));
    CHECK(sa.shared_reflexive);
    CHECK(sa.k2[0] == 2);
    CHECK(sa.k2[1] == 2);
    CHECK(Q(6) * volume(sa.d1) == 18);
    for (int i : {0, 1}) {
        CHECK(sa.sing_rank[i] == 1);
        CHECK(sa.sing_count[i] == 3);
    }

    DegenerationSplit sb = degeneration_split(atlas_get("545317"));
    CHECK(sb.shared_reflexive);
    CHECK(sb.k2[0] == 2);
    CHECK(sb.k2[1] == 2);

    for (const char* id : {"c", "d", "e"}) {
        INFO("entry ", id);
        DegenerationSplit s = degeneration_split(atlas_get(id));
        CHECK(s.shared_reflexive);
        CHECK(s.k2[0] == 1);
        CHECK(s.k2[1] == 1);
        for (int i : {0, 1}) {
            CHECK(s.sing_rank[i] == 1);
            CHECK(s.sing_count[i] == 4);
        }
    }

    CHECK_THROWS(degeneration_split(atlas_get("545932")));
}

TEST_CASE("index-2 coarsening") {
    const std::vector<V3> drop_a = {{-1, -1, 1}, {-1, 0, 1}, {1, 0, 0},
                                    {1, 0, 1},   {1, 1, 0},  {1, 1, 1}};
    Polytope ca = lattice_coarsen(atlas_get("547444").polytope(), drop_a, 0);
    CHECK(is_reflexive(ca));

    const std::vector<V3> drop_b = {{-1, 1, 0}, {-1, 1, -1}, {1, 0, 0},
                                    {1, -1, 0}, {1, -1, 1},  {1, 0, 1}};
    Polytope cb = lattice_coarsen(atlas_get("545317").polytope(), drop_b, 0);
    CHECK(is_reflexive(cb));

    for (const char* id : {"c", "d", "e"}) {
        INFO("entry ", id);
        Polytope P = atlas_get(id).polytope();
        std::vector<V3> drop;
        for (const auto& v : lattice_points(P))
            if (v[0] % 2 != 0) drop.push_back(v);
        CHECK(drop.size() == 4);
        Polytope c = lattice_coarsen(P, drop, 0);
        CHECK(is_reflexive(c));
        CHECK(lattice_count(c) == 11);
    }

    // keeping a point with an odd first coordinate must be rejected by name
    CHECK_THROWS_WITH_AS(lattice_coarsen(atlas_get("547444").polytope(), {}, 0),
                         doctest::Contains("points outside the index-2 sublattice"),
                         std::runtime_error);
}

TEST_CASE("index-2 refinement cover of the sporadic entries") {
    for (const char* id : {"c", "d", "e"}) {
        INFO("entry ", id);
        CoverReport r = lattice_refine_cover(atlas_get(id));
        CHECK(r.lstar == 3);
        CHECK(r.lstar_can == 5);
        CHECK(r.k2 == 4);
        CHECK(r.quadric);
    }
    CHECK_THROWS(lattice_refine_cover(atlas_get("547444")));
}

TEST_CASE("table renderings") {
    std::string md = atlas_table_markdown();
    CHECK(md.find("534866") != std::string::npos);
    CHECK(md.find("A2+E6") != std::string::npos);

    auto rows = nlohmann::json::parse(atlas_table_json());
    REQUIRE(rows.size() == 49);
    CHECK(rows[0]["id"] == "547444");
    CHECK(rows[0]["picard_generic"] == 7);
}
