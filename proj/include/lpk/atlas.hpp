#pragma once
// Curated family of 49 canonical Fano 3-topes whose Fine interior is
// 3-dimensional, organized into five isomorphism classes of Fine interiors
// (a, b, c, d, e).  Each entry carries its expected invariants so the
// dataset doubles as a regression fixture.

#include "lpk/analyze.hpp"
#include "lpk/fine.hpp"
#include "lpk/polytope.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lpk {

struct AtlasEntry {
    std::string id;                        // numeric id, or "c"/"d"/"e"
    char cls = '?';                        // Fine-interior class a..e
    std::vector<V3> span;                  // spanning lattice points
    Z lattice_total;                       // expected |Delta cap M|
    std::map<Z, Z> ambient;                // expected transversal sings, rank -> count
    std::vector<std::string> canonical_rdp;// expected RDPs of the canonical model
    Z picard;                              // expected generic Picard number
    std::string closure_id;                // id of C(Delta) if not closed, else ""

    Polytope polytope() const { return hull_of(span); }
    bool closed() const { return closure_id.empty(); }
};

// All 49 entries: 20 of class a, 26 of class b, one each of c, d, e.
const std::vector<AtlasEntry>& load_atlas();

const AtlasEntry& atlas_get(const std::string& id);

// Reference Fine interior of a class (vertices include the origin).
Polytope class_interior(char cls);

// Classify a canonical Fano 3-tope by the isomorphism type of its Fine
// interior.  Throws if the interior matches none of the five references.
char classify(const Polytope& P);

// Structural checks on the family: one maximal entry per class containing
// all the others, the known minimal entries, maximal = 6F (a, b) resp. 4F
// (c, d, e) up to translation, and 2F_can inscribed in Delta_can with the
// same edge normals in the facet plane.  Returns the names of the checks
// that passed; throws on the first failure.
std::vector<std::string> verify_extremal_structure();

// Degeneration of the maximal entry of a class into two tetrahedra glued
// along a reflexive triangle.
struct DegenerationSplit {
    Polytope d1, d2;        // the two halves
    Polytope shared;        // shared facet, a 2-dim polytope in 3-space
    bool shared_reflexive = false;
    Q k2[2];                // component self-intersection K^2
    Z sing_rank[2];         // transversal sings on the split edge: A_k ...
    Z sing_count[2];        // ... this many times
};
DegenerationSplit degeneration_split(const AtlasEntry& e);

// Pass to the index-2 coarse lattice that halves one coordinate axis.
// Every kept lattice point of P (all of them minus `dropped`) must have an
// even coordinate on `axis`; offenders are reported in the exception.
// Returns the hull of the kept points in coarse coordinates.
Polytope lattice_coarsen(const Polytope& P, const std::vector<V3>& dropped, int axis);

// Pass to the index-2 refinement that doubles one coordinate axis, for the
// classes c, d, e.  Reports the interior count of the image, of its
// adjoint facet, the degree of the resulting model, and whether the three
// lattice points of 2F_can are collinear and equally spaced.
struct CoverReport {
    Polytope refined;
    Z lstar = 0;          // interior lattice points of the image
    Z lstar_can = 0;      // interior lattice points of its distance-2 facet
    Z k2 = 0;             // degree of the covering model
    bool quadric = false; // 2F_can cap M is 3 collinear equally spaced points
};
CoverReport lattice_refine_cover(const AtlasEntry& e, int axis = 1);

// Markdown / JSON renderings of the table (id, class, l, ambient, RDPs,
// Picard, closure).
std::string atlas_table_markdown();
std::string atlas_table_json();

} // namespace lpk
