#pragma once

#include <string>
#include <vector>

#include "hkt/chars.hpp"
#include "hkt/intmat.hpp"

namespace hkt {

// Finite group given by a multiplication table.
struct FiniteGroupSpec {
    std::vector<std::string> names;
    std::vector<std::vector<int>> table;  // table[i][j] = index of g_i g_j
    int identity = 0;
    std::vector<int> inverse;

    int order() const { return static_cast<int>(names.size()); }
    void validate() const;
    FiniteGroupOps ops() const;
};

// Finite G-CW complex with oriented cells: cells carry isotropy subgroups,
// the action permutes cells, and incidence numbers are equivariant.
struct GCWComplex {
    std::string name;
    FiniteGroupSpec group;

    struct Cell {
        std::string id;
        int dim = 0;
        std::vector<int> isotropy;  // sorted element indices, a subgroup
    };
    std::vector<Cell> cells;
    std::vector<std::vector<int>> action;  // action[g][c] = image cell

    struct Incidence {
        int tau = 0, sigma = 0;  // dim sigma = dim tau + 1
        i64 coef = 0;
    };
    std::vector<Incidence> incidence;

    int top_dim() const;
    int cell_index(const std::string& id) const;
    // Validates every axiom: group, action homomorphism, dimension
    // preservation, isotropy = setwise stabilizer, conjugation consistency,
    // incidence equivariance, face-isotropy containment and d o d = 0.
    void validate() const;
};

GCWComplex parse_complex(const std::string& json_text);
GCWComplex parse_complex_file(const std::string& path);
std::string serialize_complex(const GCWComplex& K);

// Orbit structure with a transversal (g_to_rep[c] maps the orbit
// representative onto c).
struct GCWOrbits {
    std::vector<int> orbit_of_cell;
    std::vector<int> rep_of_orbit;
    std::vector<int> g_to_rep;  // group element with action[g][rep] = cell
    std::vector<std::vector<int>> orbits_by_dim;  // orbit indices per dimension
};

GCWOrbits gcw_orbits(const GCWComplex& K);

// Representation-ring local system of the crossed product: one stalk with a
// fixed irreducible ordering per orbit representative, and integer restriction
// matrices along faces.
struct LocalSystem {
    struct Stalk {
        int orbit = 0;
        int cell = 0;          // representative cell
        int rank = 0;          // |Irr(G_cell)|
        CharacterTable table;  // character table of the isotropy subgroup
    };
    std::vector<Stalk> stalks;  // indexed by orbit
    struct Restriction {
        int tau_cell = 0, sigma_cell = 0;
        IntMatrix matrix;  // multiplicities of Irr(G_sigma-rep) in restrictions
    };
    std::vector<Restriction> restrictions;  // one per nonzero incidence pair
};

LocalSystem local_system(const GCWComplex& K);

struct DegreeData {
    int free_rank = 0;
    std::vector<Int> torsion;
};

struct CohomologyResult {
    std::vector<DegreeData> degrees;  // index = cohomological degree
    std::vector<int> cochain_ranks;   // rank of the invariant cochain modules
    Int total_rank = 0, even_rank = 0, odd_rank = 0;
    bool torsion_free = true;
};

CohomologyResult gcw_cohomology(const GCWComplex& K);

struct HomologyResult {
    std::vector<DegreeData> degrees;
    bool duality_ok = false;  // boundary matrices equal transposed coboundaries
};

HomologyResult gcw_homology_and_duality(const GCWComplex& K);

std::vector<std::string> builtin_complex_names();
const GCWComplex& builtin_complex(const std::string& name);

}  // namespace hkt
