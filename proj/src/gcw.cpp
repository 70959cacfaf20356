#include "hkt/gcw.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hkt {

// ---------------------------------------------------------------------------
// FiniteGroupSpec
// ---------------------------------------------------------------------------

void FiniteGroupSpec::validate() const {
    const int n = order();
    if (n == 0) throw validation_error("group: empty element list");
    if (static_cast<int>(table.size()) != n) throw validation_error("group: table row count");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw validation_error("group: table column count");
        for (int v : row)
            if (v < 0 || v >= n) throw validation_error("group: table entry out of range");
    }
    for (int i = 0; i < n; ++i)
        if (table[identity][i] != i || table[i][identity] != i)
            throw validation_error("group: identity axiom fails");
    if (static_cast<int>(inverse.size()) != n) throw validation_error("group: inverse list size");
    for (int i = 0; i < n; ++i)
        if (table[i][inverse[i]] != identity || table[inverse[i]][i] != identity)
            throw validation_error("group: inverse axiom fails");
    if (n > 512) throw capacity_error("group: order above associativity-check bound");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw validation_error("group: associativity fails");
}

FiniteGroupOps FiniteGroupSpec::ops() const {
    FiniteGroupOps o;
    o.order = order();
    o.id = identity;
    const auto* t = &table;
    const auto* inv = &inverse;
    o.mul = [t](int a, int b) { return (*t)[a][b]; };
    o.inv = [inv](int a) { return (*inv)[a]; };
    return o;
}

// ---------------------------------------------------------------------------
// Complex validation
// ---------------------------------------------------------------------------

int GCWComplex::top_dim() const {
    int d = 0;
    for (const auto& c : cells) d = std::max(d, c.dim);
    return d;
}

int GCWComplex::cell_index(const std::string& id) const {
    for (size_t i = 0; i < cells.size(); ++i)
        if (cells[i].id == id) return static_cast<int>(i);
    throw std::invalid_argument("cell_index: unknown cell id " + id);
}

void GCWComplex::validate() const {
    group.validate();
    const int n = group.order();
    const int m = static_cast<int>(cells.size());
    if (m == 0) throw validation_error("complex: no cells");
    {
        std::set<std::string> ids;
        for (const auto& c : cells)
            if (!ids.insert(c.id).second)
                throw validation_error("complex: duplicate cell id " + c.id);
    }
    for (const auto& c : cells) {
        if (c.dim < 0) throw validation_error("complex: negative dimension at " + c.id);
        if (c.isotropy.empty() ||
            !std::binary_search(c.isotropy.begin(), c.isotropy.end(), group.identity))
            throw validation_error("complex: isotropy of " + c.id + " misses the identity");
        for (int g : c.isotropy) {
            if (g < 0 || g >= n) throw validation_error("complex: isotropy element out of range");
            for (int h : c.isotropy)
                if (!std::binary_search(c.isotropy.begin(), c.isotropy.end(), group.table[g][h]))
                    throw validation_error("complex: isotropy of " + c.id +
                                           " not closed under multiplication");
        }
    }
    if (static_cast<int>(action.size()) != n)
        throw validation_error("complex: action must list every group element");
    for (int g = 0; g < n; ++g) {
        if (static_cast<int>(action[g].size()) != m)
            throw validation_error("complex: action permutation length mismatch");
        std::vector<char> seen(m, 0);
        for (int c = 0; c < m; ++c) {
            int img = action[g][c];
            if (img < 0 || img >= m || seen[img])
                throw validation_error("complex: action is not a cell permutation");
            seen[img] = 1;
            if (cells[img].dim != cells[c].dim)
                throw validation_error("complex: action does not preserve dimension");
        }
    }
    for (int c = 0; c < m; ++c)
        if (action[group.identity][c] != c)
            throw validation_error("complex: identity acts nontrivially");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int c = 0; c < m; ++c)
                if (action[group.table[g][h]][c] != action[g][action[h][c]])
                    throw validation_error("complex: action is not a homomorphism");
    // isotropy = setwise stabilizer (the pointwise condition of a G-CW complex)
    for (int c = 0; c < m; ++c) {
        std::vector<int> stab;
        for (int g = 0; g < n; ++g)
            if (action[g][c] == c) stab.push_back(g);
        if (stab != cells[c].isotropy)
            throw validation_error("complex: isotropy of " + cells[c].id +
                                   " differs from its setwise stabilizer");
    }
    // conjugation consistency: iso(g c) = g iso(c) g^{-1}
    for (int g = 0; g < n; ++g)
        for (int c = 0; c < m; ++c) {
            std::vector<int> conj;
            for (int h : cells[c].isotropy)
                conj.push_back(group.table[group.table[g][h]][group.inverse[g]]);
            std::sort(conj.begin(), conj.end());
            if (conj != cells[action[g][c]].isotropy)
                throw validation_error("complex: isotropy conjugation fails at " + cells[c].id);
        }

    std::map<std::pair<int, int>, i64> inc;
    for (const auto& e : incidence) {
        if (e.tau < 0 || e.tau >= m || e.sigma < 0 || e.sigma >= m)
            throw validation_error("complex: incidence cell out of range");
        if (cells[e.sigma].dim != cells[e.tau].dim + 1)
            throw validation_error("complex: incidence dimensions must differ by one (" +
                                   cells[e.tau].id + " : " + cells[e.sigma].id + ")");
        if (!inc.emplace(std::make_pair(e.tau, e.sigma), e.coef).second)
            throw validation_error("complex: duplicate incidence pair");
    }
    auto coef = [&](int t, int s) {
        auto it = inc.find({t, s});
        return it == inc.end() ? i64(0) : it->second;
    };
    for (const auto& e : incidence) {
        for (int g = 0; g < n; ++g)
            if (coef(action[g][e.tau], action[g][e.sigma]) != e.coef)
                throw validation_error("complex: incidence numbers are not equivariant at (" +
                                       cells[e.tau].id + " : " + cells[e.sigma].id + ")");
        if (e.coef != 0) {
            // G_sigma must fix tau as well
            for (int g : cells[e.sigma].isotropy)
                if (!std::binary_search(cells[e.tau].isotropy.begin(), cells[e.tau].isotropy.end(),
                                        g))
                    throw validation_error("complex: face isotropy containment fails at (" +
                                           cells[e.tau].id + " : " + cells[e.sigma].id + ")");
        }
    }
    // d o d = 0 on incidence numbers
    for (int t = 0; t < m; ++t)
        for (int r = 0; r < m; ++r) {
            if (cells[r].dim != cells[t].dim + 2) continue;
            i64 acc = 0;
            for (int s = 0; s < m; ++s)
                if (cells[s].dim == cells[t].dim + 1) acc += coef(t, s) * coef(s, r);
            if (acc != 0)
                throw validation_error("complex: d o d != 0 between " + cells[t].id + " and " +
                                       cells[r].id);
        }
}

// ---------------------------------------------------------------------------
// Parsing / serialization
// ---------------------------------------------------------------------------

GCWComplex parse_complex(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw validation_error(std::string("parse: malformed JSON: ") + e.what());
    }
    if (!j.contains("format") || j["format"] != "hkt-gcw")
        throw validation_error("parse: missing or wrong format marker (expect hkt-gcw)");
    if (!j.contains("version") || j["version"] != 1)
        throw validation_error("parse: unsupported document version");
    GCWComplex K;
    if (j.contains("name")) K.name = j["name"].get<std::string>();
    const auto& jg = j.at("group");
    K.group.names = jg.at("elements").get<std::vector<std::string>>();
    K.group.table = jg.at("table").get<std::vector<std::vector<int>>>();
    const int n = K.group.order();
    // identity and inverses are derived, not trusted from the document
    K.group.identity = -1;
    for (int e = 0; e < n; ++e) {
        bool is_id = true;
        for (int i = 0; i < n && is_id; ++i)
            if (K.group.table[e][i] != i || K.group.table[i][e] != i) is_id = false;
        if (is_id) {
            K.group.identity = e;
            break;
        }
    }
    if (K.group.identity < 0) throw validation_error("parse: group has no identity");
    K.group.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (K.group.table[a][b] == K.group.identity) K.group.inverse[a] = b;

    std::map<std::string, int> name_index;
    for (int i = 0; i < n; ++i) name_index[K.group.names[i]] = i;
    std::map<std::string, int> cell_index;
    for (const auto& jc : j.at("cells")) {
        GCWComplex::Cell c;
        c.id = jc.at("id").get<std::string>();
        c.dim = jc.at("dim").get<int>();
        for (const auto& nm : jc.at("isotropy")) {
            auto it = name_index.find(nm.get<std::string>());
            if (it == name_index.end())
                throw validation_error("parse: unknown group element in isotropy of " + c.id);
            c.isotropy.push_back(it->second);
        }
        std::sort(c.isotropy.begin(), c.isotropy.end());
        cell_index[c.id] = static_cast<int>(K.cells.size());
        K.cells.push_back(std::move(c));
    }
    K.action.assign(n, {});
    const auto& ja = j.at("action");
    for (int g = 0; g < n; ++g) {
        if (!ja.contains(K.group.names[g]))
            throw validation_error("parse: action misses element " + K.group.names[g]);
        for (const auto& id : ja.at(K.group.names[g])) {
            auto it = cell_index.find(id.get<std::string>());
            if (it == cell_index.end()) throw validation_error("parse: action names unknown cell");
            K.action[g].push_back(it->second);
        }
    }
    for (const auto& je : j.at("incidence")) {
        GCWComplex::Incidence e;
        e.tau = cell_index.at(je.at(0).get<std::string>());
        e.sigma = cell_index.at(je.at(1).get<std::string>());
        e.coef = je.at(2).get<i64>();
        K.incidence.push_back(e);
    }
    K.validate();
    return K;
}

GCWComplex parse_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::invalid_argument("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_complex(ss.str());
}

std::string serialize_complex(const GCWComplex& K) {
    nlohmann::ordered_json j;
    j["format"] = "hkt-gcw";
    j["version"] = 1;
    if (!K.name.empty()) j["name"] = K.name;
    j["group"]["elements"] = K.group.names;
    j["group"]["table"] = K.group.table;
    j["cells"] = nlohmann::ordered_json::array();
    for (const auto& c : K.cells) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["dim"] = c.dim;
        std::vector<std::string> iso;
        for (int g : c.isotropy) iso.push_back(K.group.names[g]);
        jc["isotropy"] = iso;
        j["cells"].push_back(jc);
    }
    j["action"] = nlohmann::ordered_json::object();
    for (int g = 0; g < K.group.order(); ++g) {
        std::vector<std::string> images;
        for (int c : K.action[g]) images.push_back(K.cells[c].id);
        j["action"][K.group.names[g]] = images;
    }
    j["incidence"] = nlohmann::ordered_json::array();
    for (const auto& e : K.incidence)
        j["incidence"].push_back({K.cells[e.tau].id, K.cells[e.sigma].id, e.coef});
    return j.dump(1) + "\n";
}

// ---------------------------------------------------------------------------
// Orbits and the local system
// ---------------------------------------------------------------------------

GCWOrbits gcw_orbits(const GCWComplex& K) {
    const int m = static_cast<int>(K.cells.size());
    const int n = K.group.order();
    GCWOrbits O;
    O.orbit_of_cell.assign(m, -1);
    O.g_to_rep.assign(m, -1);
    O.orbits_by_dim.assign(K.top_dim() + 1, {});
    for (int c = 0; c < m; ++c) {
        if (O.orbit_of_cell[c] >= 0) continue;
        int orbit = static_cast<int>(O.rep_of_orbit.size());
        O.rep_of_orbit.push_back(c);
        O.orbits_by_dim[K.cells[c].dim].push_back(orbit);
        for (int g = 0; g < n; ++g) {
            int img = K.action[g][c];
            if (O.orbit_of_cell[img] < 0) {
                O.orbit_of_cell[img] = orbit;
                O.g_to_rep[img] = g;
            }
        }
    }
    return O;
}

namespace {

struct StalkData {
    std::vector<int> elements;              // subgroup as G-element indices
    std::vector<int> g_to_sub;              // G index -> subgroup index (-1 outside)
    AbstractClasses classes;                // classes in subgroup indexing
    CharacterTable table;
};

StalkData stalk_data(const GCWComplex& K, int cell) {
    StalkData S;
    S.elements = K.cells[cell].isotropy;
    S.g_to_sub.assign(K.group.order(), -1);
    for (size_t i = 0; i < S.elements.size(); ++i) S.g_to_sub[S.elements[i]] = static_cast<int>(i);
    FiniteGroupOps ops;
    ops.order = static_cast<int>(S.elements.size());
    for (size_t i = 0; i < S.elements.size(); ++i)
        if (S.elements[i] == K.group.identity) ops.id = static_cast<int>(i);
    const auto* Kp = &K;
    const auto* Sp = &S;
    ops.mul = [Kp, Sp](int a, int b) {
        return Sp->g_to_sub[Kp->group.table[Sp->elements[a]][Sp->elements[b]]];
    };
    ops.inv = [Kp, Sp](int a) { return Sp->g_to_sub[Kp->group.inverse[Sp->elements[a]]]; };
    S.classes = abstract_classes(ops);
    std::vector<std::string> labels;
    for (size_t c = 0; c < S.classes.reps.size(); ++c) labels.push_back("c" + std::to_string(c));
    S.table = dixon_character_table(ops, S.classes, labels,
                                    "iso(" + K.cells[cell].id + ")");
    return S;
}

// Multiplicity matrix of chi -> res_{K_sub}(chi^g), where chi runs over
// Irr(G_tau0), the target subgroup is the isotropy of sigma0, and g maps tau0
// onto a face tau of sigma0.
IntMatrix conj_restriction_matrix(const GCWComplex& K, const StalkData& tau_stalk,
                                  const StalkData& sigma_stalk, int g) {
    const int rows = static_cast<int>(sigma_stalk.table.values.size());
    const int cols = static_cast<int>(tau_stalk.table.values.size());
    const int ksz = static_cast<int>(sigma_stalk.elements.size());
    const int ginv = K.group.inverse[g];
    IntMatrix M(rows, cols);
    for (int i = 0; i < cols; ++i) {
        // chi_i^g as a function on the sigma-subgroup: x -> chi_i(g^{-1} x g)
        std::vector<i64> vals(ksz);
        for (int x = 0; x < ksz; ++x) {
            int gx = K.group.table[K.group.table[ginv][sigma_stalk.elements[x]]][g];
            int sub = tau_stalk.g_to_sub[gx];
            if (sub < 0)
                throw std::logic_error("local_system: conjugated element leaves the isotropy group");
            vals[x] = tau_stalk.table.values[i][tau_stalk.classes.class_of[sub]];
        }
        for (int jrow = 0; jrow < rows; ++jrow) {
            Int acc = 0;
            for (int x = 0; x < ksz; ++x) {
                int xinv = sigma_stalk.g_to_sub[K.group.inverse[sigma_stalk.elements[x]]];
                acc += Int(vals[x]) *
                       sigma_stalk.table.values[jrow][sigma_stalk.classes.class_of[xinv]];
            }
            M.at(jrow, i) = exact_div(acc, Int(ksz));
        }
    }
    return M;
}

struct Complexes {
    GCWOrbits orbits;
    std::vector<StalkData> stalks;        // per orbit
    std::vector<int> module_rank;         // per degree
    std::vector<IntMatrix> coboundary;    // D_q : C^q -> C^{q+1}
    std::vector<IntMatrix> boundary;      // del_q : C_q -> C_{q-1}
};

Complexes build_complexes(const GCWComplex& K) {
    Complexes X;
    X.orbits = gcw_orbits(K);
    const int norb = static_cast<int>(X.orbits.rep_of_orbit.size());
    X.stalks.reserve(norb);
    for (int o = 0; o < norb; ++o) X.stalks.push_back(stalk_data(K, X.orbits.rep_of_orbit[o]));

    const int top = K.top_dim();
    // column offsets per degree
    std::vector<std::vector<int>> offset(top + 1);
    X.module_rank.assign(top + 1, 0);
    for (int q = 0; q <= top; ++q) {
        for (int o : X.orbits.orbits_by_dim[q]) {
            offset[q].push_back(X.module_rank[q]);
            X.module_rank[q] += static_cast<int>(X.stalks[o].table.values.size());
        }
    }
    auto orbit_slot = [&](int q, int orbit) {
        const auto& list = X.orbits.orbits_by_dim[q];
        for (size_t i = 0; i < list.size(); ++i)
            if (list[i] == orbit) return offset[q][i];
        throw std::logic_error("gcw: orbit slot lookup failed");
    };

    // incidence lists by sigma and by tau
    std::vector<std::vector<std::pair<int, i64>>> faces_of(K.cells.size());    // sigma -> (tau, coef)
    std::vector<std::vector<std::pair<int, i64>>> cofaces_of(K.cells.size());  // tau -> (sigma, coef)
    for (const auto& e : K.incidence) {
        if (e.coef == 0) continue;
        faces_of[e.sigma].emplace_back(e.tau, e.coef);
        cofaces_of[e.tau].emplace_back(e.sigma, e.coef);
    }

    // coboundary D_q: for each (q+1)-orbit rep sigma0, sum over faces tau of
    // sigma0: coef * restriction of the conjugated stalk.
    for (int q = 0; q < top; ++q) {
        IntMatrix D(X.module_rank[q + 1], X.module_rank[q]);
        for (int so : X.orbits.orbits_by_dim[q + 1]) {
            int sigma0 = X.orbits.rep_of_orbit[so];
            int row0 = orbit_slot(q + 1, so);
            for (const auto& [tau, coef] : faces_of[sigma0]) {
                int to = X.orbits.orbit_of_cell[tau];
                int col0 = orbit_slot(q, to);
                IntMatrix M = conj_restriction_matrix(K, X.stalks[to], X.stalks[so],
                                                      X.orbits.g_to_rep[tau]);
                for (int i = 0; i < M.rows(); ++i)
                    for (int j = 0; j < M.cols(); ++j)
                        D.at(row0 + i, col0 + j) += Int(coef) * M.at(i, j);
            }
        }
        X.coboundary.push_back(std::move(D));
    }

    // boundary del_{q+1} on the quotient complex: for each (q+1)-orbit rep
    // sigma0 and each face tau of sigma0, transport the stalk back along
    // g_tau^{-1} and induce up to the tau-representative's isotropy group.
    // Induction multiplicities are computed independently here; Frobenius
    // adjointness makes the result the exact transpose of the coboundary,
    // which gcw_homology_and_duality asserts.
    for (int q = 0; q < top; ++q) {
        IntMatrix B(X.module_rank[q], X.module_rank[q + 1]);
        for (int so : X.orbits.orbits_by_dim[q + 1]) {
            int sigma0 = X.orbits.rep_of_orbit[so];
            int col0 = orbit_slot(q + 1, so);
            const StalkData& sstalk = X.stalks[so];
            const int ssz = static_cast<int>(K.cells[sigma0].isotropy.size());
            for (const auto& [tau, coef] : faces_of[sigma0]) {
                int to = X.orbits.orbit_of_cell[tau];
                int row0 = orbit_slot(q, to);
                const StalkData& tstalk = X.stalks[to];
                int g = X.orbits.g_to_rep[tau];
                const int ginv = K.group.inverse[g];
                // <ind_{G_{g^{-1} sigma0}}^{G_{tau0}}(psi^{g^{-1}}), chi> =
                // (1/|G_sigma0|) sum_{u in G_sigma0} psi(u) chi(g^{-1} u^{-1} g)
                for (int jpsi = 0; jpsi < static_cast<int>(sstalk.table.values.size()); ++jpsi) {
                    for (int ichi = 0; ichi < static_cast<int>(tstalk.table.values.size()); ++ichi) {
                        Int acc = 0;
                        for (int u : K.cells[sigma0].isotropy) {
                            int conj =
                                K.group.table[K.group.table[ginv][K.group.inverse[u]]][g];
                            int psub = sstalk.g_to_sub[u];
                            int csub = tstalk.g_to_sub[conj];
                            if (psub < 0 || csub < 0)
                                throw std::logic_error("gcw: boundary conjugation out of range");
                            acc += Int(sstalk.table.values[jpsi][sstalk.classes.class_of[psub]]) *
                                   tstalk.table.values[ichi][tstalk.classes.class_of[csub]];
                        }
                        B.at(row0 + ichi, col0 + jpsi) += Int(coef) * exact_div(acc, Int(ssz));
                    }
                }
            }
        }
        X.boundary.push_back(std::move(B));
    }
    return X;
}

DegreeData degree_from_snf(int module_rank, const IntMatrix* out_map, const IntMatrix* in_map) {
    DegreeData d;
    int out_rank = 0;
    if (out_map && out_map->cols() > 0 && out_map->rows() > 0) out_rank = out_map->rank();
    d.free_rank = module_rank - out_rank;
    if (in_map && in_map->rows() > 0 && in_map->cols() > 0) {
        SmithForm snf = smith_normal_form(*in_map);
        d.free_rank -= snf.rank;
        d.torsion = snf.torsion();
    }
    return d;
}

}  // namespace

LocalSystem local_system(const GCWComplex& K) {
    LocalSystem L;
    GCWOrbits O = gcw_orbits(K);
    std::vector<StalkData> stalks;
    for (size_t o = 0; o < O.rep_of_orbit.size(); ++o) {
        stalks.push_back(stalk_data(K, O.rep_of_orbit[o]));
        LocalSystem::Stalk s;
        s.orbit = static_cast<int>(o);
        s.cell = O.rep_of_orbit[o];
        s.rank = static_cast<int>(stalks.back().table.values.size());
        s.table = stalks.back().table;
        L.stalks.push_back(std::move(s));
    }
    for (const auto& e : K.incidence) {
        if (e.coef == 0) continue;
        int so = O.orbit_of_cell[e.sigma];
        int to = O.orbit_of_cell[e.tau];
        LocalSystem::Restriction r;
        r.tau_cell = e.tau;
        r.sigma_cell = e.sigma;
        // move the pair so that sigma becomes its orbit representative, then
        // restrict the conjugated stalk of tau's representative
        int g = K.group.inverse[O.g_to_rep[e.sigma]];
        int tau_moved = K.action[g][e.tau];
        r.matrix = conj_restriction_matrix(K, stalks[to], stalks[so], O.g_to_rep[tau_moved]);
        for (int i = 0; i < r.matrix.rows(); ++i)
            for (int j = 0; j < r.matrix.cols(); ++j)
                if (r.matrix.at(i, j) < 0)
                    throw std::logic_error("local_system: negative restriction multiplicity");
        L.restrictions.push_back(std::move(r));
    }
    return L;
}

CohomologyResult gcw_cohomology(const GCWComplex& K) {
    Complexes X = build_complexes(K);
    const int top = K.top_dim();
    CohomologyResult R;
    R.cochain_ranks = X.module_rank;
    for (int q = 0; q <= top; ++q) {
        const IntMatrix* out = (q < top) ? &X.coboundary[q] : nullptr;
        const IntMatrix* in = (q > 0) ? &X.coboundary[q - 1] : nullptr;
        DegreeData d = degree_from_snf(X.module_rank[q], out, in);
        if (!d.torsion.empty()) R.torsion_free = false;
        R.total_rank += d.free_rank;
        if (q % 2 == 0) R.even_rank += d.free_rank;
        else R.odd_rank += d.free_rank;
        R.degrees.push_back(std::move(d));
    }
    return R;
}

HomologyResult gcw_homology_and_duality(const GCWComplex& K) {
    Complexes X = build_complexes(K);
    const int top = K.top_dim();
    HomologyResult R;
    R.duality_ok = true;
    for (int q = 0; q < top; ++q) {
        // boundary del_{q+1} must be the transpose of the coboundary D_q
        if (!(X.boundary[q] == X.coboundary[q].transpose())) R.duality_ok = false;
    }
    for (int q = 0; q <= top; ++q) {
        const IntMatrix* out = (q > 0) ? &X.boundary[q - 1] : nullptr;   // del_q
        const IntMatrix* in = (q < top) ? &X.boundary[q] : nullptr;      // del_{q+1}
        DegreeData d = degree_from_snf(X.module_rank[q], out, in);
        R.degrees.push_back(std::move(d));
    }
    return R;
}

}  // namespace hkt
