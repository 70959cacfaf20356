#include <array>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

#include "hkt/gcw.hpp"
#include "hkt/weyl.hpp"

namespace hkt {

namespace {

using Vec2 = std::array<Rat, 2>;

Int rat_floor(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    Int mod = ((num % den) + den) % den;
    return (num - mod) / den;
}

Vec2 mat_apply(const Mat2& M, const Vec2& v) {
    return {Rat(M.a[0]) * v[0] + Rat(M.a[1]) * v[1], Rat(M.a[2]) * v[0] + Rat(M.a[3]) * v[1]};
}

Vec2 sub_int(const Vec2& v, const Int& tx, const Int& ty) {
    return {v[0] - Rat(tx), v[1] - Rat(ty)};
}

Vec2 reduce_mod_z2(const Vec2& v) { return sub_int(v, rat_floor(v[0]), rat_floor(v[1])); }

bool vec_eq(const Vec2& a, const Vec2& b) { return a[0] == b[0] && a[1] == b[1]; }

bool vec_lt(const Vec2& a, const Vec2& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
}

struct Segment {
    Vec2 p, q;  // lifted endpoints, midpoint in [0,1)^2

    static Segment canonical(Vec2 a, Vec2 b) {
        Vec2 mid{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
        Int tx = rat_floor(mid[0]), ty = rat_floor(mid[1]);
        Segment s{sub_int(a, tx, ty), sub_int(b, tx, ty)};
        return s;
    }
    // Unordered key.
    std::vector<Rat> key() const {
        Vec2 a = p, b = q;
        if (vec_lt(b, a)) std::swap(a, b);
        return {a[0], a[1], b[0], b[1]};
    }
};

struct Polygon {
    std::vector<Vec2> verts;  // cyclic traversal, lifted, barycenter in [0,1)^2

    static Polygon canonical(std::vector<Vec2> vs) {
        Rat bx = 0, by = 0;
        for (const auto& v : vs) {
            bx += v[0];
            by += v[1];
        }
        bx /= int(vs.size());
        by /= int(vs.size());
        Int tx = rat_floor(bx), ty = rat_floor(by);
        for (auto& v : vs) v = sub_int(v, tx, ty);
        // rotate so the lexicographically least vertex comes first
        size_t best = 0;
        for (size_t i = 1; i < vs.size(); ++i)
            if (vec_lt(vs[i], vs[best])) best = i;
        std::rotate(vs.begin(), vs.begin() + best, vs.end());
        Polygon p;
        p.verts = std::move(vs);
        return p;
    }
    std::vector<Rat> set_key() const {
        std::vector<Vec2> vs = verts;
        std::sort(vs.begin(), vs.end(), vec_lt);
        std::vector<Rat> k;
        for (const auto& v : vs) {
            k.push_back(v[0]);
            k.push_back(v[1]);
        }
        return k;
    }
};

// Builds a G-CW complex on the 2-torus from integral matrices acting modulo
// Z^2 and seed polygons (counterclockwise traversals) whose orbit tiles the
// torus. All arithmetic is exact; the result passes the full validator.
GCWComplex build_torus_complex(const std::string& name, const std::vector<Mat2>& generators,
                               const std::vector<std::vector<Vec2>>& seeds) {
    // group closure
    std::vector<Mat2> elements{Mat2::identity()};
    std::map<std::array<i64, 4>, int> elem_index{{Mat2::identity().a, 0}};
    for (size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : generators) {
            Mat2 next = g * elements[head];
            if (elem_index.emplace(next.a, static_cast<int>(elements.size())).second)
                elements.push_back(next);
        }
    }
    const int n = static_cast<int>(elements.size());

    // face orbit closure with pushforward orientations
    std::vector<Polygon> faces;
    std::map<std::vector<Rat>, int> face_index;
    std::deque<int> queue;
    for (const auto& s : seeds) {
        Polygon p = Polygon::canonical(s);
        if (face_index.emplace(p.set_key(), static_cast<int>(faces.size())).second) {
            faces.push_back(p);
            queue.push_back(static_cast<int>(faces.size()) - 1);
        }
    }
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        for (int g = 1; g < n; ++g) {
            std::vector<Vec2> mapped;
            for (const auto& v : faces[f].verts) mapped.push_back(mat_apply(elements[g], v));
            Polygon p = Polygon::canonical(std::move(mapped));
            auto [it, fresh] = face_index.emplace(p.set_key(), static_cast<int>(faces.size()));
            if (fresh) {
                faces.push_back(p);
                queue.push_back(static_cast<int>(faces.size()) - 1);
            } else {
                // setwise stabilizers of 2-cells must act pointwise (trivially)
                const Polygon& have = faces[it->second];
                bool same = have.verts == p.verts;
                if (!same)
                    throw validation_error(name + ": face orientation clash (not a G-CW action)");
            }
        }
    }

    // vertices and directed edges from the traversals
    std::map<std::vector<Rat>, int> vert_index;
    std::vector<Vec2> verts;
    auto add_vertex = [&](const Vec2& v) {
        Vec2 r = reduce_mod_z2(v);
        std::vector<Rat> key{r[0], r[1]};
        auto [it, fresh] = vert_index.emplace(key, static_cast<int>(verts.size()));
        if (fresh) verts.push_back(r);
        return it->second;
    };
    std::map<std::vector<Rat>, int> edge_index;
    std::vector<Segment> edges;  // stored with representative orientation
    auto add_edge = [&](const Vec2& a, const Vec2& b) {
        Segment s = Segment::canonical(a, b);
        auto [it, fresh] = edge_index.emplace(s.key(), static_cast<int>(edges.size()));
        if (fresh) edges.push_back(s);
        return it->second;
    };
    for (const auto& f : faces) {
        for (size_t i = 0; i < f.verts.size(); ++i) {
            add_vertex(f.verts[i]);
            add_edge(f.verts[i], f.verts[(i + 1) % f.verts.size()]);
        }
    }

    // propagate edge orientations equivariantly: BFS over orbits
    {
        std::vector<char> oriented(edges.size(), 0);
        for (size_t e = 0; e < edges.size(); ++e) {
            if (oriented[e]) continue;
            std::deque<int> q2{static_cast<int>(e)};
            oriented[e] = 1;
            while (!q2.empty()) {
                int cur = q2.front();
                q2.pop_front();
                for (int g = 1; g < n; ++g) {
                    Segment img = Segment::canonical(mat_apply(elements[g], edges[cur].p),
                                                     mat_apply(elements[g], edges[cur].q));
                    int idx = edge_index.at(img.key());
                    if (!oriented[idx]) {
                        edges[idx] = img;  // pushforward orientation
                        oriented[idx] = 1;
                        q2.push_back(idx);
                    } else if (!vec_eq(img.p, edges[idx].p) || !vec_eq(img.q, edges[idx].q)) {
                        // a setwise stabilizer reversed the edge: not G-CW
                        throw validation_error(name +
                                               ": edge orientation clash (not a G-CW action)");
                    }
                }
            }
        }
    }

    // assemble the complex
    GCWComplex K;
    K.name = name;
    for (int i = 0; i < n; ++i) K.group.names.push_back("g" + std::to_string(i));
    K.group.table.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) K.group.table[a][b] = elem_index.at((elements[a] * elements[b]).a);
    K.group.identity = 0;
    K.group.inverse.assign(n, 0);
    for (int a = 0; a < n; ++a) K.group.inverse[a] = elem_index.at(elements[a].inverse().a);

    const int nv = static_cast<int>(verts.size());
    const int ne = static_cast<int>(edges.size());
    const int nf = static_cast<int>(faces.size());
    auto vcell = [&](int i) { return i; };
    auto ecell = [&](int i) { return nv + i; };
    auto fcell = [&](int i) { return nv + ne + i; };

    for (int i = 0; i < nv; ++i) K.cells.push_back({"v" + std::to_string(i), 0, {}});
    for (int i = 0; i < ne; ++i) K.cells.push_back({"e" + std::to_string(i), 1, {}});
    for (int i = 0; i < nf; ++i) K.cells.push_back({"f" + std::to_string(i), 2, {}});

    // action permutations
    K.action.assign(n, std::vector<int>(nv + ne + nf, -1));
    for (int g = 0; g < n; ++g) {
        for (int i = 0; i < nv; ++i) {
            Vec2 img = reduce_mod_z2(mat_apply(elements[g], verts[i]));
            K.action[g][vcell(i)] = vcell(vert_index.at({img[0], img[1]}));
        }
        for (int i = 0; i < ne; ++i) {
            Segment img = Segment::canonical(mat_apply(elements[g], edges[i].p),
                                             mat_apply(elements[g], edges[i].q));
            K.action[g][ecell(i)] = ecell(edge_index.at(img.key()));
        }
        for (int i = 0; i < nf; ++i) {
            std::vector<Vec2> mapped;
            for (const auto& v : faces[i].verts) mapped.push_back(mat_apply(elements[g], v));
            Polygon p = Polygon::canonical(std::move(mapped));
            K.action[g][fcell(i)] = fcell(face_index.at(p.set_key()));
        }
    }

    // isotropy = setwise stabilizer; verify pointwise behaviour geometrically
    for (int c = 0; c < nv + ne + nf; ++c) {
        for (int g = 0; g < n; ++g)
            if (K.action[g][c] == c) K.cells[c].isotropy.push_back(g);
        for (int g : K.cells[c].isotropy) {
            if (g == 0) continue;
            const Mat2& M = elements[g];
            if (c < nv) continue;  // points are fixed pointwise by definition
            if (c < nv + ne) {
                const Segment& s = edges[c - nv];
                Vec2 dp = {mat_apply(M, s.p)[0] - s.p[0], mat_apply(M, s.p)[1] - s.p[1]};
                Vec2 dq = {mat_apply(M, s.q)[0] - s.q[0], mat_apply(M, s.q)[1] - s.q[1]};
                if (!vec_eq(dp, dq) || denominator(dp[0]) != 1 || denominator(dp[1]) != 1)
                    throw validation_error(name + ": edge stabilizer is not pointwise");
            } else {
                throw validation_error(name + ": nontrivial 2-cell stabilizer");
            }
        }
    }

    // incidence numbers
    std::map<std::pair<int, int>, i64> inc;
    for (int i = 0; i < ne; ++i) {
        int head = add_vertex(edges[i].q), tail = add_vertex(edges[i].p);
        inc[{vcell(head), ecell(i)}] += 1;
        inc[{vcell(tail), ecell(i)}] -= 1;
    }
    for (int i = 0; i < nf; ++i) {
        const auto& vs = faces[i].verts;
        for (size_t s = 0; s < vs.size(); ++s) {
            Segment step = Segment::canonical(vs[s], vs[(s + 1) % vs.size()]);
            int e = edge_index.at(step.key());
            if (vec_eq(step.p, edges[e].p) && vec_eq(step.q, edges[e].q))
                inc[{ecell(e), fcell(i)}] += 1;
            else
                inc[{ecell(e), fcell(i)}] -= 1;
        }
    }
    for (const auto& [pair, coef] : inc)
        if (coef != 0) K.incidence.push_back({pair.first, pair.second, coef});

    // torus sanity: Euler characteristic of the underlying space vanishes
    if (nv - ne + nf != 0)
        throw validation_error(name + ": Euler characteristic of the torus is not zero");
    K.validate();
    return K;
}

GCWComplex build_circle_trivial() {
    GCWComplex K;
    K.name = "circle_trivial";
    K.group.names = {"e"};
    K.group.table = {{0}};
    K.group.identity = 0;
    K.group.inverse = {0};
    K.cells.push_back({"v0", 0, {0}});
    K.cells.push_back({"e0", 1, {0}});
    K.action = {{0, 1}};
    // the 1-cell attaches to the single vertex with degree 0
    K.validate();
    return K;
}

GCWComplex build_circle_reflection() {
    GCWComplex K;
    K.name = "circle_reflection";
    K.group.names = {"e", "s"};
    K.group.table = {{0, 1}, {1, 0}};
    K.group.identity = 0;
    K.group.inverse = {0, 1};
    // fixed vertices at +-1, the two arcs are swapped by conjugation
    K.cells.push_back({"vplus", 0, {0, 1}});
    K.cells.push_back({"vminus", 0, {0, 1}});
    K.cells.push_back({"eup", 1, {0}});
    K.cells.push_back({"edown", 1, {0}});
    K.action = {{0, 1, 2, 3}, {0, 1, 3, 2}};
    K.incidence.push_back({K.cell_index("vplus"), K.cell_index("eup"), -1});
    K.incidence.push_back({K.cell_index("vminus"), K.cell_index("eup"), 1});
    K.incidence.push_back({K.cell_index("vplus"), K.cell_index("edown"), -1});
    K.incidence.push_back({K.cell_index("vminus"), K.cell_index("edown"), 1});
    K.validate();
    return K;
}

GCWComplex build_torus_swap() {
    // S_2 swapping the coordinates of T^2; the fixed circle is the diagonal.
    Mat2 swap{{0, 1, 1, 0}};
    Rat h(1, 2);
    std::vector<Vec2> seed{{Rat(0), Rat(0)},
                           {Rat(1), Rat(1)},
                           {Rat(1), Rat(3) / 2},
                           {h, Rat(1)},
                           {Rat(0), h}};
    return build_torus_complex("torus_swap", {swap}, {seed});
}

GCWComplex build_torus_b2() {
    // W(B_2) acting by signed permutations; eight triangles around the origin.
    Mat2 swap{{0, 1, 1, 0}};
    Mat2 flip{{1, 0, 0, -1}};
    Rat h(1, 2);
    std::vector<Vec2> seed{{Rat(0), Rat(0)}, {h, Rat(0)}, {h, h}};
    return build_torus_complex("torus_B2", {swap, flip}, {seed});
}

GCWComplex build_torus_g2() {
    // W(G_2) acting on Hom(X, S^1): transposes of the reflection matrices on X.
    Mat2 s1t{{-1, 0, 3, 1}};
    Mat2 s2t{{1, 1, 0, -1}};
    std::vector<Vec2> seed{{Rat(0), Rat(0)}, {Rat(1) / 3, Rat(0)}, {Rat(0), Rat(1) / 2}};
    return build_torus_complex("torus_G2", {s1t, s2t}, {seed});
}

}  // namespace

std::vector<std::string> builtin_complex_names() {
    return {"circle_trivial", "circle_reflection", "torus_swap", "torus_B2", "torus_G2"};
}

const GCWComplex& builtin_complex(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, GCWComplex> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    GCWComplex K;
    if (name == "circle_trivial") K = build_circle_trivial();
    else if (name == "circle_reflection") K = build_circle_reflection();
    else if (name == "torus_swap") K = build_torus_swap();
    else if (name == "torus_B2") K = build_torus_b2();
    else if (name == "torus_G2") K = build_torus_g2();
    else throw std::invalid_argument("unknown builtin complex: " + name);
    return cache.emplace(name, std::move(K)).first->second;
}

}  // namespace hkt
