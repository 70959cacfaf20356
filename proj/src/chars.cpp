#include "hkt/chars.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace hkt {

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

void CharacterTable::validate() const {
    const int k = num_classes();
    if (static_cast<int>(values.size()) != k)
        throw validation_error("character table is not square");
    Int size_sum = 0, sq_sum = 0;
    for (const auto& s : class_sizes) size_sum += s;
    if (size_sum != group_order) throw validation_error("class sizes do not sum to |G|");
    if (identity_class < 0 || identity_class >= k || class_sizes[identity_class] != 1)
        throw validation_error("identity class index is wrong");
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(values[i].size()) != k)
            throw validation_error("character table row length mismatch");
        if (values[i][identity_class] <= 0)
            throw validation_error("character degree not positive");
        sq_sum += Int(values[i][identity_class]) * values[i][identity_class];
    }
    if (sq_sum != group_order) throw validation_error("sum of squared degrees != |G|");
    for (int c = 0; c < k; ++c)
        if (values[0][c] != 1) throw validation_error("first row is not the trivial character");
    // Row orthogonality.
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Int acc = 0;
            for (int c = 0; c < k; ++c)
                acc += class_sizes[c] * Int(values[i][c]) * values[j][inverse_class[c]];
            if (acc != (i == j ? group_order : Int(0)))
                throw validation_error("row orthogonality fails at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
        }
    // Column orthogonality.
    for (int c = 0; c < k; ++c)
        for (int d = c; d < k; ++d) {
            Int acc = 0;
            for (int i = 0; i < k; ++i) acc += Int(values[i][c]) * values[i][inverse_class[d]];
            Int expect = (c == d) ? exact_div(group_order, class_sizes[c]) : Int(0);
            if (acc != expect) throw validation_error("column orthogonality fails");
        }
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama
// ---------------------------------------------------------------------------

namespace {

// Border-strip recursion on beta-sets.
i64 mn_rec(std::vector<int> beta, const std::vector<int>& cycles, size_t ci,
           std::map<std::pair<std::vector<int>, size_t>, i64>& memo) {
    if (ci == cycles.size()) return 1;  // beta is a staircase by then
    auto key = std::make_pair(beta, ci);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int l = cycles[ci];
    i64 total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - l;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int crossings = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++crossings;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        i64 sub = mn_rec(std::move(nb), cycles, ci + 1, memo);
        total += (crossings % 2 == 0 ? sub : -sub);
    }
    memo[key] = total;
    return total;
}

}  // namespace

i64 symmetric_group_character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("symmetric_group_character: weight mismatch");
    if (lambda.weight() == 0) return 1;
    int k = lambda.length();
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lambda.parts()[i] + (k - 1 - i);
    // Remove longest cycles first (any fixed order works; this bounds the memo).
    std::vector<int> cycles = mu.parts();
    std::map<std::pair<std::vector<int>, size_t>, i64> memo;
    return mn_rec(std::move(beta), cycles, 0, memo);
}

// ---------------------------------------------------------------------------
// Catalog table constructions
// ---------------------------------------------------------------------------

namespace {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int pow_int(Int b, int e) {
    Int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Int centralizer_order_b(const Partition& mu, const Partition& lambda) {
    auto half = [](const Partition& p) {
        Int z = 1;
        const auto& parts = p.parts();
        size_t i = 0;
        while (i < parts.size()) {
            size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            int m = static_cast<int>(j - i);
            z *= pow_int(2 * parts[i], m) * factorial(m);
            i = j;
        }
        return z;
    };
    return half(mu) * half(lambda);
}

// All splittings of a partition into an ordered pair of sub-multisets.
std::vector<std::pair<Partition, Partition>> splittings(const Partition& p) {
    std::vector<std::pair<int, int>> runs;  // (part, multiplicity)
    const auto& parts = p.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        runs.emplace_back(parts[i], static_cast<int>(j - i));
        i = j;
    }
    std::vector<std::pair<Partition, Partition>> out;
    std::vector<int> take(runs.size(), 0);
    auto rec = [&](auto&& self, size_t d) -> void {
        if (d == runs.size()) {
            std::vector<int> a, b;
            for (size_t r = 0; r < runs.size(); ++r) {
                for (int c = 0; c < take[r]; ++c) a.push_back(runs[r].first);
                for (int c = take[r]; c < runs[r].second; ++c) b.push_back(runs[r].first);
            }
            out.emplace_back(Partition(std::move(a)), Partition(std::move(b)));
            return;
        }
        for (int c = 0; c <= runs[d].second; ++c) {
            take[d] = c;
            self(self, d + 1);
        }
    };
    rec(rec, 0);
    return out;
}

Partition merge_partitions(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

std::vector<std::pair<Partition, Partition>> bipartition_scheme(int n) {
    std::vector<std::pair<Partition, Partition>> out;
    for (int a = n; a >= 0; --a)
        for (const auto& mu : enum_partitions(a))
            for (const auto& lam : enum_partitions(n - a)) out.emplace_back(mu, lam);
    return out;
}

// chi_{(alpha,beta)} of W(B_n) evaluated on the class (mu, lambda):
// Frobenius induction from B_{|alpha|} x B_{|beta|} of (pullback of chi_alpha)
// boxtimes (pullback of chi_beta times the sign-product character).
i64 wreath_b_value(const Partition& alpha, const Partition& beta, const Partition& mu,
                   const Partition& lambda) {
    const int k = alpha.weight();
    Rat acc = 0;
    for (const auto& [mu1, mu2] : splittings(mu))
        for (const auto& [l1, l2] : splittings(lambda)) {
            if (mu1.weight() + l1.weight() != k) continue;
            i64 ca = symmetric_group_character(alpha, merge_partitions(mu1, l1));
            if (ca == 0) continue;
            i64 cb = symmetric_group_character(beta, merge_partitions(mu2, l2));
            if (cb == 0) continue;
            i64 s = (l2.length() % 2 == 0) ? 1 : -1;
            acc += Rat(Int(ca) * cb * s) / Rat(centralizer_order_b(mu1, l1) * centralizer_order_b(mu2, l2));
        }
    Rat val = acc * Rat(centralizer_order_b(mu, lambda));
    if (denominator(val) != 1) throw std::logic_error("wreath_b_value: non-integral value");
    return to_i64(numerator(val));
}

CharacterTable table_a(const WeylGroup& W) {
    const int n = W.ncoords();
    CharacterTable T;
    T.group_name = W.name();
    T.group_order = W.order();
    const auto& cls = W.classes();
    for (size_t ci = 0; ci < cls.size(); ++ci) {
        T.class_labels.push_back(cls[ci].label.to_string());
        T.class_sizes.push_back(cls[ci].size);
        T.inverse_class.push_back(static_cast<int>(ci));
        if (ge_is_identity(cls[ci].rep)) T.identity_class = static_cast<int>(ci);
    }
    for (const auto& lam : enum_partitions(n)) {
        std::vector<i64> row;
        for (const auto& c : cls) row.push_back(symmetric_group_character(lam, c.label.mu));
        T.irr_labels.push_back(lam.to_string());
        T.values.push_back(std::move(row));
    }
    return T;
}

CharacterTable table_b(const WeylGroup& W) {
    const int n = W.ncoords();
    CharacterTable T;
    T.group_name = W.name();
    T.group_order = W.order();
    const auto& cls = W.classes();
    for (size_t ci = 0; ci < cls.size(); ++ci) {
        T.class_labels.push_back(cls[ci].label.to_string());
        T.class_sizes.push_back(cls[ci].size);
        T.inverse_class.push_back(static_cast<int>(ci));
        if (ge_is_identity(cls[ci].rep)) T.identity_class = static_cast<int>(ci);
    }
    for (const auto& [alpha, beta] : bipartition_scheme(n)) {
        std::vector<i64> row;
        for (const auto& c : cls) row.push_back(wreath_b_value(alpha, beta, c.label.mu, c.label.lambda));
        T.irr_labels.push_back("(" + alpha.to_string() + "," + beta.to_string() + ")");
        T.values.push_back(std::move(row));
    }
    return T;
}

CharacterTable table_d(const WeylGroup& W) {
    const int n = W.ncoords();
    CharacterTable T;
    T.group_name = W.name();
    T.group_order = W.order();
    const auto& cls = W.classes();
    for (size_t ci = 0; ci < cls.size(); ++ci) {
        T.class_labels.push_back(cls[ci].label.to_string());
        T.class_sizes.push_back(cls[ci].size);
        T.inverse_class.push_back(static_cast<int>(ci));
        if (ge_is_identity(cls[ci].rep)) T.identity_class = static_cast<int>(ci);
    }
    if (n == 1) {  // W(D_1) is trivial
        T.irr_labels = {"triv"};
        T.values = {{1}};
        return T;
    }
    auto scheme = bipartition_scheme(n);
    std::map<std::pair<Partition, Partition>, bool> emitted;
    for (const auto& [alpha, beta] : scheme) {
        if (emitted.count({beta, alpha}) || emitted.count({alpha, beta})) continue;
        emitted[{alpha, beta}] = true;
        if (!(alpha == beta)) {
            // Restriction of the B-irreducible stays irreducible.
            std::vector<i64> row;
            for (const auto& c : cls)
                row.push_back(wreath_b_value(alpha, beta, c.label.mu, c.label.lambda));
            T.irr_labels.push_back("{" + alpha.to_string() + "," + beta.to_string() + "}");
            T.values.push_back(std::move(row));
        } else {
            // The restriction splits; the difference character is supported on
            // the split classes sigma(2 nu) / sigma''(2 nu).
            std::vector<i64> plus, minus;
            for (const auto& c : cls) {
                i64 rest = wreath_b_value(alpha, alpha, c.label.mu, c.label.lambda);
                i64 delta = 0;
                if (c.label.split != 0) {
                    std::vector<int> half;
                    for (int part : c.label.mu.parts()) half.push_back(part / 2);
                    Partition nu(std::move(half));
                    i64 d = symmetric_group_character(alpha, nu);
                    for (int i = 0; i < nu.length(); ++i) d *= 2;
                    delta = (c.label.split > 0) ? d : -d;
                }
                if ((rest + delta) % 2 != 0)
                    throw std::logic_error("table_d: split character not integral");
                plus.push_back((rest + delta) / 2);
                minus.push_back((rest - delta) / 2);
            }
            T.irr_labels.push_back("{" + alpha.to_string() + "}+");
            T.values.push_back(std::move(plus));
            T.irr_labels.push_back("{" + alpha.to_string() + "}-");
            T.values.push_back(std::move(minus));
        }
    }
    return T;
}

CharacterTable table_product(const WeylGroup& W) {
    CharacterTable T;
    T.group_name = W.name();
    T.group_order = W.order();
    const auto& cls = W.classes();
    for (size_t ci = 0; ci < cls.size(); ++ci) {
        T.class_labels.push_back(cls[ci].label.to_string());
        T.class_sizes.push_back(cls[ci].size);
        T.inverse_class.push_back(static_cast<int>(ci));
        if (ge_is_identity(cls[ci].rep)) T.identity_class = static_cast<int>(ci);
    }
    std::vector<CharacterTable> ft;
    for (const auto& f : W.factors()) ft.push_back(character_table(*f));
    // Class index decodes in mixed radix, first factor slowest; rows likewise.
    std::vector<int> radix;
    for (const auto& t : ft) radix.push_back(t.num_classes());
    auto decode = [&](int idx) {
        std::vector<int> digits(radix.size());
        for (int d = static_cast<int>(radix.size()) - 1; d >= 0; --d) {
            digits[d] = idx % radix[d];
            idx /= radix[d];
        }
        return digits;
    };
    int total_rows = 1;
    for (int r : radix) total_rows *= r;
    for (int row = 0; row < total_rows; ++row) {
        auto rdig = decode(row);
        std::vector<i64> vals;
        std::string label;
        for (size_t f = 0; f < ft.size(); ++f)
            label += (f ? "x" : "") + ft[f].irr_labels[rdig[f]];
        for (int c = 0; c < T.num_classes(); ++c) {
            auto cdig = decode(c);
            i64 v = 1;
            for (size_t f = 0; f < ft.size(); ++f) v *= ft[f].values[rdig[f]][cdig[f]];
            vals.push_back(v);
        }
        T.irr_labels.push_back(label);
        T.values.push_back(std::move(vals));
    }
    return T;
}

}  // namespace

// ---------------------------------------------------------------------------
// Dixon-Schneider
// ---------------------------------------------------------------------------

AbstractClasses abstract_classes(const FiniteGroupOps& G) {
    if (G.order > 5000)
        throw capacity_error("abstract_classes: order " + std::to_string(G.order) +
                             " exceeds the generic bound");
    AbstractClasses out;
    out.class_of.assign(G.order, -1);
    for (int e = 0; e < G.order; ++e) {
        if (out.class_of[e] >= 0) continue;
        int idx = static_cast<int>(out.reps.size());
        out.reps.push_back(e);
        std::vector<int> members;
        for (int g = 0; g < G.order; ++g) {
            int conj = G.mul(G.mul(g, e), G.inv(g));
            if (out.class_of[conj] < 0) {
                out.class_of[conj] = idx;
                members.push_back(conj);
            }
        }
        out.members.push_back(std::move(members));
    }
    return out;
}

namespace {

struct Fp {
    u_int64_t p;
    u_int64_t add(u_int64_t a, u_int64_t b) const { return (a + b) % p; }
    u_int64_t sub(u_int64_t a, u_int64_t b) const { return (a + p - b % p) % p; }
    u_int64_t mul(u_int64_t a, u_int64_t b) const { return (a % p) * (b % p) % p; }
    u_int64_t pow(u_int64_t a, u_int64_t e) const {
        u_int64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u_int64_t inv(u_int64_t a) const { return pow(a, p - 2); }
};

using Poly = std::vector<u_int64_t>;  // coefficients, low degree first

Poly poly_trim(Poly f) {
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mod(const Fp& F, Poly a, const Poly& m) {
    a = poly_trim(std::move(a));
    Poly mm = poly_trim(m);
    while (a.size() >= mm.size() && !(a.size() == 1 && a[0] == 0)) {
        u_int64_t f = F.mul(a.back(), F.inv(mm.back()));
        size_t off = a.size() - mm.size();
        for (size_t i = 0; i < mm.size(); ++i) a[off + i] = F.sub(a[off + i], F.mul(f, mm[i]));
        a = poly_trim(std::move(a));
        if (a.size() < mm.size()) break;
    }
    return a;
}

Poly poly_mulmod(const Fp& F, const Poly& a, const Poly& b, const Poly& m) {
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    return poly_mod(F, std::move(c), m);
}

Poly poly_gcd(const Fp& F, Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!(b.size() == 1 && b[0] == 0)) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // make monic
    if (!(a.size() == 1 && a[0] == 0)) {
        u_int64_t lead = F.inv(a.back());
        for (auto& c : a) c = F.mul(c, lead);
    }
    return a;
}

Poly poly_powmod(const Fp& F, Poly base, u_int64_t e, const Poly& m) {
    Poly r{1};
    base = poly_mod(F, std::move(base), m);
    while (e) {
        if (e & 1) r = poly_mulmod(F, r, base, m);
        base = poly_mulmod(F, base, base, m);
        e >>= 1;
    }
    return r;
}

Poly poly_derivative(const Fp& F, const Poly& f) {
    if (f.size() <= 1) return {0};
    Poly d(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = F.mul(f[i], i % F.p);
    return poly_trim(std::move(d));
}

// All roots in F_p of a polynomial that splits into linear factors.
std::vector<u_int64_t> poly_roots(const Fp& F, Poly f) {
    std::vector<u_int64_t> roots;
    f = poly_trim(std::move(f));
    // squarefree part
    Poly g = poly_gcd(F, f, poly_derivative(F, f));
    if (g.size() > 1) {
        // f / g by long division
        Poly q;
        Poly rem = f;
        Poly gg = g;
        int qdeg = static_cast<int>(f.size() - g.size());
        q.assign(qdeg + 1, 0);
        for (int d = qdeg; d >= 0; --d) {
            if (rem.size() < gg.size() + d) continue;
            u_int64_t c = F.mul(rem[gg.size() - 1 + d], F.inv(gg.back()));
            q[d] = c;
            for (size_t i = 0; i < gg.size(); ++i) rem[i + d] = F.sub(rem[i + d], F.mul(c, gg[i]));
        }
        f = poly_trim(std::move(q));
    }
    std::vector<Poly> stack{f};
    while (!stack.empty()) {
        Poly cur = poly_trim(stack.back());
        stack.pop_back();
        if (cur.size() <= 1) continue;
        if (cur.size() == 2) {
            roots.push_back(F.mul(F.sub(0, cur[0]), F.inv(cur[1])));
            continue;
        }
        // x | cur?
        if (cur[0] == 0) {
            roots.push_back(0);
            Poly shifted(cur.begin() + 1, cur.end());
            stack.push_back(shifted);
            continue;
        }
        bool split = false;
        for (u_int64_t a = 0; !split; ++a) {
            if (a >= F.p) throw std::logic_error("poly_roots: splitting failed");
            Poly base{a, 1};  // x + a
            Poly h = poly_powmod(F, base, (F.p - 1) / 2, cur);
            h[0] = F.sub(h[0], 1);
            Poly g1 = poly_gcd(F, cur, h);
            if (g1.size() > 1 && g1.size() < cur.size()) {
                // cur / g1
                Poly q;
                Poly rem = cur;
                int qdeg = static_cast<int>(cur.size() - g1.size());
                q.assign(qdeg + 1, 0);
                for (int d = qdeg; d >= 0; --d) {
                    u_int64_t c = F.mul(rem[g1.size() - 1 + d], F.inv(g1.back()));
                    q[d] = c;
                    for (size_t i = 0; i < g1.size(); ++i)
                        rem[i + d] = F.sub(rem[i + d], F.mul(c, g1[i]));
                }
                stack.push_back(g1);
                stack.push_back(poly_trim(std::move(q)));
                split = true;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

using FpMat = std::vector<std::vector<u_int64_t>>;

// Characteristic polynomial via Newton's identities (p > dim required).
Poly char_poly(const Fp& F, const FpMat& M) {
    int d = static_cast<int>(M.size());
    std::vector<u_int64_t> power_traces(d + 1, 0);
    FpMat P(d, std::vector<u_int64_t>(d, 0));
    for (int i = 0; i < d; ++i) P[i][i] = 1;
    for (int k = 1; k <= d; ++k) {
        FpMat Q(d, std::vector<u_int64_t>(d, 0));
        for (int i = 0; i < d; ++i)
            for (int l = 0; l < d; ++l) {
                if (P[i][l] == 0) continue;
                for (int j = 0; j < d; ++j) Q[i][j] = F.add(Q[i][j], F.mul(P[i][l], M[l][j]));
            }
        P = std::move(Q);
        u_int64_t tr = 0;
        for (int i = 0; i < d; ++i) tr = F.add(tr, P[i][i]);
        power_traces[k] = tr;
    }
    // e_k = (1/k) sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
    std::vector<u_int64_t> e(d + 1, 0);
    e[0] = 1;
    for (int k = 1; k <= d; ++k) {
        u_int64_t acc = 0;
        for (int i = 1; i <= k; ++i) {
            u_int64_t term = F.mul(e[k - i], power_traces[i]);
            acc = (i % 2 == 1) ? F.add(acc, term) : F.sub(acc, term);
        }
        e[k] = F.mul(acc, F.inv(k % F.p));
    }
    // char poly = sum (-1)^k e_k x^{d-k}
    Poly f(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        u_int64_t c = e[k];
        if (k % 2 == 1) c = F.sub(0, c);
        f[d - k] = c;
    }
    return f;
}

// Kernel basis of M over F_p (columns of the returned list are basis vectors).
std::vector<std::vector<u_int64_t>> fp_kernel(const Fp& F, FpMat M) {
    int rows = static_cast<int>(M.size());
    int cols = rows ? static_cast<int>(M[0].size()) : 0;
    std::vector<int> pivot_of_col(cols, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (M[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(M[r], M[piv]);
        u_int64_t inv = F.inv(M[r][c]);
        for (int j = c; j < cols; ++j) M[r][j] = F.mul(M[r][j], inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            u_int64_t f = M[i][c];
            for (int j = c; j < cols; ++j) M[i][j] = F.sub(M[i][j], F.mul(f, M[r][j]));
        }
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<std::vector<u_int64_t>> basis;
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<u_int64_t> v(cols, 0);
        v[c] = 1;
        for (int c2 = 0; c2 < cols; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = F.sub(0, M[pivot_of_col[c2]][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_prime_u64(u_int64_t n) {
    if (n < 2) return false;
    for (u_int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

CharacterTable dixon_character_table(const FiniteGroupOps& G, const AbstractClasses& cls,
                                     const std::vector<std::string>& class_labels,
                                     const std::string& group_name) {
    const int n = G.order;
    const int k = static_cast<int>(cls.reps.size());

    // element order / exponent
    auto elem_order = [&](int e) {
        int o = 1, cur = e;
        while (cur != G.id) {
            cur = G.mul(cur, e);
            ++o;
        }
        return o;
    };
    i64 exponent = 1;
    for (int r : cls.reps) {
        i64 o = elem_order(r);
        exponent = exponent / gcd_ll(exponent, o) * o;
    }

    // Smallest prime p = 1 mod exponent with p > max(2 sqrt n, n); p coprime
    // to |G| is then automatic.
    u_int64_t p = 0;
    for (u_int64_t cand = exponent + 1;; cand += exponent) {
        if (cand <= static_cast<u_int64_t>(n)) continue;
        if (cand * cand <= static_cast<u_int64_t>(4) * n) continue;
        if (is_prime_u64(cand)) { p = cand; break; }
    }
    Fp F{p};

    std::vector<int> inv_class(k);
    for (int c = 0; c < k; ++c) inv_class[c] = cls.class_of[G.inv(cls.reps[c])];

    // Class-sum multiplication matrices A_i with (A_i)_{j,l} = a_{ij}^l.
    std::vector<FpMat> A(k, FpMat(k, std::vector<u_int64_t>(k, 0)));
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l) {
            int zl = cls.reps[l];
            for (int x : cls.members[i]) {
                int j = cls.class_of[G.mul(G.inv(x), zl)];
                A[i][j][l] = F.add(A[i][j][l], 1);
            }
        }

    // Simultaneous eigenvector computation by subspace splitting.
    struct Space {
        std::vector<std::vector<u_int64_t>> cols;  // basis vectors of length k
    };
    std::vector<Space> spaces;
    {
        Space whole;
        for (int i = 0; i < k; ++i) {
            std::vector<u_int64_t> e(k, 0);
            e[i] = 1;
            whole.cols.push_back(std::move(e));
        }
        spaces.push_back(std::move(whole));
    }
    for (int i = 0; i < k; ++i) {
        std::vector<Space> next;
        for (auto& S : spaces) {
            int d = static_cast<int>(S.cols.size());
            if (d == 1) {
                next.push_back(std::move(S));
                continue;
            }
            // R = matrix of A_i on the subspace: A_i * C = C * R.
            FpMat AC(k, std::vector<u_int64_t>(d, 0));
            for (int r = 0; r < k; ++r)
                for (int c2 = 0; c2 < k; ++c2) {
                    if (A[i][r][c2] == 0) continue;
                    for (int j = 0; j < d; ++j)
                        AC[r][j] = F.add(AC[r][j], F.mul(A[i][r][c2], S.cols[j][c2]));
                }
            // Solve C * R = AC column by column via row reduction of [C | AC].
            FpMat aug(k, std::vector<u_int64_t>(d + d, 0));
            for (int r = 0; r < k; ++r) {
                for (int j = 0; j < d; ++j) aug[r][j] = S.cols[j][r];
                for (int j = 0; j < d; ++j) aug[r][d + j] = AC[r][j];
            }
            // reduce
            int row = 0;
            std::vector<int> pivots;
            for (int c2 = 0; c2 < d && row < k; ++c2) {
                int piv = -1;
                for (int r = row; r < k; ++r)
                    if (aug[r][c2] != 0) { piv = r; break; }
                if (piv < 0) throw std::logic_error("dixon: dependent subspace basis");
                std::swap(aug[row], aug[piv]);
                u_int64_t inv = F.inv(aug[row][c2]);
                for (int j = c2; j < 2 * d; ++j) aug[row][j] = F.mul(aug[row][j], inv);
                for (int r = 0; r < k; ++r) {
                    if (r == row || aug[r][c2] == 0) continue;
                    u_int64_t f = aug[r][c2];
                    for (int j = c2; j < 2 * d; ++j) aug[r][j] = F.sub(aug[r][j], F.mul(f, aug[row][j]));
                }
                pivots.push_back(row);
                ++row;
            }
            FpMat R(d, std::vector<u_int64_t>(d, 0));
            for (int r2 = 0; r2 < d; ++r2)
                for (int j = 0; j < d; ++j) R[r2][j] = aug[pivots[r2]][d + j];

            Poly cp = char_poly(F, R);
            auto roots = poly_roots(F, cp);
            std::vector<u_int64_t> distinct;
            for (auto r2 : roots)
                if (distinct.empty() || distinct.back() != r2) distinct.push_back(r2);
            if (distinct.size() == 1) {
                next.push_back(std::move(S));
                continue;
            }
            for (auto lam : distinct) {
                FpMat RL = R;
                for (int t = 0; t < d; ++t) RL[t][t] = F.sub(RL[t][t], lam);
                auto ker = fp_kernel(F, RL);
                Space sub;
                for (const auto& kv : ker) {
                    std::vector<u_int64_t> vec(k, 0);
                    for (int j = 0; j < d; ++j)
                        for (int r2 = 0; r2 < k; ++r2)
                            vec[r2] = F.add(vec[r2], F.mul(kv[j], S.cols[j][r2]));
                    sub.cols.push_back(std::move(vec));
                }
                if (!sub.cols.empty()) next.push_back(std::move(sub));
            }
        }
        spaces = std::move(next);
        bool all_one = true;
        for (const auto& S : spaces)
            if (S.cols.size() > 1) all_one = false;
        if (all_one) break;
    }
    if (static_cast<int>(spaces.size()) != k)
        throw std::logic_error("dixon: eigenspace splitting failed");

    const int id_class = cls.class_of[G.id];
    CharacterTable T;
    T.group_name = group_name;
    T.group_order = n;
    T.class_labels = class_labels;
    for (int c = 0; c < k; ++c) T.class_sizes.push_back(Int(cls.members[c].size()));
    T.inverse_class = inv_class;
    T.identity_class = id_class;

    std::vector<std::vector<i64>> rows;
    for (auto& S : spaces) {
        std::vector<u_int64_t> w = S.cols[0];
        if (w[id_class] == 0) throw std::logic_error("dixon: eigenvector vanishes at identity");
        u_int64_t norm = F.inv(w[id_class]);
        for (auto& x : w) x = F.mul(x, norm);
        // degree: chi(1)^2 = n / sum_j w_j w_{j'} / |C_j|
        u_int64_t denom = 0;
        for (int j = 0; j < k; ++j) {
            u_int64_t term = F.mul(w[j], w[inv_class[j]]);
            term = F.mul(term, F.inv(cls.members[j].size() % p));
            denom = F.add(denom, term);
        }
        u_int64_t d2 = F.mul(n % p, F.inv(denom));
        i64 deg = -1;
        for (i64 d = 1; d * d <= n; ++d)
            if (F.mul(d % p, d % p) == d2) { deg = d; break; }
        if (deg < 0) throw validation_error("dixon: no integral degree (non-rational table?)");
        std::vector<i64> row(k);
        for (int j = 0; j < k; ++j) {
            u_int64_t v = F.mul(w[j], F.mul(deg % p, F.inv(cls.members[j].size() % p)));
            i64 lifted = static_cast<i64>(v);
            if (lifted > static_cast<i64>(p / 2)) lifted -= static_cast<i64>(p);
            if (lifted > deg || lifted < -deg)
                throw validation_error("dixon: lifted value out of range (non-rational table?)");
            row[j] = lifted;
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [&](const std::vector<i64>& a, const std::vector<i64>& b) {
        if (a[id_class] != b[id_class]) return a[id_class] < b[id_class];
        for (int j = 0; j < k; ++j)
            if (a[j] != b[j]) return a[j] > b[j];
        return false;
    });
    for (size_t i = 0; i < rows.size(); ++i) {
        T.irr_labels.push_back("chi" + std::to_string(i));
        T.values.push_back(std::move(rows[i]));
    }
    try {
        T.validate();
    } catch (const validation_error& e) {
        throw validation_error(std::string("dixon: lifted table failed certification (") + e.what() +
                               "); non-rational tables are unsupported");
    }
    return T;
}

// ---------------------------------------------------------------------------
// Dispatch and cache
// ---------------------------------------------------------------------------

namespace {

std::optional<std::string> g_cache_dir;

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s)
        out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out;
}

nlohmann::ordered_json table_to_json(const CharacterTable& T) {
    nlohmann::ordered_json j;
    j["format"] = "hkt-chartable";
    j["version"] = 1;
    j["group"] = T.group_name;
    j["order"] = T.group_order.str();
    j["class_labels"] = T.class_labels;
    std::vector<std::string> sizes;
    for (const auto& s : T.class_sizes) sizes.push_back(s.str());
    j["class_sizes"] = sizes;
    j["inverse_class"] = T.inverse_class;
    j["identity_class"] = T.identity_class;
    j["irr_labels"] = T.irr_labels;
    j["values"] = T.values;
    return j;
}

std::optional<CharacterTable> table_from_json(const nlohmann::json& j, const std::string& name) {
    if (!j.contains("format") || j["format"] != "hkt-chartable" || j["version"] != 1) return {};
    if (j["group"] != name) return {};
    CharacterTable T;
    T.group_name = name;
    T.group_order = Int(j["order"].get<std::string>());
    T.class_labels = j["class_labels"].get<std::vector<std::string>>();
    for (const auto& s : j["class_sizes"]) T.class_sizes.push_back(Int(s.get<std::string>()));
    T.inverse_class = j["inverse_class"].get<std::vector<int>>();
    T.identity_class = j["identity_class"].get<int>();
    T.irr_labels = j["irr_labels"].get<std::vector<std::string>>();
    T.values = j["values"].get<std::vector<std::vector<i64>>>();
    return T;
}

CharacterTable dixon_for_weyl(const WeylGroup& W) {
    const auto& els = W.elements(200000);
    std::unordered_map<GroupElement, int, GroupElementHash, GroupElementEq> index;
    for (size_t i = 0; i < els.size(); ++i) index.emplace(els[i], static_cast<int>(i));
    FiniteGroupOps ops;
    ops.order = static_cast<int>(els.size());
    ops.id = index.at(W.identity());
    ops.mul = [&els, &index](int a, int b) { return index.at(ge_mul(els[a], els[b])); };
    ops.inv = [&els, &index](int a) { return index.at(ge_inv(els[a])); };

    const auto& cls = W.classes();
    AbstractClasses ac;
    ac.class_of.assign(ops.order, -1);
    ac.reps.resize(cls.size());
    ac.members.resize(cls.size());
    for (size_t i = 0; i < els.size(); ++i) {
        int c = W.class_of(els[i]);
        ac.class_of[i] = c;
        ac.members[c].push_back(static_cast<int>(i));
    }
    std::vector<std::string> labels;
    for (size_t c = 0; c < cls.size(); ++c) {
        ac.reps[c] = index.at(cls[c].rep);
        labels.push_back(cls[c].label.to_string());
    }
    return dixon_character_table(ops, ac, labels, W.name());
}

}  // namespace

void set_cache_dir(const std::string& dir) {
    if (dir.empty()) g_cache_dir.reset();
    else g_cache_dir = dir;
}

std::optional<std::string> cache_dir() {
    if (g_cache_dir) return g_cache_dir;
    if (const char* env = std::getenv("HKT_CACHE_DIR")) return std::string(env);
    return {};
}

CharacterTable character_table(const WeylGroup& W) {
    auto dir = cache_dir();
    std::string path;
    if (dir) {
        path = *dir + "/table_v1_" + sanitize(W.name()) + ".json";
        std::ifstream in(path);
        if (in.good()) {
            try {
                nlohmann::json j = nlohmann::json::parse(in);
                auto t = table_from_json(j, W.name());
                if (t) {
                    t->validate();
                    return *t;
                }
            } catch (...) {
                // unreadable cache entries are ignored and rebuilt
            }
        }
    }

    CharacterTable T;
    switch (W.kind()) {
        case WeylKind::A: T = table_a(W); break;
        case WeylKind::B: T = table_b(W); break;
        case WeylKind::D: T = table_d(W); break;
        case WeylKind::Product: T = table_product(W); break;
        case WeylKind::G2:
        case WeylKind::AlmostD: T = dixon_for_weyl(W); break;
    }
    T.validate();

    if (dir) {
        std::error_code ec;
        std::filesystem::create_directories(*dir, ec);
        std::string tmp = path + ".tmp" + std::to_string(::getpid());
        std::ofstream out(tmp);
        if (out.good()) {
            out << table_to_json(T).dump(1) << "\n";
            out.close();
            std::filesystem::rename(tmp, path, ec);
            if (ec) std::filesystem::remove(tmp, ec);
        }
    }
    return T;
}

// ---------------------------------------------------------------------------
// Class function operations
// ---------------------------------------------------------------------------

ClassFunction induce(const CharacterTable& W, const CharacterTable& H,
                     const std::vector<int>& fusion, const ClassFunction& f) {
    if (f.group_name != H.group_name)
        throw std::invalid_argument("induce: class function is not on the subgroup");
    ClassFunction out;
    out.group_name = W.group_name;
    out.values.assign(W.num_classes(), 0);
    std::vector<Int> acc(W.num_classes(), 0);
    for (int d = 0; d < H.num_classes(); ++d) acc[fusion[d]] += H.class_sizes[d] * f.values[d];
    for (int c = 0; c < W.num_classes(); ++c)
        out.values[c] = exact_div(W.group_order * acc[c], H.group_order * W.class_sizes[c]);
    return out;
}

ClassFunction restrict_cf(const CharacterTable& H, const std::vector<int>& fusion,
                          const ClassFunction& f, const CharacterTable& W) {
    if (f.group_name != W.group_name)
        throw std::invalid_argument("restrict: class function is not on the big group");
    ClassFunction out;
    out.group_name = H.group_name;
    for (int d = 0; d < H.num_classes(); ++d) out.values.push_back(f.values[fusion[d]]);
    return out;
}

Rat inner_product(const CharacterTable& T, const ClassFunction& f, const ClassFunction& g) {
    if (f.group_name != T.group_name || g.group_name != T.group_name)
        throw std::invalid_argument("inner_product: group mismatch");
    Int acc = 0;
    for (int c = 0; c < T.num_classes(); ++c)
        acc += T.class_sizes[c] * f.values[c] * g.values[T.inverse_class[c]];
    return Rat(acc) / Rat(T.group_order);
}

std::vector<Int> decompose(const CharacterTable& T, const ClassFunction& f) {
    std::vector<Int> mult;
    for (size_t i = 0; i < T.values.size(); ++i) {
        Int acc = 0;
        for (int c = 0; c < T.num_classes(); ++c)
            acc += T.class_sizes[c] * f.values[c] * Int(T.values[i][T.inverse_class[c]]);
        mult.push_back(exact_div(acc, T.group_order));
    }
    return mult;
}

ClassFunction row_function(const CharacterTable& T, int row) {
    ClassFunction f;
    f.group_name = T.group_name;
    for (int c = 0; c < T.num_classes(); ++c) f.values.push_back(T.values[row][c]);
    return f;
}

// ---------------------------------------------------------------------------
// Parabolic character data
// ---------------------------------------------------------------------------

SubgroupCharData parabolic_char_data(const WeylGroup& W, const ParabolicSubgroup& P) {
    SubgroupCharData out;
    out.classes = subgroup_classes(P.elements, P.generators);
    const int k = static_cast<int>(out.classes.reps.size());

    if (P.order == 1) {
        out.table.group_name = W.name() + ":" + P.label;
        out.table.group_order = 1;
        out.table.class_labels = {"e"};
        out.table.class_sizes = {1};
        out.table.inverse_class = {0};
        out.table.irr_labels = {"triv"};
        out.table.values = {{1}};
    } else if (!P.blocks.empty() && !P.generic) {
        // Direct product of catalog groups on disjoint coordinate blocks.
        std::vector<WeylGroupPtr> bgroups;
        for (const auto& b : P.blocks) {
            switch (b.kind) {
                case WeylKind::A: bgroups.push_back(WeylGroup::symmetric(b.n)); break;
                case WeylKind::B: bgroups.push_back(WeylGroup::type_b(b.n)); break;
                case WeylKind::D: bgroups.push_back(WeylGroup::type_d(b.n)); break;
                default: throw std::logic_error("parabolic_char_data: bad block kind");
            }
        }
        Int prod = 1;
        for (const auto& g : bgroups) prod *= g->order();
        if (prod != P.order) throw std::logic_error("parabolic_char_data: block order mismatch");
        std::vector<CharacterTable> btables;
        for (const auto& g : bgroups) btables.push_back(character_table(*g));
        std::vector<int> radix;
        for (const auto& t : btables) radix.push_back(t.num_classes());
        int total = 1;
        for (int r : radix) total *= r;
        if (total != k) throw std::logic_error("parabolic_char_data: class count mismatch");
        auto decode = [&](int idx) {
            std::vector<int> digits(radix.size());
            for (int d = static_cast<int>(radix.size()) - 1; d >= 0; --d) {
                digits[d] = idx % radix[d];
                idx /= radix[d];
            }
            return digits;
        };
        // Locate each abstract product class among the enumerated classes.
        std::vector<int> abstract_to_enum(total, -1);
        std::vector<char> hit(k, 0);
        const int n = W.ncoords();
        for (int t = 0; t < total; ++t) {
            auto dig = decode(t);
            std::vector<int> img(n), sgn(n, 1);
            for (int i = 0; i < n; ++i) img[i] = i;
            for (size_t bi = 0; bi < P.blocks.size(); ++bi) {
                const auto& rep = std::get<SignedPermutation>(
                    bgroups[bi]->classes()[dig[bi]].rep);
                for (int i = 0; i < rep.n(); ++i) {
                    img[P.blocks[bi].offset + i] = P.blocks[bi].offset + rep.img()[i];
                    sgn[P.blocks[bi].offset + i] = rep.sgn()[i];
                }
            }
            GroupElement embedded = SignedPermutation(std::move(img), std::move(sgn));
            auto it = out.classes.elem_class.find(embedded);
            if (it == out.classes.elem_class.end())
                throw std::logic_error("parabolic_char_data: embedded representative not found");
            if (hit[it->second]) throw std::logic_error("parabolic_char_data: class collision");
            hit[it->second] = 1;
            abstract_to_enum[t] = it->second;
        }
        CharacterTable T;
        T.group_name = W.name() + ":" + P.label;
        T.group_order = P.order;
        T.class_labels.assign(k, "");
        T.class_sizes.assign(k, 0);
        T.inverse_class.assign(k, 0);
        for (int t = 0; t < total; ++t) {
            auto dig = decode(t);
            int e = abstract_to_enum[t];
            std::string lab;
            Int size = 1;
            for (size_t bi = 0; bi < btables.size(); ++bi) {
                lab += (bi ? ";" : "") + btables[bi].class_labels[dig[bi]];
                size *= btables[bi].class_sizes[dig[bi]];
            }
            T.class_labels[e] = lab;
            T.class_sizes[e] = size;
            T.inverse_class[e] = e;  // classical classes are self-inverse classwise
        }
        T.identity_class = out.classes.elem_class.at(P.elements[0]);
        int rows = 1;
        for (const auto& t : btables) rows *= static_cast<int>(t.values.size());
        auto decode_r = [&](int idx) {
            std::vector<int> digits(btables.size());
            for (int d = static_cast<int>(btables.size()) - 1; d >= 0; --d) {
                int r = static_cast<int>(btables[d].values.size());
                digits[d] = idx % r;
                idx /= r;
            }
            return digits;
        };
        for (int row = 0; row < rows; ++row) {
            auto rdig = decode_r(row);
            std::vector<i64> vals(k, 0);
            std::string lab;
            for (size_t bi = 0; bi < btables.size(); ++bi)
                lab += (bi ? "x" : "") + btables[bi].irr_labels[rdig[bi]];
            for (int t = 0; t < total; ++t) {
                auto cdig = decode(t);
                i64 v = 1;
                for (size_t bi = 0; bi < btables.size(); ++bi)
                    v *= btables[bi].values[rdig[bi]][cdig[bi]];
                vals[abstract_to_enum[t]] = v;
            }
            T.irr_labels.push_back(lab);
            T.values.push_back(std::move(vals));
        }
        // Make the trivial character the first row.
        for (size_t i = 0; i < T.values.size(); ++i) {
            bool triv = true;
            for (i64 v : T.values[i])
                if (v != 1) { triv = false; break; }
            if (triv && i != 0) {
                std::swap(T.values[0], T.values[i]);
                std::swap(T.irr_labels[0], T.irr_labels[i]);
                break;
            }
        }
        T.validate();
        out.table = std::move(T);
    } else {
        // Generic subgroup: exact Dixon-Schneider on the enumerated elements.
        const auto& els = P.elements;
        std::unordered_map<GroupElement, int, GroupElementHash, GroupElementEq> index;
        for (size_t i = 0; i < els.size(); ++i) index.emplace(els[i], static_cast<int>(i));
        FiniteGroupOps ops;
        ops.order = static_cast<int>(els.size());
        ops.id = index.at(els[0]);
        ops.mul = [&els, &index](int a, int b) { return index.at(ge_mul(els[a], els[b])); };
        ops.inv = [&els, &index](int a) { return index.at(ge_inv(els[a])); };
        AbstractClasses ac;
        ac.class_of.assign(ops.order, -1);
        ac.reps.resize(k);
        ac.members.resize(k);
        std::vector<std::string> labels(k);
        for (size_t i = 0; i < els.size(); ++i) {
            int c = out.classes.elem_class.at(els[i]);
            ac.class_of[i] = c;
            ac.members[c].push_back(static_cast<int>(i));
        }
        for (int c = 0; c < k; ++c) {
            ac.reps[c] = index.at(out.classes.reps[c]);
            labels[c] = "c" + std::to_string(c);
        }
        out.table = dixon_character_table(ops, ac, labels, W.name() + ":" + P.label);
    }
    out.fusion = class_fusion(W, out.classes);
    return out;
}

}  // namespace hkt
