#include "hkt/extquot.hpp"

namespace hkt {

namespace {

// Elementary symmetric functions of the eigenvalues (traces of exterior
// powers) from exact Newton identities on power traces.
std::vector<Int> exterior_traces(const IntMatrix& M) {
    const int f = M.rows();
    std::vector<Int> p(f + 1, 0);
    IntMatrix P = IntMatrix::identity(f);
    for (int k = 1; k <= f; ++k) {
        P = P * M;
        Int tr = 0;
        for (int i = 0; i < f; ++i) tr += P.at(i, i);
        p[k] = tr;
    }
    std::vector<Int> e(f + 1, 0);
    e[0] = 1;
    for (int k = 1; k <= f; ++k) {
        Int acc = 0;
        for (int i = 1; i <= k; ++i) {
            Int term = e[k - i] * p[i];
            acc += (i % 2 == 1) ? term : -term;
        }
        e[k] = exact_div(acc, Int(k));
    }
    return e;
}

constexpr size_t kTorsionEnumBound = 100000;

}  // namespace

ExtQuotResult extended_quotient_components(const RootDatum& R) {
    ExtQuotResult out;
    const WeylGroup& W = *R.weyl();
    const int xr = R.xrank();
    std::vector<Int> global(xr + 1, 0);

    for (const auto& cls : W.classes()) {
        FixedTorusData F = fixed_torus(R, cls.rep);
        Centralizer Z = W.centralizer(cls.rep);
        const Int zorder = Z.order;

        std::vector<int> tors_idx;
        std::vector<i64> moduli;
        Int tcount = 1;
        for (int i = 0; i < xr; ++i)
            if (F.divisors[i] > 1) {
                tors_idx.push_back(i);
                moduli.push_back(to_i64(F.divisors[i]));
                tcount *= F.divisors[i];
            }
        if (tcount > Int(static_cast<unsigned long long>(kTorsionEnumBound)))
            throw capacity_error("extended_quotient: torsion group too large to enumerate");
        const int nt = static_cast<int>(tors_idx.size());
        const int f = F.fixed_rank;

        // All torsion vectors, mixed radix.
        int tcount_i = static_cast<int>(to_i64(tcount));
        auto decode = [&](int idx, std::vector<i64>& v) {
            for (int d = nt - 1; d >= 0; --d) {
                v[d] = idx % moduli[d];
                idx /= static_cast<int>(moduli[d]);
            }
        };

        IntMatrix Uinv = solve_exact(F.U, IntMatrix::identity(xr));
        std::vector<Int> S(f + 1, 0);
        Int fix_total = 0, euler_acc = 0;

        for (const auto& z : Z.elements) {
            IntMatrix Mz = R.action(z);
            // Component-preserving elements act on the cohomology of a
            // component through their linear part only; translations between
            // components enter via the fixed-point count below.
            // fixed points on the torsion part of X/(w-1)X
            IntMatrix N = F.U * Mz * Uinv;
            std::vector<std::vector<i64>> tb(nt, std::vector<i64>(nt));
            for (int i = 0; i < nt; ++i)
                for (int j = 0; j < nt; ++j) {
                    Int v = N.at(tors_idx[i], tors_idx[j]) % F.divisors[tors_idx[i]];
                    if (v < 0) v += F.divisors[tors_idx[i]];
                    tb[i][j] = to_i64(v);
                }
            i64 fix = 0;
            std::vector<i64> v(nt);
            for (int idx = 0; idx < tcount_i; ++idx) {
                decode(idx, v);
                bool fixed = true;
                for (int i = 0; i < nt && fixed; ++i) {
                    i64 acc = 0;
                    for (int j = 0; j < nt; ++j) acc += tb[i][j] * v[j];
                    if ((acc - v[i]) % moduli[i] != 0) fixed = false;
                }
                if (fixed) ++fix;
            }
            fix_total += fix;

            // action on ker(w-1) tensor Q
            std::vector<Int> e;
            if (f > 0) {
                IntMatrix Rz = solve_exact(F.h1_lattice, Mz * F.h1_lattice);
                e = exterior_traces(Rz);
            } else {
                e = {Int(1)};
            }
            Int det_part = 0;
            for (int j = 0; j <= f; ++j) {
                S[j] += Int(fix) * e[j];
                det_part += (j % 2 == 0) ? e[j] : -e[j];
            }
            euler_acc += Int(fix) * det_part;
        }

        StratumSummary st;
        st.class_label = cls.label.to_string();
        st.component_count = tcount;
        st.component_orbits = exact_div(fix_total, zorder);
        st.fixed_rank = f;
        Int euler_check = 0;
        for (int j = 0; j <= f; ++j) {
            Int dim = S[j] / zorder;
            if (dim * zorder != S[j])
                throw std::logic_error("extended_quotient: non-integral averaged dimension "
                                       "(implementation bug)");
            if (dim < 0) throw std::logic_error("extended_quotient: negative dimension");
            st.poincare.push_back(dim);
            global[j] += dim;
            euler_check += (j % 2 == 0) ? dim : -dim;
        }
        if (euler_check != exact_div(euler_acc, zorder))
            throw std::logic_error("extended_quotient: Euler characteristic cross-check failed");
        out.strata.push_back(std::move(st));
    }

    out.profile.dims = global;
    for (int j = 0; j <= xr; ++j) {
        out.profile.total += global[j];
        if (j % 2 == 0) out.profile.even_total += global[j];
        else out.profile.odd_total += global[j];
    }
    return out;
}

PoincareProfile equivariant_poincare(const RootDatum& R) {
    return extended_quotient_components(R).profile;
}

CompareReport compare_with_closed_form(const RootDatum& R) {
    CompareReport rep;
    if (R.kind() == RootDatumKind::AlmostD || R.kind() == RootDatumKind::ProductDatum)
        throw std::invalid_argument("compare_with_closed_form: unsupported datum type " +
                                    R.name());
    rep.closed_form = ktheory_ranks(R.kind(), R.n()[0]);
    rep.oracle = equivariant_poincare(R);
    rep.pass = (rep.closed_form.k0 == rep.oracle.even_total) &&
               (rep.closed_form.k1 == rep.oracle.odd_total);
    return rep;
}

}  // namespace hkt
