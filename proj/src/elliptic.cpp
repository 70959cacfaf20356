#include "hkt/elliptic.hpp"

namespace hkt {

IntMatrix induction_matrix(const WeylGroup& W) {
    CharacterTable TW = character_table(W);
    const int k = TW.num_classes();
    std::vector<std::vector<Int>> columns;
    for (const auto& P : W.standard_parabolics()) {
        if (P.is_whole) continue;
        SubgroupCharData D = parabolic_char_data(W, P);
        for (size_t r = 0; r < D.table.values.size(); ++r) {
            ClassFunction ind = induce(TW, D.table, D.fusion, row_function(D.table, r));
            columns.push_back(decompose(TW, ind));
        }
    }
    IntMatrix M(k, static_cast<int>(columns.size()));
    for (size_t j = 0; j < columns.size(); ++j)
        for (int i = 0; i < k; ++i) {
            if (columns[j][i] < 0)
                throw std::logic_error("induction_matrix: negative multiplicity");
            M.at(i, static_cast<int>(j)) = columns[j][i];
        }
    return M;
}

EllipticReport elliptic_quotient(const WeylGroup& W) {
    EllipticReport rep;
    rep.group = W.name();
    IntMatrix M = induction_matrix(W);
    rep.irr_count = M.rows();
    rep.column_count = M.cols();
    SmithForm snf = smith_normal_form(M);
    rep.rank = M.rows() - snf.rank;
    rep.torsion_invariants = snf.torsion();
    rep.elliptic_class_count = W.elliptic_class_count();
    return rep;
}

std::vector<UnipotentClassBC> unipotent_classes_so_odd(int n) {
    if (n < 1) throw std::invalid_argument("unipotent_classes_so_odd: n >= 1 required");
    std::vector<UnipotentClassBC> out;
    // 2|alpha| + |beta| = 2n + 1, beta odd and distinct.
    for (int a = 0; 2 * a <= 2 * n + 1; ++a) {
        int bw = 2 * n + 1 - 2 * a;
        for (const auto& beta : enum_partitions(bw)) {
            bool ok = true;
            const auto& p = beta.parts();
            for (size_t i = 0; i < p.size() && ok; ++i) {
                if (p[i] % 2 == 0) ok = false;
                if (i + 1 < p.size() && p[i + 1] == p[i]) ok = false;
            }
            if (!ok) continue;
            for (const auto& alpha : enum_partitions(a)) out.push_back({alpha, beta, n});
        }
    }
    return out;
}

ComponentGroupRank component_group_rank(const UnipotentClassBC& c) {
    ComponentGroupRank out;
    const auto& a = c.alpha.parts();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] % 2 == 0) out.vanishes = true;                       // even term
        if (i + 1 < a.size() && a[i + 1] == a[i] && a[i] % 2 == 1)    // repeated odd term
            out.vanishes = true;
        if (a[i] % 2 == 1 && c.beta.multiplicity(a[i]) > 0)           // odd term shared with beta
            out.vanishes = true;
    }
    if (out.vanishes) {
        out.elliptic_rank = 0;
        return out;
    }
    int len = c.beta.length();
    out.elliptic_rank = len == 0 ? Int(1) : (Int(1) << (len - 1));
    return out;
}

Int component_group_rank_sum(int n) {
    Int total = 0;
    for (const auto& c : unipotent_classes_so_odd(n)) total += component_group_rank(c).elliptic_rank;
    return total;
}

}  // namespace hkt
