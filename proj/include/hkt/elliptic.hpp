#pragma once

#include "hkt/chars.hpp"
#include "hkt/intmat.hpp"
#include "hkt/weyl.hpp"

namespace hkt {

// R_Z(W) modulo the span of all characters induced from proper standard
// parabolic subgroups, computed by integer Smith normal form.
struct EllipticReport {
    std::string group;
    int irr_count = 0;
    int column_count = 0;
    int rank = 0;
    std::vector<Int> torsion_invariants;
    int elliptic_class_count = 0;
};

// Columns: decompositions into Irr(W) of ind_{W_P}^W(chi) for every
// irreducible chi of every proper standard parabolic P, one P per association
// class.
IntMatrix induction_matrix(const WeylGroup& W);

EllipticReport elliptic_quotient(const WeylGroup& W);

// Bala-Carter datum for a unipotent class of SO_{2n+1}: a pair (alpha, beta)
// with 2|alpha| + |beta| = 2n + 1, beta with odd, pairwise distinct parts.
struct UnipotentClassBC {
    Partition alpha;
    Partition beta;
    int n = 0;
};

std::vector<UnipotentClassBC> unipotent_classes_so_odd(int n);

struct ComponentGroupRank {
    bool vanishes = false;
    Int elliptic_rank = 0;
};

// Elliptic rank of the component group attached to a Bala-Carter class:
// zero when alpha has an even term, a repeated odd term, or an odd term
// shared with beta; otherwise 2^{len(beta)-1} (1 for empty beta).
ComponentGroupRank component_group_rank(const UnipotentClassBC& c);

// Diagnostic: sum of the per-class elliptic ranks over all classes of
// SO_{2n+1} (reported, not asserted against any closed form).
Int component_group_rank_sum(int n);

}  // namespace hkt
