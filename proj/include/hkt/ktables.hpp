#pragma once

#include "hkt/partitions.hpp"
#include "hkt/rootdata.hpp"

namespace hkt {

struct KRanks {
    Int k0 = 0, k1 = 0;
    bool torsion_free = true;
    bool special_flag = false;  // reducible / low-rank special case

    Int total() const { return k0 + k1; }
};

// Closed-form K-theory ranks of C_r^*(R, q) for the catalog root data.
KRanks ktheory_ranks(RootDatumKind kind, int n);
KRanks ktheory_ranks(const std::string& kind, int n);

// Rank contribution of the summand attached to the partition mu for PGL_n:
// evaluates both the phi-function sum over divisors of gcd(mu^dual) and the
// closed form gcd(mu^dual) 2^{b(mu^dual)-1}; hard-fails unless they agree.
Int pgl_sheaf_ranks(const Partition& mu);

// Kunneth rule for torsion-free factors.
KRanks kunneth_product(const KRanks& a, const KRanks& b);

}  // namespace hkt
