#pragma once

#include "hkt/ktables.hpp"
#include "hkt/rootdata.hpp"

namespace hkt {

// One stratum T^w / Z_W(w) of the extended quotient.
struct StratumSummary {
    std::string class_label;
    Int component_count = 1;   // |pi_0(T^w)| = torsion order of X/(w-1)X
    Int component_orbits = 1;  // components of the stratum after the quotient
    int fixed_rank = 0;
    std::vector<Int> poincare;  // dim H^j(T^w/Z(w); Q), j = 0..fixed_rank
};

struct PoincareProfile {
    std::vector<Int> dims;
    Int total = 0, even_total = 0, odd_total = 0;
};

struct ExtQuotResult {
    std::vector<StratumSummary> strata;
    PoincareProfile profile;
};

// Rational cohomology of the extended quotient by Burnside averaging over
// centralizers: exact, integral by construction (hard failure otherwise).
ExtQuotResult extended_quotient_components(const RootDatum& R);

PoincareProfile equivariant_poincare(const RootDatum& R);

struct CompareReport {
    KRanks closed_form;
    PoincareProfile oracle;
    bool pass = false;
};

// Referee the closed-form ranks against the oracle's even/odd totals.
CompareReport compare_with_closed_form(const RootDatum& R);

}  // namespace hkt
