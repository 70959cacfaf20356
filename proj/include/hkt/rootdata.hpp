#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hkt/intmat.hpp"
#include "hkt/weyl.hpp"

namespace hkt {

enum class RootDatumKind { GL, SL, PGL, SOodd, Sp, SOeven, G2, AlmostD, ProductDatum };

std::string datum_kind_name(RootDatumKind k);
RootDatumKind parse_datum_kind(const std::string& s);

// A based root datum from the catalog: the character lattice X realized as
// Z^xrank with explicit integer matrices for the Weyl action. Quotient
// lattices (SL) and sublattices (PGL, Sp) are rebased once to a canonical
// Z-basis; thereafter every computation is plain integer linear algebra.
class RootDatum {
   public:
    RootDatumKind kind() const { return kind_; }
    const std::vector<int>& n() const { return n_; }
    std::string name() const;
    int xrank() const { return xrank_; }
    const WeylGroupPtr& weyl() const { return weyl_; }
    bool reducible_special() const { return reducible_special_; }

    // Matrix of w on the chosen basis of X.
    IntMatrix action(const GroupElement& w) const;

    static RootDatum catalog(RootDatumKind kind, const std::vector<int>& n);
    static RootDatum product(const RootDatum& a, const RootDatum& b);

   private:
    RootDatumKind kind_ = RootDatumKind::GL;
    std::vector<int> n_;
    int xrank_ = 0;
    WeylGroupPtr weyl_;
    bool reducible_special_ = false;

    enum class Mode { Full, Sub, Quot, Product } mode_ = Mode::Full;
    IntMatrix sub_basis_;   // ncoords x xrank, columns span X inside Z^ncoords
    IntMatrix quot_U_;      // unimodular; quotient coordinates are (Ux)_{2..n}
    std::vector<std::shared_ptr<RootDatum>> factors_;
    std::vector<int> factor_coord_offset_;
};

RootDatum catalog_root_datum(const std::string& kind, const std::vector<int>& n);

// Fixed-point structure of T_un under w: rank and component group of T^w from
// the Smith normal form of (w - 1) on X.
struct FixedTorusData {
    int fixed_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1 of X/(w-1)X
    Int component_count = 1;   // = product of the torsion invariants
    IntMatrix h1_lattice;      // columns: integral basis of ker(w-1) (saturated)
    IntMatrix U;               // row transform of the SNF (quotient coordinates)
    std::vector<Int> divisors; // full elementary divisor list
};

FixedTorusData fixed_torus(const RootDatum& R, const GroupElement& w);

// Induced action of z in Z_W(w) on X/(w-1)X: a matrix on the free quotient and
// an integer matrix on the torsion coordinates (entries modulo the moduli).
struct QuotientAction {
    IntMatrix free_part;
    IntMatrix torsion_part;
    std::vector<Int> torsion_moduli;
};

QuotientAction action_on_quotient(const RootDatum& R, const GroupElement& w,
                                  const GroupElement& z);

}  // namespace hkt
