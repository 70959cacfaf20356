#include "doctest.h"
#include "hkt/rootdata.hpp"

using namespace hkt;

namespace {

// Coxeter relations of the generators, checked on the X-action matrices.
void check_relations(const RootDatum& R) {
    const auto& gens = R.weyl()->generators();
    const int r = R.xrank();
    IntMatrix id = IntMatrix::identity(r);
    for (const auto& g : gens) {
        IntMatrix M = R.action(g);
        CHECK(M * M == id);
        CHECK((M.det() == 1 || M.det() == -1));
    }
    // products have finite order dividing 12 in the catalog kinds
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j) {
            IntMatrix M = R.action(ge_mul(gens[i], gens[j]));
            IntMatrix P = id;
            bool ok = false;
            for (int e = 1; e <= 12; ++e) {
                P = P * M;
                if (P == id) {
                    ok = true;
                    break;
                }
            }
            CHECK(ok);
        }
}

}  // namespace

TEST_CASE("catalog data basic shapes") {
    CHECK(RootDatum::catalog(RootDatumKind::GL, {3}).xrank() == 3);
    CHECK(RootDatum::catalog(RootDatumKind::SL, {3}).xrank() == 2);
    CHECK(RootDatum::catalog(RootDatumKind::PGL, {3}).xrank() == 2);
    CHECK(RootDatum::catalog(RootDatumKind::SOodd, {3}).xrank() == 3);
    CHECK(RootDatum::catalog(RootDatumKind::Sp, {3}).xrank() == 3);
    CHECK(RootDatum::catalog(RootDatumKind::SOeven, {3}).xrank() == 3);
    CHECK(RootDatum::catalog(RootDatumKind::G2, {}).xrank() == 2);
    CHECK(RootDatum::catalog(RootDatumKind::SOeven, {2}).reducible_special());
    CHECK(!RootDatum::catalog(RootDatumKind::SOeven, {3}).reducible_special());
    CHECK_THROWS_AS(catalog_root_datum("Unknown", {2}), std::invalid_argument);

    for (auto kind : {RootDatumKind::GL, RootDatumKind::SL, RootDatumKind::PGL,
                      RootDatumKind::SOodd, RootDatumKind::Sp, RootDatumKind::SOeven})
        for (int n = 1; n <= 4; ++n) check_relations(RootDatum::catalog(kind, {n}));
    check_relations(RootDatum::catalog(RootDatumKind::G2, {}));
    check_relations(RootDatum::catalog(RootDatumKind::AlmostD, {2, 1}));
}

TEST_CASE("GL_2 swap matrix") {
    RootDatum R = RootDatum::catalog(RootDatumKind::GL, {2});
    IntMatrix M = R.action(R.weyl()->generators()[0]);
    CHECK(M == IntMatrix::from_rows_i64({{0, 1}, {1, 0}}));
}

TEST_CASE("PGL_2: X = Q with s acting by -1") {
    RootDatum R = RootDatum::catalog(RootDatumKind::PGL, {2});
    REQUIRE(R.xrank() == 1);
    IntMatrix M = R.action(R.weyl()->generators()[0]);
    CHECK(M.at(0, 0) == -1);
}

TEST_CASE("G2 matrices stabilize the printed root list") {
    RootDatum R = RootDatum::catalog(RootDatumKind::G2, {});
    std::set<std::pair<i64, i64>> roots{{1, 0},  {0, 1},  {1, 1},  {2, 1},  {3, 1},  {3, 2},
                                        {-1, 0}, {0, -1}, {-1, -1}, {-2, -1}, {-3, -1}, {-3, -2}};
    for (const auto& g : R.weyl()->elements()) {
        IntMatrix M = R.action(g);
        for (const auto& [x, y] : roots) {
            i64 ix = to_i64(M.at(0, 0) * x + M.at(0, 1) * y);
            i64 iy = to_i64(M.at(1, 0) * x + M.at(1, 1) * y);
            CHECK(roots.count({ix, iy}) == 1);
        }
    }
}

TEST_CASE("fixed torus data") {
    // (GL_2, swap): rank 1, no torsion
    RootDatum GL2 = RootDatum::catalog(RootDatumKind::GL, {2});
    auto F = fixed_torus(GL2, GL2.weyl()->generators()[0]);
    CHECK(F.fixed_rank == 1);
    CHECK(F.torsion.empty());
    CHECK(F.component_count == 1);

    // (PGL_2, s): rank 0, torsion Z/2
    RootDatum PGL2 = RootDatum::catalog(RootDatumKind::PGL, {2});
    auto F2 = fixed_torus(PGL2, PGL2.weyl()->generators()[0]);
    CHECK(F2.fixed_rank == 0);
    CHECK(F2.torsion == std::vector<Int>{2});
    CHECK(F2.component_count == 2);

    // identity: full rank, trivial torsion
    auto F3 = fixed_torus(GL2, GL2.weyl()->identity());
    CHECK(F3.fixed_rank == 2);
    CHECK(F3.torsion.empty());
}

TEST_CASE("GL/SL fixed tori across classes") {
    // GL_n: rank = number of parts, trivial torsion
    for (int n = 2; n <= 5; ++n) {
        RootDatum R = RootDatum::catalog(RootDatumKind::GL, {n});
        for (const auto& c : R.weyl()->classes()) {
            auto F = fixed_torus(R, c.rep);
            CHECK(F.fixed_rank == c.label.mu.length());
            CHECK(F.torsion.empty());
        }
    }
    // SL_n: torsion order = gcd(mu)
    for (int n = 2; n <= 5; ++n) {
        RootDatum R = RootDatum::catalog(RootDatumKind::SL, {n});
        for (const auto& c : R.weyl()->classes()) {
            auto F = fixed_torus(R, c.rep);
            CHECK(F.component_count == c.label.mu.gcd());
            CHECK(F.fixed_rank == c.label.mu.length() - 1);
        }
    }
}

TEST_CASE("ellipticity matches the determinant criterion on the root span") {
    for (auto kind : {RootDatumKind::SOodd, RootDatumKind::SOeven})
        for (int n = 2; n <= 4; ++n) {
            RootDatum R = RootDatum::catalog(kind, {n});
            for (const auto& g : R.weyl()->elements()) {
                IntMatrix A = R.action(g) - IntMatrix::identity(R.xrank());
                bool det_nonzero = (A.rank() == R.xrank());
                CHECK(det_nonzero == R.weyl()->is_elliptic(g));
            }
        }
}

TEST_CASE("action on the quotient") {
    RootDatum GL2 = RootDatum::catalog(RootDatumKind::GL, {2});
    GroupElement w = GL2.weyl()->generators()[0];
    // z = w acts as the identity on X/(w-1)X
    auto qa = action_on_quotient(GL2, w, w);
    REQUIRE(qa.free_part.rows() == 1);
    CHECK(qa.free_part.at(0, 0) == 1);
    CHECK(qa.torsion_moduli.empty());

    RootDatum PGL2 = RootDatum::catalog(RootDatumKind::PGL, {2});
    GroupElement s = PGL2.weyl()->generators()[0];
    auto qa2 = action_on_quotient(PGL2, s, s);
    REQUIRE(qa2.torsion_moduli == std::vector<Int>{2});
    CHECK(qa2.torsion_part.at(0, 0) == 1);  // -1 = 1 mod 2

    // non-commuting pair is rejected
    RootDatum B2 = RootDatum::catalog(RootDatumKind::SOodd, {2});
    auto gens = B2.weyl()->generators();
    CHECK_THROWS_AS(action_on_quotient(B2, gens[0], gens[1]), std::invalid_argument);
}

TEST_CASE("product data") {
    RootDatum GL1 = RootDatum::catalog(RootDatumKind::GL, {1});
    RootDatum P = RootDatum::product(GL1, GL1);
    CHECK(P.xrank() == 2);
    CHECK(P.weyl()->order() == 1);

    RootDatum SL2 = RootDatum::catalog(RootDatumKind::SL, {2});
    RootDatum Q = RootDatum::product(SL2, SL2);
    CHECK(Q.xrank() == 2);
    CHECK(Q.weyl()->order() == 4);
    // block action: each generator acts by -1 on its own coordinate
    for (const auto& g : Q.weyl()->generators()) {
        IntMatrix M = Q.action(g);
        CHECK(M.det() == -1);
    }
}
