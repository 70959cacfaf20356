#include "doctest.h"
#include "hkt/extquot.hpp"

using namespace hkt;

TEST_CASE("hand-checked profiles") {
    // GL_2: dims (2,2,0)
    auto GL2 = equivariant_poincare(RootDatum::catalog(RootDatumKind::GL, {2}));
    CHECK(GL2.dims == std::vector<Int>{2, 2, 0});
    CHECK(GL2.total == 4);

    // PGL_2: dims (3,0)
    auto PGL2 = equivariant_poincare(RootDatum::catalog(RootDatumKind::PGL, {2}));
    CHECK(PGL2.dims == std::vector<Int>{3, 0});

    // SO_3 = B_1: dims (3,0)
    auto SO3 = equivariant_poincare(RootDatum::catalog(RootDatumKind::SOodd, {1}));
    CHECK(SO3.dims == std::vector<Int>{3, 0});

    // GL_1: a circle
    auto GL1 = equivariant_poincare(RootDatum::catalog(RootDatumKind::GL, {1}));
    CHECK(GL1.dims == std::vector<Int>{1, 1});
}

TEST_CASE("identity stratum is connected") {
    for (auto kind : {RootDatumKind::GL, RootDatumKind::SL, RootDatumKind::SOodd,
                      RootDatumKind::SOeven})
        for (int n = 1; n <= 3; ++n) {
            auto res = extended_quotient_components(RootDatum::catalog(kind, {n}));
            bool found = false;
            for (const auto& st : res.strata) {
                if (st.fixed_rank == RootDatum::catalog(kind, {n}).xrank()) {
                    CHECK(st.poincare[0] == 1);
                    CHECK(st.component_orbits == 1);
                    found = true;
                }
            }
            CHECK(found);
        }
}

TEST_CASE("G2 strata") {
    auto res = extended_quotient_components(RootDatum::catalog(RootDatumKind::G2, {}));
    REQUIRE(res.strata.size() == 6);
    std::multiset<Int> orbit_counts;
    for (const auto& st : res.strata) orbit_counts.insert(st.component_orbits);
    CHECK(orbit_counts == std::multiset<Int>{1, 1, 1, 1, 2, 2});
    Int total = 0;
    for (const auto& st : res.strata) total += st.component_orbits;
    CHECK(total == 8);
    CHECK(res.profile.even_total == 8);
    CHECK(res.profile.odd_total == 0);
}

TEST_CASE("type B and Sp profiles are concentrated in even degree") {
    for (int n = 1; n <= 3; ++n) {
        auto B = equivariant_poincare(RootDatum::catalog(RootDatumKind::SOodd, {n}));
        CHECK(B.odd_total == 0);
        CHECK(B.even_total == count_multipartitions(3, n));
        auto C = equivariant_poincare(RootDatum::catalog(RootDatumKind::Sp, {n}));
        CHECK(C.odd_total == 0);
        CHECK(C.even_total == count_multipartitions(3, n));
    }
}

TEST_CASE("kunneth consistency on products") {
    auto conv = [](const PoincareProfile& a, const PoincareProfile& b) {
        std::vector<Int> out(a.dims.size() + b.dims.size() - 1, 0);
        for (size_t i = 0; i < a.dims.size(); ++i)
            for (size_t j = 0; j < b.dims.size(); ++j) out[i + j] += a.dims[i] * b.dims[j];
        return out;
    };
    {
        auto A = RootDatum::catalog(RootDatumKind::GL, {1});
        auto B = RootDatum::catalog(RootDatumKind::GL, {2});
        auto P = equivariant_poincare(RootDatum::product(A, B));
        CHECK(P.dims == conv(equivariant_poincare(A), equivariant_poincare(B)));
    }
    {
        auto A = RootDatum::catalog(RootDatumKind::SL, {2});
        auto P = equivariant_poincare(RootDatum::product(A, A));
        CHECK(P.dims == conv(equivariant_poincare(A), equivariant_poincare(A)));
    }
}

TEST_CASE("closed-form comparison") {
    CHECK(compare_with_closed_form(RootDatum::catalog(RootDatumKind::GL, {3})).pass);
    CHECK(compare_with_closed_form(RootDatum::catalog(RootDatumKind::SL, {2})).pass);
    CHECK(compare_with_closed_form(RootDatum::catalog(RootDatumKind::PGL, {3})).pass);
    CHECK(compare_with_closed_form(RootDatum::catalog(RootDatumKind::SOodd, {2})).pass);
    CHECK(compare_with_closed_form(RootDatum::catalog(RootDatumKind::Sp, {2})).pass);
    CHECK(compare_with_closed_form(RootDatum::catalog(RootDatumKind::SOeven, {2})).pass);
    CHECK(compare_with_closed_form(RootDatum::catalog(RootDatumKind::G2, {})).pass);
}

TEST_CASE("GL strata: one component of homotopy rank b(mu) per class") {
    for (int n = 2; n <= 4; ++n) {
        RootDatum R = RootDatum::catalog(RootDatumKind::GL, {n});
        auto res = extended_quotient_components(R);
        const auto& classes = R.weyl()->classes();
        REQUIRE(res.strata.size() == classes.size());
        for (size_t i = 0; i < classes.size(); ++i) {
            const auto& st = res.strata[i];
            CHECK(st.component_count == 1);
            CHECK(st.component_orbits == 1);
            // the stratum has the rational cohomology of a b(mu)-torus
            Int total = 0;
            for (const auto& d : st.poincare) total += d;
            CHECK(total == Int(1) << classes[i].label.mu.b());
        }
    }
}

TEST_CASE("capacity bound surfaces as a capacity error") {
    WeylGroup::set_capacity(10, 10);
    RootDatum R = RootDatum::catalog(RootDatumKind::SOodd, {3});
    CHECK_THROWS_AS(equivariant_poincare(R), capacity_error);
    WeylGroup::set_capacity(WeylGroup::kEnumBound, WeylGroup::kCentralizerBound);
}
