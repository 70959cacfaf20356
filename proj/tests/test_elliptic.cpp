#include "doctest.h"
#include "hkt/elliptic.hpp"

using namespace hkt;

TEST_CASE("induction matrix small cases") {
    // S_2: single column, the regular representation (1,1)
    auto S2 = WeylGroup::symmetric(2);
    IntMatrix M2 = induction_matrix(*S2);
    REQUIRE(M2.cols() == 1);
    REQUIRE(M2.rows() == 2);
    CHECK(M2.at(0, 0) == 1);
    CHECK(M2.at(1, 0) == 1);

    // S_3: columns from P = empty and P = {alpha_1}: regular (1,1,2) and the
    // two inductions (1,0,1), (0,1,1) in the (triv, sign, std) row order
    auto S3 = WeylGroup::symmetric(3);
    IntMatrix M3 = induction_matrix(*S3);
    REQUIRE(M3.rows() == 3);
    REQUIRE(M3.cols() == 3);
    std::multiset<std::vector<Int>> cols;
    for (int j = 0; j < 3; ++j) {
        std::vector<Int> col;
        for (int i = 0; i < 3; ++i) col.push_back(M3.at(i, j));
        cols.insert(col);
    }
    // row order follows the revlex irreducible order: (3) = triv, (2,1) = std, (1^3) = sign
    std::multiset<std::vector<Int>> expect{{1, 2, 1}, {1, 1, 0}, {0, 1, 1}};
    CHECK(cols == expect);

    // W(G_2): 6 rows; columns from the empty set and the two A_1 classes
    IntMatrix MG = induction_matrix(*WeylGroup::g2());
    CHECK(MG.rows() == 6);
    CHECK(MG.cols() == 5);
}

TEST_CASE("elliptic quotients: rank equals the elliptic class count, no torsion") {
    auto check = [](WeylGroupPtr W) {
        EllipticReport r = elliptic_quotient(*W);
        INFO("group ", r.group);
        CHECK(r.torsion_invariants.empty());
        CHECK(r.rank == r.elliptic_class_count);
    };
    check(WeylGroup::symmetric(2));
    check(WeylGroup::symmetric(3));
    check(WeylGroup::symmetric(4));
    check(WeylGroup::symmetric(5));
    check(WeylGroup::type_b(2));
    check(WeylGroup::type_b(3));
    check(WeylGroup::type_d(2));
    check(WeylGroup::type_d(3));
    check(WeylGroup::g2());
    check(WeylGroup::almost_d({1, 1}));
    check(WeylGroup::almost_d({2, 1}));
    check(WeylGroup::almost_d({1, 1, 1}));
}

TEST_CASE("elliptic rank values") {
    CHECK(elliptic_quotient(*WeylGroup::symmetric(2)).rank == 1);
    CHECK(elliptic_quotient(*WeylGroup::g2()).rank == 3);
    CHECK(elliptic_quotient(*WeylGroup::type_b(3)).rank == 3);  // p(3)
}

TEST_CASE("products multiply elliptic ranks") {
    auto S2 = WeylGroup::symmetric(2);
    auto S3 = WeylGroup::symmetric(3);
    int r2 = elliptic_quotient(*S2).rank;
    int r3 = elliptic_quotient(*S3).rank;
    auto P22 = elliptic_quotient(*WeylGroup::product({S2, S2}));
    CHECK(P22.rank == r2 * r2);
    CHECK(P22.torsion_invariants.empty());
    auto P23 = elliptic_quotient(*WeylGroup::product({S2, S3}));
    CHECK(P23.rank == r2 * r3);
    CHECK(P23.torsion_invariants.empty());
}

TEST_CASE("bala-carter classes of odd orthogonal groups") {
    auto c1 = unipotent_classes_so_odd(1);
    REQUIRE(c1.size() == 2);
    // ((1),(1)) and ((),(3))
    bool seen_a = false, seen_b = false;
    for (const auto& c : c1) {
        if (c.alpha == Partition({1}) && c.beta == Partition({1})) seen_a = true;
        if (c.alpha == Partition(std::vector<int>{}) && c.beta == Partition({3})) seen_b = true;
    }
    CHECK(seen_a);
    CHECK(seen_b);

    auto c2 = unipotent_classes_so_odd(2);
    REQUIRE(c2.size() == 4);
    for (const auto& c : c2) {
        CHECK(2 * c.alpha.weight() + c.beta.weight() == 5);
        for (int p : c.beta.parts()) CHECK(p % 2 == 1);
        for (size_t i = 0; i + 1 < c.beta.parts().size(); ++i)
            CHECK(c.beta.parts()[i] != c.beta.parts()[i + 1]);
    }
}

TEST_CASE("component group ranks") {
    // ((2),(1)) vanishes: alpha has an even term
    CHECK(component_group_rank({Partition({2}), Partition({1}), 2}).vanishes);
    // ((1,1),(1)) vanishes: repeated odd term
    CHECK(component_group_rank({Partition({1, 1}), Partition({1}), 2}).vanishes);
    // ((1),(1)) vanishes: odd term shared with beta
    CHECK(component_group_rank({Partition({1}), Partition({1}), 1}).vanishes);
    // ((1),(3)) survives with rank 1
    auto r = component_group_rank({Partition({1}), Partition({3}), 2});
    CHECK(!r.vanishes);
    CHECK(r.elliptic_rank == 1);
    // ((),(1,3,5)) has rank 4
    auto r2 = component_group_rank({Partition(std::vector<int>{}), Partition({5, 3, 1}), 4});
    CHECK(r2.elliptic_rank == 4);

    // n = 2: per-class elliptic ranks are exactly {0,0,1,1}
    std::multiset<Int> ranks;
    for (const auto& c : unipotent_classes_so_odd(2))
        ranks.insert(component_group_rank(c).elliptic_rank);
    CHECK(ranks == std::multiset<Int>{0, 0, 1, 1});

    // classification is total for n <= 8, ranks are powers of two when nonzero
    for (int n = 1; n <= 8; ++n)
        for (const auto& c : unipotent_classes_so_odd(n)) {
            auto cr = component_group_rank(c);
            if (!cr.vanishes) {
                Int v = cr.elliptic_rank;
                while (v % 2 == 0) v /= 2;
                CHECK(v == 1);
            } else {
                CHECK(cr.elliptic_rank == 0);
            }
        }
    // the diagnostic sum is exposed
    CHECK(component_group_rank_sum(2) == 2);
}

TEST_CASE("trivial and single-block groups") {
    auto S1 = elliptic_quotient(*WeylGroup::symmetric(1));
    CHECK(S1.rank == 1);
    CHECK(S1.torsion_invariants.empty());
    CHECK(S1.elliptic_class_count == 1);
    auto D1 = elliptic_quotient(*WeylGroup::type_d(1));
    CHECK(D1.rank == 1);
    // d = 1 almost-D agrees with type D
    auto A3 = elliptic_quotient(*WeylGroup::almost_d({3}));
    auto D3 = elliptic_quotient(*WeylGroup::type_d(3));
    CHECK(A3.rank == D3.rank);
    CHECK(A3.torsion_invariants.empty());
}
