#include "doctest.h"
#include "hkt/partitions.hpp"
#include "hkt/signed_perm.hpp"

using namespace hkt;

TEST_CASE("partition enumeration order and counts") {
    auto p0 = enum_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p3 = enum_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].parts() == std::vector<int>{3});
    CHECK(p3[1].parts() == std::vector<int>{2, 1});
    CHECK(p3[2].parts() == std::vector<int>{1, 1, 1});

    CHECK(enum_partitions(4).size() == 5);
}

TEST_CASE("partition counts match the pentagonal-number recurrence") {
    // independent oracle: p(n) = sum_k (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
    std::vector<Int> p{1};
    for (int n = 1; n <= 30; ++n) {
        Int acc = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            Int term = 0;
            if (g1 <= n) term += p[n - g1];
            if (g2 <= n) term += p[n - g2];
            acc += (k % 2 == 1) ? term : -term;
        }
        p.push_back(acc);
        CHECK(Int(enum_partitions(n).size()) == acc);
        CHECK(partition_count(n) == acc);
    }
}

TEST_CASE("partition statistics") {
    Partition mu({2, 1});
    CHECK(mu.b() == 2);
    Partition ones({1, 1, 1});
    CHECK(ones.b() == 1);
    CHECK(ones.gcd() == 1);
    CHECK(ones.dual() == Partition({3}));
    CHECK(Partition({3, 1}).dual() == Partition({2, 1, 1}));
    CHECK(Partition(std::vector<int>{}).b() == 0);
    CHECK(Partition(std::vector<int>{}).dual() == Partition(std::vector<int>{}));
    CHECK_THROWS_AS(Partition(std::vector<int>{}).gcd(), std::domain_error);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>(65, 1)), capacity_error);
}

TEST_CASE("dual is an involution and preserves b") {
    for (int n = 0; n <= 20; ++n)
        for (const auto& mu : enum_partitions(n)) {
            CHECK(mu.dual().dual() == mu);
            CHECK(mu.dual().b() == mu.b());
        }
}

TEST_CASE("power partition") {
    CHECK(power_partition(Partition({1, 1}), 2) == Partition({2}));
    CHECK(power_partition(Partition({2, 2, 1, 1}), 2) == Partition({4, 2}));
    Partition mu({3, 2, 1});
    CHECK(power_partition(mu, 1) == mu);
    CHECK_THROWS_AS(power_partition(Partition({2, 1}), 2), std::invalid_argument);
    // b is preserved
    for (int n = 1; n <= 12; ++n)
        for (const auto& m : enum_partitions(n)) {
            int g = m.dual().gcd();
            for (int r = 1; r <= g; ++r)
                if (g % r == 0) CHECK(power_partition(m, r).b() == m.b());
        }
}

TEST_CASE("multipartition counts") {
    for (int n = 0; n <= 10; ++n) CHECK(count_multipartitions(1, n) == partition_count(n));
    CHECK(count_multipartitions(3, 2) == 9);
    CHECK(count_multipartitions(3, 3) == 22);
    // exhaustive enumeration oracle
    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 6; ++n)
            CHECK(Int(enum_multipartitions(k, n).size()) == count_multipartitions(k, n));
    // each enumerated tuple has the right weight, no duplicates
    auto tuples = enum_multipartitions(3, 4);
    for (const auto& t : tuples) CHECK(t.total_weight() == 4);
    for (size_t i = 0; i < tuples.size(); ++i)
        for (size_t j = i + 1; j < tuples.size(); ++j) CHECK(!(tuples[i] == tuples[j]));
}

TEST_CASE("euler phi: sum over divisors") {
    for (i64 m = 1; m <= 10000; ++m) {
        i64 acc = 0;
        for (i64 r = 1; r * r <= m; ++r) {
            if (m % r != 0) continue;
            acc += euler_phi(r);
            if (r != m / r) acc += euler_phi(m / r);
        }
        REQUIRE(acc == m);
    }
}

TEST_CASE("permutation representatives") {
    // sigma(mu) has cycle type mu
    for (int n = 1; n <= 8; ++n)
        for (const auto& mu : enum_partitions(n)) CHECK(perm_from_partition(mu).cycle_type() == mu);
    CHECK(perm_from_partition(Partition({1, 1, 1})).is_identity());
    // (3) -> the 3-cycle
    auto c3 = perm_from_partition(Partition({3}));
    CHECK(c3.img() == std::vector<int>{1, 2, 0});

    // sigma(mu, lambda) has signed cycle type (mu, lambda)
    for (int n = 1; n <= 6; ++n)
        for (int a = 0; a <= n; ++a)
            for (const auto& mu : enum_partitions(a))
                for (const auto& lam : enum_partitions(n - a)) {
                    auto [m2, l2] = sigma_bipartition(mu, lam).signed_cycle_type();
                    CHECK(m2 == mu);
                    CHECK(l2 == lam);
                }

    // sigma'((1)) is the sign change s_{e_1}
    CHECK(sigma_prime(Partition({1})) == SignedPermutation::sign_change(1, 0));

    // sigma((),(2)) is a negative 2-cycle
    auto neg2 = sigma_bipartition(Partition(std::vector<int>{}), Partition({2}));
    auto [mm, ll] = neg2.signed_cycle_type();
    CHECK(mm.empty());
    CHECK(ll == Partition({2}));

    // sigma''((2)): the conjugate form eps_n^{-1} sigma(mu) eps_n
    auto sdp = sigma_double_prime(Partition({2}));
    auto eps = SignedPermutation::sign_change(2, 1);
    auto conj = eps.inverse() * perm_from_partition(Partition({2})) * eps;
    CHECK(sdp == conj);
    CHECK_THROWS_AS(sigma_double_prime(Partition({2, 1})), std::invalid_argument);
    // sigma''((2,2)) as well
    auto sdp4 = sigma_double_prime(Partition({2, 2}));
    auto eps4 = SignedPermutation::sign_change(4, 3);
    CHECK(sdp4 == eps4.inverse() * perm_from_partition(Partition({2, 2})) * eps4);
}

TEST_CASE("signed permutation algebra") {
    // composition agrees with the matrix representation
    auto a = sigma_bipartition(Partition({2}), Partition({1}));
    auto b = sigma_bipartition(Partition({1}), Partition({2}));
    CHECK((a * b).matrix() == a.matrix() * b.matrix());
    CHECK((b * a).matrix() == b.matrix() * a.matrix());
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.order() == 2);
    CHECK(sigma_prime(Partition({3})).order() == 6);
}
