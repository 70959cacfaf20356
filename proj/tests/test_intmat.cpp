#include "doctest.h"
#include "hkt/intmat.hpp"

using namespace hkt;

namespace {

// deterministic LCG so the matrix suite is reproducible
struct Lcg {
    unsigned long long s;
    int next(int lo, int hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<int>((s >> 33) % (hi - lo + 1));
    }
};

IntMatrix diag_of(const SmithForm& f, int rows, int cols) {
    IntMatrix D(rows, cols);
    for (size_t i = 0; i < f.divisors.size(); ++i) D.at(static_cast<int>(i), static_cast<int>(i)) = f.divisors[i];
    return D;
}

}  // namespace

TEST_CASE("smith normal form on hand examples") {
    // cokernel Z^3 / <(1,1,2),(1,0,1),(0,1,1)> is Z (the S_3 elliptic lattice)
    IntMatrix A = IntMatrix::from_rows_i64({{1, 1, 0}, {1, 0, 1}, {2, 1, 1}});
    SmithForm f = smith_normal_form(A);
    CHECK(f.rank == 2);
    CHECK(f.torsion().empty());
    CHECK(f.U * A * f.V == diag_of(f, 3, 3));

    // (-2) on Z gives Z/2
    IntMatrix B = IntMatrix::from_rows_i64({{-2}});
    SmithForm g = smith_normal_form(B);
    CHECK(g.divisors == std::vector<Int>{2});

    IntMatrix C = IntMatrix::from_rows_i64({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    SmithForm h = smith_normal_form(C);
    CHECK(h.U * C * h.V == diag_of(h, 3, 3));
    CHECK(h.divisors == std::vector<Int>{2, 2, 156});
}

TEST_CASE("smith normal form randomized recomposition") {
    Lcg rng{20260811};
    for (int trial = 0; trial < 200; ++trial) {
        int m = rng.next(1, 7), n = rng.next(1, 7);
        IntMatrix A(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) A.at(i, j) = rng.next(-9, 9);
        SmithForm f = smith_normal_form(A);
        // recomposition
        REQUIRE(f.U * A * f.V == diag_of(f, m, n));
        // unimodularity
        Int du = f.U.det(), dv = f.V.det();
        REQUIRE((du == 1 || du == -1));
        REQUIRE((dv == 1 || dv == -1));
        // divisor chain
        for (size_t i = 0; i + 1 < f.divisors.size(); ++i) {
            if (f.divisors[i + 1] == 0) continue;
            REQUIRE(f.divisors[i] != 0);
            REQUIRE(f.divisors[i + 1] % f.divisors[i] == 0);
        }
        // rank consistency
        REQUIRE(f.rank == A.rank());
        // kernel
        IntMatrix K = kernel_basis(A);
        REQUIRE(K.cols() == n - f.rank);
        if (K.cols() > 0) {
            IntMatrix AK = A * K;
            for (int i = 0; i < AK.rows(); ++i)
                for (int j = 0; j < AK.cols(); ++j) REQUIRE(AK.at(i, j) == 0);
            REQUIRE(K.rank() == K.cols());
        }
    }
}

TEST_CASE("hermite basis spans the row lattice") {
    Lcg rng{7};
    for (int trial = 0; trial < 100; ++trial) {
        int m = rng.next(1, 5), n = rng.next(1, 5);
        IntMatrix A(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) A.at(i, j) = rng.next(-6, 6);
        IntMatrix H = hermite_basis(A);
        REQUIRE(H.rank() == A.rank());
        REQUIRE(H.rows() == A.rank());
        if (H.rows() == 0) continue;
        // every row of A is an integral combination of the rows of H
        IntMatrix X = solve_exact(H.transpose(), A.transpose());
        REQUIRE(H.transpose() * X == A.transpose());
    }
}

TEST_CASE("solve_exact") {
    IntMatrix A = IntMatrix::from_rows_i64({{1, 2}, {3, 5}, {0, 1}});
    IntMatrix X = IntMatrix::from_rows_i64({{2, 0}, {-1, 4}});
    IntMatrix B = A * X;
    CHECK(solve_exact(A, B) == X);
    IntMatrix bad = IntMatrix::from_rows_i64({{1, 0}, {0, 1}, {5, 5}});
    CHECK_THROWS(solve_exact(A, bad));
}

TEST_CASE("determinant") {
    CHECK(IntMatrix::from_rows_i64({{2, 1}, {1, 1}}).det() == 1);
    CHECK(IntMatrix::from_rows_i64({{0, 1}, {1, 0}}).det() == -1);
    CHECK(IntMatrix::from_rows_i64({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}).det() == 30);
    CHECK(IntMatrix::from_rows_i64({{1, 2}, {2, 4}}).det() == 0);
}
