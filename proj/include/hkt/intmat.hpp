#pragma once

#include <vector>

#include "hkt/numeric.hpp"

namespace hkt {

// Dense matrix over arbitrary-precision integers.
class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, 0) {}
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
    static IntMatrix from_rows_i64(const std::vector<std::vector<i64>>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Int& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    // Rank over Q (fraction-free elimination).
    int rank() const;
    // Determinant (square only), by Bareiss elimination.
    Int det() const;

    std::string to_string() const;

   private:
    int r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

// Smith normal form U*A*V = D with U, V unimodular and D diagonal with
// d_1 | d_2 | ... (all diagonal entries nonnegative).
struct SmithForm {
    IntMatrix U, V;
    std::vector<Int> divisors;  // length min(rows, cols), includes zeros
    int rank = 0;               // number of nonzero divisors

    // Divisors > 1 (the torsion invariants of the cokernel).
    std::vector<Int> torsion() const;
};

SmithForm smith_normal_form(const IntMatrix& A);

// Integral basis of ker(A) as columns of the returned matrix (saturated by
// construction).
IntMatrix kernel_basis(const IntMatrix& A);

// Row-style Hermite normal form of A (returns H = U*A with U unimodular,
// zero rows removed); rows form a canonical basis of the row lattice.
IntMatrix hermite_basis(const IntMatrix& A);

// Solve A * X = B exactly over Q, asserting the solution is integral.
// A must have full column rank. Throws if no integral solution exists.
IntMatrix solve_exact(const IntMatrix& A, const IntMatrix& B);

}  // namespace hkt
