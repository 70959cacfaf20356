#include "hkt/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace hkt {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_rows_i64(const std::vector<std::vector<i64>>& rows) {
    std::vector<std::vector<Int>> conv;
    conv.reserve(rows.size());
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return from_rows(conv);
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.c_; ++j) m.at(i, j) += v * o.at(k, j);
        }
    return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

int IntMatrix::rank() const {
    IntMatrix w = *this;
    int rank = 0;
    for (int col = 0; col < w.c_ && rank < w.r_; ++col) {
        int piv = -1;
        for (int i = rank; i < w.r_; ++i)
            if (w.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < w.c_; ++j) std::swap(w.at(rank, j), w.at(piv, j));
        for (int i = rank + 1; i < w.r_; ++i) {
            if (w.at(i, col) == 0) continue;
            Int a = w.at(rank, col), b = w.at(i, col);
            for (int j = col; j < w.c_; ++j) w.at(i, j) = w.at(i, j) * a - w.at(rank, j) * b;
        }
        ++rank;
    }
    return rank;
}

Int IntMatrix::det() const {
    if (r_ != c_) throw std::invalid_argument("det: matrix not square");
    if (r_ == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix w = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < r_ - 1; ++k) {
        if (w.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < r_; ++i)
                if (w.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < c_; ++j) std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < r_; ++i)
            for (int j = k + 1; j < c_; ++j)
                w.at(i, j) = exact_div(w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev);
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(r_ - 1, c_ - 1) : -w.at(r_ - 1, c_ - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < r_; ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < c_; ++j) os << (j ? " " : "") << at(i, j);
        os << "]";
    }
    return os.str();
}

std::vector<Int> SmithForm::torsion() const {
    std::vector<Int> t;
    for (const auto& d : divisors)
        if (d > 1) t.push_back(d);
    return t;
}

namespace {

struct SnfWork {
    IntMatrix A, U, V;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < A.cols(); ++c) std::swap(A.at(i, c), A.at(j, c));
        for (int c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < A.rows(); ++r) std::swap(A.at(r, i), A.at(r, j));
        for (int r = 0; r < V.rows(); ++r) std::swap(V.at(r, i), V.at(r, j));
    }
    void add_row(int dst, int src, const Int& f) {  // row_dst += f * row_src
        for (int c = 0; c < A.cols(); ++c) A.at(dst, c) += f * A.at(src, c);
        for (int c = 0; c < U.cols(); ++c) U.at(dst, c) += f * U.at(src, c);
    }
    void add_col(int dst, int src, const Int& f) {
        for (int r = 0; r < A.rows(); ++r) A.at(r, dst) += f * A.at(r, src);
        for (int r = 0; r < V.rows(); ++r) V.at(r, dst) += f * V.at(r, src);
    }
    void negate_row(int i) {
        for (int c = 0; c < A.cols(); ++c) A.at(i, c) = -A.at(i, c);
        for (int c = 0; c < U.cols(); ++c) U.at(i, c) = -U.at(i, c);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A0) {
    const int m = A0.rows(), n = A0.cols();
    SnfWork w{A0, IntMatrix::identity(m), IntMatrix::identity(n)};
    const int steps = std::min(m, n);

    for (int s = 0; s < steps; ++s) {
        // Find pivot of minimal absolute value in the lower-right block.
        for (;;) {
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = s; i < m; ++i)
                for (int j = s; j < n; ++j) {
                    const Int& v = w.A.at(i, j);
                    if (v == 0) continue;
                    Int av = abs(v);
                    if (pi < 0 || av < best) { best = av; pi = i; pj = j; }
                }
            if (pi < 0) break;  // block is zero
            w.swap_rows(s, pi);
            w.swap_cols(s, pj);

            bool clean = true;
            for (int i = s + 1; i < m; ++i) {
                Int q = w.A.at(i, s) / w.A.at(s, s);
                if (q != 0) w.add_row(i, s, -q);
                if (w.A.at(i, s) != 0) clean = false;
            }
            for (int j = s + 1; j < n; ++j) {
                Int q = w.A.at(s, j) / w.A.at(s, s);
                if (q != 0) w.add_col(j, s, -q);
                if (w.A.at(s, j) != 0) clean = false;
            }
            if (!clean) continue;  // remainders became new smaller pivots

            // Divisibility fix-up: pivot must divide the rest of the block.
            bool fixed = true;
            for (int i = s + 1; i < m && fixed; ++i)
                for (int j = s + 1; j < n && fixed; ++j)
                    if (w.A.at(i, j) % w.A.at(s, s) != 0) {
                        w.add_row(s, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (w.A.at(s, s) < 0) w.negate_row(s);
    }

    SmithForm out;
    out.U = w.U;
    out.V = w.V;
    out.divisors.resize(steps);
    for (int s = 0; s < steps; ++s) {
        out.divisors[s] = w.A.at(s, s);
        if (out.divisors[s] != 0) ++out.rank;
    }
    return out;
}

IntMatrix kernel_basis(const IntMatrix& A) {
    SmithForm snf = smith_normal_form(A);
    const int n = A.cols();
    std::vector<int> zero_cols;
    for (int j = 0; j < n; ++j) {
        Int d = j < static_cast<int>(snf.divisors.size()) ? snf.divisors[j] : Int(0);
        if (d == 0) zero_cols.push_back(j);
    }
    IntMatrix K(n, static_cast<int>(zero_cols.size()));
    for (size_t k = 0; k < zero_cols.size(); ++k)
        for (int i = 0; i < n; ++i) K.at(i, static_cast<int>(k)) = snf.V.at(i, zero_cols[k]);
    return K;
}

IntMatrix hermite_basis(const IntMatrix& A) {
    IntMatrix H = A;
    const int m = H.rows(), n = H.cols();
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        // Reduce column below `row` to a single entry by gcd steps.
        for (;;) {
            int piv = -1;
            Int best = 0;
            for (int i = row; i < m; ++i) {
                if (H.at(i, col) == 0) continue;
                Int av = abs(H.at(i, col));
                if (piv < 0 || av < best) { best = av; piv = i; }
            }
            if (piv < 0) break;
            for (int j = 0; j < n; ++j) std::swap(H.at(row, j), H.at(piv, j));
            bool done = true;
            for (int i = row + 1; i < m; ++i) {
                Int q = H.at(i, col) / H.at(row, col);
                if (q != 0)
                    for (int j = 0; j < n; ++j) H.at(i, j) -= q * H.at(row, j);
                if (H.at(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (H.at(row, col) == 0) continue;
        if (H.at(row, col) < 0)
            for (int j = 0; j < n; ++j) H.at(row, j) = -H.at(row, j);
        // Reduce entries above the pivot.
        for (int i = 0; i < row; ++i) {
            Int q = H.at(i, col) / H.at(row, col);
            if (H.at(i, col) % H.at(row, col) < 0) q -= 1;  // floor division
            if (q != 0)
                for (int j = 0; j < n; ++j) H.at(i, j) -= q * H.at(row, j);
        }
        ++row;
    }
    IntMatrix out(row, n);
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = H.at(i, j);
    return out;
}

IntMatrix solve_exact(const IntMatrix& A, const IntMatrix& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("solve_exact: dimension mismatch");
    const int m = A.rows(), n = A.cols(), k = B.cols();
    // Rational Gaussian elimination on [A | B].
    std::vector<std::vector<Rat>> w(m, std::vector<Rat>(n + k));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = Rat(A.at(i, j));
        for (int j = 0; j < k; ++j) w[i][n + j] = Rat(B.at(i, j));
    }
    std::vector<int> pivot_row(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int i = row; i < m; ++i)
            if (w[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(w[row], w[piv]);
        Rat inv = w[row][col];
        for (int j = col; j < n + k; ++j) w[row][j] /= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (int j = col; j < n + k; ++j) w[i][j] -= f * w[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    // Consistency: rows beyond `row` must have zero RHS.
    for (int i = row; i < m; ++i)
        for (int j = 0; j < k; ++j)
            if (w[i][n + j] != 0) throw std::invalid_argument("solve_exact: inconsistent system");
    IntMatrix X(n, k);
    for (int col = 0; col < n; ++col) {
        if (pivot_row[col] < 0) throw std::invalid_argument("solve_exact: A not of full column rank");
        for (int j = 0; j < k; ++j) {
            const Rat& v = w[pivot_row[col]][n + j];
            if (denominator(v) != 1) throw std::logic_error("solve_exact: non-integral solution");
            X.at(col, j) = numerator(v);
        }
    }
    return X;
}

}  // namespace hkt
