#include "hkt/rootdata.hpp"

#include <sstream>

namespace hkt {

std::string datum_kind_name(RootDatumKind k) {
    switch (k) {
        case RootDatumKind::GL: return "GL";
        case RootDatumKind::SL: return "SL";
        case RootDatumKind::PGL: return "PGL";
        case RootDatumKind::SOodd: return "SO_odd";
        case RootDatumKind::Sp: return "Sp";
        case RootDatumKind::SOeven: return "SO_even";
        case RootDatumKind::G2: return "G2";
        case RootDatumKind::AlmostD: return "AlmostD";
        case RootDatumKind::ProductDatum: return "Product";
    }
    return "?";
}

RootDatumKind parse_datum_kind(const std::string& s) {
    if (s == "GL") return RootDatumKind::GL;
    if (s == "SL") return RootDatumKind::SL;
    if (s == "PGL") return RootDatumKind::PGL;
    if (s == "SO_odd" || s == "SOodd" || s == "B") return RootDatumKind::SOodd;
    if (s == "Sp" || s == "C") return RootDatumKind::Sp;
    if (s == "SO_even" || s == "SOeven") return RootDatumKind::SOeven;
    if (s == "G2") return RootDatumKind::G2;
    if (s == "AlmostD") return RootDatumKind::AlmostD;
    throw std::invalid_argument("unknown root datum kind: " + s);
}

std::string RootDatum::name() const {
    if (kind_ == RootDatumKind::ProductDatum) {
        std::string s;
        for (size_t i = 0; i < factors_.size(); ++i) s += (i ? "x" : "") + factors_[i]->name();
        return s;
    }
    std::ostringstream os;
    os << datum_kind_name(kind_);
    for (size_t i = 0; i < n_.size(); ++i) os << (i ? "," : "_") << n_[i];
    return os.str();
}

namespace {

// Unimodular U with U * ones = e_1 (the all-ones vector has content 1).
IntMatrix ones_to_e1(int n) {
    IntMatrix v(n, 1);
    for (int i = 0; i < n; ++i) v.at(i, 0) = 1;
    SmithForm snf = smith_normal_form(v);
    // U*v*V = D = e_1 (V is 1x1, +-1)
    IntMatrix U = snf.U;
    if (snf.V.at(0, 0) < 0) {
        for (int j = 0; j < n; ++j) U.at(0, j) = -U.at(0, j);
    }
    return U;
}

IntMatrix inverse_unimodular(const IntMatrix& U) {
    return solve_exact(U, IntMatrix::identity(U.rows()));
}

}  // namespace

RootDatum RootDatum::catalog(RootDatumKind kind, const std::vector<int>& n) {
    RootDatum R;
    R.kind_ = kind;
    R.n_ = n;
    auto single = [&]() {
        if (n.size() != 1 || n[0] < 1)
            throw std::invalid_argument("catalog: kind " + datum_kind_name(kind) +
                                        " takes a single positive rank");
        return n[0];
    };
    switch (kind) {
        case RootDatumKind::GL: {
            int m = single();
            R.weyl_ = WeylGroup::symmetric(m);
            R.xrank_ = m;
            R.mode_ = Mode::Full;
            break;
        }
        case RootDatumKind::SL: {
            int m = single();
            R.weyl_ = WeylGroup::symmetric(m);
            R.xrank_ = m - 1;
            R.mode_ = Mode::Quot;
            R.quot_U_ = ones_to_e1(m);
            break;
        }
        case RootDatumKind::PGL: {
            int m = single();
            R.weyl_ = WeylGroup::symmetric(m);
            R.xrank_ = m - 1;
            R.mode_ = Mode::Sub;
            R.sub_basis_ = IntMatrix(m, m - 1);
            for (int j = 0; j + 1 < m; ++j) {
                R.sub_basis_.at(j, j) = 1;
                R.sub_basis_.at(j + 1, j) = -1;
            }
            break;
        }
        case RootDatumKind::SOodd: {
            int m = single();
            R.weyl_ = WeylGroup::type_b(m);
            R.xrank_ = m;
            R.mode_ = Mode::Full;
            break;
        }
        case RootDatumKind::Sp: {
            // Dual to SO_{2n+1}: the lattice X and the Weyl action coincide
            // with those of the odd orthogonal datum (only the root systems
            // are exchanged, which no lattice computation here sees).
            int m = single();
            R.weyl_ = WeylGroup::type_b(m);
            R.xrank_ = m;
            R.mode_ = Mode::Full;
            break;
        }
        case RootDatumKind::SOeven: {
            int m = single();
            R.weyl_ = WeylGroup::type_d(m);
            R.xrank_ = m;
            R.mode_ = Mode::Full;
            R.reducible_special_ = (m == 2);
            break;
        }
        case RootDatumKind::G2: {
            if (!n.empty() && !(n.size() == 1 && n[0] == 2))
                throw std::invalid_argument("catalog: G2 takes no rank (or n = 2)");
            R.n_ = {2};
            R.weyl_ = WeylGroup::g2();
            R.xrank_ = 2;
            R.mode_ = Mode::Full;
            break;
        }
        case RootDatumKind::AlmostD: {
            if (n.empty()) throw std::invalid_argument("catalog: AlmostD takes a block vector");
            R.weyl_ = WeylGroup::almost_d(n);
            int total = 0;
            for (int b : n) total += b;
            R.xrank_ = total;
            R.mode_ = Mode::Full;
            break;
        }
        case RootDatumKind::ProductDatum:
            throw std::invalid_argument("catalog: use RootDatum::product");
    }
    {
        IntMatrix id = IntMatrix::identity(R.xrank_);
        for (const auto& g : R.weyl_->generators()) {
            IntMatrix M = R.action(g);
            if (!(M * M == id))
                throw std::logic_error("catalog: generator is not an involution on X");
        }
    }
    return R;
}

RootDatum RootDatum::product(const RootDatum& a, const RootDatum& b) {
    RootDatum R;
    R.kind_ = RootDatumKind::ProductDatum;
    R.mode_ = Mode::Product;
    R.factors_ = {std::make_shared<RootDatum>(a), std::make_shared<RootDatum>(b)};
    R.weyl_ = WeylGroup::product({a.weyl(), b.weyl()});
    R.xrank_ = a.xrank() + b.xrank();
    R.factor_coord_offset_ = {0, a.weyl()->ncoords()};
    R.reducible_special_ = a.reducible_special() || b.reducible_special();
    return R;
}

RootDatum catalog_root_datum(const std::string& kind, const std::vector<int>& n) {
    return RootDatum::catalog(parse_datum_kind(kind), n);
}

IntMatrix RootDatum::action(const GroupElement& w) const {
    switch (mode_) {
        case Mode::Full:
            return ge_matrix(w);
        case Mode::Quot: {
            IntMatrix M = ge_matrix(w);
            int m = M.rows();
            IntMatrix C = quot_U_ * M * inverse_unimodular(quot_U_);
            // first column must be e_1 (w fixes the all-ones vector)
            for (int i = 1; i < m; ++i)
                if (C.at(i, 0) != 0) throw std::logic_error("action: quotient not preserved");
            IntMatrix A(m - 1, m - 1);
            for (int i = 1; i < m; ++i)
                for (int j = 1; j < m; ++j) A.at(i - 1, j - 1) = C.at(i, j);
            return A;
        }
        case Mode::Sub: {
            IntMatrix M = ge_matrix(w);
            return solve_exact(sub_basis_, M * sub_basis_);
        }
        case Mode::Product: {
            const auto& sp = std::get<SignedPermutation>(w);
            std::vector<IntMatrix> blocks;
            for (size_t f = 0; f < factors_.size(); ++f) {
                int off = factor_coord_offset_[f];
                int k = factors_[f]->weyl()->ncoords();
                std::vector<int> img(k), sgn(k);
                for (int i = 0; i < k; ++i) {
                    int to = sp.img()[off + i];
                    if (to < off || to >= off + k)
                        throw std::invalid_argument("action: element does not preserve factors");
                    img[i] = to - off;
                    sgn[i] = sp.sgn()[off + i];
                }
                blocks.push_back(factors_[f]->action(SignedPermutation(img, sgn)));
            }
            IntMatrix A(xrank_, xrank_);
            int off = 0;
            for (const auto& B : blocks) {
                for (int i = 0; i < B.rows(); ++i)
                    for (int j = 0; j < B.cols(); ++j) A.at(off + i, off + j) = B.at(i, j);
                off += B.rows();
            }
            return A;
        }
    }
    throw std::logic_error("action: unreachable");
}

FixedTorusData fixed_torus(const RootDatum& R, const GroupElement& w) {
    FixedTorusData out;
    IntMatrix A = R.action(w) - IntMatrix::identity(R.xrank());
    SmithForm snf = smith_normal_form(A);
    out.divisors = snf.divisors;
    // pad with zeros for any missing diagonal positions (square here anyway)
    while (static_cast<int>(out.divisors.size()) < R.xrank()) out.divisors.push_back(0);
    for (const auto& d : out.divisors) {
        if (d == 0) ++out.fixed_rank;
        else if (d > 1) {
            out.torsion.push_back(d);
            out.component_count *= d;
        }
    }
    out.h1_lattice = kernel_basis(A);
    out.U = snf.U;
    return out;
}

QuotientAction action_on_quotient(const RootDatum& R, const GroupElement& w,
                                  const GroupElement& z) {
    IntMatrix Mw = R.action(w), Mz = R.action(z);
    if (!(Mw * Mz == Mz * Mw))
        throw std::invalid_argument("action_on_quotient: z does not commute with w");
    FixedTorusData F = fixed_torus(R, w);
    IntMatrix N = F.U * Mz * inverse_unimodular(F.U);
    std::vector<int> free_idx, tors_idx;
    for (int i = 0; i < R.xrank(); ++i) {
        if (F.divisors[i] == 0) free_idx.push_back(i);
        else if (F.divisors[i] > 1) tors_idx.push_back(i);
    }
    QuotientAction out;
    out.free_part = IntMatrix(static_cast<int>(free_idx.size()), static_cast<int>(free_idx.size()));
    for (size_t i = 0; i < free_idx.size(); ++i)
        for (size_t j = 0; j < free_idx.size(); ++j)
            out.free_part.at(static_cast<int>(i), static_cast<int>(j)) =
                N.at(free_idx[i], free_idx[j]);
    out.torsion_part =
        IntMatrix(static_cast<int>(tors_idx.size()), static_cast<int>(tors_idx.size()));
    for (size_t i = 0; i < tors_idx.size(); ++i) {
        out.torsion_moduli.push_back(F.divisors[tors_idx[i]]);
        for (size_t j = 0; j < tors_idx.size(); ++j) {
            Int v = N.at(tors_idx[i], tors_idx[j]) % F.divisors[tors_idx[i]];
            if (v < 0) v += F.divisors[tors_idx[i]];
            out.torsion_part.at(static_cast<int>(i), static_cast<int>(j)) = v;
        }
    }
    // Well-definedness: free rows must vanish on torsion columns.
    for (int fi : free_idx)
        for (int tj : tors_idx)
            if (N.at(fi, tj) != 0)
                throw std::logic_error("action_on_quotient: torsion leaks into the free part");
    return out;
}

}  // namespace hkt
