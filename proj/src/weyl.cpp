#include "hkt/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace hkt {

// ---------------------------------------------------------------------------
// Mat2 / GroupElement
// ---------------------------------------------------------------------------

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2{{a[0] * o.a[0] + a[1] * o.a[2], a[0] * o.a[1] + a[1] * o.a[3],
                 a[2] * o.a[0] + a[3] * o.a[2], a[2] * o.a[1] + a[3] * o.a[3]}};
}

Mat2 Mat2::inverse() const {
    i64 d = det();
    if (d != 1 && d != -1) throw std::invalid_argument("Mat2::inverse: determinant not +-1");
    return Mat2{{a[3] * d, -a[1] * d, -a[2] * d, a[0] * d}};
}

size_t Mat2::hash() const {
    size_t h = 1469598103934665603ull;
    for (i64 v : a) h = (h ^ static_cast<size_t>(v + 97)) * 1099511628211ull;
    return h;
}

IntMatrix Mat2::matrix() const {
    IntMatrix m(2, 2);
    m.at(0, 0) = a[0];
    m.at(0, 1) = a[1];
    m.at(1, 0) = a[2];
    m.at(1, 1) = a[3];
    return m;
}

std::string Mat2::to_string() const {
    std::ostringstream os;
    os << "[[" << a[0] << "," << a[1] << "],[" << a[2] << "," << a[3] << "]]";
    return os.str();
}

GroupElement ge_mul(const GroupElement& a, const GroupElement& b) {
    if (a.index() != b.index()) throw std::invalid_argument("ge_mul: mixed element kinds");
    if (std::holds_alternative<SignedPermutation>(a))
        return std::get<SignedPermutation>(a) * std::get<SignedPermutation>(b);
    return std::get<Mat2>(a) * std::get<Mat2>(b);
}

GroupElement ge_inv(const GroupElement& a) {
    if (std::holds_alternative<SignedPermutation>(a))
        return std::get<SignedPermutation>(a).inverse();
    return std::get<Mat2>(a).inverse();
}

bool ge_eq(const GroupElement& a, const GroupElement& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<SignedPermutation>(a))
        return std::get<SignedPermutation>(a) == std::get<SignedPermutation>(b);
    return std::get<Mat2>(a) == std::get<Mat2>(b);
}

bool ge_is_identity(const GroupElement& a) {
    if (std::holds_alternative<SignedPermutation>(a))
        return std::get<SignedPermutation>(a).is_identity();
    return std::get<Mat2>(a) == Mat2::identity();
}

IntMatrix ge_matrix(const GroupElement& a) {
    if (std::holds_alternative<SignedPermutation>(a)) return std::get<SignedPermutation>(a).matrix();
    return std::get<Mat2>(a).matrix();
}

std::string ge_to_string(const GroupElement& a) {
    if (std::holds_alternative<SignedPermutation>(a)) return std::get<SignedPermutation>(a).to_string();
    return std::get<Mat2>(a).to_string();
}

size_t GroupElementHash::operator()(const GroupElement& e) const {
    if (std::holds_alternative<SignedPermutation>(e)) return std::get<SignedPermutation>(e).hash();
    return std::get<Mat2>(e).hash() ^ 0x9e3779b97f4a7c15ull;
}

std::vector<GroupElement> generate_subgroup(const GroupElement& id,
                                            const std::vector<GroupElement>& gens, size_t bound) {
    std::vector<GroupElement> out{id};
    ElementSet seen{id};
    for (size_t head = 0; head < out.size(); ++head) {
        GroupElement cur = out[head];
        for (const auto& g : gens) {
            GroupElement nxt = ge_mul(g, cur);
            if (seen.insert(nxt).second) {
                out.push_back(nxt);
                if (out.size() > bound)
                    throw capacity_error("generate_subgroup: bound " + std::to_string(bound) +
                                         " exceeded");
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Labels
// ---------------------------------------------------------------------------

std::string weyl_kind_name(WeylKind k) {
    switch (k) {
        case WeylKind::A: return "A";
        case WeylKind::B: return "B";
        case WeylKind::D: return "D";
        case WeylKind::G2: return "G2";
        case WeylKind::AlmostD: return "AlmostD";
        case WeylKind::Product: return "Product";
    }
    return "?";
}

std::string ClassLabel::to_string() const {
    std::string prefix = split == 0 ? "" : (split > 0 ? "s+" : "s-");
    switch (form) {
        case Form::CycleType: return prefix + mu.to_string();
        case Form::Signed: return prefix + "(" + mu.to_string() + "," + lambda.to_string() + ")";
        case Form::Named: return prefix + name;
        case Form::Tuple: {
            std::string s = prefix + "(";
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) s += ";";
                s += parts[i].to_string();
            }
            return s + ")";
        }
    }
    return "?";
}

bool ClassLabel::operator==(const ClassLabel& o) const {
    return form == o.form && split == o.split && mu == o.mu && lambda == o.lambda &&
           name == o.name && parts == o.parts;
}

// ---------------------------------------------------------------------------
// Class size helpers
// ---------------------------------------------------------------------------

namespace {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int pow_int(Int base, int e) {
    Int r = 1;
    while (e-- > 0) r *= base;
    return r;
}

// |Z_{S_n}(sigma(mu))| = prod_l l^{m_l} m_l!
Int centralizer_order_a(const Partition& mu) {
    Int z = 1;
    const auto& p = mu.parts();
    size_t i = 0;
    while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        int m = static_cast<int>(j - i);
        z *= pow_int(p[i], m) * factorial(m);
        i = j;
    }
    return z;
}

// |Z_{W(B_n)}(sigma(mu,lambda))| = prod_l (2l)^{m_l(mu)} m_l(mu)! (2l)^{m_l(lambda)} m_l(lambda)!
Int centralizer_order_b(const Partition& mu, const Partition& lambda) {
    auto half = [](const Partition& p) {
        Int z = 1;
        const auto& parts = p.parts();
        size_t i = 0;
        while (i < parts.size()) {
            size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            int m = static_cast<int>(j - i);
            z *= pow_int(2 * parts[i], m) * factorial(m);
            i = j;
        }
        return z;
    };
    return half(mu) * half(lambda);
}

std::vector<std::pair<Partition, Partition>> bipartition_scheme(int n) {
    std::vector<std::pair<Partition, Partition>> out;
    for (int a = n; a >= 0; --a)
        for (const auto& mu : enum_partitions(a))
            for (const auto& lam : enum_partitions(n - a)) out.emplace_back(mu, lam);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

namespace {
std::vector<i64> coord_root(int n, int i, int j, int sj) {
    // e_i + sj * e_j (or plain e_i when j < 0)
    std::vector<i64> v(n, 0);
    v[i] = 1;
    if (j >= 0) v[j] = sj;
    return v;
}
}  // namespace

WeylGroupPtr WeylGroup::symmetric(int n) {
    if (n < 1) throw std::invalid_argument("symmetric: n >= 1 required");
    if (n > kMaxPartitionWeight) throw capacity_error("symmetric: rank exceeds cap");
    auto W = std::shared_ptr<WeylGroup>(new WeylGroup());
    W->kind_ = WeylKind::A;
    W->ncoords_ = n;
    for (int i = 0; i + 1 < n; ++i) {
        W->gens_.emplace_back(SignedPermutation::transposition(n, i, i + 1));
        W->simple_roots_.push_back(coord_root(n, i, i + 1, -1));
    }
    W->order_ = factorial(n);
    return W;
}

WeylGroupPtr WeylGroup::type_b(int n) {
    if (n < 1) throw std::invalid_argument("type_b: n >= 1 required");
    if (n > kMaxPartitionWeight) throw capacity_error("type_b: rank exceeds cap");
    auto W = std::shared_ptr<WeylGroup>(new WeylGroup());
    W->kind_ = WeylKind::B;
    W->ncoords_ = n;
    for (int i = 0; i + 1 < n; ++i) {
        W->gens_.emplace_back(SignedPermutation::transposition(n, i, i + 1));
        W->simple_roots_.push_back(coord_root(n, i, i + 1, -1));
    }
    W->gens_.emplace_back(SignedPermutation::sign_change(n, n - 1));
    W->simple_roots_.push_back(coord_root(n, n - 1, -1, 0));
    W->order_ = pow_int(2, n) * factorial(n);
    return W;
}

WeylGroupPtr WeylGroup::type_d(int n) {
    if (n < 1) throw std::invalid_argument("type_d: n >= 1 required");
    if (n > kMaxPartitionWeight) throw capacity_error("type_d: rank exceeds cap");
    auto W = std::shared_ptr<WeylGroup>(new WeylGroup());
    W->kind_ = WeylKind::D;
    W->ncoords_ = n;
    for (int i = 0; i + 1 < n; ++i) {
        W->gens_.emplace_back(SignedPermutation::transposition(n, i, i + 1));
        W->simple_roots_.push_back(coord_root(n, i, i + 1, -1));
    }
    if (n >= 2) {
        // s_{e_{n-1}+e_n}: swap last two coordinates with both signs flipped
        SignedPermutation t = SignedPermutation::transposition(n, n - 2, n - 1);
        SignedPermutation e1 = SignedPermutation::sign_change(n, n - 2);
        SignedPermutation e2 = SignedPermutation::sign_change(n, n - 1);
        W->gens_.emplace_back(t * (e1 * e2));
        W->simple_roots_.push_back(coord_root(n, n - 2, n - 1, 1));
        W->order_ = pow_int(2, n - 1) * factorial(n);
    } else {
        W->order_ = 1;  // W(D_1) is trivial
    }
    return W;
}

WeylGroupPtr WeylGroup::g2() {
    auto W = std::shared_ptr<WeylGroup>(new WeylGroup());
    W->kind_ = WeylKind::G2;
    W->ncoords_ = 2;
    // Matrices of the simple reflections on the root lattice (basis = simple roots):
    // s1(e1) = -e1, s1(e2) = e2 + 3 e1; s2(e1) = e1 + e2, s2(e2) = -e2.
    W->gens_.emplace_back(Mat2{{-1, 3, 0, 1}});
    W->gens_.emplace_back(Mat2{{1, 0, 1, -1}});
    W->simple_roots_ = {{1, 0}, {0, 1}};
    W->order_ = 12;
    return W;
}

WeylGroupPtr WeylGroup::almost_d(const std::vector<int>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("almost_d: empty block vector");
    int n = 0;
    for (int b : blocks) {
        if (b < 1) throw std::invalid_argument("almost_d: blocks must be >= 1");
        n += b;
    }
    if (n > kMaxPartitionWeight) throw capacity_error("almost_d: rank exceeds cap");
    auto W = std::shared_ptr<WeylGroup>(new WeylGroup());
    W->kind_ = WeylKind::AlmostD;
    W->ncoords_ = n;
    W->blocks_ = blocks;
    int off = 0;
    Int order = 1;
    for (int b : blocks) {
        for (int i = 0; i + 1 < b; ++i) {
            W->gens_.emplace_back(SignedPermutation::transposition(n, off + i, off + i + 1));
            W->simple_roots_.push_back(coord_root(n, off + i, off + i + 1, -1));
        }
        if (b >= 2) {
            SignedPermutation t = SignedPermutation::transposition(n, off + b - 2, off + b - 1);
            SignedPermutation e1 = SignedPermutation::sign_change(n, off + b - 2);
            SignedPermutation e2 = SignedPermutation::sign_change(n, off + b - 1);
            W->gens_.emplace_back(t * (e1 * e2));
            W->simple_roots_.push_back(coord_root(n, off + b - 2, off + b - 1, 1));
        }
        order *= pow_int(2, b) * factorial(b);
        off += b;
    }
    // Gamma: generated by eps^(k) eps^(k+1), sign changes on the last coordinate
    // of adjacent blocks.
    std::vector<int> last;
    off = 0;
    for (int b : blocks) {
        last.push_back(off + b - 1);
        off += b;
    }
    for (size_t k = 0; k + 1 < last.size(); ++k) {
        SignedPermutation g = SignedPermutation::sign_change(n, last[k]) *
                              SignedPermutation::sign_change(n, last[k + 1]);
        W->gamma_gens_.emplace_back(g);
        W->gens_.emplace_back(g);
    }
    W->order_ = order / 2;  // index-2 subgroup of the product of B's
    return W;
}

WeylGroupPtr WeylGroup::product(const std::vector<WeylGroupPtr>& factors) {
    if (factors.empty()) throw std::invalid_argument("product: no factors");
    if (factors.size() == 1) return factors[0];
    auto W = std::shared_ptr<WeylGroup>(new WeylGroup());
    W->kind_ = WeylKind::Product;
    W->factors_ = factors;
    int off = 0;
    Int order = 1;
    for (const auto& f : factors) {
        if (f->kind() == WeylKind::G2 || f->kind() == WeylKind::Product)
            throw std::invalid_argument("product: factors must be signed-permutation kinds");
        W->factor_offsets_.push_back(off);
        off += f->ncoords();
        order *= f->order();
    }
    W->ncoords_ = off;
    W->order_ = order;
    int fo = 0;
    for (const auto& f : factors) {
        for (const auto& g : f->generators()) {
            const auto& sp = std::get<SignedPermutation>(g);
            std::vector<int> img(W->ncoords_), sgn(W->ncoords_, 1);
            for (int i = 0; i < W->ncoords_; ++i) img[i] = i;
            for (int i = 0; i < sp.n(); ++i) {
                img[fo + i] = fo + sp.img()[i];
                sgn[fo + i] = sp.sgn()[i];
            }
            W->gens_.emplace_back(SignedPermutation(std::move(img), std::move(sgn)));
        }
        for (const auto& r : f->simple_roots()) {
            std::vector<i64> v(W->ncoords_, 0);
            for (size_t i = 0; i < r.size(); ++i) v[fo + i] = r[i];
            W->simple_roots_.push_back(std::move(v));
        }
        fo += f->ncoords();
    }
    return W;
}

WeylGroupPtr WeylGroup::build(const std::string& kind, const std::vector<int>& n) {
    if (kind == "AlmostD") return almost_d(n);
    if (n.size() != 1) throw std::invalid_argument("build: kind " + kind + " takes a single rank");
    if (kind == "A" || kind == "S") return symmetric(n[0]);
    if (kind == "B" || kind == "C") return type_b(n[0]);
    if (kind == "D") return type_d(n[0]);
    if (kind == "G2") return g2();
    throw std::invalid_argument("build: unknown kind " + kind);
}

GroupElement WeylGroup::identity() const {
    if (kind_ == WeylKind::G2) return Mat2::identity();
    return SignedPermutation::identity(ncoords_);
}

std::string WeylGroup::name() const {
    std::ostringstream os;
    switch (kind_) {
        case WeylKind::A: os << "S" << ncoords_; break;
        case WeylKind::B: os << "B" << ncoords_; break;
        case WeylKind::D: os << "D" << ncoords_; break;
        case WeylKind::G2: os << "G2"; break;
        case WeylKind::AlmostD: {
            os << "AlmostD(";
            for (size_t i = 0; i < blocks_.size(); ++i) os << (i ? "," : "") << blocks_[i];
            os << ")";
            break;
        }
        case WeylKind::Product: {
            for (size_t i = 0; i < factors_.size(); ++i) os << (i ? "x" : "") << factors_[i]->name();
            break;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Conjugacy classes
// ---------------------------------------------------------------------------

void WeylGroup::build_classes() const {
    if (!classes_.empty()) return;
    std::vector<ConjClass> out;
    switch (kind_) {
        case WeylKind::A: {
            for (const auto& mu : enum_partitions(ncoords_)) {
                ClassLabel l;
                l.form = ClassLabel::Form::CycleType;
                l.mu = mu;
                out.push_back({l, perm_from_partition(mu), factorial(ncoords_) / centralizer_order_a(mu)});
            }
            break;
        }
        case WeylKind::B: {
            for (const auto& [mu, lam] : bipartition_scheme(ncoords_)) {
                ClassLabel l;
                l.form = ClassLabel::Form::Signed;
                l.mu = mu;
                l.lambda = lam;
                out.push_back({l, sigma_bipartition(mu, lam), order_ / centralizer_order_b(mu, lam)});
            }
            break;
        }
        case WeylKind::D: {
            for (const auto& [mu, lam] : bipartition_scheme(ncoords_)) {
                if (lam.length() % 2 != 0) continue;
                Int bsize = (pow_int(2, ncoords_) * factorial(ncoords_)) / centralizer_order_b(mu, lam);
                if (lam.empty() && !mu.empty() && mu.all_parts_even()) {
                    ClassLabel l;
                    l.form = ClassLabel::Form::Signed;
                    l.mu = mu;
                    l.lambda = lam;
                    l.split = 1;
                    out.push_back({l, sigma_bipartition(mu, lam), bsize / 2});
                    l.split = -1;
                    out.push_back({l, sigma_double_prime(mu), bsize / 2});
                } else {
                    ClassLabel l;
                    l.form = ClassLabel::Form::Signed;
                    l.mu = mu;
                    l.lambda = lam;
                    out.push_back({l, sigma_bipartition(mu, lam), bsize});
                }
            }
            break;
        }
        case WeylKind::G2: {
            Mat2 s1 = std::get<Mat2>(gens_[0]), s2 = std::get<Mat2>(gens_[1]);
            Mat2 r = s1 * s2;                 // rotation of order 6
            Mat2 r2 = r * r, r3 = r2 * r;
            auto named = [](const std::string& n) {
                ClassLabel l;
                l.form = ClassLabel::Form::Named;
                l.name = n;
                return l;
            };
            out.push_back({named("e"), Mat2::identity(), 1});
            out.push_back({named("s1"), s1, 3});
            out.push_back({named("s2"), s2, 3});
            out.push_back({named("rot_pi"), r3, 1});
            out.push_back({named("rot_2pi/3"), r2, 2});
            out.push_back({named("rot_pi/3"), r, 2});
            break;
        }
        case WeylKind::AlmostD: {
            // Per-block bipartition labels with an even total number of
            // negative cycles; all-even positive labels split in two.
            std::vector<std::vector<std::pair<Partition, Partition>>> schemes;
            for (int b : blocks_) schemes.push_back(bipartition_scheme(b));
            std::vector<int> idx(blocks_.size(), 0);
            auto emit = [&](const std::vector<std::pair<Partition, Partition>>& choice) {
                int neg_parts = 0;
                bool all_even = true;
                for (const auto& [mu, lam] : choice) {
                    neg_parts += lam.length();
                    if (!lam.empty() || !mu.all_parts_even()) all_even = false;
                }
                if (neg_parts % 2 != 0) return;
                ClassLabel l;
                l.form = ClassLabel::Form::Tuple;
                Int bsize = 1;
                std::vector<SignedPermutation> reps;
                for (const auto& [mu, lam] : choice) {
                    ClassLabel p;
                    p.form = ClassLabel::Form::Signed;
                    p.mu = mu;
                    p.lambda = lam;
                    l.parts.push_back(p);
                    bsize *= (pow_int(2, mu.weight() + lam.weight()) *
                              factorial(mu.weight() + lam.weight())) /
                             centralizer_order_b(mu, lam);
                    reps.push_back(sigma_bipartition(mu, lam));
                }
                SignedPermutation rep = block_sum(reps);
                if (all_even) {
                    ClassLabel lp = l;
                    lp.split = 1;
                    out.push_back({lp, rep, bsize / 2});
                    SignedPermutation eps =
                        SignedPermutation::sign_change(ncoords_, ncoords_ - 2) *
                        SignedPermutation::sign_change(ncoords_, ncoords_ - 1);
                    ClassLabel lm = l;
                    lm.split = -1;
                    out.push_back({lm, rep * eps, bsize / 2});
                } else {
                    out.push_back({l, rep, bsize});
                }
            };
            std::vector<std::pair<Partition, Partition>> choice(blocks_.size());
            auto rec = [&](auto&& self, size_t d) -> void {
                if (d == blocks_.size()) {
                    emit(choice);
                    return;
                }
                for (const auto& pr : schemes[d]) {
                    choice[d] = pr;
                    self(self, d + 1);
                }
            };
            rec(rec, 0);
            break;
        }
        case WeylKind::Product: {
            std::vector<const std::vector<ConjClass>*> fc;
            for (const auto& f : factors_) fc.push_back(&f->classes());
            std::vector<int> idx(factors_.size(), 0);
            auto rec = [&](auto&& self, size_t d) -> void {
                if (d == factors_.size()) {
                    ClassLabel l;
                    l.form = ClassLabel::Form::Tuple;
                    Int size = 1;
                    std::vector<SignedPermutation> reps;
                    for (size_t i = 0; i < factors_.size(); ++i) {
                        const ConjClass& c = (*fc[i])[idx[i]];
                        l.parts.push_back(c.label);
                        size *= c.size;
                        reps.push_back(std::get<SignedPermutation>(c.rep));
                    }
                    out.push_back({l, block_sum(reps), size});
                    return;
                }
                for (size_t i = 0; i < fc[d]->size(); ++i) {
                    idx[d] = static_cast<int>(i);
                    self(self, d + 1);
                }
            };
            rec(rec, 0);
            break;
        }
    }
    classes_ = std::move(out);
    for (size_t i = 0; i < classes_.size(); ++i)
        label_index_[classes_[i].label.to_string()] = static_cast<int>(i);
}

const std::vector<ConjClass>& WeylGroup::classes() const {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex_);
    build_classes();
    return classes_;
}

const ElementSet& WeylGroup::split_orbit(const Partition& mu, bool primed) const {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex_);
    std::string key = (primed ? "-" : "+") + mu.to_string();
    auto it = split_orbits_.find(key);
    if (it != split_orbits_.end()) return it->second;
    GroupElement rep = primed ? GroupElement(sigma_double_prime(mu))
                              : GroupElement(sigma_bipartition(mu, Partition{}));
    ElementSet orbit{rep};
    std::deque<GroupElement> queue{rep};
    while (!queue.empty()) {
        GroupElement cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens_) {
            GroupElement conj = ge_mul(ge_mul(g, cur), ge_inv(g));
            if (orbit.insert(conj).second) queue.push_back(conj);
        }
    }
    return split_orbits_.emplace(key, std::move(orbit)).first->second;
}

int WeylGroup::class_of(const GroupElement& w) const {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex_);
    build_classes();
    auto lookup = [&](const ClassLabel& l) {
        auto it = label_index_.find(l.to_string());
        if (it == label_index_.end())
            throw std::invalid_argument("class_of: element is not in the group (label " +
                                        l.to_string() + ")");
        return it->second;
    };
    switch (kind_) {
        case WeylKind::A: {
            const auto& sp = std::get<SignedPermutation>(w);
            for (int s : sp.sgn())
                if (s != 1) throw std::invalid_argument("class_of: signs present in type A");
            ClassLabel l;
            l.form = ClassLabel::Form::CycleType;
            l.mu = sp.cycle_type();
            return lookup(l);
        }
        case WeylKind::B: {
            auto [mu, lam] = std::get<SignedPermutation>(w).signed_cycle_type();
            ClassLabel l;
            l.form = ClassLabel::Form::Signed;
            l.mu = mu;
            l.lambda = lam;
            return lookup(l);
        }
        case WeylKind::D: {
            const auto& sp = std::get<SignedPermutation>(w);
            if (sp.sign_flip_count() % 2 != 0)
                throw std::invalid_argument("class_of: odd sign count in type D");
            auto [mu, lam] = sp.signed_cycle_type();
            ClassLabel l;
            l.form = ClassLabel::Form::Signed;
            l.mu = mu;
            l.lambda = lam;
            if (lam.empty() && !mu.empty() && mu.all_parts_even()) {
                l.split = split_orbit(mu, false).count(w) ? 1 : -1;
                if (l.split < 0 && !split_orbit(mu, true).count(w))
                    throw std::logic_error("class_of: split class membership failed");
            }
            return lookup(l);
        }
        case WeylKind::G2: {
            const Mat2& m = std::get<Mat2>(w);
            i64 t = m.trace(), d = m.det();
            if (d == 1) {
                ClassLabel l;
                l.form = ClassLabel::Form::Named;
                l.name = t == 2 ? "e" : t == 1 ? "rot_pi/3" : t == -1 ? "rot_2pi/3" : "rot_pi";
                if (t != 2 && t != 1 && t != -1 && t != -2)
                    throw std::invalid_argument("class_of: not a G2 element");
                return lookup(l);
            }
            // reflection: decide s1-class vs s2-class by orbit membership
            std::string key = "g2s1";
            auto it = split_orbits_.find(key);
            if (it == split_orbits_.end()) {
                ElementSet orbit{gens_[0]};
                std::deque<GroupElement> queue{gens_[0]};
                while (!queue.empty()) {
                    GroupElement cur = queue.front();
                    queue.pop_front();
                    for (const auto& g : gens_) {
                        GroupElement conj = ge_mul(ge_mul(g, cur), ge_inv(g));
                        if (orbit.insert(conj).second) queue.push_back(conj);
                    }
                }
                it = split_orbits_.emplace(key, std::move(orbit)).first;
            }
            ClassLabel l;
            l.form = ClassLabel::Form::Named;
            l.name = it->second.count(w) ? "s1" : "s2";
            return lookup(l);
        }
        case WeylKind::AlmostD: {
            const auto& sp = std::get<SignedPermutation>(w);
            ClassLabel l;
            l.form = ClassLabel::Form::Tuple;
            int off = 0;
            bool all_even = true;
            for (int b : blocks_) {
                std::vector<int> img(b), sgn(b);
                for (int i = 0; i < b; ++i) {
                    int to = sp.img()[off + i];
                    if (to < off || to >= off + b)
                        throw std::invalid_argument("class_of: element does not preserve blocks");
                    img[i] = to - off;
                    sgn[i] = sp.sgn()[off + i];
                }
                auto [mu, lam] = SignedPermutation(img, sgn).signed_cycle_type();
                if (!lam.empty() || !mu.all_parts_even()) all_even = false;
                ClassLabel p;
                p.form = ClassLabel::Form::Signed;
                p.mu = mu;
                p.lambda = lam;
                l.parts.push_back(p);
                off += b;
            }
            if (all_even) {
                // membership in the conjugation orbit of the unprimed representative
                std::string base = l.to_string();
                auto orbit_of = [&](int split_tag) -> const ElementSet& {
                    std::string key = base + (split_tag > 0 ? "+" : "-");
                    auto it = split_orbits_.find(key);
                    if (it != split_orbits_.end()) return it->second;
                    ClassLabel probe = l;
                    probe.split = split_tag;
                    int ci = label_index_.at(probe.to_string());
                    GroupElement rep = classes_[ci].rep;
                    ElementSet orbit{rep};
                    std::deque<GroupElement> queue{rep};
                    while (!queue.empty()) {
                        GroupElement cur = queue.front();
                        queue.pop_front();
                        for (const auto& g : gens_) {
                            GroupElement conj = ge_mul(ge_mul(g, cur), ge_inv(g));
                            if (orbit.insert(conj).second) queue.push_back(conj);
                        }
                    }
                    return split_orbits_.emplace(key, std::move(orbit)).first->second;
                };
                l.split = orbit_of(1).count(w) ? 1 : -1;
                if (l.split < 0 && !orbit_of(-1).count(w))
                    throw std::logic_error("class_of: split class membership failed");
            }
            return lookup(l);
        }
        case WeylKind::Product: {
            const auto& sp = std::get<SignedPermutation>(w);
            ClassLabel l;
            l.form = ClassLabel::Form::Tuple;
            for (size_t f = 0; f < factors_.size(); ++f) {
                int off = factor_offsets_[f], b = factors_[f]->ncoords();
                std::vector<int> img(b), sgn(b);
                for (int i = 0; i < b; ++i) {
                    int to = sp.img()[off + i];
                    if (to < off || to >= off + b)
                        throw std::invalid_argument("class_of: element does not preserve factors");
                    img[i] = to - off;
                    sgn[i] = sp.sgn()[off + i];
                }
                int ci = factors_[f]->class_of(SignedPermutation(img, sgn));
                l.parts.push_back(factors_[f]->classes()[ci].label);
            }
            return lookup(l);
        }
    }
    throw std::logic_error("class_of: unreachable");
}

namespace {
size_t g_enum_capacity = WeylGroup::kEnumBound;
size_t g_centralizer_capacity = WeylGroup::kCentralizerBound;
}  // namespace

void WeylGroup::set_capacity(size_t enum_bound, size_t centralizer_bound) {
    g_enum_capacity = enum_bound;
    g_centralizer_capacity = centralizer_bound;
}
size_t WeylGroup::enum_capacity() { return g_enum_capacity; }
size_t WeylGroup::centralizer_capacity() { return g_centralizer_capacity; }

const std::vector<GroupElement>& WeylGroup::elements(size_t bound) const {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex_);
    if (bound == 0) bound = g_enum_capacity;
    if (!elements_.empty()) return elements_;
    if (order_ > Int(static_cast<unsigned long long>(bound)))
        throw capacity_error("elements: group order " + order_.str() + " exceeds bound");
    elements_ = generate_subgroup(identity(), gens_, bound);
    if (Int(elements_.size()) != order_)
        throw std::logic_error("elements: enumeration does not match computed order");
    return elements_;
}

// ---------------------------------------------------------------------------
// Ellipticity
// ---------------------------------------------------------------------------

bool WeylGroup::is_elliptic(const GroupElement& w) const {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex_);
    if (root_rank_ < 0) {
        int k = static_cast<int>(simple_roots_.size());
        root_span_ = IntMatrix(ncoords_, k);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < ncoords_; ++i) root_span_.at(i, j) = simple_roots_[j][i];
        root_rank_ = root_span_.rank();
    }
    if (root_rank_ == 0) return true;
    IntMatrix M = ge_matrix(w);
    IntMatrix MI = M - IntMatrix::identity(ncoords_);
    return (MI * root_span_).rank() == root_rank_;
}

int WeylGroup::elliptic_class_count() const {
    int count = 0;
    for (const auto& c : classes())
        if (is_elliptic(c.rep)) ++count;
    return count;
}

// ---------------------------------------------------------------------------
// Centralizer via orbit-stabilizer
// ---------------------------------------------------------------------------

Centralizer WeylGroup::centralizer(const GroupElement& w, size_t bound) const {
    if (bound == 0) bound = g_centralizer_capacity;
    int ci = class_of(w);
    Int zorder = exact_div(order_, classes()[ci].size);
    if (zorder > Int(static_cast<unsigned long long>(bound)))
        throw capacity_error("centralizer: order " + zorder.str() + " exceeds bound");

    // Conjugation orbit with a transversal; Schreier generators stabilize w.
    std::unordered_map<GroupElement, GroupElement, GroupElementHash, GroupElementEq> transversal;
    transversal.emplace(w, identity());
    std::deque<GroupElement> queue{w};
    std::vector<GroupElement> schreier;
    ElementSet sgens_seen;
    while (!queue.empty()) {
        GroupElement x = queue.front();
        queue.pop_front();
        GroupElement tx = transversal.at(x);
        for (const auto& s : gens_) {
            GroupElement y = ge_mul(ge_mul(s, x), ge_inv(s));
            auto it = transversal.find(y);
            if (it == transversal.end()) {
                transversal.emplace(y, ge_mul(s, tx));
                queue.push_back(y);
            } else {
                GroupElement gen = ge_mul(ge_inv(it->second), ge_mul(s, tx));
                if (!ge_is_identity(gen) && sgens_seen.insert(gen).second) schreier.push_back(gen);
            }
        }
    }
    Centralizer z;
    z.order = zorder;
    z.generators = schreier;
    z.elements = generate_subgroup(identity(), schreier, bound);
    if (Int(z.elements.size()) != zorder)
        throw std::logic_error("centralizer: Schreier enumeration mismatch");
    return z;
}

// ---------------------------------------------------------------------------
// Subgroup conjugacy classes and fusion
// ---------------------------------------------------------------------------

SubgroupClasses subgroup_classes(const std::vector<GroupElement>& elements,
                                 const std::vector<GroupElement>& gens) {
    SubgroupClasses out;
    ElementSet members(elements.begin(), elements.end());
    for (const auto& e : elements) {
        if (out.elem_class.count(e)) continue;
        int idx = static_cast<int>(out.reps.size());
        out.reps.push_back(e);
        std::deque<GroupElement> queue{e};
        out.elem_class.emplace(e, idx);
        Int size = 1;
        while (!queue.empty()) {
            GroupElement cur = queue.front();
            queue.pop_front();
            for (const auto& g : gens) {
                GroupElement conj = ge_mul(ge_mul(g, cur), ge_inv(g));
                if (!members.count(conj))
                    throw std::logic_error("subgroup_classes: set not closed under conjugation");
                if (out.elem_class.emplace(conj, idx).second) {
                    queue.push_back(conj);
                    size += 1;
                }
            }
        }
        out.sizes.push_back(size);
    }
    return out;
}

std::vector<int> class_fusion(const WeylGroup& W, const SubgroupClasses& sub) {
    std::vector<int> fusion(sub.reps.size());
    for (size_t i = 0; i < sub.reps.size(); ++i) fusion[i] = W.class_of(sub.reps[i]);
    return fusion;
}

// ---------------------------------------------------------------------------
// Standard parabolic subgroups
// ---------------------------------------------------------------------------

namespace {

// Reflection for a root vector of the classical shapes e_i - e_j, e_i + e_j, e_i.
SignedPermutation reflection_for_root(int n, const std::vector<i64>& root) {
    int i = -1, j = -1;
    for (int k = 0; k < n; ++k)
        if (root[k] != 0) {
            if (i < 0) i = k;
            else j = k;
        }
    if (j < 0) return SignedPermutation::sign_change(n, i);
    if (root[i] * root[j] < 0) return SignedPermutation::transposition(n, i, j);
    return SignedPermutation::transposition(n, i, j) *
           (SignedPermutation::sign_change(n, i) * SignedPermutation::sign_change(n, j));
}

}  // namespace

void WeylGroup::build_parabolics() const {
    if (!parabolics_.empty()) return;
    const int nroots = static_cast<int>(simple_roots_.size());
    if (nroots > 16) throw capacity_error("standard_parabolics: too many simple roots");

    struct Candidate {
        ParabolicSubgroup p;
        std::string assoc_key;             // combinatorial key when available
        std::multiset<std::string> fused;  // fused-class multiset (generic filter)
    };
    std::vector<Candidate> cands;

    std::vector<GroupElement> gamma_elements;
    if (kind_ == WeylKind::AlmostD)
        gamma_elements = generate_subgroup(identity(), gamma_gens_, size_t(1) << blocks_.size());

    auto contains = [](const std::vector<int>& v, int x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    // Components of consecutive root indices within [lo, hi).
    auto chain_components = [&](const std::vector<int>& subset, int lo, int hi) {
        std::vector<std::pair<int, int>> comps;  // [start, end) of root indices
        int k = lo;
        while (k < hi) {
            if (!contains(subset, k)) { ++k; continue; }
            int s = k;
            while (k < hi && contains(subset, k)) ++k;
            comps.emplace_back(s, k);
        }
        return comps;
    };

    // Combinatorial association key + coordinate blocks for an A- or B-kind
    // subset (root indices local to the factor, coordinates offset by `coff`).
    auto ab_key = [&](WeylKind kind, int n, const std::vector<int>& subset, int coff,
                      std::vector<CatalogBlock>& blocks) -> std::string {
        int nr = (kind == WeylKind::A) ? n - 1 : n;
        std::ostringstream os;
        int btail = 0;
        if (kind == WeylKind::B && contains(subset, nr - 1)) {
            int r = nr - 1;
            while (r >= 0 && contains(subset, r)) --r;
            btail = nr - 1 - r;
        }
        int alimit = (kind == WeylKind::B) ? (btail > 0 ? nr - btail - 1 : nr - 1) : nr;
        auto comps = chain_components(subset, 0, alimit);
        std::vector<int> parts;
        for (auto [s, e] : comps) parts.push_back(e - s + 1);
        std::sort(parts.rbegin(), parts.rend());
        os << weyl_kind_name(kind) << btail << ":";
        for (int x : parts) os << x << ",";
        for (auto [s, e] : comps) blocks.push_back({WeylKind::A, e - s + 1, coff + s});
        if (btail > 0) blocks.push_back({WeylKind::B, btail, coff + n - btail});
        return os.str();
    };

    for (int mask = 0; mask < (1 << nroots); ++mask) {
        Candidate c;
        ParabolicSubgroup& p = c.p;
        for (int r = 0; r < nroots; ++r)
            if (mask & (1 << r)) p.subset.push_back(r);

        for (int r : p.subset) {
            if (kind_ == WeylKind::G2)
                p.generators.push_back(gens_[r]);
            else
                p.generators.emplace_back(reflection_for_root(ncoords_, simple_roots_[r]));
        }
        if (kind_ == WeylKind::AlmostD) {
            for (const auto& g : gamma_elements) {
                if (ge_is_identity(g)) continue;
                const auto& sp = std::get<SignedPermutation>(g);
                bool stab = true;
                for (int r : p.subset) {
                    std::vector<i64> im = sp.apply(simple_roots_[r]);
                    bool found = false;
                    for (int r2 : p.subset)
                        if (simple_roots_[r2] == im) { found = true; break; }
                    if (!found) { stab = false; break; }
                }
                if (stab) p.generators.push_back(g);
            }
        }

        p.elements = generate_subgroup(identity(), p.generators, g_enum_capacity);
        p.order = Int(p.elements.size());
        p.is_whole = (p.order == order_);

        switch (kind_) {
            case WeylKind::A:
            case WeylKind::B:
                c.assoc_key = ab_key(kind_, ncoords_, p.subset, 0, p.blocks);
                break;
            case WeylKind::D: {
                bool tip1 = contains(p.subset, nroots - 2);  // e_{n-1}-e_n
                bool tip2 = contains(p.subset, nroots - 1);  // e_{n-1}+e_n
                if (tip1 && tip2) {
                    int r = nroots - 3;
                    while (r >= 0 && contains(p.subset, r)) --r;
                    int dsize = (nroots - 3 - r) + 2;
                    auto comps = chain_components(p.subset, 0, std::max(r, 0));
                    for (auto [s, e] : comps) p.blocks.push_back({WeylKind::A, e - s + 1, s});
                    p.blocks.push_back({WeylKind::D, dsize, ncoords_ - dsize});
                } else if (!tip2) {
                    auto comps = chain_components(p.subset, 0, nroots - 1);
                    for (auto [s, e] : comps) p.blocks.push_back({WeylKind::A, e - s + 1, s});
                } else {
                    p.generic = true;  // lone fork tip: not a coordinate-block product
                }
                break;
            }
            case WeylKind::Product: {
                bool keyed = true;
                std::ostringstream key;
                int rstart = 0;
                for (size_t fi = 0; fi < factors_.size(); ++fi) {
                    const auto& f = factors_[fi];
                    int rcount = static_cast<int>(f->simple_roots().size());
                    std::vector<int> local;
                    for (int r : p.subset)
                        if (r >= rstart && r < rstart + rcount) local.push_back(r - rstart);
                    rstart += rcount;
                    if (f->kind() == WeylKind::A || f->kind() == WeylKind::B) {
                        key << fi << "|"
                            << ab_key(f->kind(), f->ncoords(), local, factor_offsets_[fi], p.blocks);
                    } else {
                        keyed = false;
                        break;
                    }
                }
                if (keyed) {
                    c.assoc_key = key.str();
                } else {
                    p.generic = true;
                    p.blocks.clear();
                }
                break;
            }
            default:
                p.generic = true;
                break;
        }
        cands.push_back(std::move(c));
    }

    // Fused-class multisets for candidates without a combinatorial key.
    for (auto& c : cands) {
        if (!c.assoc_key.empty()) continue;
        for (const auto& e : c.p.elements)
            c.fused.insert(classes()[class_of(e)].label.to_string());
    }

    std::vector<Candidate> kept;
    for (auto& c : cands) {
        bool dup = false;
        for (auto& k : kept) {
            if (c.p.order != k.p.order) continue;
            if (!c.assoc_key.empty() && !k.assoc_key.empty()) {
                if (c.assoc_key == k.assoc_key) { dup = true; break; }
                continue;
            }
            if (c.assoc_key.empty() != k.assoc_key.empty()) continue;
            if (c.fused != k.fused) continue;
            // Cheap filter passed; confirm with an explicit conjugator search.
            ElementSet kset(k.p.elements.begin(), k.p.elements.end());
            for (const auto& g : elements(200000)) {
                bool all = true;
                for (const auto& cg : c.p.generators)
                    if (!kset.count(ge_mul(ge_mul(g, cg), ge_inv(g)))) { all = false; break; }
                if (all) { dup = true; break; }
            }
            if (dup) break;
        }
        if (!dup) kept.push_back(std::move(c));
    }

    std::stable_sort(kept.begin(), kept.end(), [](const Candidate& a, const Candidate& b) {
        return a.p.is_whole < b.p.is_whole;
    });
    for (auto& c : kept) {
        std::ostringstream os;
        os << "P{";
        for (size_t i = 0; i < c.p.subset.size(); ++i) os << (i ? "," : "") << c.p.subset[i];
        os << "}";
        c.p.label = os.str();
        parabolics_.push_back(std::move(c.p));
    }
}

const std::vector<ParabolicSubgroup>& WeylGroup::standard_parabolics() const {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex_);
    build_parabolics();
    return parabolics_;
}

}  // namespace hkt
