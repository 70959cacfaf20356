#include "hkt/signed_perm.hpp"

#include <algorithm>
#include <sstream>

namespace hkt {

SignedPermutation::SignedPermutation(std::vector<int> img, std::vector<int> sgn)
    : img_(std::move(img)), sgn_(std::move(sgn)) {
    if (img_.size() != sgn_.size())
        throw std::invalid_argument("SignedPermutation: image/sign length mismatch");
    std::vector<char> seen(img_.size(), 0);
    for (size_t i = 0; i < img_.size(); ++i) {
        if (img_[i] < 0 || img_[i] >= static_cast<int>(img_.size()) || seen[img_[i]])
            throw std::invalid_argument("SignedPermutation: image is not a bijection");
        seen[img_[i]] = 1;
        if (sgn_[i] != 1 && sgn_[i] != -1)
            throw std::invalid_argument("SignedPermutation: signs must be +-1");
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> img(n), sgn(n, 1);
    for (int i = 0; i < n; ++i) img[i] = i;
    return SignedPermutation(std::move(img), std::move(sgn));
}

SignedPermutation SignedPermutation::sign_change(int n, int i) {
    auto e = identity(n);
    std::vector<int> img = e.img_, sgn = e.sgn_;
    sgn[i] = -1;
    return SignedPermutation(std::move(img), std::move(sgn));
}

SignedPermutation SignedPermutation::transposition(int n, int i, int j) {
    auto e = identity(n);
    std::vector<int> img = e.img_, sgn = e.sgn_;
    std::swap(img[i], img[j]);
    return SignedPermutation(std::move(img), std::move(sgn));
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
    if (n() != o.n()) throw std::invalid_argument("SignedPermutation: rank mismatch");
    // (v*w)(e_i) = v(w(e_i)) with v = *this, w = o.
    std::vector<int> img(n()), sgn(n());
    for (int i = 0; i < n(); ++i) {
        img[i] = img_[o.img_[i]];
        sgn[i] = o.sgn_[i] * sgn_[o.img_[i]];
    }
    return SignedPermutation(std::move(img), std::move(sgn));
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> img(n()), sgn(n());
    for (int i = 0; i < n(); ++i) {
        img[img_[i]] = i;
        sgn[img_[i]] = sgn_[i];
    }
    return SignedPermutation(std::move(img), std::move(sgn));
}

bool SignedPermutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (img_[i] != i || sgn_[i] != 1) return false;
    return true;
}

std::pair<Partition, Partition> SignedPermutation::signed_cycle_type() const {
    std::vector<char> seen(n(), 0);
    std::vector<int> pos, neg;
    for (int i = 0; i < n(); ++i) {
        if (seen[i]) continue;
        int len = 0, sign = 1, j = i;
        do {
            seen[j] = 1;
            sign *= sgn_[j];
            j = img_[j];
            ++len;
        } while (j != i);
        (sign > 0 ? pos : neg).push_back(len);
    }
    std::sort(pos.rbegin(), pos.rend());
    std::sort(neg.rbegin(), neg.rend());
    return {Partition(std::move(pos)), Partition(std::move(neg))};
}

Partition SignedPermutation::cycle_type() const {
    std::vector<char> seen(n(), 0);
    std::vector<int> lens;
    for (int i = 0; i < n(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        do {
            seen[j] = 1;
            j = img_[j];
            ++len;
        } while (j != i);
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

int SignedPermutation::order() const {
    auto [pos, neg] = signed_cycle_type();
    i64 o = 1;
    for (int l : pos.parts()) o = o / gcd_ll(o, l) * l;
    for (int l : neg.parts()) o = o / gcd_ll(o, 2 * l) * (2 * l);
    return static_cast<int>(o);
}

int SignedPermutation::sign_flip_count() const {
    int c = 0;
    for (int s : sgn_)
        if (s < 0) ++c;
    return c;
}

IntMatrix SignedPermutation::matrix() const {
    IntMatrix m(n(), n());
    for (int i = 0; i < n(); ++i) m.at(img_[i], i) = sgn_[i];
    return m;
}

std::vector<i64> SignedPermutation::apply(const std::vector<i64>& x) const {
    std::vector<i64> y(n(), 0);
    for (int i = 0; i < n(); ++i) y[img_[i]] += sgn_[i] * x[i];
    return y;
}

bool SignedPermutation::operator<(const SignedPermutation& o) const {
    if (img_ != o.img_) return img_ < o.img_;
    return sgn_ < o.sgn_;
}

size_t SignedPermutation::hash() const {
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < n(); ++i) {
        h = (h ^ static_cast<size_t>(img_[i] * 2 + (sgn_[i] > 0 ? 0 : 1))) * 1099511628211ull;
    }
    return h;
}

std::string SignedPermutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n(); ++i) {
        if (i) os << ' ';
        os << (sgn_[i] > 0 ? '+' : '-') << (img_[i] + 1);
    }
    os << ']';
    return os.str();
}

SignedPermutation perm_from_partition(const Partition& mu) {
    int n = mu.weight();
    std::vector<int> img(n), sgn(n, 1);
    int off = 0;
    for (int len : mu.parts()) {
        for (int i = 0; i < len; ++i) img[off + i] = off + (i + 1) % len;
        off += len;
    }
    return SignedPermutation(std::move(img), std::move(sgn));
}

SignedPermutation sigma_prime(const Partition& lambda) {
    // eps_{I_lambda} * sigma(lambda): flip the sign on the first letter of
    // each cycle after permuting, which makes every cycle negative.
    SignedPermutation s = perm_from_partition(lambda);
    std::vector<int> img = s.img(), sgn = s.sgn();
    int off = 0;
    for (int len : lambda.parts()) {
        // flip at coordinate `off` of the image: sgn[i] flips where img[i] == off
        for (int i = off; i < off + len; ++i)
            if (img[i] == off) sgn[i] = -sgn[i];
        off += len;
    }
    return SignedPermutation(std::move(img), std::move(sgn));
}

SignedPermutation sigma_bipartition(const Partition& mu, const Partition& lambda) {
    return block_sum({perm_from_partition(mu), sigma_prime(lambda)});
}

SignedPermutation sigma_tripartition(const Partition& mu, const Partition& lambda,
                                     const Partition& rho) {
    return block_sum({perm_from_partition(mu), sigma_prime(lambda), sigma_prime(rho)});
}

SignedPermutation sigma_double_prime(const Partition& mu) {
    if (!mu.all_parts_even())
        throw std::invalid_argument("sigma_double_prime: every part must be even");
    int n = mu.weight();
    if (n < 2) throw std::invalid_argument("sigma_double_prime: weight must be >= 2");
    SignedPermutation s = perm_from_partition(mu);
    SignedPermutation eps =
        SignedPermutation::sign_change(n, n - 2) * SignedPermutation::sign_change(n, n - 1);
    return s * eps;
}

SignedPermutation block_sum(const std::vector<SignedPermutation>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.n();
    std::vector<int> img(n), sgn(n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.n(); ++i) {
            img[off + i] = off + b.img()[i];
            sgn[off + i] = b.sgn()[i];
        }
        off += b.n();
    }
    return SignedPermutation(std::move(img), std::move(sgn));
}

}  // namespace hkt
