#include "hkt/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hkt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        weight_ += parts_[i];
    }
    if (weight_ > kMaxPartitionWeight)
        throw capacity_error("Partition: weight exceeds cap of 64");
}

int Partition::b() const {
    int count = 0;
    for (size_t i = 0; i < parts_.size(); ++i)
        if (i == 0 || parts_[i] != parts_[i - 1]) ++count;
    return count;
}

int Partition::gcd() const {
    if (parts_.empty()) throw std::domain_error("gcd of the empty partition is undefined");
    i64 g = 0;
    for (int p : parts_) g = gcd_ll(g, p);
    return static_cast<int>(g);
}

Partition Partition::dual() const {
    if (parts_.empty()) return Partition{};
    std::vector<int> d(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++d[j];
    return Partition(std::move(d));
}

int Partition::multiplicity(int l) const {
    int count = 0;
    for (int p : parts_)
        if (p == l) ++count;
    return count;
}

bool Partition::all_parts_even() const {
    for (int p : parts_)
        if (p % 2 != 0) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

namespace {

void enum_rec(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        enum_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enum_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enum_partitions: n must be nonnegative");
    if (n > kMaxPartitionWeight) throw capacity_error("enum_partitions: weight exceeds cap of 64");
    std::vector<Partition> out;
    std::vector<int> cur;
    enum_rec(n, n, cur, out);
    return out;
}

Int partition_count(int n) {
    if (n < 0) return 0;
    // p_max(n, k): partitions of n with parts <= k
    std::vector<std::vector<Int>> t(n + 1, std::vector<Int>(n + 1, 0));
    for (int k = 0; k <= n; ++k) t[0][k] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
            t[m][k] = t[m][k - 1];
            if (m >= k) t[m][k] += t[m - k][k];
        }
    return t[n][n];
}

Partition power_partition(const Partition& mu, int r) {
    if (r <= 0) throw std::invalid_argument("power_partition: r must be positive");
    std::vector<int> parts;
    const auto& p = mu.parts();
    size_t i = 0;
    while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        int mult = static_cast<int>(j - i);
        if (mult % r != 0)
            throw std::invalid_argument("power_partition: r does not divide the multiplicity of part " +
                                        std::to_string(p[i]));
        for (int c = 0; c < mult / r; ++c) parts.push_back(p[i] * r);
        i = j;
    }
    return Partition(std::move(parts));
}

Int count_multipartitions(int k, int n) {
    if (k < 1) throw std::invalid_argument("count_multipartitions: k must be >= 1");
    if (n < 0) throw std::invalid_argument("count_multipartitions: n must be nonnegative");
    if (n > kMaxPartitionWeight) throw capacity_error("count_multipartitions: weight exceeds cap");
    std::vector<Int> p(n + 1);
    for (int m = 0; m <= n; ++m) p[m] = partition_count(m);
    std::vector<Int> acc(n + 1, 0);
    acc[0] = 1;
    for (int step = 0; step < k; ++step) {
        std::vector<Int> next(n + 1, 0);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b) next[a + b] += acc[a] * p[b];
        acc = std::move(next);
    }
    return acc[n];
}

i64 euler_phi(i64 m) {
    if (m <= 0) throw std::invalid_argument("euler_phi: m must be positive");
    i64 result = m;
    for (i64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

Multipartition::Multipartition(std::vector<Partition> comps) : comps_(std::move(comps)) {
    for (const auto& c : comps_) total_ += c.weight();
    if (total_ > kMaxPartitionWeight) throw capacity_error("Multipartition: weight exceeds cap");
}

std::string Multipartition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (i) os << ',';
        os << comps_[i].to_string();
    }
    os << ')';
    return os.str();
}

std::vector<Multipartition> enum_multipartitions(int k, int n) {
    if (k < 1) throw std::invalid_argument("enum_multipartitions: k must be >= 1");
    std::vector<Multipartition> out;
    std::vector<Partition> cur;
    // Recursive product over components; weights split in all ways.
    auto rec = [&](auto&& self, int idx, int rem) -> void {
        if (idx == k - 1) {
            for (const auto& p : enum_partitions(rem)) {
                cur.push_back(p);
                out.emplace_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (int w = rem; w >= 0; --w)
            for (const auto& p : enum_partitions(w)) {
                cur.push_back(p);
                self(self, idx + 1, rem - w);
                cur.pop_back();
            }
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace hkt
