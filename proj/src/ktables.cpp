#include "hkt/ktables.hpp"

namespace hkt {

namespace {

Int pow2(int e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    Int r = 1;
    while (e-- > 0) r *= 2;
    return r;
}

KRanks ranks_gl(int n) {
    KRanks k;
    for (const auto& mu : enum_partitions(n)) {
        k.k0 += pow2(mu.b() - 1);
        k.k1 += pow2(mu.b() - 1);
    }
    return k;
}

// SL_n and PGL_n have the same split: gcd(mu) 2^{b-2} in both degrees when
// b(mu) > 1, and gcd(mu) concentrated in degree zero when b(mu) = 1.
KRanks ranks_sl_pgl(int n) {
    KRanks k;
    for (const auto& mu : enum_partitions(n)) {
        Int g = mu.gcd();
        if (mu.b() > 1) {
            k.k0 += g * pow2(mu.b() - 2);
            k.k1 += g * pow2(mu.b() - 2);
        } else {
            k.k0 += g;
        }
    }
    return k;
}

KRanks ranks_so_odd(int n) {
    KRanks k;
    k.k0 = count_multipartitions(3, n);
    k.k1 = 0;
    return k;
}

// Lemma-style count for SO_{2n}: the odd rank counts partitions whose odd
// parts are distinct and odd in number; the even rank is the sum of four
// contributions.
KRanks ranks_so_even(int n) {
    KRanks k;
    k.special_flag = (n <= 2);
    auto odd_part_profile = [](const Partition& mu) {
        int odd_count = 0;
        bool odd_distinct = true;
        const auto& p = mu.parts();
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] % 2 == 1) {
                ++odd_count;
                if (i + 1 < p.size() && p[i + 1] == p[i]) odd_distinct = false;
            }
        }
        return std::make_pair(odd_count, odd_distinct);
    };

    for (const auto& mu : enum_partitions(n)) {
        auto [oc, dist] = odd_part_profile(mu);
        if (dist && oc % 2 == 1) k.k1 += 1;
    }

    Int even = 0;
    // bullet 1: prod (k_i + 1) over bipartitions (mu, lambda) with
    // lambda = (n)^{k_n} ... (1)^{k_1}, sum k_i positive and even
    for (int j = 1; j <= n; ++j) {
        Int mu_count = partition_count(n - j);
        for (const auto& lam : enum_partitions(j)) {
            if (lam.length() % 2 != 0) continue;
            Int prod = 1;
            const auto& p = lam.parts();
            size_t i = 0;
            while (i < p.size()) {
                size_t e = i;
                while (e < p.size() && p[e] == p[i]) ++e;
                prod *= Int(e - i + 1);
                i = e;
            }
            even += prod * mu_count;
        }
    }
    // bullet 2: twice the number of partitions with only even terms
    for (const auto& mu : enum_partitions(n))
        if (mu.all_parts_even()) even += 2;
    // bullet 3: partitions with at least one odd term
    for (const auto& mu : enum_partitions(n))
        if (!mu.all_parts_even()) even += 1;
    // bullet 4: odd terms distinct, positive even number of them
    for (const auto& mu : enum_partitions(n)) {
        auto [oc, dist] = odd_part_profile(mu);
        if (dist && oc > 0 && oc % 2 == 0) even += 1;
    }
    k.k0 = even;
    return k;
}

}  // namespace

KRanks ktheory_ranks(RootDatumKind kind, int n) {
    if (kind != RootDatumKind::G2 && n < 1)
        throw std::invalid_argument("ktheory_ranks: n >= 1 required");
    switch (kind) {
        case RootDatumKind::GL: return ranks_gl(n);
        case RootDatumKind::SL:
        case RootDatumKind::PGL: return ranks_sl_pgl(n);
        case RootDatumKind::SOodd:
        case RootDatumKind::Sp: return ranks_so_odd(n);
        case RootDatumKind::SOeven: return ranks_so_even(n);
        case RootDatumKind::G2: {
            KRanks k;
            k.k0 = 8;
            k.k1 = 0;
            return k;
        }
        default:
            throw std::invalid_argument("ktheory_ranks: unsupported kind " + datum_kind_name(kind));
    }
}

KRanks ktheory_ranks(const std::string& kind, int n) {
    return ktheory_ranks(parse_datum_kind(kind), n);
}

Int pgl_sheaf_ranks(const Partition& mu) {
    if (mu.weight() < 1) throw std::invalid_argument("pgl_sheaf_ranks: |mu| >= 1 required");
    Partition dual = mu.dual();
    int g = dual.gcd();
    Int via_phi = 0;
    for (int r = 1; r <= g; ++r) {
        if (g % r != 0) continue;
        Partition pw = power_partition(mu, r);
        via_phi += Int(euler_phi(r)) * (Int(1) << (pw.b() - 1));
    }
    Int closed = Int(g) * (Int(1) << (dual.b() - 1));
    if (via_phi != closed)
        throw std::logic_error("pgl_sheaf_ranks: route disagreement at mu = " + mu.to_string());
    return closed;
}

KRanks kunneth_product(const KRanks& a, const KRanks& b) {
    if (!a.torsion_free || !b.torsion_free)
        throw std::invalid_argument("kunneth_product: factors must be torsion-free");
    KRanks k;
    k.k0 = a.k0 * b.k0 + a.k1 * b.k1;
    k.k1 = a.k0 * b.k1 + a.k1 * b.k0;
    k.special_flag = a.special_flag || b.special_flag;
    return k;
}

}  // namespace hkt
