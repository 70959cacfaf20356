#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hkt/intmat.hpp"
#include "hkt/partitions.hpp"

namespace hkt {

// Element of a hyperoctahedral group: the linear map e_i -> sgn[i] * e_{img[i]}
// (a monomial matrix with entries +-1). Indices are 0-based internally.
class SignedPermutation {
   public:
    SignedPermutation() = default;
    SignedPermutation(std::vector<int> img, std::vector<int> sgn);
    static SignedPermutation identity(int n);
    // Sign change s_{e_i} (0-based index).
    static SignedPermutation sign_change(int n, int i);
    // Transposition (i j), positive signs.
    static SignedPermutation transposition(int n, int i, int j);

    int n() const { return static_cast<int>(img_.size()); }
    const std::vector<int>& img() const { return img_; }
    const std::vector<int>& sgn() const { return sgn_; }

    SignedPermutation operator*(const SignedPermutation& o) const;  // composition x -> this(o(x))
    SignedPermutation inverse() const;
    bool is_identity() const;

    // Signed cycle type: (positive-cycle lengths, negative-cycle lengths).
    std::pair<Partition, Partition> signed_cycle_type() const;
    // Underlying permutation's cycle type.
    Partition cycle_type() const;
    int order() const;
    // Number of -1 signs (parity detects membership in D_n).
    int sign_flip_count() const;

    IntMatrix matrix() const;
    std::vector<i64> apply(const std::vector<i64>& x) const;

    bool operator==(const SignedPermutation& o) const { return img_ == o.img_ && sgn_ == o.sgn_; }
    bool operator<(const SignedPermutation& o) const;
    size_t hash() const;

    std::string to_string() const;

   private:
    std::vector<int> img_;
    std::vector<int> sgn_;
};

struct SignedPermHash {
    size_t operator()(const SignedPermutation& p) const { return p.hash(); }
};

// sigma(mu): product of consecutive positive cycles of lengths mu_1, mu_2, ...
// acting on n = |mu| letters.
SignedPermutation perm_from_partition(const Partition& mu);

// sigma'(lambda) = eps_{I_lambda} * sigma(lambda): one sign flip per cycle,
// making every cycle negative.
SignedPermutation sigma_prime(const Partition& lambda);

// sigma(mu, lambda): positive cycles mu on the first |mu| letters, negative
// cycles lambda on the rest. Ambient rank n = |mu| + |lambda|.
SignedPermutation sigma_bipartition(const Partition& mu, const Partition& lambda);

// sigma(mu, lambda, rho): positive cycles mu, then negative blocks lambda and rho.
SignedPermutation sigma_tripartition(const Partition& mu, const Partition& lambda,
                                     const Partition& rho);

// sigma''(mu) = sigma(mu) * eps_{{n-1,n}}; requires every part of mu even.
SignedPermutation sigma_double_prime(const Partition& mu);

// Direct sum on concatenated coordinates.
SignedPermutation block_sum(const std::vector<SignedPermutation>& blocks);

}  // namespace hkt
