#pragma once

#include <vector>

#include "hkt/numeric.hpp"

namespace hkt {

// Hard cap on partition weights; far above anything the catalog groups can use,
// but keeps every enumeration finite by construction.
inline constexpr int kMaxPartitionWeight = 64;

// An integer partition: parts in weakly decreasing order, all positive.
// The empty partition (weight 0) is allowed.
class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Number of distinct part sizes.
    int b() const;
    // gcd of the parts; the empty partition has no gcd.
    int gcd() const;
    // Transposed Young diagram.
    Partition dual() const;
    // Multiplicity of part size l.
    int multiplicity(int l) const;
    // True if every part is even.
    bool all_parts_even() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;

   private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enum_partitions(int n);

// Number of partitions of n.
Int partition_count(int n);

// mu^{1/r}: each part size l with multiplicity m_l becomes part size l*r with
// multiplicity m_l / r.  Requires r to divide every multiplicity.
Partition power_partition(const Partition& mu, int r);

// Number of ordered k-tuples of partitions of total weight n.
Int count_multipartitions(int k, int n);

// Euler phi.
i64 euler_phi(i64 m);

// An ordered tuple of partitions.
class Multipartition {
   public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> comps);

    const std::vector<Partition>& components() const { return comps_; }
    int total_weight() const { return total_; }
    int size() const { return static_cast<int>(comps_.size()); }
    const Partition& operator[](int i) const { return comps_[i]; }

    bool operator==(const Multipartition& o) const { return comps_ == o.comps_; }
    bool operator<(const Multipartition& o) const { return comps_ < o.comps_; }

    std::string to_string() const;

   private:
    std::vector<Partition> comps_;
    int total_ = 0;
};

// All ordered k-tuples of partitions of total weight n, in lexicographic order
// of the (revlex-ordered) component lists.
std::vector<Multipartition> enum_multipartitions(int k, int n);

}  // namespace hkt
