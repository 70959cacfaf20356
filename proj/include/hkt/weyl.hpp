#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "hkt/signed_perm.hpp"

namespace hkt {

// 2x2 integer matrix; element type for the G_2 reflection representation.
struct Mat2 {
    std::array<i64, 4> a{1, 0, 0, 1};  // row major

    static Mat2 identity() { return Mat2{}; }
    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse() const;  // requires det = +-1
    i64 det() const { return a[0] * a[3] - a[1] * a[2]; }
    i64 trace() const { return a[0] + a[3]; }
    bool operator==(const Mat2& o) const { return a == o.a; }
    size_t hash() const;
    IntMatrix matrix() const;
    std::string to_string() const;
};

using GroupElement = std::variant<SignedPermutation, Mat2>;

GroupElement ge_mul(const GroupElement& a, const GroupElement& b);
GroupElement ge_inv(const GroupElement& a);
bool ge_eq(const GroupElement& a, const GroupElement& b);
bool ge_is_identity(const GroupElement& a);
IntMatrix ge_matrix(const GroupElement& a);
std::string ge_to_string(const GroupElement& a);

struct GroupElementHash {
    size_t operator()(const GroupElement& e) const;
};
struct GroupElementEq {
    bool operator()(const GroupElement& a, const GroupElement& b) const { return ge_eq(a, b); }
};

using ElementSet = std::unordered_set<GroupElement, GroupElementHash, GroupElementEq>;

// Closure of a generating set; throws capacity_error beyond `bound`.
std::vector<GroupElement> generate_subgroup(const GroupElement& id,
                                            const std::vector<GroupElement>& gens, size_t bound);

enum class WeylKind { A, B, D, G2, AlmostD, Product };

std::string weyl_kind_name(WeylKind k);

// Conjugacy class label. For classical kinds this is a (bi)partition; type D
// and almost-D classes with empty negative part and all-even positive part
// split in two, tagged +/-.
struct ClassLabel {
    enum class Form { CycleType, Signed, Named, Tuple };
    Form form = Form::CycleType;
    Partition mu, lambda;          // CycleType uses mu only
    std::string name;              // Named (G2)
    std::vector<ClassLabel> parts; // Tuple (products / almost-D blocks)
    int split = 0;                 // 0 none, +1 sigma, -1 sigma''

    std::string to_string() const;
    bool operator==(const ClassLabel& o) const;
};

struct ConjClass {
    ClassLabel label;
    GroupElement rep;
    Int size;
};

struct Centralizer {
    Int order;
    std::vector<GroupElement> generators;
    std::vector<GroupElement> elements;
};

class WeylGroup;
using WeylGroupPtr = std::shared_ptr<const WeylGroup>;

// Catalog coordinate-block factor of a parabolic subgroup.
struct CatalogBlock {
    WeylKind kind;  // A, B or D
    int n;          // number of coordinates of the block
    int offset;     // first parent coordinate
};

struct ParabolicSubgroup {
    std::string label;
    std::vector<int> subset;  // indices into the parent's simple roots
    std::vector<GroupElement> generators;
    std::vector<GroupElement> elements;
    Int order;
    bool is_whole = false;
    // Coordinate-block factorization when the subgroup is a direct product of
    // catalog groups on disjoint coordinate blocks; empty => generic subgroup.
    std::vector<CatalogBlock> blocks;
    bool generic = false;
};

// Conjugacy data of an explicitly enumerated subgroup.
struct SubgroupClasses {
    std::vector<GroupElement> reps;
    std::vector<Int> sizes;
    std::unordered_map<GroupElement, int, GroupElementHash, GroupElementEq> elem_class;
};

SubgroupClasses subgroup_classes(const std::vector<GroupElement>& elements,
                                 const std::vector<GroupElement>& gens);

class WeylGroup : public std::enable_shared_from_this<WeylGroup> {
   public:
    static WeylGroupPtr symmetric(int n);                 // S_n acting on n coordinates
    static WeylGroupPtr type_b(int n);                    // W(B_n)
    static WeylGroupPtr type_d(int n);                    // W(D_n); n = 1 is trivial
    static WeylGroupPtr g2();
    static WeylGroupPtr almost_d(const std::vector<int>& blocks);
    static WeylGroupPtr product(const std::vector<WeylGroupPtr>& factors);
    // Parse "A"/"S", "B", "D", "G2", "AlmostD"; n is a single value or a tuple.
    static WeylGroupPtr build(const std::string& kind, const std::vector<int>& n);

    WeylKind kind() const { return kind_; }
    int ncoords() const { return ncoords_; }
    const std::vector<int>& block_sizes() const { return blocks_; }
    const std::vector<WeylGroupPtr>& factors() const { return factors_; }
    const std::vector<GroupElement>& generators() const { return gens_; }
    const std::vector<std::vector<i64>>& simple_roots() const { return simple_roots_; }
    const Int& order() const { return order_; }
    GroupElement identity() const;
    std::string name() const;

    const std::vector<ConjClass>& classes() const;
    int class_of(const GroupElement& w) const;
    const std::vector<GroupElement>& elements(size_t bound = 0) const;  // 0: configured bound

    bool is_elliptic(const GroupElement& w) const;
    int elliptic_class_count() const;

    Centralizer centralizer(const GroupElement& w, size_t bound = 0) const;  // 0: configured bound

    // One representative per association class of proper standard parabolic
    // subgroups (plus the whole group, flagged is_whole, at the end).
    const std::vector<ParabolicSubgroup>& standard_parabolics() const;

    static constexpr size_t kEnumBound = 2'000'000;
    static constexpr size_t kCentralizerBound = 1'000'000;
    // Process-wide capacity overrides (the CLI's --max-order).
    static void set_capacity(size_t enum_bound, size_t centralizer_bound);
    static size_t enum_capacity();
    static size_t centralizer_capacity();

   private:
    WeylGroup() = default;

    void build_classes() const;
    void build_parabolics() const;
    const ElementSet& split_orbit(const Partition& mu, bool primed) const;

    WeylKind kind_ = WeylKind::A;
    int ncoords_ = 0;
    std::vector<int> blocks_;             // AlmostD block sizes
    std::vector<WeylGroupPtr> factors_;   // Product factors
    std::vector<int> factor_offsets_;
    std::vector<GroupElement> gens_;
    std::vector<GroupElement> gamma_gens_;  // AlmostD diagram-automorphism part
    std::vector<std::vector<i64>> simple_roots_;
    Int order_ = 1;

    mutable std::recursive_mutex cache_mutex_;
    mutable std::vector<ConjClass> classes_;
    mutable std::unordered_map<std::string, int> label_index_;
    mutable std::vector<GroupElement> elements_;
    mutable std::vector<ParabolicSubgroup> parabolics_;
    // Split-class element sets, keyed by partition string (D / AlmostD kinds).
    mutable std::unordered_map<std::string, ElementSet> split_orbits_;
    mutable IntMatrix root_span_;  // simple roots as columns
    mutable int root_rank_ = -1;
};

// Map from the classes of an enumerated subgroup to the classes of W.
std::vector<int> class_fusion(const WeylGroup& W, const SubgroupClasses& sub);

}  // namespace hkt
