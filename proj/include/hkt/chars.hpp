#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hkt/weyl.hpp"

namespace hkt {

// Exact integer character table. Rows are irreducible characters (trivial
// character first), columns follow the group's canonical class order.
struct CharacterTable {
    std::string group_name;
    std::vector<std::string> class_labels;
    std::vector<Int> class_sizes;
    std::vector<int> inverse_class;  // column index of the inverse class
    std::vector<std::string> irr_labels;
    std::vector<std::vector<i64>> values;
    Int group_order;
    int identity_class = 0;  // column of the identity class

    int num_classes() const { return static_cast<int>(class_labels.size()); }
    // Both orthogonality relations, squareness, positive degrees,
    // sum-of-squares; throws on any violation.
    void validate() const;
};

// Integer class function on a group's canonical class order.
struct ClassFunction {
    std::string group_name;
    std::vector<Int> values;
};

// Character table of a catalog Weyl group. Strategies: Murnaghan-Nakayama for
// type A, the wreath-product construction for type B, restriction-splitting
// for type D, tensor products for product groups, and the Dixon-Schneider
// algorithm (exact, via a prime field and lifting) for G2 and almost-D groups.
CharacterTable character_table(const WeylGroup& W);

// chi_lambda evaluated on the class of cycle type mu (Murnaghan-Nakayama).
i64 symmetric_group_character(const Partition& lambda, const Partition& mu);

// Abstract finite group for the generic algorithm.
struct FiniteGroupOps {
    int order = 0;
    int id = 0;
    std::function<int(int, int)> mul;
    std::function<int(int)> inv;
};

// Conjugacy classes of an abstract group, in a caller-fixed order.
struct AbstractClasses {
    std::vector<int> reps;                  // element indices
    std::vector<std::vector<int>> members;  // all members per class
    std::vector<int> class_of;              // element -> class
};

AbstractClasses abstract_classes(const FiniteGroupOps& G);

// Dixon-Schneider over F_p (p = 1 mod exponent, p > 2 sqrt(|G|), p coprime to
// |G|), lifted to exact integers and certified by orthogonality. Groups with
// non-rational tables are rejected.
CharacterTable dixon_character_table(const FiniteGroupOps& G, const AbstractClasses& cls,
                                     const std::vector<std::string>& class_labels,
                                     const std::string& group_name);

// Frobenius induction: (ind f)(c) = |W|/(|H| |c|) * sum_{d -> c} |d| f(d).
ClassFunction induce(const CharacterTable& W, const CharacterTable& H,
                     const std::vector<int>& fusion, const ClassFunction& f);

// Restriction along the fusion map.
ClassFunction restrict_cf(const CharacterTable& H, const std::vector<int>& fusion,
                          const ClassFunction& f, const CharacterTable& W);

Rat inner_product(const CharacterTable& T, const ClassFunction& f, const ClassFunction& g);

// Multiplicities of f in the irreducible basis; throws if non-integral.
std::vector<Int> decompose(const CharacterTable& T, const ClassFunction& f);

ClassFunction row_function(const CharacterTable& T, int row);

// Character data of an explicitly enumerated subgroup of W (a parabolic, a
// centralizer, an isotropy group): a table over the subgroup's classes plus
// the fusion map into W's classes.
struct SubgroupCharData {
    SubgroupClasses classes;
    CharacterTable table;
    std::vector<int> fusion;
};

SubgroupCharData parabolic_char_data(const WeylGroup& W, const ParabolicSubgroup& P);

// On-disk table cache (JSON, atomic rename). Disabled unless a directory is
// configured here or through HKT_CACHE_DIR.
void set_cache_dir(const std::string& dir);
std::optional<std::string> cache_dir();

}  // namespace hkt
