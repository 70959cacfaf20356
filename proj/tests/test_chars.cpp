#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hkt/chars.hpp"

using namespace hkt;

namespace {

struct Lcg {
    unsigned long long s;
    int next(int lo, int hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<int>((s >> 33) % (hi - lo + 1));
    }
};

// Dixon oracle for a Weyl group's table, in the catalog class order.
CharacterTable dixon_oracle(const WeylGroup& W) {
    const auto& els = W.elements();
    std::unordered_map<GroupElement, int, GroupElementHash, GroupElementEq> index;
    for (size_t i = 0; i < els.size(); ++i) index.emplace(els[i], static_cast<int>(i));
    FiniteGroupOps ops;
    ops.order = static_cast<int>(els.size());
    ops.id = index.at(W.identity());
    ops.mul = [&els, &index](int a, int b) { return index.at(ge_mul(els[a], els[b])); };
    ops.inv = [&els, &index](int a) { return index.at(ge_inv(els[a])); };
    AbstractClasses ac;
    ac.class_of.assign(ops.order, -1);
    ac.reps.resize(W.classes().size());
    ac.members.resize(W.classes().size());
    for (size_t i = 0; i < els.size(); ++i) {
        int c = W.class_of(els[i]);
        ac.class_of[i] = c;
        ac.members[c].push_back(static_cast<int>(i));
    }
    std::vector<std::string> labels;
    for (size_t c = 0; c < W.classes().size(); ++c) {
        ac.reps[c] = index.at(W.classes()[c].rep);
        labels.push_back(W.classes()[c].label.to_string());
    }
    return dixon_character_table(ops, ac, labels, W.name());
}

// tables agree up to a permutation of rows
void check_same_rows(const CharacterTable& a, const CharacterTable& b) {
    REQUIRE(a.values.size() == b.values.size());
    std::multiset<std::vector<i64>> ra(a.values.begin(), a.values.end());
    std::multiset<std::vector<i64>> rb(b.values.begin(), b.values.end());
    CHECK(ra == rb);
}

}  // namespace

TEST_CASE("murnaghan-nakayama") {
    CHECK(symmetric_group_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(symmetric_group_character(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(symmetric_group_character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(symmetric_group_character(Partition({4}), Partition({2, 1, 1})) == 1);
    // sign character: chi_{(1^n)}(mu) = (-1)^{n - len(mu)}
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : enum_partitions(n)) {
            i64 expect = ((n - mu.length()) % 2 == 0) ? 1 : -1;
            CHECK(symmetric_group_character(Partition(std::vector<int>(n, 1)), mu) == expect);
        }
}

TEST_CASE("symmetric group tables") {
    auto T2 = character_table(*WeylGroup::symmetric(2));
    // class order is revlex: (2), (1,1)
    CHECK(T2.values == std::vector<std::vector<i64>>{{1, 1}, {-1, 1}});
    auto T3 = character_table(*WeylGroup::symmetric(3));
    T3.validate();
    // chi_{(2,1)} on (e, transposition, 3-cycle) = (2, 0, -1)
    // class order is revlex: (3), (2,1), (1,1,1)
    REQUIRE(T3.irr_labels[1] == "[2,1]");
    CHECK(T3.values[1] == std::vector<i64>{-1, 0, 2});
    for (int n = 4; n <= 6; ++n) check_same_rows(character_table(*WeylGroup::symmetric(n)),
                                                 dixon_oracle(*WeylGroup::symmetric(n)));
    CHECK(character_table(*WeylGroup::symmetric(8)).values.size() == 22);  // p(8)
}

TEST_CASE("hyperoctahedral tables via the wreath construction") {
    auto B2 = character_table(*WeylGroup::type_b(2));
    B2.validate();
    std::multiset<i64> degs;
    for (const auto& row : B2.values) degs.insert(row[B2.identity_class]);
    CHECK(degs == std::multiset<i64>{1, 1, 1, 1, 2});
    check_same_rows(B2, dixon_oracle(*WeylGroup::type_b(2)));
    check_same_rows(character_table(*WeylGroup::type_b(3)), dixon_oracle(*WeylGroup::type_b(3)));

    for (int n = 1; n <= 6; ++n) {
        auto T = character_table(*WeylGroup::type_b(n));  // validated internally
        Int bip = 0;
        for (int a = 0; a <= n; ++a) bip += partition_count(a) * partition_count(n - a);
        CHECK(Int(T.values.size()) == bip);
    }
}

TEST_CASE("type D tables via restriction-splitting") {
    check_same_rows(character_table(*WeylGroup::type_d(2)), dixon_oracle(*WeylGroup::type_d(2)));
    check_same_rows(character_table(*WeylGroup::type_d(3)), dixon_oracle(*WeylGroup::type_d(3)));
    check_same_rows(character_table(*WeylGroup::type_d(4)), dixon_oracle(*WeylGroup::type_d(4)));
    character_table(*WeylGroup::type_d(5));
    character_table(*WeylGroup::type_d(6));  // validated internally
}

TEST_CASE("G2 and almost-D tables (generic algorithm)") {
    auto G = character_table(*WeylGroup::g2());
    std::multiset<i64> degs;
    for (const auto& row : G.values) degs.insert(row[G.identity_class]);
    CHECK(degs == std::multiset<i64>{1, 1, 1, 1, 2, 2});
    for (auto blocks : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {2, 2}, {1, 1, 1}})
        character_table(*WeylGroup::almost_d(blocks));  // validate() inside
}

TEST_CASE("product tables") {
    auto P = WeylGroup::product({WeylGroup::symmetric(2), WeylGroup::symmetric(3)});
    auto T = character_table(*P);
    CHECK(T.values.size() == 6);
    check_same_rows(T, dixon_oracle(*P));
}

TEST_CASE("induction and restriction") {
    auto S3 = WeylGroup::symmetric(3);
    auto TS3 = character_table(*S3);
    // S_2 x S_1 parabolic
    const auto& paras = S3->standard_parabolics();
    const ParabolicSubgroup* s2 = nullptr;
    for (const auto& p : paras)
        if (p.order == 2) s2 = &p;
    REQUIRE(s2 != nullptr);
    SubgroupCharData D = parabolic_char_data(*S3, *s2);

    // ind_{S_2}^{S_3}(triv) = triv + standard; as a class function (values on
    // classes (3), (2,1), (1^3)) it is (0, 1, 3)
    ClassFunction ind = induce(TS3, D.table, D.fusion, row_function(D.table, 0));
    CHECK(ind.values == std::vector<Int>{0, 1, 3});
    auto mult = decompose(TS3, ind);
    Int total = 0;
    for (const auto& m : mult) {
        CHECK(m >= 0);
        total += m;
    }
    CHECK(total == 2);

    // deg(ind f) = [W:H] deg f
    CHECK(ind.values[2] == 3);

    // ind_1^{Z/2}(triv) = regular
    auto S2 = WeylGroup::symmetric(2);
    auto TS2 = character_table(*S2);
    const ParabolicSubgroup* triv = nullptr;
    for (const auto& p : S2->standard_parabolics())
        if (p.order == 1) triv = &p;
    REQUIRE(triv != nullptr);
    SubgroupCharData Dt = parabolic_char_data(*S2, *triv);
    ClassFunction reg = induce(TS2, Dt.table, Dt.fusion, row_function(Dt.table, 0));
    // classes (2), (1,1): regular = (0, 2)
    CHECK(reg.values == std::vector<Int>{0, 2});

    // restriction of the trivial character is trivial
    ClassFunction rtriv = restrict_cf(D.table, D.fusion, row_function(TS3, 0), TS3);
    for (const auto& v : rtriv.values) CHECK(v == 1);

    // res_{S_2}^{S_3}(standard) = triv + sign
    int std_row = -1;
    for (size_t i = 0; i < TS3.values.size(); ++i)
        if (TS3.values[i][2] == 2) std_row = static_cast<int>(i);
    REQUIRE(std_row >= 0);
    ClassFunction rstd = restrict_cf(D.table, D.fusion, row_function(TS3, std_row), TS3);
    auto rmult = decompose(D.table, rstd);
    for (const auto& m : rmult) CHECK(m == 1);
}

TEST_CASE("inner products") {
    auto S3 = WeylGroup::symmetric(3);
    auto T = character_table(*S3);
    for (size_t i = 0; i < T.values.size(); ++i) {
        CHECK(inner_product(T, row_function(T, i), row_function(T, i)) == Rat(1));
        for (size_t j = i + 1; j < T.values.size(); ++j)
            CHECK(inner_product(T, row_function(T, i), row_function(T, j)) == Rat(0));
    }
    // <reg, reg> = |G|
    ClassFunction reg;
    reg.group_name = T.group_name;
    reg.values = {0, 0, 6};
    CHECK(inner_product(T, reg, reg) == Rat(6));
    ClassFunction triv = row_function(T, 0);
    CHECK(inner_product(T, triv, reg) == Rat(1));
}

TEST_CASE("frobenius reciprocity on random virtual characters") {
    auto W = WeylGroup::type_b(3);
    auto TW = character_table(*W);
    const auto& paras = W->standard_parabolics();
    REQUIRE(paras.size() > 2);
    Lcg rng{424242};
    int checked = 0;
    for (const auto& P : paras) {
        if (P.is_whole) continue;
        SubgroupCharData D = parabolic_char_data(*W, P);
        for (int trial = 0; trial < 40; ++trial) {
            ClassFunction f;  // random virtual character of the subgroup
            f.group_name = D.table.group_name;
            f.values.assign(D.table.num_classes(), 0);
            for (size_t r = 0; r < D.table.values.size(); ++r) {
                int c = rng.next(-3, 3);
                for (int j = 0; j < D.table.num_classes(); ++j)
                    f.values[j] += Int(c) * D.table.values[r][j];
            }
            ClassFunction g;  // random virtual character of W
            g.group_name = TW.group_name;
            g.values.assign(TW.num_classes(), 0);
            for (size_t r = 0; r < TW.values.size(); ++r) {
                int c = rng.next(-3, 3);
                for (int j = 0; j < TW.num_classes(); ++j)
                    g.values[j] += Int(c) * TW.values[r][j];
            }
            Rat lhs = inner_product(TW, induce(TW, D.table, D.fusion, f), g);
            Rat rhs = inner_product(D.table, f, restrict_cf(D.table, D.fusion, g, TW));
            REQUIRE(lhs == rhs);
            ++checked;
        }
    }
    CHECK(checked >= 200);
}

TEST_CASE("restriction of irreducibles decomposes nonnegatively") {
    auto W = WeylGroup::type_b(3);
    auto TW = character_table(*W);
    for (const auto& P : W->standard_parabolics()) {
        if (P.is_whole) continue;
        SubgroupCharData D = parabolic_char_data(*W, P);
        for (size_t r = 0; r < TW.values.size(); ++r) {
            auto mult = decompose(D.table, restrict_cf(D.table, D.fusion, row_function(TW, r), TW));
            for (const auto& m : mult) CHECK(m >= 0);
        }
    }
}

TEST_CASE("table cache round-trips bit-exactly") {
    std::string dir = std::filesystem::temp_directory_path() /
                      ("hkt_cache_test_" + std::to_string(::getpid()));
    set_cache_dir(dir);
    auto T1 = character_table(*WeylGroup::type_b(3));
    std::string file;
    for (const auto& e : std::filesystem::directory_iterator(dir)) file = e.path();
    REQUIRE(!file.empty());
    std::ifstream in(file);
    std::string bytes1((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto T2 = character_table(*WeylGroup::type_b(3));  // served from cache
    CHECK(T1.values == T2.values);
    CHECK(T1.class_labels == T2.class_labels);
    // rewrite and compare bytes
    std::filesystem::remove(file);
    character_table(*WeylGroup::type_b(3));
    std::ifstream in2(file);
    std::string bytes2((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
    CHECK(bytes1 == bytes2);
    set_cache_dir("");
    std::filesystem::remove_all(dir);
}
