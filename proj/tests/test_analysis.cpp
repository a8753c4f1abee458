#include <doctest.h>

#include "quillen/analysis.hpp"
#include "quillen/errors.hpp"
#include "quillen/fixtures.hpp"

using namespace quillen;

#ifndef QUILLEN_FIXTURE_DIR
#define QUILLEN_FIXTURE_DIR "fixtures"
#endif

TEST_CASE("p-ranks") {
    CHECK(p_rank(build_quillen_poset(projective_group(Family::PSL2, 7).group, 2)) == 2);
    CHECK(p_rank(build_quillen_poset(make_cyclic(9).group, 2)) == 0);
    auto fx = load_group_file(std::string(QUILLEN_FIXTURE_DIR) + "/psl2_8.grp");
    CHECK(p_rank(build_quillen_poset(fx.group, 2)) == 3);
}

TEST_CASE("qd verdicts for PSL2(9) and its field extension") {
    auto psl29 = projective_group(Family::PSL2, 9);
    auto v1 = qd_check(psl29.group, 2, "PSL2(9)");
    CHECK(v1.satisfies);
    CHECK(v1.m_p == 2);
    CHECK(v1.betti == std::vector<std::int64_t>{0, 16});
    CHECK(v1.p_core_trivial);

    auto ext = extend(psl29, {ExtensionKind::Field});
    auto v2 = qd_check(ext.ext.group, 2, ext.ext.name);
    CHECK_FALSE(v2.satisfies);
    CHECK(v2.m_p == 3);
    CHECK(v2.betti[2] == 0);

    auto v3 = qd_check(projective_group(Family::PSL2, 5).group, 2, "PSL2(5)");
    CHECK_FALSE(v3.satisfies);
    CHECK(v3.m_p == 2);
    CHECK(v3.components == 5);
    CHECK(v3.betti == std::vector<std::int64_t>{4, 0});
}

TEST_CASE("qd verdict convention for p'-groups") {
    auto v = qd_check(make_cyclic(15).group, 2, "C15");
    CHECK(v.empty_poset);
    CHECK(v.m_p == 0);
    CHECK(v.satisfies); // via b~_(-1) = 1 of the empty complex
}

TEST_CASE("p_rank_via_extension matches the poset rank on the named pairs") {
    CHECK(p_rank_via_extension(make_sym(5).group, make_alt(5).group, 2).m == 2);

    auto psl29 = projective_group(Family::PSL2, 9);
    auto ext = extend(psl29, {ExtensionKind::Field});
    auto r = p_rank_via_extension(ext.ext.group, ext.desc.base.group, 2);
    CHECK(r.m == 3);
    REQUIRE_FALSE(r.witness.empty());
    // the witness is an outer involution whose centralizer is Sym4-sized
    CHECK_FALSE(ext.desc.base.group.contains(r.witness[0]));
    CHECK(centralizer_in(ext.desc.base.group, r.witness).group.order() == 24);

    CHECK(p_rank_via_extension(projective_group(Family::PGL2, 9).group, psl29.group, 2).m == 2);

    auto psl33 = projective_group(Family::PSL3, 3);
    auto extg = extend(psl33, {ExtensionKind::Graph});
    CHECK(p_rank_via_extension(extg.ext.group, extg.desc.base.group, 2).m == 3);

    // the trivial decomposition G = G.1
    auto A5 = make_alt(5).group;
    CHECK(p_rank_via_extension(A5, A5, 2).m == 2);

    CHECK_THROWS_AS(p_rank_via_extension(make_sym(4).group, make_cyclic(4).group, 2),
                    MembershipError);
}

TEST_CASE("out-posets of the named pairs") {
    auto o1 = out_poset(make_sym(5).group, make_alt(5).group, 2);
    CHECK(o1.total == 10);
    CHECK(o1.all_cyclic);

    auto psl29 = projective_group(Family::PSL2, 9);
    auto o2 = out_poset(projective_group(Family::PGL2, 9).group, psl29.group, 2);
    CHECK(o2.total == 36);
    CHECK(o2.all_cyclic);

    auto A5 = make_alt(5).group;
    auto o3 = out_poset(A5, A5, 2);
    CHECK(o3.total == 0);
    CHECK(o3.classes.empty());
}

TEST_CASE("mvles reports for the three named pairs") {
    auto psl29 = projective_group(Family::PSL2, 9);
    auto ext = extend(psl29, {ExtensionKind::Field});
    auto R1 = mvles_report(ext.ext.group, ext.desc.base.group, 2, "PSL2(9):field", "PSL2(9)");
    CHECK(R1.m == 2);
    CHECK(R1.dim_base == 16);
    CHECK(R1.item3_vanishing);
    CHECK(R1.actual == 0);
    CHECK(R1.consistent);
    BigInt members = 0;
    for (auto& row : R1.rows) {
        CHECK(row.centralizer_order == 24);
        CHECK(row.centralizer_label == "Sym4");
        CHECK(row.centralizer_core_order == 4);
        CHECK(row.dim_top == 0);
        members += row.class_size;
    }
    CHECK(members == 30);

    auto R2 = mvles_report(projective_group(Family::PGL2, 9).group, psl29.group, 2, "PGL2(9)",
                           "PSL2(9)");
    REQUIRE(R2.rows.size() == 1);
    CHECK(R2.rows[0].class_size == 36);
    CHECK(R2.rows[0].centralizer_label == "D10");
    CHECK(R2.rows[0].dim_top == 0);
    CHECK(R2.item3_vanishing);
    CHECK(R2.actual == 0);
    CHECK(R2.consistent);

    auto R3 = mvles_report(make_sym(5).group, make_alt(5).group, 2, "Sym5", "Alt5");
    REQUIRE(R3.rows.size() == 1);
    CHECK(R3.rows[0].class_size == 10);
    CHECK(R3.rows[0].centralizer_label == "Sym3");
    CHECK(R3.item3_vanishing);
    CHECK(R3.actual == 0);
    CHECK(R3.consistent);
}

TEST_CASE("mvles rejects non-cyclic out-poset members") {
    // L = C3 x C3 normal in S3 wr C2; every 2-subgroup avoids L entirely,
    // so the out-poset contains four-subgroups.
    auto W = make_s3_wr_c2().group;
    Permutation a3({1, 2, 0, 3, 4, 5});
    Permutation b3({0, 1, 2, 4, 5, 3});
    auto L = PermGroup::from_generators({a3, b3}, 6);
    REQUIRE(is_normal_in(L, W));
    auto op = out_poset(W, L, 2);
    CHECK_FALSE(op.all_cyclic);
    CHECK_THROWS_AS(mvles_report(W, L, 2), HypothesisError);
}

TEST_CASE("connectivity reports") {
    auto r1 = connectivity_report(make_alt(5), 2);
    CHECK(r1.components == 5);
    CHECK(r1.b0 == 4);
    CHECK(r1.cls == DisconnectionClass::KnownFamily);

    auto fx = load_group_file(std::string(QUILLEN_FIXTURE_DIR) + "/psl2_8.grp");
    auto r2 = connectivity_report(fx, 2);
    CHECK(r2.components == 9);
    CHECK(r2.b0 == 8);
    CHECK(r2.m_p == 3);
    CHECK(r2.cls == DisconnectionClass::KnownFamily);

    auto r3 = connectivity_report(projective_group(Family::PSU3, 3), 2);
    CHECK(r3.components == 1);
    CHECK(r3.m_p == 2);
    CHECK(r3.cls == DisconnectionClass::Connected);
    CHECK(r3.rank2_qd_holds);
    CHECK(r3.b1 == 64);

    auto r4 = connectivity_report(make_frobenius20(), 2);
    CHECK(r4.components == 5);
    CHECK(r4.cls == DisconnectionClass::RankOne);
}

TEST_CASE("small group labels") {
    CHECK(small_group_label(make_sym(4).group) == "Sym4");
    CHECK(small_group_label(make_dihedral(10).group) == "D10");
    CHECK(small_group_label(make_sym(3).group) == "Sym3");
    CHECK(small_group_label(make_quaternion8().group) == "Q8");
    CHECK(small_group_label(make_alt(5).group) == "order 60");
    CHECK(small_group_label(make_sl2_5().group) == "order 120");
}

TEST_CASE("verdict output formats") {
    auto v = qd_check(make_alt(5).group, 2, "Alt5");
    auto row = verdict_csv_row(v);
    CHECK(row.find("Alt5,2,2,[4;0],fails,1,5,") == 0);
    auto block = verdict_text_block(v);
    CHECK(block.find("fails the Quillen dimension property") != std::string::npos);
}
