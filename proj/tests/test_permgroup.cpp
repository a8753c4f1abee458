#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "quillen/atlas.hpp"
#include "quillen/errors.hpp"
#include "quillen/fixtures.hpp"
#include "quillen/permgroup.hpp"

using namespace quillen;

namespace {

PermGroup sym4() {
    return PermGroup::from_generators(
        {Permutation({1, 0, 2, 3}), Permutation({1, 2, 3, 0})}, 4);
}

PermGroup alt5() {
    return PermGroup::from_generators(
        {Permutation({1, 2, 0, 3, 4}), Permutation({0, 1, 3, 4, 2})}, 5);
}

} // namespace

TEST_CASE("orders of the spec's generator examples") {
    CHECK(sym4().order() == 24);
    CHECK(alt5().order() == 60);
    CHECK(projective_group(Family::PSL3, 3).group.order() == 5616);
}

TEST_CASE("malformed generators are rejected") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), ConstructionError);
    CHECK_THROWS_AS(PermGroup::from_generators({Permutation(3)}, 4), ConstructionError);
}

TEST_CASE("bsgs order equals explicit enumeration and membership is exact") {
    for (auto& g : {sym4(), alt5(), make_frobenius20().group, make_s3_wr_c2().group,
                    projective_group(Family::PSL2, 7).group}) {
        auto naive = oracle::naive_elements(g.generators(), g.degree());
        CHECK(BigInt(naive.size()) == g.order());
        std::size_t count = 0;
        g.for_each_element([&](const Permutation&) {
            ++count;
            return true;
        });
        CHECK(BigInt(count) == g.order());
        // every generator passes membership
        for (const auto& x : g.generators()) CHECK(g.contains(x));
        // non-members of the same degree fail it
        std::set<Permutation> inside(naive.begin(), naive.end());
        std::mt19937_64 rng(5);
        std::vector<std::uint32_t> img(g.degree());
        for (int t = 0; t < 20; ++t) {
            for (std::uint32_t i = 0; i < g.degree(); ++i) img[i] = i;
            std::shuffle(img.begin(), img.end(), rng);
            Permutation cand(img);
            if (!inside.count(cand)) CHECK_FALSE(g.contains(cand));
        }
        // order divides degree!
        BigInt fact = 1;
        for (std::uint32_t i = 2; i <= g.degree(); ++i) fact *= i;
        CHECK(fact % g.order() == 0);
        // order equals the product of fundamental orbit lengths
        BigInt prod = 1;
        for (auto l : g.fundamental_orbit_lengths()) prod *= l;
        CHECK(prod == g.order());
    }
}

TEST_CASE("element slices partition the group") {
    auto g = alt5();
    std::size_t top = g.top_orbit_length();
    std::vector<Permutation> collected;
    for (std::size_t lo = 0; lo < top; lo += 2)
        g.for_each_element_slice(lo, std::min(lo + 2, top), [&](const Permutation& x) {
            collected.push_back(x);
            return true;
        });
    CHECK(collected.size() == 60);
    std::sort(collected.begin(), collected.end());
    CHECK(std::unique(collected.begin(), collected.end()) == collected.end());
}

TEST_CASE("elements_of_order_p matches brute-force counts") {
    struct Fx {
        PermGroup g;
        unsigned p;
    };
    std::vector<Fx> fixtures = {{alt5(), 2},
                                {sym4(), 2},
                                {sym4(), 3},
                                {make_cyclic(3).group, 2},
                                {make_frobenius20().group, 2},
                                {projective_group(Family::PSL2, 5).group, 2},
                                {projective_group(Family::PGL2, 9).group, 2},
                                {make_s3_wr_c2().group, 3}};
    for (auto& f : fixtures) {
        auto naive = oracle::naive_elements(f.g.generators(), f.g.degree());
        auto fast = elements_of_order_p(f.g, f.p);
        CHECK(fast.size() == oracle::naive_order_p_count(naive, f.p));
        CHECK(std::is_sorted(fast.begin(), fast.end()));
    }
    // paper counts
    CHECK(elements_of_order_p(projective_group(Family::PSL2, 5).group, 2).size() == 15);
    CHECK(elements_of_order_p(projective_group(Family::PGL2, 9).group, 2).size() == 81);
    CHECK(elements_of_order_p(make_cyclic(3).group, 2).empty());
}

TEST_CASE("elements_of_order_p is parallel-merge deterministic") {
    Caps two;
    two.jobs = 2;
    auto g = projective_group(Family::PSL3, 3).group;
    auto a = elements_of_order_p(g, 2);
    auto b = elements_of_order_p(g, 2, two);
    CHECK(a == b);
    CHECK(a.size() == 117);
}

TEST_CASE("centralizer: examples, error path, and both strategies agree") {
    auto A5 = alt5();
    Permutation v({1, 0, 3, 2, 4});
    auto C = centralizer(A5, {v});
    CHECK(C.group.order() == 4);
    CHECK(is_elementary_abelian(C.group, 2));

    // identity centralizes everything
    CHECK(centralizer(A5, {Permutation(5)}).group.order() == 60);

    // membership precondition
    CHECK_THROWS_AS(centralizer(A5, {Permutation({1, 0, 2, 3, 4})}), MembershipError);

    // orbit-stabilizer path on the same inputs
    Caps tight;
    tight.brute_force_cap = 8;
    auto C2 = centralizer(A5, {v}, tight);
    CHECK(C2.group.same_group_as(C.group));

    // against the naive oracle on a couple of groups
    for (auto& g : {sym4(), make_s3_wr_c2().group}) {
        auto naive = oracle::naive_elements(g.generators(), g.degree());
        auto s = naive[3];
        auto brute = oracle::naive_centralizer(naive, {s});
        auto lib = centralizer(g, {s});
        CHECK(BigInt(brute.size()) == lib.group.order());
        auto lib2 = centralizer(g, {s}, tight);
        CHECK(BigInt(brute.size()) == lib2.group.order());
    }
}

TEST_CASE("centralizer of a field automorphism of PSL2(9) is Sym4-sized") {
    auto psl29 = projective_group(Family::PSL2, 9);
    auto ext = extend(psl29, {ExtensionKind::Field});
    auto C = centralizer_in(ext.desc.base.group, {ext.desc.reps[0].second});
    CHECK(C.group.order() == 24);
}

TEST_CASE("normalizer examples") {
    auto A5 = alt5();
    Permutation v({1, 0, 3, 2, 4});
    auto V = PermGroup::from_generators({v, Permutation({2, 3, 0, 1, 4})}, 5);
    auto N = normalizer(A5, V);
    CHECK(N.group.order() == 12);
    CHECK(is_subgroup_of(V, N.group));
    CHECK(normalizer(A5, A5).group.order() == 60);
    Caps tight;
    tight.brute_force_cap = 8;
    CHECK(normalizer(A5, V, tight).group.order() == 12);

    // Sylow normalizer of PSL2(8): order 56, index 9
    auto psl28 = projective_group(Family::PSL2, 8);
    auto syl = sylow_subgroup(psl28.group, 2);
    CHECK(syl.group.order() == 8);
    CHECK(is_elementary_abelian(syl.group, 2));
    auto NS = normalizer(psl28.group, syl.group);
    CHECK(NS.group.order() == 56);
    CHECK(NS.index() == 9);
}

TEST_CASE("omega1 examples") {
    CHECK(omega1(sym4(), 2).group.order() == 24);
    CHECK(omega1(make_cyclic(4).group, 2).group.order() == 2);
    CHECK(omega1(make_sym(3).group, 2).group.order() == 6);
}

TEST_CASE("p-core examples and invariants") {
    auto c1 = p_core(sym4(), 2);
    CHECK(c1.group.order() == 4);
    CHECK(is_normal_in(c1.group, sym4()));
    CHECK(p_core(alt5(), 2).group.is_trivial());
    auto pgl23 = projective_group(Family::PGL2, 3); // Sym4 as a projective group
    CHECK(pgl23.group.order() == 24);
    CHECK(p_core(pgl23.group, 2).group.order() == 4);
    CHECK(p_core(sym4(), 3).group.is_trivial());
    CHECK(p_core(make_quaternion8().group, 2).group.order() == 8);
}

TEST_CASE("subgroup orbits satisfy orbit-stabilizer") {
    auto A5 = alt5();
    Permutation v({1, 0, 3, 2, 4});
    auto o1 = subgroup_orbit(A5, PermGroup::from_generators({v}, 5));
    CHECK(o1.orbit_size == 15);
    auto V = PermGroup::from_generators({v, Permutation({2, 3, 0, 1, 4})}, 5);
    auto o2 = subgroup_orbit(A5, V);
    CHECK(o2.orbit_size == 5);
    auto o3 = subgroup_orbit(A5, PermGroup::trivial(5));
    CHECK(o3.orbit_size == 1);
    for (auto* o : {&o1, &o2, &o3})
        CHECK(o->orbit_size * o->normalizer.group.order() == A5.order());
}

TEST_CASE("resource caps raise errors that name the flag") {
    Caps tiny;
    tiny.element_scan_cap = 10;
    CHECK_THROWS_WITH_AS(elements_of_order_p(alt5(), 2, tiny),
                         doctest::Contains("--element-cap"), ResourceError);
}

TEST_CASE("element orders") {
    CHECK(element_order(Permutation({1, 0, 3, 4, 2})) == 6);
    CHECK(has_order_p(Permutation({1, 0, 2}), 2));
    CHECK_FALSE(has_order_p(Permutation(3), 2));
    CHECK_FALSE(has_order_p(Permutation({1, 2, 0}), 2));
    CHECK(has_order_p(Permutation({1, 2, 0}), 3));
}
