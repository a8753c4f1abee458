#include <doctest.h>

#include <map>
#include <sstream>

#include "oracles.hpp"
#include "quillen/atlas.hpp"
#include "quillen/errors.hpp"
#include "quillen/fixtures.hpp"
#include "quillen/homology.hpp"
#include "quillen/poset.hpp"

using namespace quillen;

TEST_CASE("A_2(Alt5): 20 vertices, 15 covering edges, 5 components") {
    auto P = build_quillen_poset(make_alt(5).group, 2);
    CHECK(P.size() == 20);
    CHECK(P.max_rank() == 2);
    CHECK(P.component_count() == 5);
    std::size_t covers = 0;
    for (std::size_t v = 0; v < P.size(); ++v)
        for (auto u : P.above(v))
            if (P.vertex(u).rank == P.vertex(v).rank + 1) ++covers;
    CHECK(covers == 15);
}

TEST_CASE("A_2(PGL2(9)) has 81 + 120 vertices") {
    auto P = build_quillen_poset(projective_group(Family::PGL2, 9).group, 2);
    CHECK(P.size() == 201);
}

TEST_CASE("odd-order groups give the empty poset") {
    auto P = build_quillen_poset(make_cyclic(15).group, 2);
    CHECK(P.empty());
    CHECK(P.max_rank() == 0);
}

TEST_CASE("vertex sets match the naive elementary abelian enumeration") {
    struct Fx {
        std::string name;
        PermGroup g;
        unsigned p;
    };
    std::vector<Fx> fixtures = {
        {"Sym4", make_sym(4).group, 2},
        {"Alt5", make_alt(5).group, 2},
        {"D8", make_dihedral(8).group, 2},
        {"Q8", make_quaternion8().group, 2},
        {"F20", make_frobenius20().group, 2},
        {"S3wrC2", make_s3_wr_c2().group, 2},
        {"PGL2(5)", projective_group(Family::PGL2, 5).group, 2},
        {"PSL2(7)", projective_group(Family::PSL2, 7).group, 2},
        {"Sym4@3", make_sym(4).group, 3},
        {"C3xC3", direct_product(make_cyclic(3), make_cyclic(3)).group, 3},
    };
    for (auto& f : fixtures) {
        CAPTURE(f.name);
        auto P = build_quillen_poset(f.g, f.p);
        auto naive = oracle::naive_elab_subgroups(
            oracle::naive_elements(f.g.generators(), f.g.degree()), f.p);
        CHECK(P.size() == naive.size());
        // rank-1 vertex count equals (#order-p elements)/(p-1)
        std::size_t r1 = 0;
        for (std::size_t v = 0; v < P.size(); ++v)
            if (P.vertex(v).rank == 1) ++r1;
        CHECK(r1 == elements_of_order_p(f.g, f.p).size() / (f.p - 1));
        // each vertex subgroup is elementary abelian of order p^rank
        for (std::size_t v = 0; v < P.size(); ++v) {
            auto H = P.vertex_subgroup(v);
            CHECK(H.order() == bpow(f.p, P.vertex(v).rank));
            CHECK(is_elementary_abelian(H, f.p));
        }
    }
}

TEST_CASE("rank-k vertices have at least (p^k-1)/(p-1) rank-1 vertices below") {
    auto P = build_quillen_poset(projective_group(Family::PSU3, 3).group, 2);
    for (std::size_t v = 0; v < P.size(); ++v) {
        unsigned k = P.vertex(v).rank;
        if (k < 2) continue;
        std::size_t r1_below = 0;
        for (auto u : P.below(v))
            if (P.vertex(u).rank == 1) ++r1_below;
        CHECK(r1_below >= ((1u << k) - 1));
    }
}

TEST_CASE("the action is by order-preserving vertex bijections") {
    auto P = build_quillen_poset(projective_group(Family::PGL2, 5).group, 2);
    REQUIRE(P.has_action());
    for (const auto& amap : P.action()) {
        std::vector<bool> hit(P.size(), false);
        for (std::size_t v = 0; v < P.size(); ++v) {
            CHECK_FALSE(hit[amap[v]]);
            hit[amap[v]] = true;
            CHECK(P.vertex(amap[v]).rank == P.vertex(v).rank);
            for (auto u : P.above(v)) CHECK(P.less(amap[v], amap[u]));
        }
    }
}

TEST_CASE("class summaries: Alt5 and the Sym4 class sizes") {
    auto PA = build_quillen_poset(make_alt(5).group, 2);
    auto ca = class_summaries(PA);
    REQUIRE(ca.size() == 2);
    CHECK(ca[0].rank == 1);
    CHECK(ca[0].orbit_size == 15);
    CHECK(ca[1].rank == 2);
    CHECK(ca[1].orbit_size == 5);
    for (auto& c : ca) CHECK(c.orbit_size == c.normalizer_index);

    auto PS = build_quillen_poset(make_sym(4).group, 2);
    auto cs = class_summaries(PS);
    std::multiset<std::pair<unsigned, int>> sizes;
    for (auto& c : cs)
        sizes.insert({c.rank, static_cast<int>(c.orbit_size.convert_to<std::int64_t>())});
    std::multiset<std::pair<unsigned, int>> expect{{1, 6}, {1, 3}, {2, 3}, {2, 1}};
    CHECK(sizes == expect);
    // class sizes sum to the vertex count
    BigInt total = 0;
    for (auto& c : cs) total += c.orbit_size;
    CHECK(total == PS.size());
}

TEST_CASE("core reduction keeps Betti vectors") {
    struct Fx {
        std::string name;
        PermGroup g;
    };
    for (auto& f : std::vector<Fx>{{"Sym4", make_sym(4).group},
                                   {"PGL2(9)", projective_group(Family::PGL2, 9).group},
                                   {"Alt5", make_alt(5).group}}) {
        CAPTURE(f.name);
        auto P = build_quillen_poset(f.g, 2);
        auto R = core_reduction(P);
        auto B0 = betti(order_complex(P));
        auto B1 = betti(order_complex(R));
        for (int d = 0; d < 4; ++d) CHECK(B0.reduced(d) == B1.reduced(d));
    }
    // numbers from the named examples
    auto P9 = build_quillen_poset(projective_group(Family::PGL2, 9).group, 2);
    auto B = betti(order_complex(core_reduction(P9)));
    CHECK(B.reduced(0) == 0);
    CHECK(B.reduced(1) == 160);
    auto PA = build_quillen_poset(make_alt(5).group, 2);
    auto BA = betti(order_complex(core_reduction(PA)));
    CHECK(BA.reduced(0) == 4);
    CHECK(BA.reduced(1) == 0);
}

TEST_CASE("cone point removal collapses chains and keeps Betti vectors") {
    // a 3-chain inside A_2(C2^3) collapses to a point
    auto E8 = direct_product(direct_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2));
    auto P = build_quillen_poset(E8.group, 2);
    std::vector<bool> keep(P.size(), false);
    // pick a maximal chain v0 < v1 < v2
    std::size_t v2 = 0;
    for (std::size_t v = 0; v < P.size(); ++v)
        if (P.vertex(v).rank == 3) v2 = v;
    std::uint32_t v1 = P.below(v2)[0];
    for (auto u : P.below(v2))
        if (P.vertex(u).rank == 2) {
            v1 = u;
            break;
        }
    keep[v2] = keep[v1] = true;
    keep[P.below(v1)[0]] = true;
    auto chain = induced_subposet(P, keep, false);
    CHECK(chain.size() == 3);
    auto collapsed = cone_point_removal(chain);
    CHECK(collapsed.size() == 1);

    // Sym4 collapses to a handful of vertices with chi~ still 0
    auto PS = build_quillen_poset(make_sym(4).group, 2);
    auto RS = cone_point_removal(PS);
    CHECK(RS.size() <= 5);
    CHECK(euler_from_faces(order_complex(RS)) == 0);

    // PGL2(5): Betti [0,16] preserved
    auto PG = build_quillen_poset(projective_group(Family::PGL2, 5).group, 2);
    auto BG = betti(order_complex(cone_point_removal(PG)));
    CHECK(BG.reduced(0) == 0);
    CHECK(BG.reduced(1) == 16);
}

TEST_CASE("centralizer union subposets") {
    // L = PSL2(9), Bs = the 30 field-involution cyclic groups
    auto ext = extend(projective_group(Family::PSL2, 9), {ExtensionKind::Field});
    std::vector<PermGroup> Bs;
    ext.ext.group.for_each_element([&](const Permutation& g) {
        if (has_order_p(g, 2) && !ext.desc.base.group.contains(g))
            Bs.push_back(PermGroup::from_generators({g}, g.degree()));
        return true;
    });
    REQUIRE(Bs.size() == 30);
    auto X = centralizer_union_subposet(ext.desc.base.group, Bs, 2);
    CHECK(X.size() > 0);
    CHECK(X.size() < 75);
    // each piece is A_2 of a Sym4-shaped centralizer: contractible pieces,
    // so chi~ of the union is determined by homology, just sanity-check here
    CHECK(X.max_rank() == 2);

    CHECK(centralizer_union_subposet(make_alt(5).group, {}, 2).empty());

    // L = Alt5, one transposition subgroup from Sym5: A_2(Sym3), 3 vertices
    auto B = PermGroup::from_generators({Permutation({1, 0, 2, 3, 4})}, 5);
    auto X2 = centralizer_union_subposet(make_alt(5).group, {B}, 2);
    CHECK(X2.size() == 3);
    CHECK(X2.max_rank() == 1);
}

TEST_CASE("poset dumps are stable and carry the documented format") {
    auto P = build_quillen_poset(make_alt(5).group, 2);
    std::ostringstream a, b;
    dump_poset(P, a);
    dump_poset(P, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("v 0 rank 1 gens ") == 0);
    CHECK(a.str().find("\ne ") != std::string::npos);
}

TEST_CASE("contractibility direction: nontrivial core forces zero homology") {
    for (auto& g : {make_sym(4).group, make_dihedral(8).group, make_quaternion8().group,
                    make_c2_wr_c3().group}) {
        REQUIRE_FALSE(p_core(g, 2).group.is_trivial());
        auto B = betti(order_complex(build_quillen_poset(g, 2)));
        for (auto x : B.betti) CHECK(x == 0);
    }
}
