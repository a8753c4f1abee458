#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quillen/atlas.hpp"
#include "quillen/fixtures.hpp"
#include "quillen/homology.hpp"

using namespace quillen;

namespace {

ChainComplex complex_of(const PermGroup& g, unsigned p = 2) {
    return order_complex(build_quillen_poset(g, p));
}

// column-level check that consecutive boundaries compose to zero
void check_dd_zero(const ChainComplex& C) {
    for (std::size_t d = 1; d < C.boundary.size(); ++d) {
        const auto& up = C.boundary[d];
        const auto& down = C.boundary[d - 1];
        for (const auto& col : up) {
            std::map<std::uint32_t, int> acc;
            for (std::size_t k = 0; k < col.rows.size(); ++k) {
                const auto& facet = down[col.rows[k]];
                for (std::size_t j = 0; j < facet.rows.size(); ++j)
                    acc[facet.rows[j]] += col.signs[k] * facet.signs[j];
            }
            for (auto& [row, val] : acc) CHECK(val == 0);
        }
    }
}

} // namespace

TEST_CASE("face vectors of the named examples") {
    auto CA = complex_of(make_alt(5).group);
    REQUIRE(CA.f.size() == 2);
    CHECK(CA.f[0] == 20);
    CHECK(CA.f[1] == 15);
    auto CG = complex_of(projective_group(Family::PGL2, 5).group);
    CHECK(CG.f[0] == 45);
    CHECK(CG.f[1] == 60);
    auto CE = complex_of(make_cyclic(15).group);
    CHECK(CE.empty());
}

TEST_CASE("boundary of boundary is zero") {
    check_dd_zero(complex_of(make_alt(5).group));
    check_dd_zero(complex_of(make_sym(4).group));
    check_dd_zero(complex_of(projective_group(Family::PSU3, 3).group));
    auto ext = extend(projective_group(Family::PSL2, 9), {ExtensionKind::Field});
    check_dd_zero(complex_of(ext.ext.group));
}

TEST_CASE("Betti values of the anchor groups") {
    auto B1 = betti(complex_of(projective_group(Family::PSL2, 9).group));
    CHECK(B1.betti == std::vector<std::int64_t>{0, 16});
    auto B2 = betti(complex_of(projective_group(Family::PGL2, 9).group));
    CHECK(B2.betti == std::vector<std::int64_t>{0, 160});
    auto ext = extend(projective_group(Family::PSL2, 9), {ExtensionKind::Field});
    auto B3 = betti(complex_of(ext.ext.group));
    CHECK(B3.reduced(2) == 0);
    auto B4 = betti(complex_of(make_alt(5).group));
    CHECK(B4.betti == std::vector<std::int64_t>{4, 0});
    CHECK(B4.consistent);
}

TEST_CASE("empty complexes report homology in degree -1") {
    auto B = betti(complex_of(make_cyclic(15).group));
    CHECK(B.empty_complex);
    CHECK(B.reduced(-1) == 1);
    CHECK(B.reduced(0) == 0);
}

TEST_CASE("euler characteristics from faces") {
    CHECK(euler_from_faces(complex_of(make_alt(5).group)) == 4);
    CHECK(euler_from_faces(complex_of(make_sym(4).group)) == 0);
    CHECK(euler_from_faces(complex_of(projective_group(Family::PGL2, 9).group)) == -160);
    ChainComplex empty;
    CHECK(euler_from_faces(empty) == -1);
}

TEST_CASE("euler characteristics from class sums") {
    auto PA = build_quillen_poset(make_alt(5).group, 2);
    CHECK(euler_from_classes(class_summaries(PA), 2) == 4);
    auto PS = build_quillen_poset(make_sym(4).group, 2);
    CHECK(euler_from_classes(class_summaries(PS), 2) == 0);
    auto PG = build_quillen_poset(projective_group(Family::PGL2, 5).group, 2);
    CHECK(euler_from_classes(class_summaries(PG), 2) == -16);
}

TEST_CASE("the two Euler routes agree on every fixture") {
    for (auto& g : {make_sym(4).group, make_alt(5).group, make_frobenius20().group,
                    projective_group(Family::PGL2, 7).group,
                    projective_group(Family::PSU3, 3).group}) {
        auto P = build_quillen_poset(g, 2);
        CHECK(euler_from_faces(order_complex(P)) == euler_from_classes(class_summaries(P), 2));
    }
}

TEST_CASE("modular and exact backends agree, and both match the dense oracle") {
    for (auto& g : {make_alt(5).group, make_sym(4).group,
                    projective_group(Family::PGL2, 5).group,
                    projective_group(Family::PSL2, 9).group,
                    projective_group(Family::PSU3, 3).group}) {
        auto C = complex_of(g);
        auto Bm = betti(C, RankBackend::Modular);
        auto Be = betti(C, RankBackend::Exact);
        CHECK(Bm.betti == Be.betti);
        CHECK(Be.backend == "exact");
        CHECK(Bm.betti == oracle::naive_betti(C));
    }
}

TEST_CASE("sparse modular rank equals the dense rational oracle on random matrices") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 40; ++iter) {
        std::uint64_t rows = 2 + rng() % 25;
        std::size_t cols = 1 + rng() % 30;
        std::vector<ChainComplex::Column> m(cols);
        for (auto& col : m) {
            std::set<std::uint32_t> used;
            std::size_t nnz = rng() % 5;
            while (used.size() < nnz) used.insert(static_cast<std::uint32_t>(rng() % rows));
            for (auto r : used) {
                col.rows.push_back(r);
                col.signs.push_back(rng() % 2 ? 1 : -1);
            }
        }
        auto expect = oracle::naive_dense_rank(m, rows);
        CHECK(rank_modp(m, rows, 1073741831ull) == expect);
        CHECK(rank_exact(m, rows) == expect);
    }
}

TEST_CASE("betti alternating sums agree with the face-count Euler characteristic") {
    for (auto& g : {projective_group(Family::PSL2, 11).group,
                    projective_group(Family::PSL2, 13).group}) {
        auto C = complex_of(g);
        auto B = betti(C);
        BigInt alt = 0;
        for (std::size_t d = 0; d < B.betti.size(); ++d)
            alt += (d % 2 == 0 ? 1 : -1) * BigInt(B.betti[d]);
        CHECK(alt == euler_from_faces(C));
        CHECK(B.consistent);
    }
}

TEST_CASE("product fixtures satisfy the join identity") {
    auto a = make_sym(3), b = make_dihedral(10);
    auto prod = direct_product(a, b);
    auto chiA = euler_from_faces(complex_of(a.group));
    auto chiB = euler_from_faces(complex_of(b.group));
    auto chiAB = euler_from_faces(complex_of(prod.group));
    CHECK(chiAB == -chiA * chiB);
}

TEST_CASE("face budget raises a resource error naming the flag") {
    Caps tiny;
    tiny.face_budget = 10;
    CHECK_THROWS_AS(order_complex(build_quillen_poset(make_alt(5).group, 2), tiny),
                    ResourceError);
}
