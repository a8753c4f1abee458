#include "quillen/fixtures.hpp"

#include "quillen/errors.hpp"

namespace quillen {

namespace {

LabeledGroup named(PermGroup g, std::string name, Family fam = Family::Fixture,
                   std::uint32_t q = 0) {
    LabeledGroup out;
    out.group = std::move(g);
    out.name = std::move(name);
    out.family = fam;
    out.q = q;
    return out;
}

Permutation cycle_n(std::uint32_t n) {
    std::vector<std::uint32_t> v(n);
    for (std::uint32_t i = 0; i < n; ++i) v[i] = (i + 1) % n;
    return Permutation(std::move(v));
}

void check_order(const LabeledGroup& g, const BigInt& expect) {
    if (g.group.order() != expect)
        throw InternalError("fixture " + g.name + " has wrong order " + g.group.order().str());
}

} // namespace

LabeledGroup make_cyclic(std::uint32_t n) {
    auto g = named(PermGroup::from_generators({cycle_n(n)}, n), "C" + std::to_string(n));
    check_order(g, n);
    return g;
}

LabeledGroup make_dihedral(std::uint32_t order) {
    if (order % 2 != 0 || order < 2) throw ConfigError("dihedral order must be even");
    std::uint32_t m = order / 2;
    if (m == 1) {
        auto g = named(PermGroup::from_generators({Permutation(std::vector<std::uint32_t>{1, 0})}, 2),
                       "D2");
        return g;
    }
    std::vector<std::uint32_t> refl(m);
    for (std::uint32_t i = 0; i < m; ++i) refl[i] = (m - i) % m;
    auto g = named(
        PermGroup::from_generators({cycle_n(m), Permutation(std::move(refl))}, m),
        "D" + std::to_string(order));
    check_order(g, order);
    return g;
}

LabeledGroup make_sym(std::uint32_t n) {
    std::vector<Permutation> gens;
    if (n >= 2) {
        std::vector<std::uint32_t> t(n);
        for (std::uint32_t i = 0; i < n; ++i) t[i] = i;
        t[0] = 1;
        t[1] = 0;
        gens.push_back(Permutation(std::move(t)));
        gens.push_back(cycle_n(n));
    }
    auto g = named(PermGroup::from_generators(gens, n), "Sym" + std::to_string(n), Family::Sym, n);
    check_order(g, family_order(Family::Sym, n));
    return g;
}

LabeledGroup make_alt(std::uint32_t n) {
    std::vector<Permutation> gens;
    if (n >= 3) {
        std::vector<std::uint32_t> c3(n);
        for (std::uint32_t i = 0; i < n; ++i) c3[i] = i;
        c3[0] = 1;
        c3[1] = 2;
        c3[2] = 0;
        gens.push_back(Permutation(std::move(c3)));
        if (n > 3) {
            std::vector<std::uint32_t> v(n);
            if (n % 2 == 1) {
                for (std::uint32_t i = 0; i < n; ++i) v[i] = (i + 1) % n; // full n-cycle, even
            } else {
                v[0] = 0;
                for (std::uint32_t i = 1; i < n; ++i) v[i] = i % (n - 1) + 1; // (n-1)-cycle
            }
            gens.push_back(Permutation(std::move(v)));
        }
    }
    auto g = named(PermGroup::from_generators(gens, n), "Alt" + std::to_string(n), Family::Alt, n);
    check_order(g, family_order(Family::Alt, n));
    return g;
}

LabeledGroup make_frobenius20() {
    // C5 : C4 with the C4 acting as x -> 2x mod 5.
    Permutation five = cycle_n(5);
    std::vector<std::uint32_t> mult2(5);
    for (std::uint32_t i = 0; i < 5; ++i) mult2[i] = (2 * i) % 5;
    auto g = named(PermGroup::from_generators({five, Permutation(std::move(mult2))}, 5), "F20");
    check_order(g, 20);
    return g;
}

LabeledGroup make_quaternion8() {
    // Regular action on {1,-1,i,-i,j,-j,k,-k} (0..7 in that order).
    Permutation pi(std::vector<std::uint32_t>{2, 3, 1, 0, 7, 6, 4, 5});
    Permutation pj(std::vector<std::uint32_t>{4, 5, 6, 7, 1, 0, 3, 2});
    auto g = named(PermGroup::from_generators({pi, pj}, 8), "Q8");
    check_order(g, 8);
    return g;
}

LabeledGroup make_c2_wr_c3() {
    Permutation swap01(std::vector<std::uint32_t>{1, 0, 2, 3, 4, 5});
    Permutation rot(std::vector<std::uint32_t>{2, 3, 4, 5, 0, 1});
    auto g = named(PermGroup::from_generators({swap01, rot}, 6), "C2wrC3");
    check_order(g, 24);
    return g;
}

LabeledGroup make_s3_wr_c2() {
    Permutation a(std::vector<std::uint32_t>{1, 0, 2, 3, 4, 5});
    Permutation b(std::vector<std::uint32_t>{1, 2, 0, 3, 4, 5});
    Permutation c(std::vector<std::uint32_t>{0, 1, 2, 4, 3, 5});
    Permutation d(std::vector<std::uint32_t>{0, 1, 2, 4, 5, 3});
    Permutation swap(std::vector<std::uint32_t>{3, 4, 5, 0, 1, 2});
    auto g = named(PermGroup::from_generators({a, b, c, d, swap}, 6), "S3wrC2");
    check_order(g, 72);
    return g;
}

LabeledGroup make_sl2_5() {
    // SL2(5) on the 24 nonzero vectors of GF(5)^2, indexed x*5 + y - 1 ... kept
    // simple: index nonzero (x, y) by 5*x + y, skipping (0,0), re-packed densely.
    auto F = make_field(5);
    auto idx_of = [&](std::uint32_t x, std::uint32_t y) {
        std::uint32_t flat = 5 * x + y;
        return flat - 1; // (0,0) is flat 0 and never occurs
    };
    auto mat_perm = [&](std::uint16_t a, std::uint16_t b, std::uint16_t c, std::uint16_t d) {
        std::vector<std::uint32_t> img(24);
        for (std::uint32_t x = 0; x < 5; ++x)
            for (std::uint32_t y = 0; y < 5; ++y) {
                if (x == 0 && y == 0) continue;
                std::uint16_t nx = F.add(F.mul(a, static_cast<std::uint16_t>(x)),
                                         F.mul(b, static_cast<std::uint16_t>(y)));
                std::uint16_t ny = F.add(F.mul(c, static_cast<std::uint16_t>(x)),
                                         F.mul(d, static_cast<std::uint16_t>(y)));
                img[idx_of(x, y)] = idx_of(nx, ny);
            }
        return Permutation(std::move(img));
    };
    auto g = named(
        PermGroup::from_generators({mat_perm(1, 1, 0, 1), mat_perm(0, 1, F.neg(1), 0)}, 24),
        "SL2(5)");
    check_order(g, 120);
    return g;
}

} // namespace quillen
