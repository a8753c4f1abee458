// Writes a generator file for the automorphism group of the split octonion
// algebra over GF(3), acting on the 1093 projective points of its trace-zero
// subspace. Every candidate map is admitted only after an exhaustive
// multiplicativity check on basis pairs, and the result is accepted only if
// the constructed group order is exactly 4245696, so the output file is
// self-certified: this group is G2(3).
//
// Usage: quillen-make-g2-fixture [output-path]   (default fixtures/g2_3.grp)

#include <array>
#include <iostream>
#include <vector>

#include "quillen/atlas.hpp"
#include "quillen/errors.hpp"

using namespace quillen;

namespace {

using F = std::uint8_t; // GF(3) scalar
inline F fadd(F a, F b) { return static_cast<F>((a + b) % 3); }
inline F fsub(F a, F b) { return static_cast<F>((a + 3 - b) % 3); }
inline F fmul(F a, F b) { return static_cast<F>((a * b) % 3); }

using V3 = std::array<F, 3>;
using Oct = std::array<F, 8>; // (a, v1, v2, v3, w1, w2, w3, b)

V3 cross(const V3& x, const V3& y) {
    return {fsub(fmul(x[1], y[2]), fmul(x[2], y[1])), fsub(fmul(x[2], y[0]), fmul(x[0], y[2])),
            fsub(fmul(x[0], y[1]), fmul(x[1], y[0]))};
}

F dot(const V3& x, const V3& y) {
    return fadd(fadd(fmul(x[0], y[0]), fmul(x[1], y[1])), fmul(x[2], y[2]));
}

V3 vpart(const Oct& x) { return {x[1], x[2], x[3]}; }
V3 wpart(const Oct& x) { return {x[4], x[5], x[6]}; }

// Zorn vector-matrix product. The cross-product signs are fixed by the
// alternativity and norm checks in validate_algebra().
Oct omul(const Oct& x, const Oct& y) {
    F a1 = x[0], b1 = x[7], a2 = y[0], b2 = y[7];
    V3 v1 = vpart(x), w1 = wpart(x), v2 = vpart(y), w2 = wpart(y);
    F a = fadd(fmul(a1, a2), dot(v1, w2));
    F b = fadd(fmul(b1, b2), dot(w1, v2));
    V3 cw = cross(w1, w2), cv = cross(v1, v2);
    Oct r{};
    r[0] = a;
    for (int i = 0; i < 3; ++i) {
        // v-slot: a1 v2 + b2 v1 - w1 x w2
        r[1 + i] = fsub(fadd(fmul(a1, v2[static_cast<std::size_t>(i)]),
                             fmul(b2, v1[static_cast<std::size_t>(i)])),
                        cw[static_cast<std::size_t>(i)]);
        // w-slot: a2 w1 + b1 w2 + v1 x v2
        r[4 + i] = fadd(fadd(fmul(a2, w1[static_cast<std::size_t>(i)]),
                             fmul(b1, w2[static_cast<std::size_t>(i)])),
                        cv[static_cast<std::size_t>(i)]);
    }
    r[7] = b;
    return r;
}

Oct oadd(const Oct& x, const Oct& y) {
    Oct r;
    for (int i = 0; i < 8; ++i) r[static_cast<std::size_t>(i)] = fadd(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i)]);
    return r;
}

Oct oneg(const Oct& x) {
    Oct r;
    for (int i = 0; i < 8; ++i) r[static_cast<std::size_t>(i)] = fsub(0, x[static_cast<std::size_t>(i)]);
    return r;
}

Oct basis(int i) {
    Oct r{};
    r[static_cast<std::size_t>(i)] = 1;
    return r;
}

Oct unit() {
    Oct r{};
    r[0] = r[7] = 1;
    return r;
}

F norm(const Oct& x) { return fsub(fmul(x[0], x[7]), dot(vpart(x), wpart(x))); }

void validate_algebra() {
    // alternativity and norm multiplicativity on all pairs of basis elements
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Oct x = basis(i), y = basis(j);
            Oct xy = omul(x, y);
            if (omul(x, omul(x, y)) != omul(omul(x, x), y))
                throw InternalError("octonion table is not left alternative");
            if (omul(omul(y, x), x) != omul(y, omul(x, x)))
                throw InternalError("octonion table is not right alternative");
            if (norm(xy) != fmul(norm(x), norm(y)))
                throw InternalError("octonion norm is not multiplicative");
        }
    Oct e = unit();
    for (int i = 0; i < 8; ++i)
        if (omul(e, basis(i)) != basis(i) || omul(basis(i), e) != basis(i))
            throw InternalError("octonion unit fails");
}

// linear map on the 8-dimensional algebra, column-major over basis images
struct Lin {
    std::array<Oct, 8> img; // image of basis(i)

    Oct apply(const Oct& x) const {
        Oct r{};
        for (int i = 0; i < 8; ++i) {
            if (!x[static_cast<std::size_t>(i)]) continue;
            for (int k = 0; k < 8; ++k)
                r[static_cast<std::size_t>(k)] =
                    fadd(r[static_cast<std::size_t>(k)],
                         fmul(x[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]));
        }
        return r;
    }
};

bool is_automorphism(const Lin& A) {
    if (A.apply(unit()) != unit()) return false;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Oct lhs = A.apply(omul(basis(i), basis(j)));
            Oct rhs = omul(A.apply(basis(i)), A.apply(basis(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

// Projective points of the 7-dimensional trace-zero subspace
// {(a, v; w, -a)}: coordinates (a, v1, v2, v3, w1, w2, w3).
using TCoord = std::array<F, 7>;

Oct to_oct(const TCoord& c) {
    Oct r{};
    r[0] = c[0];
    for (int i = 0; i < 3; ++i) {
        r[1 + i] = c[static_cast<std::size_t>(1 + i)];
        r[4 + i] = c[static_cast<std::size_t>(4 + i)];
    }
    r[7] = fsub(0, c[0]);
    return r;
}

TCoord from_oct(const Oct& x) {
    if (x[7] != fsub(0, x[0])) throw InternalError("image left the trace-zero subspace");
    TCoord c;
    c[0] = x[0];
    for (int i = 0; i < 3; ++i) {
        c[static_cast<std::size_t>(1 + i)] = x[static_cast<std::size_t>(1 + i)];
        c[static_cast<std::size_t>(4 + i)] = x[static_cast<std::size_t>(4 + i)];
    }
    return c;
}

TCoord canonical(TCoord c) {
    for (auto d : c) {
        if (d == 1) break;
        if (d == 2) { // scale by 2 so the first nonzero digit is 1
            for (auto& x : c) x = fmul(x, 2);
            break;
        }
    }
    return c;
}

std::uint32_t code_of(const TCoord& c) {
    std::uint32_t v = 0;
    for (int i = 6; i >= 0; --i) v = v * 3 + c[static_cast<std::size_t>(i)];
    return v;
}

struct Projective {
    std::vector<TCoord> pts;
    std::vector<std::int32_t> index_by_code;

    Projective() {
        index_by_code.assign(2187, -1);
        TCoord c{};
        for (std::uint32_t code = 1; code < 2187; ++code) {
            std::uint32_t x = code;
            for (int i = 0; i < 7; ++i) {
                c[static_cast<std::size_t>(i)] = static_cast<F>(x % 3);
                x /= 3;
            }
            TCoord k = canonical(c);
            if (k != c) continue;
            index_by_code[code_of(k)] = static_cast<std::int32_t>(pts.size());
            pts.push_back(k);
        }
        if (pts.size() != 1093) throw InternalError("projective trace-zero count is not 1093");
    }

    Permutation perm_of(const Lin& A) const {
        std::vector<std::uint32_t> img(pts.size());
        for (std::uint32_t i = 0; i < pts.size(); ++i) {
            TCoord t = from_oct(A.apply(to_oct(pts[i])));
            auto idx = index_by_code[code_of(canonical(t))];
            if (idx < 0) throw InternalError("image point is not projective");
            img[i] = static_cast<std::uint32_t>(idx);
        }
        return Permutation(std::move(img));
    }
};

// (a, v; w, b) -> (a, Mv; M^-T w, b) for M in SL3(3); exact automorphisms.
Lin sl3_map(const std::array<std::array<F, 3>, 3>& M, const std::array<std::array<F, 3>, 3>& MinvT) {
    Lin A;
    A.img[0] = basis(0);
    A.img[7] = basis(7);
    for (int c = 0; c < 3; ++c) {
        Oct v{};
        for (int r = 0; r < 3; ++r) v[static_cast<std::size_t>(1 + r)] = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        A.img[static_cast<std::size_t>(1 + c)] = v;
        Oct w{};
        for (int r = 0; r < 3; ++r) w[static_cast<std::size_t>(4 + r)] = MinvT[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        A.img[static_cast<std::size_t>(4 + c)] = w;
    }
    return A;
}

Lin ad_exp(const Oct& x) {
    // exp(ad_x) = 1 + ad_x + 2 ad_x^2 over GF(3)
    Lin A;
    for (int i = 0; i < 8; ++i) {
        Oct y = basis(i);
        Oct d1 = oadd(omul(x, y), oneg(omul(y, x)));
        Oct d2 = oadd(omul(x, d1), oneg(omul(d1, x)));
        Oct r = y;
        r = oadd(r, d1);
        for (auto& t : d2) t = fmul(t, 2);
        r = oadd(r, d2);
        A.img[static_cast<std::size_t>(i)] = r;
    }
    return A;
}

} // namespace

int main(int argc, char** argv) {
    std::string out_path = argc > 1 ? argv[1] : "fixtures/g2_3.grp";
    try {
        validate_algebra();
        Projective proj;
        const BigInt target("4245696");

        std::vector<Permutation> gens;
        PermGroup grp = PermGroup::trivial(1093);
        auto try_add = [&](const Permutation& p) {
            if (grp.contains(p)) return false;
            gens.push_back(p);
            grp = PermGroup::from_generators(gens, 1093);
            std::cerr << "  generators " << gens.size() << ", order " << grp.order() << "\n";
            return true;
        };

        // SL3(3) block maps
        std::array<std::array<F, 3>, 3> E12{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
        std::array<std::array<F, 3>, 3> E12invT{{{1, 0, 0}, {2, 1, 0}, {0, 0, 1}}};
        std::array<std::array<F, 3>, 3> C3{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
        std::array<std::array<F, 3>, 3> C3invT{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
        for (auto [M, MT] : {std::pair{E12, E12invT}, std::pair{C3, C3invT}}) {
            Lin A = sl3_map(M, MT);
            if (!is_automorphism(A)) throw InternalError("SL3 block map fails the product test");
            try_add(proj.perm_of(A));
        }

        // exponentials of inner derivations at nilpotent trace-zero elements
        for (std::uint32_t code = 1; code < 2187 && grp.order() < target; ++code) {
            std::uint32_t x = code;
            TCoord c{};
            for (int i = 0; i < 7; ++i) {
                c[static_cast<std::size_t>(i)] = static_cast<F>(x % 3);
                x /= 3;
            }
            Oct o = to_oct(c);
            if (omul(o, o) != Oct{}) continue; // x^2 = 0 keeps ad_x nilpotent
            Lin A = ad_exp(o);
            if (!is_automorphism(A)) continue;
            try_add(proj.perm_of(A));
        }

        if (grp.order() != target) {
            std::cerr << "failed: reached order " << grp.order() << ", expected " << target
                      << "\n";
            return 1;
        }
        LabeledGroup out;
        out.group = grp;
        out.name = "G2(3) (octonion automorphisms over GF(3))";
        out.family = Family::File;
        save_group_file(out, out_path, target);
        std::cout << "wrote " << out_path << " (degree 1093, order " << grp.order() << ", "
                  << gens.size() << " generators)\n";
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
