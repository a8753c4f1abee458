#include "quillen/atlas.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "quillen/errors.hpp"

namespace quillen {

namespace {

struct PolyEntry {
    std::uint32_t q, r, a;
    // Monic irreducible polynomial x^a + c[a-1] x^(a-1) + ... + c[0],
    // coefficients over GF(r).
    std::array<std::uint16_t, 4> c;
};

// Fixed irreducible polynomials, kept as source constants so that element
// ids never depend on a search. Validity is re-checked at table build time.
constexpr PolyEntry kPolys[] = {
    {4, 2, 2, {1, 1, 0, 0}},   // x^2 + x + 1
    {8, 2, 3, {1, 1, 0, 0}},   // x^3 + x + 1
    {9, 3, 2, {2, 2, 0, 0}},   // x^2 + 2x + 2
    {25, 5, 2, {2, 4, 0, 0}},  // x^2 + 4x + 2
    {27, 3, 3, {1, 2, 0, 0}},  // x^3 + 2x + 1
    {49, 7, 2, {3, 6, 0, 0}},  // x^2 + 6x + 3
    {81, 3, 4, {2, 0, 0, 2}},  // x^4 + 2x^3 + 2
};

constexpr std::uint32_t kSupported[] = {3, 4, 5, 7, 8, 9, 11, 13, 25, 27, 49, 81};

std::vector<std::uint16_t> to_digits(std::uint32_t x, std::uint32_t r, std::uint32_t a) {
    std::vector<std::uint16_t> d(a);
    for (std::uint32_t i = 0; i < a; ++i) {
        d[i] = static_cast<std::uint16_t>(x % r);
        x /= r;
    }
    return d;
}

std::uint32_t from_digits(const std::vector<std::uint16_t>& d, std::uint32_t r) {
    std::uint32_t x = 0;
    for (std::size_t i = d.size(); i-- > 0;) x = x * r + d[i];
    return x;
}

} // namespace

bool field_supported(std::uint32_t q) {
    for (auto s : kSupported)
        if (s == q) return true;
    return false;
}

FieldTable make_field(std::uint32_t q) {
    if (!field_supported(q)) {
        std::ostringstream msg;
        msg << "unsupported field size " << q << "; supported:";
        for (auto s : kSupported) msg << ' ' << s;
        throw ConfigError(msg.str());
    }
    FieldTable F;
    F.q = q;
    // Prime field or a tabulated extension.
    bool prime = true;
    for (const auto& e : kPolys)
        if (e.q == q) prime = false;
    if (prime) {
        F.r = q;
        F.a = 1;
    } else {
        for (const auto& e : kPolys)
            if (e.q == q) {
                F.r = e.r;
                F.a = e.a;
            }
    }
    F.add_t.resize(q * q);
    F.mul_t.resize(q * q);
    F.neg_t.resize(q);
    F.inv_t.assign(q, 0);
    F.frob_t.resize(q);

    const std::uint32_t r = F.r, a = F.a;
    std::array<std::uint16_t, 4> poly{};
    for (const auto& e : kPolys)
        if (e.q == q) poly = e.c;

    auto reduce_mul = [&](std::uint32_t x, std::uint32_t y) -> std::uint32_t {
        auto dx = to_digits(x, r, a), dy = to_digits(y, r, a);
        std::vector<std::uint32_t> prod(2 * a - 1, 0);
        for (std::uint32_t i = 0; i < a; ++i)
            for (std::uint32_t j = 0; j < a; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % r;
        // reduce modulo x^a = -(c[a-1] x^(a-1) + ... + c[0])
        for (std::size_t k = prod.size(); k-- > a;) {
            std::uint32_t coef = prod[k];
            if (!coef) continue;
            prod[k] = 0;
            for (std::uint32_t i = 0; i < a; ++i) {
                std::uint32_t sub = (coef * poly[i]) % r;
                prod[k - a + i] = (prod[k - a + i] + r - sub) % r;
            }
        }
        std::vector<std::uint16_t> out(a);
        for (std::uint32_t i = 0; i < a; ++i) out[i] = static_cast<std::uint16_t>(prod[i]);
        return from_digits(out, r);
    };

    for (std::uint32_t x = 0; x < q; ++x) {
        auto dx = to_digits(x, r, a);
        for (std::uint32_t y = 0; y < q; ++y) {
            auto dy = to_digits(y, r, a);
            std::vector<std::uint16_t> s(a);
            for (std::uint32_t i = 0; i < a; ++i)
                s[i] = static_cast<std::uint16_t>((dx[i] + dy[i]) % r);
            F.add_t[x * q + y] = static_cast<std::uint16_t>(from_digits(s, r));
            F.mul_t[x * q + y] = static_cast<std::uint16_t>(reduce_mul(x, y));
        }
        std::vector<std::uint16_t> n(a);
        for (std::uint32_t i = 0; i < a; ++i)
            n[i] = static_cast<std::uint16_t>((r - dx[i]) % r);
        F.neg_t[x] = static_cast<std::uint16_t>(from_digits(n, r));
    }
    for (std::uint32_t x = 1; x < q; ++x) {
        for (std::uint32_t y = 1; y < q; ++y)
            if (F.mul_t[x * q + y] == 1) {
                F.inv_t[x] = static_cast<std::uint16_t>(y);
                break;
            }
        if (F.inv_t[x] == 0)
            throw InternalError("field table has a non-invertible element (bad polynomial)");
    }
    for (std::uint32_t x = 0; x < q; ++x) {
        std::uint16_t y = static_cast<std::uint16_t>(x);
        std::uint16_t p = 1;
        for (std::uint32_t i = 0; i < r; ++i) p = F.mul_t[p * q + x];
        (void)y;
        F.frob_t[x] = p;
    }
    // Smallest primitive element.
    for (std::uint32_t g = 2; g < q; ++g) {
        std::uint32_t ordc = 1;
        std::uint16_t v = static_cast<std::uint16_t>(g);
        while (v != 1) {
            v = F.mul_t[v * q + g];
            ++ordc;
        }
        if (ordc == q - 1) {
            F.primitive = static_cast<std::uint16_t>(g);
            break;
        }
    }
    if (q > 2 && F.primitive == 0) throw InternalError("no primitive element found");
    return F;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::PSL2: return "PSL2";
        case Family::PGL2: return "PGL2";
        case Family::PSL3: return "PSL3";
        case Family::PGL3: return "PGL3";
        case Family::PSU3: return "PSU3";
        case Family::PGU3: return "PGU3";
        case Family::Sym: return "Sym";
        case Family::Alt: return "Alt";
        case Family::Product: return "Product";
        case Family::Quotient: return "Quotient";
        case Family::File: return "File";
        case Family::Fixture: return "Fixture";
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& s) {
    for (Family f : {Family::PSL2, Family::PGL2, Family::PSL3, Family::PGL3, Family::PSU3,
                     Family::PGU3, Family::Sym, Family::Alt})
        if (family_name(f) == s) return f;
    return std::nullopt;
}

BigInt family_order(Family f, std::uint32_t q) {
    const BigInt Q = q;
    switch (f) {
        case Family::PSL2: return Q * (Q * Q - 1) / BigInt(q % 2 == 0 ? 1 : 2);
        case Family::PGL2: return Q * (Q * Q - 1);
        case Family::PSL3:
            return bpow(Q, 3) * (bpow(Q, 3) - 1) * (Q * Q - 1) / BigInt((q - 1) % 3 == 0 ? 3 : 1);
        case Family::PGL3: return bpow(Q, 3) * (bpow(Q, 3) - 1) * (Q * Q - 1);
        case Family::PSU3:
            return bpow(Q, 3) * (bpow(Q, 3) + 1) * (Q * Q - 1) / BigInt((q + 1) % 3 == 0 ? 3 : 1);
        case Family::PGU3: return bpow(Q, 3) * (bpow(Q, 3) + 1) * (Q * Q - 1);
        case Family::Sym: {
            BigInt o = 1;
            for (std::uint32_t i = 2; i <= q; ++i) o *= i;
            return o;
        }
        case Family::Alt: {
            BigInt o = 1;
            for (std::uint32_t i = 2; i <= q; ++i) o *= i;
            return q >= 2 ? o / 2 : o;
        }
        default: throw ConfigError("no order formula for family " + family_name(f));
    }
}

namespace {

using Vec3 = std::array<std::uint16_t, 3>;

struct Mat3 {
    // m[row][col]; for 2x2 use the upper-left block with m[2][2] = 1.
    std::array<std::array<std::uint16_t, 3>, 3> m{};
};

Mat3 identity3() {
    Mat3 I;
    I.m[0][0] = I.m[1][1] = I.m[2][2] = 1;
    return I;
}

Mat3 matmul(const FieldTable& F, const Mat3& A, const Mat3& B) {
    Mat3 C;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::uint16_t s = 0;
            for (int k = 0; k < 3; ++k) s = F.add(s, F.mul(A.m[i][k], B.m[k][j]));
            C.m[i][j] = s;
        }
    return C;
}

std::uint16_t det3(const FieldTable& F, const Mat3& A) {
    auto mul = [&](std::uint16_t a, std::uint16_t b) { return F.mul(a, b); };
    std::uint16_t t1 = mul(A.m[0][0], F.sub(mul(A.m[1][1], A.m[2][2]), mul(A.m[1][2], A.m[2][1])));
    std::uint16_t t2 = mul(A.m[0][1], F.sub(mul(A.m[1][0], A.m[2][2]), mul(A.m[1][2], A.m[2][0])));
    std::uint16_t t3 = mul(A.m[0][2], F.sub(mul(A.m[1][0], A.m[2][1]), mul(A.m[1][1], A.m[2][0])));
    return F.add(F.sub(t1, t2), t3);
}

Mat3 inverse3(const FieldTable& F, const Mat3& A) {
    std::uint16_t d = det3(F, A);
    if (d == 0) throw InternalError("singular matrix");
    std::uint16_t di = F.inv(d);
    Mat3 C; // adjugate transpose
    auto co = [&](int i, int j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return F.sub(F.mul(A.m[r0][c0], A.m[r1][c1]), F.mul(A.m[r0][c1], A.m[r1][c0]));
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) C.m[j][i] = F.mul(di, co(i, j));
    return C;
}

// Normalized projective labels (first nonzero coordinate equals 1), in
// ascending lexicographic order.
std::vector<PointLabel> projective_labels(const FieldTable& F, int dim, bool dual) {
    std::vector<PointLabel> out;
    std::vector<std::uint16_t> v(dim, 0);
    const std::uint64_t total = [&] {
        std::uint64_t t = 1;
        for (int i = 0; i < dim; ++i) t *= F.q;
        return t;
    }();
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = dim - 1; i >= 0; --i) {
            v[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(c % F.q);
            c /= F.q;
        }
        int first = -1;
        for (int i = 0; i < dim; ++i)
            if (v[static_cast<std::size_t>(i)] != 0) {
                first = i;
                break;
            }
        if (first < 0 || v[static_cast<std::size_t>(first)] != 1) continue;
        out.push_back(PointLabel{v, dual});
    }
    return out;
}

void normalize_label(const FieldTable& F, std::vector<std::uint16_t>& v) {
    std::uint16_t lead = 0;
    for (auto x : v)
        if (x != 0) {
            lead = x;
            break;
        }
    if (lead == 0 || lead == 1) return;
    std::uint16_t s = F.inv(lead);
    for (auto& x : v) x = F.mul(x, s);
}

struct Domain {
    const FieldTable* F;
    int dim;
    std::vector<PointLabel> labels;
    std::map<PointLabel, std::uint32_t> index;

    void finish() {
        for (std::uint32_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    }
    std::uint32_t find(const PointLabel& l) const {
        auto it = index.find(l);
        if (it == index.end()) throw InternalError("projective point not in domain");
        return it->second;
    }
};

// Permutation of the domain induced by M (points: v -> Mv, hyperplanes:
// h -> h M^-1), both renormalized.
Permutation matrix_perm(const Domain& D, const Mat3& M) {
    const FieldTable& F = *D.F;
    Mat3 Minv = inverse3(F, M);
    std::vector<std::uint32_t> img(D.labels.size());
    for (std::uint32_t i = 0; i < D.labels.size(); ++i) {
        const PointLabel& L = D.labels[i];
        std::vector<std::uint16_t> w(static_cast<std::size_t>(D.dim), 0);
        if (!L.dual) {
            for (int rr = 0; rr < D.dim; ++rr) {
                std::uint16_t s = 0;
                for (int k = 0; k < D.dim; ++k)
                    s = F.add(s, F.mul(M.m[rr][k], L.v[static_cast<std::size_t>(k)]));
                w[static_cast<std::size_t>(rr)] = s;
            }
        } else {
            for (int cc = 0; cc < D.dim; ++cc) {
                std::uint16_t s = 0;
                for (int k = 0; k < D.dim; ++k)
                    s = F.add(s, F.mul(L.v[static_cast<std::size_t>(k)], Minv.m[k][cc]));
                w[static_cast<std::size_t>(cc)] = s;
            }
        }
        normalize_label(F, w);
        img[i] = D.find(PointLabel{w, L.dual});
    }
    return Permutation(std::move(img));
}

std::uint16_t conj_of(const FieldTable& F2, std::uint32_t e, std::uint16_t x) {
    return F2.pow_frob(x, e); // x -> x^q for GF(q^2), q = r^e
}

// Generator matrices (SL2 embedded in the 3x3 carrier).
std::vector<Mat3> sl2_gens(const FieldTable& F) {
    std::vector<Mat3> gens;
    for (std::uint32_t i = 0; i < F.a; ++i) {
        std::uint16_t lambda = 1;
        for (std::uint32_t k = 0; k < i; ++k)
            lambda = static_cast<std::uint16_t>(F.mul(lambda, static_cast<std::uint16_t>(F.r)));
        Mat3 T = identity3();
        T.m[0][1] = lambda;
        gens.push_back(T);
    }
    Mat3 W = identity3();
    W.m[0][0] = 0;
    W.m[0][1] = 1;
    W.m[1][0] = F.neg(1);
    W.m[1][1] = 0;
    gens.push_back(W);
    return gens;
}

std::vector<Mat3> sl3_gens(const FieldTable& F) {
    std::vector<Mat3> gens;
    for (std::uint32_t i = 0; i < F.a; ++i) {
        std::uint16_t lambda = 1;
        for (std::uint32_t k = 0; k < i; ++k)
            lambda = static_cast<std::uint16_t>(F.mul(lambda, static_cast<std::uint16_t>(F.r)));
        Mat3 T = identity3();
        T.m[0][1] = lambda;
        gens.push_back(T);
    }
    Mat3 C{}; // cyclic e1->e2->e3->e1, determinant +1
    C.m[1][0] = 1;
    C.m[2][1] = 1;
    C.m[0][2] = 1;
    gens.push_back(C);
    return gens;
}

std::vector<Mat3> su3_gens(const FieldTable& F2, std::uint32_t e) {
    auto conj = [&](std::uint16_t x) { return conj_of(F2, e, x); };
    auto trace0 = [&](std::uint16_t b) { return F2.add(b, conj(b)) == 0; };
    std::vector<Mat3> gens;
    auto push_u = [&](std::uint16_t aa, std::uint16_t bb) {
        Mat3 U = identity3();
        U.m[0][1] = aa;
        U.m[0][2] = bb;
        U.m[1][2] = F2.neg(conj(aa));
        gens.push_back(U);
    };
    for (std::uint32_t i = 0; i < F2.a; ++i) {
        std::uint16_t aa = 1;
        for (std::uint32_t k = 0; k < i; ++k)
            aa = static_cast<std::uint16_t>(F2.mul(aa, static_cast<std::uint16_t>(F2.r)));
        // need b with b + conj(b) = -a*conj(a)
        std::uint16_t target = F2.neg(F2.mul(aa, conj(aa)));
        for (std::uint32_t b = 0; b < F2.q; ++b)
            if (F2.add(static_cast<std::uint16_t>(b), conj(static_cast<std::uint16_t>(b))) ==
                target) {
                push_u(aa, static_cast<std::uint16_t>(b));
                break;
            }
    }
    for (std::uint32_t b = 1; b < F2.q; ++b)
        if (trace0(static_cast<std::uint16_t>(b))) push_u(0, static_cast<std::uint16_t>(b));
    Mat3 W{};
    W.m[0][2] = 1;
    W.m[1][1] = F2.neg(1);
    W.m[2][0] = 1;
    gens.push_back(W);
    return gens;
}

bool is_prime_power_odd_supported(std::uint32_t q) { return field_supported(q) && q % 2 == 1; }

Domain make_domain(const FieldTable& F, Family fam, bool doubled) {
    Domain D;
    D.F = &F;
    if (fam == Family::PSL2 || fam == Family::PGL2) {
        D.dim = 2;
        D.labels = projective_labels(F, 2, false);
    } else if (fam == Family::PSL3 || fam == Family::PGL3) {
        D.dim = 3;
        D.labels = projective_labels(F, 3, false);
        if (doubled) {
            auto duals = projective_labels(F, 3, true);
            D.labels.insert(D.labels.end(), duals.begin(), duals.end());
        }
    } else {
        throw InternalError("make_domain: unitary groups use make_unitary_domain");
    }
    D.finish();
    return D;
}

Domain make_unitary_domain(const FieldTable& F2, std::uint32_t e) {
    Domain D;
    D.F = &F2;
    D.dim = 3;
    auto conj = [&](std::uint16_t x) { return conj_of(F2, e, x); };
    for (auto& L : projective_labels(F2, 3, false)) {
        // H(v,v) = v0 conj(v2) + v1 conj(v1) + v2 conj(v0)
        std::uint16_t h = F2.add(F2.add(F2.mul(L.v[0], conj(L.v[2])), F2.mul(L.v[1], conj(L.v[1]))),
                                 F2.mul(L.v[2], conj(L.v[0])));
        if (h == 0) D.labels.push_back(L);
    }
    D.finish();
    return D;
}

struct BuiltGroup {
    LabeledGroup lg;
    Domain dom;
    std::vector<Mat3> mats; // generator matrices, aligned with lg.group.generators()
};

BuiltGroup build_projective(Family fam, std::uint32_t q, bool doubled) {
    const bool unitary = fam == Family::PSU3 || fam == Family::PGU3;
    const std::uint32_t field_q = unitary ? q * q : q;
    if (unitary && !is_prime_power_odd_supported(q))
        throw ConfigError("unitary families need odd q with q^2 in the supported field set");
    FieldTable F = make_field(field_q);

    BuiltGroup out;
    out.lg.family = fam;
    out.lg.q = q;
    out.lg.name = family_name(fam) + "(" + std::to_string(q) + ")";
    out.lg.field = F;
    const FieldTable& FT = *out.lg.field;

    std::uint32_t e = 0;
    if (unitary) {
        // q = r^e, field is GF(q^2) = GF(r^(2e))
        e = FT.a / 2;
    }
    out.dom = unitary ? make_unitary_domain(FT, e) : make_domain(FT, fam, doubled);
    if (unitary && out.dom.labels.size() != static_cast<std::size_t>(q) * q * q + 1)
        throw InternalError("isotropic point count is not q^3 + 1");

    std::vector<Mat3> mats;
    switch (fam) {
        case Family::PSL2: mats = sl2_gens(FT); break;
        case Family::PGL2: {
            mats = sl2_gens(FT);
            Mat3 D = identity3();
            D.m[0][0] = FT.primitive;
            mats.push_back(D);
            break;
        }
        case Family::PSL3: mats = sl3_gens(FT); break;
        case Family::PGL3: {
            mats = sl3_gens(FT);
            Mat3 D = identity3();
            D.m[0][0] = FT.primitive;
            mats.push_back(D);
            break;
        }
        case Family::PSU3: mats = su3_gens(FT, e); break;
        case Family::PGU3: {
            mats = su3_gens(FT, e);
            Mat3 D = identity3();
            D.m[0][0] = FT.primitive;
            D.m[2][2] = FT.inv(FT.pow_frob(FT.primitive, e));
            mats.push_back(D);
            break;
        }
        default: throw ConfigError("projective_group: unsupported family " + family_name(fam));
    }

    std::vector<Permutation> perms;
    perms.reserve(mats.size());
    for (const auto& M : mats) perms.push_back(matrix_perm(out.dom, M));
    out.lg.group =
        PermGroup::from_generators(perms, static_cast<std::uint32_t>(out.dom.labels.size()));
    out.lg.labels = out.dom.labels;
    out.mats = std::move(mats);

    BigInt expect = family_order(fam, q);
    if (out.lg.group.order() != expect) {
        std::ostringstream msg;
        msg << out.lg.name << ": constructed order " << out.lg.group.order()
            << " does not match the family order " << expect;
        throw InternalError(msg.str());
    }
    return out;
}

} // namespace

LabeledGroup projective_group(Family family, std::uint32_t q) {
    switch (family) {
        case Family::PSL2:
        case Family::PGL2:
        case Family::PSL3:
        case Family::PGL3:
        case Family::PSU3:
        case Family::PGU3: break;
        default: throw ConfigError("projective_group: family must be one of the Lie families");
    }
    if (!field_supported(family == Family::PSU3 || family == Family::PGU3 ? q * q : q))
        throw ConfigError("unsupported q for " + family_name(family));
    return build_projective(family, q, false).lg;
}

std::string kind_name(ExtensionKind k) {
    switch (k) {
        case ExtensionKind::Field: return "field";
        case ExtensionKind::Graph: return "graph";
        case ExtensionKind::Diagonal: return "diagonal";
        case ExtensionKind::GraphField: return "graph-field";
    }
    return "?";
}

std::optional<ExtensionKind> parse_kind(const std::string& s) {
    for (ExtensionKind k : {ExtensionKind::Field, ExtensionKind::Graph, ExtensionKind::Diagonal,
                            ExtensionKind::GraphField})
        if (kind_name(k) == s) return k;
    return std::nullopt;
}

namespace {

// Coordinate Frobenius x -> x^(r^k) on every label; fixes normalization
// because 1 is fixed.
Permutation frobenius_perm(const Domain& D, std::uint32_t k) {
    std::vector<std::uint32_t> img(D.labels.size());
    for (std::uint32_t i = 0; i < D.labels.size(); ++i) {
        PointLabel L = D.labels[i];
        for (auto& x : L.v) x = D.F->pow_frob(x, k);
        img[i] = D.find(L);
    }
    return Permutation(std::move(img));
}

// Point <-> hyperplane swap with equal coordinates (inverse-transpose).
Permutation duality_perm(const Domain& D) {
    std::vector<std::uint32_t> img(D.labels.size());
    for (std::uint32_t i = 0; i < D.labels.size(); ++i) {
        PointLabel L = D.labels[i];
        L.dual = !L.dual;
        img[i] = D.find(L);
    }
    return Permutation(std::move(img));
}

Permutation diagonal_involution_perm(const Domain& D, const FieldTable& F) {
    Mat3 M = identity3();
    if (F.q % 4 == 3) {
        M.m[0][0] = F.neg(1); // det -1, a nonsquare
    } else {
        M.m[0][0] = 0;
        M.m[0][1] = 1;
        M.m[1][0] = F.primitive; // M^2 = primitive * I, det = -primitive
        M.m[1][1] = 0;
    }
    return matrix_perm(D, M);
}

} // namespace

Extension extend(const LabeledGroup& base, const std::vector<ExtensionKind>& kinds,
                 const Caps& caps) {
    const Family fam = base.family;
    switch (fam) {
        case Family::PSL2:
        case Family::PGL2:
        case Family::PSL3:
        case Family::PGL3:
        case Family::PSU3:
        case Family::PGU3: break;
        default:
            throw ConfigError("extend: base must be one of the projective families");
    }
    if (kinds.empty()) throw ConfigError("extend: no kinds requested");
    std::vector<ExtensionKind> ks = kinds;
    std::sort(ks.begin(), ks.end());
    if (std::adjacent_find(ks.begin(), ks.end()) != ks.end())
        throw ConfigError("extend: duplicate kind");

    const bool linear3 = fam == Family::PSL3 || fam == Family::PGL3;
    const bool unitary = fam == Family::PSU3 || fam == Family::PGU3;
    const bool dim2 = fam == Family::PSL2 || fam == Family::PGL2;

    bool want_graphish = false;
    for (auto k : ks) {
        switch (k) {
            case ExtensionKind::Field:
                if (unitary)
                    throw ConfigError(
                        "field automorphisms of unitary groups have odd order at order 2; the "
                        "involution x -> x^q is the graph kind");
                if (base.field->a % 2 != 0)
                    throw ConfigError("field kind needs square q (even field degree)");
                break;
            case ExtensionKind::Graph:
                if (dim2) throw ConfigError("PSL2/PGL2 have no graph automorphism");
                if (linear3) want_graphish = true;
                break;
            case ExtensionKind::GraphField:
                if (!linear3)
                    throw ConfigError("graph-field kind is available for PSL3/PGL3 only");
                if (base.field->a % 2 != 0)
                    throw ConfigError("graph-field kind needs square q");
                want_graphish = true;
                if (ks.size() > 1)
                    throw ConfigError(
                        "graph-field combines with no other kind; request {field, graph} instead");
                break;
            case ExtensionKind::Diagonal:
                if (fam != Family::PSL2)
                    throw ConfigError(
                        "diagonal kind needs an outer-diagonal involution, which only PSL2 has "
                        "among the supported families");
                break;
        }
    }

    // Rebuild the base on its construction domain (doubled when a duality
    // representative is requested).
    BuiltGroup built = build_projective(fam, base.q, want_graphish);
    const Domain& D = built.dom;
    const FieldTable& F = *built.lg.field;

    std::vector<std::pair<ExtensionKind, Permutation>> reps;
    for (auto k : ks) {
        Permutation rep;
        switch (k) {
            case ExtensionKind::Field: rep = frobenius_perm(D, F.a / 2); break;
            case ExtensionKind::Graph:
                rep = unitary ? frobenius_perm(D, F.a / 2) : duality_perm(D);
                break;
            case ExtensionKind::GraphField:
                rep = compose(frobenius_perm(D, F.a / 2), duality_perm(D));
                break;
            case ExtensionKind::Diagonal: rep = diagonal_involution_perm(D, F); break;
        }
        reps.emplace_back(k, std::move(rep));
    }

    // Validate each representative, then make the set pairwise commuting,
    // conjugating later representatives by base elements when necessary.
    const PermGroup& B = built.lg.group;
    for (auto& [k, rep] : reps) {
        if (!has_order_p(rep, 2))
            throw ConstructionError("extension representative is not an involution");
        if (B.contains(rep))
            throw ConstructionError(kind_name(k) + " representative lies in the base group");
        for (const auto& g : B.generators())
            if (!B.contains(conjugate(g, rep)))
                throw ConstructionError(kind_name(k) + " representative does not normalize");
    }
    for (std::size_t i = 1; i < reps.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < i; ++j)
            if (!commute(reps[i].second, reps[j].second)) ok = false;
        if (ok) continue;
        if (B.order() > BigInt(caps.brute_force_cap))
            throw ResourceError("commuting-representative search exceeds cap (raise --brute-cap)");
        bool found = false;
        B.for_each_element([&](const Permutation& g) {
            Permutation cand = conjugate(reps[i].second, g);
            for (std::size_t j = 0; j < i; ++j)
                if (!commute(cand, reps[j].second)) return true;
            reps[i].second = cand;
            found = true;
            return false;
        });
        if (!found)
            throw ConstructionError(
                "no commuting representative exists for kind set (field and diagonal involutions "
                "do not commute); kind " +
                kind_name(reps[i].first) + " obstructs");
    }

    std::vector<Permutation> gens = B.generators();
    for (auto& [k, rep] : reps) gens.push_back(rep);
    PermGroup E = PermGroup::from_generators(gens, B.degree());

    const BigInt expect = B.order() * bpow(2, static_cast<unsigned>(reps.size()));
    if (E.order() != expect)
        throw ConstructionError("extension does not split with the expected order");
    std::vector<Permutation> comp_gens;
    for (auto& [k, rep] : reps) comp_gens.push_back(rep);
    PermGroup C = PermGroup::from_generators(comp_gens, B.degree());
    if (C.order() != bpow(2, static_cast<unsigned>(reps.size())) ||
        !is_elementary_abelian(C, 2))
        throw ConstructionError("extension complement is not elementary abelian of order 2^k");
    bool trivial_meet = true;
    C.for_each_element([&](const Permutation& x) {
        if (!x.is_identity() && B.contains(x)) trivial_meet = false;
        return trivial_meet;
    });
    if (!trivial_meet) throw ConstructionError("extension complement meets the base");

    Extension out;
    out.desc.base = built.lg;
    out.desc.reps = reps;
    out.ext = built.lg;
    out.ext.group = E;
    std::string kn;
    for (auto k : ks) {
        if (!kn.empty()) kn += ",";
        kn += kind_name(k);
    }
    out.ext.name = built.lg.name + ":" + kn;
    return out;
}

LabeledGroup direct_product(const LabeledGroup& A, const LabeledGroup& B) {
    const std::uint32_t dA = A.group.degree(), dB = B.group.degree();
    std::vector<Permutation> gens;
    for (const auto& g : A.group.generators()) {
        std::vector<std::uint32_t> img(dA + dB);
        for (std::uint32_t i = 0; i < dA; ++i) img[i] = g(i);
        for (std::uint32_t i = 0; i < dB; ++i) img[dA + i] = dA + i;
        gens.emplace_back(std::move(img));
    }
    for (const auto& g : B.group.generators()) {
        std::vector<std::uint32_t> img(dA + dB);
        for (std::uint32_t i = 0; i < dA; ++i) img[i] = i;
        for (std::uint32_t i = 0; i < dB; ++i) img[dA + i] = dA + g(i);
        gens.emplace_back(std::move(img));
    }
    LabeledGroup out;
    out.group = PermGroup::from_generators(gens, dA + dB);
    out.family = Family::Product;
    out.name = A.name + " x " + B.name;
    if (out.group.order() != A.group.order() * B.group.order())
        throw InternalError("direct product order mismatch");
    return out;
}

LabeledGroup quotient_by_central(const LabeledGroup& G, const PermGroup& Z, const Caps& caps) {
    if (!is_subgroup_of(Z, G.group))
        throw MembershipError("quotient_by_central: Z is not a subgroup of G");
    for (const auto& z : Z.generators())
        for (const auto& g : G.group.generators())
            if (!commute(z, g))
                throw ConfigError("quotient_by_central: Z is not central in G");

    auto zelems = Z.all_elements(caps.element_scan_cap);
    auto canon = [&](const Permutation& x) {
        Permutation best = compose(zelems[0], x);
        for (std::size_t i = 1; i < zelems.size(); ++i) {
            Permutation c = compose(zelems[i], x);
            if (c < best) best = c;
        }
        return best;
    };

    // Enumerate coset representatives.
    std::map<Permutation, std::uint32_t> coset_index;
    std::vector<Permutation> reps;
    if (G.group.order() > BigInt(caps.element_scan_cap))
        throw ResourceError("quotient construction exceeds cap (raise --element-cap)");
    G.group.for_each_element([&](const Permutation& g) {
        Permutation c = canon(g);
        if (coset_index.emplace(c, static_cast<std::uint32_t>(reps.size())).second)
            reps.push_back(c);
        return true;
    });
    const std::uint32_t n = static_cast<std::uint32_t>(reps.size());

    std::vector<Permutation> gens;
    for (const auto& g : G.group.generators()) {
        std::vector<std::uint32_t> img(n);
        for (std::uint32_t i = 0; i < n; ++i) img[i] = coset_index.at(canon(compose(reps[i], g)));
        gens.emplace_back(std::move(img));
    }
    LabeledGroup out;
    out.group = PermGroup::from_generators(gens, n);
    out.family = Family::Quotient;
    out.name = G.name + "/Z" + Z.order().str();
    if (out.group.order() * Z.order() != G.group.order())
        throw InternalError("central quotient order mismatch");
    return out;
}

std::uint64_t count_involutions_outside(const PermGroup& big, const PermGroup& sub,
                                        const Caps& caps) {
    if (big.order() > BigInt(caps.element_scan_cap))
        throw ResourceError("involution scan exceeds cap (raise --element-cap)");
    std::uint64_t n = 0;
    big.for_each_element([&](const Permutation& g) {
        if (has_order_p(g, 2) && !sub.contains(g)) ++n;
        return true;
    });
    return n;
}

} // namespace quillen
