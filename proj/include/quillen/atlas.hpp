#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quillen/permgroup.hpp"

namespace quillen {

// Arithmetic tables for GF(q), q = r^a with a fixed irreducible polynomial.
// Element ids are 0..q-1 in the polynomial basis (id = sum of digit_i * r^i).
struct FieldTable {
    std::uint32_t q = 0, r = 0, a = 0;
    std::vector<std::uint16_t> add_t, mul_t; // q*q, row-major
    std::vector<std::uint16_t> neg_t, inv_t; // inv_t[0] unused
    std::vector<std::uint16_t> frob_t;       // x -> x^r
    std::uint16_t primitive = 0;             // generator of the multiplicative group

    std::uint16_t add(std::uint16_t x, std::uint16_t y) const { return add_t[x * q + y]; }
    std::uint16_t mul(std::uint16_t x, std::uint16_t y) const { return mul_t[x * q + y]; }
    std::uint16_t sub(std::uint16_t x, std::uint16_t y) const { return add_t[x * q + neg_t[y]]; }
    std::uint16_t neg(std::uint16_t x) const { return neg_t[x]; }
    std::uint16_t inv(std::uint16_t x) const { return inv_t[x]; }
    std::uint16_t frob(std::uint16_t x) const { return frob_t[x]; }
    std::uint16_t pow_frob(std::uint16_t x, std::uint32_t k) const {
        for (std::uint32_t i = 0; i < k; ++i) x = frob_t[x];
        return x;
    }
};

// Supported q: {3,4,5,7,8,9,11,13,25,27,49,81}. Throws ConfigError otherwise.
FieldTable make_field(std::uint32_t q);
bool field_supported(std::uint32_t q);

enum class Family { PSL2, PGL2, PSL3, PGL3, PSU3, PGU3, Sym, Alt, Product, Quotient, File, Fixture };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& s);

// Standard order of the family at parameter q (exact).
BigInt family_order(Family f, std::uint32_t q);

// A projective point or hyperplane label: normalized coordinate vector over
// the group's field (first nonzero entry is 1). dual marks hyperplanes on
// doubled domains.
struct PointLabel {
    std::vector<std::uint16_t> v;
    bool dual = false;

    bool operator==(const PointLabel&) const = default;
    auto operator<=>(const PointLabel&) const = default;
};

struct LabeledGroup {
    PermGroup group;
    std::string name;
    Family family = Family::Fixture;
    std::uint32_t q = 0; // natural parameter for Lie families, else 0
    std::optional<FieldTable> field;
    std::vector<PointLabel> labels; // empty for fixtures
};

// Natural permutation representation: PSL2/PGL2 on the q+1 projective-line
// points, PSL3/PGL3 on the q^2+q+1 plane points, PSU3/PGU3 on the q^3+1
// isotropic points of the standard antidiagonal Hermitian form over GF(q^2).
// Orders are checked against family_order at construction.
LabeledGroup projective_group(Family family, std::uint32_t q);

enum class ExtensionKind { Field, Graph, Diagonal, GraphField };

std::string kind_name(ExtensionKind k);
std::optional<ExtensionKind> parse_kind(const std::string& s);

struct ExtensionDescriptor {
    LabeledGroup base; // possibly on a doubled domain
    std::vector<std::pair<ExtensionKind, Permutation>> reps;
};

struct Extension {
    LabeledGroup ext;
    ExtensionDescriptor desc;
};

// Split extension of `base` by commuting involutions of the requested kinds.
// PSL3/PGL3 graph and graph-field extensions move to the doubled domain
// (points plus hyperplanes). Validates the split invariants: order
// |base| * 2^k, elementary abelian complement, trivial intersection.
Extension extend(const LabeledGroup& base, const std::vector<ExtensionKind>& kinds,
                 const Caps& caps = {});

LabeledGroup direct_product(const LabeledGroup& A, const LabeledGroup& B);

// Faithful action of G/Z on the cosets of a central subgroup Z.
LabeledGroup quotient_by_central(const LabeledGroup& G, const PermGroup& Z,
                                 const Caps& caps = {});

// Group-spec text format (see README). Checks any `claim order` line.
LabeledGroup load_group_file(const std::string& path);
void save_group_file(const LabeledGroup& g, const std::string& path,
                     const std::optional<BigInt>& claim = std::nullopt);

// Involutions of `big` lying outside `sub`.
std::uint64_t count_involutions_outside(const PermGroup& big, const PermGroup& sub,
                                        const Caps& caps = {});

} // namespace quillen
