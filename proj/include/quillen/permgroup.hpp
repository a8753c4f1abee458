#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "quillen/bigint.hpp"
#include "quillen/perm.hpp"

namespace quillen {

// Resource caps. Every scan that could blow up checks one of these and
// raises ResourceError naming the flag that lifts it.
struct Caps {
    std::uint64_t element_scan_cap = 10'000'000; // --element-cap
    std::uint64_t brute_force_cap = 1'000'000;   // --brute-cap
    std::uint64_t face_budget = 200'000'000;     // --face-budget
    int jobs = 1;                                // --jobs
};

// A finite permutation group with a base and strong generating set, built
// by deterministic Schreier-Sims (base points are smallest moved points,
// BFS orbits, fixed generator order). Immutable after construction and
// cheap to copy; copies share the underlying chain.
class PermGroup {
public:
    PermGroup() = default;
    static PermGroup from_generators(std::vector<Permutation> gens, std::uint32_t degree);
    static PermGroup trivial(std::uint32_t degree);

    bool valid() const { return impl_ != nullptr; }
    std::uint32_t degree() const;
    const std::vector<Permutation>& generators() const;
    const BigInt& order() const;
    bool order_fits_u64() const;
    std::uint64_t order_u64() const;
    bool is_trivial() const;

    bool contains(const Permutation& p) const;

    // Base points and fundamental orbit lengths of the chain.
    std::vector<std::uint32_t> base() const;
    std::vector<std::uint64_t> fundamental_orbit_lengths() const;

    // Deterministic enumeration of all elements. The callback may return
    // false to stop early. Order is fixed by the chain, not by |G|.
    void for_each_element(const std::function<bool(const Permutation&)>& fn) const;

    // Enumerates the slice of elements whose top-level coset position lies
    // in [first, last) of the fundamental orbit; slices partition the group.
    void for_each_element_slice(std::size_t first, std::size_t last,
                                const std::function<bool(const Permutation&)>& fn) const;
    std::size_t top_orbit_length() const;

    // All elements, in enumeration order. Throws ResourceError past the cap.
    std::vector<Permutation> all_elements(std::uint64_t cap) const;

    PermGroup conjugated_by(const Permutation& g) const;

    bool same_group_as(const PermGroup& other) const; // equal order + mutual membership

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

// A subgroup together with the group it lives in. `group` carries its own
// chain; `parent` is context for index computations and error checking.
struct Subgroup {
    PermGroup parent;
    PermGroup group;

    BigInt index() const { return parent.order() / group.order(); }
};

// Order of a single permutation (lcm of cycle lengths).
BigInt element_order(const Permutation& p);
// x != 1 and x^p == 1, without allocating.
bool has_order_p(const Permutation& x, unsigned p);

// All elements of order exactly p, deduplicated, sorted by image vectors.
std::vector<Permutation> elements_of_order_p(const PermGroup& G, unsigned p,
                                             const Caps& caps = {});

// {g in G : gs = sg for all s in S}. Elements of S must lie in G.
// Brute-force scan when |G| fits the cap, conjugation-orbit stabilizer
// otherwise; the two paths are cross-checked in tests.
Subgroup centralizer(const PermGroup& G, const std::vector<Permutation>& S,
                     const Caps& caps = {});

// Same computation without requiring S to lie in G: the fixed subgroup of G
// under conjugation by S (used for centralizers of outer automorphisms).
Subgroup centralizer_in(const PermGroup& G, const std::vector<Permutation>& S,
                        const Caps& caps = {});

// {g in G : H^g = H}; requires H <= G.
Subgroup normalizer(const PermGroup& G, const PermGroup& H, const Caps& caps = {});

// Center of H.
Subgroup center(const PermGroup& H, const Caps& caps = {});

// Subgroup generated by all order-p elements of H.
Subgroup omega1(const PermGroup& H, unsigned p, const Caps& caps = {});

// Largest normal p-subgroup: one Sylow p-subgroup by ascending closure,
// then intersect with conjugates until generator-invariant.
Subgroup p_core(const PermGroup& G, unsigned p, const Caps& caps = {});

// One Sylow p-subgroup.
Subgroup sylow_subgroup(const PermGroup& G, unsigned p, const Caps& caps = {});

struct SubgroupOrbit {
    BigInt orbit_size; // |G : N_G(H)|
    Subgroup normalizer;
};

// Conjugacy orbit of H in G plus its normalizer. orbit_size * |N| == |G|.
SubgroupOrbit subgroup_orbit(const PermGroup& G, const PermGroup& H, const Caps& caps = {});

// A ^ B as a subgroup of their common overgroup (enumerates the smaller).
PermGroup intersect_groups(const PermGroup& A, const PermGroup& B, const Caps& caps = {});

bool is_subgroup_of(const PermGroup& H, const PermGroup& G);
bool is_elementary_abelian(const PermGroup& H, unsigned p);
bool is_normal_in(const PermGroup& H, const PermGroup& G);

} // namespace quillen
