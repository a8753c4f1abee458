#include "quillen/permgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "quillen/errors.hpp"
#include "quillen/util.hpp"

namespace quillen {

namespace {

// Explicit transversal permutations are stored when the orbit is small
// enough; larger orbits keep only the Schreier tree and rebuild coset
// representatives on demand.
constexpr std::uint64_t kExplicitTransversalWords = 8u << 20;

struct Level {
    std::uint32_t base = 0;
    std::vector<Permutation> gens;
    std::vector<std::int32_t> pos;  // point -> orbit index, -1 outside
    std::vector<std::uint32_t> orbit;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tree; // (parent orbit idx, gen idx)
    std::vector<Permutation> trans; // empty when tree-only
};

} // namespace

struct PermGroup::Impl {
    std::uint32_t degree = 0;
    std::vector<Permutation> gens;
    std::vector<Level> levels;
    BigInt order = 1;

    void build();
    void recompute_orbit(std::size_t l);
    Permutation transversal(std::size_t l, std::uint32_t orbit_idx) const;
    // Returns the residue and the level where sifting stopped.
    std::pair<Permutation, std::size_t> sift(std::size_t from, Permutation g) const;
    bool schreier_pass();
    void enumerate(std::size_t l, const Permutation& tail,
                   const std::function<bool(const Permutation&)>& fn, bool& stop) const;
};

void PermGroup::Impl::recompute_orbit(std::size_t l) {
    Level& lv = levels[l];
    lv.pos.assign(degree, -1);
    lv.orbit.clear();
    lv.tree.clear();
    lv.trans.clear();
    lv.orbit.push_back(lv.base);
    lv.pos[lv.base] = 0;
    lv.tree.emplace_back(0, 0);
    for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
        std::uint32_t x = lv.orbit[qi];
        for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
            std::uint32_t y = lv.gens[gi](x);
            if (lv.pos[y] < 0) {
                lv.pos[y] = static_cast<std::int32_t>(lv.orbit.size());
                lv.orbit.push_back(y);
                lv.tree.emplace_back(static_cast<std::uint32_t>(qi),
                                     static_cast<std::uint32_t>(gi));
            }
        }
    }
    if (static_cast<std::uint64_t>(lv.orbit.size()) * degree <= kExplicitTransversalWords) {
        lv.trans.resize(lv.orbit.size());
        lv.trans[0] = Permutation(degree);
        for (std::size_t j = 1; j < lv.orbit.size(); ++j) {
            auto [pj, gj] = lv.tree[j];
            lv.trans[j] = compose(lv.trans[pj], lv.gens[gj]);
        }
    }
}

Permutation PermGroup::Impl::transversal(std::size_t l, std::uint32_t j) const {
    const Level& lv = levels[l];
    if (!lv.trans.empty()) return lv.trans[j];
    std::vector<std::uint32_t> path;
    for (std::uint32_t k = j; k != 0; k = lv.tree[k].first) path.push_back(k);
    Permutation u(degree);
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        u = compose(u, lv.gens[lv.tree[*it].second]);
    return u;
}

std::pair<Permutation, std::size_t> PermGroup::Impl::sift(std::size_t from, Permutation g) const {
    for (std::size_t l = from; l < levels.size(); ++l) {
        std::uint32_t y = g(levels[l].base);
        if (y == levels[l].base) continue;
        if (levels[l].pos[y] < 0) return {std::move(g), l};
        g = compose(g, inverse(transversal(l, levels[l].pos[y])));
    }
    return {std::move(g), levels.size()};
}

bool PermGroup::Impl::schreier_pass() {
    bool changed = false;
    for (std::size_t l = 0; l < levels.size(); ++l) {
        // levels may reallocate below; index into it rather than holding refs.
        const std::size_t norbit = levels[l].orbit.size();
        const std::size_t ngens = levels[l].gens.size();
        for (std::size_t j = 0; j < norbit; ++j) {
            Permutation uj = transversal(l, static_cast<std::uint32_t>(j));
            for (std::size_t gi = 0; gi < ngens; ++gi) {
                std::uint32_t y = levels[l].gens[gi](levels[l].orbit[j]);
                Permutation sg = compose(compose(uj, levels[l].gens[gi]),
                                         inverse(transversal(l, levels[l].pos[y])));
                if (sg.is_identity()) continue;
                auto [r, lvl] = sift(l + 1, std::move(sg));
                if (r.is_identity()) continue;
                changed = true;
                if (lvl == levels.size()) {
                    Level nl;
                    nl.base = r.smallest_moved_point();
                    levels.push_back(std::move(nl));
                }
                for (std::size_t m = l + 1; m <= lvl; ++m) {
                    levels[m].gens.push_back(r);
                    recompute_orbit(m);
                }
            }
        }
        if (changed) return true; // restart from the top with fresh orbits
    }
    return changed;
}

void PermGroup::Impl::build() {
    std::vector<Permutation> keep;
    for (const auto& g : gens)
        if (!g.is_identity()) keep.push_back(g);
    if (!keep.empty()) {
        Level lv;
        lv.base = degree;
        for (const auto& g : keep) lv.base = std::min(lv.base, g.smallest_moved_point());
        lv.gens = keep;
        levels.push_back(std::move(lv));
        recompute_orbit(0);
        std::size_t guard = 0;
        while (schreier_pass()) {
            if (++guard > 100000) throw InternalError("Schreier-Sims failed to converge");
        }
    }
    order = 1;
    for (const auto& lv : levels) order *= static_cast<std::uint64_t>(lv.orbit.size());
    for (const auto& g : gens) {
        if (!sift(0, g).first.is_identity())
            throw InternalError("generator fails its own membership test");
    }
}

void PermGroup::Impl::enumerate(std::size_t l, const Permutation& tail,
                                const std::function<bool(const Permutation&)>& fn,
                                bool& stop) const {
    if (l == levels.size()) {
        if (!fn(tail)) stop = true;
        return;
    }
    const Level& lv = levels[l];
    for (std::uint32_t j = 0; j < lv.orbit.size() && !stop; ++j)
        enumerate(l + 1, compose(transversal(l, j), tail), fn, stop);
}

PermGroup PermGroup::from_generators(std::vector<Permutation> gens, std::uint32_t degree) {
    for (const auto& g : gens)
        if (g.degree() != degree)
            throw ConstructionError("generator degree mismatch");
    auto impl = std::make_shared<Impl>();
    impl->degree = degree;
    impl->gens = std::move(gens);
    impl->build();
    PermGroup g;
    g.impl_ = std::move(impl);
    return g;
}

PermGroup PermGroup::trivial(std::uint32_t degree) { return from_generators({}, degree); }

std::uint32_t PermGroup::degree() const { return impl_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return impl_->gens; }
const BigInt& PermGroup::order() const { return impl_->order; }
bool PermGroup::is_trivial() const { return impl_->order == 1; }

bool PermGroup::order_fits_u64() const {
    return impl_->order <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

std::uint64_t PermGroup::order_u64() const {
    if (!order_fits_u64()) throw ResourceError("group order exceeds 64 bits");
    return impl_->order.convert_to<std::uint64_t>();
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != impl_->degree) return false;
    if (p.is_identity()) return true;
    auto [r, lvl] = impl_->sift(0, p);
    (void)lvl;
    return r.is_identity();
}

std::vector<std::uint32_t> PermGroup::base() const {
    std::vector<std::uint32_t> b;
    for (const auto& lv : impl_->levels) b.push_back(lv.base);
    return b;
}

std::vector<std::uint64_t> PermGroup::fundamental_orbit_lengths() const {
    std::vector<std::uint64_t> r;
    for (const auto& lv : impl_->levels) r.push_back(lv.orbit.size());
    return r;
}

void PermGroup::for_each_element(const std::function<bool(const Permutation&)>& fn) const {
    bool stop = false;
    impl_->enumerate(0, Permutation(impl_->degree), fn, stop);
}

std::size_t PermGroup::top_orbit_length() const {
    return impl_->levels.empty() ? 1 : impl_->levels[0].orbit.size();
}

void PermGroup::for_each_element_slice(std::size_t first, std::size_t last,
                                       const std::function<bool(const Permutation&)>& fn) const {
    if (impl_->levels.empty()) {
        if (first == 0 && last > 0) fn(Permutation(impl_->degree));
        return;
    }
    bool stop = false;
    const Level& lv = impl_->levels[0];
    last = std::min(last, lv.orbit.size());
    for (std::size_t j = first; j < last && !stop; ++j)
        impl_->enumerate(1, impl_->transversal(0, static_cast<std::uint32_t>(j)), fn, stop);
}

std::vector<Permutation> PermGroup::all_elements(std::uint64_t cap) const {
    if (order() > BigInt(cap))
        throw ResourceError("element enumeration exceeds cap (raise --element-cap)");
    std::vector<Permutation> out;
    out.reserve(order_u64());
    for_each_element([&](const Permutation& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

PermGroup PermGroup::conjugated_by(const Permutation& g) const {
    std::vector<Permutation> cg;
    cg.reserve(impl_->gens.size());
    for (const auto& x : impl_->gens) cg.push_back(conjugate(x, g));
    PermGroup r = from_generators(std::move(cg), impl_->degree);
    if (r.order() != order()) throw InternalError("conjugation changed group order");
    return r;
}

bool PermGroup::same_group_as(const PermGroup& other) const {
    if (order() != other.order()) return false;
    for (const auto& g : generators())
        if (!other.contains(g)) return false;
    return true;
}

BigInt element_order(const Permutation& p) {
    const std::uint32_t n = p.degree();
    std::vector<bool> seen(n, false);
    BigInt ord = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::uint32_t j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            ++len;
        }
        BigInt l(len);
        ord = ord / boost::multiprecision::gcd(ord, l) * l;
    }
    return ord;
}

bool has_order_p(const Permutation& x, unsigned p) {
    const std::uint32_t n = x.degree();
    bool moved = false;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t j = i;
        for (unsigned k = 0; k < p; ++k) j = x(j);
        if (j != i) return false;
        moved = moved || x(i) != i;
    }
    return moved;
}

std::vector<Permutation> elements_of_order_p(const PermGroup& G, unsigned p, const Caps& caps) {
    if (G.order() > BigInt(caps.element_scan_cap))
        throw ResourceError("order-p element scan exceeds cap (raise --element-cap)");
    std::vector<Permutation> out;
    if (caps.jobs > 1 && G.order() > 100000) {
        const std::size_t top = G.top_orbit_length();
        std::vector<std::vector<Permutation>> parts(static_cast<std::size_t>(caps.jobs));
        parallel_ranges(top, caps.jobs, [&](std::size_t lo, std::size_t hi, int t) {
            G.for_each_element_slice(lo, hi, [&](const Permutation& g) {
                if (has_order_p(g, p)) parts[static_cast<std::size_t>(t)].push_back(g);
                return true;
            });
        });
        for (auto& part : parts)
            for (auto& g : part) out.push_back(std::move(g));
    } else {
        G.for_each_element([&](const Permutation& g) {
            if (has_order_p(g, p)) out.push_back(g);
            return true;
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Incrementally grown subgroup: generators are admitted only when they are
// not already members, which keeps generating sets small.
struct GrowingGroup {
    std::uint32_t degree;
    std::vector<Permutation> gens;
    PermGroup grp;

    explicit GrowingGroup(std::uint32_t d) : degree(d), grp(PermGroup::trivial(d)) {}

    bool add(const Permutation& g) {
        if (grp.contains(g)) return false;
        gens.push_back(g);
        grp = PermGroup::from_generators(gens, degree);
        return true;
    }
};

bool centralizes_all(const Permutation& g, const std::vector<Permutation>& S) {
    for (const auto& s : S)
        if (!commute(g, s)) return false;
    return true;
}

// Orbit-stabilizer over an abstract action of G on hashable states. Returns
// the orbit size and the stabilizer of the seed. The state space is tracked
// by 128-bit hashes; the orbit-stabilizer equation is verified afterwards by
// the caller, so a hash collision cannot go unnoticed.
struct HashOrbitResult {
    std::uint64_t orbit_size = 0;
    PermGroup stabilizer;
};

template <class State, class ActFn, class HashFn>
HashOrbitResult hash_orbit_stabilizer(const PermGroup& G, State seed, ActFn act, HashFn hasher,
                                      const BigInt& whole_order, std::uint64_t state_cap) {
    struct Key {
        std::uint64_t a, b;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return k.a ^ (k.b * 0x9e3779b97f4a7c15ull); }
    };
    const auto& gens = G.generators();
    std::unordered_map<Key, std::uint32_t, KeyHash> index;
    std::vector<State> states;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tree;
    auto key_of = [&](const State& s) {
        auto [a, b] = hasher(s);
        return Key{a, b};
    };
    index.emplace(key_of(seed), 0);
    states.push_back(std::move(seed));
    tree.emplace_back(0, 0);

    GrowingGroup stab(G.degree());
    BigInt target = 0; // |stabilizer| needed for the equation, once orbit closed

    // Transversal words are rebuilt from the tree on demand.
    auto coset_rep = [&](std::uint32_t j) {
        std::vector<std::uint32_t> path;
        for (std::uint32_t k = j; k != 0; k = tree[k].first) path.push_back(k);
        Permutation u(G.degree());
        for (auto it = path.rbegin(); it != path.rend(); ++it)
            u = compose(u, gens[tree[*it].second]);
        return u;
    };

    std::vector<std::pair<std::uint32_t, std::uint32_t>> deferred; // Schreier edges
    for (std::size_t qi = 0; qi < states.size(); ++qi) {
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            State next = act(states[qi], gens[gi]);
            Key k = key_of(next);
            auto it = index.find(k);
            if (it == index.end()) {
                if (states.size() >= state_cap)
                    throw ResourceError("conjugation orbit exceeds cap (raise --element-cap)");
                index.emplace(k, static_cast<std::uint32_t>(states.size()));
                tree.emplace_back(static_cast<std::uint32_t>(qi),
                                  static_cast<std::uint32_t>(gi));
                states.push_back(std::move(next));
            } else {
                deferred.emplace_back(static_cast<std::uint32_t>(qi),
                                      static_cast<std::uint32_t>(gi));
            }
        }
    }
    const std::uint64_t orbit_size = states.size();
    target = whole_order / BigInt(orbit_size);

    for (auto [qi, gi] : deferred) {
        if (stab.grp.order() == target) break;
        // Schreier generator u * g * rep(u*g)^-1
        Permutation moved = compose(coset_rep(qi), gens[gi]);
        State s2 = act(states[qi], gens[gi]);
        auto it = index.find(key_of(s2));
        if (it == index.end()) throw InternalError("orbit closure violated");
        Permutation sg = compose(moved, inverse(coset_rep(it->second)));
        stab.add(sg);
    }
    HashOrbitResult r;
    r.orbit_size = orbit_size;
    r.stabilizer = stab.grp;
    return r;
}

std::pair<std::uint64_t, std::uint64_t> hash_perm_pair(const Permutation& p) {
    return {hash_images(p.data(), p.degree(), 0x243f6a8885a308d3ull),
            hash_images(p.data(), p.degree(), 0x13198a2e03707344ull)};
}

} // namespace

Subgroup centralizer(const PermGroup& G, const std::vector<Permutation>& S, const Caps& caps) {
    for (const auto& s : S)
        if (!G.contains(s))
            throw MembershipError("centralizer: element does not belong to the group");
    return centralizer_in(G, S, caps);
}

Subgroup centralizer_in(const PermGroup& G, const std::vector<Permutation>& S, const Caps& caps) {
    for (const auto& s : S)
        if (s.degree() != G.degree())
            throw MembershipError("centralizer: degree mismatch");
    if (G.order() <= BigInt(caps.brute_force_cap)) {
        GrowingGroup K(G.degree());
        G.for_each_element([&](const Permutation& g) {
            if (centralizes_all(g, S)) K.add(g);
            return true;
        });
        return Subgroup{G, K.grp};
    }
    // Conjugation orbit of the tuple S; its stabilizer is the centralizer.
    std::vector<Permutation> seed;
    for (const auto& s : S)
        if (!s.is_identity()) seed.push_back(s);
    if (seed.empty()) return Subgroup{G, G};
    auto act = [](const std::vector<Permutation>& st, const Permutation& g) {
        std::vector<Permutation> out;
        out.reserve(st.size());
        for (const auto& x : st) out.push_back(conjugate(x, g));
        return out;
    };
    auto hasher = [](const std::vector<Permutation>& st) {
        std::uint64_t a = 0x9e3779b97f4a7c15ull, b = 0xc2b2ae3d27d4eb4full;
        for (const auto& x : st) {
            auto [ha, hb] = hash_perm_pair(x);
            a = a * 0x100000001b3ull ^ ha;
            b = b * 0x100000001b3ull ^ hb;
        }
        return std::pair<std::uint64_t, std::uint64_t>{a, b};
    };
    auto res = hash_orbit_stabilizer(G, seed, act, hasher, G.order(),
                                     caps.element_scan_cap);
    if (BigInt(res.orbit_size) * res.stabilizer.order() != G.order())
        throw InternalError("centralizer orbit-stabilizer equation failed");
    for (const auto& g : res.stabilizer.generators())
        if (!centralizes_all(g, S)) throw InternalError("centralizer generator check failed");
    return Subgroup{G, res.stabilizer};
}

Subgroup center(const PermGroup& H, const Caps& caps) {
    return centralizer(H, H.generators(), caps);
}

namespace {

std::vector<Permutation> sorted_elements(const PermGroup& H, std::uint64_t cap) {
    auto els = H.all_elements(cap);
    std::sort(els.begin(), els.end());
    return els;
}

} // namespace

Subgroup normalizer(const PermGroup& G, const PermGroup& H, const Caps& caps) {
    if (!is_subgroup_of(H, G))
        throw MembershipError("normalizer: H is not a subgroup of G");
    if (G.order() <= BigInt(caps.brute_force_cap)) {
        GrowingGroup K(G.degree());
        G.for_each_element([&](const Permutation& g) {
            bool norm = true;
            for (const auto& h : H.generators())
                if (!H.contains(conjugate(h, g))) {
                    norm = false;
                    break;
                }
            if (norm) K.add(g);
            return true;
        });
        return Subgroup{G, K.grp};
    }
    // Orbit of the element set of H under conjugation.
    auto seed = sorted_elements(H, caps.element_scan_cap);
    auto act = [](const std::vector<Permutation>& st, const Permutation& g) {
        std::vector<Permutation> out;
        out.reserve(st.size());
        for (const auto& x : st) out.push_back(conjugate(x, g));
        std::sort(out.begin(), out.end());
        return out;
    };
    auto hasher = [](const std::vector<Permutation>& st) {
        std::uint64_t a = 0x9e3779b97f4a7c15ull, b = 0xc2b2ae3d27d4eb4full;
        for (const auto& x : st) {
            auto [ha, hb] = hash_perm_pair(x);
            a = a * 0x100000001b3ull ^ ha;
            b = b * 0x100000001b3ull ^ hb;
        }
        return std::pair<std::uint64_t, std::uint64_t>{a, b};
    };
    auto res = hash_orbit_stabilizer(G, seed, act, hasher, G.order(), caps.element_scan_cap);
    if (BigInt(res.orbit_size) * res.stabilizer.order() != G.order())
        throw InternalError("normalizer orbit-stabilizer equation failed");
    return Subgroup{G, res.stabilizer};
}

Subgroup omega1(const PermGroup& H, unsigned p, const Caps& caps) {
    auto els = H.all_elements(caps.element_scan_cap);
    std::vector<Permutation> gens;
    for (const auto& x : els)
        if (has_order_p(x, p)) gens.push_back(x);
    GrowingGroup K(H.degree());
    for (const auto& g : gens) K.add(g);
    return Subgroup{H, K.grp};
}

Subgroup sylow_subgroup(const PermGroup& G, unsigned p, const Caps& caps) {
    BigInt full = G.order();
    unsigned vp = 0;
    while (full % p == 0) {
        full /= p;
        ++vp;
    }
    if (vp == 0) return Subgroup{G, PermGroup::trivial(G.degree())};
    const BigInt sylow_order = bpow(p, vp);

    // Seed with a p-element derived from any element of order divisible by p.
    Permutation seed;
    bool found = false;
    std::uint64_t scanned = 0;
    G.for_each_element([&](const Permutation& g) {
        if (++scanned > caps.element_scan_cap)
            throw ResourceError("Sylow seed scan exceeds cap (raise --element-cap)");
        BigInt n = element_order(g);
        if (n % p != 0) return true;
        BigInt m = n;
        while (m % p == 0) m /= p;
        // g^m is a nontrivial p-element.
        Permutation x = g;
        Permutation acc(G.degree());
        BigInt e = m;
        while (e > 0) {
            if (e % 2 == 1) acc = compose(acc, x);
            x = compose(x, x);
            e /= 2;
        }
        seed = acc;
        found = true;
        return false;
    });
    if (!found) throw InternalError("no p-element found despite p dividing the order");

    PermGroup S = PermGroup::from_generators({seed}, G.degree());
    while (S.order() < sylow_order) {
        Subgroup N = normalizer(G, S, caps);
        BigInt idx = N.group.order() / S.order();
        if (idx % p != 0)
            throw InternalError("Sylow ascent stalled below full p-power order");
        // Extend by a p-element of N_G(S) outside S.
        bool extended = false;
        std::uint64_t seen = 0;
        N.group.for_each_element([&](const Permutation& y) {
            if (++seen > caps.element_scan_cap)
                throw ResourceError("Sylow normalizer scan exceeds cap (raise --element-cap)");
            BigInt n = element_order(y);
            if (n % p != 0) return true;
            BigInt m = n;
            while (m % p == 0) m /= p;
            Permutation x = y;
            Permutation acc(G.degree());
            BigInt e = m;
            while (e > 0) {
                if (e % 2 == 1) acc = compose(acc, x);
                x = compose(x, x);
                e /= 2;
            }
            if (S.contains(acc)) return true;
            auto gens = S.generators();
            gens.push_back(acc);
            S = PermGroup::from_generators(gens, G.degree());
            extended = true;
            return false;
        });
        if (!extended) throw InternalError("Sylow ascent found no extending p-element");
    }
    return Subgroup{G, S};
}

PermGroup intersect_groups(const PermGroup& A, const PermGroup& B, const Caps& caps) {
    const PermGroup& small = A.order() <= B.order() ? A : B;
    const PermGroup& big = A.order() <= B.order() ? B : A;
    auto els = small.all_elements(caps.element_scan_cap);
    GrowingGroup K(A.degree());
    for (const auto& x : els)
        if (big.contains(x)) K.add(x);
    return K.grp;
}

Subgroup p_core(const PermGroup& G, unsigned p, const Caps& caps) {
    Subgroup S = sylow_subgroup(G, p, caps);
    PermGroup K = S.group;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& g : G.generators()) {
            PermGroup Kg = K.conjugated_by(g);
            if (K.same_group_as(Kg)) continue;
            K = intersect_groups(K, Kg, caps);
            changed = true;
        }
    }
    // Sanity: normal and a p-group.
    for (const auto& g : G.generators())
        if (!K.same_group_as(K.conjugated_by(g)))
            throw InternalError("p-core is not generator-invariant");
    BigInt n = K.order();
    while (n % p == 0) n /= p;
    if (n != 1) throw InternalError("p-core order is not a p-power");
    return Subgroup{G, K};
}

SubgroupOrbit subgroup_orbit(const PermGroup& G, const PermGroup& H, const Caps& caps) {
    Subgroup N = normalizer(G, H, caps);
    SubgroupOrbit r;
    r.normalizer = N;
    r.orbit_size = G.order() / N.group.order();
    return r;
}

bool is_subgroup_of(const PermGroup& H, const PermGroup& G) {
    for (const auto& h : H.generators())
        if (!G.contains(h)) return false;
    return true;
}

bool is_elementary_abelian(const PermGroup& H, unsigned p) {
    if (H.is_trivial()) return false;
    const auto& gens = H.generators();
    for (const auto& g : gens) {
        if (!has_order_p(g, p)) return false;
        for (const auto& h : gens)
            if (!commute(g, h)) return false;
    }
    return true;
}

bool is_normal_in(const PermGroup& H, const PermGroup& G) {
    for (const auto& g : G.generators())
        for (const auto& h : H.generators())
            if (!H.contains(conjugate(h, g))) return false;
    return true;
}

} // namespace quillen
