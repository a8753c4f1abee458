#include "quillen/poset.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <unordered_map>

#include "quillen/errors.hpp"
#include "quillen/util.hpp"

namespace quillen {

namespace {

struct PermHash {
    std::size_t operator()(const Permutation& p) const { return hash_perm(p); }
};

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const {
        return hash_images(k.data(), k.size());
    }
};

using KeyMap = std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, KeyHash>;

// Bit matrix of the commuting relation between order-p elements.
struct CommuteBits {
    std::size_t n = 0, words = 0;
    std::vector<std::uint64_t> bits;

    void init(std::size_t m) {
        n = m;
        words = (m + 63) / 64;
        bits.assign(n * words, 0);
    }
    void set(std::size_t i, std::size_t j) {
        bits[i * words + j / 64] |= (1ull << (j % 64));
    }
    bool get(std::size_t i, std::size_t j) const {
        return (bits[i * words + j / 64] >> (j % 64)) & 1;
    }
    const std::uint64_t* row(std::size_t i) const { return bits.data() + i * words; }
};

} // namespace

struct QuillenPoset::Builder {
    static QuillenPoset assemble(PermGroup G, unsigned p, std::vector<Permutation> pelems,
                                 std::vector<ElemAbelianVertex> verts, bool want_action,
                                 const Caps& caps);
    static QuillenPoset induced(const QuillenPoset& P, const std::vector<bool>& keep,
                                bool keep_action);
};

namespace {

// Element ids of the full subgroup <gens(E), x>, all of whose non-identity
// elements have order p. Products are looked up in the id map.
std::vector<std::uint32_t> closed_key(const std::vector<Permutation>& pelems,
                                      const std::unordered_map<Permutation, std::uint32_t, PermHash>& id_of,
                                      const std::vector<std::uint32_t>& base_key,
                                      std::uint32_t x_id, unsigned p) {
    std::vector<std::uint32_t> key;
    key.reserve((base_key.size() + 1) * p);
    const Permutation& x = pelems[x_id];
    // powers of x
    Permutation xp = x;
    for (unsigned j = 1; j < p; ++j) {
        auto it = id_of.find(xp);
        if (it == id_of.end()) throw InternalError("order-p closure left the element table");
        key.push_back(it->second);
        xp = compose(xp, x);
    }
    for (std::uint32_t e : base_key) {
        key.push_back(e);
        Permutation prod = pelems[e];
        for (unsigned j = 1; j < p; ++j) {
            prod = compose(prod, x);
            auto it = id_of.find(prod);
            if (it == id_of.end()) throw InternalError("order-p closure left the element table");
            key.push_back(it->second);
        }
    }
    std::sort(key.begin(), key.end());
    return key;
}

} // namespace

QuillenPoset QuillenPoset::Builder::assemble(PermGroup G, unsigned p,
                                             std::vector<Permutation> pelems,
                                             std::vector<ElemAbelianVertex> verts,
                                             bool want_action, const Caps& caps) {
    QuillenPoset P;
    P.G_ = std::move(G);
    P.p_ = p;
    P.pelems_ = std::move(pelems);

    // Canonical vertex order: by (rank, key).
    std::sort(verts.begin(), verts.end(), [](const ElemAbelianVertex& a, const ElemAbelianVertex& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.key < b.key;
    });
    P.verts_ = std::move(verts);
    const std::size_t V = P.verts_.size();

    KeyMap key_map;
    key_map.reserve(V * 2);
    for (std::uint32_t v = 0; v < V; ++v) key_map.emplace(P.verts_[v].key, v);

    std::unordered_map<Permutation, std::uint32_t, PermHash> id_of;
    id_of.reserve(P.pelems_.size() * 2);
    for (std::uint32_t i = 0; i < P.pelems_.size(); ++i) id_of.emplace(P.pelems_[i], i);

    // Comparabilities: enumerate proper nontrivial subgroups of each vertex
    // by spanning subsets of its element list.
    P.above_.assign(V, {});
    P.below_.assign(V, {});
    for (std::uint32_t v = 0; v < V; ++v) {
        const auto& F = P.verts_[v];
        if (F.rank <= 1) continue;
        std::vector<std::vector<std::uint32_t>> subs; // keys of proper subgroups
        // rank-1 subgroups: one per cyclic subgroup; collect via a seen-set.
        std::vector<bool> used(F.key.size(), false);
        for (std::size_t i = 0; i < F.key.size(); ++i) {
            if (used[i]) continue;
            std::vector<std::uint32_t> k1;
            Permutation pw = P.pelems_[F.key[i]];
            for (unsigned j = 1; j < p; ++j) {
                auto it = id_of.find(pw);
                if (it == id_of.end()) throw InternalError("vertex element missing");
                k1.push_back(it->second);
                pw = compose(pw, P.pelems_[F.key[i]]);
            }
            std::sort(k1.begin(), k1.end());
            for (auto e : k1) {
                auto pos = std::lower_bound(F.key.begin(), F.key.end(), e) - F.key.begin();
                if (pos < static_cast<std::ptrdiff_t>(used.size())) used[pos] = true;
            }
            subs.push_back(std::move(k1));
        }
        // higher-rank proper subgroups: spans of element pairs/triples
        std::vector<std::vector<std::uint32_t>> level = subs; // rank-1 keys
        for (unsigned rk = 2; rk < F.rank; ++rk) {
            KeyMap seen;
            std::vector<std::vector<std::uint32_t>> next;
            for (const auto& base : level) {
                for (std::uint32_t x : F.key) {
                    if (std::binary_search(base.begin(), base.end(), x)) continue;
                    auto k = closed_key(P.pelems_, id_of, base, x, p);
                    if (seen.emplace(k, 0).second) next.push_back(k);
                }
            }
            for (auto& k : next) subs.push_back(k);
            level = std::move(next);
        }
        for (auto& k : subs) {
            auto it = key_map.find(k);
            if (it == key_map.end())
                throw InternalError("subgroup of a vertex is not itself a vertex");
            P.below_[v].push_back(it->second);
            P.above_[it->second].push_back(v);
        }
    }
    for (auto& l : P.above_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    for (auto& l : P.below_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }

    if (want_action && P.G_.valid()) {
        const auto& gens = P.G_.generators();
        P.action_.resize(gens.size());
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            std::vector<std::uint32_t> conj_ids(P.pelems_.size());
            for (std::uint32_t i = 0; i < P.pelems_.size(); ++i) {
                auto it = id_of.find(conjugate(P.pelems_[i], gens[gi]));
                if (it == id_of.end()) throw InternalError("conjugation left the element table");
                conj_ids[i] = it->second;
            }
            auto& amap = P.action_[gi];
            amap.resize(V);
            std::vector<std::uint32_t> tmp;
            for (std::uint32_t v = 0; v < V; ++v) {
                tmp.clear();
                for (auto e : P.verts_[v].key) tmp.push_back(conj_ids[e]);
                std::sort(tmp.begin(), tmp.end());
                auto it = key_map.find(tmp);
                if (it == key_map.end()) throw InternalError("action image is not a vertex");
                amap[v] = it->second;
            }
        }
        P.has_action_ = true;
    }
    (void)caps;
    return P;
}

QuillenPoset build_quillen_poset(const PermGroup& G, unsigned p, const Caps& caps) {
    auto pelems = elements_of_order_p(G, p, caps);
    const std::size_t m = pelems.size();

    std::unordered_map<Permutation, std::uint32_t, PermHash> id_of;
    id_of.reserve(m * 2);
    for (std::uint32_t i = 0; i < m; ++i) id_of.emplace(pelems[i], i);

    if (m > 0 && m * m / 8 > caps.face_budget)
        throw ResourceError(
            "commuting-relation table exceeds the memory budget (raise --face-budget)");

    CommuteBits bits;
    bits.init(m);
    // Upper triangle in parallel (each worker owns whole rows), then mirror.
    parallel_ranges(m, caps.jobs, [&](std::size_t lo, std::size_t hi, int) {
        for (std::size_t i = lo; i < hi; ++i) {
            bits.set(i, i);
            for (std::size_t j = i + 1; j < m; ++j)
                if (commute(pelems[i], pelems[j])) bits.set(i, j);
        }
    });
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (bits.get(i, j)) bits.set(j, i);

    std::vector<ElemAbelianVertex> verts;
    KeyMap seen;

    // rank 1
    std::vector<std::vector<std::uint32_t>> level_keys;
    std::vector<std::vector<std::uint32_t>> level_gens;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::vector<std::uint32_t> key;
        Permutation pw = pelems[i];
        for (unsigned j = 1; j < p; ++j) {
            key.push_back(id_of.at(pw));
            pw = compose(pw, pelems[i]);
        }
        std::sort(key.begin(), key.end());
        if (!seen.emplace(key, 0).second) continue;
        ElemAbelianVertex v;
        v.key = key;
        v.gens = {i};
        v.rank = 1;
        verts.push_back(v);
        level_keys.push_back(std::move(key));
        level_gens.push_back({i});
    }

    // levelwise expansion; extend only by ids above the current maximum,
    // which still reaches every subgroup (take x = the top id in it).
    const std::size_t words = bits.words;
    std::vector<std::uint64_t> cand(words);
    while (!level_keys.empty()) {
        std::vector<std::vector<std::uint32_t>> next_keys, next_gens;
        for (std::size_t li = 0; li < level_keys.size(); ++li) {
            const auto& key = level_keys[li];
            const auto& gens = level_gens[li];
            // candidates commute with every generator
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t b = ~0ull;
                for (auto g : gens) b &= bits.row(g)[w];
                cand[w] = b;
            }
            const std::uint32_t maxid = key.back();
            for (std::uint32_t x = maxid + 1; x < m; ++x) {
                if (!((cand[x / 64] >> (x % 64)) & 1)) continue;
                if (std::binary_search(key.begin(), key.end(), x)) continue;
                auto nk = closed_key(pelems, id_of, key, x, p);
                if (!seen.emplace(nk, 0).second) continue;
                ElemAbelianVertex v;
                v.key = nk;
                v.gens = gens;
                v.gens.push_back(x);
                v.rank = static_cast<std::uint8_t>(v.gens.size());
                verts.push_back(v);
                next_keys.push_back(std::move(nk));
                next_gens.push_back(v.gens);
            }
        }
        level_keys = std::move(next_keys);
        level_gens = std::move(next_gens);
    }

    return QuillenPoset::Builder::assemble(G, p, std::move(pelems), std::move(verts), true, caps);
}

unsigned QuillenPoset::max_rank() const {
    unsigned r = 0;
    for (const auto& v : verts_) r = std::max(r, static_cast<unsigned>(v.rank));
    return r;
}

bool QuillenPoset::less(std::uint32_t a, std::uint32_t b) const {
    const auto& ab = above_[a];
    return std::binary_search(ab.begin(), ab.end(), b);
}

std::uint32_t QuillenPoset::component_count() const {
    std::vector<std::uint32_t> parent(verts_.size());
    for (std::uint32_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::uint32_t v = 0; v < verts_.size(); ++v)
        for (auto u : above_[v]) {
            auto a = find(v), b = find(u);
            if (a != b) parent[a] = b;
        }
    std::uint32_t n = 0;
    for (std::uint32_t v = 0; v < verts_.size(); ++v)
        if (find(v) == v) ++n;
    return n;
}

PermGroup QuillenPoset::vertex_subgroup(std::size_t v) const {
    std::vector<Permutation> gens;
    for (auto id : verts_[v].gens) gens.push_back(pelems_[id]);
    return PermGroup::from_generators(gens, G_.degree());
}

std::vector<ClassSummary> class_summaries(const QuillenPoset& P) {
    if (!P.has_action())
        throw ConfigError("class_summaries needs the conjugation action (unreduced poset)");
    const std::size_t V = P.size();
    std::vector<int> cls(V, -1);
    std::vector<ClassSummary> out;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t v = 0; v < V; ++v) {
        if (cls[v] >= 0) continue;
        int c = static_cast<int>(out.size());
        std::uint64_t size = 0;
        stack.assign(1, v);
        cls[v] = c;
        while (!stack.empty()) {
            std::uint32_t x = stack.back();
            stack.pop_back();
            ++size;
            for (const auto& amap : P.action()) {
                std::uint32_t y = amap[x];
                if (cls[y] < 0) {
                    cls[y] = c;
                    stack.push_back(y);
                }
            }
        }
        ClassSummary s;
        s.representative = v;
        s.rank = P.vertex(v).rank;
        s.orbit_size = size;
        s.normalizer_index = size;
        out.push_back(std::move(s));
    }
    return out;
}

QuillenPoset QuillenPoset::Builder::induced(const QuillenPoset& P, const std::vector<bool>& keep,
                                            bool keep_action) {
    QuillenPoset Q;
    Q.G_ = P.G_;
    Q.p_ = P.p_;
    Q.pelems_ = P.pelems_;
    std::vector<std::int64_t> remap(P.size(), -1);
    for (std::size_t v = 0; v < P.size(); ++v)
        if (keep[v]) {
            remap[v] = static_cast<std::int64_t>(Q.verts_.size());
            Q.verts_.push_back(P.verts_[v]);
        }
    Q.above_.assign(Q.verts_.size(), {});
    Q.below_.assign(Q.verts_.size(), {});
    for (std::size_t v = 0; v < P.size(); ++v) {
        if (remap[v] < 0) continue;
        for (auto u : P.above_[v])
            if (remap[u] >= 0) {
                Q.above_[remap[v]].push_back(static_cast<std::uint32_t>(remap[u]));
                Q.below_[remap[u]].push_back(static_cast<std::uint32_t>(remap[v]));
            }
    }
    for (auto& l : Q.above_) std::sort(l.begin(), l.end());
    for (auto& l : Q.below_) std::sort(l.begin(), l.end());
    if (keep_action && P.has_action_) {
        bool invariant = true;
        for (const auto& amap : P.action_) {
            for (std::size_t v = 0; v < P.size() && invariant; ++v)
                if (keep[v] != keep[amap[v]]) invariant = false;
        }
        if (invariant) {
            Q.action_.resize(P.action_.size());
            for (std::size_t gi = 0; gi < P.action_.size(); ++gi) {
                Q.action_[gi].resize(Q.verts_.size());
                for (std::size_t v = 0; v < P.size(); ++v)
                    if (remap[v] >= 0)
                        Q.action_[gi][remap[v]] =
                            static_cast<std::uint32_t>(remap[P.action_[gi][v]]);
            }
            Q.has_action_ = true;
        }
    }
    return Q;
}

QuillenPoset induced_subposet(const QuillenPoset& P, const std::vector<bool>& keep,
                              bool keep_action) {
    return QuillenPoset::Builder::induced(P, keep, keep_action);
}

QuillenPoset core_reduction(const QuillenPoset& P, const Caps& caps) {
    if (P.empty()) return P;
    std::vector<bool> keep(P.size(), false);
    if (P.has_action()) {
        // Decide once per conjugacy class.
        auto classes = class_summaries(P);
        // recompute class labels the same way class_summaries does
        std::vector<int> cls(P.size(), -1);
        {
            int c = 0;
            std::vector<std::uint32_t> stack;
            for (std::uint32_t v = 0; v < P.size(); ++v) {
                if (cls[v] >= 0) continue;
                stack.assign(1, v);
                cls[v] = c;
                while (!stack.empty()) {
                    auto x = stack.back();
                    stack.pop_back();
                    for (const auto& amap : P.action())
                        if (cls[amap[x]] < 0) {
                            cls[amap[x]] = c;
                            stack.push_back(amap[x]);
                        }
                }
                ++c;
            }
        }
        std::vector<char> class_keep;
        for (const auto& s : classes) {
            std::uint32_t v = s.representative;
            PermGroup A = P.vertex_subgroup(v);
            std::vector<Permutation> agens;
            for (auto id : P.vertex(v).gens) agens.push_back(P.element(id));
            Subgroup C = centralizer_in(P.group(), agens, caps);
            Subgroup O1 = omega1(C.group, P.p(), caps);
            Subgroup Z = center(O1.group, caps);
            Subgroup O2 = omega1(Z.group, P.p(), caps);
            class_keep.push_back(O2.group.same_group_as(A) ? 1 : 0);
        }
        for (std::uint32_t v = 0; v < P.size(); ++v) keep[v] = class_keep[cls[v]] != 0;
    } else {
        for (std::uint32_t v = 0; v < P.size(); ++v) {
            PermGroup A = P.vertex_subgroup(v);
            std::vector<Permutation> agens;
            for (auto id : P.vertex(v).gens) agens.push_back(P.element(id));
            Subgroup C = centralizer_in(P.group(), agens, caps);
            Subgroup O1 = omega1(C.group, P.p(), caps);
            Subgroup Z = center(O1.group, caps);
            Subgroup O2 = omega1(Z.group, P.p(), caps);
            keep[v] = O2.group.same_group_as(A);
        }
    }
    return induced_subposet(P, keep, true);
}

QuillenPoset cone_point_removal(const QuillenPoset& P) {
    const std::size_t V = P.size();
    std::vector<bool> alive(V, true);
    // a vertex is a beat point if its strict up-set has a unique minimal
    // element or its strict down-set has a unique maximal element
    auto is_beat = [&](std::uint32_t v) {
        // strict up-set
        std::vector<std::uint32_t> U;
        for (auto u : P.above(v))
            if (alive[u]) U.push_back(u);
        if (!U.empty()) {
            int minimal = 0;
            for (auto u : U) {
                bool has_lower = false;
                for (auto w : P.below(u))
                    if (alive[w] && w != v && P.less(v, w)) {
                        has_lower = true;
                        break;
                    }
                if (!has_lower) ++minimal;
                if (minimal > 1) break;
            }
            if (minimal == 1) return true;
        }
        std::vector<std::uint32_t> D;
        for (auto u : P.below(v))
            if (alive[u]) D.push_back(u);
        if (!D.empty()) {
            int maximal = 0;
            for (auto u : D) {
                bool has_upper = false;
                for (auto w : P.above(u))
                    if (alive[w] && w != v && P.less(w, v)) {
                        has_upper = true;
                        break;
                    }
                if (!has_upper) ++maximal;
                if (maximal > 1) break;
            }
            if (maximal == 1) return true;
        }
        return false;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t v = 0; v < V; ++v) {
            if (!alive[v]) continue;
            if (is_beat(v)) {
                alive[v] = false;
                changed = true;
            }
        }
    }
    std::vector<bool> keep(alive.begin(), alive.end());
    return induced_subposet(P, keep, false);
}

QuillenPoset centralizer_union_subposet(const PermGroup& L, const std::vector<PermGroup>& Bs,
                                        unsigned p, const Caps& caps) {
    QuillenPoset P = build_quillen_poset(L, p, caps);
    std::vector<bool> keep(P.size(), false);
    for (std::uint32_t v = 0; v < P.size(); ++v) {
        for (const auto& B : Bs) {
            bool in_c = true;
            for (auto id : P.vertex(v).gens) {
                for (const auto& b : B.generators())
                    if (!commute(P.element(id), b)) {
                        in_c = false;
                        break;
                    }
                if (!in_c) break;
            }
            if (in_c) {
                keep[v] = true;
                break;
            }
        }
    }
    return induced_subposet(P, keep, false);
}

void dump_poset(const QuillenPoset& P, std::ostream& out) {
    for (std::uint32_t v = 0; v < P.size(); ++v) {
        const auto& vert = P.vertex(v);
        out << "v " << v << " rank " << static_cast<unsigned>(vert.rank) << " gens";
        for (auto id : vert.gens) out << ' ' << P.element(id).cycle_string();
        out << '\n';
    }
    for (std::uint32_t v = 0; v < P.size(); ++v)
        for (auto u : P.above(v))
            if (P.vertex(u).rank == P.vertex(v).rank + 1) out << "e " << v << ' ' << u << '\n';
}

} // namespace quillen
