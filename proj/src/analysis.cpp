#include "quillen/analysis.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "quillen/errors.hpp"

namespace quillen {

unsigned p_rank(const QuillenPoset& P) { return P.max_rank(); }

QDVerdict qd_check(const PermGroup& G, unsigned p, const std::string& name, RankBackend backend,
                   std::uint64_t seed, const Caps& caps) {
    QDVerdict v;
    v.group_name = name;
    v.p = p;
    auto P = build_quillen_poset(G, p, caps);
    v.m_p = P.max_rank();
    v.empty_poset = P.empty();
    v.components = P.component_count();
    auto core = p_core(G, p, caps);
    v.p_core_order = core.group.order();
    v.p_core_trivial = core.group.is_trivial();
    auto C = order_complex(P, caps);
    auto B = betti(C, backend, seed, caps);
    v.betti = B.betti;
    v.backend = B.backend;
    if (v.empty_poset) {
        v.satisfies = true; // b~_(-1) = 1 for the empty complex
    } else {
        v.satisfies = B.reduced(static_cast<int>(v.m_p) - 1) > 0;
    }
    if (!v.p_core_trivial) {
        for (auto b : v.betti)
            if (b != 0)
                throw InternalError(
                    "nontrivial p-core with nonzero reduced homology (contractibility violated)");
    }
    return v;
}

ExtensionRank p_rank_via_extension(const PermGroup& G, const PermGroup& N, unsigned p,
                                   const Caps& caps) {
    if (!is_subgroup_of(N, G) || !is_normal_in(N, G))
        throw MembershipError("p_rank_via_extension: N is not normal in G");
    auto P = build_quillen_poset(G, p, caps);

    // membership of each order-p element in N
    std::vector<bool> in_N(P.p_elements().size());
    for (std::size_t i = 0; i < P.p_elements().size(); ++i)
        in_N[i] = N.contains(P.p_elements()[i]);

    ExtensionRank best;
    {
        // A = 1 term
        auto PN = build_quillen_poset(N, p, caps);
        best.m = PN.max_rank();
    }
    // A meet N = 1 is conjugation-invariant, so test one vertex per class.
    std::vector<std::uint32_t> reps;
    if (P.has_action()) {
        for (const auto& c : class_summaries(P)) reps.push_back(c.representative);
    } else {
        for (std::uint32_t v = 0; v < P.size(); ++v) reps.push_back(v);
    }
    for (auto v : reps) {
        const auto& vert = P.vertex(v);
        bool meets = false;
        for (auto id : vert.key)
            if (in_N[id]) {
                meets = true;
                break;
            }
        if (meets) continue;
        std::vector<Permutation> agens;
        for (auto id : vert.gens) agens.push_back(P.element(id));
        auto C = centralizer_in(N, agens, caps);
        auto PC = build_quillen_poset(C.group, p, caps);
        unsigned m = PC.max_rank() + vert.rank;
        if (m > best.m) {
            best.m = m;
            best.witness = agens;
        }
    }
    if (best.m != P.max_rank())
        throw InternalError("extension p-rank disagrees with the poset p-rank");
    return best;
}

OutPosetResult out_poset(const PermGroup& G, const PermGroup& L, unsigned p, const Caps& caps) {
    if (!is_subgroup_of(L, G) || !is_normal_in(L, G))
        throw MembershipError("out_poset: L is not normal in G");
    auto C = centralizer_in(G, L.generators(), caps);
    std::vector<Permutation> mg = L.generators();
    for (const auto& g : C.group.generators()) mg.push_back(g);
    PermGroup M = PermGroup::from_generators(mg, G.degree()); // L * C_G(L)

    auto P = build_quillen_poset(G, p, caps);
    std::vector<bool> in_M(P.p_elements().size());
    for (std::size_t i = 0; i < P.p_elements().size(); ++i)
        in_M[i] = M.contains(P.p_elements()[i]);

    OutPosetResult out;
    if (!P.has_action()) throw InternalError("out_poset needs the conjugation action");
    for (const auto& c : class_summaries(P)) {
        const auto& vert = P.vertex(c.representative);
        bool meets = false;
        for (auto id : vert.key)
            if (in_M[id]) {
                meets = true;
                break;
            }
        if (meets) continue;
        OutPosetClass row;
        for (auto id : vert.gens) row.rep_gens.push_back(P.element(id));
        row.rank = vert.rank;
        row.class_size = c.orbit_size;
        out.classes.push_back(std::move(row));
        out.total += c.orbit_size;
        if (vert.rank != 1) out.all_cyclic = false;
    }
    return out;
}

MVLESReport mvles_report(const PermGroup& G, const PermGroup& L, unsigned p,
                         const std::string& ambient_name, const std::string& normal_name,
                         const Caps& caps) {
    auto outp = out_poset(G, L, p, caps);
    if (!outp.all_cyclic)
        throw HypothesisError(
            "mvles_report: the out-poset has a non-cyclic member, the lemma does not apply");

    MVLESReport R;
    R.ambient_name = ambient_name;
    R.normal_name = normal_name;
    R.p = p;

    auto PL = build_quillen_poset(L, p, caps);
    R.m = PL.max_rank();
    auto BL = betti(order_complex(PL, caps), RankBackend::Modular, 0x51e57ab1e5ull, caps);
    R.dim_base = BL.reduced(static_cast<int>(R.m) - 1);

    R.bound = 0;
    bool all_zero = true;
    for (const auto& cls : outp.classes) {
        MVLESClassRow row;
        row.class_size = cls.class_size;
        auto C = centralizer_in(L, cls.rep_gens, caps);
        row.centralizer_order = C.group.order();
        row.centralizer_label = small_group_label(C.group);
        row.centralizer_core_order = p_core(C.group, p, caps).group.order();
        auto PC = build_quillen_poset(C.group, p, caps);
        auto BC = betti(order_complex(PC, caps), RankBackend::Modular, 0x51e57ab1e5ull, caps);
        row.dim_top = BC.reduced(static_cast<int>(R.m) - 1);
        if (row.dim_top != 0) all_zero = false;
        R.bound += row.class_size * row.dim_top;
        R.rows.push_back(std::move(row));
    }
    R.bound -= R.dim_base;
    R.item3_vanishing = all_zero;

    auto PG = build_quillen_poset(G, p, caps);
    auto BG = betti(order_complex(PG, caps), RankBackend::Modular, 0x51e57ab1e5ull, caps);
    R.actual = BG.reduced(static_cast<int>(R.m));

    R.consistent = true;
    if (R.item3_vanishing && R.actual != 0) R.consistent = false;
    BigInt floor = R.bound > 0 ? R.bound : BigInt(0);
    if (BigInt(R.actual) < floor) R.consistent = false;
    return R;
}

namespace {

bool is_power_of_two(std::uint32_t n) { return n != 0 && (n & (n - 1)) == 0; }

bool known_disconnected_family(const LabeledGroup& G) {
    // PSL2(2^n) for n >= 2 (including Alt5 = PSL2(4) = PSL2(5)) and the
    // derived Ree group at q = 3, which is PSL2(8). PSU3(2^n) and Sz(q) do
    // not arise among the constructible fixtures.
    if (G.family == Family::PSL2 && (is_power_of_two(G.q) && G.q >= 4)) return true;
    if (G.family == Family::PSL2 && G.q == 5) return true;
    if (G.family == Family::Alt && G.q == 5) return true;
    if (G.name.find("PSL2(8)") != std::string::npos) return true;
    if (G.name.find("2G2(3)") != std::string::npos) return true;
    return false;
}

} // namespace

ConnectivityReport connectivity_report(const LabeledGroup& G, unsigned p, const Caps& caps) {
    ConnectivityReport r;
    auto P = build_quillen_poset(G.group, p, caps);
    r.components = P.component_count();
    r.m_p = P.max_rank();
    auto core = p_core(G.group, p, caps);
    r.p_core_trivial = core.group.is_trivial();
    auto B = betti(order_complex(P, caps), RankBackend::Modular, 0x51e57ab1e5ull, caps);
    r.b0 = B.reduced(0);
    r.b1 = B.reduced(1);
    if (r.components <= 1) {
        r.cls = DisconnectionClass::Connected;
        if (r.m_p == 2 && r.p_core_trivial) r.rank2_qd_holds = r.b1 > 0;
    } else if (r.m_p == 1) {
        r.cls = DisconnectionClass::RankOne;
    } else if (p == 2 && known_disconnected_family(G)) {
        r.cls = DisconnectionClass::KnownFamily;
    } else {
        r.cls = DisconnectionClass::Unexplained;
    }
    return r;
}

namespace {

struct Fingerprint {
    std::uint64_t order;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> hist; // (element order, count)
    std::string name;
};

// Element-order histograms for the groups that appear in reports. Within
// each listed order these histograms are pairwise distinct.
const std::vector<Fingerprint>& fingerprint_table() {
    static const std::vector<Fingerprint> table = {
        {1, {{1, 1}}, "C1"},
        {2, {{1, 1}, {2, 1}}, "C2"},
        {3, {{1, 1}, {3, 2}}, "C3"},
        {4, {{1, 1}, {2, 1}, {4, 2}}, "C4"},
        {4, {{1, 1}, {2, 3}}, "C2xC2"},
        {5, {{1, 1}, {5, 4}}, "C5"},
        {6, {{1, 1}, {2, 1}, {3, 2}, {6, 2}}, "C6"},
        {6, {{1, 1}, {2, 3}, {3, 2}}, "Sym3"},
        {8, {{1, 1}, {2, 1}, {4, 2}, {8, 4}}, "C8"},
        {8, {{1, 1}, {2, 7}}, "C2xC2xC2"},
        {8, {{1, 1}, {2, 5}, {4, 2}}, "D8"},
        {8, {{1, 1}, {2, 1}, {4, 6}}, "Q8"},
        {8, {{1, 1}, {2, 3}, {4, 4}}, "C2xC4"},
        {10, {{1, 1}, {2, 5}, {5, 4}}, "D10"},
        {10, {{1, 1}, {2, 1}, {5, 4}, {10, 4}}, "C10"},
        {12, {{1, 1}, {2, 3}, {3, 8}}, "Alt4"},
        {12, {{1, 1}, {2, 7}, {3, 2}, {6, 2}}, "D12"},
        {12, {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}, "Dic3"},
        {12, {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 4}}, "C12"},
        {16, {{1, 1}, {2, 15}}, "C2^4"},
        {20, {{1, 1}, {2, 5}, {4, 10}, {5, 4}}, "F20"},
        {24, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}, "Sym4"},
        {24, {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}, "SL2(3)"},
        {24, {{1, 1}, {2, 7}, {3, 8}, {6, 8}}, "C2xAlt4"},
        {36, {{1, 1}, {2, 15}, {3, 8}, {6, 12}}, "Sym3xSym3"},
        {48, {{1, 1}, {2, 13}, {3, 8}, {4, 6}, {6, 8}, {8, 12}}, "GL2(3)"},
        {48, {{1, 1}, {2, 19}, {3, 8}, {4, 12}, {6, 8}}, "C2xSym4"},
    };
    return table;
}

} // namespace

std::string small_group_label(const PermGroup& H) {
    if (H.order() > 48) return "order " + H.order().str();
    std::map<std::uint32_t, std::uint32_t> hist;
    H.for_each_element([&](const Permutation& g) {
        ++hist[static_cast<std::uint32_t>(element_order(g).convert_to<std::uint64_t>())];
        return true;
    });
    std::vector<std::pair<std::uint32_t, std::uint32_t>> h(hist.begin(), hist.end());
    const std::uint64_t ord = H.order_u64();
    for (const auto& f : fingerprint_table())
        if (f.order == ord && f.hist == h) return f.name;
    return "order " + std::to_string(ord);
}

std::string verdict_csv_header() {
    return "group,p,m_p,betti,satisfies,p_core_order,components,backend";
}

std::string verdict_csv_row(const QDVerdict& v) {
    std::ostringstream out;
    out << v.group_name << ',' << v.p << ',' << v.m_p << ',';
    if (v.empty_poset) {
        out << "[-1:1]";
    } else {
        out << '[';
        for (std::size_t i = 0; i < v.betti.size(); ++i) {
            if (i) out << ';';
            out << v.betti[i];
        }
        out << ']';
    }
    out << ',' << (v.satisfies ? "satisfies" : "fails") << ',' << v.p_core_order.str() << ','
        << v.components << ',' << v.backend;
    return out.str();
}

std::string verdict_text_block(const QDVerdict& v) {
    std::ostringstream out;
    out << v.group_name << " at p=" << v.p << "\n";
    out << "  p-rank:      " << v.m_p << "\n";
    out << "  reduced Betti:";
    if (v.empty_poset) {
        out << " (empty poset; homology concentrated in degree -1)";
    } else {
        for (auto b : v.betti) out << ' ' << b;
    }
    out << "\n";
    out << "  p-core order: " << v.p_core_order.str() << "\n";
    out << "  components:  " << v.components << "\n";
    out << "  verdict:     " << (v.satisfies ? "satisfies" : "fails")
        << " the Quillen dimension property\n";
    return out.str();
}

} // namespace quillen
