#pragma once

#include <string>
#include <vector>

#include "quillen/atlas.hpp"
#include "quillen/homology.hpp"
#include "quillen/poset.hpp"

namespace quillen {

unsigned p_rank(const QuillenPoset& P); // max vertex rank, 0 for empty

struct QDVerdict {
    std::string group_name;
    unsigned p = 2;
    unsigned m_p = 0;
    bool empty_poset = false;
    std::vector<std::int64_t> betti; // reduced
    bool satisfies = false;          // b~_(m_p - 1) != 0, with b~_(-1) = 1 for empty
    bool p_core_trivial = true;
    BigInt p_core_order;
    std::uint32_t components = 0;
    std::string backend;
};

QDVerdict qd_check(const PermGroup& G, unsigned p, const std::string& name = "",
                   RankBackend backend = RankBackend::Modular, std::uint64_t seed = 0x51e57ab1e5ull,
                   const Caps& caps = {});

struct ExtensionRank {
    unsigned m = 0;
    std::vector<Permutation> witness; // generators of a maximizing A (empty for A = 1)
};

// max over A in A_p(G) U {1} with A meet N = 1 of m_p(C_N(A)) + m_p(A);
// asserted equal to the p-rank read off A_p(G).
ExtensionRank p_rank_via_extension(const PermGroup& G, const PermGroup& N, unsigned p,
                                   const Caps& caps = {});

struct OutPosetClass {
    std::vector<Permutation> rep_gens;
    unsigned rank = 1;
    BigInt class_size;
};

struct OutPosetResult {
    std::vector<OutPosetClass> classes;
    BigInt total = 0;
    bool all_cyclic = true;
};

// Classes of B in A_p(G) with B meet L*C_G(L) = 1, i.e. the subgroups
// inducing outer automorphisms on the normal subgroup L.
OutPosetResult out_poset(const PermGroup& G, const PermGroup& L, unsigned p,
                         const Caps& caps = {});

struct MVLESClassRow {
    BigInt class_size;
    BigInt centralizer_order;
    std::string centralizer_label;
    BigInt centralizer_core_order; // |O_p(C_L(B))|
    std::int64_t dim_top = 0;      // dim H~_(m-1)(A_p(C_L(B)))
};

struct MVLESReport {
    std::string ambient_name, normal_name;
    unsigned p = 2;
    unsigned m = 0; // m_p(L)
    std::vector<MVLESClassRow> rows;
    std::int64_t dim_base = 0; // dim H~_(m-1)(A_p(L))
    BigInt bound;              // sum class_size*dim_top - dim_base
    std::int64_t actual = 0;   // b~_m(A_p(G))
    bool item3_vanishing = false;
    bool consistent = false; // item3 => actual == 0, and actual >= max(bound, 0)
};

// Requires every member of the out-poset to be cyclic (HypothesisError
// otherwise).
MVLESReport mvles_report(const PermGroup& G, const PermGroup& L, unsigned p,
                         const std::string& ambient_name = "", const std::string& normal_name = "",
                         const Caps& caps = {});

enum class DisconnectionClass { Connected, RankOne, KnownFamily, Unexplained };

struct ConnectivityReport {
    std::uint32_t components = 0;
    unsigned m_p = 0;
    bool p_core_trivial = true;
    std::int64_t b0 = 0; // reduced
    std::int64_t b1 = 0;
    DisconnectionClass cls = DisconnectionClass::Connected;
    bool rank2_qd_holds = true; // connected, m_p = 2, trivial core => b~_1 > 0
};

ConnectivityReport connectivity_report(const LabeledGroup& G, unsigned p = 2,
                                       const Caps& caps = {});

// Isomorphism-type label for |H| <= 48 from a fixed fingerprint table
// (order plus element-order histogram); larger groups get "order N".
std::string small_group_label(const PermGroup& H);

std::string verdict_csv_header();
std::string verdict_csv_row(const QDVerdict& v);
std::string verdict_text_block(const QDVerdict& v);

} // namespace quillen
