#pragma once

#include <iosfwd>
#include <vector>

#include "quillen/permgroup.hpp"

namespace quillen {

// One vertex: a nontrivial elementary abelian p-subgroup, identified by the
// sorted ids of all its order-p elements (ids index into the poset's
// element table). rank k means order p^k, so key.size() == p^k - 1.
struct ElemAbelianVertex {
    std::vector<std::uint32_t> key;
    std::vector<std::uint32_t> gens; // ids of a minimal generating sequence
    std::uint8_t rank = 0;
};

struct ClassSummary {
    std::uint32_t representative = 0;
    unsigned rank = 0;
    BigInt orbit_size;
    BigInt normalizer_index; // |G : N_G(E)|, equal to orbit_size
};

// The poset of nontrivial elementary abelian p-subgroups of G under
// inclusion, with the conjugation action of G on its vertices.
class QuillenPoset {
public:
    const PermGroup& group() const { return G_; }
    unsigned p() const { return p_; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }
    const ElemAbelianVertex& vertex(std::size_t v) const { return verts_[v]; }
    const std::vector<Permutation>& p_elements() const { return pelems_; }
    const Permutation& element(std::uint32_t id) const { return pelems_[id]; }

    unsigned max_rank() const; // the p-rank of G; 0 for the empty poset

    // Strict comparabilities, sorted ascending by vertex id.
    const std::vector<std::uint32_t>& above(std::size_t v) const { return above_[v]; }
    const std::vector<std::uint32_t>& below(std::size_t v) const { return below_[v]; }
    bool less(std::uint32_t a, std::uint32_t b) const; // a < b in the poset

    bool has_action() const { return has_action_; }
    // action()[g][v] = image vertex of v under the g-th group generator
    const std::vector<std::vector<std::uint32_t>>& action() const { return action_; }

    std::uint32_t component_count() const;

    PermGroup vertex_subgroup(std::size_t v) const;

    // construction helpers (used by the builders below)
    struct Builder;

private:
    PermGroup G_;
    unsigned p_ = 2;
    std::vector<Permutation> pelems_;
    std::vector<ElemAbelianVertex> verts_;
    std::vector<std::vector<std::uint32_t>> above_, below_;
    std::vector<std::vector<std::uint32_t>> action_;
    bool has_action_ = false;
    friend struct Builder;
};

// Levelwise construction: rank-(k+1) vertices arise as <E, x> for order-p
// elements x centralizing E, deduplicated by canonical key.
QuillenPoset build_quillen_poset(const PermGroup& G, unsigned p, const Caps& caps = {});

std::vector<ClassSummary> class_summaries(const QuillenPoset& P);

// Induced subposet on the vertices satisfying A = Omega1(Z(Omega1(C_G(A)))).
// Evaluated per conjugacy class; the action survives.
QuillenPoset core_reduction(const QuillenPoset& P, const Caps& caps = {});

// Iteratively removes vertices whose strict down-set has a unique maximal
// element or whose strict up-set has a unique minimal element. The action
// does not survive (removal is sequential), homology does.
QuillenPoset cone_point_removal(const QuillenPoset& P);

// Induced subposet of A_p(L) on vertices lying in some C_L(B), B in Bs.
// B generators need not lie in L.
QuillenPoset centralizer_union_subposet(const PermGroup& L,
                                        const std::vector<PermGroup>& Bs, unsigned p,
                                        const Caps& caps = {});

QuillenPoset induced_subposet(const QuillenPoset& P, const std::vector<bool>& keep,
                              bool keep_action);

// Text dump: `v <id> rank <k> gens <perm-words>` lines, then `e <a> <b>`
// covering edges; ordering is stable for diffing.
void dump_poset(const QuillenPoset& P, std::ostream& out);

} // namespace quillen
