#include "oracles.hpp"

#include <algorithm>
#include <map>

#include "quillen/errors.hpp"

namespace quillen::oracle {

std::vector<Permutation> naive_elements(const std::vector<Permutation>& gens,
                                        std::uint32_t degree, std::size_t cap) {
    std::set<Permutation> seen;
    std::vector<Permutation> queue;
    Permutation id(degree);
    seen.insert(id);
    queue.push_back(id);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (const auto& g : gens) {
            Permutation n = compose(queue[qi], g);
            if (seen.insert(n).second) {
                if (seen.size() > cap) throw ResourceError("naive closure exceeded cap");
                queue.push_back(std::move(n));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::size_t naive_order_p_count(const std::vector<Permutation>& elements, unsigned p) {
    std::size_t n = 0;
    for (const auto& g : elements) {
        if (g.is_identity()) continue;
        Permutation acc = g;
        for (unsigned i = 1; i < p; ++i) acc = compose(acc, g);
        if (acc.is_identity()) ++n;
    }
    return n;
}

std::vector<Permutation> naive_centralizer(const std::vector<Permutation>& elements,
                                           const std::vector<Permutation>& S) {
    std::vector<Permutation> out;
    for (const auto& g : elements) {
        bool ok = true;
        for (const auto& s : S)
            if (compose(g, s) != compose(s, g)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(g);
    }
    return out;
}

namespace {

std::vector<Permutation> close_set(std::vector<Permutation> base) {
    std::sort(base.begin(), base.end());
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = 0; j < base.size(); ++j) {
            Permutation pr = compose(base[i], base[j]);
            if (!std::binary_search(base.begin(), base.end(), pr)) {
                base.push_back(pr);
                std::sort(base.begin(), base.end());
                i = 0;
                break;
            }
        }
    return base;
}

} // namespace

std::vector<std::vector<Permutation>> naive_elab_subgroups(
    const std::vector<Permutation>& elements, unsigned p) {
    // order-p elements
    std::vector<Permutation> pe;
    for (const auto& g : elements) {
        if (g.is_identity()) continue;
        Permutation acc = g;
        for (unsigned i = 1; i < p; ++i) acc = compose(acc, g);
        if (acc.is_identity()) pe.push_back(g);
    }
    std::set<std::vector<Permutation>> found;
    // closures of singletons, then repeatedly extend by commuting elements
    std::vector<std::vector<Permutation>> frontier;
    for (const auto& x : pe) {
        auto grp = close_set({Permutation(x.degree()), x});
        if (found.insert(grp).second) frontier.push_back(grp);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<Permutation>> next;
        for (const auto& grp : frontier) {
            for (const auto& x : pe) {
                if (std::binary_search(grp.begin(), grp.end(), x)) continue;
                bool comm = true;
                for (const auto& e : grp)
                    if (compose(e, x) != compose(x, e)) {
                        comm = false;
                        break;
                    }
                if (!comm) continue;
                auto bigger = grp;
                bigger.push_back(x);
                auto closed = close_set(bigger);
                if (found.insert(closed).second) next.push_back(closed);
            }
        }
        frontier = std::move(next);
    }
    return {found.begin(), found.end()};
}

std::uint64_t naive_dense_rank(const std::vector<ChainComplex::Column>& cols,
                               std::uint64_t nrows) {
    using Rat = boost::multiprecision::cpp_rational;
    std::vector<std::vector<Rat>> m(cols.size(), std::vector<Rat>(nrows, 0));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t k = 0; k < cols[c].rows.size(); ++k)
            m[c][cols[c].rows[k]] = static_cast<int>(cols[c].signs[k]);
    std::uint64_t rank = 0;
    std::vector<bool> used(m.size(), false);
    for (std::uint64_t r = 0; r < nrows; ++r) {
        std::size_t pc = SIZE_MAX;
        for (std::size_t c = 0; c < m.size(); ++c)
            if (!used[c] && m[c][r] != 0) {
                pc = c;
                break;
            }
        if (pc == SIZE_MAX) continue;
        used[pc] = true;
        ++rank;
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (c == pc || m[c][r] == 0) continue;
            Rat f = m[c][r] / m[pc][r];
            for (std::uint64_t rr = 0; rr < nrows; ++rr) m[c][rr] -= f * m[pc][rr];
        }
    }
    return rank;
}

std::vector<std::int64_t> naive_betti(const ChainComplex& C) {
    if (C.empty()) return {};
    const int dim = C.dim();
    std::vector<std::uint64_t> rk;
    for (std::size_t d = 0; d < C.boundary.size(); ++d)
        rk.push_back(naive_dense_rank(C.boundary[d], C.f[d]));
    std::vector<std::int64_t> b(static_cast<std::size_t>(dim) + 1);
    for (int d = 0; d <= dim; ++d) {
        std::int64_t lower =
            d == 0 ? 1 : static_cast<std::int64_t>(rk[static_cast<std::size_t>(d - 1)]);
        std::int64_t upper =
            d < dim ? static_cast<std::int64_t>(rk[static_cast<std::size_t>(d)]) : 0;
        b[static_cast<std::size_t>(d)] =
            static_cast<std::int64_t>(C.f[static_cast<std::size_t>(d)]) - lower - upper;
    }
    return b;
}

} // namespace quillen::oracle
