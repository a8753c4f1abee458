#include "quillen/homology.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <unordered_map>

#include "quillen/errors.hpp"
#include "quillen/kernels.hpp"

namespace quillen {

namespace {

struct TupleHash {
    std::size_t operator()(const std::vector<std::uint32_t>& t) const {
        return hash_images(t.data(), t.size());
    }
};

} // namespace

ChainComplex order_complex(const QuillenPoset& P, const Caps& caps) {
    ChainComplex C;
    const std::uint64_t V = P.size();
    if (V == 0) return C;
    C.f.push_back(V);
    std::uint64_t total = V;

    // faces of the previous dimension, in lexicographic order
    std::vector<std::vector<std::uint32_t>> prev;
    prev.reserve(V);
    for (std::uint32_t v = 0; v < V; ++v) prev.push_back({v});
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, TupleHash> prev_index;

    for (int d = 1;; ++d) {
        std::vector<std::vector<std::uint32_t>> cur;
        for (const auto& t : prev) {
            for (auto u : P.above(t.back())) {
                auto f = t;
                f.push_back(u);
                cur.push_back(std::move(f));
            }
        }
        if (cur.empty()) break;
        total += cur.size();
        if (total > caps.face_budget)
            throw ResourceError("order complex exceeds the face budget (raise --face-budget)");

        if (d > 1) {
            prev_index.clear();
            prev_index.reserve(prev.size() * 2);
            for (std::uint32_t i = 0; i < prev.size(); ++i) prev_index.emplace(prev[i], i);
        }

        std::vector<ChainComplex::Column> cols(cur.size());
        std::vector<std::uint32_t> facet;
        for (std::uint32_t ci = 0; ci < cur.size(); ++ci) {
            const auto& face = cur[ci];
            auto& col = cols[ci];
            std::vector<std::pair<std::uint32_t, std::int8_t>> ent;
            for (std::size_t i = 0; i < face.size(); ++i) {
                facet.clear();
                for (std::size_t j = 0; j < face.size(); ++j)
                    if (j != i) facet.push_back(face[j]);
                std::uint32_t row;
                if (d == 1) {
                    row = facet[0];
                } else {
                    auto it = prev_index.find(facet);
                    if (it == prev_index.end())
                        throw InternalError("facet of a chain is not a chain");
                    row = it->second;
                }
                ent.emplace_back(row, (i % 2 == 0) ? std::int8_t{1} : std::int8_t{-1});
            }
            std::sort(ent.begin(), ent.end());
            for (auto& [r, s] : ent) {
                col.rows.push_back(r);
                col.signs.push_back(s);
            }
        }
        C.f.push_back(cur.size());
        C.boundary.push_back(std::move(cols));
        prev = std::move(cur);
    }
    return C;
}

BigInt euler_from_faces(const ChainComplex& C) {
    BigInt chi = -1;
    for (std::size_t d = 0; d < C.f.size(); ++d) {
        BigInt term(C.f[d]);
        if (d % 2 == 0)
            chi += term;
        else
            chi -= term;
    }
    return chi;
}

BigInt euler_from_classes(const std::vector<ClassSummary>& classes, unsigned p) {
    BigInt chi = -1; // the trivial subgroup's class
    for (const auto& c : classes) {
        BigInt term = bpow(p, c.rank * (c.rank - 1) / 2) * c.orbit_size;
        if ((c.rank - 1) % 2 == 0)
            chi += term;
        else
            chi -= term;
    }
    return chi;
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, x = b % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t random_prime_31(std::mt19937_64& rng) {
    for (;;) {
        std::uint64_t x = (rng() % (1ull << 30)) + (1ull << 30);
        x |= 1;
        if (x <= (1ull << 30)) continue;
        if (is_prime_u64(x)) return x;
    }
}

struct SparseCol {
    std::vector<std::uint32_t> rows;
    std::vector<std::uint64_t> vals; // reduced mod p, nonzero

    std::size_t nnz() const { return rows.size(); }
    std::uint64_t value_at(std::uint32_t r) const {
        auto it = std::lower_bound(rows.begin(), rows.end(), r);
        if (it == rows.end() || *it != r) return 0;
        return vals[static_cast<std::size_t>(it - rows.begin())];
    }
};

// dst = dst + c * src (mod p), sparse merge
void sparse_axpy(SparseCol& dst, const SparseCol& src, std::uint64_t c, std::uint64_t p) {
    SparseCol out;
    out.rows.reserve(dst.rows.size() + src.rows.size());
    out.vals.reserve(dst.rows.size() + src.rows.size());
    std::size_t i = 0, j = 0;
    while (i < dst.rows.size() || j < src.rows.size()) {
        if (j >= src.rows.size() || (i < dst.rows.size() && dst.rows[i] < src.rows[j])) {
            out.rows.push_back(dst.rows[i]);
            out.vals.push_back(dst.vals[i]);
            ++i;
        } else if (i >= dst.rows.size() || src.rows[j] < dst.rows[i]) {
            std::uint64_t v = c * src.vals[j] % p;
            if (v) {
                out.rows.push_back(src.rows[j]);
                out.vals.push_back(v);
            }
            ++j;
        } else {
            std::uint64_t v = (dst.vals[i] + c * src.vals[j]) % p;
            if (v) {
                out.rows.push_back(dst.rows[i]);
                out.vals.push_back(v);
            }
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

} // namespace

std::uint64_t rank_modp(const std::vector<ChainComplex::Column>& cols, std::uint64_t nrows,
                        std::uint64_t prime) {
    const std::uint64_t p = prime;
    std::vector<SparseCol> m(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        m[c].rows = cols[c].rows;
        m[c].vals.reserve(cols[c].signs.size());
        for (auto s : cols[c].signs) m[c].vals.push_back(s > 0 ? 1 : p - 1);
    }
    std::vector<std::vector<std::uint32_t>> row_cols(nrows); // may contain stale entries
    for (std::size_t c = 0; c < m.size(); ++c)
        for (auto r : m[c].rows) row_cols[r].push_back(static_cast<std::uint32_t>(c));

    std::vector<bool> col_done(m.size(), false), row_done(nrows, false);
    // (nnz, col) min-heap with stale sizes; re-checked on pop
    using QE = std::pair<std::uint64_t, std::uint32_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> heap;
    for (std::size_t c = 0; c < m.size(); ++c)
        if (!m[c].rows.empty()) heap.emplace(m[c].nnz(), static_cast<std::uint32_t>(c));

    std::uint64_t rank = 0;
    while (!heap.empty()) {
        auto [sz, c] = heap.top();
        heap.pop();
        if (col_done[c] || m[c].rows.empty()) continue;
        if (m[c].nnz() != sz) {
            heap.emplace(m[c].nnz(), c);
            continue;
        }
        // pivot row: fewest (approximate) incident columns, then lowest index
        std::uint32_t prow = m[c].rows[0];
        std::size_t best = SIZE_MAX;
        for (auto r : m[c].rows) {
            if (row_done[r]) throw InternalError("pivoted row still present in a live column");
            std::size_t sc = row_cols[r].size();
            if (sc < best) {
                best = sc;
                prow = r;
            }
        }
        const std::uint64_t pval = m[c].value_at(prow);
        const std::uint64_t pinv = powmod(pval, p - 2, p);
        ++rank;
        col_done[c] = true;
        row_done[prow] = true;

        auto incident = row_cols[prow];
        row_cols[prow].clear();
        for (auto c2 : incident) {
            if (c2 == c || col_done[c2]) continue;
            std::uint64_t v2 = m[c2].value_at(prow);
            if (!v2) continue; // stale
            std::uint64_t factor = (p - v2 % p) * pinv % p;
            sparse_axpy(m[c2], m[c], factor, p);
            for (auto r : m[c2].rows)
                if (!row_done[r]) row_cols[r].push_back(c2);
            if (!m[c2].rows.empty()) heap.emplace(m[c2].nnz(), c2);
        }
        m[c].rows.clear();
        m[c].vals.clear();
        m[c].rows.shrink_to_fit();
        m[c].vals.shrink_to_fit();
    }
    return rank;
}

std::uint64_t rank_exact(std::vector<ChainComplex::Column> cols, std::uint64_t nrows) {
    struct ECol {
        std::vector<std::uint32_t> rows;
        std::vector<BigInt> vals;
        std::size_t nnz() const { return rows.size(); }
        BigInt value_at(std::uint32_t r) const {
            auto it = std::lower_bound(rows.begin(), rows.end(), r);
            if (it == rows.end() || *it != r) return 0;
            return vals[static_cast<std::size_t>(it - rows.begin())];
        }
    };
    std::vector<ECol> m(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        m[c].rows = cols[c].rows;
        for (auto s : cols[c].signs) m[c].vals.push_back(BigInt(static_cast<int>(s)));
    }
    std::vector<bool> col_done(m.size(), false), row_done(nrows, false);
    std::uint64_t rank = 0;
    for (;;) {
        // smallest live column
        std::size_t cbest = SIZE_MAX, bestn = SIZE_MAX;
        for (std::size_t c = 0; c < m.size(); ++c)
            if (!col_done[c] && !m[c].rows.empty() && m[c].nnz() < bestn) {
                bestn = m[c].nnz();
                cbest = c;
            }
        if (cbest == SIZE_MAX) break;
        std::uint32_t prow = m[cbest].rows[0];
        BigInt pval = m[cbest].vals[0];
        ++rank;
        col_done[cbest] = true;
        row_done[prow] = true;
        for (std::size_t c2 = 0; c2 < m.size(); ++c2) {
            if (col_done[c2] || m[c2].rows.empty()) continue;
            BigInt v2 = m[c2].value_at(prow);
            if (v2 == 0) continue;
            // c2 <- c2 * pval - pivot * v2, then divide out the content
            ECol out;
            std::size_t i = 0, j = 0;
            const auto& src = m[cbest];
            auto& dst = m[c2];
            while (i < dst.rows.size() || j < src.rows.size()) {
                std::uint32_t r;
                BigInt v;
                if (j >= src.rows.size() ||
                    (i < dst.rows.size() && dst.rows[i] < src.rows[j])) {
                    r = dst.rows[i];
                    v = dst.vals[i] * pval;
                    ++i;
                } else if (i >= dst.rows.size() || src.rows[j] < dst.rows[i]) {
                    r = src.rows[j];
                    v = -src.vals[j] * v2;
                    ++j;
                } else {
                    r = dst.rows[i];
                    v = dst.vals[i] * pval - src.vals[j] * v2;
                    ++i;
                    ++j;
                }
                if (v != 0) {
                    out.rows.push_back(r);
                    out.vals.push_back(std::move(v));
                }
            }
            BigInt g = 0;
            for (const auto& v : out.vals) {
                g = boost::multiprecision::gcd(g, v);
                if (g == 1) break;
            }
            if (g > 1)
                for (auto& v : out.vals) v /= g;
            m[c2] = std::move(out);
        }
        m[cbest].rows.clear();
        m[cbest].vals.clear();
    }
    return rank;
}

namespace {

std::vector<std::uint64_t> all_ranks_modp(const ChainComplex& C, std::uint64_t prime) {
    std::vector<std::uint64_t> r;
    for (std::size_t d = 0; d < C.boundary.size(); ++d)
        r.push_back(rank_modp(C.boundary[d], C.f[d], prime));
    return r;
}

std::vector<std::uint64_t> all_ranks_exact(const ChainComplex& C) {
    std::vector<std::uint64_t> r;
    for (std::size_t d = 0; d < C.boundary.size(); ++d)
        r.push_back(rank_exact(C.boundary[d], C.f[d]));
    return r;
}

std::vector<std::int64_t> betti_from_ranks(const ChainComplex& C,
                                           const std::vector<std::uint64_t>& rk) {
    const int dim = C.dim();
    std::vector<std::int64_t> b(static_cast<std::size_t>(dim) + 1, 0);
    for (int d = 0; d <= dim; ++d) {
        std::int64_t faces = static_cast<std::int64_t>(C.f[static_cast<std::size_t>(d)]);
        std::int64_t lower = d == 0 ? (C.f[0] > 0 ? 1 : 0)
                                    : static_cast<std::int64_t>(rk[static_cast<std::size_t>(d - 1)]);
        std::int64_t upper =
            d < dim ? static_cast<std::int64_t>(rk[static_cast<std::size_t>(d)]) : 0;
        b[static_cast<std::size_t>(d)] = faces - lower - upper;
    }
    return b;
}

bool nonnegative(const std::vector<std::int64_t>& b) {
    for (auto x : b)
        if (x < 0) return false;
    return true;
}

} // namespace

BettiResult betti(const ChainComplex& C, RankBackend backend, std::uint64_t seed,
                  const Caps& caps) {
    (void)caps;
    BettiResult R;
    if (C.empty()) {
        R.empty_complex = true;
        R.backend = backend == RankBackend::Exact ? "exact" : "modular[]";
        R.consistent = true;
        return R;
    }
    if (backend == RankBackend::Exact) {
        auto rk = all_ranks_exact(C);
        R.betti = betti_from_ranks(C, rk);
        R.backend = "exact";
    } else {
        std::mt19937_64 rng(seed);
        std::uint64_t p1 = random_prime_31(rng);
        std::uint64_t p2 = random_prime_31(rng);
        while (p2 == p1) p2 = random_prime_31(rng);
        auto r1 = all_ranks_modp(C, p1);
        auto r2 = all_ranks_modp(C, p2);
        if (r1 == r2 && nonnegative(betti_from_ranks(C, r1))) {
            R.betti = betti_from_ranks(C, r1);
            R.backend = "modular[" + std::to_string(p1) + "," + std::to_string(p2) + "]";
        } else {
            std::uint64_t p3 = random_prime_31(rng);
            while (p3 == p1 || p3 == p2) p3 = random_prime_31(rng);
            auto r3 = all_ranks_modp(C, p3);
            if ((r3 == r1 || r3 == r2) && nonnegative(betti_from_ranks(C, r3))) {
                R.betti = betti_from_ranks(C, r3);
                R.backend = "modular[" + std::to_string(p1) + "," + std::to_string(p2) + "," +
                            std::to_string(p3) + "]";
            } else {
                auto rk = all_ranks_exact(C);
                R.betti = betti_from_ranks(C, rk);
                R.backend = "exact(escalated)";
            }
        }
    }
    // alternating-sum consistency against the f-vector
    BigInt lhs = 0;
    for (std::size_t d = 0; d < R.betti.size(); ++d) {
        if (d % 2 == 0)
            lhs += R.betti[d];
        else
            lhs -= R.betti[d];
    }
    R.consistent = (lhs == euler_from_faces(C)) && nonnegative(R.betti);
    if (!nonnegative(R.betti)) throw InternalError("negative Betti number from rank backend");
    return R;
}

} // namespace quillen
