#pragma once

#include <string>
#include <vector>

#include "quillen/poset.hpp"

namespace quillen {

// Simplicial chain complex of an order complex. Faces in dimension d are the
// strictly increasing (d+1)-chains of poset vertices, indexed in lexicographic
// order of their vertex tuples. Boundary entries are +/-1.
struct ChainComplex {
    std::vector<std::uint64_t> f; // f[d] = number of d-faces; empty if no vertices

    struct Column {
        std::vector<std::uint32_t> rows; // strictly increasing
        std::vector<std::int8_t> signs;
    };
    // boundary[d] is the matrix of d_(d+1)... boundary[0] maps 1-faces to
    // 0-faces. The augmentation (dimension 0 to -1) is implicit.
    std::vector<std::vector<Column>> boundary;

    int dim() const { return static_cast<int>(f.size()) - 1; }
    bool empty() const { return f.empty(); }
};

ChainComplex order_complex(const QuillenPoset& P, const Caps& caps = {});

enum class RankBackend { Modular, Exact };

struct BettiResult {
    bool empty_complex = false;        // reduced homology concentrated in degree -1
    std::vector<std::int64_t> betti;   // reduced b~_0 .. b~_dim
    std::string backend;               // e.g. "modular[1073741831,1073741833]" or "exact"
    bool consistent = false;           // alternating sum agrees with the f-vector

    std::int64_t reduced(int d) const {
        if (d == -1) return empty_complex ? 1 : 0;
        if (d < 0 || d >= static_cast<int>(betti.size())) return 0;
        return betti[static_cast<std::size_t>(d)];
    }
};

// Reduced rational Betti numbers. The modular backend uses two seeded random
// primes in (2^30, 2^31) and escalates to a third, then to exact
// fraction-free elimination, on disagreement.
BettiResult betti(const ChainComplex& C, RankBackend backend = RankBackend::Modular,
                  std::uint64_t seed = 0x51e57ab1e5ull, const Caps& caps = {});

// -1 + sum_d (-1)^d f_d
BigInt euler_from_faces(const ChainComplex& C);

// Class-sum formula: chi~ = -1 + sum over vertex classes of
// (-1)^(rank-1) p^C(rank,2) |G : N_G(E)|.
BigInt euler_from_classes(const std::vector<ClassSummary>& classes, unsigned p);

// Exact sparse rank over Q of an integer matrix given by columns
// (fraction-free elimination); exposed for tests and escalation.
std::uint64_t rank_exact(std::vector<ChainComplex::Column> cols, std::uint64_t nrows);
std::uint64_t rank_modp(const std::vector<ChainComplex::Column>& cols, std::uint64_t nrows,
                        std::uint64_t prime);

} // namespace quillen
