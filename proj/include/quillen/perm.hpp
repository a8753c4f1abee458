#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quillen {

// A permutation of {0, ..., degree-1}, stored as the image vector.
// Composition is left-to-right: compose(a, b) applies a first, then b.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::uint32_t degree);               // identity
    explicit Permutation(std::vector<std::uint32_t> images);  // validated bijection

    std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }
    std::uint32_t operator()(std::uint32_t point) const { return img_[point]; }
    const std::vector<std::uint32_t>& images() const { return img_; }
    const std::uint32_t* data() const { return img_.data(); }

    bool is_identity() const;
    std::uint32_t smallest_moved_point() const; // degree if identity

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    auto operator<=>(const Permutation& b) const { return img_ <=> b.img_; }

    std::string cycle_string(bool one_based = true) const;

private:
    std::vector<std::uint32_t> img_;
    friend Permutation compose(const Permutation&, const Permutation&);
    friend Permutation inverse(const Permutation&);
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
// g^-1 * x * g, the conjugate of x by g.
Permutation conjugate(const Permutation& x, const Permutation& g);
bool commute(const Permutation& a, const Permutation& b);
// p^e for small non-negative e.
Permutation power(const Permutation& p, std::uint32_t e);

// Parses one-based cycle notation like "(1 2 3)(4 5)". Fixed points may be
// omitted. Throws ParseError on malformed input.
Permutation parse_cycles(const std::string& text, std::uint32_t degree);

std::uint64_t hash_images(const std::uint32_t* data, std::size_t n, std::uint64_t seed = 0);
std::uint64_t hash_perm(const Permutation& p);

} // namespace quillen
