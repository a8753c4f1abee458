#include "quillen/perm.hpp"

#include <algorithm>
#include <sstream>

#include "quillen/errors.hpp"
#include "quillen/kernels.hpp"

namespace quillen {

Permutation::Permutation(std::uint32_t degree) : img_(degree) {
    for (std::uint32_t i = 0; i < degree; ++i) img_[i] = i;
}

Permutation::Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (std::uint32_t v : img_) {
        if (v >= img_.size() || seen[v])
            throw ConstructionError("malformed generator: image list is not a bijection");
        seen[v] = true;
    }
}

bool Permutation::is_identity() const {
    for (std::uint32_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::uint32_t Permutation::smallest_moved_point() const {
    for (std::uint32_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return i;
    return degree();
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r;
    r.img_.resize(a.img_.size());
    kernels::compose_u32(r.img_.data(), a.img_.data(), b.img_.data(), a.img_.size());
    return r;
}

Permutation inverse(const Permutation& p) {
    Permutation r;
    r.img_.resize(p.img_.size());
    for (std::uint32_t i = 0; i < p.img_.size(); ++i) r.img_[p.img_[i]] = i;
    return r;
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
    return compose(compose(inverse(g), x), g);
}

bool commute(const Permutation& a, const Permutation& b) {
    return kernels::commute_u32(a.data(), b.data(), a.degree());
}

Permutation power(const Permutation& p, std::uint32_t e) {
    Permutation r(p.degree());
    for (std::uint32_t i = 0; i < e; ++i) r = compose(r, p);
    return r;
}

std::string Permutation::cycle_string(bool one_based) const {
    const std::uint32_t off = one_based ? 1 : 0;
    std::vector<bool> done(img_.size(), false);
    std::ostringstream out;
    bool any = false;
    for (std::uint32_t i = 0; i < img_.size(); ++i) {
        if (done[i] || img_[i] == i) continue;
        any = true;
        out << '(' << (i + off);
        done[i] = true;
        for (std::uint32_t j = img_[i]; j != i; j = img_[j]) {
            out << ' ' << (j + off);
            done[j] = true;
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

Permutation parse_cycles(const std::string& text, std::uint32_t degree) {
    std::vector<std::uint32_t> img(degree);
    for (std::uint32_t i = 0; i < degree; ++i) img[i] = i;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i < text.size() && text.compare(i, 2, "()") == 0) i += 2;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
        ++i;
        std::vector<std::uint32_t> cyc;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            std::size_t j = i;
            while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
            if (j == i) throw ParseError("malformed cycle token");
            unsigned long v = std::stoul(text.substr(i, j - i));
            if (v == 0 || v > degree) throw ParseError("cycle point out of range");
            cyc.push_back(static_cast<std::uint32_t>(v - 1));
            i = j;
            skip_ws();
            if (i < text.size() && text[i] == ',') ++i;
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            std::uint32_t from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (img[from] != from) throw ParseError("point repeated across cycles");
            img[from] = to;
        }
    }
    return Permutation(std::move(img));
}

std::uint64_t hash_images(const std::uint32_t* data, std::size_t n, std::uint64_t seed) {
    // FNV-1a over the raw words, mixed once at the end.
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= data[i];
        h *= 1099511628211ull;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return h;
}

std::uint64_t hash_perm(const Permutation& p) { return hash_images(p.data(), p.degree()); }

} // namespace quillen
