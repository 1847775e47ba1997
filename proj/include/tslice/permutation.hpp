#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tslice {

// Bijection on {0, ..., degree-1}, stored as the image table.
struct Permutation {
    std::vector<int> images;

    int degree() const { return int(images.size()); }
    int operator()(int i) const { return images[i]; }
    bool is_identity() const;

    static Permutation identity(int degree);

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return images < o.images; }
};

// p after q: (p*q)(i) = p(q(i))
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// Throws Error unless images is a bijection.
void validate_permutation(const Permutation& p);

// Canonical cycle notation: "(0 1 2 3)(4 5)", fixed points omitted, "()" for
// the identity. Cycles sorted by smallest moved point, each starting there.
std::string cycle_string(const Permutation& p);

// Comma-separated list of permutations, each a product of cycles with
// whitespace-separated points: "(0 1 2 3), (0 2)". Points are 0-based.
// Within one permutation, the rightmost cycle is applied first. All results
// are padded to one common degree (largest point seen + 1).
std::vector<Permutation> parse_permutation_list(std::string_view text);

} // namespace tslice
