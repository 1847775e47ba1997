#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tslice {

// Set of indices drawn from a fixed universe {0, ..., universe-1}.
// Ordered by value when read as an integer with bit 0 least significant,
// which makes "smallest members first" sets compare low. That ordering is
// the canonical tie-breaker everywhere a deterministic choice is needed.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // other ⊆ this
    bool contains(const Bitset& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (other.w_[i] & ~w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& other) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & other.w_[i]) return true;
        return false;
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    Bitset operator|(const Bitset& o) const {
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool operator<(const Bitset& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (std::size_t i = w_.size(); i-- > 0;)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

    // number of set bits strictly below i
    int rank(int i) const {
        int c = 0, full = i >> 6;
        for (int k = 0; k < full; ++k) c += __builtin_popcountll(w_[k]);
        if (i & 63) c += __builtin_popcountll(w_[full] & ((std::uint64_t(1) << (i & 63)) - 1));
        return c;
    }

    std::vector<int> bits() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                int b = __builtin_ctzll(w);
                fn(int(k * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::string to_hex() const;
    static Bitset from_hex(int universe, const std::string& hex);

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

inline std::string Bitset::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    int nibbles = (n_ + 3) / 4;
    if (nibbles == 0) nibbles = 1;
    for (int i = nibbles - 1; i >= 0; --i) {
        int word = i / 16, shift = (i % 16) * 4;
        unsigned v = word < int(w_.size()) ? unsigned((w_[word] >> shift) & 0xf) : 0;
        out.push_back(digits[v]);
    }
    return out;
}

inline Bitset Bitset::from_hex(int universe, const std::string& hex) {
    Bitset r(universe);
    int nibble = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, ++nibble) {
        char c = *it;
        unsigned v;
        if (c >= '0' && c <= '9') v = unsigned(c - '0');
        else if (c >= 'a' && c <= 'f') v = unsigned(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') v = unsigned(c - 'A' + 10);
        else continue;
        for (int b = 0; b < 4; ++b)
            if (v & (1u << b)) {
                int bit = nibble * 4 + b;
                if (bit < universe) r.set(bit);
            }
    }
    return r;
}

} // namespace tslice
