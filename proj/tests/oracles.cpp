#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

using tslice::Bitset;
using tslice::FiniteGroup;
using tslice::Permutation;
using tslice::SubgroupLattice;

std::vector<Bitset> brute_force_subgroups(const FiniteGroup& g) {
    if (g.order > 16) throw std::runtime_error("brute_force_subgroups: order too large");
    std::vector<Bitset> out;
    for (std::uint32_t mask = 1; mask < (1u << g.order); ++mask) {
        if (!(mask & 1u)) continue; // identity required
        bool closed = true;
        for (int a = 0; a < g.order && closed; ++a) {
            if (!(mask >> a & 1u)) continue;
            for (int b = 0; b < g.order && closed; ++b) {
                if (!(mask >> b & 1u)) continue;
                if (!(mask >> g.at(a, b) & 1u)) closed = false;
            }
        }
        if (!closed) continue;
        Bitset s(g.order);
        for (int i = 0; i < g.order; ++i)
            if (mask >> i & 1u) s.set(i);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    return out;
}

std::map<std::pair<int, int>, long long> mobius_dual(const SubgroupLattice& lat) {
    std::map<std::pair<int, int>, long long> mu;
    for (int x = lat.size() - 1; x >= 0; --x)
        lat.up[x].for_each([&](int y) {
            if (y == x) {
                mu[{x, y}] = 1;
                return;
            }
            long long acc = 0;
            lat.up[x].for_each([&](int z) {
                if (z != x && lat.leq(z, y)) acc += mu.at({z, y});
            });
            mu[{x, y}] = -acc;
        });
    return mu;
}

std::set<Permutation> brute_closure_perms(const std::vector<Permutation>& gens) {
    int degree = gens.empty() ? 0 : gens[0].degree();
    std::set<Permutation> out{Permutation::identity(degree)};
    for (const auto& p : gens) out.insert(p);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Permutation> cur(out.begin(), out.end());
        for (const auto& p : cur)
            for (const auto& q : cur)
                if (out.insert(compose(p, q)).second) grew = true;
    }
    return out;
}

Bitset brute_product_set(const FiniteGroup& g, const Bitset& a, const Bitset& b) {
    Bitset out(g.order);
    a.for_each([&](int x) { b.for_each([&](int y) { out.set(g.at(x, y)); }); });
    return out;
}

} // namespace oracle
