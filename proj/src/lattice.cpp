#include "tslice/lattice.hpp"

#include <algorithm>
#include <set>

namespace tslice {

namespace {

bool canonical_less(const Bitset& a, const Bitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
}

void fill_relations(SubgroupLattice& lat) {
    const FiniteGroup& g = *lat.group;
    int n = lat.size();

    lat.up.assign(n, Bitset(n));
    lat.down.assign(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (lat.subs[j].contains(lat.subs[i])) {
                lat.up[i].set(j);
                lat.down[j].set(i);
            }

    lat.conj_sub.assign(std::size_t(g.order) * n, -1);
    for (int x = 0; x < g.order; ++x)
        for (int i = 0; i < n; ++i) {
            Bitset img(g.order);
            lat.subs[i].for_each([&](int m) { img.set(g.conj(x, m)); });
            int j = lat.index_of(img);
            if (j < 0) throw Error("lattice: conjugate subgroup missing");
            lat.conj_sub[std::size_t(x) * n + i] = j;
        }

    lat.class_rep.assign(n, -1);
    lat.normal_mask = Bitset(n);
    for (int i = 0; i < n; ++i) {
        int rep = i;
        bool singleton = true;
        for (int x = 0; x < g.order; ++x) {
            int j = lat.conj_idx(x, i);
            rep = std::min(rep, j);
            if (j != i) singleton = false;
        }
        lat.class_rep[i] = rep;
        if (singleton) lat.normal_mask.set(i);
    }

    lat.normalizer_idx.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        Bitset norm(g.order);
        for (int x = 0; x < g.order; ++x)
            if (lat.conj_idx(x, i) == i) norm.set(x);
        int j = lat.index_of(norm);
        if (j < 0) throw Error("lattice: normalizer subgroup missing");
        lat.normalizer_idx[i] = j;
    }
}

} // namespace

int SubgroupLattice::index_of(const Bitset& members) const {
    auto it = std::lower_bound(subs.begin(), subs.end(), members, canonical_less);
    if (it != subs.end() && *it == members) return int(it - subs.begin());
    return -1;
}

int SubgroupLattice::meet(int a, int b) const {
    int i = index_of(subs[a] & subs[b]);
    if (i < 0) throw Error("lattice: intersection missing");
    return i;
}

int SubgroupLattice::join(int a, int b) const {
    int i = index_of(closure_set(*group, subs[a] | subs[b]));
    if (i < 0) throw Error("lattice: join missing");
    return i;
}

std::vector<int> SubgroupLattice::normal_list() const {
    std::vector<int> out;
    normal_mask.for_each([&](int i) { out.push_back(i); });
    return out;
}

SubgroupLattice build_lattice(GroupPtr g) {
    std::set<Bitset> seen;
    std::vector<Bitset> work;
    Bitset triv(g->order);
    triv.set(0);
    seen.insert(triv);
    work.push_back(triv);

    for (std::size_t i = 0; i < work.size(); ++i) {
        Bitset cur = work[i]; // copy: work may reallocate
        for (int x = 0; x < g->order; ++x) {
            if (cur.test(x)) continue;
            Bitset ext = cur;
            ext.set(x);
            Bitset joined = closure_set(*g, std::move(ext));
            if (seen.insert(joined).second) work.push_back(std::move(joined));
        }
    }

    SubgroupLattice lat;
    lat.group = std::move(g);
    lat.subs.assign(seen.begin(), seen.end());
    std::sort(lat.subs.begin(), lat.subs.end(), canonical_less);
    fill_relations(lat);
    return lat;
}

SubgroupLattice lattice_from_subgroup_sets(GroupPtr g, std::vector<Bitset> subs) {
    SubgroupLattice lat;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        subgroup_from_set(g, subs[i]); // throws unless a genuine subgroup
        if (i > 0 && !canonical_less(subs[i - 1], subs[i]))
            throw Error("lattice: stored subgroups out of order");
    }
    if (subs.empty() || subs[0].count() != 1 || subs.back().count() != g->order)
        throw Error("lattice: stored subgroups incomplete");
    lat.group = std::move(g);
    lat.subs = std::move(subs);
    fill_relations(lat);
    return lat;
}

MobiusTable mobius_table(const SubgroupLattice& lat) {
    int n = lat.size();
    MobiusTable t;
    t.up = lat.up;
    t.values.resize(n);
    for (int x = 0; x < n; ++x) {
        std::vector<int> uppers = lat.up[x].bits(); // ascending, so subgroups first
        t.values[x].assign(uppers.size(), 0);
        for (std::size_t yi = 0; yi < uppers.size(); ++yi) {
            int y = uppers[yi];
            if (y == x) {
                t.values[x][yi] = 1;
                continue;
            }
            long long acc = 0;
            Bitset between = lat.up[x] & lat.down[y];
            between.for_each([&](int z) {
                if (z != y) acc += t.values[x][lat.up[x].rank(z)];
            });
            t.values[x][yi] = -acc;
        }
    }
    return t;
}

MobiusTable mobius_from_values(const SubgroupLattice& lat,
                               const std::vector<std::tuple<int, int, long long>>& triples) {
    int n = lat.size();
    MobiusTable t;
    t.up = lat.up;
    t.values.resize(n);
    std::size_t expected = 0;
    for (int x = 0; x < n; ++x) {
        t.values[x].assign(lat.up[x].count(), 0);
        expected += lat.up[x].count();
    }
    if (triples.size() != expected) throw Error("moebius: stored pair count mismatch");
    std::vector<std::vector<bool>> filled(n);
    for (int x = 0; x < n; ++x) filled[x].assign(lat.up[x].count(), false);
    for (auto [x, y, v] : triples) {
        if (x < 0 || x >= n || y < 0 || y >= n || !lat.up[x].test(y))
            throw Error("moebius: stored pair not comparable");
        int r = lat.up[x].rank(y);
        if (filled[x][r]) throw Error("moebius: duplicate stored pair");
        filled[x][r] = true;
        t.values[x][r] = v;
    }
    return t;
}

SliceClasses build_slice_classes(const SubgroupLattice& lat) {
    const FiniteGroup& g = *lat.group;
    int n = lat.size();

    SliceClasses sc;
    std::set<std::pair<int, int>> visited;
    std::vector<std::pair<int, int>> reps;
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> orbit_of_rep;

    for (int t = 0; t < n; ++t)
        lat.down[t].for_each([&](int s) {
            std::pair<int, int> start{t, s};
            if (visited.count(start)) return;
            // orbit under simultaneous conjugation
            std::vector<std::pair<int, int>> orbit;
            std::set<std::pair<int, int>> mem;
            orbit.push_back(start);
            mem.insert(start);
            for (std::size_t i = 0; i < orbit.size(); ++i)
                for (int x = 0; x < g.order; ++x) {
                    std::pair<int, int> nxt{lat.conj_idx(x, orbit[i].first),
                                            lat.conj_idx(x, orbit[i].second)};
                    if (mem.insert(nxt).second) orbit.push_back(nxt);
                }
            std::pair<int, int> rep = *mem.begin();
            reps.push_back(rep);
            orbit_of_rep[rep].assign(mem.begin(), mem.end());
            visited.insert(mem.begin(), mem.end());
        });

    std::sort(reps.begin(), reps.end(), [&](const auto& a, const auto& b) {
        auto key = [&](const std::pair<int, int>& p) {
            return std::make_tuple(lat.order_of(p.first), lat.order_of(p.second), p.first,
                                   p.second);
        };
        return key(a) < key(b);
    });

    sc.reps = reps;
    for (std::size_t c = 0; c < reps.size(); ++c) {
        const auto& orbit = orbit_of_rep.at(reps[c]);
        sc.class_size.push_back(int(orbit.size()));
        for (const auto& p : orbit) sc.class_of[p] = int(c);
    }
    return sc;
}

} // namespace tslice
