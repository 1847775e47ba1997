#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "tslice/group.hpp"

namespace tslice {

// Full subgroup lattice. Subgroups are indexed in a canonical order (by
// order, then by member-set value), so index 0 is the trivial subgroup and
// the last index is the whole group, and strict containment always goes from
// a smaller index to a larger one.
struct SubgroupLattice {
    GroupPtr group;
    std::vector<Bitset> subs;        // member sets, canonical order
    std::vector<Bitset> up;          // up[i]: indices j with subs[i] <= subs[j]
    std::vector<Bitset> down;        // down[i]: indices j with subs[j] <= subs[i]
    std::vector<int> conj_sub;       // [g*size() + i] -> index of g subs[i] g^-1
    std::vector<int> normalizer_idx; // index of N_G(subs[i])
    std::vector<int> class_rep;      // smallest index in the conjugacy orbit
    Bitset normal_mask;              // conjugation-stable subgroups

    int size() const { return int(subs.size()); }
    int bottom() const { return 0; }
    int top() const { return size() - 1; }
    int order_of(int i) const { return subs[i].count(); }
    bool leq(int a, int b) const { return up[a].test(b); }
    bool is_normal_idx(int i) const { return normal_mask.test(i); }
    int conj_idx(int g, int i) const { return conj_sub[std::size_t(g) * size() + i]; }

    int index_of(const Bitset& members) const; // -1 if absent
    int meet(int a, int b) const;
    int join(int a, int b) const;
    std::vector<int> normal_list() const; // ascending
};

SubgroupLattice build_lattice(GroupPtr g);

// Rebuild a lattice from stored member sets (validates each set and the
// canonical order, then recomputes the relations).
SubgroupLattice lattice_from_subgroup_sets(GroupPtr g, std::vector<Bitset> subs);

// Moebius function of the lattice, fully tabulated over comparable pairs.
// values[x] runs parallel to the ascending bits of up[x].
struct MobiusTable {
    std::vector<Bitset> up; // copy of the lattice's up sets
    std::vector<std::vector<long long>> values;

    long long mu(int x, int y) const {
        if (!up[x].test(y)) return 0;
        return values[x][up[x].rank(y)];
    }
};

MobiusTable mobius_table(const SubgroupLattice& lat);

// Rebuild from stored (x, y, value) triples; every comparable pair must be
// present exactly once.
MobiusTable mobius_from_values(const SubgroupLattice& lat,
                               const std::vector<std::tuple<int, int, long long>>& triples);

// Conjugacy classes of slices (T, S), S <= T, under simultaneous
// conjugation. Representatives are the lexicographically smallest index
// pairs of their orbits, listed in display order.
struct SliceClasses {
    std::vector<std::pair<int, int>> reps;      // (t, s), sorted for display
    std::map<std::pair<int, int>, int> class_of; // every nested pair -> class index
    std::vector<int> class_size;                 // orbit sizes, parallel to reps
};

SliceClasses build_slice_classes(const SubgroupLattice& lat);

} // namespace tslice
