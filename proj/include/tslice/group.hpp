#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tslice/bitset.hpp"
#include "tslice/error.hpp"
#include "tslice/permutation.hpp"

namespace tslice {

struct BuildConfig {
    int max_order = 64;
};

// Finite group as an explicit multiplication table. Element 0 is the
// identity. Immutable after construction; share via GroupPtr.
struct FiniteGroup {
    int order = 1;
    std::vector<int> mul; // row-major, mul[a*order + b] = a*b
    std::vector<int> inv;
    std::vector<int> generators; // element indices, in the order they were given
    std::string label;

    int at(int a, int b) const { return mul[a * order + b]; }
    int conj(int g, int x) const { return at(at(g, x), inv[g]); } // g x g^-1

    int element_order(int x) const;
    bool is_abelian() const;
    std::map<int, int> element_order_spectrum() const; // order -> count
    std::vector<int> conjugacy_class_sizes() const;    // ascending
    Bitset center() const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Validates the table in full (identity, inverses, associativity, generators).
GroupPtr make_group(int order, std::vector<int> mul, std::vector<int> generators,
                    std::string label);

GroupPtr trivial_group(std::string label = "C1");

// Breadth-first closure of the generators, in the order given; element 0 is
// the identity and numbering follows discovery order, so it is deterministic.
// All generators must share one degree.
GroupPtr group_from_generators(const std::vector<Permutation>& gens, const BuildConfig& cfg,
                               std::string label = "");

struct Subgroup {
    GroupPtr parent;
    Bitset members;

    int order() const { return members.count(); }
    bool contains(int x) const { return members.test(x); }
    bool operator==(const Subgroup& o) const {
        return parent.get() == o.parent.get() && members == o.members;
    }
};

struct DirectProduct {
    GroupPtr group;
    Subgroup left;  // image of the left factor
    Subgroup right; // image of the right factor
};

// Element (g, h) gets index g*|H| + h; generators are the embedded
// generators of the left factor followed by those of the right.
DirectProduct direct_product(GroupPtr a, GroupPtr b, const BuildConfig& cfg);

// "C 6", "D 8", "S 4", "A 4", "Q 8", "E 2^3". Case-insensitive letter.
// D n is the dihedral group of ORDER n (n even). E p^k needs p prime.
GroupPtr builtin_group(const std::string& family_spec, const BuildConfig& cfg);

Bitset closure_set(const FiniteGroup& g, Bitset seed);
Subgroup subgroup_from_elements(GroupPtr g, const std::vector<int>& elements);
Subgroup subgroup_from_set(GroupPtr g, Bitset members); // validates closedness
Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);

bool is_normal(const Subgroup& h);
Subgroup normalizer(const Subgroup& h);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// Product set SN. N must be normal (anything whose product set is not a
// subgroup is rejected).
Subgroup subgroup_product(const Subgroup& s, const Subgroup& n);

std::map<int, int> order_spectrum_of(const FiniteGroup& g, const Bitset& members);

// Greedy small generating set of the given subgroup set: repeatedly add the
// element producing the largest closure, smallest index on ties.
std::vector<int> small_generating_set(const FiniteGroup& g, const Bitset& within);

struct GroupMap {
    GroupPtr source, target;
    std::vector<int> images;
    Subgroup kernel;

    int operator()(int x) const { return images[x]; }
    bool is_surjective() const;
    bool is_bijective() const;
};

// Validates the homomorphism property on the full table.
GroupMap make_group_map(GroupPtr source, GroupPtr target, std::vector<int> images);

Subgroup image_subgroup(const GroupMap& f, const Subgroup& s);

struct QuotientGroup {
    GroupPtr group;
    GroupMap projection;
};

// Cosets are numbered by their smallest member, in increasing order, so the
// identity coset is element 0 and the numbering is deterministic.
QuotientGroup quotient_group(const Subgroup& n);

// Subgroup re-rooted as a group of its own. Members keep their relative
// order: to_parent[i] is ascending, from_parent inverts it (-1 outside).
struct RootedSubgroup {
    GroupPtr group;
    std::vector<int> to_parent;
    std::vector<int> from_parent;
};
RootedSubgroup as_group(const Subgroup& s, std::string label = "");

// Isomorphism search: invariant fingerprints first, then backtracking over
// images of a greedy generating set. Returns a witness map if found.
std::optional<GroupMap> are_isomorphic(GroupPtr a, GroupPtr b);

// Isomorphism a -> b required to carry subgroup sa onto sb.
std::optional<GroupMap> subset_respecting_isomorphism(GroupPtr a, const Bitset& sa, GroupPtr b,
                                                      const Bitset& sb);

// Best-effort structure name: exact for abelian groups (invariant factors),
// family match (S, A, D, Q) otherwise. nullopt when unrecognized.
std::optional<std::string> recognize_group(const FiniteGroup& g);
std::string describe_group(const FiniteGroup& g); // recognized name or label

} // namespace tslice
