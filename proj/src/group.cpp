#include "tslice/group.hpp"

#include <algorithm>
#include <cctype>

namespace tslice {

int FiniteGroup::element_order(int x) const {
    int k = 1, y = x;
    while (y != 0) {
        y = at(y, x);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (at(a, b) != at(b, a)) return false;
    return true;
}

std::map<int, int> FiniteGroup::element_order_spectrum() const {
    std::map<int, int> spec;
    for (int x = 0; x < order; ++x) ++spec[element_order(x)];
    return spec;
}

std::vector<int> FiniteGroup::conjugacy_class_sizes() const {
    std::vector<bool> seen(order, false);
    std::vector<int> sizes;
    for (int x = 0; x < order; ++x) {
        if (seen[x]) continue;
        int size = 0;
        for (int g = 0; g < order; ++g) {
            int y = conj(g, x);
            if (!seen[y]) {
                seen[y] = true;
                ++size;
            }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

Bitset FiniteGroup::center() const {
    Bitset z(order);
    for (int x = 0; x < order; ++x) {
        bool central = true;
        for (int g = 0; g < order && central; ++g) central = at(x, g) == at(g, x);
        if (central) z.set(x);
    }
    return z;
}

GroupPtr make_group(int order, std::vector<int> mul, std::vector<int> generators,
                    std::string label) {
    if (order < 1) throw Error("make_group: order must be positive");
    if (int(mul.size()) != order * order) throw Error("make_group: table size mismatch");
    for (int v : mul)
        if (v < 0 || v >= order) throw Error("make_group: table entry out of range");

    auto g = std::make_shared<FiniteGroup>();
    g->order = order;
    g->mul = std::move(mul);
    g->label = std::move(label);

    for (int x = 0; x < order; ++x)
        if (g->at(0, x) != x || g->at(x, 0) != x)
            throw Error("make_group: element 0 is not a two-sided identity");

    g->inv.assign(order, -1);
    for (int x = 0; x < order; ++x) {
        for (int y = 0; y < order; ++y)
            if (g->at(x, y) == 0 && g->at(y, x) == 0) {
                g->inv[x] = y;
                break;
            }
        if (g->inv[x] < 0) throw Error("make_group: element without inverse");
    }

    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (g->at(g->at(a, b), c) != g->at(a, g->at(b, c)))
                    throw Error("make_group: table is not associative");

    for (int v : generators)
        if (v < 0 || v >= order) throw Error("make_group: generator index out of range");
    Bitset seed(order);
    seed.set(0);
    for (int v : generators) seed.set(v);
    if (closure_set(*g, seed).count() != order)
        throw Error("make_group: generators do not generate the group");
    g->generators = std::move(generators);
    return g;
}

GroupPtr trivial_group(std::string label) {
    return make_group(1, {0}, {}, std::move(label));
}

GroupPtr group_from_generators(const std::vector<Permutation>& gens, const BuildConfig& cfg,
                               std::string label) {
    int degree = gens.empty() ? 0 : gens[0].degree();
    for (const auto& p : gens) {
        if (p.degree() != degree) throw Error("group_from_generators: degree mismatch");
        validate_permutation(p);
    }

    std::vector<Permutation> elems{Permutation::identity(degree)};
    std::map<Permutation, int> index{{elems[0], 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& gen : gens) {
            Permutation next = compose(elems[i], gen);
            if (index.emplace(next, int(elems.size())).second) {
                elems.push_back(std::move(next));
                if (int(elems.size()) > cfg.max_order)
                    throw CapError("group order exceeds cap of " +
                                   std::to_string(cfg.max_order));
            }
        }
    }

    int n = int(elems.size());
    std::vector<int> mul(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a * n + b] = index.at(compose(elems[a], elems[b]));

    std::vector<int> gen_idx;
    for (const auto& gen : gens) {
        int gi = index.at(gen);
        if (std::find(gen_idx.begin(), gen_idx.end(), gi) == gen_idx.end())
            gen_idx.push_back(gi);
    }

    if (label.empty()) {
        label = "gens:";
        for (std::size_t i = 0; i < gens.size(); ++i)
            label += (i ? ", " : " ") + cycle_string(gens[i]);
        if (gens.empty()) label = "C1";
    }
    return make_group(n, std::move(mul), std::move(gen_idx), std::move(label));
}

namespace {

std::string operand_label(const std::string& label) {
    if (label.find(" x ") != std::string::npos || label.rfind("gens:", 0) == 0)
        return "(" + label + ")";
    return label;
}

} // namespace

DirectProduct direct_product(GroupPtr a, GroupPtr b, const BuildConfig& cfg) {
    long long order = (long long)a->order * b->order;
    if (order > cfg.max_order)
        throw CapError("direct product order " + std::to_string(order) + " exceeds cap of " +
                       std::to_string(cfg.max_order));
    int n = int(order), nb = b->order;
    std::vector<int> mul(std::size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int g = a->at(x / nb, y / nb);
            int h = b->at(x % nb, y % nb);
            mul[x * n + y] = g * nb + h;
        }

    std::vector<int> gens;
    for (int g : a->generators) gens.push_back(g * nb);
    for (int h : b->generators) gens.push_back(h);

    std::string label = operand_label(a->label) + " x " + operand_label(b->label);
    GroupPtr prod = make_group(n, std::move(mul), std::move(gens), std::move(label));

    Bitset left(n), right(n);
    for (int g = 0; g < a->order; ++g) left.set(g * nb);
    for (int h = 0; h < nb; ++h) right.set(h);
    return DirectProduct{prod, Subgroup{prod, left}, Subgroup{prod, right}};
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Permutation cycle_perm(int degree, std::vector<int> pts) {
    Permutation p = Permutation::identity(degree);
    for (std::size_t i = 0; i < pts.size(); ++i) p.images[pts[i]] = pts[(i + 1) % pts.size()];
    return p;
}

Permutation range_cycle(int degree, int lo, int hi) { // (lo lo+1 ... hi)
    std::vector<int> pts;
    for (int i = lo; i <= hi; ++i) pts.push_back(i);
    return cycle_perm(degree, std::move(pts));
}

GroupPtr build_family(char fam, int n, int p, int k, const BuildConfig& cfg) {
    auto check_cap = [&](long long order) {
        if (order > cfg.max_order)
            throw CapError("group order " + std::to_string(order) + " exceeds cap of " +
                           std::to_string(cfg.max_order));
    };
    switch (fam) {
    case 'C': {
        if (n < 1) throw Error("C n: order must be at least 1");
        check_cap(n);
        if (n == 1) return trivial_group("C1");
        return group_from_generators({range_cycle(n, 0, n - 1)}, cfg, "C" + std::to_string(n));
    }
    case 'D': {
        if (n < 2 || n % 2 != 0) throw Error("D n: dihedral order must be even and at least 2");
        check_cap(n);
        int m = n / 2;
        std::string label = "D" + std::to_string(n);
        if (m == 1) return group_from_generators({cycle_perm(2, {0, 1})}, cfg, label);
        if (m == 2)
            return group_from_generators({cycle_perm(4, {2, 3}), cycle_perm(4, {0, 1})}, cfg,
                                         label);
        Permutation b = Permutation::identity(m); // reflection fixing 0
        for (int i = 0; i < m; ++i) b.images[i] = (m - i) % m;
        return group_from_generators({b, range_cycle(m, 0, m - 1)}, cfg, label);
    }
    case 'S': {
        if (n < 0) throw Error("S n: invalid degree");
        long long order = 1;
        for (int i = 2; i <= n; ++i) {
            order *= i;
            if (order > cfg.max_order) break;
        }
        check_cap(order);
        std::string label = "S" + std::to_string(n);
        if (n <= 1) return trivial_group(label);
        if (n == 2) return group_from_generators({cycle_perm(2, {0, 1})}, cfg, label);
        return group_from_generators({cycle_perm(n, {0, 1}), range_cycle(n, 0, n - 1)}, cfg,
                                     label);
    }
    case 'A': {
        if (n < 0) throw Error("A n: invalid degree");
        long long order = 1;
        for (int i = 2; i <= n; ++i) {
            order *= i;
            if (order / 2 > cfg.max_order) break;
        }
        order = n <= 1 ? 1 : order / 2;
        check_cap(order);
        std::string label = "A" + std::to_string(n);
        if (n <= 2) return trivial_group(label);
        if (n == 3) return group_from_generators({cycle_perm(3, {0, 1, 2})}, cfg, label);
        Permutation second = (n % 2 == 1) ? range_cycle(n, 0, n - 1) : range_cycle(n, 1, n - 1);
        return group_from_generators({cycle_perm(n, {0, 1, 2}), second}, cfg, label);
    }
    case 'Q': {
        if (n != 8) throw Error("Q n: only Q 8 is supported");
        check_cap(8);
        // left regular action on {1, i, -1, -i, j, k, -j, -k}
        Permutation qi = Permutation::identity(8), qj = Permutation::identity(8);
        qi.images = {1, 4, 3, 6, 5, 0, 7, 2};
        qj.images = {2, 7, 4, 1, 6, 3, 0, 5};
        return group_from_generators({qi, qj}, cfg, "Q8");
    }
    case 'E': {
        if (!is_prime(p)) throw Error("E p^k: p must be prime");
        if (k < 1) throw Error("E p^k: k must be at least 1");
        long long order = 1;
        for (int i = 0; i < k; ++i) {
            order *= p;
            if (order > cfg.max_order)
                throw CapError("group order exceeds cap of " + std::to_string(cfg.max_order));
        }
        check_cap(order);
        std::vector<Permutation> gens;
        for (int i = 0; i < k; ++i) gens.push_back(range_cycle(k * p, i * p, i * p + p - 1));
        return group_from_generators(gens, cfg,
                                     "E" + std::to_string(p) + "^" + std::to_string(k));
    }
    default:
        throw Error(std::string("unknown family letter '") + fam + "'");
    }
}

} // namespace

GroupPtr builtin_group(const std::string& family_spec, const BuildConfig& cfg) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < family_spec.size() && std::isspace((unsigned char)family_spec[i])) ++i;
    };
    skip_ws();
    if (i >= family_spec.size() || !std::isalpha((unsigned char)family_spec[i]))
        throw ParseError("expected a family letter", i);
    char fam = char(std::toupper((unsigned char)family_spec[i++]));
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = i;
        while (i < family_spec.size() && std::isdigit((unsigned char)family_spec[i])) ++i;
        if (i == start) throw ParseError("expected an integer", start);
        return std::stoi(family_spec.substr(start, i - start));
    };
    int n = read_int();
    int p = 0, k = 0;
    if (fam == 'E') {
        skip_ws();
        if (i >= family_spec.size() || family_spec[i] != '^')
            throw ParseError("E p^k: expected '^'", i);
        ++i;
        p = n;
        k = read_int();
        n = 0;
    }
    skip_ws();
    if (i != family_spec.size()) throw ParseError("trailing input after family spec", i);
    return build_family(fam, n, p, k, cfg);
}

Bitset closure_set(const FiniteGroup& g, Bitset seed) {
    seed.set(0);
    std::vector<int> list = seed.bits();
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t sz = list.size();
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = 0; j < sz; ++j) {
                int pxy = g.at(list[i], list[j]);
                if (!seed.test(pxy)) {
                    seed.set(pxy);
                    list.push_back(pxy);
                    grew = true;
                }
            }
    }
    return seed;
}

Subgroup subgroup_from_elements(GroupPtr g, const std::vector<int>& elements) {
    Bitset seed(g->order);
    for (int x : elements) {
        if (x < 0 || x >= g->order) throw Error("subgroup generator index out of range");
        seed.set(x);
    }
    return Subgroup{g, closure_set(*g, seed)};
}

Subgroup subgroup_from_set(GroupPtr g, Bitset members) {
    if (members.universe() != g->order) throw Error("subgroup set has wrong universe");
    if (!members.test(0)) throw Error("subgroup set does not contain the identity");
    std::vector<int> elems = members.bits();
    for (int a : elems)
        for (int b : elems)
            if (!members.test(g->at(a, b))) throw Error("subgroup set is not closed");
    return Subgroup{g, std::move(members)};
}

Subgroup trivial_subgroup(GroupPtr g) {
    Bitset b(g->order);
    b.set(0);
    return Subgroup{g, b};
}

Subgroup full_subgroup(GroupPtr g) {
    Bitset b(g->order);
    for (int i = 0; i < g->order; ++i) b.set(i);
    return Subgroup{g, b};
}

namespace {
void require_same_parent(const Subgroup& a, const Subgroup& b, const char* what) {
    if (a.parent.get() != b.parent.get())
        throw Error(std::string(what) + ": subgroups of different parents");
}
} // namespace

bool is_normal(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    for (int x = 0; x < g.order; ++x) {
        bool ok = true;
        h.members.for_each([&](int m) {
            if (!h.members.test(g.conj(x, m))) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

Subgroup normalizer(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    Bitset norm(g.order);
    for (int x = 0; x < g.order; ++x) {
        bool ok = true;
        h.members.for_each([&](int m) {
            if (!h.members.test(g.conj(x, m))) ok = false;
        });
        if (ok) norm.set(x);
    }
    return Subgroup{h.parent, norm};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    require_same_parent(a, b, "intersect");
    return Subgroup{a.parent, a.members & b.members};
}

Subgroup subgroup_product(const Subgroup& s, const Subgroup& n) {
    require_same_parent(s, n, "subgroup_product");
    const FiniteGroup& g = *s.parent;
    Bitset prod(g.order);
    s.members.for_each([&](int a) { n.members.for_each([&](int b) { prod.set(g.at(a, b)); }); });
    std::vector<int> elems = prod.bits();
    for (int a : elems)
        for (int b : elems)
            if (!prod.test(g.at(a, b)))
                throw Error("subgroup product set is not closed (right factor not normal)");
    return Subgroup{s.parent, std::move(prod)};
}

std::map<int, int> order_spectrum_of(const FiniteGroup& g, const Bitset& members) {
    std::map<int, int> spec;
    members.for_each([&](int x) { ++spec[g.element_order(x)]; });
    return spec;
}

std::vector<int> small_generating_set(const FiniteGroup& g, const Bitset& within) {
    Bitset cl(g.order);
    cl.set(0);
    std::vector<int> gens;
    while (cl != within) {
        int best = -1, best_size = cl.count();
        Bitset best_cl;
        within.for_each([&](int x) {
            if (cl.test(x)) return;
            Bitset cand = cl;
            cand.set(x);
            cand = closure_set(g, std::move(cand));
            if (cand.count() > best_size) {
                best_size = cand.count();
                best = x;
                best_cl = std::move(cand);
            }
        });
        if (best < 0) throw Error("small_generating_set: set is not a subgroup");
        gens.push_back(best);
        cl = best_cl;
    }
    return gens;
}

bool GroupMap::is_surjective() const {
    Bitset img(target->order);
    for (int v : images) img.set(v);
    return img.count() == target->order;
}

bool GroupMap::is_bijective() const { return source->order == target->order && is_surjective(); }

GroupMap make_group_map(GroupPtr source, GroupPtr target, std::vector<int> images) {
    if (int(images.size()) != source->order) throw Error("group map: image table size mismatch");
    for (int v : images)
        if (v < 0 || v >= target->order) throw Error("group map: image out of range");
    if (images[0] != 0) throw Error("group map: identity must map to identity");
    for (int a = 0; a < source->order; ++a)
        for (int b = 0; b < source->order; ++b)
            if (images[source->at(a, b)] != target->at(images[a], images[b]))
                throw Error("group map: not a homomorphism");
    Bitset ker(source->order);
    for (int a = 0; a < source->order; ++a)
        if (images[a] == 0) ker.set(a);
    Subgroup kernel{source, std::move(ker)};
    return GroupMap{std::move(source), std::move(target), std::move(images), std::move(kernel)};
}

Subgroup image_subgroup(const GroupMap& f, const Subgroup& s) {
    if (s.parent.get() != f.source.get()) throw Error("image_subgroup: parent mismatch");
    Bitset img(f.target->order);
    s.members.for_each([&](int x) { img.set(f.images[x]); });
    return Subgroup{f.target, std::move(img)};
}

QuotientGroup quotient_group(const Subgroup& n) {
    if (!is_normal(n)) throw Error("quotient_group: subgroup is not normal");
    const FiniteGroup& g = *n.parent;
    std::vector<int> coset_of(g.order, -1), reps;
    for (int x = 0; x < g.order; ++x) {
        if (coset_of[x] >= 0) continue;
        int c = int(reps.size());
        reps.push_back(x);
        n.members.for_each([&](int m) { coset_of[g.at(x, m)] = c; });
    }

    int q = int(reps.size());
    std::vector<int> mul(std::size_t(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) mul[i * q + j] = coset_of[g.at(reps[i], reps[j])];

    std::vector<int> gens;
    for (int x : g.generators) {
        int c = coset_of[x];
        if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
    }

    std::string label = operand_label(g.label) + "/N" + std::to_string(n.order());
    GroupPtr quot = make_group(q, std::move(mul), std::move(gens), std::move(label));
    GroupMap proj = make_group_map(n.parent, quot, coset_of);
    if (!(proj.kernel.members == n.members)) throw Error("quotient_group: kernel mismatch");
    return QuotientGroup{quot, std::move(proj)};
}

RootedSubgroup as_group(const Subgroup& s, std::string label) {
    const FiniteGroup& g = *s.parent;
    std::vector<int> to_parent = s.members.bits();
    std::vector<int> from_parent(g.order, -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) from_parent[to_parent[i]] = int(i);
    if (to_parent.empty() || to_parent[0] != 0)
        throw Error("as_group: set does not contain the identity");

    int m = int(to_parent.size());
    std::vector<int> mul(std::size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int p = g.at(to_parent[i], to_parent[j]);
            if (from_parent[p] < 0) throw Error("as_group: set is not closed");
            mul[i * m + j] = from_parent[p];
        }

    std::vector<int> gens;
    for (int x : small_generating_set(g, s.members)) gens.push_back(from_parent[x]);

    if (label.empty()) label = operand_label(g.label) + "[" + std::to_string(m) + "]";
    GroupPtr group = make_group(m, std::move(mul), std::move(gens), std::move(label));
    return RootedSubgroup{std::move(group), std::move(to_parent), std::move(from_parent)};
}

// ---- isomorphism search ----

namespace {

struct PrefixClosures {
    // disc: discovery order; prov[x]: (-2,-2) identity, (-1,slot) generator,
    // else (a,b) with x = a*b and a,b discovered earlier.
    std::vector<int> disc;
    std::vector<std::pair<int, int>> prov;
    std::vector<int> level_end; // disc prefix length per generator level
};

PrefixClosures build_prefix_closures(const FiniteGroup& g, const std::vector<int>& gens) {
    PrefixClosures pc;
    pc.prov.assign(g.order, {-3, -3});
    std::vector<bool> in(g.order, false);
    pc.disc.push_back(0);
    in[0] = true;
    pc.prov[0] = {-2, -2};
    for (std::size_t slot = 0; slot < gens.size(); ++slot) {
        int gen = gens[slot];
        if (!in[gen]) {
            in[gen] = true;
            pc.prov[gen] = {-1, int(slot)};
            pc.disc.push_back(gen);
        }
        bool grew = true;
        while (grew) {
            grew = false;
            std::size_t sz = pc.disc.size();
            for (std::size_t i = 0; i < sz; ++i)
                for (std::size_t j = 0; j < sz; ++j) {
                    int pxy = g.at(pc.disc[i], pc.disc[j]);
                    if (!in[pxy]) {
                        in[pxy] = true;
                        pc.prov[pxy] = {pc.disc[i], pc.disc[j]};
                        pc.disc.push_back(pxy);
                        grew = true;
                    }
                }
        }
        pc.level_end.push_back(int(pc.disc.size()));
    }
    if (gens.empty()) pc.level_end.push_back(1);
    return pc;
}

struct IsoSearch {
    const FiniteGroup& g;
    const FiniteGroup& h;
    const PrefixClosures& pc;
    const std::vector<int>& gens;
    const std::vector<std::vector<int>>& candidates; // per slot, ascending
    std::vector<int> img;                            // chosen image per slot
    std::vector<int> f;                              // partial map
    std::vector<bool> used;

    bool replay(int level) {
        std::fill(f.begin(), f.end(), -1);
        std::fill(used.begin(), used.end(), false);
        int end = pc.level_end[level];
        for (int i = 0; i < end; ++i) {
            int x = pc.disc[i];
            auto [a, b] = pc.prov[x];
            int fx;
            if (a == -2) fx = 0;
            else if (a == -1) fx = img[b];
            else fx = h.at(f[a], f[b]);
            if (used[fx] && f[x] != fx) return false; // injectivity
            if (f[x] >= 0 && f[x] != fx) return false;
            f[x] = fx;
            used[fx] = true;
        }
        // full homomorphism check on the closed prefix
        for (int i = 0; i < end; ++i)
            for (int j = 0; j < end; ++j) {
                int x = pc.disc[i], y = pc.disc[j];
                if (f[g.at(x, y)] != h.at(f[x], f[y])) return false;
            }
        return true;
    }

    bool search(std::size_t slot) {
        if (slot == gens.size()) return true; // last replay filled f completely
        for (int cand : candidates[slot]) {
            img[slot] = cand;
            if (!replay(int(slot))) continue;
            if (search(slot + 1)) return true;
        }
        return false;
    }
};

std::vector<int> sorted_multiset(std::map<int, int> m) {
    std::vector<int> out;
    for (auto [k, v] : m) {
        out.push_back(k);
        out.push_back(v);
    }
    return out;
}

} // namespace

std::optional<GroupMap> subset_respecting_isomorphism(GroupPtr a, const Bitset& sa, GroupPtr b,
                                                      const Bitset& sb) {
    const FiniteGroup& g = *a;
    const FiniteGroup& h = *b;
    if (g.order != h.order || sa.count() != sb.count()) return std::nullopt;
    if (sorted_multiset(g.element_order_spectrum()) != sorted_multiset(h.element_order_spectrum()))
        return std::nullopt;
    if (g.conjugacy_class_sizes() != h.conjugacy_class_sizes()) return std::nullopt;
    if (g.center().count() != h.center().count()) return std::nullopt;
    if (sorted_multiset(order_spectrum_of(g, sa)) != sorted_multiset(order_spectrum_of(h, sb)))
        return std::nullopt;

    // generating set adapted to the constrained subgroup
    std::vector<int> gens = small_generating_set(g, sa);
    std::size_t n_sgens = gens.size();
    {
        Bitset cl = closure_set(g, [&] {
            Bitset s(g.order);
            s.set(0);
            for (int x : gens) s.set(x);
            return s;
        }());
        while (cl.count() != g.order) {
            int best = -1, best_size = cl.count();
            Bitset best_cl;
            for (int x = 0; x < g.order; ++x) {
                if (cl.test(x)) continue;
                Bitset cand = cl;
                cand.set(x);
                cand = closure_set(g, std::move(cand));
                if (cand.count() > best_size) {
                    best_size = cand.count();
                    best = x;
                    best_cl = std::move(cand);
                }
            }
            gens.push_back(best);
            cl = best_cl;
        }
    }

    PrefixClosures pc = build_prefix_closures(g, gens);
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t slot = 0; slot < gens.size(); ++slot) {
        int want = g.element_order(gens[slot]);
        for (int y = 0; y < h.order; ++y) {
            if (slot < n_sgens && !sb.test(y)) continue;
            if (h.element_order(y) == want) candidates[slot].push_back(y);
        }
        if (candidates[slot].empty()) return std::nullopt;
    }

    IsoSearch is{g, h, pc, gens, candidates, std::vector<int>(gens.size()),
                 std::vector<int>(g.order, -1), std::vector<bool>(h.order, false)};
    if (gens.empty()) {
        // both trivial
        return make_group_map(a, b, {0});
    }
    if (!is.search(0)) return std::nullopt;

    std::vector<int> images(g.order);
    for (int x = 0; x < g.order; ++x) images[x] = is.f[x];
    return make_group_map(a, b, std::move(images));
}

std::optional<GroupMap> are_isomorphic(GroupPtr a, GroupPtr b) {
    Bitset fa(a->order), fb(b->order);
    for (int i = 0; i < a->order; ++i) fa.set(i);
    for (int i = 0; i < b->order; ++i) fb.set(i);
    return subset_respecting_isomorphism(std::move(a), fa, std::move(b), fb);
}

// ---- structure recognition ----

namespace {

// partition of the p-part from element counts: parts[i] are p-exponents, descending
std::vector<int> abelian_p_partition(const FiniteGroup& g, int p) {
    std::vector<long long> f; // f[j] = #{x : ord(x) | p^j}
    long long pj = 1;
    while (true) {
        long long cnt = 0;
        for (int x = 0; x < g.order; ++x) {
            int ord = g.element_order(x);
            bool divides = pj % ord == 0;
            if (divides) ++cnt;
        }
        f.push_back(cnt);
        if (f.size() > 1 && f.back() == f[f.size() - 2]) break;
        pj *= p;
    }
    std::vector<int> exps; // E_j = log_p f_j
    for (long long v : f) {
        int e = 0;
        while (v > 1) {
            if (v % p != 0) throw Error("abelian invariant computation failed");
            v /= p;
            ++e;
        }
        exps.push_back(e);
    }
    std::vector<int> count_ge; // count_ge[j-1] = #parts with exponent >= j
    for (std::size_t j = 1; j < exps.size(); ++j) count_ge.push_back(exps[j] - exps[j - 1]);
    std::vector<int> parts;
    if (!count_ge.empty())
        for (int i = 1; i <= count_ge[0]; ++i) {
            int lambda = 0;
            for (std::size_t j = 0; j < count_ge.size(); ++j)
                if (count_ge[j] >= i) lambda = int(j) + 1;
            parts.push_back(lambda);
        }
    return parts; // descending by construction
}

std::string abelian_name(const FiniteGroup& g) {
    std::vector<int> primes;
    int n = g.order;
    for (int p = 2; p <= n; ++p)
        if (is_prime(p) && n % p == 0) primes.push_back(p);

    std::vector<std::vector<int>> partitions;
    std::size_t max_parts = 0;
    for (int p : primes) {
        partitions.push_back(abelian_p_partition(g, p));
        max_parts = std::max(max_parts, partitions.back().size());
    }

    std::vector<long long> factors(max_parts, 1);
    for (std::size_t pi = 0; pi < primes.size(); ++pi)
        for (std::size_t t = 0; t < partitions[pi].size(); ++t) {
            long long pw = 1;
            for (int e = 0; e < partitions[pi][t]; ++e) pw *= primes[pi];
            factors[t] *= pw;
        }

    std::string out;
    for (std::size_t t = 0; t < factors.size(); ++t)
        out += (t ? " x C" : "C") + std::to_string(factors[t]);
    return out.empty() ? "C1" : out;
}

} // namespace

std::optional<std::string> recognize_group(const FiniteGroup& g) {
    if (g.order == 1) return "C1";
    if (g.is_abelian()) return abelian_name(g);

    auto self = std::make_shared<FiniteGroup>(g);
    BuildConfig cfg{g.order};
    std::vector<std::string> tries;
    if (g.order == 6) tries.push_back("S 3");
    if (g.order == 24) tries.push_back("S 4");
    if (g.order == 12) tries.push_back("A 4");
    if (g.order == 60) tries.push_back("A 5");
    if (g.order == 8) tries.push_back("Q 8");
    if (g.order % 2 == 0 && g.order >= 6) tries.push_back("D " + std::to_string(g.order));
    for (const auto& spec : tries) {
        GroupPtr cand = builtin_group(spec, cfg);
        if (are_isomorphic(self, cand)) return cand->label;
    }
    return std::nullopt;
}

std::string describe_group(const FiniteGroup& g) {
    if (auto name = recognize_group(g)) return *name;
    return g.label;
}

} // namespace tslice
