#include "tslice/slice.hpp"

#include <stdexcept>

namespace tslice {

namespace {

// index of the product set SN in the lattice (N normal, so SN is a subgroup)
int product_idx(const SubgroupLattice& lat, int s_idx, int n_idx) {
    const FiniteGroup& g = *lat.group;
    Bitset prod(g.order);
    lat.subs[s_idx].for_each(
        [&](int a) { lat.subs[n_idx].for_each([&](int b) { prod.set(g.at(a, b)); }); });
    int i = lat.index_of(prod);
    if (i < 0) throw Error("slice: product set is not a subgroup");
    return i;
}

// |AB| * |A^B| == |A| * |B| test without forming the product set
bool product_is(const SubgroupLattice& lat, int a, int b, int target) {
    long long lhs = (long long)lat.order_of(a) * lat.order_of(b);
    long long rhs = (long long)lat.order_of(target) * (lat.subs[a] & lat.subs[b]).count();
    return lhs == rhs && lat.leq(a, target) && lat.leq(b, target);
}

// translate a parent-coordinate subgroup into the rooted lattice of S
int rooted_index(const RootedCtx& rc, const SubgroupLattice& parent_lat, int sub_idx) {
    Bitset local(int(rc.to_parent.size()));
    parent_lat.subs[sub_idx].for_each([&](int x) {
        int i = rc.from_parent[x];
        if (i < 0) throw Error("slice: subgroup escapes the root");
        local.set(i);
    });
    int idx = rc.ctx->lattice().index_of(local);
    if (idx < 0) throw Error("slice: translated subgroup missing");
    return idx;
}

} // namespace

SliceBurnsideElement slice_zero(CtxPtr ctx) { return SliceBurnsideElement{std::move(ctx), {}}; }

SliceBurnsideElement slice_basis(CtxPtr ctx, int t_idx, int s_idx) {
    const SliceClasses& sc = ctx->slice_classes();
    auto it = sc.class_of.find({t_idx, s_idx});
    if (it == sc.class_of.end()) throw Error("slice: pair is not nested");
    SliceBurnsideElement e{std::move(ctx), {}};
    e.coeff[it->second] = Rational(1);
    return e;
}

SliceBurnsideElement operator+(const SliceBurnsideElement& a, const SliceBurnsideElement& b) {
    if (a.ctx.get() != b.ctx.get()) throw Error("slice: adding elements of different rings");
    SliceBurnsideElement out{a.ctx, a.coeff};
    for (const auto& [k, c] : b.coeff) {
        Rational& slot = out.coeff[k];
        slot += c;
        if (slot.is_zero()) out.coeff.erase(k);
    }
    return out;
}

SliceBurnsideElement operator*(const Rational& c, const SliceBurnsideElement& a) {
    SliceBurnsideElement out{a.ctx, {}};
    if (c.is_zero()) return out;
    for (const auto& [k, v] : a.coeff) out.coeff[k] = c * v;
    return out;
}

bool operator==(const SliceBurnsideElement& a, const SliceBurnsideElement& b) {
    return a.ctx.get() == b.ctx.get() && a.coeff == b.coeff;
}

int slice_normalizer_idx(GroupCtx& ctx, int t_idx, int s_idx) {
    const SubgroupLattice& lat = ctx.lattice();
    Bitset both = lat.subs[lat.normalizer_idx[t_idx]] & lat.subs[lat.normalizer_idx[s_idx]];
    int i = lat.index_of(both);
    if (i < 0) throw Error("slice: pair normalizer missing");
    return i;
}

SliceBurnsideElement xi_idempotent(CtxPtr ctx, int t_idx, int s_idx) {
    const SubgroupLattice& lat = ctx->lattice();
    const SliceClasses& sc = ctx->slice_classes();
    if (!lat.leq(s_idx, t_idx)) throw Error("slice: pair is not nested");

    Rational norm(lat.order_of(slice_normalizer_idx(*ctx, t_idx, s_idx)));
    const RootedCtx& rs = ctx->rooted(s_idx);
    const RootedCtx& rt = ctx->rooted(t_idx);
    const MobiusTable& mob_s = rs.ctx->mobius();
    const MobiusTable& mob_t = rt.ctx->mobius();
    int s_top = rs.ctx->lattice().top();
    int t_top = rt.ctx->lattice().top();

    SliceBurnsideElement e{ctx, {}};
    lat.down[s_idx].for_each([&](int u) {
        long long mu_us = mob_s.mu(rooted_index(rs, lat, u), s_top);
        if (mu_us == 0) return;
        Bitset mids = lat.up[s_idx] & lat.down[t_idx];
        mids.for_each([&](int v) {
            long long mu_vt = mob_t.mu(rooted_index(rt, lat, v), t_top);
            if (mu_vt == 0) return;
            Rational term = Rational(lat.order_of(u) * mu_us * mu_vt) / norm;
            int cls = sc.class_of.at({v, u});
            Rational& slot = e.coeff[cls];
            slot += term;
            if (slot.is_zero()) e.coeff.erase(cls);
        });
    });
    return e;
}

SliceBurnsideElement deflate_slice(const SliceBurnsideElement& a, int n_idx) {
    GroupCtx& ctx = *a.ctx;
    const SubgroupLattice& lat = ctx.lattice();
    const SliceClasses& sc = ctx.slice_classes();
    const QuotientCtx& qc = ctx.quotient_by(n_idx);
    const SubgroupLattice& qlat = qc.ctx->lattice();
    const SliceClasses& qsc = qc.ctx->slice_classes();

    auto project = [&](int sub_idx) {
        Bitset img(qc.proj.target->order);
        lat.subs[sub_idx].for_each([&](int x) { img.set(qc.proj.images[x]); });
        int i = qlat.index_of(img);
        if (i < 0) throw Error("deflation: image subgroup missing from quotient lattice");
        return i;
    };

    SliceBurnsideElement out{qc.ctx, {}};
    for (const auto& [cls, c] : a.coeff) {
        auto [t, s] = sc.reps[cls];
        int qcls = qsc.class_of.at({project(t), project(s)});
        Rational& slot = out.coeff[qcls];
        slot += c;
        if (slot.is_zero()) out.coeff.erase(qcls);
    }
    return out;
}

long long m_circ(GroupCtx& ctx, int s_idx, int n_idx) {
    auto key = std::make_pair(s_idx, n_idx);
    auto it = ctx.memo_mcirc.find(key);
    if (it != ctx.memo_mcirc.end()) return it->second;

    const SubgroupLattice& lat = ctx.lattice();
    const MobiusTable& mob = ctx.mobius();
    if (!lat.is_normal_idx(n_idx)) throw Error("m circ: subgroup is not normal");

    int top = lat.top();
    long long sum = 0;
    lat.up[s_idx].for_each([&](int x) {
        if (product_is(lat, x, n_idx, top)) sum += mob.mu(x, top);
    });
    ctx.memo_mcirc.emplace(key, sum);
    return sum;
}

Rational m_slice_direct(GroupCtx& ctx, int s_idx, int n_idx) {
    const SubgroupLattice& lat = ctx.lattice();
    const MobiusTable& mob = ctx.mobius();
    if (!lat.is_normal_idx(n_idx)) throw Error("m slice: subgroup is not normal");

    int top = lat.top();
    int sn = product_idx(lat, s_idx, n_idx);
    Rational prefactor =
        Rational(lat.order_of(lat.normalizer_idx[sn]) / lat.order_of(sn)) /
        Rational(lat.order_of(lat.normalizer_idx[s_idx]));

    const RootedCtx& rs = ctx.rooted(s_idx);
    const MobiusTable& mob_s = rs.ctx->mobius();
    int s_top = rs.ctx->lattice().top();

    Rational sum(0);
    lat.down[s_idx].for_each([&](int u) {
        if (!product_is(lat, u, n_idx, sn)) return; // UN != SN
        long long mu_us = mob_s.mu(rooted_index(rs, lat, u), s_top);
        if (mu_us == 0) return;
        lat.up[s_idx].for_each([&](int v) {
            if (!product_is(lat, v, n_idx, top)) return; // VN != G
            long long mu_vg = mob.mu(v, top);
            if (mu_vg == 0) return;
            sum += Rational(lat.order_of(u) * mu_us * mu_vg);
        });
    });
    return prefactor * sum;
}

Rational m_slice_factored(GroupCtx& ctx, int s_idx, int n_idx) {
    const SubgroupLattice& lat = ctx.lattice();
    if (!lat.is_normal_idx(n_idx)) throw Error("m slice: subgroup is not normal");

    int sn = product_idx(lat, s_idx, n_idx);
    Rational ratio = Rational(lat.order_of(lat.normalizer_idx[sn]) / lat.order_of(sn)) /
                     Rational(lat.order_of(lat.normalizer_idx[s_idx]) / lat.order_of(s_idx));

    const RootedCtx& rs = ctx.rooted(s_idx);
    Bitset meet_bits = lat.subs[s_idx] & lat.subs[n_idx];
    Bitset local(int(rs.to_parent.size()));
    meet_bits.for_each([&](int x) { local.set(rs.from_parent[x]); });
    int local_idx = rs.ctx->lattice().index_of(local);
    if (local_idx < 0) throw Error("m slice: intersection missing in the rooted lattice");

    Rational inner = m_constant(*rs.ctx, local_idx);
    return ratio * inner * Rational(m_circ(ctx, s_idx, n_idx));
}

const Rational& m_slice(GroupCtx& ctx, int s_idx, int n_idx) {
    auto key = std::make_pair(s_idx, n_idx);
    auto it = ctx.memo_mslice.find(key);
    if (it != ctx.memo_mslice.end()) return it->second;

    Rational direct = m_slice_direct(ctx, s_idx, n_idx);
    Rational factored = m_slice_factored(ctx, s_idx, n_idx);
    if (!(direct == factored))
        throw std::logic_error("slice constant evaluators disagree: " + direct.str() +
                               " vs " + factored.str());
    return ctx.memo_mslice.emplace(key, std::move(direct)).first->second;
}

TSliceCert is_t_slice(GroupCtx& ctx, int s_idx) {
    const SubgroupLattice& lat = ctx.lattice();
    TSliceCert cert{true, -1, {}};
    for (int n : lat.normal_list()) {
        const Rational& v = m_slice(ctx, s_idx, n);
        cert.table.emplace_back(n, v);
        if (n != lat.bottom() && !v.is_zero() && cert.holds) {
            cert.holds = false;
            cert.witness = n;
        }
    }
    return cert;
}

TCircCert is_t_circ_slice(GroupCtx& ctx, int s_idx) {
    const SubgroupLattice& lat = ctx.lattice();
    TCircCert cert{true, -1, {}};
    for (int n : lat.normal_list()) {
        long long v = m_circ(ctx, s_idx, n);
        cert.table.emplace_back(n, v);
        if (n != lat.bottom() && v != 0 && cert.holds) {
            cert.holds = false;
            cert.witness = n;
        }
    }
    return cert;
}

RootedSlice rooted_slice(GroupCtx& ctx, int t_idx, int s_idx) {
    const SubgroupLattice& lat = ctx.lattice();
    if (!lat.leq(s_idx, t_idx)) throw Error("slice: pair is not nested");
    const RootedCtx& rt = ctx.rooted(t_idx);
    return RootedSlice{rt.ctx, rooted_index(rt, lat, s_idx)};
}

std::optional<GroupMap> slice_iso(GroupCtx& a, int sa_idx, GroupCtx& b, int sb_idx) {
    return subset_respecting_isomorphism(a.group(), a.lattice().subs[sa_idx], b.group(),
                                         b.lattice().subs[sb_idx]);
}

std::optional<SliceQuotientWitness> slice_quotient_witness(GroupCtx& a, int sa_idx, GroupCtx& b,
                                                           int sb_idx) {
    const SubgroupLattice& lat = a.lattice();
    for (int m : lat.normal_list()) {
        const QuotientCtx& qc = a.quotient_by(m);
        const SubgroupLattice& qlat = qc.ctx->lattice();
        Bitset img(qc.proj.target->order);
        lat.subs[sa_idx].for_each([&](int x) { img.set(qc.proj.images[x]); });
        int qs = qlat.index_of(img);
        if (qs < 0) throw Error("slice: image subgroup missing from quotient lattice");
        if (auto iso = slice_iso(*qc.ctx, qs, b, sb_idx))
            return SliceQuotientWitness{m, std::move(*iso)};
    }
    return std::nullopt;
}

TauResult tau_circ(CtxPtr ctx, int s_idx) {
    const SubgroupLattice& lat = ctx->lattice();
    std::vector<int> nonzero;
    for (int n : lat.normal_list())
        if (m_circ(*ctx, s_idx, n) != 0) nonzero.push_back(n);
    // the trivial subgroup always qualifies: m^o_{G,S,1} = 1
    if (nonzero.empty()) throw std::logic_error("tau: no normal subgroup with m^o != 0");

    std::vector<int> maximal;
    for (int n : nonzero) {
        bool dominated = false;
        for (int m : nonzero)
            if (m != n && lat.leq(n, m)) dominated = true;
        if (!dominated) maximal.push_back(n);
    }

    int chosen = maximal.front();
    const QuotientCtx& qc = ctx->quotient_by(chosen);
    const SubgroupLattice& qlat = qc.ctx->lattice();
    Bitset img(qc.proj.target->order);
    lat.subs[s_idx].for_each([&](int x) { img.set(qc.proj.images[x]); });
    int qs = qlat.index_of(img);
    if (qs < 0) throw Error("tau: image subgroup missing from quotient lattice");

    TauResult res{qc.ctx, qs, chosen, maximal, qc.proj};

    if (!is_t_circ_slice(*res.quotient, qs).holds)
        throw std::logic_error("tau: result is not a T-circ slice");
    for (int n : maximal) {
        if (n == chosen) continue;
        const QuotientCtx& oc = ctx->quotient_by(n);
        Bitset oimg(oc.proj.target->order);
        lat.subs[s_idx].for_each([&](int x) { oimg.set(oc.proj.images[x]); });
        int os = oc.ctx->lattice().index_of(oimg);
        if (os < 0 || !slice_iso(*res.quotient, qs, *oc.ctx, os))
            throw std::logic_error("tau: maximal choices give non-isomorphic slices");
    }
    return res;
}

} // namespace tslice
