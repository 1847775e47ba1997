#include "tslice/burnside.hpp"

#include <stdexcept>

namespace tslice {

BurnsideElement burnside_zero(CtxPtr ctx) { return BurnsideElement{std::move(ctx), {}}; }

BurnsideElement burnside_basis(CtxPtr ctx, int k_idx) {
    int rep = ctx->lattice().class_rep[k_idx];
    BurnsideElement e{std::move(ctx), {}};
    e.coeff[rep] = Rational(1);
    return e;
}

BurnsideElement operator+(const BurnsideElement& a, const BurnsideElement& b) {
    if (a.ctx.get() != b.ctx.get()) throw Error("burnside: adding elements of different rings");
    BurnsideElement out{a.ctx, a.coeff};
    for (const auto& [k, c] : b.coeff) {
        Rational& slot = out.coeff[k];
        slot += c;
        if (slot.is_zero()) out.coeff.erase(k);
    }
    return out;
}

BurnsideElement operator*(const Rational& c, const BurnsideElement& a) {
    BurnsideElement out{a.ctx, {}};
    if (c.is_zero()) return out;
    for (const auto& [k, v] : a.coeff) out.coeff[k] = c * v;
    return out;
}

bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
    return a.ctx.get() == b.ctx.get() && a.coeff == b.coeff;
}

BurnsideElement idempotent_e(CtxPtr ctx, int h_idx) {
    const SubgroupLattice& lat = ctx->lattice();
    const MobiusTable& mob = ctx->mobius();
    Rational norm(lat.order_of(lat.normalizer_idx[h_idx]));

    BurnsideElement e{ctx, {}};
    lat.down[h_idx].for_each([&](int k) {
        long long mu = mob.mu(k, h_idx);
        if (mu == 0) return;
        Rational term = Rational(lat.order_of(k) * mu) / norm;
        int rep = lat.class_rep[k];
        Rational& slot = e.coeff[rep];
        slot += term;
        if (slot.is_zero()) e.coeff.erase(rep);
    });
    return e;
}

BurnsideElement deflate_burnside(const BurnsideElement& a, int n_idx) {
    GroupCtx& ctx = *a.ctx;
    const SubgroupLattice& lat = ctx.lattice();
    const QuotientCtx& qc = ctx.quotient_by(n_idx);
    const SubgroupLattice& qlat = qc.ctx->lattice();

    BurnsideElement out{qc.ctx, {}};
    for (const auto& [k, c] : a.coeff) {
        Bitset img(qc.proj.target->order);
        lat.subs[k].for_each([&](int x) { img.set(qc.proj.images[x]); });
        int qk = qlat.index_of(img);
        if (qk < 0) throw Error("deflation: image subgroup missing from quotient lattice");
        int rep = qlat.class_rep[qk];
        Rational& slot = out.coeff[rep];
        slot += c;
        if (slot.is_zero()) out.coeff.erase(rep);
    }
    return out;
}

const Rational& m_constant(GroupCtx& ctx, int n_idx) {
    auto it = ctx.memo_m.find(n_idx);
    if (it != ctx.memo_m.end()) return it->second;

    const SubgroupLattice& lat = ctx.lattice();
    const MobiusTable& mob = ctx.mobius();
    if (!lat.is_normal_idx(n_idx)) throw Error("m constant: subgroup is not normal");

    int g_order = ctx.group()->order;
    int n_order = lat.order_of(n_idx);
    const Bitset& n_set = lat.subs[n_idx];

    Rational sum(0);
    int top = lat.top();
    for (int x = 0; x < lat.size(); ++x) {
        int x_order = lat.order_of(x);
        if ((long long)x_order * n_order !=
            (long long)g_order * (lat.subs[x] & n_set).count())
            continue; // XN != G
        long long mu = mob.mu(x, top);
        if (mu != 0) sum += Rational(x_order * mu);
    }
    Rational m = sum / Rational(g_order);
    return ctx.memo_m.emplace(n_idx, std::move(m)).first->second;
}

BGroupCert is_b_group(GroupCtx& ctx) {
    const SubgroupLattice& lat = ctx.lattice();
    for (int n : lat.normal_list()) {
        if (n == lat.bottom()) continue;
        if (!m_constant(ctx, n).is_zero()) return BGroupCert{false, n};
    }
    return BGroupCert{true, -1};
}

BetaResult beta(CtxPtr ctx) {
    const SubgroupLattice& lat = ctx->lattice();
    std::vector<int> nonzero;
    for (int n : lat.normal_list())
        if (!m_constant(*ctx, n).is_zero()) nonzero.push_back(n);
    // the trivial subgroup always qualifies: m_{G,1} = 1
    if (nonzero.empty()) throw std::logic_error("beta: no normal subgroup with m != 0");

    std::vector<int> maximal;
    for (int n : nonzero) {
        bool dominated = false;
        for (int m : nonzero)
            if (m != n && lat.leq(n, m)) dominated = true;
        if (!dominated) maximal.push_back(n);
    }

    int chosen = maximal.front();
    BetaResult res{ctx->quotient_by(chosen).ctx, chosen, maximal};

    for (int n : maximal)
        if (n != chosen &&
            !are_isomorphic(res.quotient->group(), ctx->quotient_by(n).ctx->group()))
            throw std::logic_error("beta: maximal choices give non-isomorphic quotients");
    if (!is_b_group(*res.quotient).is_b_group)
        throw std::logic_error("beta: result is not a B-group");
    return res;
}

} // namespace tslice
