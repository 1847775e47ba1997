#include "tslice/verify.hpp"

#include "tslice/expr.hpp"

#include <algorithm>
#include <sstream>

namespace tslice {

namespace {

std::string sub_ref(int i) { return "#" + std::to_string(i + 1); }

// image of a subgroup under a quotient projection, as a quotient lattice index
int project_sub(const SubgroupLattice& lat, const QuotientCtx& qc, const SubgroupLattice& qlat,
                int sub_idx) {
    Bitset img(qc.proj.target->order);
    lat.subs[sub_idx].for_each([&](int x) { img.set(qc.proj.images[x]); });
    int i = qlat.index_of(img);
    if (i < 0) throw Error("verify: image subgroup missing from quotient lattice");
    return i;
}

bool product_is_full(const SubgroupLattice& lat, int a, int b) {
    return (long long)lat.order_of(a) * lat.order_of(b) ==
           (long long)lat.order_of(lat.top()) * (lat.subs[a] & lat.subs[b]).count();
}

CheckReport crapo_impl(GroupCtx& ctx, const MobiusFn& mu) {
    const SubgroupLattice& lat = ctx.lattice();
    CheckReport rep{"crapo", ctx.group()->label, 0, {}, {}};
    int top = lat.top();
    for (int m : lat.normal_list()) {
        const Bitset& mset = lat.subs[m];
        for (int x = 0; x < lat.size(); ++x) {
            ++rep.instances;
            long long lhs = mu(x, top);
            long long rhs = 0;
            Bitset xm = lat.subs[x] & mset;
            lat.up[x].for_each([&](int y) {
                if (!product_is_full(lat, y, m)) return;
                if (!((lat.subs[y] & mset) == xm)) return;
                rhs += mu(x, y) * mu(y, top);
            });
            if (lhs != rhs) {
                std::ostringstream os;
                os << "G=\"" << ctx.group()->label << "\" M=" << sub_ref(m)
                   << " X=" << sub_ref(x) << " lhs=" << lhs << " rhs=" << rhs;
                rep.failures.push_back(os.str());
            }
        }
    }
    return rep;
}

} // namespace

CheckReport check_crapo(GroupCtx& ctx) {
    const MobiusTable& mob = ctx.mobius();
    return crapo_impl(ctx, [&mob](int x, int y) { return mob.mu(x, y); });
}

CheckReport check_crapo_with_mu(GroupCtx& ctx, const MobiusFn& mu) {
    return crapo_impl(ctx, mu);
}

CheckReport check_mcirc_expansion(GroupCtx& ctx) {
    const SubgroupLattice& lat = ctx.lattice();
    const MobiusTable& mob = ctx.mobius();
    CheckReport rep{"mcirc-expansion", ctx.group()->label, 0, {}, {}};
    int top = lat.top();
    std::vector<int> normals = lat.normal_list();

    for (int s = 0; s < lat.size(); ++s)
        for (int m : normals) {
            const QuotientCtx& qc = ctx.quotient_by(m);
            const SubgroupLattice& qlat = qc.ctx->lattice();
            int qs = project_sub(lat, qc, qlat, s);
            for (int n : normals) {
                ++rep.instances;
                long long lhs = m_circ(ctx, s, n);
                long long rhs = 0;
                bool bad_normal = false;
                lat.up[s].for_each([&](int y) {
                    if (!product_is_full(lat, y, n) || !product_is_full(lat, y, m)) return;
                    long long mu_yg = mob.mu(y, top);
                    if (mu_yg == 0) return;
                    Bitset yn = lat.subs[y] & lat.subs[n];
                    Bitset img(qc.proj.target->order);
                    yn.for_each([&](int e) { img.set(qc.proj.images[e]); });
                    int qn = qlat.index_of(img);
                    if (qn < 0 || !qlat.is_normal_idx(qn)) {
                        bad_normal = true;
                        return;
                    }
                    rhs += mu_yg * m_circ(*qc.ctx, qs, qn);
                });
                if (bad_normal || lhs != rhs) {
                    std::ostringstream os;
                    os << "G=\"" << ctx.group()->label << "\" S=" << sub_ref(s)
                       << " M=" << sub_ref(m) << " N=" << sub_ref(n);
                    if (bad_normal) os << " (Y^N)M/M not normal";
                    else os << " lhs=" << lhs << " rhs=" << rhs;
                    rep.failures.push_back(os.str());
                }
            }
        }
    return rep;
}

CheckReport check_mcirc_factorization(GroupCtx& ctx) {
    const SubgroupLattice& lat = ctx.lattice();
    CheckReport rep{"mcirc-factorization", ctx.group()->label, 0, {}, {}};
    std::vector<int> normals = lat.normal_list();

    for (int s = 0; s < lat.size(); ++s)
        for (int m : normals) {
            const QuotientCtx& qc = ctx.quotient_by(m);
            const SubgroupLattice& qlat = qc.ctx->lattice();
            int qs = project_sub(lat, qc, qlat, s);
            for (int n : normals) {
                if (!lat.leq(m, n)) continue;
                ++rep.instances;
                long long lhs = m_circ(ctx, s, n);
                int qn = project_sub(lat, qc, qlat, n);
                long long rhs = m_circ(ctx, s, m) * m_circ(*qc.ctx, qs, qn);
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "G=\"" << ctx.group()->label << "\" S=" << sub_ref(s)
                       << " M=" << sub_ref(m) << " N=" << sub_ref(n) << " lhs=" << lhs
                       << " rhs=" << rhs;
                    rep.failures.push_back(os.str());
                }
            }
        }
    return rep;
}

CheckReport check_tau_universal(GroupCtx& ctx) {
    const SubgroupLattice& lat = ctx.lattice();
    CheckReport rep{"tau0-largest-quotient", ctx.group()->label, 0, {}, {}};

    for (int s = 0; s < lat.size(); ++s) {
        ++rep.instances;
        std::string fail;
        try {
            // tau_circ itself re-checks the T-circ property and the
            // uniqueness across maximal choices
            TauResult tau = tau_circ(ctx.shared_from_this(), s);
            if (!slice_quotient_witness(ctx, s, *tau.quotient, tau.quotient_s))
                fail = "result is not a quotient of (G,S)";
            else
                for (int m : lat.normal_list()) {
                    const QuotientCtx& qc = ctx.quotient_by(m);
                    const SubgroupLattice& qlat = qc.ctx->lattice();
                    int qs = project_sub(lat, qc, qlat, s);
                    if (!is_t_circ_slice(*qc.ctx, qs).holds) continue;
                    if (!slice_quotient_witness(*tau.quotient, tau.quotient_s, *qc.ctx, qs)) {
                        fail = "does not dominate quotient slice at M=" + sub_ref(m);
                        break;
                    }
                }
        } catch (const std::logic_error& e) {
            fail = e.what();
        }
        if (!fail.empty()) {
            std::ostringstream os;
            os << "G=\"" << ctx.group()->label << "\" S=" << sub_ref(s) << " " << fail;
            rep.failures.push_back(os.str());
        }
    }
    return rep;
}

CheckReport check_deflation_identities(GroupCtx& ctx) {
    const SubgroupLattice& lat = ctx.lattice();
    CheckReport rep{"deflation", ctx.group()->label, 0, {}, {}};
    CtxPtr self = ctx.shared_from_this();
    int top = lat.top();

    BurnsideElement e_top = idempotent_e(self, top);
    for (int n : lat.normal_list()) {
        ++rep.instances;
        const QuotientCtx& qc = ctx.quotient_by(n);
        BurnsideElement lhs = deflate_burnside(e_top, n);
        BurnsideElement rhs =
            m_constant(ctx, n) * idempotent_e(qc.ctx, qc.ctx->lattice().top());
        if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "G=\"" << ctx.group()->label << "\" N=" << sub_ref(n)
               << " Burnside deflation mismatch";
            rep.failures.push_back(os.str());
        }
    }

    for (int s = 0; s < lat.size(); ++s) {
        SliceBurnsideElement xi = xi_idempotent(self, top, s);
        for (int n : lat.normal_list()) {
            ++rep.instances;
            const QuotientCtx& qc = ctx.quotient_by(n);
            const SubgroupLattice& qlat = qc.ctx->lattice();
            int qs = project_sub(lat, qc, qlat, s);
            SliceBurnsideElement lhs = deflate_slice(xi, n);
            SliceBurnsideElement rhs =
                m_slice(ctx, s, n) * xi_idempotent(qc.ctx, qlat.top(), qs);
            if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "G=\"" << ctx.group()->label << "\" S=" << sub_ref(s)
                   << " N=" << sub_ref(n) << " slice deflation mismatch";
                rep.failures.push_back(os.str());
            }
        }
    }
    return rep;
}

CheckReport check_idempotent_sums(GroupCtx& ctx) {
    const SubgroupLattice& lat = ctx.lattice();
    const SliceClasses& sc = ctx.slice_classes();
    CheckReport rep{"idempotent-sums", ctx.group()->label, 0, {}, {}};
    CtxPtr self = ctx.shared_from_this();
    int top = lat.top();

    ++rep.instances;
    BurnsideElement bsum = burnside_zero(self);
    for (int h = 0; h < lat.size(); ++h)
        if (lat.class_rep[h] == h) bsum = bsum + idempotent_e(self, h);
    if (!(bsum == burnside_basis(self, top)))
        rep.failures.push_back("G=\"" + ctx.group()->label +
                               "\" sum of e_H is not [G/G]");

    ++rep.instances;
    SliceBurnsideElement ssum = slice_zero(self);
    for (const auto& [t, s] : sc.reps) ssum = ssum + xi_idempotent(self, t, s);
    if (!(ssum == slice_basis(self, top, top)))
        rep.failures.push_back("G=\"" + ctx.group()->label +
                               "\" sum of xi_{T,S} is not <G,G>");
    return rep;
}

CheckReport check_remark22(const BuildConfig& cfg) {
    CheckReport rep{"remark22", "C2 x D8", 0, {}, {}};
    auto assert_that = [&](bool ok, const std::string& what) {
        ++rep.instances;
        rep.notes.push_back(std::to_string(rep.instances) + ". " + what + " -- " +
                            (ok ? "ok" : "FAIL"));
        if (!ok) rep.failures.push_back(what);
    };

    CtxPtr ctx;
    try {
        ctx = GroupCtx::make(build_group(*parse_group_expr("C2 x D8"), cfg));
    } catch (const CapError& e) {
        rep.notes.push_back(std::string("skipped: ") + e.what());
        return rep;
    }
    const FiniteGroup& g = *ctx->group();
    const SubgroupLattice& lat = ctx->lattice();

    // generators: a spans the C2 factor; b (reflection) and c (rotation)
    // span D8; d = c^2 generates the center of D8
    int a = g.generators.at(0), b = g.generators.at(1), c = g.generators.at(2);
    int d = g.at(c, c);
    int ad = g.at(a, d);

    auto span = [&](std::vector<int> e) {
        return lat.index_of(subgroup_from_elements(ctx->group(), e).members);
    };
    int n_idx = span({ad});
    int m_idx = span({d});
    int s_idx = span({a, b});

    Bitset center = g.center();
    assert_that(lat.order_of(n_idx) == 2 && lat.order_of(m_idx) == 2 &&
                    center.contains(lat.subs[n_idx]) && center.contains(lat.subs[m_idx]),
                "N and M are central of order 2");

    const QuotientCtx& qn = ctx->quotient_by(n_idx);
    const QuotientCtx& qm = ctx->quotient_by(m_idx);
    assert_that(are_isomorphic(qn.ctx->group(), builtin_group("D 8", cfg)).has_value() &&
                    are_isomorphic(qm.ctx->group(), builtin_group("E 2^3", cfg)).has_value(),
                "G/N is D8 and G/M is C2 x C2 x C2");

    assert_that(are_isomorphic(as_group(Subgroup{ctx->group(), lat.subs[s_idx]}).group,
                               builtin_group("E 2^2", cfg))
                    .has_value(),
                "S is C2 x C2");

    const SubgroupLattice& nlat = qn.ctx->lattice();
    const SubgroupLattice& mlat = qm.ctx->lattice();
    int sn = project_sub(lat, qn, nlat, s_idx);
    int sm = project_sub(lat, qm, mlat, s_idx);
    assert_that(is_t_slice(*qn.ctx, sn).holds && is_t_slice(*qm.ctx, sm).holds,
                "(G/N, SN/N) and (G/M, SM/M) are T-slices");

    assert_that(!is_t_slice(*ctx, s_idx).holds, "(G,S) is not a T-slice");

    bool universal_found = false;
    for (int l : lat.normal_list()) {
        const QuotientCtx& ql = ctx->quotient_by(l);
        const SubgroupLattice& llat = ql.ctx->lattice();
        int sl = project_sub(lat, ql, llat, s_idx);
        if (!is_t_slice(*ql.ctx, sl).holds) continue;
        if (slice_quotient_witness(*ql.ctx, sl, *qn.ctx, sn) &&
            slice_quotient_witness(*ql.ctx, sl, *qm.ctx, sm)) {
            universal_found = true;
            break;
        }
    }
    assert_that(!universal_found,
                "no quotient slice of (G,S) is a T-slice dominating both quotient T-slices");
    return rep;
}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names{
        "crapo",     "mcirc-expansion", "mcirc-factorization", "tau0-largest-quotient",
        "deflation", "idempotent-sums", "remark22"};
    return names;
}

std::vector<std::string> default_catalog() {
    std::vector<std::string> cat;
    for (int i = 1; i <= 12; ++i) cat.push_back("C" + std::to_string(i));
    cat.push_back("C2 x C2");
    cat.push_back("C2 x C2 x C2");
    cat.push_back("D8");
    cat.push_back("D12");
    cat.push_back("Q8");
    cat.push_back("S3");
    cat.push_back("A4");
    cat.push_back("S4");
    cat.push_back("C2 x D8");
    return cat;
}

std::vector<CheckReport> run_all(const std::vector<std::string>& catalog,
                                 const BuildConfig& cfg, const std::string& check_filter) {
    if (!check_filter.empty()) {
        const auto& names = known_checks();
        if (std::find(names.begin(), names.end(), check_filter) == names.end())
            throw ParseError("unknown check '" + check_filter + "'", 0);
    }
    auto wanted = [&](const char* name) {
        return check_filter.empty() || check_filter == name;
    };

    std::vector<CheckReport> reports;
    for (const std::string& spec : catalog) {
        CtxPtr ctx;
        try {
            ctx = GroupCtx::make(build_group(*parse_group_expr(spec), cfg));
        } catch (const CapError& e) {
            CheckReport skip{"build", spec, 0, {}, {}};
            skip.notes.push_back(std::string("skipped: ") + e.what());
            reports.push_back(std::move(skip));
            continue;
        }
        if (wanted("crapo")) reports.push_back(check_crapo(*ctx));
        if (wanted("mcirc-expansion")) reports.push_back(check_mcirc_expansion(*ctx));
        if (wanted("mcirc-factorization")) reports.push_back(check_mcirc_factorization(*ctx));
        if (wanted("tau0-largest-quotient")) reports.push_back(check_tau_universal(*ctx));
        if (wanted("deflation")) reports.push_back(check_deflation_identities(*ctx));
        if (wanted("idempotent-sums")) reports.push_back(check_idempotent_sums(*ctx));
    }
    if (wanted("remark22")) reports.push_back(check_remark22(cfg));
    return reports;
}

} // namespace tslice
