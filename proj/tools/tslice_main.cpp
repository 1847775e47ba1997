#include "tslice/cache.hpp"
#include "tslice/expr.hpp"
#include "tslice/render.hpp"
#include "tslice/verify.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tslice;

namespace {

struct CliState {
    std::string format = "text";
    int cap = 64;
    std::string cache_dir;
    bool no_cache = false;

    bool cache_on() const { return !no_cache && !cache_dir.empty(); }
    BuildConfig cfg() const { return BuildConfig{cap}; }
};

CtxPtr load_ctx(const CliState& st, const std::string& expr_text) {
    ExprPtr e = parse_group_expr(expr_text);
    CtxPtr ctx = GroupCtx::make(build_group(*e, st.cfg()));
    if (st.cache_on() && !load_lattice_cache(*ctx, st.cache_dir)) {
        ctx->mobius(); // builds the lattice too
        store_lattice_cache(*ctx, st.cache_dir);
    }
    return ctx;
}

// display rule: the whole group keeps its label, everything else is "#k"
std::string sub_label(GroupCtx& ctx, int i) {
    const SubgroupLattice& lat = ctx.lattice();
    if (i == lat.top()) return ctx.group()->label;
    return "#" + std::to_string(i + 1);
}

int parse_subgroup_addr(GroupCtx& ctx, const std::string& addr) {
    const SubgroupLattice& lat = ctx.lattice();
    std::string t = addr;
    while (!t.empty() && std::isspace((unsigned char)t.front())) t.erase(t.begin());
    while (!t.empty() && std::isspace((unsigned char)t.back())) t.pop_back();
    if (t.empty()) throw ParseError("empty subgroup address", 0);
    if (t[0] == '#') {
        std::size_t used = 0;
        long k = std::stol(t.substr(1), &used);
        if (used + 1 != t.size() || k < 1 || k > lat.size())
            throw ParseError("no subgroup " + t, 0);
        return int(k - 1);
    }
    std::vector<int> elems;
    std::istringstream in(t);
    long long v;
    while (in >> v) {
        if (v < 0 || v >= ctx.group()->order)
            throw ParseError("element index out of range in '" + addr + "'", 0);
        elems.push_back(int(v));
    }
    if (!in.eof()) throw ParseError("bad subgroup address '" + addr + "'", 0);
    int idx = lat.index_of(subgroup_from_elements(ctx.group(), elems).members);
    if (idx < 0) throw Error("generated subgroup missing from lattice");
    return idx;
}

std::pair<int, int> parse_slice_addr(GroupCtx& ctx, const std::string& addr) {
    std::size_t comma = addr.find(',');
    if (comma == std::string::npos)
        throw ParseError("slice address needs \"T,S\"", 0);
    int t = parse_subgroup_addr(ctx, addr.substr(0, comma));
    int s = parse_subgroup_addr(ctx, addr.substr(comma + 1));
    if (!ctx.lattice().leq(s, t)) throw ParseError("slice address: S is not inside T", 0);
    return {t, s};
}

void emit(const CliState& st, const Doc& doc) {
    std::cout << render(doc, parse_format(st.format));
}

// ---- subcommand bodies ----

void cmd_info(const CliState& st, const std::string& expr) {
    CtxPtr ctx = load_ctx(st, expr);
    const FiniteGroup& g = *ctx->group();
    Doc doc{g.label, "info", {}};

    Section sum{"summary", {"order", "name", "abelian", "center order", "normal subgroups"}, {}};
    sum.rows.push_back({Cell{(long long)g.order}, Cell{ctx->display_name()},
                        Cell{std::string(g.is_abelian() ? "yes" : "no")},
                        Cell{(long long)g.center().count()},
                        Cell{(long long)ctx->lattice().normal_mask.count()}});
    doc.sections.push_back(std::move(sum));

    Section orders{"element orders", {"order", "count"}, {}};
    for (auto [ord, cnt] : g.element_order_spectrum())
        orders.rows.push_back({Cell{(long long)ord}, Cell{(long long)cnt}});
    doc.sections.push_back(std::move(orders));
    emit(st, doc);
}

void cmd_subgroups(const CliState& st, const std::string& expr) {
    CtxPtr ctx = load_ctx(st, expr);
    const SubgroupLattice& lat = ctx->lattice();
    Doc doc{ctx->group()->label, "subgroups", {}};

    Section sec{"subgroups",
                {"index", "order", "generators", "normal", "class", "normalizer"},
                {}};
    for (int i = 0; i < lat.size(); ++i) {
        std::vector<int> gens = small_generating_set(*ctx->group(), lat.subs[i]);
        std::string gtext;
        for (std::size_t k = 0; k < gens.size(); ++k)
            gtext += (k ? " " : "") + std::to_string(gens[k]);
        if (gtext.empty()) gtext = "-";
        sec.rows.push_back({Cell{"#" + std::to_string(i + 1)}, Cell{(long long)lat.order_of(i)},
                            Cell{gtext},
                            Cell{std::string(lat.is_normal_idx(i) ? "yes" : "no")},
                            Cell{"#" + std::to_string(lat.class_rep[i] + 1)},
                            Cell{sub_label(*ctx, lat.normalizer_idx[i])}});
    }
    doc.sections.push_back(std::move(sec));
    emit(st, doc);
}

void cmd_mobius(const CliState& st, const std::string& expr, const std::string& x_addr,
                const std::string& y_addr) {
    CtxPtr ctx = load_ctx(st, expr);
    const SubgroupLattice& lat = ctx->lattice();
    const MobiusTable& mob = ctx->mobius();
    Doc doc{ctx->group()->label, "mobius", {}};

    if (!x_addr.empty()) {
        int x = parse_subgroup_addr(*ctx, x_addr);
        int y = y_addr.empty() ? lat.top() : parse_subgroup_addr(*ctx, y_addr);
        Section sec{"mu", {"X", "Y", "mu(X,Y)"}, {}};
        sec.rows.push_back(
            {Cell{sub_label(*ctx, x)}, Cell{sub_label(*ctx, y)}, Cell{mob.mu(x, y)}});
        doc.sections.push_back(std::move(sec));
    } else {
        if (!y_addr.empty()) throw ParseError("--y needs --x", 0);
        Section sec{"mu", {"X", "mu(X,G)"}, {}};
        for (int x = 0; x < lat.size(); ++x)
            sec.rows.push_back({Cell{sub_label(*ctx, x)}, Cell{mob.mu(x, lat.top())}});
        doc.sections.push_back(std::move(sec));
    }
    emit(st, doc);
}

void cmd_burnside(const CliState& st, const std::string& expr, bool m_table, bool beta_flag) {
    CtxPtr ctx = load_ctx(st, expr);
    const SubgroupLattice& lat = ctx->lattice();
    Doc doc{ctx->group()->label, "burnside", {}};

    Section idem{"idempotents", {"H", "basis", "coeff"}, {}};
    for (int h = 0; h < lat.size(); ++h) {
        if (lat.class_rep[h] != h) continue;
        BurnsideElement e = idempotent_e(ctx, h);
        for (const auto& [k, c] : e.coeff)
            idem.rows.push_back({Cell{sub_label(*ctx, h)},
                                 Cell{"[G/" + sub_label(*ctx, k) + "]"}, Cell{c}});
    }
    doc.sections.push_back(std::move(idem));

    if (m_table) {
        Section sec{"m-table", {"N", "m"}, {}};
        for (int n : lat.normal_list())
            sec.rows.push_back({Cell{sub_label(*ctx, n)}, Cell{m_constant(*ctx, n)}});
        doc.sections.push_back(std::move(sec));
    }

    if (beta_flag) {
        BetaResult res = beta(ctx);
        std::string choices;
        for (std::size_t i = 0; i < res.maximal_choices.size(); ++i)
            choices += (i ? " " : "") + sub_label(*ctx, res.maximal_choices[i]);
        Section sec{"beta", {"beta", "N", "choices"}, {}};
        sec.rows.push_back(
            {Cell{res.quotient->display_name()}, Cell{sub_label(*ctx, res.n_idx)},
             Cell{choices}});
        doc.sections.push_back(std::move(sec));
    }
    emit(st, doc);
}

void cmd_slices(const CliState& st, const std::string& expr, const std::string& xi_addr,
                const std::string& mt_addr, const std::string& ts_addr,
                const std::string& t0_addr) {
    CtxPtr ctx = load_ctx(st, expr);
    const SubgroupLattice& lat = ctx->lattice();
    const SliceClasses& sc = ctx->slice_classes();
    Doc doc{ctx->group()->label, "slices", {}};

    Section census{"slice classes", {"class", "T", "S", "|T|", "|S|", "orbit"}, {}};
    for (std::size_t c = 0; c < sc.reps.size(); ++c) {
        auto [t, s] = sc.reps[c];
        census.rows.push_back({Cell{(long long)(c + 1)}, Cell{sub_label(*ctx, t)},
                               Cell{sub_label(*ctx, s)}, Cell{(long long)lat.order_of(t)},
                               Cell{(long long)lat.order_of(s)},
                               Cell{(long long)sc.class_size[c]}});
    }
    doc.sections.push_back(std::move(census));

    if (!xi_addr.empty()) {
        auto [t, s] = parse_slice_addr(*ctx, xi_addr);
        SliceBurnsideElement xi = xi_idempotent(ctx, t, s);
        Section sec{"xi", {"T", "S", "coeff"}, {}};
        for (const auto& [cls, c] : xi.coeff) {
            auto [vt, vs] = sc.reps[cls];
            sec.rows.push_back({Cell{sub_label(*ctx, vt)}, Cell{sub_label(*ctx, vs)}, Cell{c}});
        }
        doc.sections.push_back(std::move(sec));
    }

    if (!mt_addr.empty()) {
        int s = parse_subgroup_addr(*ctx, mt_addr);
        Section sec{"m-table", {"N", "m", "m0"}, {}};
        for (int n : lat.normal_list())
            sec.rows.push_back(
                {Cell{sub_label(*ctx, n)}, Cell{m_slice(*ctx, s, n)}, Cell{m_circ(*ctx, s, n)}});
        doc.sections.push_back(std::move(sec));
    }

    auto predicate_sections = [&](const std::string& addr, bool circ) {
        int s = parse_subgroup_addr(*ctx, addr);
        if (circ) {
            TCircCert cert = is_t_circ_slice(*ctx, s);
            Section ev{"t0slice evidence", {"N", "m0"}, {}};
            for (auto [n, v] : cert.table)
                ev.rows.push_back({Cell{sub_label(*ctx, n)}, Cell{v}});
            doc.sections.push_back(std::move(ev));
            Section verdict{"t0slice verdict", {"S", "t0slice", "witness"}, {}};
            verdict.rows.push_back(
                {Cell{sub_label(*ctx, s)}, Cell{std::string(cert.holds ? "yes" : "no")},
                 Cell{cert.witness < 0 ? std::string("-") : sub_label(*ctx, cert.witness)}});
            doc.sections.push_back(std::move(verdict));
        } else {
            TSliceCert cert = is_t_slice(*ctx, s);
            Section ev{"tslice evidence", {"N", "m"}, {}};
            for (const auto& [n, v] : cert.table)
                ev.rows.push_back({Cell{sub_label(*ctx, n)}, Cell{v}});
            doc.sections.push_back(std::move(ev));
            Section verdict{"tslice verdict", {"S", "tslice", "witness"}, {}};
            verdict.rows.push_back(
                {Cell{sub_label(*ctx, s)}, Cell{std::string(cert.holds ? "yes" : "no")},
                 Cell{cert.witness < 0 ? std::string("-") : sub_label(*ctx, cert.witness)}});
            doc.sections.push_back(std::move(verdict));
        }
    };
    if (!ts_addr.empty()) predicate_sections(ts_addr, false);
    if (!t0_addr.empty()) predicate_sections(t0_addr, true);
    emit(st, doc);
}

void cmd_tau0(const CliState& st, const std::string& expr, const std::string& s_addr) {
    CtxPtr ctx = load_ctx(st, expr);
    const SubgroupLattice& lat = ctx->lattice();
    int s = parse_subgroup_addr(*ctx, s_addr);
    TauResult tau = tau_circ(ctx, s);
    Doc doc{ctx->group()->label, "tau0", {}};

    std::string choices;
    for (std::size_t i = 0; i < tau.maximal_choices.size(); ++i)
        choices += (i ? " " : "") + sub_label(*ctx, tau.maximal_choices[i]);
    Section sec{"tau0", {"S", "T'", "S'", "M", "choices"}, {}};
    sec.rows.push_back({Cell{sub_label(*ctx, s)}, Cell{tau.quotient->display_name()},
                        Cell{sub_label(*tau.quotient, tau.quotient_s)},
                        Cell{sub_label(*ctx, tau.m_idx)}, Cell{choices}});
    doc.sections.push_back(std::move(sec));

    Section proj{"projection", {"g", "image"}, {}};
    for (int gx = 0; gx < lat.group->order; ++gx)
        proj.rows.push_back(
            {Cell{(long long)gx}, Cell{(long long)tau.proj.images[gx]}});
    doc.sections.push_back(std::move(proj));
    emit(st, doc);
}

int cmd_verify(const CliState& st, const std::string& catalog_file,
               const std::string& check_name) {
    std::vector<std::string> catalog;
    std::string label = "default-catalog";
    if (catalog_file.empty()) {
        catalog = default_catalog();
    } else {
        std::ifstream in(catalog_file);
        if (!in) throw Error("cannot open catalog file " + catalog_file);
        std::string line;
        while (std::getline(in, line)) {
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            while (!line.empty() && std::isspace((unsigned char)line.back())) line.pop_back();
            std::size_t first = 0;
            while (first < line.size() && std::isspace((unsigned char)line[first])) ++first;
            line.erase(0, first);
            if (!line.empty()) catalog.push_back(line);
        }
        label = catalog_file;
    }

    std::vector<CheckReport> reports = run_all(catalog, st.cfg(), check_name);
    Doc doc{label, "verify", {}};

    Section sec{"report", {"check", "subject", "instances", "failures", "status"}, {}};
    long long failures = 0;
    for (const CheckReport& r : reports) {
        failures += (long long)r.failures.size();
        std::string status = r.failures.empty() ? "pass" : "FAIL";
        if (!r.notes.empty() && r.instances == 0) status = "skip";
        sec.rows.push_back({Cell{r.check}, Cell{r.subject}, Cell{r.instances},
                            Cell{(long long)r.failures.size()}, Cell{status}});
    }
    doc.sections.push_back(std::move(sec));

    Section det{"failures", {"check", "subject", "detail"}, {}};
    for (const CheckReport& r : reports)
        for (const std::string& f : r.failures)
            det.rows.push_back({Cell{r.check}, Cell{r.subject}, Cell{f}});
    if (!det.rows.empty()) doc.sections.push_back(std::move(det));

    Section notes{"notes", {"check", "subject", "note"}, {}};
    for (const CheckReport& r : reports)
        for (const std::string& n : r.notes)
            notes.rows.push_back({Cell{r.check}, Cell{r.subject}, Cell{n}});
    if (!notes.rows.empty()) doc.sections.push_back(std::move(notes));

    emit(st, doc);
    return failures == 0 ? 0 : 1;
}

int cmd_remark22(const CliState& st) {
    CheckReport rep = check_remark22(st.cfg());
    Doc doc{"C2 x D8", "remark22", {}};

    Section sec{"assertions", {"assertion"}, {}};
    for (const std::string& n : rep.notes) sec.rows.push_back({Cell{n}});
    doc.sections.push_back(std::move(sec));

    Section verdict{"verdict", {"status", "assertions", "failures"}, {}};
    verdict.rows.push_back({Cell{std::string(rep.passed() && rep.instances > 0 ? "PASS"
                                                                               : "FAIL")},
                            Cell{rep.instances}, Cell{(long long)rep.failures.size()}});
    doc.sections.push_back(std::move(verdict));

    emit(st, doc);
    return rep.passed() && rep.instances > 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Burnside / slice-Burnside toolkit for small finite groups"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    CliState st;
    if (const char* env = std::getenv("TSLICE_CACHE_DIR")) st.cache_dir = env;
    app.add_option("--format", st.format, "output format: text, json or csv")
        ->default_val("text");
    app.add_option("--cap", st.cap, "largest allowed group order")->default_val(64);
    app.add_option("--cache-dir", st.cache_dir, "lattice cache directory");
    app.add_flag("--no-cache", st.no_cache, "bypass the lattice cache");

    std::string expr, x_addr, y_addr, xi_addr, mt_addr, ts_addr, t0_addr, s_addr;
    std::string catalog_file, check_name;
    bool m_table = false, beta_flag = false;

    CLI::App* info = app.add_subcommand("info", "order, spectrum, center, normal count");
    info->add_option("expr", expr, "group expression")->required();

    CLI::App* subgroups = app.add_subcommand("subgroups", "subgroup lattice listing");
    subgroups->add_option("expr", expr, "group expression")->required();

    CLI::App* mobius = app.add_subcommand("mobius", "Moebius function of the lattice");
    mobius->add_option("expr", expr, "group expression")->required();
    mobius->add_option("--x", x_addr, "subgroup X (\"#k\" or element list)");
    mobius->add_option("--y", y_addr, "subgroup Y (defaults to G)");

    CLI::App* burnside = app.add_subcommand("burnside", "idempotents e_H and constants m_{G,N}");
    burnside->add_option("expr", expr, "group expression")->required();
    burnside->add_flag("--m-table", m_table, "add the (N, m_{G,N}) table");
    burnside->add_flag("--beta", beta_flag, "add the largest B-group quotient");

    CLI::App* slices = app.add_subcommand("slices", "slice classes, xi, slice constants");
    slices->add_option("expr", expr, "group expression")->required();
    slices->add_option("--xi", xi_addr, "slice \"T,S\" for xi coefficients");
    slices->add_option("--m-table", mt_addr, "subgroup S for the (N, m, m0) table");
    slices->add_option("--tslice", ts_addr, "subgroup S for the T-slice predicate");
    slices->add_option("--t0slice", t0_addr, "subgroup S for the T0-slice predicate");

    CLI::App* tau0 = app.add_subcommand("tau0", "largest quotient T0-slice");
    tau0->add_option("expr", expr, "group expression")->required();
    tau0->add_option("--slice", s_addr, "subgroup S")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the identity checks");
    verify->add_option("--catalog", catalog_file, "file with one group expression per line");
    verify->add_option("--check", check_name, "run a single named check");

    CLI::App* remark22 = app.add_subcommand("remark22", "scripted C2 x D8 counterexample");

    try {
        app.parse(argc, argv);

        if (info->parsed()) cmd_info(st, expr);
        else if (subgroups->parsed()) cmd_subgroups(st, expr);
        else if (mobius->parsed()) cmd_mobius(st, expr, x_addr, y_addr);
        else if (burnside->parsed()) cmd_burnside(st, expr, m_table, beta_flag);
        else if (slices->parsed()) cmd_slices(st, expr, xi_addr, mt_addr, ts_addr, t0_addr);
        else if (tau0->parsed()) cmd_tau0(st, expr, s_addr);
        else if (verify->parsed()) return cmd_verify(st, catalog_file, check_name);
        else if (remark22->parsed()) return cmd_remark22(st);
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
