// Acceptance gate: ten end-to-end criteria, one PASS/FAIL line each.
// argv[1] is the path to the CLI binary (used by the determinism sweep).

#include <tslice/cache.hpp>
#include <tslice/expr.hpp>
#include <tslice/verify.hpp>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace tslice;
namespace fs = std::filesystem;

namespace {

int failed = 0;

void criterion(int num, const char* label, const std::function<bool(std::string&)>& f) {
    std::string detail;
    bool ok = false;
    try {
        ok = f(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    if (ok) {
        std::printf("PASS %2d: %s\n", num, label);
    } else {
        std::printf("FAIL %2d: %s%s%s\n", num, label, detail.empty() ? "" : " -- ",
                    detail.c_str());
        ++failed;
    }
    std::fflush(stdout);
}

bool all_pass(const std::vector<std::pair<std::string, CtxPtr>>& ctxs,
              const std::function<CheckReport(GroupCtx&)>& check, std::string& detail) {
    for (const auto& [name, ctx] : ctxs) {
        CheckReport r = check(*ctx);
        if (!r.passed()) {
            detail = name + ": " + r.failures.front();
            return false;
        }
        if (r.instances == 0) {
            detail = name + ": no instances checked";
            return false;
        }
    }
    return true;
}

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

bool run_cmd(const std::string& cmd, std::string& out) {
    out.clear();
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return false;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    return pclose(p) == 0;
}

} // namespace

int main(int argc, char** argv) {
    const BuildConfig cfg;
    const std::string cli = argc > 1 ? argv[1] : "";

    std::vector<std::pair<std::string, CtxPtr>> ctxs;
    for (const std::string& name : default_catalog())
        ctxs.push_back({name, GroupCtx::make(build_group(*parse_group_expr(name), cfg))});

    criterion(1, "scripted counterexample reproduces every assertion", [&](std::string& detail) {
        CheckReport r = check_remark22(cfg);
        if (!r.passed()) {
            detail = r.failures.front();
            return false;
        }
        if (r.instances != 6) {
            detail = "expected 6 assertions, saw " + std::to_string(r.instances);
            return false;
        }
        return true;
    });

    criterion(2, "deflation constants along the trivial subgroup are 1", [&](std::string& detail) {
        for (const auto& [name, ctx] : ctxs) {
            const SubgroupLattice& lat = ctx->lattice();
            for (int s = 0; s < lat.size(); ++s) {
                if (m_circ(*ctx, s, lat.bottom()) != 1 ||
                    m_slice(*ctx, s, lat.bottom()) != Rational(1)) {
                    detail = name + ", subgroup #" + std::to_string(s + 1);
                    return false;
                }
            }
        }
        return true;
    });

    criterion(3, "largest quotient slice is universal on the catalog", [&](std::string& detail) {
        return all_pass(ctxs, check_tau_universal, detail);
    });

    criterion(4, "complement, expansion and factorization identities", [&](std::string& detail) {
        return all_pass(ctxs, check_crapo, detail) &&
               all_pass(ctxs, check_mcirc_expansion, detail) &&
               all_pass(ctxs, check_mcirc_factorization, detail);
    });

    criterion(5, "both slice constant evaluators agree", [&](std::string& detail) {
        for (const auto& [name, ctx] : ctxs) {
            const SubgroupLattice& lat = ctx->lattice();
            for (int s = 0; s < lat.size(); ++s)
                for (int n : lat.normal_list())
                    if (m_slice_direct(*ctx, s, n) != m_slice_factored(*ctx, s, n)) {
                        detail = name + ", S=#" + std::to_string(s + 1) + ", N=#" +
                                 std::to_string(n + 1);
                        return false;
                    }
        }
        return true;
    });

    criterion(6, "deflation carries idempotents to idempotents", [&](std::string& detail) {
        return all_pass(ctxs, check_deflation_identities, detail);
    });

    criterion(7, "idempotents sum to the one of each ring", [&](std::string& detail) {
        return all_pass(ctxs, check_idempotent_sums, detail);
    });

    criterion(8, "frozen spot values", [&](std::string& detail) {
        auto ctx_named = [&](const std::string& name) -> CtxPtr {
            for (const auto& [n, c] : ctxs)
                if (n == name) return c;
            throw Error("catalog is missing " + name);
        };
        auto fail = [&](const std::string& what) {
            detail = what;
            return false;
        };

        CtxPtr c2 = ctx_named("C2");
        if (m_constant(*c2, c2->lattice().top()) != Rational(1, 2)) return fail("m_{C2,C2}");
        if (beta(c2).quotient->group()->order != 1) return fail("beta(C2)");

        CtxPtr v4 = ctx_named("C2 x C2");
        for (int n : v4->lattice().normal_list())
            if (n != 0 && m_constant(*v4, n) != Rational(0)) return fail("m_{C2xC2,N}");
        if (!is_b_group(*v4).is_b_group) return fail("C2xC2 is a B-group");
        BetaResult bv = beta(v4);
        if (bv.quotient->group()->order != 4 ||
            !are_isomorphic(bv.quotient->group(), v4->group()).has_value())
            return fail("beta(C2xC2)");

        CtxPtr s3 = ctx_named("S3");
        const SubgroupLattice& slat = s3->lattice();
        if (slat.size() != 6) return fail("S3 subgroup count");
        if (s3->slice_classes().reps.size() != 9) return fail("S3 slice class count");
        if (s3->mobius().mu(slat.bottom(), slat.top()) != 3) return fail("mu(1,S3)");
        if (oracle::mobius_dual(slat).at({slat.bottom(), slat.top()}) != 3)
            return fail("mu(1,S3) oracle");

        CtxPtr c4 = ctx_named("C4");
        const SubgroupLattice& clat = c4->lattice();
        if (c4->mobius().mu(clat.bottom(), clat.top()) != 0) return fail("mu(1,C4)");
        if (oracle::mobius_dual(clat).at({clat.bottom(), clat.top()}) != 0)
            return fail("mu(1,C4) oracle");

        TauResult tau = tau_circ(c4, 1);
        if (tau.quotient->group()->order != 2 || tau.quotient_s != 0 ||
            tau.quotient->display_name() != "C2")
            return fail("tau0(C4,C2)");
        return true;
    });

    criterion(9, "subgroup enumeration matches the all-subsets oracle", [&](std::string& detail) {
        for (const auto& [name, ctx] : ctxs) {
            if (ctx->group()->order > 16) continue;
            if (ctx->lattice().subs != oracle::brute_force_subgroups(*ctx->group())) {
                detail = name;
                return false;
            }
        }
        return true;
    });

    criterion(10, "byte-identical CLI output with and without the cache", [&](std::string& detail) {
        if (cli.empty()) {
            detail = "missing CLI path argument";
            return false;
        }
        fs::path dir = fs::temp_directory_path() / "tslice_acceptance_cache";
        fs::remove_all(dir);

        std::vector<std::string> arglists;
        for (const auto& [name, ctx] : ctxs) {
            std::string q = shell_quote(name);
            arglists.push_back("info " + q);
            arglists.push_back("subgroups " + q);
            arglists.push_back("mobius " + q);
            arglists.push_back("burnside " + q + " --m-table --beta");
            arglists.push_back("slices " + q + " --m-table '#1'");
            arglists.push_back("tau0 " + q + " --slice '#1'");
        }
        arglists.push_back("slices 'C4' --xi '#3,#2' --tslice '#2' --t0slice '#2'");
        arglists.push_back("--format json slices 'C4' --m-table '#2'");
        arglists.push_back("--format csv burnside 'C4' --m-table");
        arglists.push_back("remark22");
        arglists.push_back("verify");

        for (const std::string& args : arglists) {
            std::string plain, cold, warm;
            bool ok = run_cmd(cli + " --no-cache " + args, plain) &&
                      run_cmd(cli + " --cache-dir " + shell_quote(dir.string()) + " " + args,
                              cold) &&
                      run_cmd(cli + " --cache-dir " + shell_quote(dir.string()) + " " + args,
                              warm);
            if (!ok) {
                detail = "nonzero exit: " + args;
                return false;
            }
            if (plain.empty()) {
                detail = "empty output: " + args;
                return false;
            }
            if (plain != cold || cold != warm) {
                detail = "output differs across cache states: " + args;
                return false;
            }
        }

        // the pinned csv fragment stays pinned
        std::string csv;
        run_cmd(cli + " --format csv burnside 'C2' --m-table", csv);
        if (csv.find("C2,1/2") == std::string::npos) {
            detail = "csv m-table for C2 lost its C2,1/2 row";
            return false;
        }
        fs::remove_all(dir);
        return true;
    });

    return failed == 0 ? 0 : 1;
}
