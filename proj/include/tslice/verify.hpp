#pragma once

#include <functional>

#include "tslice/slice.hpp"

namespace tslice {

struct CheckReport {
    std::string check;
    std::string subject;
    long long instances = 0;
    std::vector<std::string> failures; // one replayable line per failed instance
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
};

// Injectable Moebius values, for sensitivity tests.
using MobiusFn = std::function<long long(int, int)>;

// Complement identity: for every normal M and every X <= G,
//   mu(X,G) = sum over Y >= X with YM = G, Y^M = X^M of mu(X,Y) mu(Y,G).
CheckReport check_crapo(GroupCtx& ctx);
CheckReport check_crapo_with_mu(GroupCtx& ctx, const MobiusFn& mu);

// Expansion: for all S and normal M, N,
//   m^o_{G,S,N} = sum over Y >= S with YN = YM = G of
//                 mu(Y,G) m^o_{G/M, SM/M, (Y^N)M/M}.
CheckReport check_mcirc_expansion(GroupCtx& ctx);

// Factorization for nested normals M <= N:
//   m^o_{G,S,N} = m^o_{G,S,M} * m^o_{G/M, SM/M, N/M}.
CheckReport check_mcirc_factorization(GroupCtx& ctx);

// For every S: tau(G,S) is a T-circ slice, is a quotient of (G,S), and every
// quotient T-circ slice (G/M, SM/M) is a quotient of it; maximal-M choices
// agree up to slice isomorphism.
CheckReport check_tau_universal(GroupCtx& ctx);

// Def e_G = m_{G,N} e_{G/N} for every normal N, and
// Def xi_{G,S} = m_{G,S,N} xi_{G/N,SN/N} for every S and normal N.
CheckReport check_deflation_identities(GroupCtx& ctx);

// Sum of e_H over subgroup classes is [G/G]; sum of xi_{T,S} over slice
// classes is <G,G>.
CheckReport check_idempotent_sums(GroupCtx& ctx);

// The scripted C2 x D8 counterexample: six assertions ending with the
// exhaustive scan showing no universal T-slice quotient exists.
CheckReport check_remark22(const BuildConfig& cfg);

const std::vector<std::string>& known_checks();
std::vector<std::string> default_catalog();

// Runs every check (or just check_filter, when nonempty) over the catalog of
// group expressions; over-cap groups are skipped with a note.
std::vector<CheckReport> run_all(const std::vector<std::string>& catalog,
                                 const BuildConfig& cfg, const std::string& check_filter = "");

} // namespace tslice
